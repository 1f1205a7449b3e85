//! Built-in configurations named after the figure families they reproduce.
//! All of them pin P = 1, nu = 0.3, e = 1 unless stated otherwise.

pub struct Preset {
    pub name: &'static str,
    pub about: &'static str,
    pub text: &'static str,
}

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "fig2a",
        about: "half-length vs alpha2 for three alpha1 values",
        text: "\
[problem]
model = hertz
q0 = 1
[sweep]
sweep.alpha1 = 0.5, 0.7, 0.9
sweep.alpha2 = 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45
tag = fig2a
",
    },
    Preset {
        name: "fig5-a1-0.3",
        about: "pressure trace, alpha1 = 0.3, alpha2 = 0.1",
        text: "\
model = hertz
alpha1 = 0.3
alpha2 = 0.1
tag = fig5-a1-0.3
",
    },
    Preset {
        name: "fig5-a1-0.7",
        about: "pressure trace, alpha1 = 0.7, alpha2 = 0.1",
        text: "\
model = hertz
alpha1 = 0.7
alpha2 = 0.1
tag = fig5-a1-0.7
",
    },
    Preset {
        name: "fig5-a1-0.9",
        about: "pressure trace, alpha1 = 0.9, alpha2 = 0.1",
        text: "\
model = hertz
alpha1 = 0.9
alpha2 = 0.1
tag = fig5-a1-0.9
",
    },
    Preset {
        name: "fig7-a1-0.5",
        about: "pressure trace, alpha2 = alpha1/2, alpha1 = 0.5",
        text: "\
model = hertz
alpha1 = 0.5
alpha2 = half
tag = fig7-a1-0.5
",
    },
    Preset {
        name: "fig7-a1-0.7",
        about: "pressure trace, alpha2 = alpha1/2, alpha1 = 0.7",
        text: "\
model = hertz
alpha1 = 0.7
alpha2 = half
tag = fig7-a1-0.7
",
    },
    Preset {
        name: "fig7-a1-0.9",
        about: "pressure trace, alpha2 = alpha1/2, alpha1 = 0.9",
        text: "\
model = hertz
alpha1 = 0.9
alpha2 = half
tag = fig7-a1-0.9
",
    },
    Preset {
        name: "fig8-alpha-0.3",
        about: "equal exponents alpha = 0.3: b, delta, pressure and displacement traces",
        text: "\
model = hertz
alpha1 = 0.3
alpha2 = 0.3
tag = fig8-alpha-0.3
",
    },
    Preset {
        name: "fig9a",
        about: "adhesive half-length vs surface energy, equal exponents 0.5",
        text: "\
model = jkr
alpha1 = 0.5
alpha2 = 0.5
sweep.gamma_s = 0, 0.5, 1, 2, 5
tag = fig9a
",
    },
    Preset {
        name: "fig11a",
        about: "adhesive half-length vs surface energy, alpha2 = alpha1/2, three alpha1",
        text: "\
model = jkr
alpha2 = half
sweep.alpha1 = 0.5, 0.7, 0.9
sweep.gamma_s = 0.25, 0.5, 1, 2
tag = fig11a
",
    },
    Preset {
        name: "jkr-0.5-0.25",
        about: "adhesive reference point: alpha = (0.5, 0.25), gamma_s = 1, eps = 1e-4",
        text: "\
model = jkr
alpha1 = 0.5
alpha2 = 0.25
gamma_s = 1
fd_epsilon = 1e-4
tag = jkr-0.5-0.25
",
    },
    Preset {
        name: "jkr-ref",
        about: "adhesive reference point swept over the derivative step eps",
        text: "\
model = jkr
alpha1 = 0.5
alpha2 = 0.25
gamma_s = 1
sweep.fd_epsilon = 1e-3, 1e-4, 1e-5
tag = jkr-ref
",
    },
];

pub fn find(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}
