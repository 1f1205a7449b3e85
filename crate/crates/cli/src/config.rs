//! Run configuration: line-oriented `key = value` text, optionally grouped by
//! `[section]` headers (the headers are cosmetic), with later lines and
//! `--set` overrides winning. All quantities are in the solver's
//! nondimensional units.

use contact_core::assembly::{
    ContactProblem, MaterialHalfPlane, Model, NumericControls, ProfilePoly,
};
use std::path::PathBuf;

/// Ordered key/value pairs as read; duplicates are allowed and the last
/// occurrence wins when typed.
#[derive(Debug, Clone, Default)]
pub struct RawConfig {
    pub pairs: Vec<(String, String)>,
}

impl RawConfig {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if line.starts_with('[') && line.ends_with(']') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(format!("line {}: expected key = value, got {line:?}", i + 1));
            };
            pairs.push((k.trim().to_string(), v.trim().to_string()));
        }
        Ok(Self { pairs })
    }

    pub fn push_set(&mut self, spec: &str) -> Result<(), String> {
        let Some((k, v)) = spec.split_once('=') else {
            return Err(format!("--set expects key=value, got {spec:?}"));
        };
        self.pairs.push((k.trim().to_string(), v.trim().to_string()));
        Ok(())
    }

    pub fn extend(&mut self, other: RawConfig) {
        self.pairs.extend(other.pairs);
    }
}

/// alpha2 may be pinned to half of alpha1 so sweeps over alpha1 keep the
/// ratio fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Alpha2 {
    Value(f64),
    Half,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelKind {
    Hertz,
    Jkr,
}

pub const SWEEPABLE: &[&str] = &[
    "alpha1", "alpha2", "e1", "e2", "nu", "load", "q0", "q1", "gamma_s", "fd_epsilon",
];

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub alpha1: f64,
    pub alpha2: Alpha2,
    pub e1: f64,
    pub e2: f64,
    pub nu1: f64,
    pub nu2: f64,
    pub load: f64,
    pub q0: f64,
    pub q1: f64,
    pub model: ModelKind,
    pub gamma_s: f64,
    pub n_terms: usize,
    pub tail_tol: f64,
    pub b_rel_tol: f64,
    pub fd_epsilon: f64,
    pub pressure_samples: usize,
    pub displacement_samples: usize,
    /// Exterior sampling range, as a multiple of the solved half-length.
    pub displacement_span: f64,
    pub emit_pressure: bool,
    pub emit_displacement: bool,
    pub tag: String,
    pub tables_dir: Option<PathBuf>,
    /// Sweep axes in declaration order: (parameter, values).
    pub sweeps: Vec<(String, Vec<f64>)>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            alpha1: 0.5,
            alpha2: Alpha2::Value(0.25),
            e1: 1.0,
            e2: 1.0,
            nu1: 0.3,
            nu2: 0.3,
            load: 1.0,
            q0: 1.0,
            q1: 0.0,
            model: ModelKind::Hertz,
            gamma_s: 0.0,
            n_terms: 16,
            tail_tol: 1e-13,
            b_rel_tol: 1e-10,
            fd_epsilon: 1e-4,
            pressure_samples: 201,
            displacement_samples: 101,
            displacement_span: 3.0,
            emit_pressure: true,
            emit_displacement: true,
            tag: "run".to_string(),
            tables_dir: None,
            sweeps: Vec::new(),
        }
    }
}

fn num(key: &str, v: &str) -> Result<f64, String> {
    v.parse::<f64>()
        .map_err(|_| format!("key {key}: expected a number, got {v:?}"))
}

fn int(key: &str, v: &str) -> Result<usize, String> {
    v.parse::<usize>()
        .map_err(|_| format!("key {key}: expected a non-negative integer, got {v:?}"))
}

fn boolean(key: &str, v: &str) -> Result<bool, String> {
    match v {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(format!("key {key}: expected true/false, got {v:?}")),
    }
}

fn num_list(key: &str, v: &str) -> Result<Vec<f64>, String> {
    let vals: Result<Vec<f64>, String> = v.split(',').map(|s| num(key, s.trim())).collect();
    let vals = vals?;
    if vals.is_empty() {
        return Err(format!("key {key}: empty value list"));
    }
    Ok(vals)
}

impl RunConfig {
    pub fn from_raw(raw: &RawConfig) -> Result<Self, String> {
        let mut cfg = Self::default();
        for (k, v) in &raw.pairs {
            match k.as_str() {
                "alpha1" => cfg.alpha1 = num(k, v)?,
                "alpha2" => {
                    cfg.alpha2 = if v == "half" {
                        Alpha2::Half
                    } else {
                        Alpha2::Value(num(k, v)?)
                    }
                }
                "e1" => cfg.e1 = num(k, v)?,
                "e2" => cfg.e2 = num(k, v)?,
                "nu1" => cfg.nu1 = num(k, v)?,
                "nu2" => cfg.nu2 = num(k, v)?,
                "nu" => {
                    cfg.nu1 = num(k, v)?;
                    cfg.nu2 = cfg.nu1;
                }
                "load" => cfg.load = num(k, v)?,
                "q0" => cfg.q0 = num(k, v)?,
                "q1" => cfg.q1 = num(k, v)?,
                "model" => {
                    cfg.model = match v.as_str() {
                        "hertz" => ModelKind::Hertz,
                        "jkr" => ModelKind::Jkr,
                        _ => return Err(format!("key model: expected hertz or jkr, got {v:?}")),
                    }
                }
                "gamma_s" => cfg.gamma_s = num(k, v)?,
                "n_terms" => cfg.n_terms = int(k, v)?,
                "tail_tol" => cfg.tail_tol = num(k, v)?,
                "b_rel_tol" => cfg.b_rel_tol = num(k, v)?,
                "fd_epsilon" => cfg.fd_epsilon = num(k, v)?,
                "pressure_samples" => cfg.pressure_samples = int(k, v)?,
                "displacement_samples" => cfg.displacement_samples = int(k, v)?,
                "displacement_span" => cfg.displacement_span = num(k, v)?,
                "emit_pressure" => cfg.emit_pressure = boolean(k, v)?,
                "emit_displacement" => cfg.emit_displacement = boolean(k, v)?,
                "tag" => cfg.tag = v.clone(),
                "tables_dir" => cfg.tables_dir = Some(PathBuf::from(v)),
                _ if k.starts_with("sweep.") => {
                    let param = &k["sweep.".len()..];
                    if !SWEEPABLE.contains(&param) {
                        return Err(format!(
                            "key {k}: {param:?} is not sweepable (choose from {SWEEPABLE:?})"
                        ));
                    }
                    let vals = num_list(k, v)?;
                    cfg.sweeps.retain(|(p, _)| p != param);
                    cfg.sweeps.push((param.to_string(), vals));
                }
                _ => return Err(format!("unknown key {k:?}")),
            }
        }
        cfg.check()?;
        Ok(cfg)
    }

    fn check(&self) -> Result<(), String> {
        let a2 = self.alpha2_value();
        for (name, a) in [("alpha1", self.alpha1), ("alpha2", a2)] {
            if !(a > 0.0 && a < 1.0) {
                return Err(format!("key {name}: exponent must lie in (0, 1), got {a}"));
            }
        }
        for (name, nu) in [("nu1", self.nu1), ("nu2", self.nu2)] {
            if !(0.0..=0.5).contains(&nu) {
                return Err(format!("key {name}: Poisson ratio must lie in [0, 0.5], got {nu}"));
            }
        }
        for (name, e) in [("e1", self.e1), ("e2", self.e2)] {
            if !(e > 0.0) {
                return Err(format!("key {name}: modulus factor must be > 0, got {e}"));
            }
        }
        if !(self.load > 0.0) {
            return Err(format!("key load: total force must be > 0, got {}", self.load));
        }
        if self.q0 < 0.0 || self.q1 < 0.0 || self.q0 + self.q1 == 0.0 {
            return Err(format!(
                "keys q0/q1: profile coefficients must be non-negative and not both zero, got {}, {}",
                self.q0, self.q1
            ));
        }
        if self.gamma_s < 0.0 {
            return Err(format!("key gamma_s: must be >= 0, got {}", self.gamma_s));
        }
        if self.n_terms < 2 {
            return Err(format!("key n_terms: need at least 2 terms, got {}", self.n_terms));
        }
        if self.pressure_samples < 2 || self.displacement_samples < 2 {
            return Err("keys pressure_samples/displacement_samples: need at least 2".to_string());
        }
        if !(self.displacement_span > 1.0) {
            return Err(format!(
                "key displacement_span: must exceed 1, got {}",
                self.displacement_span
            ));
        }
        Ok(())
    }

    pub fn alpha2_value(&self) -> f64 {
        match self.alpha2 {
            Alpha2::Value(v) => v,
            Alpha2::Half => self.alpha1 / 2.0,
        }
    }

    /// Applies one sweep-axis value, keeping derived fields consistent.
    pub fn apply_axis(&mut self, param: &str, v: f64) {
        match param {
            "alpha1" => self.alpha1 = v,
            "alpha2" => self.alpha2 = Alpha2::Value(v),
            "e1" => self.e1 = v,
            "e2" => self.e2 = v,
            "nu" => {
                self.nu1 = v;
                self.nu2 = v;
            }
            "load" => self.load = v,
            "q0" => self.q0 = v,
            "q1" => self.q1 = v,
            "gamma_s" => self.gamma_s = v,
            "fd_epsilon" => self.fd_epsilon = v,
            _ => unreachable!("axis {param} filtered at parse time"),
        }
    }

    pub fn problem(&self) -> Result<ContactProblem, String> {
        self.check()?;
        let a2 = self.alpha2_value();
        if a2 > self.alpha1 {
            return Err(format!(
                "key alpha2: must not exceed alpha1 ({} > {})",
                a2, self.alpha1
            ));
        }
        let model = match self.model {
            ModelKind::Hertz => Model::Hertz,
            ModelKind::Jkr => Model::Jkr { gamma_s: self.gamma_s },
        };
        let m1 = MaterialHalfPlane::new(self.e1, self.alpha1, self.nu1)
            .map_err(|e| format!("body 1: {e}"))?;
        let m2 = MaterialHalfPlane::new(self.e2, a2, self.nu2)
            .map_err(|e| format!("body 2: {e}"))?;
        let profile = ProfilePoly::new(self.q0, self.q1).map_err(|e| format!("profile: {e}"))?;
        let controls = NumericControls {
            n_terms: self.n_terms,
            tail_tol: self.tail_tol,
            b_rel_tol: self.b_rel_tol,
            fd_epsilon: self.fd_epsilon,
        };
        ContactProblem::new(m1, m2, profile, self.load, model, controls)
            .map_err(|e| format!("{e}"))
    }

    /// One-line echo of every effective value, for the CSV comment header.
    pub fn effective(&self) -> String {
        let mut s = format!(
            "alpha1={} alpha2={}{} e1={} e2={} nu1={} nu2={} load={} q0={} q1={} model={} \
             gamma_s={} n_terms={} tail_tol={} b_rel_tol={} fd_epsilon={} tag={}",
            self.alpha1,
            self.alpha2_value(),
            if self.alpha2 == Alpha2::Half { "(half)" } else { "" },
            self.e1,
            self.e2,
            self.nu1,
            self.nu2,
            self.load,
            self.q0,
            self.q1,
            match self.model {
                ModelKind::Hertz => "hertz",
                ModelKind::Jkr => "jkr",
            },
            self.gamma_s,
            self.n_terms,
            self.tail_tol,
            self.b_rel_tol,
            self.fd_epsilon,
            self.tag
        );
        for (p, vals) in &self.sweeps {
            let list: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
            s.push_str(&format!(" sweep.{p}={}", list.join(",")));
        }
        s
    }
}
