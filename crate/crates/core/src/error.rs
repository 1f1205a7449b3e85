use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum ContactError {
    #[error("hypergeometric series did not converge: a={a}, b={b}, c={c}, z={z} after {terms} terms")]
    HypergeometricNonConvergence {
        a: f64,
        b: f64,
        c: f64,
        z: f64,
        terms: usize,
    },

    #[error("kernel coefficient series did not meet the tail criterion within {cap} terms (n={n}, m={m})")]
    SeriesTailNotMet { n: usize, m: usize, cap: usize },

    #[error("linear system is singular or ill-conditioned (condition estimate {cond:.3e})")]
    IllConditioned { cond: f64 },

    #[error("degenerate solution: leading coefficient of the unit-load component vanished")]
    DegenerateLoadComponent,

    #[error("no sign change found while bracketing the root (expanded to [{lo:.6e}, {hi:.6e}])")]
    NoBracket { lo: f64, hi: f64 },

    #[error("root finder did not converge within {iters} iterations")]
    RootNonConvergence { iters: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("table cache: {0}")]
    TableCache(String),
}

pub type Result<T> = std::result::Result<T, ContactError>;
