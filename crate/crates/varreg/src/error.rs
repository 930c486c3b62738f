use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Sampling too coarse for the requested computation.
    #[error("resolution error: {0}")]
    Resolution(String),

    /// Root bracketing failed: no sign change on the interval.
    #[error("bracket error: f({lo}) and f({hi}) have the same sign")]
    Bracket { lo: f64, hi: f64 },

    /// Query point too close to a curve for a reliable inside/outside call.
    #[error("point lies on the boundary (distance {dist:.3e})")]
    Boundary { dist: f64 },

    #[error("empty input: {0}")]
    Empty(&'static str),

    /// Witness target outside the open strip `|Im w| < bound`.
    #[error("target outside the open strip |Im w| < {bound}")]
    OutOfStrip { bound: f64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("internal error: {0}")]
    Internal(String),
}
