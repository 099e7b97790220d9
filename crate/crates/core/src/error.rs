use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid quantum numbers N = {n}, l = {l} (need N >= 1 and 0 <= l <= N - 1)")]
    InvalidState { n: u32, l: u32 },

    #[error("invalid physical scale: {0}")]
    InvalidScale(String),

    #[error("{function} is not defined at x = {x}")]
    Domain { function: &'static str, x: f64 },

    #[error("{function}({arg}) exceeds the representable range")]
    Range { function: &'static str, arg: u64 },

    #[error("index t = {t} outside 0..={max}")]
    Index { t: u32, max: u32 },

    #[error("quadrature did not converge: estimate {estimate:e}, error bound {error_bound:e} after {panels} panels")]
    Convergence {
        estimate: f64,
        error_bound: f64,
        panels: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid grid: {0}")]
    Grid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
