use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// The reduced coordinate `alpha * r` lies outside the open first well `(0, pi/2)`.
    #[error("alpha*r = {scaled} is outside the well (0, pi/2)")]
    Domain { scaled: f64 },

    #[error("negative radicand {value} in `{term}`")]
    NegativeRadicand { term: &'static str, value: f64 },

    #[error("hypergeometric series with a = {a} does not terminate")]
    NonTerminating { a: f64 },

    #[error("{function}({x}) overflows f64")]
    Overflow { function: &'static str, x: f64 },

    #[error("quadrature did not converge: estimate {estimate:e} with error {error:e} after {intervals} intervals")]
    QuadratureNonConvergence {
        estimate: f64,
        error: f64,
        intervals: usize,
    },

    #[error("Richardson extrapolation did not converge at x = {x}: value {value:e}, error {error:e}")]
    DerivativeNonConvergence { x: f64, value: f64, error: f64 },

    #[error("energy bracket [{low}, {high}] does not contain the level with {nodes} nodes")]
    BracketMiss { low: f64, high: f64, nodes: u32 },

    #[error("expected {expected} nodes, found {found}")]
    NodeMismatch { expected: u32, found: u32 },

    #[error("grid: {0}")]
    Grid(String),

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
