use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("non-finite argument z = {x} + {y}i")]
    NonFinite { x: f64, y: f64 },

    #[error("argument z = {x} + {y}i is outside the domain: {reason}")]
    Domain { x: f64, y: f64, reason: &'static str },

    #[error("reference evaluation at z = {x} + {y}i is outside its validity window")]
    OracleWindow { x: f64, y: f64 },

    #[error("reference continued fraction did not converge at z = {x} + {y}i")]
    OracleNoConvergence { x: f64, y: f64 },

    #[error("grid of {cells} cells exceeds the limit of {limit}")]
    GridTooLarge { cells: usize, limit: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid benchmark configuration: {0}")]
    InvalidBench(String),
}
