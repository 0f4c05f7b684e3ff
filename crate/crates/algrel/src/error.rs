use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("enumeration budget exceeded: lattice has {states} states, budget is {budget}")]
    Budget { states: u128, budget: u64 },

    #[error("invalid probability model: {0}")]
    Probability(String),
}

pub type Result<T> = std::result::Result<T, Error>;
