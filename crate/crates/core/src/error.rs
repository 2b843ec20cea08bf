use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {label}{rank}: {reason}")]
    InvalidType {
        label: String,
        rank: usize,
        reason: String,
    },

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {coords:?} is not integral in the root basis")]
    NonIntegral { coords: Vec<i64> },

    #[error("weight {coords:?} is not dominant")]
    NonDominant { coords: Vec<i64> },

    #[error("weight {coords:?} has a negative root coordinate")]
    NegativeRootCoordinate { coords: Vec<i64> },

    #[error("Weyl group of order {order} exceeds the enumeration cap {cap}")]
    WeylCapExceeded { order: u128, cap: usize },

    #[error("word {letters:?} is not a reduced word for the longest element: {reason}")]
    NotReduced { letters: Vec<usize>, reason: String },

    #[error("{operation} requires type A, got {label}{rank}")]
    RequiresTypeA {
        operation: &'static str,
        label: String,
        rank: usize,
    },

    #[error("{operation} requires a simply-laced root system, got {label}{rank}")]
    RequiresSimplyLaced {
        operation: &'static str,
        label: String,
        rank: usize,
    },

    #[error("Lusztig datum has {got} coordinates, expected {expected} and all non-negative")]
    InvalidLusztigDatum { expected: usize, got: usize },

    #[error("point {psi:?} is not in the harmonic cone")]
    NotInCone { psi: Vec<i64> },

    #[error("search space of about {estimate} points exceeds the budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
