use thiserror::Error;

/// Errors raised by group construction and analysis.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("table is empty")]
    EmptyTable,
    #[error("table row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry at ({row}, {col}) is {value}, outside 0..{order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("not a Latin square: element {element} repeats in {line}")]
    NotLatinSquare { line: String, element: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("{0} labels given for a group of order {1}")]
    LabelCount(usize, usize),
    #[error("invalid permutation {text:?}: {reason}")]
    NotAPermutation { text: String, reason: String },
    #[error("{what} would have order {order}, above the cap of {cap}")]
    OrderCapExceeded { what: String, order: usize, cap: usize },
    #[error("subgroup lattice exceeds {cap} subgroups")]
    LatticeBlowup { cap: usize },
    #[error("subgroup is not normal: conjugating by element {witness} moves it")]
    NotNormal { witness: usize },
    #[error("subgroup is not central: element {witness} is outside the center")]
    NotCentral { witness: usize },
    #[error("invalid semidirect action: {0}")]
    InvalidAction(String),
    #[error("subgroup belongs to a different parent group")]
    ParentMismatch,
    #[error("element index {index} out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("kernel has no automorphism of order {0}")]
    NoOrderQAutomorphism(usize),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
