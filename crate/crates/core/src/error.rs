use thiserror::Error;

use crate::rootdata::LieType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type {lie_type} requires n >= {min}, got n = {n}")]
    RankDomain {
        lie_type: LieType,
        n: usize,
        min: usize,
    },

    #[error("p = {p} is out of range 1..={max} for type {lie_type} with n = {n}")]
    ParabolicDomain {
        lie_type: LieType,
        n: usize,
        p: usize,
        max: usize,
    },

    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("weight is not integral: {0}")]
    Integrality(String),

    #[error("sequence is not a mixed congruence class: {0}")]
    ClassDomain(String),

    #[error("malformed rational `{token}`")]
    Parse { token: String },

    #[error("malformed grid spec `{0}` (expected items `step` or `step@offset` with step > 0)")]
    GridSpec(String),

    #[error("max_n = {max_n} exceeds the sweep ceiling {ceiling}")]
    SweepCeiling { max_n: usize, ceiling: usize },

    #[error("unknown Lie type `{0}` (expected A, B, C or D)")]
    UnknownType(String),
}

pub type Result<T> = std::result::Result<T, Error>;
