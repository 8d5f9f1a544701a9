//! Workbench for binary double circulant even codes.
//!
//! The crate builds pure and bordered double circulant codes over GF(2),
//! computes exact weight distributions, solves for parametric weight
//! enumerators of formally self-dual even codes, derives shadow enumerator
//! families of singly even self-dual codes, classifies optimal double
//! circulant even codes that are not self-dual, and compares code
//! performance under bounded distance decoding.

pub mod circulant;
pub mod classify;
pub mod exact;
pub mod gf2;
pub mod gleason;
pub mod perf;
pub mod refdata;
pub mod shadow;
pub mod wdist;

pub use circulant::{build_bordered, build_pure, circulant_matrix, cyclic_canonical, DccSpec, Family, FirstRow};
pub use gf2::{BitMatrix, BitVector, LinearCode};
pub use wdist::{
    bounded_distribution, full_distribution, is_formally_self_dual, macwilliams_transform,
    min_weight, PartialWeightDistribution, WeightDistribution,
};

/// Crate-wide error type. CLI exit codes are derived from the variant.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("generator matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("distribution is not a member of the family: {0}")]
    NotMember(String),
    #[error("non-integral result: {0}")]
    NonIntegral(String),
    #[error("negative coefficient at weight {weight}")]
    NegativeCoefficient { weight: usize },
    #[error("reference data incomplete: {0}")]
    IncompleteReference(String),
    #[error("generator matrix is not in systematic form")]
    NotSystematic,
    #[error("zero code has no minimum weight")]
    ZeroCode,
    #[error("canonicalization budget exceeded ({nodes} nodes)")]
    CanonBudget { nodes: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
