//! Permutations of 𝔖_n, the group algebra R𝔖_n and its distinguished
//! elements: the Dynkin–Specht–Wever element and class sums.

mod algebra;
mod perm;

use thiserror::Error;

pub use algebra::{class_elements, class_sum, omega, GroupAlgebraElement};
pub use perm::{descending_cycle, Permutation};
pub(crate) use perm::{factorial_u64, lehmer_rank_of};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrpalgError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("coefficient ring mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("rank {rank} is out of range for degree {n}")]
    RankOutOfRange { rank: u64, n: usize },
    #[error("cycle length {k} is out of range for degree {n}")]
    CycleLengthOutOfRange { k: usize, n: usize },
    #[error("{0:?} is not a permutation in one-line notation")]
    NotABijection(Vec<u32>),
    #[error("bad cycle {0:?}")]
    BadCycle(Vec<u32>),
    #[error("parse error: {0}")]
    Parse(String),
}
