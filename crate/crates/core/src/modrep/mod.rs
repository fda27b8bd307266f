//! Right F𝔖_n-modules given by the matrices of the Coxeter generators.
//!
//! Modules built inside a permutation module (the group algebra itself, or
//! the row-tabloid module for Specht modules) keep their basis there as
//! sparse reduced rows, so any group element acts by permuting columns and
//! reading off the pivot entries. Submodules keep their parent and act by
//! restriction.

mod builders;
mod cache;
mod embedding;
mod lru;
mod module;
mod projectivity;

use thiserror::Error;

use crate::ffla::FflaError;
use crate::grpalg::GrpalgError;
use crate::sylow::SylowError;

pub use builders::{
    build_lie_module, build_lie_module_with, build_regular_module, build_sign_module, build_specht_module,
    build_trivial_module, standard_tableaux, MAX_LIE_DEGREE, MAX_REGULAR_DEGREE, MAX_SPECHT_DEGREE,
};
pub use cache::{cache_path, load_or_build_lie, read_module, write_module, CACHE_MAGIC};
pub use module::{ModuleKind, ModuleRep};
pub use projectivity::{norm_rank_projectivity, restriction_free_rank_check, ProjectivityVerdict};

#[derive(Debug, Error)]
pub enum ModrepError {
    #[error("degree {n} is outside the supported range {min}..={max}")]
    DegreeOutOfRange { n: usize, min: usize, max: usize },
    #[error("{0} is not a supported prime")]
    UnsupportedPrime(u32),
    #[error("spanning set of Lie({n}) over GF({p}) has rank {rank}, expected {expected}")]
    RankDeficient { n: usize, p: u32, rank: usize, expected: usize },
    #[error("generator s_{generator} maps the row space outside itself")]
    NotInvariant { generator: usize },
    #[error("degree mismatch: module has degree {expected}, element has degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid generator matrices: {0}")]
    InvalidGenerators(String),
    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("operation needs a module built with an embedding")]
    MissingEmbedding,
    #[error("bad module cache file: {0}")]
    CacheFormat(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Ffla(#[from] FflaError),
    #[error(transparent)]
    Grpalg(#[from] GrpalgError),
    #[error(transparent)]
    Sylow(#[from] SylowError),
}
