//! Block structure of the Lie module of the symmetric group over prime fields.
//!
//! The crate builds `Lie(n) = ω_n F𝔖_n` as explicit generator matrices,
//! splits any 𝔖_n-module into block components labelled by p-cores and tests
//! projectivity of each component through the norm map of a Sylow
//! p-subgroup. [`verify::verify`] runs the whole pipeline and checks that
//! every non-projective part of `Lie(n)` lives in the principal block.

pub mod blocks;
pub mod ffla;
pub mod grpalg;
pub mod modrep;
pub mod par;
pub mod sylow;
pub mod symfun;
pub mod verify;

pub use ffla::{FflaError, GFMatrix, GFScalar};
pub use par::Exec;
pub use verify::{verify, SplitMethod, VerificationReport, VerifyError};
