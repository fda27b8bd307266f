//! Partition combinatorics: abacus p-cores, rim hooks, Murnaghan–Nakayama
//! character values and central characters of 𝔖_n.

mod abacus;
mod character;
mod partition;
mod rimhook;

use thiserror::Error;

pub use abacus::{p_core, principal_core, AbacusConfig};
pub use character::{
    central_character, centralizer_order, class_size, dim_irreducible, factorial, hook_length_dimension,
    mn_character,
};
pub use partition::{is_p_regular, partitions, CycleType, Partition, PartitionParseError};
pub use rimhook::{removable_rim_hooks, RimHook};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymfunError {
    #[error("partition {lambda} and class {rho} have different sizes")]
    SizeMismatch { lambda: Partition, rho: Partition },
    #[error("central character of {lambda} at class {class} is {numerator}/{denominator}, not an integer")]
    IntegralityViolation { lambda: Partition, class: Partition, numerator: String, denominator: String },
}
