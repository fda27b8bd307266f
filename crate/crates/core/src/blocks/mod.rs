//! Blocks of F𝔖_n and block components of modules.
//!
//! Blocks are labelled by p-cores. A module is split by generalized
//! eigenspaces of class-sum operators: on the component of a block, the sum
//! over a class C acts with the single eigenvalue `θ_λ(C) mod p` shared by
//! all λ in the block. Osima's idempotents give an independent second split
//! for small n.

mod idempotent;
mod signature;
mod split;
mod table;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ffla::FflaError;
use crate::modrep::ModrepError;
use crate::symfun::{p_core, partitions, principal_core, Partition, SymfunError};

pub use idempotent::{osima_idempotent, osima_idempotents, verify_idempotent_system, CentralIdempotent, MAX_CONVOLUTION_DEGREE};
pub use signature::{separating_signature, BlockSignature};
pub use split::{block_split, block_split_osima, compare_splittings, BlockComponents, MAX_OSIMA_DEGREE};
pub use table::{format_block_table, BlockRecord};

#[derive(Debug, Error)]
pub enum BlocksError {
    #[error("Osima coefficient of block {core} on class {class} is {value}, which is not {p}-integral")]
    PIntegralityViolation { core: Partition, class: Partition, value: String, p: u32 },
    #[error("no set of classes separates the {p}-blocks of S_{n}")]
    SeparationFailure { n: u32, p: u32 },
    #[error("block components have total dimension {found}, module has dimension {expected}")]
    DecompositionIncomplete { found: usize, expected: usize },
    #[error("eigenspace and idempotent splittings differ at core {core}")]
    MethodDisagreement { core: Partition },
    #[error("idempotent system check failed: {0}")]
    IdempotentSystem(String),
    #[error("signature is for S_{n} over GF({p}) and does not match the module")]
    SignatureMismatch { n: usize, p: u32 },
    #[error("degree {n} exceeds the limit {max} for this method")]
    DegreeTooLarge { n: usize, max: usize },
    #[error(transparent)]
    Modrep(#[from] ModrepError),
    #[error(transparent)]
    Symfun(#[from] SymfunError),
    #[error(transparent)]
    Ffla(#[from] FflaError),
}

/// A block of F𝔖_n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockLabel {
    pub core: Partition,
    pub weight: usize,
    /// Partitions of n with this p-core, in increasing lexicographic order.
    pub members: Vec<Partition>,
    pub is_principal: bool,
}

/// All p-blocks of F𝔖_n, ordered by core size and then by core.
pub fn enumerate_blocks(n: u32, p: u32) -> Vec<BlockLabel> {
    let principal = principal_core(n, p);
    let mut labels: Vec<BlockLabel> = Vec::new();
    for lambda in partitions(n) {
        let (core, weight) = p_core(&lambda, p);
        match labels.iter_mut().find(|b| b.core == core) {
            Some(b) => b.members.push(lambda),
            None => labels.push(BlockLabel { is_principal: core == principal, core, weight, members: vec![lambda] }),
        }
    }
    labels.sort_by(|a, b| (a.core.size(), &a.core).cmp(&(b.core.size(), &b.core)));
    labels
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cores(n: u32, p: u32) -> Vec<String> {
        enumerate_blocks(n, p).iter().map(|b| b.core.to_string()).collect()
    }

    #[test]
    fn censuses() {
        assert_eq!(cores(4, 2), vec!["∅"]);
        assert_eq!(cores(6, 2), vec!["∅", "3,2,1"]);
        assert_eq!(cores(6, 3), vec!["∅", "2,2,1,1", "4,2"]);
        assert_eq!(cores(5, 5), vec!["∅", "2,2,1", "3,2"]);
        assert_eq!(cores(8, 2), vec!["∅", "3,2,1"]);
    }

    #[test]
    fn weights_and_principal() {
        for n in 1..=8 {
            for p in [2, 3, 5, 7] {
                let blocks = enumerate_blocks(n, p);
                assert_eq!(blocks.iter().filter(|b| b.is_principal).count(), 1);
                let total: usize = blocks.iter().map(|b| b.members.len()).sum();
                assert_eq!(total, partitions(n).len());
                for b in &blocks {
                    assert_eq!(b.core.size() as usize + p as usize * b.weight, n as usize);
                }
            }
        }
    }
}
