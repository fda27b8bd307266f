use num_bigint::BigInt;

use super::{enumerate_blocks, BlocksError};
use crate::ffla::GFScalar;
use crate::symfun::{central_character, class_size, partitions, CycleType, Partition};

/// Classes whose central characters tell all blocks apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSignature {
    pub n: u32,
    pub p: u32,
    pub classes: Vec<CycleType>,
    pub cores: Vec<Partition>,
    /// `values[k][j]` is `θ(classes[j])` on the block with core `cores[k]`.
    pub values: Vec<Vec<GFScalar>>,
}

impl BlockSignature {
    /// Central character of the block with `core` on `classes[j]`.
    pub fn value(&self, core: &Partition, j: usize) -> Option<GFScalar> {
        let k = self.cores.iter().position(|c| c == core)?;
        Some(self.values[k][j])
    }

    pub fn separates(&self) -> bool {
        (0..self.cores.len()).all(|a| (a + 1..self.cores.len()).all(|b| self.values[a] != self.values[b]))
    }
}

/// Greedy choice of classes, smallest class size first (ties broken by cycle
/// type), keeping a class only if it separates some pair of blocks that the
/// earlier ones did not.
pub fn separating_signature(n: u32, p: u32) -> Result<BlockSignature, BlocksError> {
    let labels = enumerate_blocks(n, p);
    let cores: Vec<Partition> = labels.iter().map(|l| l.core.clone()).collect();
    let mut candidates: Vec<(BigInt, CycleType)> = partitions(n)
        .into_iter()
        .filter(|c| c.parts().iter().any(|&x| x > 1))
        .map(|c| (class_size(&c), c))
        .collect();
    candidates.sort();
    let mut sig = BlockSignature { n, p, classes: Vec::new(), cores, values: vec![Vec::new(); labels.len()] };
    for (_, class) in candidates {
        if sig.separates() {
            break;
        }
        let column: Vec<GFScalar> = labels
            .iter()
            .map(|l| central_character(&l.members[0], &class, p))
            .collect::<Result<_, _>>()?;
        let splits_new_pair = (0..labels.len()).any(|a| {
            (a + 1..labels.len()).any(|b| sig.values[a] == sig.values[b] && column[a] != column[b])
        });
        if splits_new_pair {
            for (row, v) in sig.values.iter_mut().zip(column) {
                row.push(v);
            }
            sig.classes.push(class);
        }
    }
    if !sig.separates() {
        return Err(BlocksError::SeparationFailure { n, p });
    }
    Ok(sig)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpositions_separate_six_mod_two() {
        let sig = separating_signature(6, 2).unwrap();
        assert_eq!(sig.classes, vec!["2,1,1,1,1".parse::<Partition>().unwrap()]);
        // Content sums: 15 on the principal block, 0 on (3,2,1).
        assert_eq!(sig.value(&Partition::empty(), 0).unwrap().value(), 1);
        assert_eq!(sig.value(&"3,2,1".parse().unwrap(), 0).unwrap().value(), 0);
    }

    #[test]
    fn single_block_needs_no_classes() {
        assert!(separating_signature(4, 2).unwrap().classes.is_empty());
    }

    #[test]
    fn all_small_cases_separate() {
        for n in 1..=8 {
            for p in [2, 3, 5, 7] {
                let sig = separating_signature(n, p).unwrap();
                assert!(sig.separates());
                assert_eq!(sig.cores.len(), enumerate_blocks(n, p).len());
            }
        }
        assert_eq!(separating_signature(6, 3).unwrap().cores.len(), 3);
    }
}
