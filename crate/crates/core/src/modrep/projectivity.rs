use serde::{Deserialize, Serialize};

use super::module::{ModuleKind, ModuleRep};
use super::ModrepError;
use crate::grpalg::{factorial_u64, Permutation};
use crate::sylow::{closure, sylow_generators};

/// Outcome of the norm-rank test over a p-subgroup P.
///
/// A module over the p-group algebra FP is free iff `dim = |P| · rank(N)`
/// where `N = Σ_{g∈P} g`; `rank(N)` counts the free summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectivityVerdict {
    pub dim: usize,
    pub sylow_order: usize,
    pub norm_rank: usize,
    pub projective: bool,
    pub free_rank: usize,
}

impl ProjectivityVerdict {
    pub(crate) fn from_rank(dim: usize, sylow_order: usize, norm_rank: usize) -> Self {
        ProjectivityVerdict { dim, sylow_order, norm_rank, projective: dim == sylow_order * norm_rank, free_rank: norm_rank }
    }
}

/// Norm-rank test for the restriction of `m` to the subgroup with elements
/// `subgroup` (which must contain the identity). With P a Sylow p-subgroup
/// of 𝔖_n this decides projectivity over F𝔖_n.
pub fn norm_rank_projectivity(m: &ModuleRep, subgroup: &[Permutation]) -> Result<ProjectivityVerdict, ModrepError> {
    assert!(subgroup.iter().any(Permutation::is_identity), "subgroup must contain the identity");
    let norm = m.sum_of_actions(subgroup)?;
    let rank = norm.rank_with(m.exec());
    Ok(ProjectivityVerdict::from_rank(m.dim(), subgroup.len(), rank))
}

/// Checks that `Lie(n)` restricted to 𝔖_{n−1} is free: the Sylow p-subgroup
/// of 𝔖_{n−1} (points 1..n−1) must act freely, and the spanning set
/// `{ω_n σ}` must be a basis, i.e. `dim = (n−1)!`.
pub fn restriction_free_rank_check(m: &ModuleRep, p: u32) -> Result<bool, ModrepError> {
    if *m.kind() != ModuleKind::Lie || !m.has_embedding() {
        return Err(ModrepError::MissingEmbedding);
    }
    let n = m.degree();
    let gens = sylow_generators(n - 1, p).extend(n);
    let cap = gens.expected_order as usize;
    let subgroup = closure(&gens, cap)?;
    let verdict = norm_rank_projectivity(m, &subgroup)?;
    let basis_is_free_rank_one = m.dim() as u64 == factorial_u64(n - 1);
    Ok(verdict.projective && basis_is_free_rank_one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::{build_lie_module, build_regular_module, build_trivial_module};
    use crate::sylow::sylow_subgroup;

    #[test]
    fn trivial_module_of_sp_is_not_projective() {
        for p in [2, 3, 5] {
            let m = build_trivial_module(p as usize, p).unwrap();
            let v = norm_rank_projectivity(&m, &sylow_subgroup(p as usize, p)).unwrap();
            assert_eq!(v.norm_rank, 0);
            assert!(!v.projective);
        }
    }

    #[test]
    fn regular_module_is_free() {
        let m = build_regular_module(4, 2).unwrap();
        let v = norm_rank_projectivity(&m, &sylow_subgroup(4, 2)).unwrap();
        assert_eq!((v.sylow_order, v.norm_rank, v.projective), (8, 3, true));
        let m = build_regular_module(4, 3).unwrap();
        assert!(norm_rank_projectivity(&m, &sylow_subgroup(4, 3)).unwrap().projective);
    }

    #[test]
    fn lie_restriction_is_free() {
        for (n, p) in [(4, 2), (6, 3), (6, 2), (5, 5)] {
            let m = build_lie_module(n, p).unwrap();
            assert!(restriction_free_rank_check(&m, p).unwrap(), "n={n} p={p}");
        }
    }

    #[test]
    fn lie_projectivity_follows_divisibility() {
        for n in 2..=6usize {
            for p in [2u32, 3, 5] {
                let m = build_lie_module(n, p).unwrap();
                let v = norm_rank_projectivity(&m, &sylow_subgroup(n, p)).unwrap();
                assert_eq!(v.projective, n % p as usize != 0, "n={n} p={p}");
            }
        }
    }
}
