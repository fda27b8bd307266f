use std::collections::HashMap;

use super::embedding::{Ambient, Embedding, Point};
use super::module::{ModuleKind, ModuleRep, Realization};
use super::ModrepError;
use crate::ffla::{is_supported_prime, GFMatrix};
use crate::grpalg::{factorial_u64, omega, Permutation};
use crate::par::Exec;
use crate::symfun::Partition;

pub const MAX_LIE_DEGREE: usize = 8;
/// n! × n! generator matrices; 8! would need gigabytes for odd p.
pub const MAX_REGULAR_DEGREE: usize = 7;
pub const MAX_SPECHT_DEGREE: usize = 7;

fn check_prime(p: u32) -> Result<(), ModrepError> {
    if is_supported_prime(p) {
        Ok(())
    } else {
        Err(ModrepError::UnsupportedPrime(p))
    }
}

fn check_degree(n: usize, min: usize, max: usize) -> Result<(), ModrepError> {
    if n < min || n > max {
        return Err(ModrepError::DegreeOutOfRange { n, min, max });
    }
    Ok(())
}

/// Generator matrices of an embedded module, after checking each generator
/// keeps the subspace invariant.
fn embedded_module(n: usize, p: u32, e: Embedding, kind: ModuleKind, exec: Exec) -> Result<ModuleRep, ModrepError> {
    let mut gens = Vec::with_capacity(n - 1);
    for i in 1..n {
        let s = Permutation::coxeter(i, n);
        e.check_invariant(&s).map_err(|_| ModrepError::NotInvariant { generator: i })?;
        gens.push(e.operator(&[s], exec));
    }
    let dim = e.dim();
    Ok(ModuleRep::assemble(n, p, dim, gens, kind, Realization::Embedded(e), exec))
}

fn sparse_rows(m: &GFMatrix) -> Vec<Vec<(u32, u32)>> {
    (0..m.rows()).map(|r| m.row_entries(r).into_iter().map(|(c, v)| (c as u32, v)).collect()).collect()
}

/// `Lie(n) = ω_n F𝔖_n` over GF(p), with basis `{ω_n σ : σ ∈ 𝔖_{n−1}}`.
pub fn build_lie_module(n: usize, p: u32) -> Result<ModuleRep, ModrepError> {
    build_lie_module_with(n, p, Exec::default())
}

pub fn build_lie_module_with(n: usize, p: u32, exec: Exec) -> Result<ModuleRep, ModrepError> {
    let e = lie_embedding(n, p)?;
    embedded_module(n, p, e, ModuleKind::Lie, exec)
}

/// Rows `ω_n σ` for σ fixing 1, in Lehmer order.
///
/// Those σ are exactly the ranks below (n−1)!, and the only term of ω_n
/// fixing 1 is the identity, so row r restricted to the first (n−1)!
/// columns is the unit vector e_r. The rows are therefore already reduced
/// with pivots 0..(n−1)!, which certifies full rank. If that shape check
/// ever failed we would fall back to dense elimination.
pub(super) fn lie_embedding(n: usize, p: u32) -> Result<Embedding, ModrepError> {
    check_degree(n, 2, MAX_LIE_DEGREE)?;
    check_prime(p)?;
    let w = omega(n, 0)?;
    let terms: Vec<(Permutation, u32)> = w
        .terms()
        .map(|(rank, c)| {
            let g = Permutation::lehmer_unrank(rank, n).expect("support ranks are valid");
            let c = i64::try_from(c).expect("ω has ±1 coefficients").rem_euclid(p as i64) as u32;
            (g, c)
        })
        .filter(|&(_, c)| c != 0)
        .collect();
    let h = factorial_u64(n - 1) as usize;
    let total = factorial_u64(n) as usize;
    let rows: Vec<Vec<(u32, u32)>> = (0..h as u64)
        .map(|r| {
            let sigma = Permutation::lehmer_unrank(r, n).expect("rank below (n-1)!");
            let mut row: Vec<(u32, u32)> = terms.iter().map(|(t, c)| (t.then(&sigma).lehmer_rank() as u32, *c)).collect();
            row.sort_unstable();
            row
        })
        .collect();
    let reduced = rows.iter().enumerate().all(|(r, row)| {
        let head: Vec<&(u32, u32)> = row.iter().take_while(|&&(c, _)| (c as usize) < h).collect();
        head.len() == 1 && head[0] == &(r as u32, 1)
    });
    if reduced {
        return Ok(Embedding::new(Ambient::GroupAlgebra { n }, total, p, rows, (0..h).collect()));
    }
    let mut dense = GFMatrix::zeros(h, total, p);
    for (r, row) in rows.iter().enumerate() {
        for &(c, v) in row {
            dense.set(r, c as usize, v);
        }
    }
    let rref = dense.rref();
    if rref.rank() < h {
        return Err(ModrepError::RankDeficient { n, p, rank: rref.rank(), expected: h });
    }
    Ok(Embedding::new(Ambient::GroupAlgebra { n }, total, p, sparse_rows(&rref.basis()), rref.pivots))
}

/// F𝔖_n acting on itself by right multiplication, basis in Lehmer order.
pub fn build_regular_module(n: usize, p: u32) -> Result<ModuleRep, ModrepError> {
    check_degree(n, 1, MAX_REGULAR_DEGREE)?;
    check_prime(p)?;
    let total = factorial_u64(n) as usize;
    let rows = (0..total as u32).map(|c| vec![(c, 1)]).collect();
    let e = Embedding::new(Ambient::GroupAlgebra { n }, total, p, rows, (0..total).collect());
    embedded_module(n, p, e, ModuleKind::Regular, Exec::default())
}

fn one_dimensional(n: usize, p: u32, value: u32, kind: ModuleKind) -> Result<ModuleRep, ModrepError> {
    check_degree(n, 1, u8::MAX as usize)?;
    check_prime(p)?;
    let gens = (1..n).map(|_| GFMatrix::scalar(1, value % p, p)).collect();
    Ok(ModuleRep::assemble(n, p, 1, gens, kind, Realization::Abstract, Exec::default()))
}

pub fn build_trivial_module(n: usize, p: u32) -> Result<ModuleRep, ModrepError> {
    one_dimensional(n, p, 1, ModuleKind::Trivial)
}

pub fn build_sign_module(n: usize, p: u32) -> Result<ModuleRep, ModrepError> {
    one_dimensional(n, p, p - 1, ModuleKind::Sign)
}

/// Standard Young tableaux of shape λ, rows of 1-based entries.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<Vec<u32>>> {
    fn fill(lambda: &Partition, next: u32, total: u32, t: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if next > total {
            out.push(t.clone());
            return;
        }
        for i in 0..lambda.len() {
            let len = t[i].len();
            let room = (len as u32) < lambda.part(i);
            let supported = i == 0 || t[i - 1].len() > len;
            if room && supported {
                t[i].push(next);
                fill(lambda, next + 1, total, t, out);
                t[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    fill(lambda, 1, lambda.size(), &mut vec![Vec::new(); lambda.len()], &mut out);
    out
}

/// Row tabloids of shape λ: for each point, the row it sits in.
fn tabloid_labels(lambda: &Partition) -> Vec<Point> {
    fn assign(point: usize, n: usize, room: &mut [u32], label: &mut Point, out: &mut Vec<Point>) {
        if point == n {
            out.push(*label);
            return;
        }
        for r in 0..room.len() {
            if room[r] > 0 {
                room[r] -= 1;
                label[point] = r as u8;
                assign(point + 1, n, room, label, out);
                room[r] += 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut room = lambda.parts().to_vec();
    assign(0, lambda.size() as usize, &mut room, &mut [0u8; 8], &mut out);
    out
}

/// All permutations of `0..k` with their signs.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    for rank in 0..factorial_u64(k) {
        let g = Permutation::lehmer_unrank(rank, k).expect("rank below k!");
        out.push((g.images().iter().map(|&x| x as usize).collect(), g.sign() as i64));
    }
    out
}

/// The Specht module S^λ, spanned by the standard polytabloids inside the
/// row-tabloid module.
pub fn build_specht_module(lambda: &Partition, p: u32) -> Result<ModuleRep, ModrepError> {
    let n = lambda.size() as usize;
    check_degree(n, 1, MAX_SPECHT_DEGREE)?;
    check_prime(p)?;
    let labels = tabloid_labels(lambda);
    let ambient = Ambient::tabloids(n, labels);
    let index: HashMap<Point, usize> = match &ambient {
        Ambient::Tabloids { index, .. } => index.iter().map(|(&k, &v)| (k, v as usize)).collect(),
        Ambient::GroupAlgebra { .. } => unreachable!(),
    };
    let width = index.len();
    let tableaux = standard_tableaux(lambda);
    let conj = lambda.conjugate();
    let column_groups: Vec<Vec<(Vec<usize>, i64)>> =
        conj.parts().iter().map(|&h| signed_permutations(h as usize)).collect();

    let mut dense = GFMatrix::zeros(tableaux.len(), width, p);
    for (k, t) in tableaux.iter().enumerate() {
        let mut row_of = [0u8; 8];
        for (r, entries) in t.iter().enumerate() {
            for &x in entries {
                row_of[x as usize - 1] = r as u8;
            }
        }
        let columns: Vec<Vec<usize>> =
            (0..conj.len()).map(|j| (0..conj.part(j) as usize).map(|r| t[r][j] as usize - 1).collect()).collect();
        let mut acc: HashMap<usize, i64> = HashMap::new();
        // Walk the product of the column groups like an odometer.
        let mut choice = vec![0usize; columns.len()];
        loop {
            let mut label = [0u8; 8];
            let mut sign = 1i64;
            label[..n].copy_from_slice(&row_of[..n]);
            for (j, col) in columns.iter().enumerate() {
                let (perm, s) = &column_groups[j][choice[j]];
                sign *= s;
                for (a, &x) in col.iter().enumerate() {
                    label[col[perm[a]]] = row_of[x];
                }
            }
            *acc.entry(index[&label]).or_insert(0) += sign;
            let mut j = 0;
            while j < choice.len() {
                choice[j] += 1;
                if choice[j] < column_groups[j].len() {
                    break;
                }
                choice[j] = 0;
                j += 1;
            }
            if j == choice.len() {
                break;
            }
        }
        for (c, v) in acc {
            dense.set(k, c, v.rem_euclid(p as i64) as u32);
        }
    }
    let rref = dense.rref();
    if rref.rank() != tableaux.len() {
        return Err(ModrepError::RankDeficient { n, p, rank: rref.rank(), expected: tableaux.len() });
    }
    let e = Embedding::new(ambient, width, p, sparse_rows(&rref.basis()), rref.pivots);
    embedded_module(n, p, e, ModuleKind::Specht(lambda.clone()), Exec::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{hook_length_dimension, partitions};
    use num_traits::ToPrimitive;

    #[test]
    fn lie_dimensions() {
        for n in 2..=6 {
            for p in [2, 3, 5] {
                let m = build_lie_module(n, p).unwrap();
                assert_eq!(m.dim() as u64, factorial_u64(n - 1));
            }
        }
    }

    #[test]
    fn lie_embedding_is_reduced_without_fallback() {
        for n in 2..=7 {
            let e = lie_embedding(n, 2).unwrap();
            assert_eq!(e.pivots(), (0..factorial_u64(n - 1) as usize).collect::<Vec<_>>());
        }
    }

    #[test]
    fn lie_relations_small() {
        for n in 2..=5 {
            for p in [2, 3] {
                build_lie_module(n, p).unwrap().check_relations().unwrap();
            }
        }
    }

    #[test]
    fn standard_tableau_counts_match_hook_formula() {
        for n in 1..=7 {
            for l in partitions(n) {
                assert_eq!(standard_tableaux(&l).len(), hook_length_dimension(&l).to_usize().unwrap());
            }
        }
    }

    #[test]
    fn specht_examples() {
        let one_row = build_specht_module(&Partition::row(4), 3).unwrap();
        assert_eq!(one_row.dim(), 1);
        assert!(one_row.gen_actions().iter().all(GFMatrix::is_identity));
        assert_eq!(build_specht_module(&"2,1".parse().unwrap(), 2).unwrap().dim(), 2);
        assert_eq!(build_specht_module(&"3,2".parse().unwrap(), 2).unwrap().dim(), 5);
        let column = build_specht_module(&Partition::column(4), 5).unwrap();
        assert!(column.gen_actions().iter().all(|g| g.get(0, 0) == 4));
    }

    #[test]
    fn guards() {
        assert!(matches!(build_lie_module(9, 2), Err(ModrepError::DegreeOutOfRange { .. })));
        assert!(matches!(build_lie_module(1, 2), Err(ModrepError::DegreeOutOfRange { .. })));
        assert!(matches!(build_lie_module(4, 4), Err(ModrepError::UnsupportedPrime(4))));
        assert!(matches!(build_regular_module(8, 2), Err(ModrepError::DegreeOutOfRange { .. })));
        assert!(matches!(build_specht_module(&Partition::row(8), 2), Err(ModrepError::DegreeOutOfRange { .. })));
    }
}
