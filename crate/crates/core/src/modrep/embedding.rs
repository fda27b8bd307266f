use std::collections::HashMap;

use crate::ffla::GFMatrix;
use crate::grpalg::{lehmer_rank_of, Permutation};
use crate::par::Exec;

/// Points of a permutation module, packed into fixed arrays (degree ≤ 8).
pub(super) type Point = [u8; 8];

/// A permutation module F[X] for an 𝔖_n-set X.
pub(super) enum Ambient {
    /// X = 𝔖_n acting on itself by right multiplication; points are one-line
    /// images and columns are Lehmer ranks.
    GroupAlgebra { n: usize },
    /// X = row tabloids of a fixed shape; a point lists the row of each entry.
    Tabloids { n: usize, labels: Vec<Point>, index: HashMap<Point, u32> },
}

impl Ambient {
    pub(super) fn tabloids(n: usize, labels: Vec<Point>) -> Self {
        let index = labels.iter().enumerate().map(|(i, &t)| (t, i as u32)).collect();
        Ambient::Tabloids { n, labels, index }
    }

    pub(super) fn point(&self, col: usize) -> Point {
        match self {
            Ambient::GroupAlgebra { n } => {
                let g = Permutation::lehmer_unrank(col as u64, *n).expect("column is a rank");
                let mut pt = [0u8; 8];
                pt[..*n].copy_from_slice(g.images());
                pt
            }
            Ambient::Tabloids { labels, .. } => labels[col],
        }
    }

    /// Column of `pt · g`.
    #[inline]
    pub(super) fn act(&self, pt: &Point, g: &Permutation) -> usize {
        let img = g.images();
        match self {
            Ambient::GroupAlgebra { n } => {
                let mut y = [0u8; 8];
                for i in 0..*n {
                    y[i] = img[pt[i] as usize];
                }
                lehmer_rank_of(&y[..*n]) as usize
            }
            Ambient::Tabloids { n, index, .. } => {
                let mut y = [0u8; 8];
                for i in 0..*n {
                    y[img[i] as usize] = pt[i];
                }
                index[&y] as usize
            }
        }
    }
}

const NO_ROW: u32 = u32::MAX;

/// A submodule of a permutation module, stored as sparse rows in reduced
/// row-echelon form.
pub(super) struct Embedding {
    ambient: Ambient,
    p: u32,
    /// Nonzero entries `(column, value)` of each basis row.
    rows: Vec<Vec<(u32, u32)>>,
    /// The ambient point of each stored entry, parallel to `rows`.
    points: Vec<Vec<Point>>,
    pivots: Vec<usize>,
    pivot_row: Vec<u32>,
}

impl Embedding {
    pub(super) fn new(ambient: Ambient, ambient_dim: usize, p: u32, rows: Vec<Vec<(u32, u32)>>, pivots: Vec<usize>) -> Self {
        let points = rows.iter().map(|r| r.iter().map(|&(c, _)| ambient.point(c as usize)).collect()).collect();
        let mut pivot_row = vec![NO_ROW; ambient_dim];
        for (i, &c) in pivots.iter().enumerate() {
            pivot_row[c] = i as u32;
        }
        Embedding { ambient, p, rows, points, pivots, pivot_row }
    }

    pub(super) fn dim(&self) -> usize {
        self.rows.len()
    }

    pub(super) fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Matrix of `Σ_{g ∈ perms} g` on the basis rows. Coordinates are read off
    /// at the pivot columns, which is exact on an invariant subspace. Each
    /// `g` permutes columns, so a slot gains at most `p − 1` per element and
    /// the `u32` accumulators cannot overflow for |perms| ≤ 8!.
    pub(super) fn operator(&self, perms: &[Permutation], exec: Exec) -> GFMatrix {
        let d = self.dim();
        GFMatrix::from_row_fn(d, d, self.p, exec, |k, acc| {
            for g in perms {
                for (&(_, v), pt) in self.rows[k].iter().zip(&self.points[k]) {
                    let j = self.pivot_row[self.ambient.act(pt, g)];
                    if j != NO_ROW {
                        acc[j as usize] += v;
                    }
                }
            }
        })
    }

    /// Checks that `row · g` lies in the span of the rows, for every row.
    /// Returns the first offending row.
    pub(super) fn check_invariant(&self, g: &Permutation) -> Result<(), usize> {
        let p = self.p;
        for k in 0..self.dim() {
            let mut image: HashMap<u32, u32> = HashMap::new();
            for (&(_, v), pt) in self.rows[k].iter().zip(&self.points[k]) {
                *image.entry(self.ambient.act(pt, g) as u32).or_insert(0) += v;
            }
            let coords: Vec<(usize, u32)> = image
                .iter()
                .filter_map(|(&c, &v)| {
                    let j = self.pivot_row[c as usize];
                    (j != NO_ROW && v % p != 0).then_some((j as usize, v % p))
                })
                .collect();
            for (j, c) in coords {
                for &(col, v) in &self.rows[j] {
                    let e = image.entry(col).or_insert(0);
                    *e = (*e + (p - c) * v) % p;
                }
            }
            if image.values().any(|&v| v % p != 0) {
                return Err(k);
            }
        }
        Ok(())
    }

    /// Entries of basis row `k` inside the ambient space.
    pub(super) fn row(&self, k: usize) -> &[(u32, u32)] {
        &self.rows[k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_algebra_action_is_right_multiplication() {
        let n = 4;
        let amb = Ambient::GroupAlgebra { n };
        let x = Permutation::from_one_line(&[2, 4, 1, 3]).unwrap();
        let g = Permutation::from_one_line(&[3, 1, 4, 2]).unwrap();
        let col = x.lehmer_rank() as usize;
        let pt = amb.point(col);
        assert_eq!(amb.act(&pt, &g) as u64, x.compose(&g).unwrap().lehmer_rank());
    }

    #[test]
    fn regular_operator_is_permutation_matrix() {
        let n = 3;
        let rows: Vec<Vec<(u32, u32)>> = (0..6).map(|c| vec![(c, 1)]).collect();
        let e = Embedding::new(Ambient::GroupAlgebra { n }, 6, 3, rows, (0..6).collect());
        let g = Permutation::coxeter(1, 3);
        let m = e.operator(&[g.clone()], Exec::Sequential);
        for r in 0..6u64 {
            let x = Permutation::lehmer_unrank(r, n).unwrap();
            let y = x.compose(&g).unwrap().lehmer_rank() as usize;
            assert_eq!(m.get(r as usize, y), 1);
        }
        assert_eq!(m.nnz(), 6);
        assert!(e.check_invariant(&g).is_ok());
    }
}
