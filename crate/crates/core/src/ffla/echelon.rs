use super::field::inv_mod;
use super::matrix::{axpy_bytes, mul_table, GFMatrix, Store};
use super::FflaError;
use crate::par::Exec;

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// Same shape as the input; zero rows sit at the bottom.
    pub reduced: GFMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows: a basis of the row space in reduced form.
    pub fn basis(&self) -> GFMatrix {
        self.reduced.top_rows(self.rank())
    }
}

/// Gaussian elimination in place. With `full` the result is the reduced
/// form; otherwise only rows below each pivot are cleared. Pivots are always
/// the leftmost available nonzero column.
fn eliminate(m: &mut GFMatrix, full: bool, exec: Exec) -> Vec<usize> {
    let rows = m.rows();
    let cols = m.cols();
    let p = m.modulus();
    let mut pivots = Vec::new();
    let mut rank = 0;
    match &mut m.store {
        Store::Bits { stride, words } => {
            let stride = *stride;
            for col in 0..cols {
                if rank == rows {
                    break;
                }
                let w = col / 64;
                let mask = 1u64 << (col % 64);
                let Some(r) = (rank..rows).find(|&r| words[r * stride + w] & mask != 0) else {
                    continue;
                };
                if r != rank {
                    for k in 0..stride {
                        words.swap(rank * stride + k, r * stride + k);
                    }
                }
                let pivot: Vec<u64> = words[rank * stride + w..(rank + 1) * stride].to_vec();
                let start = if full { 0 } else { rank + 1 };
                let pr = rank;
                exec.rows_mut(&mut words[start * stride..], stride, |i, row| {
                    if i + start != pr && row[w] & mask != 0 {
                        row[w..].iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= y);
                    }
                });
                pivots.push(col);
                rank += 1;
            }
        }
        Store::Bytes(data) => {
            let tables: Vec<[u8; 256]> = (0..p).map(|f| mul_table((p - f) % p, p)).collect();
            let pb = p as u8;
            for col in 0..cols {
                if rank == rows {
                    break;
                }
                let Some(r) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
                    continue;
                };
                if r != rank {
                    for k in 0..cols {
                        data.swap(rank * cols + k, r * cols + k);
                    }
                }
                let lead = data[rank * cols + col] as u32;
                if lead != 1 {
                    let t = mul_table(inv_mod(lead, p), p);
                    data[rank * cols + col..(rank + 1) * cols].iter_mut().for_each(|x| *x = t[*x as usize]);
                }
                let pivot: Vec<u8> = data[rank * cols + col..(rank + 1) * cols].to_vec();
                let start = if full { 0 } else { rank + 1 };
                let pr = rank;
                let tables = &tables;
                exec.rows_mut(&mut data[start * cols..], cols, |i, row| {
                    let f = row[col];
                    if i + start != pr && f != 0 {
                        axpy_bytes(&mut row[col..], &pivot, &tables[f as usize], pb);
                    }
                });
                pivots.push(col);
                rank += 1;
            }
        }
    }
    pivots
}

impl GFMatrix {
    pub fn rref(&self) -> Rref {
        self.rref_with(Exec::default())
    }

    pub fn rref_with(&self, exec: Exec) -> Rref {
        let mut reduced = self.clone();
        let pivots = eliminate(&mut reduced, true, exec);
        Rref { reduced, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rank_with(Exec::default())
    }

    pub fn rank_with(&self, exec: Exec) -> usize {
        let mut work = self.clone();
        eliminate(&mut work, false, exec).len()
    }

    /// Basis (as rows) of the right null space `{k : A k = 0}`.
    pub fn kernel(&self) -> GFMatrix {
        let Rref { reduced, pivots } = self.rref();
        let p = self.modulus();
        let mut is_pivot = vec![false; self.cols()];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols()).filter(|&c| !is_pivot[c]).collect();
        let mut basis = GFMatrix::zeros(free.len(), self.cols(), p);
        for (k, &f) in free.iter().enumerate() {
            basis.set(k, f, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                let v = reduced.get(i, f);
                if v != 0 {
                    basis.set(k, pc, p - v);
                }
            }
        }
        basis
    }

    /// Basis of `{v : v A = 0}` for row vectors.
    pub fn left_kernel(&self) -> GFMatrix {
        self.transpose().kernel()
    }

    /// Basis of the union `ker A ⊆ ker A² ⊆ …` once it stops growing.
    ///
    /// Powers are taken by repeated squaring until the rank stops dropping;
    /// the kernel of that power is the stable one.
    pub fn stabilized_kernel(&self) -> Result<GFMatrix, FflaError> {
        if !self.is_square() {
            return Err(FflaError::NotSquare { rows: self.rows(), cols: self.cols() });
        }
        let mut power = self.clone();
        let mut rank = power.rank();
        while rank > 0 {
            let next = power.mat_mul(&power)?;
            let next_rank = next.rank();
            if next_rank == rank {
                break;
            }
            power = next;
            rank = next_rank;
        }
        Ok(power.kernel())
    }

    /// Row-vector version of [`GFMatrix::stabilized_kernel`].
    pub fn stabilized_left_kernel(&self) -> Result<GFMatrix, FflaError> {
        self.transpose().stabilized_kernel()
    }

    /// Reduced basis of the row space.
    pub fn row_space(&self) -> Rref {
        let r = self.rref();
        let basis = r.basis();
        Rref { reduced: basis, pivots: r.pivots }
    }
}

/// Coordinates `c` with `c · R = v`, where `R` is in reduced row-echelon form
/// with the given pivots (only its first `pivots.len()` rows are used).
pub fn solve_in_rowspace(r: &GFMatrix, pivots: &[usize], v: &[u32]) -> Result<Vec<u32>, FflaError> {
    if v.len() != r.cols() {
        return Err(FflaError::LengthMismatch { expected: r.cols(), found: v.len() });
    }
    let p = r.modulus();
    let coords: Vec<u32> = pivots.iter().map(|&c| v[c] % p).collect();
    let mut residual: Vec<u32> = v.iter().map(|x| x % p).collect();
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (col, x) in r.row_entries(i) {
            residual[col] = (residual[col] + (p - c) * x % p) % p;
        }
    }
    if residual.iter().any(|&x| x != 0) {
        return Err(FflaError::NotInSpan);
    }
    Ok(coords)
}

/// Basis of `row(U) ∩ row(V)` by Zassenhaus' method.
pub fn intersect_rowspaces(u: &GFMatrix, v: &GFMatrix) -> Result<GFMatrix, FflaError> {
    if u.modulus() != v.modulus() {
        return Err(FflaError::ModulusMismatch { left: u.modulus(), right: v.modulus() });
    }
    if u.cols() != v.cols() {
        return Err(FflaError::DimensionMismatch { left: (u.rows(), u.cols()), right: (v.rows(), v.cols()) });
    }
    let c = u.cols();
    let zero = GFMatrix::zeros(v.rows(), c, v.modulus());
    let top = GFMatrix::hstack(&[u, u])?;
    let bottom = GFMatrix::hstack(&[v, &zero])?;
    let stacked = GFMatrix::vstack(&[&top, &bottom])?;
    let rref = stacked.rref();
    let first = rref.pivots.iter().position(|&pc| pc >= c).unwrap_or(rref.rank());
    let rows: Vec<usize> = (first..rref.rank()).collect();
    let right: Vec<usize> = (c..2 * c).collect();
    Ok(rref.reduced.select_rows(&rows).select_columns(&right))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        for p in [2, 3, 5] {
            let r = GFMatrix::identity(6, p).rref();
            assert_eq!(r.rank(), 6);
            assert_eq!(r.pivots, (0..6).collect::<Vec<_>>());
        }
    }

    #[test]
    fn all_ones_over_two_has_rank_one() {
        let a = GFMatrix::from_rows(&[vec![1, 1], vec![1, 1]], 2, 2);
        assert_eq!(a.rank(), 1);
        assert_eq!(a.rref().reduced.to_rows(), vec![vec![1, 1], vec![0, 0]]);
    }

    #[test]
    fn rref_is_leftmost_pivot_and_normalized() {
        let a = GFMatrix::from_rows(&[vec![0, 2, 4, 1], vec![0, 1, 2, 0], vec![3, 0, 0, 1]], 4, 5);
        let r = a.rref();
        assert_eq!(r.pivots, vec![0, 1, 3]);
        assert_eq!(r.reduced.to_rows(), vec![vec![1, 0, 0, 0], vec![0, 1, 2, 0], vec![0, 0, 0, 1]]);
    }

    #[test]
    fn solve_examples() {
        let r = GFMatrix::from_rows(&[vec![1, 0, 2], vec![0, 1, 1]], 3, 3);
        assert_eq!(solve_in_rowspace(&r, &[0, 1], &[0, 1, 1]).unwrap(), vec![0, 1]);
        assert_eq!(solve_in_rowspace(&r, &[0, 1], &[0, 0, 0]).unwrap(), vec![0, 0]);
        let one = GFMatrix::from_rows(&[vec![1, 1]], 2, 2);
        assert_eq!(solve_in_rowspace(&one, &[0], &[0, 1]), Err(FflaError::NotInSpan));
        assert!(matches!(solve_in_rowspace(&r, &[0, 1], &[1]), Err(FflaError::LengthMismatch { .. })));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(GFMatrix::zeros(3, 3, 5).kernel().rows(), 3);
        assert_eq!(GFMatrix::identity(4, 7).kernel().rows(), 0);
        let a = GFMatrix::from_rows(&[vec![1, 2, 3]], 3, 5);
        let k = a.kernel();
        assert_eq!(k.rows(), 2);
        assert!(a.mat_mul(&k.transpose()).unwrap().is_zero());
    }

    fn jordan_nilpotent(n: usize, p: u32) -> GFMatrix {
        GFMatrix::from_fn(n, n, p, |i, j| u32::from(j == i + 1))
    }

    #[test]
    fn stabilized_kernel_examples() {
        assert_eq!(jordan_nilpotent(3, 3).stabilized_kernel().unwrap().rows(), 3);
        assert_eq!(GFMatrix::identity(4, 2).stabilized_kernel().unwrap().rows(), 0);
        assert!(matches!(GFMatrix::zeros(2, 3, 3).stabilized_kernel(), Err(FflaError::NotSquare { .. })));
    }

    #[test]
    fn intersection_examples() {
        let u = GFMatrix::from_rows(&[vec![1, 0, 0], vec![0, 1, 0]], 3, 3);
        let v = GFMatrix::from_rows(&[vec![0, 0, 1]], 3, 3);
        assert_eq!(intersect_rowspaces(&u, &v).unwrap().rows(), 0);
        let same = intersect_rowspaces(&u, &u).unwrap();
        assert_eq!(same.rref().basis(), u.rref().basis());
        let w = GFMatrix::from_rows(&[vec![1, 1, 0], vec![0, 0, 1]], 3, 3);
        let i = intersect_rowspaces(&u, &w).unwrap();
        assert_eq!(i.rref().basis().to_rows(), vec![vec![1, 1, 0]]);
    }
}
