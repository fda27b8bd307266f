use proptest::prelude::*;
use snlie::ffla::{solve_in_rowspace, GFMatrix};
use snlie::Exec;

/// Textbook elimination on plain vectors, used as the reference.
fn naive_rank(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..rows).find(|&r| m[r][c] % p != 0) else { continue };
        m.swap(r, rank);
        let inv = (1..p).find(|&x| x * m[rank][c] % p == 1).unwrap();
        for r in 0..rows {
            if r != rank && m[r][c] % p != 0 {
                let f = m[r][c] * inv % p;
                for k in 0..cols {
                    m[r][k] = (m[r][k] + p * p - f * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn naive_mul(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum::<u64>() % p).collect()).collect()
}

fn to_matrix(rows: &[Vec<u64>], cols: usize, p: u32) -> GFMatrix {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    GFMatrix::from_rows(&rows, cols, p)
}

fn to_u64(m: &GFMatrix) -> Vec<Vec<u64>> {
    m.to_rows().into_iter().map(|r| r.into_iter().map(u64::from).collect()).collect()
}

fn matrix_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = (u32, usize, Vec<Vec<u64>>)> {
    (prop::sample::select(vec![2u32, 3, 5, 7]), 1..=max_rows, 1..=max_cols).prop_flat_map(|(p, r, c)| {
        (Just(p), Just(c), prop::collection::vec(prop::collection::vec(0..p as u64, c), r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_is_transpose_invariant((p, cols, rows) in matrix_strategy(12, 12)) {
        let m = to_matrix(&rows, cols, p);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.rank(), naive_rank(rows, p as u64));
    }

    #[test]
    fn rank_nullity((p, cols, rows) in matrix_strategy(10, 14)) {
        let m = to_matrix(&rows, cols, p);
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.rows(), cols);
        if k.rows() > 0 {
            prop_assert!(m.mat_mul(&k.transpose()).unwrap().is_zero());
        }
    }

    #[test]
    fn rref_is_idempotent_and_spans((p, cols, rows) in matrix_strategy(10, 10)) {
        let m = to_matrix(&rows, cols, p);
        let r = m.rref();
        prop_assert_eq!(r.reduced.rref(), r.clone());
        // Every original row is a combination of the reduced basis.
        let basis = r.basis();
        for row in m.to_rows() {
            prop_assert!(solve_in_rowspace(&basis, &r.pivots, &row).is_ok());
        }
    }

    #[test]
    fn sequential_and_parallel_agree((p, cols, rows) in matrix_strategy(20, 20)) {
        let m = to_matrix(&rows, cols, p);
        prop_assert_eq!(m.rref_with(Exec::Sequential), m.rref_with(Exec::default()));
        let sq = m.mat_mul_with(&m.transpose(), Exec::Sequential).unwrap();
        prop_assert_eq!(sq, m.mat_mul_with(&m.transpose(), Exec::default()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    /// Bit-packed GF(2) kernels against the plain reference, on shapes that
    /// straddle word boundaries.
    #[test]
    fn packed_gf2_matches_reference(
        (n, k, m) in (1usize..80, 1usize..80, 1usize..80),
        seed in any::<u64>(),
    ) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a: Vec<Vec<u64>> = (0..n).map(|_| (0..k).map(|_| rng.gen_range(0..2)).collect()).collect();
        let b: Vec<Vec<u64>> = (0..k).map(|_| (0..m).map(|_| rng.gen_range(0..2)).collect()).collect();
        let (ma, mb) = (to_matrix(&a, k, 2), to_matrix(&b, m, 2));
        prop_assert_eq!(to_u64(&ma.mat_mul(&mb).unwrap()), naive_mul(&a, &b, 2));
        prop_assert_eq!(ma.rank(), naive_rank(a, 2));
    }
}

#[test]
fn gf3_product_of_fifty_square_matrices() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(50);
    let a: Vec<Vec<u64>> = (0..50).map(|_| (0..50).map(|_| rng.gen_range(0..3)).collect()).collect();
    let b: Vec<Vec<u64>> = (0..50).map(|_| (0..50).map(|_| rng.gen_range(0..3)).collect()).collect();
    let prod = to_matrix(&a, 50, 3).mat_mul(&to_matrix(&b, 50, 3)).unwrap();
    assert_eq!(to_u64(&prod), naive_mul(&a, &b, 3));
}
