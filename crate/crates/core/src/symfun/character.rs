use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::partition::{CycleType, Partition};
use super::rimhook::rim_hook_removals;
use super::SymfunError;
use crate::ffla::GFScalar;

type Memo = RwLock<HashMap<(Partition, Partition), BigInt>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule, stripping the largest part of `ρ`
/// first. Values are memoized process-wide; concurrent callers may both
/// compute a value but always insert the same one.
pub fn mn_character(lambda: &Partition, rho: &CycleType) -> Result<BigInt, SymfunError> {
    if lambda.size() != rho.size() {
        return Err(SymfunError::SizeMismatch { lambda: lambda.clone(), rho: rho.clone() });
    }
    Ok(character_unchecked(lambda, rho))
}

fn character_unchecked(lambda: &Partition, rho: &Partition) -> BigInt {
    if rho.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(v) = memo().read().expect("character memo poisoned").get(&key) {
        return v.clone();
    }
    let first = rho.part(0);
    let rest = Partition::new(rho.parts()[1..].to_vec());
    let mut value = BigInt::zero();
    for (mu, leg) in rim_hook_removals(lambda, first) {
        let term = character_unchecked(&mu, &rest);
        if leg % 2 == 0 {
            value += term;
        } else {
            value -= term;
        }
    }
    memo().write().expect("character memo poisoned").entry(key).or_insert_with(|| value.clone());
    value
}

/// `χ^λ(1)`.
pub fn dim_irreducible(lambda: &Partition) -> BigInt {
    character_unchecked(lambda, &Partition::column(lambda.size()))
}

/// `n! / ∏ hook lengths`; independent of the character recursion.
pub fn hook_length_dimension(lambda: &Partition) -> BigInt {
    let hooks: BigInt = lambda.cells().iter().map(|&(i, j)| BigInt::from(lambda.hook_length(i, j))).product();
    factorial(lambda.size()) / hooks
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Order of the centralizer of an element of cycle type `rho`: `∏ k^{m_k} m_k!`.
pub fn centralizer_order(rho: &CycleType) -> BigInt {
    rho.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &m)| BigInt::from(k).pow(m) * factorial(m))
        .product()
}

/// Number of elements of 𝔖_n with cycle type `rho`.
pub fn class_size(rho: &CycleType) -> BigInt {
    factorial(rho.size()) / centralizer_order(rho)
}

/// The central character `|C|·χ^λ(C)/χ^λ(1)` reduced mod `p`. The quotient
/// is formed exactly and must be an integer.
pub fn central_character(lambda: &Partition, class: &CycleType, p: u32) -> Result<GFScalar, SymfunError> {
    let chi = mn_character(lambda, class)?;
    let numerator = class_size(class) * chi;
    let dim = dim_irreducible(lambda);
    let (q, r) = numerator.div_rem(&dim);
    if !r.is_zero() {
        return Err(SymfunError::IntegralityViolation {
            lambda: lambda.clone(),
            class: class.clone(),
            numerator: numerator.to_string(),
            denominator: dim.to_string(),
        });
    }
    Ok(GFScalar::from_bigint(&q, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::partitions;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_and_sign() {
        for rho in partitions(5) {
            assert_eq!(mn_character(&part("5"), &rho).unwrap(), BigInt::one());
        }
        assert_eq!(mn_character(&part("1,1,1"), &part("2,1")).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn size_mismatch() {
        assert!(matches!(mn_character(&part("2,1"), &part("2")), Err(SymfunError::SizeMismatch { .. })));
    }

    #[test]
    fn s3_table_and_column_orthogonality() {
        // Column orthogonality on 𝔖₃ pins the missing entry: with χ^{(2,1)}
        // = (2, 0, x) on classes (1³), (2,1), (3), Σ_λ χ^λ(3)² = 3 forces x² = 1
        // and orthogonality against the identity column forces 1 + 1 + 2x = 0.
        let value = mn_character(&part("2,1"), &part("3")).unwrap();
        assert_eq!(value, BigInt::from(-1));
        let lambdas = partitions(3);
        let total: BigInt = lambdas
            .iter()
            .map(|l| mn_character(l, &part("1,1,1")).unwrap() * mn_character(l, &part("3")).unwrap())
            .sum();
        assert!(total.is_zero());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim_irreducible(&part("6")), BigInt::one());
        assert_eq!(dim_irreducible(&part("3,2,1")), BigInt::from(16));
        assert_eq!(hook_length_dimension(&part("3,2,1")), BigInt::from(16));
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=8 {
            let total: BigInt = partitions(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
        assert_eq!(class_size(&part("2,1,1")), BigInt::from(6));
        assert_eq!(class_size(&part("3,1")), BigInt::from(8));
    }

    #[test]
    fn central_character_examples() {
        let t6 = part("2,1,1,1,1");
        for p in [2, 3, 5, 7] {
            assert_eq!(central_character(&part("6"), &t6, p).unwrap().value(), 15 % p);
            assert!(central_character(&part("2,1"), &part("2,1"), p).unwrap().is_zero());
        }
        assert!(central_character(&part("3,2,1"), &t6, 2).unwrap().is_zero());
    }

    #[test]
    fn transposition_central_character_is_content_sum() {
        for n in 2..=8u32 {
            let mut t = vec![2];
            t.extend(std::iter::repeat(1).take(n as usize - 2));
            let t = Partition::new(t);
            for l in partitions(n) {
                for p in [2, 3, 5, 7] {
                    let expected = l.content_sum().rem_euclid(p as i64) as u32;
                    assert_eq!(central_character(&l, &t, p).unwrap().value(), expected);
                }
            }
        }
    }
}
