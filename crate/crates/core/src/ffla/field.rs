use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Largest supported modulus (exclusive). Entries of odd-characteristic
/// matrices are stored one byte each.
pub const MAX_MODULUS: u32 = 256;

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// True when `p` is a prime the matrix kernels accept.
pub fn is_supported_prime(p: u32) -> bool {
    p < MAX_MODULUS && is_prime(p)
}

pub(crate) fn assert_supported(p: u32) {
    assert!(is_supported_prime(p), "modulus {p} is not a supported prime (< {MAX_MODULUS})");
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let mut acc = 1u64 % p as u64;
    let mut b = (base % p) as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u64;
        }
        b = b * b % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// An element of the prime field GF(p).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GFScalar {
    value: u32,
    p: u32,
}

impl GFScalar {
    pub fn new(value: i64, p: u32) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        GFScalar { value: value.rem_euclid(p as i64) as u32, p }
    }

    pub fn from_bigint(value: &BigInt, p: u32) -> Self {
        let r = value.mod_floor(&BigInt::from(p));
        GFScalar { value: r.to_u32().expect("residue fits"), p }
    }

    pub fn zero(p: u32) -> Self {
        Self::new(0, p)
    }

    pub fn one(p: u32) -> Self {
        Self::new(1, p)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Self> {
        (self.value != 0).then(|| GFScalar { value: inv_mod(self.value, self.p), p: self.p })
    }

    fn same_field(self, other: Self) {
        assert_eq!(self.p, other.p, "scalars from different fields");
    }
}

impl fmt::Debug for GFScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

impl fmt::Display for GFScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for GFScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.same_field(rhs);
        GFScalar { value: (self.value + rhs.value) % self.p, p: self.p }
    }
}

impl Sub for GFScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.same_field(rhs);
        GFScalar { value: (self.value + self.p - rhs.value) % self.p, p: self.p }
    }
}

impl Mul for GFScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.same_field(rhs);
        GFScalar { value: ((self.value as u64 * rhs.value as u64) % self.p as u64) as u32, p: self.p }
    }
}

impl Neg for GFScalar {
    type Output = Self;
    fn neg(self) -> Self {
        GFScalar { value: (self.p - self.value) % self.p, p: self.p }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_below_twenty() {
        let ps: Vec<u32> = (0..20).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(!is_supported_prime(257));
    }

    #[test]
    fn scalar_arithmetic() {
        let a = GFScalar::new(-1, 7);
        assert_eq!(a.value(), 6);
        assert_eq!((a * a).value(), 1);
        assert_eq!((a + GFScalar::one(7)).value(), 0);
        for v in 1..7 {
            let x = GFScalar::new(v, 7);
            assert_eq!((x * x.inv().unwrap()).value(), 1);
        }
        assert!(GFScalar::zero(5).inv().is_none());
        assert_eq!(GFScalar::from_bigint(&BigInt::from(-15), 4 + 1).value(), 0);
    }
}
