use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::perm::{descending_cycle, factorial_u64, Permutation};
use super::GrpalgError;
use crate::par::Exec;
use crate::symfun::{class_size, CycleType};

/// An element of the group algebra R𝔖_n with R = ℤ (`modulus == 0`) or
/// GF(p) (`modulus == p`).
///
/// Coefficients are keyed by Lehmer rank; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    modulus: u32,
    coeffs: BTreeMap<u64, BigInt>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize, modulus: u32) -> Self {
        GroupAlgebraElement { n, modulus, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize, modulus: u32) -> Self {
        Self::basis(&Permutation::identity(n), modulus)
    }

    pub fn basis(g: &Permutation, modulus: u32) -> Self {
        Self::from_terms(g.degree(), modulus, [(g.clone(), BigInt::one())])
    }

    pub fn from_terms(n: usize, modulus: u32, terms: impl IntoIterator<Item = (Permutation, BigInt)>) -> Self {
        let mut out = Self::zero(n, modulus);
        for (g, c) in terms {
            assert_eq!(g.degree(), n, "term of degree {} in an element of degree {n}", g.degree());
            out.add_term(g.lehmer_rank(), c);
        }
        out
    }

    fn normalize(&self, c: BigInt) -> BigInt {
        if self.modulus == 0 {
            c
        } else {
            c.mod_floor(&BigInt::from(self.modulus))
        }
    }

    fn add_term(&mut self, rank: u64, c: BigInt) {
        let entry = self.coeffs.entry(rank).or_insert_with(BigInt::zero);
        let sum = std::mem::take(entry) + c;
        let sum = if self.modulus == 0 { sum } else { sum.mod_floor(&BigInt::from(self.modulus)) };
        if sum.is_zero() {
            self.coeffs.remove(&rank);
        } else {
            *self.coeffs.get_mut(&rank).expect("present") = sum;
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, g: &Permutation) -> BigInt {
        self.coeff_at_rank(g.lehmer_rank())
    }

    pub fn coeff_at_rank(&self, rank: u64) -> BigInt {
        self.coeffs.get(&rank).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms as `(Lehmer rank, coefficient)`, ascending by rank.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coeffs.iter().map(|(&r, c)| (r, c))
    }

    /// Dense coefficient vector of length n!.
    pub fn to_dense(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); factorial_u64(self.n) as usize];
        for (&r, c) in &self.coeffs {
            v[r as usize] = c.clone();
        }
        v
    }

    /// Reduce ℤ coefficients mod `p`.
    pub fn reduce(&self, p: u32) -> Self {
        assert!(self.modulus == 0 || self.modulus == p);
        let mut out = Self::zero(self.n, p);
        for (&r, c) in &self.coeffs {
            out.add_term(r, c.clone());
        }
        out
    }

    fn check_compatible(&self, other: &Self) -> Result<(), GrpalgError> {
        if self.n != other.n {
            return Err(GrpalgError::DegreeMismatch { left: self.n, right: other.n });
        }
        if self.modulus != other.modulus {
            return Err(GrpalgError::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, GrpalgError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (&r, c) in &other.coeffs {
            out.add_term(r, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GrpalgError> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero(self.n, self.modulus);
        for (&r, c) in &self.coeffs {
            let v = self.normalize(c * factor);
            if !v.is_zero() {
                out.coeffs.insert(r, v);
            }
        }
        out
    }

    /// Convolution `(ab)(g) = Σ_{xy = g} a(x) b(y)`.
    pub fn multiply(&self, other: &Self) -> Result<Self, GrpalgError> {
        self.multiply_with(other, Exec::default())
    }

    /// Convolution, split over the support of `self`.
    pub fn multiply_with(&self, other: &Self, exec: Exec) -> Result<Self, GrpalgError> {
        self.check_compatible(other)?;
        let right: Vec<(Permutation, &BigInt)> = other
            .coeffs
            .iter()
            .map(|(&r, c)| (Permutation::lehmer_unrank(r, self.n).expect("stored ranks are valid"), c))
            .collect();
        let left: Vec<(u64, &BigInt)> = self.terms().collect();
        let n = self.n;
        let modulus = self.modulus;
        let partial = |&(rx, cx): &(u64, &BigInt)| {
            let x = Permutation::lehmer_unrank(rx, n).expect("stored ranks are valid");
            let mut acc = GroupAlgebraElement::zero(n, modulus);
            for (y, cy) in &right {
                acc.add_term(x.then(y).lehmer_rank(), cx * *cy);
            }
            acc
        };
        Ok(exec.map_reduce(
            &left,
            || GroupAlgebraElement::zero(n, modulus),
            partial,
            |a, b| if a.support_len() >= b.support_len() { a.merge(b) } else { b.merge(a) },
        ))
    }

    fn merge(mut self, other: Self) -> Self {
        for (r, c) in other.coeffs {
            self.add_term(r, c);
        }
        self
    }

    /// The same element viewed in R𝔖_m, m ≥ n, via the embedding fixing the
    /// new points.
    pub fn extend(&self, m: usize) -> Self {
        let mut out = Self::zero(m, self.modulus);
        for (&r, c) in &self.coeffs {
            let g = Permutation::lehmer_unrank(r, self.n).expect("stored ranks are valid").extend(m);
            out.coeffs.insert(g.lehmer_rank(), c.clone());
        }
        out
    }
}

/// The Dynkin–Specht–Wever element `ω_n = (1 − c_n)(1 − c_{n−1})⋯(1 − c_2)`.
pub fn omega(n: usize, modulus: u32) -> Result<GroupAlgebraElement, GrpalgError> {
    if n < 2 {
        return Err(GrpalgError::CycleLengthOutOfRange { k: n, n });
    }
    let one = GroupAlgebraElement::one(n, modulus);
    let mut acc = one.clone();
    for k in (2..=n).rev() {
        let c = GroupAlgebraElement::basis(&descending_cycle(k, n)?, modulus);
        acc = acc.multiply_with(&one.sub(&c)?, Exec::Sequential)?;
    }
    Ok(acc)
}

/// All elements of 𝔖_n with the given cycle type.
pub fn class_elements(class: &CycleType) -> impl Iterator<Item = Permutation> {
    let n = class.size() as usize;
    let mut lengths = class.parts().to_vec();
    let mut images = vec![0u8; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    fill_cycles(&mut lengths, &mut images, &mut used, &mut out);
    debug_assert_eq!(num_bigint::BigInt::from(out.len()), class_size(class));
    out.into_iter()
}

/// Each permutation is produced once: the next cycle always starts at the
/// smallest unused point, and only distinct lengths are tried for it.
fn fill_cycles(lengths: &mut Vec<u32>, images: &mut [u8], used: &mut [bool], out: &mut Vec<Permutation>) {
    let Some(start) = used.iter().position(|&u| !u) else {
        out.push(Permutation::new(images.to_vec()).expect("cycles form a bijection"));
        return;
    };
    let mut tried = Vec::new();
    for idx in 0..lengths.len() {
        let len = lengths[idx];
        if tried.contains(&len) {
            continue;
        }
        tried.push(len);
        lengths.remove(idx);
        used[start] = true;
        let mut cycle = vec![start];
        extend_cycle(len as usize, &mut cycle, lengths, images, used, out);
        used[start] = false;
        lengths.insert(idx, len);
    }
}

fn extend_cycle(
    len: usize,
    cycle: &mut Vec<usize>,
    lengths: &mut Vec<u32>,
    images: &mut [u8],
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) {
    if cycle.len() == len {
        for k in 0..len {
            images[cycle[k]] = cycle[(k + 1) % len] as u8;
        }
        fill_cycles(lengths, images, used, out);
        return;
    }
    for x in cycle[0] + 1..used.len() {
        if used[x] {
            continue;
        }
        used[x] = true;
        cycle.push(x);
        extend_cycle(len, cycle, lengths, images, used, out);
        cycle.pop();
        used[x] = false;
    }
}

/// The class sum `Σ_{g ∈ C} g`.
pub fn class_sum(class: &CycleType, modulus: u32) -> GroupAlgebraElement {
    let n = class.size() as usize;
    GroupAlgebraElement::from_terms(n, modulus, class_elements(class).map(|g| (g, BigInt::one())))
}
