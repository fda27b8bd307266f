use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::{BlockLabel, BlocksError};
use crate::ffla::GFScalar;
use crate::grpalg::{class_sum, GroupAlgebraElement};
use crate::symfun::{central_character, dim_irreducible, factorial, mn_character, partitions, CycleType};

/// Largest degree for the convolution check in F𝔖_n.
pub const MAX_CONVOLUTION_DEGREE: usize = 5;

/// A central element of F𝔖_n given by its value on each conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralIdempotent {
    pub label: BlockLabel,
    /// One entry per cycle type of n.
    pub coeffs: BTreeMap<CycleType, GFScalar>,
}

impl CentralIdempotent {
    pub fn degree(&self) -> usize {
        self.label.members[0].size() as usize
    }

    /// The element `Σ_C coeff_C · (class sum of C)` in F𝔖_n.
    pub fn to_group_algebra(&self, p: u32) -> GroupAlgebraElement {
        let n = self.degree();
        let mut acc = GroupAlgebraElement::zero(n, p);
        for (class, c) in &self.coeffs {
            if !c.is_zero() {
                let term = class_sum(class, p).scale(&BigInt::from(c.value()));
                acc = acc.add(&term).expect("same degree and modulus");
            }
        }
        acc
    }
}

/// Osima's block idempotent: on class C the coefficient is
/// `(1/n!) Σ_{λ ∈ B} χ^λ(1) χ^λ(C)`, computed exactly and reduced mod p.
pub fn osima_idempotent(label: &BlockLabel, p: u32) -> Result<CentralIdempotent, BlocksError> {
    let n = label.members[0].size();
    let mut coeffs = BTreeMap::new();
    for class in partitions(n) {
        let value = osima_coefficient_exact(label, &class)?;
        if value.denom().is_multiple_of(&BigInt::from(p)) {
            return Err(BlocksError::PIntegralityViolation { core: label.core.clone(), class, value: value.to_string(), p });
        }
        let num = GFScalar::from_bigint(value.numer(), p);
        let den = GFScalar::from_bigint(value.denom(), p).inv().expect("denominator is prime to p");
        coeffs.insert(class, num * den);
    }
    Ok(CentralIdempotent { label: label.clone(), coeffs })
}

pub fn osima_idempotents(labels: &[BlockLabel], p: u32) -> Result<Vec<CentralIdempotent>, BlocksError> {
    labels.iter().map(|l| osima_idempotent(l, p)).collect()
}

/// Checks a complete system of block idempotents.
///
/// For every λ ⊢ n, `θ_λ(e_B) = Σ_C e_B(C) θ_λ(C)` must be 1 when λ lies in B
/// and 0 otherwise. For n ≤ [`MAX_CONVOLUTION_DEGREE`] the products
/// `e_B e_B' = δ e_B` and `Σ e_B = 1` are also checked in F𝔖_n itself.
pub fn verify_idempotent_system(idems: &[CentralIdempotent], n: usize, p: u32) -> Result<(), BlocksError> {
    let fail = |msg: String| Err(BlocksError::IdempotentSystem(msg));
    for lambda in partitions(n as u32) {
        for e in idems {
            let mut theta = GFScalar::zero(p);
            for (class, c) in &e.coeffs {
                theta = theta + *c * central_character(&lambda, class, p)?;
            }
            let expected = u32::from(e.label.members.contains(&lambda));
            if theta.value() != expected {
                return fail(format!("θ_{lambda}(e_{}) = {theta}, expected {expected}", e.label.core));
            }
        }
    }
    if n <= MAX_CONVOLUTION_DEGREE {
        let elements: Vec<GroupAlgebraElement> = idems.iter().map(|e| e.to_group_algebra(p)).collect();
        let mut total = GroupAlgebraElement::zero(n, p);
        for (i, a) in elements.iter().enumerate() {
            total = total.add(a).expect("same degree");
            for (j, b) in elements.iter().enumerate() {
                let prod = a.multiply(b).expect("same degree");
                let expected = if i == j { a.clone() } else { GroupAlgebraElement::zero(n, p) };
                if prod != expected {
                    return fail(format!("e_{} e_{} is wrong", idems[i].label.core, idems[j].label.core));
                }
            }
        }
        if total != GroupAlgebraElement::one(n, p) {
            return fail("idempotents do not sum to 1".into());
        }
    }
    Ok(())
}

/// The Osima coefficient of `label` on `class` as an exact rational.
pub(crate) fn osima_coefficient_exact(label: &BlockLabel, class: &CycleType) -> Result<BigRational, BlocksError> {
    let mut numerator = BigInt::zero();
    for lambda in &label.members {
        numerator += dim_irreducible(lambda) * mn_character(lambda, class)?;
    }
    Ok(BigRational::new(numerator, factorial(class.size())))
}
