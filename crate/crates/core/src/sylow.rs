//! Sylow p-subgroups of 𝔖_n as products of iterated wreath products of C_p.

use std::collections::HashSet;

use thiserror::Error;

use crate::grpalg::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SylowError {
    #[error("closure exceeded {cap} elements")]
    CapExceeded { cap: usize },
}

/// Generators of a p-subgroup of 𝔖_n together with the order they should
/// generate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupGens {
    pub n: usize,
    pub p: u32,
    pub generators: Vec<Permutation>,
    pub expected_order: u64,
}

impl SubgroupGens {
    /// The same subgroup inside 𝔖_m, m ≥ n, fixing the new points.
    pub fn extend(&self, m: usize) -> Self {
        SubgroupGens {
            n: m,
            p: self.p,
            generators: self.generators.iter().map(|g| g.extend(m)).collect(),
            expected_order: self.expected_order,
        }
    }
}

/// Exponent of p in n!: `Σ_{i≥1} ⌊n/pⁱ⌋`.
pub fn legendre_p_part(n: u64, p: u64) -> u32 {
    let mut e = 0;
    let mut q = p;
    while q <= n {
        e += (n / q) as u32;
        q = match q.checked_mul(p) {
            Some(v) => v,
            None => break,
        };
    }
    e
}

/// Generators of the iterated wreath group on `start..start + p^level`.
fn wreath_generators(start: usize, level: u32, p: usize, n: usize, out: &mut Vec<Permutation>) {
    if level == 0 {
        return;
    }
    let block = p.pow(level - 1);
    wreath_generators(start, level - 1, p, n, out);
    let size = block * p;
    let mut images: Vec<u8> = (0..n as u8).collect();
    for x in 0..size {
        images[start + x] = (start + (x + block) % size) as u8;
    }
    out.push(Permutation::new(images).expect("shift is a bijection"));
}

/// A Sylow p-subgroup of 𝔖_n: for each base-p digit `a_i` of n, `a_i`
/// disjoint copies of the iterated wreath group on p^i points, laid out left
/// to right starting from the highest digit.
pub fn sylow_generators(n: usize, p: u32) -> SubgroupGens {
    let pu = p as usize;
    let mut digits = Vec::new();
    let mut m = n;
    while m > 0 {
        digits.push(m % pu);
        m /= pu;
    }
    let mut generators = Vec::new();
    let mut start = 0;
    for level in (0..digits.len()).rev() {
        for _ in 0..digits[level] {
            wreath_generators(start, level as u32, pu, n, &mut generators);
            start += pu.pow(level as u32);
        }
    }
    let expected_order = (p as u64).pow(legendre_p_part(n as u64, p as u64));
    SubgroupGens { n, p, generators, expected_order }
}

/// Every element of the generated subgroup, identity first, in breadth-first
/// order.
pub fn closure(gens: &SubgroupGens, cap: usize) -> Result<Vec<Permutation>, SylowError> {
    let identity = Permutation::identity(gens.n);
    let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut elements = vec![identity];
    let mut head = 0;
    while head < elements.len() {
        let g = elements[head].clone();
        head += 1;
        for s in &gens.generators {
            let h = g.compose(s).expect("generators share the degree");
            if seen.insert(h.clone()) {
                if elements.len() == cap {
                    return Err(SylowError::CapExceeded { cap });
                }
                elements.push(h);
            }
        }
    }
    Ok(elements)
}

/// The full element list of the Sylow p-subgroup of 𝔖_n built above.
pub fn sylow_subgroup(n: usize, p: u32) -> Vec<Permutation> {
    let gens = sylow_generators(n, p);
    closure(&gens, gens.expected_order as usize).expect("wreath construction has the Sylow order")
}
