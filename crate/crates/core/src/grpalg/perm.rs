use std::fmt;

use super::GrpalgError;
use crate::symfun::{CycleType, Partition};

/// A permutation of {1..n}, stored 0-based.
///
/// Products are read left to right: `g.compose(&h)` applies `g` first and
/// then `h`, matching right actions `x^(gh) = (x^g)^h`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

pub(crate) fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Lehmer rank of 0-based one-line images.
#[inline]
pub(crate) fn lehmer_rank_of(images: &[u8]) -> u64 {
    let n = images.len();
    let mut rank = 0u64;
    for i in 0..n {
        let smaller = images[i + 1..].iter().filter(|&&y| y < images[i]).count() as u64;
        rank = rank * (n - i) as u64 + smaller;
    }
    rank
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// From 0-based images.
    pub fn new(images: Vec<u8>) -> Result<Self, GrpalgError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n || std::mem::replace(&mut seen[x as usize], true) {
                return Err(GrpalgError::NotABijection(images.iter().map(|&v| v as u32 + 1).collect()));
            }
        }
        Ok(Permutation { images })
    }

    /// From one-line notation with 1-based images, e.g. `[3, 1, 2]`.
    pub fn from_one_line(images: &[u32]) -> Result<Self, GrpalgError> {
        if images.iter().any(|&x| x == 0 || x > 255) {
            return Err(GrpalgError::NotABijection(images.to_vec()));
        }
        Self::new(images.iter().map(|&x| (x - 1) as u8).collect())
    }

    /// From disjoint cycles with 1-based points.
    pub fn from_cycles(cycles: &[Vec<u32>], n: usize) -> Result<Self, GrpalgError> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x == 0 || x as usize > n || y == 0 || y as usize > n || used[x as usize - 1] {
                    return Err(GrpalgError::BadCycle(cycle.clone()));
                }
                used[x as usize - 1] = true;
                images[x as usize - 1] = (y - 1) as u8;
            }
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition `s_i = (i i+1)` for `1 ≤ i < n`.
    pub fn coxeter(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not a generator of S_{n}");
        let mut images: Vec<u8> = (0..n as u8).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// The transposition of 1-based points `a` and `b`.
    pub fn transposition(a: usize, b: usize, n: usize) -> Self {
        let mut images: Vec<u8> = (0..n as u8).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based images.
    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of the 0-based point `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self, GrpalgError> {
        if self.degree() != other.degree() {
            return Err(GrpalgError::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.then(other))
    }

    #[inline]
    pub(crate) fn then(&self, other: &Self) -> Self {
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `h⁻¹ g h`.
    pub fn conjugate_by(&self, h: &Self) -> Self {
        h.inverse().then(self).then(h)
    }

    /// Cycles as 0-based point lists, each starting at its smallest point,
    /// including fixed points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The same permutation on {1..m}, fixing the new points.
    pub fn extend(&self, m: usize) -> Self {
        assert!(m >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..m as u8);
        Permutation { images }
    }

    /// Rank in `0..n!` by Lehmer code; the identity has rank 0.
    pub fn lehmer_rank(&self) -> u64 {
        lehmer_rank_of(&self.images)
    }

    pub fn lehmer_unrank(rank: u64, n: usize) -> Result<Self, GrpalgError> {
        let total = factorial_u64(n);
        if rank >= total {
            return Err(GrpalgError::RankOutOfRange { rank, n });
        }
        let mut remaining: Vec<u8> = (0..n as u8).collect();
        let mut images = Vec::with_capacity(n);
        let mut r = rank;
        for i in 0..n {
            let f = factorial_u64(n - 1 - i);
            let d = (r / f) as usize;
            r %= f;
            images.push(remaining.remove(d));
        }
        Ok(Permutation { images })
    }

    /// Indices `i` (1-based generator labels) with `self = s_{i_1} s_{i_2} ⋯`,
    /// from bubble sort; the word is reduced.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut one_line = self.images.clone();
        let mut word = Vec::new();
        let n = one_line.len();
        for end in (1..n).rev() {
            for k in 0..end {
                if one_line[k] > one_line[k + 1] {
                    one_line.swap(k, k + 1);
                    word.push(k + 1);
                }
            }
        }
        word
    }

    /// One-line notation, 1-based: `"3 1 2"`.
    pub fn one_line(&self) -> String {
        self.images.iter().map(|&x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")
    }

    /// Cycle notation, 1-based, fixed points omitted: `"(1 3 2)"`; `"()"` for
    /// the identity.
    pub fn cycle_notation(&self) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| format!("({})", c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
        if parts.is_empty() {
            "()".into()
        } else {
            parts.concat()
        }
    }

    /// Parses one-line notation `"3 1 2"`.
    pub fn parse_one_line(s: &str) -> Result<Self, GrpalgError> {
        let images = s
            .split_whitespace()
            .map(|t| t.parse::<u32>().map_err(|_| GrpalgError::Parse(format!("bad image {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_one_line(&images)
    }

    /// Parses cycle notation `"(1 3 2)(4 5)"` on `n` points.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self, GrpalgError> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(GrpalgError::Parse(format!("expected '(' in {s:?}")));
            };
            let Some(close) = body.find(')') else {
                return Err(GrpalgError::Parse(format!("unclosed cycle in {s:?}")));
            };
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| GrpalgError::Parse(format!("bad point {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(&cycles, n)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

/// The k-cycle `(1 k k−1 … 2)` in 𝔖_n: sends 1 ↦ k and j ↦ j−1 for 2 ≤ j ≤ k.
pub fn descending_cycle(k: usize, n: usize) -> Result<Permutation, GrpalgError> {
    if k < 2 || k > n {
        return Err(GrpalgError::CycleLengthOutOfRange { k, n });
    }
    let mut images: Vec<u8> = (0..n as u8).collect();
    images[0] = (k - 1) as u8;
    for j in 1..k {
        images[j] = (j - 1) as u8;
    }
    Ok(Permutation { images })
}
