use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

/// Conjugacy classes of 𝔖_n are labelled by the cycle type of their elements.
pub type CycleType = Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct PartitionParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

impl Partition {
    /// Sorts the parts descending and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, or ∅ when n = 0.
    pub fn row(n: u32) -> Self {
        Self::new(vec![n])
    }

    /// `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0) as usize;
        let parts = (0..width).map(|j| self.0.iter().filter(|&&x| x as usize > j).count() as u32).collect();
        Partition(parts)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        (col as u32) < self.part(row)
    }

    /// Cells `(row, col)` in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(i, &l)| (0..l as usize).map(move |j| (i, j))).collect()
    }

    pub fn hook_length(&self, row: usize, col: usize) -> u32 {
        let conj = self.conjugate();
        self.part(row) - col as u32 + conj.part(col) - row as u32 - 1
    }

    /// Multiplicity of each part size: `m[k]` counts parts equal to `k`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.part(0) as usize + 1];
        for &x in &self.0 {
            m[x as usize] += 1;
        }
        m
    }

    /// Sum of contents `col − row` over all cells.
    pub fn content_sum(&self) -> i64 {
        self.cells().iter().map(|&(r, c)| c as i64 - r as i64).sum()
    }

    /// Comma-separated parts, empty string for ∅.
    pub fn to_csv(&self) -> String {
        self.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = String;
    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(format!("{parts:?} is not a partition"));
        }
        Ok(Partition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "{}", self.to_csv())
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = PartitionParseError;

    /// Parses `"3,2,1"`. The empty string, `"∅"` and `"0"` denote the empty
    /// partition. Parts must be positive and weakly decreasing.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "∅" || trimmed == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut offset = 0;
        for piece in s.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            let position = offset + lead;
            let text = piece.trim();
            let value: u32 = text.parse().map_err(|_| PartitionParseError {
                position,
                message: format!("expected a positive integer, found {text:?}"),
            })?;
            if value == 0 {
                return Err(PartitionParseError { position, message: "parts must be positive".into() });
            }
            if let Some(&prev) = parts.last() {
                if value > prev {
                    return Err(PartitionParseError {
                        position,
                        message: format!("part {value} exceeds the previous part {prev}"),
                    });
                }
            }
            parts.push(value);
            offset += piece.len() + 1;
        }
        Ok(Partition(parts))
    }
}

/// All partitions of `n` in increasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn extend(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out.reverse();
    out
}

/// True iff no part occurs `p` or more times.
pub fn is_p_regular(lambda: &Partition, p: u32) -> bool {
    lambda.multiplicities().iter().all(|&m| m < p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_partition_counts() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partitions(4).len(), 5);
        let p3: Vec<String> = partitions(3).iter().map(|p| p.to_csv()).collect();
        assert_eq!(p3, vec!["1,1,1", "2,1", "3"]);
    }

    #[test]
    fn partition_count_matches_euler_recurrence() {
        // p(n) via the pentagonal-number recurrence.
        let mut count = vec![1i64];
        for n in 1..=12i64 {
            let mut total = 0;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                total += sign * count[(n - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    total += sign * count[(n - g2) as usize];
                }
                k += 1;
            }
            count.push(total);
        }
        for n in 0..=12u32 {
            let list = partitions(n);
            assert_eq!(list.len() as i64, count[n as usize], "n = {n}");
            assert!(list.windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(count[10], 42);
    }

    #[test]
    fn p_regularity() {
        // 2 occurs twice, so (2,2,1) is not 2-regular; it is 3-regular.
        assert!(!is_p_regular(&"2,2,1".parse().unwrap(), 2));
        assert!(is_p_regular(&"2,2,1".parse().unwrap(), 3));
        assert!(is_p_regular(&"3,2,1".parse().unwrap(), 2));
        assert!(!is_p_regular(&"1,1".parse().unwrap(), 2));
    }

    #[test]
    fn glaisher_count_for_six() {
        let regular = partitions(6).iter().filter(|l| is_p_regular(l, 2)).count();
        let odd = partitions(6).iter().filter(|l| l.parts().iter().all(|x| x % 2 == 1)).count();
        assert_eq!(regular, odd);
        assert_eq!(regular, 4);
    }

    #[test]
    fn parse_and_print() {
        let l: Partition = "3, 2,1".parse().unwrap();
        assert_eq!(l.parts(), &[3, 2, 1]);
        assert_eq!(l.to_string(), "3,2,1");
        assert_eq!(Partition::empty().to_string(), "∅");
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        let err = "3,x,1".parse::<Partition>().unwrap_err();
        assert_eq!(err.position, 2);
        let err = "1,2".parse::<Partition>().unwrap_err();
        assert_eq!(err.position, 2);
        assert_eq!("2,0".parse::<Partition>().unwrap_err().position, 2);
    }

    #[test]
    fn conjugate_and_hooks() {
        let l: Partition = "3,2,1".parse().unwrap();
        assert_eq!(l.conjugate(), l);
        assert_eq!(l.hook_length(0, 0), 5);
        assert_eq!(l.content_sum(), 0);
        let m: Partition = "4,1".parse().unwrap();
        assert_eq!(m.conjugate().parts(), &[2, 1, 1, 1]);
    }

    #[test]
    fn serde_uses_part_arrays() {
        let l: Partition = "3,1".parse().unwrap();
        let json = serde_json::to_string(&l).unwrap();
        assert_eq!(json, "[3,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
