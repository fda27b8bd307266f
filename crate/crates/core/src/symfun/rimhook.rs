use super::partition::Partition;

/// A removable rim hook: a connected border strip with no 2×2 square whose
/// removal leaves a partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RimHook {
    /// Cells `(row, col)`, walking the rim from the top-right end.
    pub cells: Vec<(usize, usize)>,
    /// Rows spanned minus one.
    pub leg: usize,
}

impl RimHook {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `lambda` with the hook's cells deleted.
    pub fn remove_from(&self, lambda: &Partition) -> Partition {
        let mut parts = lambda.parts().to_vec();
        for &(r, _) in &self.cells {
            parts[r] -= 1;
        }
        Partition::new(parts)
    }
}

/// Every rim hook of length `r` in `lambda`, one per cell of hook length `r`,
/// ordered by that cell's row then column.
pub fn removable_rim_hooks(lambda: &Partition, r: usize) -> Vec<RimHook> {
    assert!(r >= 1, "hook length must be positive");
    let conj = lambda.conjugate();
    let mut hooks = Vec::new();
    for (i, j) in lambda.cells() {
        let arm = lambda.part(i) as usize - 1 - j;
        let leg = conj.part(j) as usize - 1 - i;
        if arm + leg + 1 != r {
            continue;
        }
        let mut cells = Vec::with_capacity(r);
        let (mut a, mut b) = (i, lambda.part(i) as usize - 1);
        loop {
            cells.push((a, b));
            if a == i + leg && b == j {
                break;
            }
            if lambda.contains_cell(a + 1, b) {
                a += 1;
            } else {
                b -= 1;
            }
        }
        hooks.push(RimHook { cells, leg });
    }
    hooks
}

/// Partitions obtained by removing one rim hook of length `r`, with the
/// hook's leg length. Computed on β-numbers: a bead moving from `x` to
/// `x − r`, the leg being the number of beads strictly between.
pub(crate) fn rim_hook_removals(lambda: &Partition, r: u32) -> Vec<(Partition, u32)> {
    let b = lambda.len() as u32;
    let beta: Vec<u32> = (0..lambda.len()).map(|i| lambda.part(i) + b - 1 - i as u32).collect();
    let mut out = Vec::new();
    for (idx, &x) in beta.iter().enumerate() {
        if x < r || beta.contains(&(x - r)) {
            continue;
        }
        let target = x - r;
        let leg = beta.iter().filter(|&&y| y > target && y < x).count() as u32;
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|u, v| v.cmp(u));
        let parts = moved.iter().enumerate().map(|(i, &y)| y - (b - 1 - i as u32)).collect();
        out.push((Partition::new(parts), leg));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Skew shapes `lambda / mu` of size `r` that are connected and contain no
    /// 2×2 square, found by scanning every `mu ⊆ lambda`.
    fn brute_force_hooks(lambda: &Partition, r: usize) -> BTreeSet<(Partition, usize)> {
        let mut out = BTreeSet::new();
        let n = lambda.size();
        if r as u32 > n {
            return out;
        }
        for mu in crate::symfun::partitions(n - r as u32) {
            if mu.len() > lambda.len() || (0..mu.len()).any(|i| mu.part(i) > lambda.part(i)) {
                continue;
            }
            let cells: Vec<(usize, usize)> =
                lambda.cells().into_iter().filter(|&(i, j)| !mu.contains_cell(i, j)).collect();
            let set: BTreeSet<_> = cells.iter().copied().collect();
            let has_square = cells.iter().any(|&(i, j)| {
                set.contains(&(i + 1, j)) && set.contains(&(i, j + 1)) && set.contains(&(i + 1, j + 1))
            });
            if has_square {
                continue;
            }
            let mut seen = BTreeSet::new();
            let mut stack = vec![cells[0]];
            while let Some((i, j)) = stack.pop() {
                if !seen.insert((i, j)) {
                    continue;
                }
                let mut nbrs = vec![(i + 1, j), (i, j + 1)];
                if i > 0 {
                    nbrs.push((i - 1, j));
                }
                if j > 0 {
                    nbrs.push((i, j - 1));
                }
                stack.extend(nbrs.into_iter().filter(|c| set.contains(c)));
            }
            if seen.len() == cells.len() {
                let rows: BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
                out.insert((mu, rows.len() - 1));
            }
        }
        out
    }

    #[test]
    fn single_cell() {
        let hooks = removable_rim_hooks(&part("1"), 1);
        assert_eq!(hooks.len(), 1);
        assert_eq!(hooks[0].leg, 0);
    }

    #[test]
    fn whole_diagram_hook() {
        let hooks = removable_rim_hooks(&part("2,1"), 3);
        assert_eq!(hooks.len(), 1);
        assert_eq!(hooks[0].leg, 1);
        assert_eq!(hooks[0].remove_from(&part("2,1")), Partition::empty());
    }

    #[test]
    fn matches_skew_shape_scan() {
        for n in 1..=8 {
            for lambda in crate::symfun::partitions(n) {
                for r in 1..=n as usize {
                    let hooks = removable_rim_hooks(&lambda, r);
                    let found: BTreeSet<(Partition, usize)> =
                        hooks.iter().map(|h| (h.remove_from(&lambda), h.leg)).collect();
                    assert_eq!(found.len(), hooks.len());
                    assert_eq!(found, brute_force_hooks(&lambda, r), "{lambda:?} r={r}");
                    let beta: BTreeSet<(Partition, usize)> = rim_hook_removals(&lambda, r as u32)
                        .into_iter()
                        .map(|(m, l)| (m, l as usize))
                        .collect();
                    assert_eq!(found, beta);
                }
            }
        }
        assert_eq!(removable_rim_hooks(&part("3,2,1"), 2).len(), brute_force_hooks(&part("3,2,1"), 2).len());
    }
}
