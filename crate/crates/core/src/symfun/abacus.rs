use super::partition::Partition;

/// Beads on a `p`-runner abacus: the β-numbers of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusConfig {
    /// Distinct bead positions, descending.
    beads: Vec<u32>,
    runners: u32,
}

impl AbacusConfig {
    /// Encode `lambda` with `bead_count` beads (at least its number of parts).
    pub fn new(lambda: &Partition, runners: u32, bead_count: usize) -> Self {
        assert!(bead_count >= lambda.len(), "need at least one bead per part");
        assert!(runners > 0);
        let b = bead_count as u32;
        let beads = (0..bead_count).map(|i| lambda.part(i) + b - 1 - i as u32).collect();
        AbacusConfig { beads, runners }
    }

    /// The uniform encoding used for core computations: `max(parts, n)` beads.
    pub fn for_core(lambda: &Partition, p: u32) -> Self {
        let b = lambda.len().max(lambda.size() as usize);
        Self::new(lambda, p, b)
    }

    pub fn beads(&self) -> &[u32] {
        &self.beads
    }

    pub fn runners(&self) -> u32 {
        self.runners
    }

    pub fn to_partition(&self) -> Partition {
        let b = self.beads.len() as u32;
        let mut sorted = self.beads.clone();
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        Partition::new(sorted.iter().enumerate().map(|(i, &x)| x - (b - 1 - i as u32)).collect())
    }

    /// Slide every bead as far up its runner as it goes. Each one-step slide
    /// removes one rim hook of length `runners`; returns the number of steps.
    pub fn slide_up(&self) -> (AbacusConfig, usize) {
        let p = self.runners;
        let mut per_runner = vec![0u32; p as usize];
        for &x in &self.beads {
            per_runner[(x % p) as usize] += 1;
        }
        let mut beads: Vec<u32> = (0..p)
            .flat_map(|r| (0..per_runner[r as usize]).map(move |k| r + k * p))
            .collect();
        beads.sort_unstable_by(|x, y| y.cmp(x));
        let before: u32 = self.beads.iter().sum();
        let after: u32 = beads.iter().sum();
        let weight = ((before - after) / p) as usize;
        (AbacusConfig { beads, runners: p }, weight)
    }
}

/// The `p`-core of `lambda` and the number of rim `p`-hooks removed.
pub fn p_core(lambda: &Partition, p: u32) -> (Partition, usize) {
    assert!(p >= 1);
    let (core, weight) = AbacusConfig::for_core(lambda, p).slide_up();
    (core.to_partition(), weight)
}

/// The core labelling the principal block of F𝔖_n: `(n mod p)`.
pub fn principal_core(n: u32, p: u32) -> Partition {
    Partition::row(n % p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn round_trip_through_beads() {
        for b in [3, 5, 9] {
            let l = part("3,1,1");
            assert_eq!(AbacusConfig::new(&l, 2, b).to_partition(), l);
        }
    }

    #[test]
    fn core_examples() {
        assert_eq!(p_core(&part("2"), 2), (Partition::empty(), 1));
        assert_eq!(p_core(&part("3,1"), 2), (Partition::empty(), 2));
        assert_eq!(p_core(&part("3,2,1"), 3), (Partition::empty(), 2));
        assert_eq!(p_core(&part("3,2,1"), 2), (part("3,2,1"), 0));
        assert_eq!(p_core(&part("4,2"), 3), (part("4,2"), 0));
    }

    #[test]
    fn principal_labels() {
        assert_eq!(principal_core(8, 2), Partition::empty());
        assert_eq!(principal_core(7, 3), part("1"));
        assert_eq!(principal_core(5, 7), part("5"));
    }
}
