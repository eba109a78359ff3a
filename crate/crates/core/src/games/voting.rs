use crate::error::{invariant, Result};
use crate::model::Coalition;

/// Weighted voting game `[q; w_1, ..., w_n]`: a coalition wins iff its total
/// weight reaches the quota.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wvg {
    quota: u64,
    weights: Vec<u64>,
}

impl Wvg {
    pub fn new(quota: u64, weights: Vec<u64>) -> Result<Self> {
        if quota == 0 {
            return Err(invariant("WVG quota must be at least 1"));
        }
        Ok(Self { quota, weights })
    }

    pub fn quota(&self) -> u64 {
        self.quota
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn num_players(&self) -> usize {
        self.weights.len()
    }

    pub fn weight_of(&self, coalition: &Coalition) -> u64 {
        coalition.members().fold(0u64, |acc, p| acc.saturating_add(self.weights[p]))
    }

    pub fn wins(&self, coalition: &Coalition) -> bool {
        self.weight_of(coalition) >= self.quota
    }
}

/// Conjunction of WVGs over a shared player set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mwvg {
    components: Vec<Wvg>,
}

impl Mwvg {
    pub fn new(components: Vec<Wvg>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(invariant("MWVG needs at least one component"));
        };
        let n = first.num_players();
        if let Some(c) = components.iter().find(|c| c.num_players() != n) {
            return Err(invariant(format!(
                "MWVG components disagree on the player count ({} vs {n})",
                c.num_players()
            )));
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[Wvg] {
        &self.components
    }

    pub fn num_players(&self) -> usize {
        self.components[0].num_players()
    }

    pub fn wins(&self, coalition: &Coalition) -> bool {
        self.components.iter().all(|c| c.wins(coalition))
    }

    /// Player `i`'s weights across the components.
    pub fn weight_vector(&self, player: usize) -> Vec<u64> {
        self.components.iter().map(|c| c.weights[player]).collect()
    }
}

/// Simple game given by its minimal winning coalitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwcGame {
    n: usize,
    minimal_winning: Vec<Coalition>,
}

impl MwcGame {
    /// Rejects empty, out-of-range, duplicate and nested coalitions.
    pub fn new(n: usize, minimal_winning: Vec<Coalition>) -> Result<Self> {
        for (i, c) in minimal_winning.iter().enumerate() {
            if c.is_empty() {
                return Err(invariant(format!("minimal winning coalition #{i} is empty")));
            }
            if let Some(p) = c.max().filter(|&p| p >= n) {
                return Err(invariant(format!("minimal winning coalition {c} names player {p} >= {n}")));
            }
        }
        for (i, a) in minimal_winning.iter().enumerate() {
            for b in &minimal_winning[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    let (small, big) = if a.is_subset(b) { (a, b) } else { (b, a) };
                    return Err(invariant(format!(
                        "minimal winning coalition {small} is contained in {big}"
                    )));
                }
            }
        }
        Ok(Self { n, minimal_winning })
    }

    pub fn num_players(&self) -> usize {
        self.n
    }

    pub fn minimal_winning(&self) -> &[Coalition] {
        &self.minimal_winning
    }

    pub fn wins(&self, coalition: &Coalition) -> bool {
        self.minimal_winning.iter().any(|m| m.is_subset(coalition))
    }
}
