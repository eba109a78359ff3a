use crate::error::{invariant, Error, Result};
use crate::model::{Coalition, ValuationOracle, Welfare};

/// Largest player count accepted for a fully tabulated game.
pub const EXPLICIT_CAP: usize = 20;

/// A game given by its full value table, indexed by coalition bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitGame {
    n: usize,
    values: Vec<Welfare>,
}

impl ExplicitGame {
    pub fn new(n: usize, values: Vec<Welfare>) -> Result<Self> {
        if n > EXPLICIT_CAP {
            return Err(Error::TooLarge { what: "explicit value table players", size: n, cap: EXPLICIT_CAP });
        }
        if values.len() != 1 << n {
            return Err(invariant(format!("value table for {n} players needs {} entries, got {}", 1u64 << n, values.len())));
        }
        if values[0] != 0 {
            return Err(invariant("value of the empty coalition must be 0"));
        }
        Ok(Self { n, values })
    }

    /// Builds the table by evaluating `f` on every coalition.
    pub fn tabulate(n: usize, f: impl Fn(&Coalition) -> Welfare) -> Result<Self> {
        if n > EXPLICIT_CAP {
            return Err(Error::TooLarge { what: "explicit value table players", size: n, cap: EXPLICIT_CAP });
        }
        Self::new(n, (0u64..1 << n).map(|m| f(&Coalition::from_mask(m))).collect())
    }

    pub fn num_players(&self) -> usize {
        self.n
    }

    /// Values indexed by bitmask.
    pub fn values(&self) -> &[Welfare] {
        &self.values
    }

    pub fn value(&self, coalition: &Coalition) -> Welfare {
        self.values[coalition.to_mask().expect("coalition within the player range") as usize]
    }

    /// First pair `(C, C ∪ {i})` with `v(C) > v(C ∪ {i})`, if any.
    pub fn monotonicity_violation(&self) -> Option<(Coalition, usize)> {
        for mask in 0..self.values.len() {
            for i in 0..self.n {
                let bigger = mask | (1 << i);
                if bigger != mask && self.values[mask] > self.values[bigger] {
                    return Some((Coalition::from_mask(mask as u64), i));
                }
            }
        }
        None
    }
}

impl ValuationOracle for ExplicitGame {
    fn num_players(&self) -> usize {
        self.n
    }

    fn value(&self, coalition: &Coalition) -> Result<Welfare> {
        if let Some(p) = coalition.max().filter(|&p| p >= self.n) {
            return Err(Error::PlayerOutOfRange { player: p, n: self.n });
        }
        Ok(ExplicitGame::value(self, coalition))
    }
}
