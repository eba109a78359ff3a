use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{Coalition, ValuationOracle, Welfare};
use crate::typed_dp::TypePartition;

/// Default player cap for the exhaustive type check.
pub const DEFAULT_VALIDATE_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeCheck {
    Valid,
    /// `v(C ∪ {i}) != v(C ∪ {j})` although `i` and `j` share a class.
    Violated { i: usize, j: usize, coalition: Coalition, with_i: Welfare, with_j: Welfare },
}

impl TypeCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, TypeCheck::Valid)
    }
}

/// Checks every same-class pair `i < j` against every `C ⊆ N \ {i, j}`.
///
/// Pairs are visited class by class in ascending order and coalitions in
/// ascending bitmask order; the first violation is reported.
pub fn validate_type_partition<O: ValuationOracle + ?Sized>(
    oracle: &O,
    candidate: &TypePartition,
    cap: usize,
) -> Result<TypeCheck> {
    let n = oracle.num_players();
    if n > cap.min(crate::solve::BRUTE_HARD_CAP) {
        return Err(Error::TooManyPlayers { n, cap: cap.min(crate::solve::BRUTE_HARD_CAP) });
    }
    if candidate.num_players() != n {
        return Err(Error::NotAPartition { n, detail: format!("candidate covers {} players", candidate.num_players()) });
    }
    if candidate.classes().iter().all(|c| c.len() < 2) {
        return Ok(TypeCheck::Valid);
    }
    let table = (0u64..1 << n)
        .into_par_iter()
        .map(|m| oracle.value(&Coalition::from_mask(m)))
        .collect::<Result<Vec<Welfare>>>()?;
    for class in candidate.classes() {
        for (a, &i) in class.iter().enumerate() {
            for &j in &class[a + 1..] {
                let rest: Vec<usize> = (0..n).filter(|&p| p != i && p != j).collect();
                for sub in 0u64..1 << rest.len() {
                    let mask = rest
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| sub & (1 << b) != 0)
                        .fold(0usize, |m, (_, &p)| m | 1 << p);
                    let (with_i, with_j) = (table[mask | 1 << i], table[mask | 1 << j]);
                    if with_i != with_j {
                        return Ok(TypeCheck::Violated {
                            i,
                            j,
                            coalition: Coalition::from_mask(mask as u64),
                            with_i,
                            with_j,
                        });
                    }
                }
            }
        }
    }
    Ok(TypeCheck::Valid)
}
