//! Result documents and the output verifier.

use optcs::solve::SolveResult;
use optcs::{Coalition, GameInstance, Welfare};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDoc {
    pub oracle_queries: u64,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultFile {
    pub welfare: Welfare,
    /// Sorted player lists, blocks ordered by least member.
    pub structure: Vec<Vec<usize>>,
    pub method: String,
    pub guarantee: String,
    pub stats: StatsDoc,
}

impl ResultFile {
    /// With `timing` off the elapsed time is written as 0 so the output is
    /// byte-stable.
    pub fn new(result: &SolveResult, timing: bool) -> Self {
        let mut structure = result.structure.to_lists();
        structure.sort_by_key(|b| b.first().copied());
        Self {
            welfare: result.welfare,
            structure,
            method: result.method.to_string(),
            guarantee: result.guarantee.to_string(),
            stats: StatsDoc {
                oracle_queries: result.stats.oracle_queries,
                elapsed_ms: if timing { result.stats.elapsed.as_millis() as u64 } else { 0 },
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result documents serialize")
    }
}

/// Checks that `doc.structure` partitions the players of `game` and that
/// its blocks add up to `doc.welfare`.
pub fn verify(game: &GameInstance, doc: &ResultFile) -> Result<(), CliError> {
    let n = game.num_players();
    let mut seen = vec![false; n];
    let mut total: Welfare = 0;
    for block in &doc.structure {
        if block.is_empty() {
            return Err(CliError::Verification("empty block".into()));
        }
        for &p in block {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(CliError::Verification(format!("player {p} is out of range or repeated")));
            }
        }
        total += game.evaluate(&block.iter().copied().collect::<Coalition>())?;
    }
    if let Some(p) = seen.iter().position(|&s| !s) {
        return Err(CliError::Verification(format!("player {p} is not covered")));
    }
    if total != doc.welfare {
        return Err(CliError::Verification(format!("blocks are worth {total}, reported {}", doc.welfare)));
    }
    Ok(())
}
