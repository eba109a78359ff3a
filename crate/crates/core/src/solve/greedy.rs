use std::time::Instant;

use super::{Guarantee, Method, SolveResult, Stats};
use crate::games::Wvg;
use crate::model::{Coalition, CoalitionStructure, Welfare};

/// Blocks cut by the greedy prefix rule, in cut order, with their winning flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyRun {
    pub blocks: Vec<Coalition>,
    pub winning: Vec<bool>,
}

impl GreedyRun {
    /// Number of blocks `c`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Every block except possibly the last one wins.
    pub fn certificate_holds(&self) -> bool {
        let c = self.winning.len();
        c == 0 || self.winning[..c - 1].iter().all(|&w| w)
    }

    pub fn welfare(&self) -> Welfare {
        self.winning.iter().filter(|&&w| w).count() as Welfare
    }
}

/// Sorts players by weight (descending, stable), caps weights at the quota
/// and cuts the order into consecutive blocks, closing each block as soon as
/// it reaches the quota. The tail, if light, forms the last block.
pub fn greedy_blocks(game: &Wvg) -> GreedyRun {
    let q = game.quota();
    let mut order: Vec<usize> = (0..game.num_players()).collect();
    order.sort_by(|&a, &b| game.weights()[b].cmp(&game.weights()[a]));

    let mut blocks = Vec::new();
    let mut winning = Vec::new();
    let mut current = Coalition::empty();
    let mut weight = 0u64;
    for p in order {
        current.insert(p);
        weight += game.weights()[p].min(q);
        if weight >= q {
            blocks.push(std::mem::take(&mut current));
            winning.push(true);
            weight = 0;
        }
    }
    if !current.is_empty() {
        blocks.push(current);
        winning.push(false);
    }
    GreedyRun { blocks, winning }
}

/// Polynomial-time 2-approximation for weighted voting games.
pub fn wvg_greedy_2approx(game: &Wvg) -> SolveResult {
    let start = Instant::now();
    let run = greedy_blocks(game);
    let welfare = run.welfare();
    let structure = CoalitionStructure::new(game.num_players(), run.blocks).expect("greedy blocks partition the players");
    SolveResult {
        structure,
        welfare,
        method: Method::Greedy2Approx,
        guarantee: Guarantee::TwoApprox,
        stats: Stats { oracle_queries: 0, partitions: 0, elapsed: start.elapsed() },
    }
}
