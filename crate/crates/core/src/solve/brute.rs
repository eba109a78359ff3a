use std::time::Instant;

use rayon::prelude::*;

use super::{Guarantee, Method, SolveResult, Stats};
use crate::error::{Error, Result};
use crate::model::{Coalition, CoalitionStructure, ValuationOracle, Welfare};

/// Default player cap for exhaustive search (Bell(12) ≈ 4.2 million partitions).
pub const DEFAULT_BRUTE_CAP: usize = 12;

/// Hard ceiling on any configured cap; the search tabulates all `2^n` values.
pub const BRUTE_HARD_CAP: usize = 20;

/// Exhaustive search over all set partitions.
///
/// All `2^n` coalition values are queried once up front. Partitions are then
/// enumerated as restricted-growth strings in lexicographic order and the
/// first optimum met is returned.
pub fn brute_force_optcs<O: ValuationOracle + ?Sized>(oracle: &O, cap: usize) -> Result<SolveResult> {
    let start = Instant::now();
    let n = oracle.num_players();
    let cap = cap.min(BRUTE_HARD_CAP);
    if n > cap {
        return Err(Error::TooManyPlayers { n, cap });
    }
    let table = (0u64..1 << n)
        .into_par_iter()
        .map(|m| oracle.value(&Coalition::from_mask(m)))
        .collect::<Result<Vec<Welfare>>>()?;

    let mut search = Search {
        n,
        table: &table,
        blocks: vec![0; n],
        open: 0,
        current: 0,
        labels: vec![0; n],
        best: Welfare::MIN,
        best_labels: vec![0; n],
        count: 0,
    };
    search.run(0);

    let blocks: Vec<Coalition> = (0..n)
        .filter_map(|b| {
            let c: Coalition = (0..n).filter(|&p| search.best_labels[p] == b).collect();
            (!c.is_empty()).then_some(c)
        })
        .collect();
    let welfare = if n == 0 { 0 } else { search.best };
    Ok(SolveResult {
        structure: CoalitionStructure::new(n, blocks)?,
        welfare,
        method: Method::BruteForce,
        guarantee: Guarantee::Optimal,
        stats: Stats { oracle_queries: table.len() as u64, partitions: search.count, elapsed: start.elapsed() },
    })
}

struct Search<'a> {
    n: usize,
    table: &'a [Welfare],
    // masks of the open blocks
    blocks: Vec<usize>,
    open: usize,
    current: Welfare,
    labels: Vec<usize>,
    best: Welfare,
    best_labels: Vec<usize>,
    count: u64,
}

impl Search<'_> {
    fn run(&mut self, player: usize) {
        if player == self.n {
            self.count += 1;
            if self.current > self.best {
                self.best = self.current;
                self.best_labels.copy_from_slice(&self.labels);
            }
            return;
        }
        let bit = 1usize << player;
        // existing blocks first, then a fresh one: lexicographic RGS order
        for b in 0..=self.open {
            let before = self.blocks[b];
            let delta = self.table[before | bit] - self.table[before];
            self.blocks[b] = before | bit;
            self.labels[player] = b;
            self.current += delta;
            let fresh = b == self.open;
            if fresh {
                self.open += 1;
            }
            self.run(player + 1);
            if fresh {
                self.open -= 1;
            }
            self.current -= delta;
            self.blocks[b] = before;
        }
    }
}
