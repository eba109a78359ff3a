//! Optimal coalition structure generation: per-class dispatch and the
//! generic fallbacks.

mod brute;
mod greedy;
mod validate;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

pub use brute::{brute_force_optcs, BRUTE_HARD_CAP, DEFAULT_BRUTE_CAP};
pub use greedy::{greedy_blocks, wvg_greedy_2approx, GreedyRun};
pub use validate::{validate_type_partition, TypeCheck, DEFAULT_VALIDATE_CAP};

use crate::error::{invariant, Error, Result};
use crate::games::{GameInstance, PathPlayers, Threshold};
use crate::graph::{disjoint_paths, max_flow, max_weight_matching, spanning_tree_packing, DisjointMode};
use crate::model::{welfare, Coalition, CoalitionStructure, CountingOracle, ValuationOracle, Welfare};
use crate::typed_dp::{build_type_value_table, reconstruct_structure, solve_typed_dp, TypePartition};

/// Default cap on the number of type-grid cells the dispatcher will fill.
pub const DEFAULT_DP_BUDGET: usize = 10_000_000;

/// Grid size above which callers should warn before running the DP.
pub const DP_WARN_CELLS: usize = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    ExactClass,
    TypedDp,
    Greedy2Approx,
    BruteForce,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ExactClass => "exact-class",
            Method::TypedDp => "typed-dp",
            Method::Greedy2Approx => "greedy-2approx",
            Method::BruteForce => "brute-force",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Guarantee {
    Optimal,
    TwoApprox,
}

impl Guarantee {
    pub fn as_str(self) -> &'static str {
        match self {
            Guarantee::Optimal => "optimal",
            Guarantee::TwoApprox => "2-approx",
        }
    }
}

impl fmt::Display for Guarantee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Characteristic-function evaluations issued by the solver.
    pub oracle_queries: u64,
    /// Partitions visited by exhaustive search, 0 for other methods.
    pub partitions: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub structure: CoalitionStructure,
    pub welfare: Welfare,
    pub method: Method,
    pub guarantee: Guarantee,
    pub stats: Stats,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    Auto,
    Brute,
    Dp,
    Approx,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "brute" => Ok(Strategy::Brute),
            "dp" => Ok(Strategy::Dp),
            "approx" => Ok(Strategy::Approx),
            other => Err(invariant(format!("unknown strategy {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub dp_budget: usize,
    pub brute_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { dp_budget: DEFAULT_DP_BUDGET, brute_cap: DEFAULT_BRUTE_CAP }
    }
}

/// Solves OptCS for `game`.
///
/// `Auto` picks the polynomial algorithm of the class when there is one,
/// then the typed DP (within `dp_budget` cells), then the WVG greedy, then
/// exhaustive search up to `brute_cap` players. Every returned structure has
/// been re-evaluated against the game.
pub fn solve_optcs(game: &GameInstance, strategy: Strategy, config: &SolverConfig) -> Result<SolveResult> {
    let result = match strategy {
        Strategy::Auto => solve_auto(game, config)?,
        Strategy::Brute => brute_force_optcs(game, config.brute_cap)?,
        Strategy::Dp => solve_with_types(game, &game.extract_type_partition()?)?,
        Strategy::Approx => match game {
            GameInstance::Wvg(g) => wvg_greedy_2approx(g),
            other => {
                return Err(Error::Unsolvable {
                    reason: format!("no approximation algorithm is available for class {}", other.class_name()),
                })
            }
        },
    };
    check(game, &result)?;
    Ok(result)
}

/// Typed DP under an explicitly supplied type-partition. The result is
/// optimal only if `types` is a valid type-partition of the oracle.
pub fn solve_with_types<O: ValuationOracle + ?Sized>(oracle: &O, types: &TypePartition) -> Result<SolveResult> {
    let start = Instant::now();
    let counting = CountingOracle::new(oracle);
    let table = build_type_value_table(&counting, types)?;
    let (optimum, tables) = solve_typed_dp(&table);
    let structure = reconstruct_structure(&tables, types)?;
    Ok(SolveResult {
        structure,
        welfare: optimum,
        method: Method::TypedDp,
        guarantee: Guarantee::Optimal,
        stats: Stats { oracle_queries: counting.queries(), partitions: 0, elapsed: start.elapsed() },
    })
}

fn check(game: &GameInstance, result: &SolveResult) -> Result<()> {
    let recomputed = welfare(&result.structure, game)?;
    if recomputed != result.welfare {
        return Err(invariant(format!(
            "{} reported welfare {} but the structure is worth {recomputed}",
            result.method, result.welfare
        )));
    }
    Ok(())
}

fn exact(structure: CoalitionStructure, welfare: Welfare, start: Instant) -> SolveResult {
    SolveResult {
        structure,
        welfare,
        method: Method::ExactClass,
        guarantee: Guarantee::Optimal,
        stats: Stats { oracle_queries: 0, partitions: 0, elapsed: start.elapsed() },
    }
}

/// Appends every player not covered by `blocks` to the last block, or forms
/// the grand coalition when there are no blocks.
fn absorb_leftovers(n: usize, mut blocks: Vec<Coalition>) -> Result<CoalitionStructure> {
    let covered = blocks.iter().fold(Coalition::empty(), |acc, b| acc.union(b));
    let rest = Coalition::grand(n).difference(&covered);
    match blocks.last_mut() {
        Some(last) => *last = last.union(&rest),
        None if !rest.is_empty() => blocks.push(rest),
        None => {}
    }
    CoalitionStructure::new(n, blocks)
}

fn solve_auto(game: &GameInstance, config: &SolverConfig) -> Result<SolveResult> {
    let start = Instant::now();
    let n = game.num_players();
    match game {
        GameInstance::Scg(g) => {
            let packing = spanning_tree_packing(g.vertices(), g.edges())?;
            let blocks = packing.trees.iter().map(|t| t.iter().copied().collect()).collect();
            Ok(exact(absorb_leftovers(n, blocks)?, packing.len() as Welfare, start))
        }
        GameInstance::Path(g) => {
            let mode = match g.players() {
                PathPlayers::Edges => DisjointMode::Edge,
                PathPlayers::Vertices => DisjointMode::Vertex,
            };
            let paths = disjoint_paths(g.graph(), g.source(), g.sink(), mode);
            let blocks = paths
                .iter()
                .map(|p| match mode {
                    DisjointMode::Edge => p.edges.iter().copied().collect(),
                    DisjointMode::Vertex => p.internal_vertices().iter().filter_map(|&v| g.player_of(v)).collect(),
                })
                .collect();
            Ok(exact(absorb_leftovers(n, blocks)?, paths.len() as Welfare, start))
        }
        GameInstance::Nfg(g) => Ok(exact(CoalitionStructure::grand(n), max_flow(g.network()).value as Welfare, start)),
        GameInstance::Matching(g) => {
            let m = max_weight_matching(g.vertices(), g.edges()).map_err(|e| match e {
                Error::TooLarge { size, cap, .. } => Error::IntractableEvaluation { size, cap },
                other => other,
            })?;
            Ok(exact(CoalitionStructure::grand(n), m.weight as Welfare, start))
        }
        GameInstance::Graph(g) if !g.has_negative_edge() => {
            let total = g.edges().iter().map(|e| e.2).sum();
            Ok(exact(CoalitionStructure::grand(n), total, start))
        }
        GameInstance::Isg(_) => Ok(exact(CoalitionStructure::singletons(n), n as Welfare, start)),
        GameInstance::Wvg(_) | GameInstance::Mwvg(_) | GameInstance::Wtsg(_) => {
            let types = game.extract_type_partition()?;
            if types.grid_cells().is_some_and(|c| c <= config.dp_budget) {
                return solve_with_types(game, &types);
            }
            if let GameInstance::Wvg(g) = game {
                return Ok(wvg_greedy_2approx(g));
            }
            brute_or(game, config, || {
                format!(
                    "{} instance has {} player types; the type grid exceeds the budget of {} cells",
                    game.class_name(),
                    types.k(),
                    config.dp_budget
                )
            })
        }
        _ => brute_or(game, config, || hardness_reason(game)),
    }
}

fn brute_or(game: &GameInstance, config: &SolverConfig, reason: impl FnOnce() -> String) -> Result<SolveResult> {
    let n = game.num_players();
    if n <= config.brute_cap.min(BRUTE_HARD_CAP) {
        return brute_force_optcs(game, config.brute_cap);
    }
    Err(Error::Unsolvable {
        reason: format!("{} (n = {n} exceeds the exhaustive-search cap {})", reason(), config.brute_cap),
    })
}

fn hardness_reason(game: &GameInstance) -> String {
    match game {
        GameInstance::Mwc(_) => {
            "OptCS for games given by minimal winning coalitions admits no constant-factor approximation unless P = NP".into()
        }
        GameInstance::Graph(_) => "OptCS for graph games with negative edge weights is NP-hard".into(),
        GameInstance::Threshold(t) => threshold_reason(t),
        GameInstance::Explicit(_) => {
            "a bare valuation oracle gives no player types and no polynomial method applies".into()
        }
        other => format!("no polynomial-time method is known for class {}", other.class_name()),
    }
}

fn threshold_reason(t: &Threshold) -> String {
    match t.inner() {
        GameInstance::Nfg(_) | GameInstance::Matching(_) | GameInstance::Graph(_) => format!(
            "OptCS for threshold {} games is NP-hard and admits no better than 2-approximation unless P = NP",
            t.inner().class_name()
        ),
        inner => format!("OptCS for threshold {} games has no polynomial-time method", inner.class_name()),
    }
}
