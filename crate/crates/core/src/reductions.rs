//! Instance generators built from hardness reductions, with the welfare
//! relation each construction predicts.

use std::fmt;

use crate::error::{invariant, Error, Result};
use crate::games::{GameInstance, GraphGame, MatchingGame, MwcGame, Nfg, Wvg};
use crate::graph::{is_connected, FlowNetwork};
use crate::model::{Coalition, Welfare};
use crate::solve::brute_force_optcs;

/// Largest source instance for which [`Provenance::expected`] searches exhaustively.
pub const SOURCE_SEARCH_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reduction {
    Partition,
    MaxCut,
    Clique,
    ThresholdNfg,
    ThresholdMatching,
}

impl Reduction {
    pub fn name(self) -> &'static str {
        match self {
            Reduction::Partition => "partition",
            Reduction::MaxCut => "maxcut",
            Reduction::Clique => "clique",
            Reduction::ThresholdNfg => "threshold-nfg",
            Reduction::ThresholdMatching => "threshold-matching",
        }
    }
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The combinatorial instance a game was generated from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Split `values` into `k` parts of equal sum.
    Partition { values: Vec<u64>, k: usize },
    /// Weighted undirected graph for maximum cut.
    MaxCut { vertices: usize, edges: Vec<(usize, usize, u64)> },
    /// Undirected graph for maximum clique.
    Clique { vertices: usize, edges: Vec<(usize, usize)> },
    /// A weighted voting game embedded into another class.
    Wvg(Wvg),
}

/// What the optimal welfare of the generated game is expected to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equals(Welfare),
    LessThan(Welfare),
}

impl Relation {
    pub fn holds(self, optimum: Welfare) -> bool {
        match self {
            Relation::Equals(w) => optimum == w,
            Relation::LessThan(w) => optimum < w,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Equals(w) => write!(f, "welfare = {w}"),
            Relation::LessThan(w) => write!(f, "welfare < {w}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub reduction: Reduction,
    pub source: Source,
}

impl Provenance {
    /// Human-readable form of the predicted relation.
    pub fn describe(&self) -> String {
        match &self.source {
            Source::Partition { k, .. } => format!("yes-instance iff optimal welfare = {k}, otherwise < {k}"),
            Source::MaxCut { vertices, edges } => {
                let w: u64 = edges.iter().map(|e| e.2).sum();
                format!("optimal welfare = {vertices}*({w}+1) - {w} + maxcut")
            }
            Source::Clique { .. } => "optimal welfare = clique number".into(),
            Source::Wvg(_) => "optimal welfare = optimal welfare of the source WVG".into(),
        }
    }

    /// Solves the source instance exhaustively and returns the relation the
    /// generated game's optimum must satisfy.
    pub fn expected(&self) -> Result<Relation> {
        match &self.source {
            Source::Partition { values, k } => {
                check_size("partition items", values.len())?;
                let q = values.iter().sum::<u64>() / *k as u64;
                Ok(if has_k_partition(values, *k, q) {
                    Relation::Equals(*k as Welfare)
                } else {
                    Relation::LessThan(*k as Welfare)
                })
            }
            Source::MaxCut { vertices, edges } => {
                check_size("max-cut vertices", *vertices)?;
                let w: u64 = edges.iter().map(|e| e.2).sum();
                let cut = max_cut(*vertices, edges);
                Ok(Relation::Equals((*vertices as Welfare) * (w as Welfare + 1) - w as Welfare + cut as Welfare))
            }
            Source::Clique { vertices, edges } => {
                check_size("clique vertices", *vertices)?;
                Ok(Relation::Equals(clique_number(*vertices, edges) as Welfare))
            }
            Source::Wvg(g) => {
                Ok(Relation::Equals(brute_force_optcs(&GameInstance::Wvg(g.clone()), SOURCE_SEARCH_CAP)?.welfare))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionInstance {
    pub game: GameInstance,
    pub provenance: Provenance,
}

/// k-Partition to WVG: weights `values`, quota `Σ values / k`.
pub fn gen_wvg_from_partition(values: &[u64], k: usize) -> Result<ReductionInstance> {
    if k < 2 {
        return Err(invariant(format!("k must be at least 2, got {k}")));
    }
    if let Some(i) = values.iter().position(|&a| a == 0) {
        return Err(invariant(format!("partition item #{i} is zero")));
    }
    let sum: u64 = values.iter().sum();
    if sum % k as u64 != 0 {
        return Err(Error::NotDivisible { sum, k });
    }
    let game = Wvg::new(sum / k as u64, values.to_vec())?;
    Ok(ReductionInstance {
        game: GameInstance::Wvg(game),
        provenance: Provenance { reduction: Reduction::Partition, source: Source::Partition { values: values.to_vec(), k } },
    })
}

/// MaxCut to a graph game on `|V| + 2` vertices; the two extra vertices are
/// `x1 = |V|` and `x2 = |V| + 1`.
///
/// Edges of `G` get weight `-w`, every vertex is tied to both extra vertices
/// with weight `W + 1`, and the extra pair carries `-(|V| + 1) W`, where `W`
/// is the total weight. `G` must be connected with positive weights.
pub fn gen_gg_from_maxcut(vertices: usize, edges: &[(usize, usize, u64)]) -> Result<ReductionInstance> {
    if edges.is_empty() {
        return Err(invariant("max-cut source graph needs at least one edge"));
    }
    if let Some(e) = edges.iter().find(|e| e.2 == 0) {
        return Err(invariant(format!("max-cut edge ({},{}) has zero weight", e.0, e.1)));
    }
    if let Some(e) = edges.iter().find(|e| e.0 >= vertices || e.1 >= vertices || e.0 == e.1) {
        return Err(invariant(format!("max-cut edge ({},{}) is a loop or out of range", e.0, e.1)));
    }
    if !is_connected(vertices, edges.iter().map(|e| (e.0, e.1))) {
        return Err(Error::Disconnected);
    }
    let w: i64 = edges.iter().map(|e| e.2 as i64).sum();
    let (x1, x2) = (vertices, vertices + 1);
    let mut out: Vec<(usize, usize, i64)> = edges.iter().map(|&(u, v, c)| (u, v, -(c as i64))).collect();
    for v in 0..vertices {
        out.push((x1, v, w + 1));
        out.push((x2, v, w + 1));
    }
    out.push((x1, x2, -((vertices as i64 + 1) * w)));
    Ok(ReductionInstance {
        game: GameInstance::Graph(GraphGame::new(vertices + 2, out, false)?),
        provenance: Provenance {
            reduction: Reduction::MaxCut,
            source: Source::MaxCut { vertices, edges: edges.to_vec() },
        },
    })
}

/// Player index of the pair `{i, j}` (`i < j`) among the 2-subsets of
/// `0..vertices` listed lexicographically.
pub fn pair_index(vertices: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < vertices);
    i * (2 * vertices - i - 1) / 2 + (j - i - 1)
}

/// Clique to an MWC game whose players are the 2-subsets of `V`.
///
/// `C_i` collects the non-edges at `i`. Two of these sets meet exactly when
/// their vertices are non-adjacent. Some `C_i` may coincide with or contain
/// another; only the inclusion-minimal distinct ones are kept, which leaves
/// the simple game unchanged.
pub fn gen_mwc_from_clique(vertices: usize, edges: &[(usize, usize)]) -> Result<ReductionInstance> {
    let mut adj = vec![vec![false; vertices]; vertices];
    for &(u, v) in edges {
        if u >= vertices || v >= vertices || u == v {
            return Err(invariant(format!("clique edge ({u},{v}) is a loop or out of range")));
        }
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let players = vertices * vertices.saturating_sub(1) / 2;
    let mut sets: Vec<Coalition> = Vec::with_capacity(vertices);
    for i in 0..vertices {
        let c: Coalition = (0..vertices)
            .filter(|&j| j != i && !adj[i][j])
            .map(|j| pair_index(vertices, i.min(j), i.max(j)))
            .collect();
        if c.is_empty() {
            return Err(Error::UniversalVertex(i));
        }
        sets.push(c);
    }
    let minimal: Vec<Coalition> = sets
        .iter()
        .enumerate()
        .filter(|&(i, c)| {
            !sets.iter().enumerate().any(|(j, d)| j != i && d.is_subset(c) && (d != c || j < i))
        })
        .map(|(_, c)| c.clone())
        .collect();
    Ok(ReductionInstance {
        game: GameInstance::Mwc(MwcGame::new(players, minimal)?),
        provenance: Provenance {
            reduction: Reduction::Clique,
            source: Source::Clique { vertices, edges: edges.to_vec() },
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbeddingTarget {
    /// Two vertices, one parallel arc per player with capacity `w_i`.
    ThresholdNfg,
    /// One isolated edge `(2i, 2i + 1)` of weight `w_i` per player.
    ThresholdMatching,
}

/// Embeds `[q; w]` into a threshold game with threshold `q`.
pub fn gen_threshold_embedding(game: &Wvg, target: EmbeddingTarget) -> Result<ReductionInstance> {
    let n = game.num_players();
    let q = game.quota() as Welfare;
    let (inner, reduction) = match target {
        EmbeddingTarget::ThresholdNfg => {
            let net = FlowNetwork::with_arcs(2, 0, 1, game.weights().iter().map(|&w| (0, 1, w)))?;
            (GameInstance::Nfg(Nfg::new(net)), Reduction::ThresholdNfg)
        }
        EmbeddingTarget::ThresholdMatching => {
            let edges = game.weights().iter().enumerate().map(|(i, &w)| (2 * i, 2 * i + 1, w)).collect();
            (GameInstance::Matching(MatchingGame::new(2 * n, edges)?), Reduction::ThresholdMatching)
        }
    };
    Ok(ReductionInstance {
        game: inner.make_threshold(q)?,
        provenance: Provenance { reduction, source: Source::Wvg(game.clone()) },
    })
}

fn check_size(what: &'static str, size: usize) -> Result<()> {
    if size > SOURCE_SEARCH_CAP {
        return Err(Error::TooLarge { what, size, cap: SOURCE_SEARCH_CAP });
    }
    Ok(())
}

fn has_k_partition(values: &[u64], k: usize, q: u64) -> bool {
    fn place(items: &[u64], bins: &mut [u64], q: u64) -> bool {
        let Some((&x, rest)) = items.split_first() else {
            return bins.iter().all(|&b| b == q);
        };
        for b in 0..bins.len() {
            // empty bins are interchangeable
            if bins[b] + x > q || (bins[b] == 0 && bins[..b].contains(&0)) {
                continue;
            }
            bins[b] += x;
            if place(rest, bins, q) {
                return true;
            }
            bins[b] -= x;
        }
        false
    }
    let mut items = values.to_vec();
    items.sort_unstable_by(|a, b| b.cmp(a));
    place(&items, &mut vec![0; k], q)
}

fn max_cut(vertices: usize, edges: &[(usize, usize, u64)]) -> u64 {
    (0u64..1 << vertices)
        .map(|side| edges.iter().filter(|e| (side >> e.0 & 1) != (side >> e.1 & 1)).map(|e| e.2).sum())
        .max()
        .unwrap_or(0)
}

fn clique_number(vertices: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![0u64; vertices];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    (0u64..1 << vertices)
        .filter(|&s| (0..vertices).filter(|&v| s >> v & 1 == 1).all(|v| s & !(1 << v) & !adj[v] == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
