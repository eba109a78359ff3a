//! Games defined on graphs.

use std::collections::VecDeque;

use crate::error::{invariant, Error, Result};
use crate::graph::{self, Dsu, FlowNetwork, PathGraph};
use crate::model::{Coalition, Welfare};

fn check_endpoints<'a>(
    vertices: usize,
    ends: impl IntoIterator<Item = (usize, usize)> + 'a,
    allow_loops: bool,
) -> Result<()> {
    for (u, v) in ends {
        if u >= vertices || v >= vertices {
            return Err(invariant(format!("edge ({u},{v}) outside {vertices} vertices")));
        }
        if u == v && !allow_loops {
            return Err(invariant(format!("self-loop at vertex {u}")));
        }
    }
    Ok(())
}

fn induced<'a, T: Copy>(
    edges: &'a [(usize, usize, T)],
    coalition: &Coalition,
) -> impl Iterator<Item = (usize, usize, T)> + 'a {
    let c = coalition.clone();
    edges.iter().copied().filter(move |&(u, v, _)| c.contains(u) && c.contains(v))
}

fn map_cap(err: Error, size: usize) -> Error {
    match err {
        Error::TooLarge { cap, .. } => Error::IntractableEvaluation { size, cap },
        other => other,
    }
}

/// Graph game: players are vertices, a coalition earns the total weight of
/// the edges it induces. With `positive_only` this is the GG⁺ restriction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphGame {
    vertices: usize,
    edges: Vec<(usize, usize, i64)>,
    positive_only: bool,
}

impl GraphGame {
    pub fn new(vertices: usize, edges: Vec<(usize, usize, i64)>, positive_only: bool) -> Result<Self> {
        check_endpoints(vertices, edges.iter().map(|e| (e.0, e.1)), false)?;
        if positive_only {
            if let Some(e) = edges.iter().find(|e| e.2 < 0) {
                return Err(invariant(format!("GG+ edge ({},{}) has negative weight {}", e.0, e.1, e.2)));
            }
        }
        Ok(Self { vertices, edges, positive_only })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, i64)] {
        &self.edges
    }

    pub fn is_positive(&self) -> bool {
        self.positive_only
    }

    pub fn has_negative_edge(&self) -> bool {
        self.edges.iter().any(|e| e.2 < 0)
    }

    pub fn value(&self, coalition: &Coalition) -> Welfare {
        induced(&self.edges, coalition).map(|e| e.2).sum()
    }
}

/// Spanning connectivity game: players are edges, a coalition wins iff it
/// contains a spanning tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scg {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Scg {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertices < 2 {
            return Err(invariant("spanning connectivity game needs at least 2 vertices"));
        }
        check_endpoints(vertices, edges.iter().copied(), true)?;
        if !graph::is_connected(vertices, edges.iter().copied()) {
            return Err(Error::Disconnected);
        }
        Ok(Self { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn wins(&self, coalition: &Coalition) -> bool {
        let mut dsu = Dsu::new(self.vertices);
        let joined = coalition.members().filter(|&e| {
            let (u, v) = self.edges[e];
            dsu.union(u, v)
        });
        joined.count() == self.vertices - 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathPlayers {
    /// EPCG: players are the edges.
    Edges,
    /// VPCG: players are the vertices other than `s` and `t`.
    Vertices,
}

/// Path coalitional game: a coalition wins iff it admits an s-t path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathGame {
    graph: PathGraph,
    s: usize,
    t: usize,
    players: PathPlayers,
}

impl PathGame {
    /// In vertex mode an edge joining `s` and `t` directly would make the
    /// empty coalition winning, so it is rejected.
    pub fn new(graph: PathGraph, s: usize, t: usize, players: PathPlayers) -> Result<Self> {
        check_endpoints(graph.vertices, graph.edges.iter().copied(), true)?;
        if s >= graph.vertices || t >= graph.vertices || s == t {
            return Err(invariant(format!("bad terminals s={s}, t={t}")));
        }
        if players == PathPlayers::Vertices {
            let direct = graph
                .edges
                .iter()
                .any(|&(u, v)| (u, v) == (s, t) || (!graph.directed && (u, v) == (t, s)));
            if direct {
                return Err(invariant("vertex path game with a direct s-t edge (empty coalition would win)"));
            }
        }
        Ok(Self { graph, s, t, players })
    }

    pub fn graph(&self) -> &PathGraph {
        &self.graph
    }

    pub fn source(&self) -> usize {
        self.s
    }

    pub fn sink(&self) -> usize {
        self.t
    }

    pub fn players(&self) -> PathPlayers {
        self.players
    }

    pub fn num_players(&self) -> usize {
        match self.players {
            PathPlayers::Edges => self.graph.edges.len(),
            PathPlayers::Vertices => self.graph.vertices - 2,
        }
    }

    /// Vertex controlled by player `p` (vertex mode).
    pub fn vertex_of(&self, p: usize) -> usize {
        let (lo, hi) = (self.s.min(self.t), self.s.max(self.t));
        let mut v = p;
        if v >= lo {
            v += 1;
        }
        if v >= hi {
            v += 1;
        }
        v
    }

    /// Player controlling vertex `v`, if `v` is not a terminal (vertex mode).
    pub fn player_of(&self, v: usize) -> Option<usize> {
        if v == self.s || v == self.t {
            return None;
        }
        Some(v - (v > self.s) as usize - (v > self.t) as usize)
    }

    pub fn wins(&self, coalition: &Coalition) -> bool {
        let n = self.graph.vertices;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (e, &(u, v)) in self.graph.edges.iter().enumerate() {
            let usable = match self.players {
                PathPlayers::Edges => coalition.contains(e),
                PathPlayers::Vertices => [u, v]
                    .iter()
                    .all(|&x| self.player_of(x).is_none_or(|p| coalition.contains(p))),
            };
            if usable {
                adj[u].push(v);
                if !self.graph.directed {
                    adj[v].push(u);
                }
            }
        }
        let mut seen = vec![false; n];
        seen[self.s] = true;
        let mut queue = VecDeque::from([self.s]);
        while let Some(u) = queue.pop_front() {
            if u == self.t {
                return true;
            }
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        false
    }
}

/// Network flow game: players are arcs, a coalition's value is the maximum
/// flow using only its arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfg {
    network: FlowNetwork,
}

impl Nfg {
    pub fn new(network: FlowNetwork) -> Self {
        Self { network }
    }

    pub fn network(&self) -> &FlowNetwork {
        &self.network
    }

    pub fn num_players(&self) -> usize {
        self.network.arcs().len()
    }

    pub fn value(&self, coalition: &Coalition) -> Welfare {
        let arcs = self
            .network
            .arcs()
            .iter()
            .enumerate()
            .map(|(i, &(u, v, c))| (u, v, if coalition.contains(i) { c } else { 0 }));
        let net = FlowNetwork::with_arcs(self.network.vertices(), self.network.source(), self.network.sink(), arcs)
            .expect("restriction of a valid network");
        graph::max_flow(&net).value as Welfare
    }
}

/// Matching game: players are vertices, a coalition's value is the weight of
/// a maximum-weight matching of the subgraph it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingGame {
    vertices: usize,
    edges: Vec<(usize, usize, u64)>,
}

impl MatchingGame {
    pub fn new(vertices: usize, edges: Vec<(usize, usize, u64)>) -> Result<Self> {
        check_endpoints(vertices, edges.iter().map(|e| (e.0, e.1)), false)?;
        Ok(Self { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }

    pub fn value(&self, coalition: &Coalition) -> Result<Welfare> {
        let sub: Vec<_> = induced(&self.edges, coalition).collect();
        graph::max_weight_matching(self.vertices, &sub)
            .map(|m| m.weight as Welfare)
            .map_err(|e| map_cap(e, coalition.len()))
    }
}

/// Independent set game: players are vertices, a coalition's value is the
/// size of a maximum independent set of the subgraph it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isg {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Isg {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        check_endpoints(vertices, edges.iter().copied(), false)?;
        Ok(Self { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Exact value; coalitions larger than the search cap are refused.
    pub fn value(&self, coalition: &Coalition) -> Result<Welfare> {
        if coalition.len() > graph::EXACT_SEARCH_CAP {
            return Err(Error::IntractableEvaluation { size: coalition.len(), cap: graph::EXACT_SEARCH_CAP });
        }
        let sub: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| coalition.contains(u) && coalition.contains(v))
            .collect();
        let set = graph::max_independent_set(self.vertices, &sub).map_err(|e| map_cap(e, coalition.len()))?;
        Ok(set.iter().filter(|&&v| coalition.contains(v)).count() as Welfare)
    }
}
