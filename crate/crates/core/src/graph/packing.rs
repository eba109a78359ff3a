use std::collections::VecDeque;

use super::{is_connected, Dsu};
use crate::error::{Error, Result};

/// Pairwise edge-disjoint spanning trees, each a sorted list of edge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreePacking {
    pub trees: Vec<Vec<usize>>,
}

impl TreePacking {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }
}

/// `|V| - 1` edges, connected, acyclic.
pub fn is_spanning_tree(vertices: usize, edges: &[(usize, usize)], tree: &[usize]) -> bool {
    if vertices == 0 || tree.len() != vertices - 1 {
        return false;
    }
    let mut dsu = Dsu::new(vertices);
    tree.iter().all(|&e| {
        let (u, v) = edges[e];
        dsu.union(u, v)
    })
}

/// Maximum packing of edge-disjoint spanning trees of a connected multigraph.
///
/// For a candidate `k` the edges are inserted one at a time into `k` forests;
/// an edge that closes a cycle in every forest triggers a shortest
/// augmenting-path search over edge swaps (matroid partition). `k` trees exist
/// iff all `k` forests end up spanning.
pub fn spanning_tree_packing(vertices: usize, edges: &[(usize, usize)]) -> Result<TreePacking> {
    if vertices == 0 || !is_connected(vertices, edges.iter().copied()) {
        return Err(Error::Disconnected);
    }
    if vertices == 1 {
        // a single vertex has exactly one spanning tree, the empty one
        return Ok(TreePacking { trees: vec![Vec::new()] });
    }
    let upper = edges.iter().filter(|(u, v)| u != v).count() / (vertices - 1);
    for k in (1..=upper).rev() {
        if let Some(trees) = partition_into_forests(vertices, edges, k) {
            if trees.iter().all(|t| t.len() == vertices - 1) {
                return Ok(TreePacking { trees });
            }
        }
    }
    unreachable!("a connected graph has a spanning tree")
}

struct Forests<'a> {
    vertices: usize,
    edges: &'a [(usize, usize)],
    // forest index of each edge
    owner: Vec<Option<usize>>,
    k: usize,
}

impl Forests<'_> {
    fn members(&self, forest: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(move |&e| self.owner[e] == Some(forest))
    }

    /// Edges on the forest path between the endpoints of `edge`, or `None`
    /// when the endpoints are in different trees of the forest.
    fn cycle(&self, forest: usize, edge: usize) -> Option<Vec<usize>> {
        let (s, t) = self.edges[edge];
        if s == t {
            return Some(Vec::new());
        }
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertices];
        for e in self.members(forest) {
            let (u, v) = self.edges[e];
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        let mut via: Vec<Option<(usize, usize)>> = vec![None; self.vertices];
        let mut seen = vec![false; self.vertices];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(v, e) in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    via[v] = Some((u, e));
                    queue.push_back(v);
                }
            }
        }
        if !seen[t] {
            return None;
        }
        let mut path = Vec::new();
        let mut at = t;
        while let Some((prev, e)) = via[at] {
            path.push(e);
            at = prev;
        }
        Some(path)
    }

    /// Tries to make room for `edge`; returns false if no augmenting path exists.
    fn insert(&mut self, edge: usize) -> bool {
        let m = self.edges.len();
        // parent[x] = (y, f): x leaves its forest so that y can enter forest f
        let mut parent: Vec<Option<usize>> = vec![None; m];
        let mut labelled = vec![false; m];
        labelled[edge] = true;
        let mut queue = VecDeque::from([edge]);
        while let Some(x) = queue.pop_front() {
            for f in 0..self.k {
                if self.owner[x] == Some(f) {
                    continue;
                }
                match self.cycle(f, x) {
                    None => {
                        self.augment(x, f, &parent);
                        return true;
                    }
                    Some(cycle) => {
                        for y in cycle {
                            if !labelled[y] {
                                labelled[y] = true;
                                parent[y] = Some(x);
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn augment(&mut self, mut x: usize, mut forest: usize, parent: &[Option<usize>]) {
        loop {
            let previous = self.owner[x];
            self.owner[x] = Some(forest);
            match (parent[x], previous) {
                (Some(y), Some(f)) => {
                    x = y;
                    forest = f;
                }
                _ => return,
            }
        }
    }
}

fn partition_into_forests(vertices: usize, edges: &[(usize, usize)], k: usize) -> Option<Vec<Vec<usize>>> {
    let mut forests = Forests { vertices, edges, owner: vec![None; edges.len()], k };
    let mut placed = 0;
    for e in 0..edges.len() {
        if edges[e].0 != edges[e].1 && forests.insert(e) {
            placed += 1;
            if placed == k * (vertices - 1) {
                break;
            }
        }
    }
    (placed == k * (vertices - 1)).then(|| (0..k).map(|f| forests.members(f).collect()).collect())
}
