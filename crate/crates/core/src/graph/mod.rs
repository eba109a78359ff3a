//! Combinatorial subroutines used by the graph-based game classes.

mod flow;
mod independent;
mod matching;
mod packing;
mod paths;

pub use flow::{max_flow, FlowNetwork, FlowResult};
pub use independent::max_independent_set;
pub use matching::{max_weight_matching, Matching};
pub use packing::{is_spanning_tree, spanning_tree_packing, TreePacking};
pub use paths::{disjoint_paths, DisjointMode, Path, PathGraph};

/// Exact-search cap on the number of vertices of one connected component for
/// maximum-weight matching and maximum independent set.
pub const EXACT_SEARCH_CAP: usize = 24;

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// Splits the vertices `0..n` into connected components of the given edges.
/// Components are listed by least vertex, vertices ascending.
pub(crate) fn components(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Vec<Vec<usize>> {
    let mut dsu = Dsu::new(n);
    for (u, v) in edges {
        dsu.union(u, v);
    }
    let mut by_root: Vec<Option<usize>> = vec![None; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let r = dsu.find(v);
        let slot = *by_root[r].get_or_insert_with(|| {
            out.push(Vec::new());
            out.len() - 1
        });
        out[slot].push(v);
    }
    out
}

pub(crate) fn is_connected(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> bool {
    n <= 1 || components(n, edges).len() == 1
}
