use super::flow::Residual;

/// An unweighted graph with parallel edges allowed, directed or undirected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub directed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DisjointMode {
    /// Pairwise edge-disjoint paths.
    Edge,
    /// Pairwise internally vertex-disjoint paths.
    Vertex,
}

/// A simple s-t path: its vertex sequence and the indices of the edges used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Path {
    /// Vertices strictly between the endpoints.
    pub fn internal_vertices(&self) -> &[usize] {
        let n = self.vertices.len();
        if n <= 2 {
            &[]
        } else {
            &self.vertices[1..n - 1]
        }
    }
}

/// Maximum set of disjoint s-t paths by unit-capacity max flow followed by
/// flow decomposition. Vertex mode splits every vertex other than `s` and `t`
/// into an in-copy and an out-copy joined by a unit arc.
pub fn disjoint_paths(graph: &PathGraph, s: usize, t: usize, mode: DisjointMode) -> Vec<Path> {
    let n = graph.vertices;
    if s >= n || t >= n || s == t {
        return Vec::new();
    }
    let split = mode == DisjointMode::Vertex;
    let inside = |v: usize| v;
    let outside = |v: usize| if split && v != s && v != t { v + n } else { v };
    let mut res = Residual::new(if split { 2 * n } else { n });
    if split {
        for v in (0..n).filter(|&v| v != s && v != t) {
            res.add(v, v + n, 1, 0);
        }
    }
    // arc ids of the edges, for reading the flow back
    let mut ids = Vec::with_capacity(graph.edges.len());
    for &(u, v) in &graph.edges {
        let id = if graph.directed {
            res.add(outside(u), inside(v), 1, 0)
        } else if split {
            let a = res.add(outside(u), inside(v), 1, 0);
            res.add(outside(v), inside(u), 1, 0);
            a
        } else {
            res.add(u, v, 1, 1)
        };
        ids.push(id);
    }
    let count = res.run(s, t);

    // net flow on each original edge, oriented as (from, to)
    let mut used: Vec<Option<(usize, usize)>> = vec![None; graph.edges.len()];
    for (e, (&(u, v), &id)) in graph.edges.iter().zip(&ids).enumerate() {
        let forward = res.cap[id] == 0;
        used[e] = if graph.directed {
            forward.then_some((u, v))
        } else if split {
            // the reverse copy was added right after the forward pair
            let backward = res.cap[id + 2] == 0;
            match (forward, backward) {
                (true, false) => Some((u, v)),
                (false, true) => Some((v, u)),
                _ => None,
            }
        } else {
            // shared pair starts at (1, 1): (0, 2) is u->v, (2, 0) is v->u
            match res.cap[id] {
                0 => Some((u, v)),
                2 => Some((v, u)),
                _ => None,
            }
        };
    }

    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, dir) in used.iter().enumerate() {
        if let Some((from, _)) = dir {
            out_edges[*from].push(e);
        }
    }
    let mut paths = Vec::with_capacity(count as usize);
    for _ in 0..count {
        match extract_path(&mut out_edges, &used, s, t) {
            Some(p) => paths.push(p),
            None => break,
        }
    }
    debug_assert_eq!(paths.len() as u64, count);
    paths
}

// DFS for a simple s-t path over edges still carrying flow; consumes them.
fn extract_path(
    out_edges: &mut [Vec<usize>],
    used: &[Option<(usize, usize)>],
    s: usize,
    t: usize,
) -> Option<Path> {
    let n = out_edges.len();
    let mut via: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(u) = stack.pop() {
        if u == t {
            break;
        }
        for &e in &out_edges[u] {
            let (_, v) = used[e].unwrap();
            if !seen[v] {
                seen[v] = true;
                via[v] = Some(e);
                stack.push(v);
            }
        }
    }
    if !seen[t] {
        return None;
    }
    let mut vertices = vec![t];
    let mut edges = Vec::new();
    let mut at = t;
    while at != s {
        let e = via[at].unwrap();
        let (from, _) = used[e].unwrap();
        out_edges[from].retain(|&x| x != e);
        edges.push(e);
        vertices.push(from);
        at = from;
    }
    vertices.reverse();
    edges.reverse();
    Some(Path { vertices, edges })
}
