use std::collections::VecDeque;

use crate::error::{invariant, Result};

/// Directed network with integer capacities; parallel arcs are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowNetwork {
    vertices: usize,
    source: usize,
    sink: usize,
    arcs: Vec<(usize, usize, u64)>,
}

impl FlowNetwork {
    pub fn new(vertices: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= vertices || sink >= vertices {
            return Err(invariant(format!(
                "source {source} / sink {sink} outside {vertices} vertices"
            )));
        }
        if source == sink {
            return Err(invariant("source and sink coincide"));
        }
        Ok(Self { vertices, source, sink, arcs: Vec::new() })
    }

    pub fn with_arcs(
        vertices: usize,
        source: usize,
        sink: usize,
        arcs: impl IntoIterator<Item = (usize, usize, u64)>,
    ) -> Result<Self> {
        let mut net = Self::new(vertices, source, sink)?;
        for (u, v, c) in arcs {
            net.add_arc(u, v, c)?;
        }
        Ok(net)
    }

    /// Adds an arc and returns its index.
    pub fn add_arc(&mut self, from: usize, to: usize, capacity: u64) -> Result<usize> {
        if from >= self.vertices || to >= self.vertices {
            return Err(invariant(format!("arc {from}->{to} outside {} vertices", self.vertices)));
        }
        self.arcs.push((from, to, capacity));
        Ok(self.arcs.len() - 1)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[(usize, usize, u64)] {
        &self.arcs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowResult {
    pub value: u64,
    /// Flow on each arc, indexed like [`FlowNetwork::arcs`].
    pub flow: Vec<u64>,
}

/// Maximum integral s-t flow (Dinic).
pub fn max_flow(net: &FlowNetwork) -> FlowResult {
    let mut res = Residual::new(net.vertices);
    let ids: Vec<usize> = net.arcs.iter().map(|&(u, v, c)| res.add(u, v, c, 0)).collect();
    let value = res.run(net.source, net.sink);
    let flow = ids.iter().zip(&net.arcs).map(|(&id, &(_, _, c))| c - res.cap[id]).collect();
    FlowResult { value, flow }
}

/// Residual graph. Arc `id ^ 1` is the reverse of arc `id`.
pub(crate) struct Residual {
    head: Vec<Vec<usize>>,
    pub(crate) to: Vec<usize>,
    pub(crate) cap: Vec<u64>,
    level: Vec<usize>,
    iter: Vec<usize>,
}

impl Residual {
    pub(crate) fn new(n: usize) -> Self {
        Self { head: vec![Vec::new(); n], to: Vec::new(), cap: Vec::new(), level: vec![0; n], iter: vec![0; n] }
    }

    /// Adds the pair `u -> v` (capacity `forward`) and `v -> u` (capacity
    /// `backward`). An undirected edge is `add(u, v, c, c)`.
    pub(crate) fn add(&mut self, u: usize, v: usize, forward: u64, backward: u64) -> usize {
        let id = self.to.len();
        self.to.push(v);
        self.cap.push(forward);
        self.head[u].push(id);
        self.to.push(u);
        self.cap.push(backward);
        self.head[v].push(id + 1);
        id
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = usize::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.head[u] {
                let v = self.to[id];
                if self.cap[id] > 0 && self.level[v] == usize::MAX {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] != usize::MAX
    }

    fn dfs(&mut self, u: usize, t: usize, limit: u64) -> u64 {
        if u == t {
            return limit;
        }
        while self.iter[u] < self.head[u].len() {
            let id = self.head[u][self.iter[u]];
            let v = self.to[id];
            if self.cap[id] > 0 && self.level[v] == self.level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[id]));
                if pushed > 0 {
                    self.cap[id] -= pushed;
                    self.cap[id ^ 1] += pushed;
                    return pushed;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    pub(crate) fn run(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0u64;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let pushed = self.dfs(s, t, u64::MAX);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }
}
