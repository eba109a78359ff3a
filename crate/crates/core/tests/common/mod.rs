//! Reference computations written independently of the library code.
#![allow(dead_code)]

use optcs::{Coalition, ValuationOracle, Welfare};

/// Calls `f` with the block masks of every set partition of `0..n`.
pub fn for_each_partition(n: usize, f: &mut impl FnMut(&[u64])) {
    fn go(p: usize, n: usize, blocks: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if p == n {
            f(blocks);
            return;
        }
        for b in 0..blocks.len() {
            blocks[b] |= 1 << p;
            go(p + 1, n, blocks, f);
            blocks[b] &= !(1 << p);
        }
        blocks.push(1 << p);
        go(p + 1, n, blocks, f);
        blocks.pop();
    }
    go(0, n, &mut Vec::new(), f);
}

/// Value of every coalition, indexed by bitmask.
pub fn table_of(oracle: &impl ValuationOracle) -> Vec<Welfare> {
    let n = oracle.num_players();
    (0u64..1 << n).map(|m| oracle.value(&Coalition::from_mask(m)).unwrap()).collect()
}

pub fn max_partition_welfare(n: usize, table: &[Welfare]) -> Welfare {
    let mut best = Welfare::MIN;
    for_each_partition(n, &mut |blocks| {
        best = best.max(blocks.iter().map(|&m| table[m as usize]).sum());
    });
    best
}

/// Optimal welfare together with every partition attaining it.
pub fn all_optima(n: usize, table: &[Welfare]) -> (Welfare, Vec<Vec<u64>>) {
    let mut best = Welfare::MIN;
    let mut arg = Vec::new();
    for_each_partition(n, &mut |blocks| {
        let w: Welfare = blocks.iter().map(|&m| table[m as usize]).sum();
        if w > best {
            best = w;
            arg.clear();
        }
        if w == best {
            arg.push(blocks.to_vec());
        }
    });
    (best, arg)
}

pub fn count_partitions(n: usize) -> u64 {
    let mut c = 0;
    for_each_partition(n, &mut |_| c += 1);
    c
}

/// Edmonds–Karp on a dense capacity matrix.
pub fn max_flow_matrix(mut cap: Vec<Vec<u64>>, s: usize, t: usize) -> u64 {
    let n = cap.len();
    let mut total = 0;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[t] == usize::MAX {
            return total;
        }
        let mut push = u64::MAX;
        let mut v = t;
        while v != s {
            push = push.min(cap[prev[v]][v]);
            v = prev[v];
        }
        let mut v = t;
        while v != s {
            cap[prev[v]][v] -= push;
            cap[v][prev[v]] += push;
            v = prev[v];
        }
        total += push;
    }
}

/// Maximum number of arc-disjoint s-t paths in a directed multigraph.
pub fn unit_max_flow(vertices: usize, arcs: &[(usize, usize)], s: usize, t: usize) -> u64 {
    let mut cap = vec![vec![0; vertices]; vertices];
    for &(u, v) in arcs {
        cap[u][v] += 1;
    }
    max_flow_matrix(cap, s, t)
}

/// Maximum number of internally vertex-disjoint s-t paths in a digraph:
/// vertex `v` becomes `v` (in) and `v + n` (out).
pub fn split_vertex_max_flow(vertices: usize, arcs: &[(usize, usize)], s: usize, t: usize) -> u64 {
    let n = vertices;
    let mut cap = vec![vec![0; 2 * n]; 2 * n];
    for v in 0..n {
        cap[v][v + n] = if v == s || v == t { u64::MAX / 4 } else { 1 };
    }
    for &(u, v) in arcs {
        cap[u + n][v] += 1;
    }
    max_flow_matrix(cap, s, t + n)
}

fn is_spanning_tree(vertices: usize, edges: &[(usize, usize)], chosen: u64) -> bool {
    if chosen.count_ones() as usize + 1 != vertices {
        return false;
    }
    let mut label: Vec<usize> = (0..vertices).collect();
    for (e, &(u, v)) in edges.iter().enumerate() {
        if chosen >> e & 1 == 1 {
            let (a, b) = (label[u], label[v]);
            if a == b {
                return false;
            }
            for l in label.iter_mut() {
                if *l == b {
                    *l = a;
                }
            }
        }
    }
    true
}

/// Largest number of pairwise edge-disjoint spanning trees, by trying every
/// edge subset.
pub fn packing_number(vertices: usize, edges: &[(usize, usize)]) -> usize {
    let m = edges.len();
    let trees: Vec<u64> = (0u64..1 << m).filter(|&s| is_spanning_tree(vertices, edges, s)).collect();
    fn best(trees: &[u64], used: u64, from: usize) -> usize {
        (from..trees.len())
            .filter(|&i| trees[i] & used == 0)
            .map(|i| 1 + best(trees, used | trees[i], i + 1))
            .max()
            .unwrap_or(0)
    }
    best(&trees, 0, 0)
}

pub fn max_cut(vertices: usize, edges: &[(usize, usize, u64)]) -> u64 {
    let mut best = 0;
    for side in 0u64..1 << vertices {
        let cut = edges.iter().filter(|e| (side >> e.0 & 1) != (side >> e.1 & 1)).map(|e| e.2).sum();
        best = best.max(cut);
    }
    best
}

pub fn clique_number(vertices: usize, edges: &[(usize, usize)]) -> usize {
    let adjacent = |u: usize, v: usize| edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
    let mut best = 0;
    for s in 0u64..1 << vertices {
        let members: Vec<usize> = (0..vertices).filter(|&v| s >> v & 1 == 1).collect();
        let clique = members.iter().enumerate().all(|(i, &u)| members[i + 1..].iter().all(|&v| adjacent(u, v)));
        if clique {
            best = best.max(members.len());
        }
    }
    best
}

/// Tries every labelling of the items with `0..k`.
pub fn k_partition_exists(values: &[u64], k: usize) -> bool {
    let total: u64 = values.iter().sum();
    if total % k as u64 != 0 {
        return false;
    }
    let q = total / k as u64;
    let n = values.len();
    let combos = (k as u64).pow(n as u32);
    (0..combos).any(|mut code| {
        let mut sums = vec![0; k];
        for &x in values {
            sums[(code % k as u64) as usize] += x;
            code /= k as u64;
        }
        sums.iter().all(|&s| s == q)
    })
}

/// Size of a largest independent set inside `mask`.
pub fn mis_size(edges: &[(usize, usize)], mask: u64) -> usize {
    let mut best = 0;
    let mut sub = mask;
    loop {
        let independent = edges.iter().all(|&(u, v)| sub >> u & 1 == 0 || sub >> v & 1 == 0);
        if independent {
            best = best.max(sub.count_ones() as usize);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    best
}
