//! Seeded random instances for tests and benchmarks.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::games::{ExplicitGame, GraphGame, Isg, MatchingGame, Nfg, Task, Wtsg, Wvg};
use crate::graph::{FlowNetwork, PathGraph};
use crate::model::Welfare;
use crate::typed_dp::TypePartition;

/// WVG whose weights take at most `types` distinct values in `1..=max_weight`.
/// The quota is uniform in `1..=Σw`.
pub fn wvg_with_types<R: Rng + ?Sized>(rng: &mut R, n: usize, types: usize, max_weight: u64) -> Wvg {
    let palette: Vec<u64> = (0..types.max(1)).map(|_| rng.gen_range(1..=max_weight)).collect();
    let weights: Vec<u64> = (0..n).map(|_| *palette.choose(rng).unwrap()).collect();
    let total: u64 = weights.iter().sum();
    Wvg::new(rng.gen_range(1..=total.max(1)), weights).expect("quota is positive")
}

/// WVG with independent weights in `0..=max_weight`.
pub fn wvg<R: Rng + ?Sized>(rng: &mut R, n: usize, max_weight: u64) -> Wvg {
    let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=max_weight)).collect();
    let total: u64 = weights.iter().sum();
    Wvg::new(rng.gen_range(1..=total.max(1)), weights).expect("quota is positive")
}

/// WVG with exactly two weight classes: `n / 2` heavy players and the rest light.
pub fn two_type_wvg(n: usize) -> Wvg {
    let weights: Vec<u64> = (0..n).map(|p| if p % 2 == 0 { 3 } else { 2 }).collect();
    Wvg::new(7, weights).expect("quota is positive")
}

/// WTSG over `skills` skills with up to `tasks` random tasks of weight `1..=9`.
pub fn wtsg<R: Rng + ?Sized>(rng: &mut R, n: usize, skills: usize, tasks: usize) -> Wtsg {
    let subset = |rng: &mut R| -> BTreeSet<usize> { (0..skills).filter(|_| rng.gen_bool(0.5)).collect() };
    let players = (0..n).map(|_| subset(rng)).collect();
    let tasks = (0..tasks)
        .filter_map(|_| {
            let s = subset(rng);
            (!s.is_empty()).then(|| Task { skills: s, weight: rng.gen_range(1..=9) })
        })
        .collect();
    Wtsg::new(skills, players, tasks).expect("skills are in range")
}

/// Monotone explicit game whose values depend only on how many players of
/// each of `k` random classes a coalition holds.
pub fn planted_types<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> (ExplicitGame, TypePartition) {
    let k = k.clamp(1, n.max(1));
    let mut label: Vec<usize> = (0..n).map(|p| if p < k { p } else { rng.gen_range(0..k) }).collect();
    label.shuffle(rng);
    let mut lists = vec![Vec::new(); k];
    for (p, &c) in label.iter().enumerate() {
        lists[c].push(p);
    }
    lists.retain(|c| !c.is_empty());
    let types = TypePartition::from_lists(n, lists).expect("labels cover every player");
    let sizes = types.sizes();

    // g over the type grid, built so that adding a player never lowers it
    let mut strides = vec![1usize; sizes.len()];
    for i in (0..sizes.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * (sizes[i + 1] + 1);
    }
    let cells = strides.first().map_or(1, |s| s * (sizes[0] + 1));
    let mut g: Vec<Welfare> = vec![0; cells];
    for idx in 1..cells {
        let best_below = (0..sizes.len())
            .filter(|&i| (idx / strides[i]) % (sizes[i] + 1) > 0)
            .map(|i| g[idx - strides[i]])
            .max()
            .unwrap_or(0);
        g[idx] = best_below + rng.gen_range(0..=3);
    }
    let game = ExplicitGame::tabulate(n, |c| {
        let t = types.type_of(c);
        g[t.0.iter().zip(&strides).map(|(a, s)| a * s).sum::<usize>()]
    })
    .expect("n within the explicit cap");
    (game, types)
}

/// Flow network with up to `arcs` random arcs of capacity `1..=5`, source 0
/// and sink `vertices - 1`.
pub fn nfg<R: Rng + ?Sized>(rng: &mut R, vertices: usize, arcs: usize) -> Nfg {
    let vertices = vertices.max(2);
    let mut net = FlowNetwork::new(vertices, 0, vertices - 1).expect("distinct terminals");
    for _ in 0..arcs {
        let (u, v) = (rng.gen_range(0..vertices), rng.gen_range(0..vertices));
        if u != v {
            net.add_arc(u, v, rng.gen_range(1..=5)).expect("endpoints in range");
        }
    }
    Nfg::new(net)
}

/// Each vertex pair is an edge with probability `p`, weight `1..=max_weight`.
pub fn matching<R: Rng + ?Sized>(rng: &mut R, vertices: usize, p: f64, max_weight: u64) -> MatchingGame {
    let edges = pairs(rng, vertices, p).into_iter().map(|(u, v)| (u, v, rng.gen_range(1..=max_weight))).collect();
    MatchingGame::new(vertices, edges).expect("simple graph")
}

pub fn isg<R: Rng + ?Sized>(rng: &mut R, vertices: usize, p: f64) -> Isg {
    Isg::new(vertices, pairs(rng, vertices, p)).expect("simple graph")
}

/// Graph game with edge probability `p` and weights in `-spread..=spread`.
pub fn graph_game<R: Rng + ?Sized>(rng: &mut R, vertices: usize, p: f64, spread: i64) -> GraphGame {
    let edges = pairs(rng, vertices, p).into_iter().map(|(u, v)| (u, v, rng.gen_range(-spread..=spread))).collect();
    GraphGame::new(vertices, edges, false).expect("simple graph")
}

/// Connected multigraph: a random spanning tree plus `extra` random edges.
pub fn connected_multigraph<R: Rng + ?Sized>(rng: &mut R, vertices: usize, extra: usize) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..vertices).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..vertices).map(|i| (order[rng.gen_range(0..i)], order[i])).collect();
    if vertices >= 2 {
        for _ in 0..extra {
            let u = rng.gen_range(0..vertices);
            let v = (u + rng.gen_range(1..vertices)) % vertices;
            edges.push((u, v));
        }
    }
    edges
}

/// Digraph where every ordered pair is an arc with probability `p`.
pub fn digraph<R: Rng + ?Sized>(rng: &mut R, vertices: usize, p: f64) -> PathGraph {
    let mut edges = Vec::new();
    for u in 0..vertices {
        for v in 0..vertices {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    PathGraph { vertices, edges, directed: true }
}

/// Simple undirected graph as a list of pairs `u < v`.
pub fn pairs<R: Rng + ?Sized>(rng: &mut R, vertices: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..vertices {
        for v in u + 1..vertices {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}
