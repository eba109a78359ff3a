use std::collections::{BTreeMap, HashMap};

use super::{components, EXACT_SEARCH_CAP};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub weight: u64,
    /// Indices into the input edge list, ascending.
    pub edges: Vec<usize>,
}

/// Exact maximum-weight matching by memoized search over vertex subsets,
/// run separately on each connected component. Self-loops are ignored.
///
/// Fails with [`Error::TooLarge`] if a component has more than
/// [`EXACT_SEARCH_CAP`] vertices.
pub fn max_weight_matching(vertices: usize, edges: &[(usize, usize, u64)]) -> Result<Matching> {
    let proper: Vec<usize> = (0..edges.len()).filter(|&e| edges[e].0 != edges[e].1).collect();
    let comps = components(vertices, proper.iter().map(|&e| (edges[e].0, edges[e].1)));
    let mut local = vec![0usize; vertices];
    let mut weight = 0;
    let mut chosen = Vec::new();
    for comp in comps.iter().filter(|c| c.len() > 1) {
        if comp.len() > EXACT_SEARCH_CAP {
            return Err(Error::TooLarge { what: "matching component", size: comp.len(), cap: EXACT_SEARCH_CAP });
        }
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
        // heaviest edge per vertex pair
        let mut best: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &e in &proper {
            let (u, v, w) = edges[e];
            if comp.binary_search(&u).is_ok() {
                let key = (local[u].min(local[v]), local[u].max(local[v]));
                let slot = best.entry(key).or_insert(e);
                if w > edges[*slot].2 {
                    *slot = e;
                }
            }
        }
        let mut adj: Vec<Vec<(usize, u64, usize)>> = vec![Vec::new(); comp.len()];
        for (&(a, b), &e) in &best {
            adj[a].push((b, edges[e].2, e));
            adj[b].push((a, edges[e].2, e));
        }
        let mut search = Search { adj: &adj, memo: HashMap::new() };
        let full = (1u32 << comp.len()) - 1;
        weight += search.best(full);
        let mut mask = full;
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            match search.choice(mask) {
                Some((u, e)) => {
                    chosen.push(e);
                    mask &= !(1 << v) & !(1 << u);
                }
                None => mask &= !(1 << v),
            }
        }
    }
    chosen.sort_unstable();
    Ok(Matching { weight, edges: chosen })
}

struct Search<'a> {
    adj: &'a [Vec<(usize, u64, usize)>],
    memo: HashMap<u32, (u64, Option<(usize, usize)>)>,
}

impl Search<'_> {
    // lowest vertex of `mask` is either left unmatched or matched to a neighbour in `mask`
    fn best(&mut self, mask: u32) -> u64 {
        if mask == 0 {
            return 0;
        }
        if let Some(&(w, _)) = self.memo.get(&mask) {
            return w;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = (self.best(rest), None);
        for &(u, w, e) in &self.adj[v] {
            if rest & (1 << u) != 0 {
                let cand = w + self.best(rest & !(1 << u));
                if cand > best.0 {
                    best = (cand, Some((u, e)));
                }
            }
        }
        self.memo.insert(mask, best);
        best.0
    }

    fn choice(&mut self, mask: u32) -> Option<(usize, usize)> {
        self.best(mask);
        self.memo[&mask].1
    }
}
