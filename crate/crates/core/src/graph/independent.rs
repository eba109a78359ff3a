use std::collections::HashMap;

use super::{components, EXACT_SEARCH_CAP};
use crate::error::{Error, Result};

/// Exact maximum independent set, solved per connected component by
/// branching on the lowest vertex with memoization. Returns the vertices in
/// ascending order. Self-loops are ignored.
pub fn max_independent_set(vertices: usize, edges: &[(usize, usize)]) -> Result<Vec<usize>> {
    let proper = || edges.iter().copied().filter(|(u, v)| u != v);
    let mut chosen = Vec::new();
    let mut local = vec![0usize; vertices];
    for comp in components(vertices, proper()) {
        if comp.len() > EXACT_SEARCH_CAP {
            return Err(Error::TooLarge {
                what: "independent-set component",
                size: comp.len(),
                cap: EXACT_SEARCH_CAP,
            });
        }
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
        let mut nbrs = vec![0u32; comp.len()];
        for (u, v) in proper().filter(|(u, _)| comp.binary_search(u).is_ok()) {
            nbrs[local[u]] |= 1 << local[v];
            nbrs[local[v]] |= 1 << local[u];
        }
        let mut search = Search { nbrs: &nbrs, memo: HashMap::new() };
        let mut mask = (1u32 << comp.len()) - 1;
        search.best(mask);
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            if search.takes(mask) {
                chosen.push(comp[v]);
                mask &= !(1 << v) & !nbrs[v];
            } else {
                mask &= !(1 << v);
            }
        }
    }
    chosen.sort_unstable();
    Ok(chosen)
}

struct Search<'a> {
    nbrs: &'a [u32],
    memo: HashMap<u32, (u32, bool)>,
}

impl Search<'_> {
    fn best(&mut self, mask: u32) -> u32 {
        if mask == 0 {
            return 0;
        }
        if let Some(&(size, _)) = self.memo.get(&mask) {
            return size;
        }
        let v = mask.trailing_zeros() as usize;
        let without = mask & !(1 << v);
        let take = 1 + self.best(without & !self.nbrs[v]);
        // an isolated vertex is always taken
        let result = if self.nbrs[v] & without == 0 {
            (take, true)
        } else {
            let skip = self.best(without);
            if take >= skip {
                (take, true)
            } else {
                (skip, false)
            }
        };
        self.memo.insert(mask, result);
        result.0
    }

    fn takes(&mut self, mask: u32) -> bool {
        self.best(mask);
        self.memo[&mask].1
    }
}
