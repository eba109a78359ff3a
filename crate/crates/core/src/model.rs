//! Players, coalitions, coalition structures and valuation oracles.
//!
//! Players are dense 0-based indices. A [`Coalition`] is a bitset over those
//! indices; the semantic contract is "set of player indices" and the word
//! encoding is an implementation detail.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Value of a coalition or of a coalition structure.
///
/// Every built-in game class has integer values, so welfare arithmetic is
/// plain exact integer arithmetic.
pub type Welfare = i64;

const WORD: usize = 64;

/// A set of player indices.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Coalition {
    // Little-endian words, no trailing zero words.
    words: Vec<u64>,
}

impl Coalition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The full player set `{0, ..., n-1}`.
    pub fn grand(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / WORD];
        if n % WORD != 0 {
            words.push((1u64 << (n % WORD)) - 1);
        }
        Self { words }
    }

    pub fn singleton(player: usize) -> Self {
        let mut c = Self::empty();
        c.insert(player);
        c
    }

    /// Builds a coalition from a 64-bit mask (bit `i` set means player `i`).
    pub fn from_mask(mask: u64) -> Self {
        let mut c = Self { words: vec![mask] };
        c.normalize();
        c
    }

    /// The coalition as a 64-bit mask, if every member is below 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, player: usize) -> bool {
        let (w, b) = (player / WORD, player % WORD);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, player: usize) -> bool {
        let (w, b) = (player / WORD, player % WORD);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.normalize();
        present
    }

    pub fn contains(&self, player: usize) -> bool {
        let (w, b) = (player / WORD, player % WORD);
        self.words.get(w).is_some_and(|word| word & (1 << b) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Members in ascending order.
    pub fn members(&self) -> Members<'_> {
        Members {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn min(&self) -> Option<usize> {
        self.members().next()
    }

    pub fn max(&self) -> Option<usize> {
        let last = self.words.len().checked_sub(1)?;
        Some(last * WORD + (WORD - 1 - self.words[last].leading_zeros() as usize))
    }

    pub fn union(&self, other: &Coalition) -> Coalition {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(&short.words) {
            *w |= o;
        }
        Coalition { words }
    }

    pub fn intersection(&self, other: &Coalition) -> Coalition {
        let mut c = Coalition {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        };
        c.normalize();
        c
    }

    pub fn difference(&self, other: &Coalition) -> Coalition {
        let mut c = Coalition {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        };
        c.normalize();
        c
    }

    pub fn is_subset(&self, other: &Coalition) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Coalition) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members().collect()
    }
}

impl FromIterator<usize> for Coalition {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut c = Coalition::empty();
        for p in iter {
            c.insert(p);
        }
        c
    }
}

impl<const N: usize> From<[usize; N]> for Coalition {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl From<&[usize]> for Coalition {
    fn from(members: &[usize]) -> Self {
        members.iter().copied().collect()
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.members().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Ascending iterator over the members of a [`Coalition`].
pub struct Members<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Members<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

/// A partition of `{0, ..., n-1}` into non-empty, pairwise disjoint blocks.
///
/// Blocks are kept in canonical order: sorted by least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalitionStructure {
    n: usize,
    blocks: Vec<Coalition>,
}

impl CoalitionStructure {
    pub fn new(n: usize, blocks: Vec<Coalition>) -> Result<Self> {
        let not_partition = |detail: String| Error::NotAPartition { n, detail };
        let mut seen = Coalition::empty();
        for block in &blocks {
            if block.is_empty() {
                return Err(not_partition("empty block".into()));
            }
            if let Some(p) = block.max().filter(|&p| p >= n) {
                return Err(not_partition(format!("player {p} out of range")));
            }
            if !block.is_disjoint(&seen) {
                let p = block.intersection(&seen).min().unwrap();
                return Err(not_partition(format!("player {p} in two blocks")));
            }
            seen = seen.union(block);
        }
        if seen.len() != n {
            let p = Coalition::grand(n).difference(&seen).min().unwrap();
            return Err(not_partition(format!("player {p} uncovered")));
        }
        let mut blocks = blocks;
        blocks.sort_by_key(|b| b.min());
        Ok(Self { n, blocks })
    }

    pub fn grand(n: usize) -> Self {
        let blocks = if n == 0 { vec![] } else { vec![Coalition::grand(n)] };
        Self { n, blocks }
    }

    pub fn singletons(n: usize) -> Self {
        Self { n, blocks: (0..n).map(Coalition::singleton).collect() }
    }

    pub fn num_players(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Coalition] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Coalition> {
        self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Blocks as sorted member lists, blocks sorted by least member.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(Coalition::to_vec).collect()
    }
}

/// Query access to a characteristic function `v: 2^N -> Welfare`.
///
/// Implementations must satisfy `v(∅) = 0` and be deterministic. Queries may
/// be issued concurrently.
pub trait ValuationOracle: Sync {
    fn num_players(&self) -> usize;

    fn value(&self, coalition: &Coalition) -> Result<Welfare>;
}

impl<O: ValuationOracle + ?Sized> ValuationOracle for &O {
    fn num_players(&self) -> usize {
        (**self).num_players()
    }

    fn value(&self, coalition: &Coalition) -> Result<Welfare> {
        (**self).value(coalition)
    }
}

/// Social welfare of `structure`: the sum of the block values.
pub fn welfare<O: ValuationOracle + ?Sized>(
    structure: &CoalitionStructure,
    oracle: &O,
) -> Result<Welfare> {
    let n = oracle.num_players();
    if structure.num_players() != n {
        return Err(Error::NotAPartition {
            n,
            detail: format!("structure covers {} players", structure.num_players()),
        });
    }
    structure.blocks().iter().map(|b| oracle.value(b)).sum()
}

/// Wraps an oracle and counts the queries issued through it.
pub struct CountingOracle<O> {
    inner: O,
    queries: AtomicU64,
}

impl<O: ValuationOracle> CountingOracle<O> {
    pub fn new(inner: O) -> Self {
        Self { inner, queries: AtomicU64::new(0) }
    }

    pub fn queries(&self) -> u64 {
        self.queries.load(Ordering::Relaxed)
    }

    pub fn into_inner(self) -> O {
        self.inner
    }
}

impl<O: ValuationOracle> ValuationOracle for CountingOracle<O> {
    fn num_players(&self) -> usize {
        self.inner.num_players()
    }

    fn value(&self, coalition: &Coalition) -> Result<Welfare> {
        self.queries.fetch_add(1, Ordering::Relaxed);
        self.inner.value(coalition)
    }
}

/// An oracle backed by a closure. The closure must return 0 on the empty set.
pub struct FnOracle<F> {
    n: usize,
    f: F,
}

impl<F> FnOracle<F>
where
    F: Fn(&Coalition) -> Welfare + Sync,
{
    pub fn new(n: usize, f: F) -> Self {
        Self { n, f }
    }
}

impl<F> ValuationOracle for FnOracle<F>
where
    F: Fn(&Coalition) -> Welfare + Sync,
{
    fn num_players(&self) -> usize {
        self.n
    }

    fn value(&self, coalition: &Coalition) -> Result<Welfare> {
        if let Some(p) = coalition.max().filter(|&p| p >= self.n) {
            return Err(Error::PlayerOutOfRange { player: p, n: self.n });
        }
        Ok((self.f)(coalition))
    }
}
