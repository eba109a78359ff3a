//! Dynamic program over coalition-types.
//!
//! Given a valid type-partition `T_1, ..., T_k` of the players, every
//! coalition with `t_i` members of class `T_i` has the same value, so the game
//! collapses onto the grid `0 <= t_i <= |T_i|`. The optimal welfare `f(a)` of a
//! sub-population with `a_i` players of each class satisfies
//!
//! ```text
//! f(0, ..., 0) = 0
//! f(a)         = max { f(a - b) + V(b) : 0 <= b <= a, b != 0 }
//! ```
//!
//! The grid is laid out in mixed radix with `a_1` most significant, so
//! ascending cell index is lexicographic order and `index(a - b) =
//! index(a) - index(b)`. Every `a - b` with `b != 0` therefore precedes `a`,
//! which is all the fill order has to guarantee.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{Coalition, CoalitionStructure, ValuationOracle, Welfare};

/// A partition of the players into classes of strategically equivalent players.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypePartition {
    n: usize,
    classes: Vec<Vec<usize>>,
}

impl TypePartition {
    /// Validates that `classes` partition `{0, ..., n-1}`; members within a
    /// class are sorted ascending, class order is preserved.
    pub fn new(n: usize, classes: Vec<Coalition>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::NotAPartition { n, detail: "no type classes".into() });
        }
        CoalitionStructure::new(n, classes.clone())?;
        Ok(Self { n, classes: classes.iter().map(Coalition::to_vec).collect() })
    }

    pub fn from_lists(n: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(n, classes.into_iter().map(|c| c.into_iter().collect()).collect())
    }

    pub fn num_players(&self) -> usize {
        self.n
    }

    /// Number of classes `k`.
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Number of grid cells `prod(|T_i| + 1)`, or `None` on overflow.
    pub fn grid_cells(&self) -> Option<usize> {
        self.classes.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len() + 1))
    }

    /// The canonical coalition of type `t`: the `t_i` lowest-indexed players
    /// of each class.
    pub fn representative(&self, t: &[usize]) -> Coalition {
        self.classes
            .iter()
            .zip(t)
            .flat_map(|(class, &count)| class[..count].iter().copied())
            .collect()
    }

    /// Number of members of each class inside `coalition`.
    pub fn type_of(&self, coalition: &Coalition) -> TypeVector {
        TypeVector(
            self.classes
                .iter()
                .map(|class| class.iter().filter(|&&p| coalition.contains(p)).count())
                .collect(),
        )
    }

    fn grid(&self) -> Result<Grid> {
        Grid::new(self.sizes())
    }
}

/// Per-class member counts `(t_1, ..., t_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeVector(pub Vec<usize>);

impl TypeVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&t| t == 0)
    }
}

impl<const K: usize> From<[usize; K]> for TypeVector {
    fn from(v: [usize; K]) -> Self {
        TypeVector(v.to_vec())
    }
}

/// Mixed-radix indexing of the grid `0 <= t_i <= sizes[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Grid {
    sizes: Vec<usize>,
    strides: Vec<usize>,
    cells: usize,
}

impl Grid {
    fn new(sizes: Vec<usize>) -> Result<Self> {
        let mut strides = vec![0; sizes.len()];
        let mut cells = 1usize;
        for i in (0..sizes.len()).rev() {
            strides[i] = cells;
            cells = cells.checked_mul(sizes[i] + 1).ok_or(Error::TooLarge {
                what: "type grid",
                size: usize::MAX,
                cap: usize::MAX,
            })?;
        }
        Ok(Self { sizes, strides, cells })
    }

    fn index(&self, t: &[usize]) -> Option<usize> {
        if t.len() != self.sizes.len() || t.iter().zip(&self.sizes).any(|(a, s)| a > s) {
            return None;
        }
        Some(t.iter().zip(&self.strides).map(|(a, s)| a * s).sum())
    }

    fn vector(&self, mut index: usize) -> Vec<usize> {
        self.strides
            .iter()
            .map(|s| {
                let d = index / s;
                index %= s;
                d
            })
            .collect()
    }

    fn top(&self) -> usize {
        self.cells - 1
    }
}

/// Value of every coalition-type, `V(t)` for the whole grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeValueTable {
    grid: Grid,
    values: Vec<Welfare>,
}

impl TypeValueTable {
    /// Builds a table from explicit values in lexicographic grid order.
    pub fn from_values(sizes: Vec<usize>, values: Vec<Welfare>) -> Result<Self> {
        let grid = Grid::new(sizes)?;
        if values.len() != grid.cells {
            return Err(Error::Invariant(format!(
                "type table needs {} values, got {}",
                grid.cells,
                values.len()
            )));
        }
        if values[0] != 0 {
            return Err(Error::Invariant("value of the empty coalition-type must be 0".into()));
        }
        Ok(Self { grid, values })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.grid.sizes
    }

    pub fn cells(&self) -> usize {
        self.grid.cells
    }

    pub fn get(&self, t: &[usize]) -> Option<Welfare> {
        self.grid.index(t).map(|i| self.values[i])
    }
}

/// Queries the oracle once per grid cell on the canonical representative.
pub fn build_type_value_table<O: ValuationOracle + ?Sized>(
    oracle: &O,
    types: &TypePartition,
) -> Result<TypeValueTable> {
    if types.num_players() != oracle.num_players() {
        return Err(Error::NotAPartition {
            n: oracle.num_players(),
            detail: format!("type-partition covers {} players", types.num_players()),
        });
    }
    let grid = types.grid()?;
    let values = (0..grid.cells)
        .into_par_iter()
        .map(|idx| oracle.value(&types.representative(&grid.vector(idx))))
        .collect::<Result<Vec<_>>>()?;
    if values[0] != 0 {
        return Err(Error::Invariant(format!("oracle returned {} on the empty coalition", values[0])));
    }
    Ok(TypeValueTable { grid, values })
}

/// One back-pointer: the optimum at `a` takes `block` and continues at `predecessor = a - block`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpStep {
    pub predecessor: TypeVector,
    pub block: TypeVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Step {
    predecessor: usize,
    block: usize,
}

/// The filled value table `Q` and reconstruction table `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpTables {
    grid: Grid,
    q: Vec<Welfare>,
    r: Vec<Option<Step>>,
}

impl DpTables {
    pub fn sizes(&self) -> &[usize] {
        &self.grid.sizes
    }

    /// `f(a_1, ..., a_k)`.
    pub fn value(&self, a: &[usize]) -> Option<Welfare> {
        self.grid.index(a).map(|i| self.q[i])
    }

    /// The back-pointer at `a`; `None` at the origin.
    pub fn step(&self, a: &[usize]) -> Option<DpStep> {
        let step = self.r[self.grid.index(a)?]?;
        Some(DpStep {
            predecessor: TypeVector(self.grid.vector(step.predecessor)),
            block: TypeVector(self.grid.vector(step.block)),
        })
    }

    pub fn optimum(&self) -> Welfare {
        self.q[self.grid.top()]
    }

    /// Overwrites a back-pointer. Only useful for exercising the corruption
    /// checks in [`reconstruct_structure`].
    #[doc(hidden)]
    pub fn set_step(&mut self, a: &[usize], step: Option<DpStep>) {
        let idx = self.grid.index(a).expect("cell on the grid");
        self.r[idx] = step.map(|s| Step {
            predecessor: self.grid.index(&s.predecessor.0).unwrap_or(usize::MAX),
            block: self.grid.index(&s.block.0).unwrap_or(usize::MAX),
        });
    }

    /// Block type vectors along the `R`-chain from the top cell, in the order
    /// they are peeled off.
    pub fn chain(&self) -> Result<Vec<TypeVector>> {
        let corrupt = |msg: String| Error::CorruptTables(msg);
        let mut blocks = Vec::new();
        let mut at = self.grid.top();
        while at != 0 {
            let step = self.r[at].ok_or_else(|| {
                corrupt(format!("missing back-pointer at {:?}", self.grid.vector(at)))
            })?;
            if step.block == 0 || step.block > at || step.predecessor != at - step.block {
                return Err(corrupt(format!(
                    "back-pointer at {:?} does not subtract its block",
                    self.grid.vector(at)
                )));
            }
            // a - b must not borrow across digits
            let (a, b) = (self.grid.vector(at), self.grid.vector(step.block));
            if a.iter().zip(&b).any(|(x, y)| y > x) {
                return Err(corrupt(format!("block {b:?} exceeds {a:?}")));
            }
            blocks.push(TypeVector(b));
            at = step.predecessor;
        }
        Ok(blocks)
    }
}

/// Runs the recursion over the whole grid. Returns `f(|T_1|, ..., |T_k|)`.
///
/// Among maximizing blocks the lexicographically smallest `b` is kept.
pub fn solve_typed_dp(table: &TypeValueTable) -> (Welfare, DpTables) {
    let grid = table.grid.clone();
    let k = grid.sizes.len();
    let mut q = vec![Welfare::MIN; grid.cells];
    let mut r = vec![None; grid.cells];
    q[0] = 0;

    let mut a = vec![0usize; k];
    let mut b = vec![0usize; k];
    for a_idx in 1..grid.cells {
        increment(&mut a, &grid.sizes);

        b.iter_mut().for_each(|d| *d = 0);
        let mut b_idx = 0usize;
        let mut best = Welfare::MIN;
        let mut best_b = 0usize;
        // b runs over {b <= a} in lexicographic order, skipping b = 0
        while let Some(next) = next_below(&mut b, &a, &grid.strides, b_idx) {
            b_idx = next;
            let rest = a_idx - b_idx;
            debug_assert!(q[rest] != Welfare::MIN || rest == 0, "cell {rest} read before fill");
            let candidate = q[rest] + table.values[b_idx];
            if candidate > best {
                best = candidate;
                best_b = b_idx;
            }
        }
        q[a_idx] = best;
        r[a_idx] = Some(Step { predecessor: a_idx - best_b, block: best_b });
    }
    (q[grid.top()], DpTables { grid, q, r })
}

fn increment(digits: &mut [usize], limits: &[usize]) {
    for i in (0..digits.len()).rev() {
        if digits[i] < limits[i] {
            digits[i] += 1;
            return;
        }
        digits[i] = 0;
    }
}

fn next_below(b: &mut [usize], a: &[usize], strides: &[usize], mut idx: usize) -> Option<usize> {
    for i in (0..b.len()).rev() {
        if b[i] < a[i] {
            b[i] += 1;
            return Some(idx + strides[i]);
        }
        idx -= b[i] * strides[i];
        b[i] = 0;
    }
    None
}

/// Materializes the optimal structure recorded in `tables`.
pub fn reconstruct_structure(tables: &DpTables, types: &TypePartition) -> Result<CoalitionStructure> {
    if tables.sizes() != types.sizes().as_slice() {
        return Err(Error::CorruptTables("tables were built for different class sizes".into()));
    }
    assign_blocks(&tables.chain()?, types)
}

/// Turns a list of block type vectors into concrete coalitions, handing out
/// the players of each class in ascending index order.
pub fn assign_blocks(chain: &[TypeVector], types: &TypePartition) -> Result<CoalitionStructure> {
    let sizes = types.sizes();
    let mut next = vec![0usize; types.k()];
    let mut blocks = Vec::with_capacity(chain.len());
    for block in chain {
        if block.0.len() != types.k() {
            return Err(Error::CorruptTables(format!("block {:?} has the wrong arity", block.0)));
        }
        if block.is_zero() {
            return Err(Error::CorruptTables("empty block in chain".into()));
        }
        let mut members = Coalition::empty();
        for (i, &count) in block.0.iter().enumerate() {
            if next[i] + count > sizes[i] {
                return Err(Error::CorruptTables(format!("chain overdraws class {i}")));
            }
            for &p in &types.classes()[i][next[i]..next[i] + count] {
                members.insert(p);
            }
            next[i] += count;
        }
        blocks.push(members);
    }
    if next != sizes {
        return Err(Error::CorruptTables(format!(
            "chain covers {next:?} of class sizes {sizes:?}"
        )));
    }
    CoalitionStructure::new(types.num_players(), blocks)
}
