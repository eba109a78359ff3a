//! Optimal coalition structure generation.
//!
//! Given a coalitional game in a compact representation, find a partition of
//! the players that maximizes the sum of coalition values. The crate offers
//! a dynamic program over player types, exact polynomial algorithms for the
//! graph-based classes, a greedy 2-approximation for weighted voting games,
//! and an exhaustive search used as a reference.
//!
//! ```
//! use optcs::games::{GameInstance, Wvg};
//! use optcs::solve::{solve_optcs, SolverConfig, Strategy};
//!
//! let game = GameInstance::Wvg(Wvg::new(4, vec![3, 3, 1, 1]).unwrap());
//! let result = solve_optcs(&game, Strategy::Auto, &SolverConfig::default()).unwrap();
//! assert_eq!(result.welfare, 2);
//! assert_eq!(result.structure.to_lists(), vec![vec![0, 2], vec![1, 3]]);
//! ```

pub mod error;
pub mod games;
pub mod graph;
pub mod model;
pub mod reductions;
pub mod sample;
pub mod solve;
pub mod typed_dp;

pub use error::{Error, Result};
pub use games::GameInstance;
pub use model::{welfare, Coalition, CoalitionStructure, CountingOracle, FnOracle, ValuationOracle, Welfare};
pub use solve::{brute_force_optcs, solve_optcs, SolveResult, SolverConfig, Strategy};
pub use typed_dp::{TypePartition, TypeVector};
