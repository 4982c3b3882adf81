//! Solvers that rearrange arrays into the standard array.
//!
//! Greedy solvers handle rank-1 lines with guaranteed flip bounds. The exact
//! solvers (BFS, bidirectional BFS, IDA*) work for every rank and return
//! optimal move counts, within a [`SearchBudget`].

mod bfs;
mod bibfs;
mod greedy;
mod heuristic;
mod ida;
mod verify;

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::cayley::Generators;
use crate::error::ModelError;
use crate::model::{MoveSequence, MultiArray, Parity};

pub use bfs::bfs_solve;
pub use bibfs::bidirectional_bfs_solve;
pub use greedy::{greedy_signed_1d, greedy_unsigned_1d};
pub use heuristic::breakpoint_bound;
pub use ida::ida_solve;
pub use verify::{verify, Verification};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub moves: MoveSequence,
    pub optimal: bool,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
}

impl Solution {
    pub fn length(&self) -> usize {
        self.moves.len()
    }
}

/// Limits for exact search. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_depth: Option<u32>,
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_max_depth(mut self, depth: u32) -> Self {
        self.max_depth = Some(depth);
        self
    }

    pub fn with_max_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = Some(nodes);
        self
    }

    pub fn with_max_time(mut self, time: Duration) -> Self {
        self.max_time = Some(time);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetLimit {
    Depth,
    Nodes,
    Time,
}

impl BudgetLimit {
    pub fn as_str(self) -> &'static str {
        match self {
            BudgetLimit::Depth => "max-depth",
            BudgetLimit::Nodes => "max-nodes",
            BudgetLimit::Time => "max-time",
        }
    }
}

/// Why an exact search returned no solution.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchFailure {
    #[error("budget exhausted ({}) after {nodes_expanded} nodes", limit.as_str())]
    BudgetExhausted {
        limit: BudgetLimit,
        nodes_expanded: u64,
    },

    /// The standard array is provably not reachable.
    #[error("standard array unreachable: {proof}")]
    Unreachable {
        proof: UnreachableProof,
        nodes_expanded: u64,
    },

    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnreachableProof {
    /// Every generator is an even permutation of positions but the instance
    /// is odd.
    Parity,
    /// The whole reachable component was enumerated.
    Exhausted { component_size: u64 },
}

impl std::fmt::Display for UnreachableProof {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UnreachableProof::Parity => {
                f.write_str("all generators are even permutations and the instance is odd")
            }
            UnreachableProof::Exhausted { component_size } => {
                write!(
                    f,
                    "reachable component of {component_size} states exhausted"
                )
            }
        }
    }
}

/// Time and node accounting against a budget.
pub(crate) struct BudgetClock {
    budget: SearchBudget,
    start: Instant,
}

impl BudgetClock {
    pub fn start(budget: SearchBudget) -> Self {
        BudgetClock {
            budget,
            start: Instant::now(),
        }
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    pub fn check(&self, nodes: u64, depth: u32) -> Result<(), SearchFailure> {
        let over = |limit| SearchFailure::BudgetExhausted {
            limit,
            nodes_expanded: nodes,
        };
        if self.budget.max_depth.is_some_and(|d| depth > d) {
            return Err(over(BudgetLimit::Depth));
        }
        if self.budget.max_nodes.is_some_and(|n| nodes > n) {
            return Err(over(BudgetLimit::Nodes));
        }
        if self
            .budget
            .max_time
            .is_some_and(|t| self.start.elapsed() > t)
        {
            return Err(over(BudgetLimit::Time));
        }
        Ok(())
    }
}

/// Proven unreachable when every generator preserves id parity and the
/// instance is odd.
pub(crate) fn parity_obstruction(gens: &Generators, ma: &MultiArray) -> bool {
    let dims = gens.dims();
    ma.id_parity() == Parity::Odd
        && gens.moves().iter().all(|&mv| {
            crate::model::move_parity(dims, mv).expect("generator is legal") == Parity::Even
        })
}
