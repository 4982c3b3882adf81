//! Prefix-reversal rearrangement of 1D, 2D and 3D token arrays.
//!
//! Covers the pancake problem (rank-1, unsigned), the burnt pancake problem
//! (rank-1, signed) and their generalization to rank-2 and rank-3 arrays,
//! where a move reverses a prefix slab of rows, columns or layers.
//!
//! ```
//! use prefrev::{io, solve, SearchBudget};
//!
//! let line = io::parse_instance("signed\n5\ne d A c b\n").unwrap();
//! let sol = solve::bfs_solve(&line, &SearchBudget::unlimited()).unwrap();
//! assert_eq!(sol.moves.to_string(), "H5 H2 H3");
//! ```

pub mod analysis;
mod cayley;
pub mod error;
mod frontier;
pub mod io;
mod key;
pub mod model;
mod rank;
pub mod solve;

pub use cayley::MAX_SEARCH_CELLS;
pub use error::{AnalysisError, ModelError, ParseError};
pub use key::{StateKey, PACKED_MAX_CELLS};
pub use model::{
    move_parity, permutation_parity, Dims, Mode, Move, MoveSequence, MultiArray, Orientation,
    Parity, Token,
};
pub use rank::state_space_size;
pub use solve::{SearchBudget, SearchFailure, Solution};
