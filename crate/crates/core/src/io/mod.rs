//! Instance files, move notation and result documents.

mod instance;
mod moves;
mod result;

pub use instance::{parse_instance, write_instance};
pub use moves::{parse_moves, write_moves};
pub use result::{
    decide_document, emit_result, orbit_document, parse_result, random_document, solve_document,
    theorem_document, verify_document, Format, Kind, ResultDocument, ShapeRow, FORMAT_VERSION,
};
