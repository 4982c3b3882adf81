//! Fixed benchmark workloads, shared so that every bench measures the same
//! instances run after run.

use prefrev::analysis::{random_instance, Policy};
use prefrev::{Dims, Mode, MultiArray};

/// The signed `[c f e / b D A]` grid, optimal length 6.
pub fn signed_grid() -> MultiArray {
    MultiArray::from_signed(&[2, 3], Mode::Signed, &[-3, -6, -5, -2, 4, 1]).unwrap()
}

/// Seeded uniform instances of the given shape.
pub fn instances(dims: &[usize], mode: Mode, count: u64) -> Vec<MultiArray> {
    let dims = Dims::new(dims).unwrap();
    (0..count)
        .map(|seed| random_instance(dims, mode, seed, Policy::Uniform))
        .collect()
}
