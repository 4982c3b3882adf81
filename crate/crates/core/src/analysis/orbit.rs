//! Orbit of the standard array under all prefix reversals.
//!
//! Breadth-first search from the standard array gives the orbit size, the
//! eccentricity of the standard array and the per-layer histogram. Every
//! generator is an involution, so the Cayley graph is undirected and the
//! orbit is also the set of arrays that can be rearranged into the
//! standard one.
//!
//! Small state spaces use a dense bitset indexed by the perfect rank of each
//! state; anything else falls back to a hash set.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::cayley::Generators;
use crate::error::ModelError;
use crate::frontier::LayeredBfs;
use crate::key::{Codec, PackedCodec, StateKey, WideCodec, PACKED_MAX_CELLS};
use crate::model::{Dims, Mode, MultiArray};
use crate::rank::{rank_codes, state_space_size, AtomicBitSet};
use crate::solve::SearchBudget;

/// Largest state space handled with a dense bitset (512 MiB of bits).
const DENSE_LIMIT: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub dims: Dims,
    pub mode: Mode,
    pub orbit_size: u64,
    pub eccentricity: u32,
    /// `(distance, count)` for every non-empty layer.
    pub histogram: Vec<(u32, u64)>,
    /// `false` when the budget stopped the search early.
    pub complete: bool,
    pub nodes_expanded: u64,
    pub elapsed_ms: u128,
}

struct Progress {
    start: Instant,
    budget: SearchBudget,
}

impl Progress {
    /// Whether another layer may be expanded.
    fn allows(&self, depth: u32, visited: u64) -> bool {
        !(self.budget.max_depth.is_some_and(|d| depth >= d)
            || self.budget.max_nodes.is_some_and(|n| visited > n)
            || self
                .budget
                .max_time
                .is_some_and(|t| self.start.elapsed() > t))
    }
}

pub fn orbit_stats(
    dims: Dims,
    mode: Mode,
    budget: &SearchBudget,
) -> Result<OrbitReport, ModelError> {
    let gens = Generators::new(dims, mode)?;
    let progress = Progress {
        start: Instant::now(),
        budget: *budget,
    };
    let n = dims.cell_count();
    let dense =
        n <= PACKED_MAX_CELLS && state_space_size(n, mode).is_some_and(|size| size <= DENSE_LIMIT);
    let (histogram, complete, expanded) = if dense {
        dense_bfs(&gens, &progress)
    } else if n <= PACKED_MAX_CELLS {
        hashed_bfs(&gens, PackedCodec, &progress)
    } else {
        hashed_bfs(&gens, WideCodec, &progress)
    };
    Ok(OrbitReport {
        dims,
        mode,
        orbit_size: histogram.iter().map(|&(_, c)| c).sum(),
        eccentricity: histogram.last().map_or(0, |&(d, _)| d),
        histogram,
        complete,
        nodes_expanded: expanded,
        elapsed_ms: progress.start.elapsed().as_millis(),
    })
}

fn dense_bfs(gens: &Generators, progress: &Progress) -> (Vec<(u32, u64)>, bool, u64) {
    let codec = PackedCodec;
    let signed = gens.mode().is_signed();
    let n = gens.dims().cell_count();
    let size = state_space_size(n, gens.mode()).expect("dense space fits u64");
    let visited = AtomicBitSet::new(size);
    let root = gens.standard_codes();
    visited.insert(rank_codes(&root, signed));
    let mut frontier = vec![codec.pack(&root)];
    let mut histogram = vec![(0u32, 1u64)];
    let mut total = 1u64;
    let mut expanded = 0u64;
    let mut depth = 0u32;
    while !frontier.is_empty() {
        if !progress.allows(depth, total) {
            return (histogram, false, expanded);
        }
        let next: Vec<u128> = frontier
            .par_chunks(1024)
            .flat_map_iter(|chunk| {
                let mut buf = vec![0u16; n];
                let mut out = Vec::new();
                for key in chunk {
                    codec.unpack(key, &mut buf);
                    for i in gens.distinct_indices() {
                        gens.apply(i, &mut buf);
                        if visited.insert(rank_codes(&buf, signed)) {
                            out.push(codec.pack(&buf));
                        }
                        gens.apply(i, &mut buf);
                    }
                }
                out
            })
            .collect();
        expanded += frontier.len() as u64;
        depth += 1;
        if !next.is_empty() {
            histogram.push((depth, next.len() as u64));
            total += next.len() as u64;
        }
        frontier = next;
    }
    (histogram, true, expanded)
}

fn hashed_bfs<C: Codec>(
    gens: &Generators,
    codec: C,
    progress: &Progress,
) -> (Vec<(u32, u64)>, bool, u64) {
    let mut bfs = LayeredBfs::new(gens, codec, &gens.standard_codes());
    let mut histogram = vec![(0u32, 1u64)];
    loop {
        if !progress.allows(bfs.depth(), bfs.visited()) {
            return (histogram, false, bfs.expanded());
        }
        if !bfs.step() {
            return (histogram, true, bfs.expanded());
        }
        histogram.push((bfs.depth(), bfs.frontier().len() as u64));
    }
}

/// Exact distance to the standard array for every state of its orbit.
/// Limited to packed state spaces (at most 16 cells).
#[derive(Debug, Clone)]
pub struct DistanceTable {
    dims: Dims,
    mode: Mode,
    distances: HashMap<u128, u32>,
}

impl DistanceTable {
    pub fn build(dims: Dims, mode: Mode, budget: &SearchBudget) -> Result<Self, ModelError> {
        if dims.cell_count() > PACKED_MAX_CELLS {
            return Err(ModelError::Dimension(format!(
                "distance tables need at most {PACKED_MAX_CELLS} cells, got {}",
                dims.cell_count()
            )));
        }
        let gens = Generators::new(dims, mode)?;
        let progress = Progress {
            start: Instant::now(),
            budget: *budget,
        };
        let mut bfs = LayeredBfs::new(&gens, PackedCodec, &gens.standard_codes());
        while !bfs.is_exhausted() {
            if !progress.allows(bfs.depth(), bfs.visited()) {
                return Err(ModelError::Dimension(format!(
                    "orbit of {dims} {mode} exceeds the budget"
                )));
            }
            bfs.step();
        }
        Ok(DistanceTable {
            dims,
            mode,
            distances: bfs.into_distances(),
        })
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }

    /// `None` when `ma` is outside the orbit or has other dims/mode.
    pub fn distance(&self, ma: &MultiArray) -> Option<u32> {
        if ma.dims() != self.dims || ma.mode() != self.mode {
            return None;
        }
        match ma.canonical_key() {
            StateKey::Packed(k) => self.distances.get(&k).copied(),
            StateKey::Wide(_) => None,
        }
    }

    pub fn eccentricity(&self) -> u32 {
        self.distances.values().copied().max().unwrap_or(0)
    }

    /// Every orbit member with its distance, in unspecified order.
    pub fn iter(&self) -> impl Iterator<Item = (MultiArray, u32)> + '_ {
        self.distances.iter().map(move |(&k, &d)| {
            let ma = StateKey::Packed(k)
                .decode(self.dims, self.mode)
                .expect("table holds valid states");
            (ma, d)
        })
    }
}
