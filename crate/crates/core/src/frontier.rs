//! Level-synchronous breadth-first expansion.
//!
//! Each layer is expanded in parallel against a read-only visited map, then
//! merged sequentially in frontier order. The discovered layers, their order
//! and the node counts are therefore independent of the worker count.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::cayley::Generators;
use crate::key::Codec;

const CHUNK: usize = 512;

pub(crate) struct LayeredBfs<'g, C: Codec> {
    gens: &'g Generators,
    codec: C,
    dist: HashMap<C::Key, u32>,
    frontier: Vec<C::Key>,
    depth: u32,
    expanded: u64,
}

impl<'g, C: Codec> LayeredBfs<'g, C> {
    pub fn new(gens: &'g Generators, codec: C, root: &[u16]) -> Self {
        let key = codec.pack(root);
        let mut dist = HashMap::new();
        dist.insert(key.clone(), 0);
        LayeredBfs {
            gens,
            codec,
            dist,
            frontier: vec![key],
            depth: 0,
            expanded: 0,
        }
    }

    /// Depth of the current frontier.
    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn frontier(&self) -> &[C::Key] {
        &self.frontier
    }

    pub fn visited(&self) -> u64 {
        self.dist.len() as u64
    }

    pub fn expanded(&self) -> u64 {
        self.expanded
    }

    pub fn distance(&self, key: &C::Key) -> Option<u32> {
        self.dist.get(key).copied()
    }

    pub fn is_exhausted(&self) -> bool {
        self.frontier.is_empty()
    }

    pub fn into_distances(self) -> HashMap<C::Key, u32> {
        self.dist
    }

    /// Expands the frontier by one layer. Returns `false` once the
    /// component is exhausted.
    pub fn step(&mut self) -> bool {
        if self.frontier.is_empty() {
            return false;
        }
        let gens = self.gens;
        let codec = &self.codec;
        let dist = &self.dist;
        let n = gens.dims().cell_count();
        let candidates: Vec<Vec<C::Key>> = self
            .frontier
            .par_chunks(CHUNK)
            .map(|chunk| {
                let mut buf = vec![0u16; n];
                let mut out = Vec::with_capacity(chunk.len() * gens.len());
                for key in chunk {
                    codec.unpack(key, &mut buf);
                    for i in gens.distinct_indices() {
                        gens.apply(i, &mut buf);
                        let child = codec.pack(&buf);
                        if !dist.contains_key(&child) {
                            out.push(child);
                        }
                        gens.apply(i, &mut buf);
                    }
                }
                out
            })
            .collect();
        self.expanded += self.frontier.len() as u64;
        self.depth += 1;
        let depth = self.depth;
        let mut next = Vec::new();
        for key in candidates.into_iter().flatten() {
            if let std::collections::hash_map::Entry::Vacant(e) = self.dist.entry(key) {
                next.push(e.key().clone());
                e.insert(depth);
            }
        }
        self.frontier = next;
        !self.frontier.is_empty()
    }
}
