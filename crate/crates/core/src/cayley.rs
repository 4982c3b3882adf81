//! Precomputed generator tables for the state-space kernels.
//!
//! Search works on a flat buffer of cell codes (`id << 1 | down`). Every
//! move is an involution on positions, so it is stored as the list of
//! position pairs it swaps plus the positions whose orientation it flips.

use crate::error::ModelError;
use crate::key::token_code;
use crate::model::{Dims, Mode, Move, MultiArray};

/// Largest cell count the search kernels accept.
pub const MAX_SEARCH_CELLS: usize = (u16::MAX >> 1) as usize;

#[derive(Debug, Clone)]
pub(crate) struct Generators {
    dims: Dims,
    mode: Mode,
    moves: Vec<Move>,
    swaps: Vec<Vec<(u16, u16)>>,
    slabs: Vec<Vec<u16>>,
    /// `false` for a move acting as the identity or exactly like an earlier
    /// one (e.g. the full reversal, reachable on every axis).
    distinct: Vec<bool>,
}

impl Generators {
    pub fn new(dims: Dims, mode: Mode) -> Result<Self, ModelError> {
        if dims.cell_count() > MAX_SEARCH_CELLS {
            return Err(ModelError::Dimension(format!(
                "{} cells exceed the search limit of {MAX_SEARCH_CELLS}",
                dims.cell_count()
            )));
        }
        let moves = dims.legal_moves();
        let mut swaps = Vec::with_capacity(moves.len());
        let mut slabs = Vec::with_capacity(moves.len());
        for &mv in &moves {
            let pairs = dims.slab_mirror_pairs(mv);
            swaps.push(
                pairs
                    .iter()
                    .filter(|(a, b)| a < b)
                    .map(|&(a, b)| (a as u16, b as u16))
                    .collect(),
            );
            slabs.push(if mode.is_signed() {
                pairs.iter().map(|&(a, _)| a as u16).collect()
            } else {
                Vec::new()
            });
        }
        let mut gens = Generators {
            dims,
            mode,
            moves,
            swaps,
            slabs,
            distinct: Vec::new(),
        };
        let start = gens.standard_codes();
        let images: Vec<Vec<u16>> = (0..gens.len())
            .map(|i| {
                let mut c = start.clone();
                gens.apply(i, &mut c);
                c
            })
            .collect();
        gens.distinct = (0..images.len())
            .map(|i| images[i] != start && !images[..i].contains(&images[i]))
            .collect();
        Ok(gens)
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// Indices of pairwise-distinct generators in canonical order.
    pub fn distinct_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.distinct[i])
    }

    #[inline]
    pub fn apply(&self, index: usize, codes: &mut [u16]) {
        for &(a, b) in &self.swaps[index] {
            codes.swap(a as usize, b as usize);
        }
        for &p in &self.slabs[index] {
            codes[p as usize] ^= 1;
        }
    }

    pub fn standard_codes(&self) -> Vec<u16> {
        (1..=self.dims.cell_count() as u16)
            .map(|id| id << 1)
            .collect()
    }

    pub fn codes_of(&self, ma: &MultiArray) -> Vec<u16> {
        ma.cells().iter().map(|&t| token_code(t) as u16).collect()
    }

    #[cfg(test)]
    pub fn array_of(&self, codes: &[u16]) -> MultiArray {
        let cells = codes
            .iter()
            .map(|&c| crate::key::code_token(u32::from(c)))
            .collect();
        MultiArray::new(self.dims, self.mode, cells).expect("search produced an invalid array")
    }
}

#[inline]
pub(crate) fn is_standard_codes(codes: &[u16]) -> bool {
    codes
        .iter()
        .enumerate()
        .all(|(p, &c)| c as usize == (p + 1) << 1)
}
