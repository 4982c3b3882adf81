//! Compact, decodable state keys.
//!
//! Arrays with at most 16 cells pack into a `u128`: 6 bits per cell, the low
//! bit holding the orientation (Up = 0, Down = 1) and the next 5 bits the id.
//! Larger arrays use a byte key of 4 little-endian bytes per cell holding
//! `id << 1 | down`.

use std::hash::Hash;

use crate::error::ModelError;
use crate::model::{Dims, Mode, MultiArray, Orientation, Token};

/// Largest cell count that fits the packed representation.
pub const PACKED_MAX_CELLS: usize = 16;

const CELL_BITS: u32 = 6;
const CELL_MASK: u128 = (1 << CELL_BITS) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StateKey {
    Packed(u128),
    Wide(Box<[u8]>),
}

/// Cell code used by the search kernels: `id << 1 | down`.
#[inline]
pub(crate) fn token_code(t: Token) -> u32 {
    (t.id << 1) | u32::from(!t.orientation.is_up())
}

#[inline]
pub(crate) fn code_token(code: u32) -> Token {
    Token {
        id: code >> 1,
        orientation: if code & 1 == 0 {
            Orientation::Up
        } else {
            Orientation::Down
        },
    }
}

impl MultiArray {
    /// Injective key over arrays of the same dims and mode.
    pub fn canonical_key(&self) -> StateKey {
        let codes: Vec<u16> = self.cells().iter().map(|&t| token_code(t) as u16).collect();
        if self.cell_count() <= PACKED_MAX_CELLS {
            StateKey::Packed(PackedCodec.pack(&codes))
        } else {
            let bytes = self
                .cells()
                .iter()
                .flat_map(|&t| token_code(t).to_le_bytes())
                .collect();
            StateKey::Wide(bytes)
        }
    }
}

impl StateKey {
    /// Rebuilds the array this key was taken from.
    pub fn decode(&self, dims: Dims, mode: Mode) -> Result<MultiArray, ModelError> {
        let n = dims.cell_count();
        let cells: Vec<Token> = match self {
            StateKey::Packed(bits) => {
                if n > PACKED_MAX_CELLS {
                    return Err(ModelError::Dimension(format!(
                        "packed key cannot hold {n} cells"
                    )));
                }
                (0..n)
                    .map(|p| code_token(((bits >> (CELL_BITS as usize * p)) & CELL_MASK) as u32))
                    .collect()
            }
            StateKey::Wide(bytes) => {
                if bytes.len() != 4 * n {
                    return Err(ModelError::Cells(format!(
                        "key holds {} bytes, expected {}",
                        bytes.len(),
                        4 * n
                    )));
                }
                bytes
                    .chunks_exact(4)
                    .map(|c| code_token(u32::from_le_bytes([c[0], c[1], c[2], c[3]])))
                    .collect()
            }
        };
        MultiArray::new(dims, mode, cells)
    }
}

/// Packs and unpacks working cell codes into hashable keys.
pub(crate) trait Codec: Copy + Sync + Send {
    type Key: Clone + Eq + Hash + Send + Sync;

    fn pack(&self, codes: &[u16]) -> Self::Key;
    fn unpack(&self, key: &Self::Key, codes: &mut [u16]);
}

/// For at most [`PACKED_MAX_CELLS`] cells.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct PackedCodec;

impl Codec for PackedCodec {
    type Key = u128;

    #[inline]
    fn pack(&self, codes: &[u16]) -> u128 {
        codes
            .iter()
            .rev()
            .fold(0u128, |acc, &c| (acc << CELL_BITS) | u128::from(c))
    }

    #[inline]
    fn unpack(&self, key: &u128, codes: &mut [u16]) {
        let mut bits = *key;
        for c in codes.iter_mut() {
            *c = (bits & CELL_MASK) as u16;
            bits >>= CELL_BITS;
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct WideCodec;

impl Codec for WideCodec {
    type Key = Box<[u16]>;

    fn pack(&self, codes: &[u16]) -> Box<[u16]> {
        codes.into()
    }

    fn unpack(&self, key: &Box<[u16]>, codes: &mut [u16]) {
        codes.copy_from_slice(key);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Move;

    #[test]
    fn deterministic_and_round_trips() {
        let d = Dims::new(&[2, 3]).unwrap();
        let e = MultiArray::standard(d, Mode::Signed);
        assert_eq!(e.canonical_key(), e.canonical_key());
        assert_eq!(e.canonical_key().decode(d, Mode::Signed).unwrap(), e);
        let a = e.apply_move(Move::v(2)).unwrap();
        assert_ne!(a.canonical_key(), e.canonical_key());
        assert_eq!(a.canonical_key().decode(d, Mode::Signed).unwrap(), a);
    }

    #[test]
    fn sixteen_cells_stay_packed() {
        let d = Dims::new(&[4, 4]).unwrap();
        let a = MultiArray::standard(d, Mode::Signed).reverse_block();
        let key = a.canonical_key();
        assert!(matches!(key, StateKey::Packed(_)));
        assert_eq!(key.decode(d, Mode::Signed).unwrap(), a);
    }

    #[test]
    fn large_arrays_use_byte_keys() {
        let d = Dims::new(&[3, 7]).unwrap();
        let a = MultiArray::standard(d, Mode::Signed)
            .apply_move(Move::h(2))
            .unwrap();
        let key = a.canonical_key();
        assert!(matches!(key, StateKey::Wide(_)));
        assert_eq!(key.decode(d, Mode::Signed).unwrap(), a);
    }

    #[test]
    fn decode_rejects_wrong_size() {
        let d = Dims::new(&[5]).unwrap();
        let key = StateKey::Wide(vec![0u8; 8].into());
        assert!(key.decode(d, Mode::Unsigned).is_err());
        let big = Dims::new(&[17]).unwrap();
        assert!(StateKey::Packed(0).decode(big, Mode::Unsigned).is_err());
    }
}
