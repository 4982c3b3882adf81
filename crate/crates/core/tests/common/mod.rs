//! Independent oracles shared by the integration tests.
//!
//! Nothing here touches the search kernel: states are plain `MultiArray`s
//! moved with `apply_move`, keyed by their signed cell values.
#![allow(dead_code)]

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use prefrev::{Dims, Mode, Move, MultiArray, Parity};

/// Distance from the standard array to every state in its orbit.
pub fn naive_distances(dims: Dims, mode: Mode) -> HashMap<Vec<i64>, u32> {
    let start = MultiArray::standard(dims, mode);
    let moves = start.legal_moves();
    let mut dist = HashMap::new();
    dist.insert(start.signed_values(), 0);
    let mut queue = VecDeque::from([(start, 0u32)]);
    while let Some((a, d)) = queue.pop_front() {
        for &mv in &moves {
            let b = a.apply_move(mv).unwrap();
            if let Entry::Vacant(slot) = dist.entry(b.signed_values()) {
                slot.insert(d + 1);
                queue.push_back((b, d + 1));
            }
        }
    }
    dist
}

/// Sign of a permutation by counting inversions (quadratic, deliberately
/// different from the cycle count used by the library).
pub fn inversion_parity(perm: &[usize]) -> Parity {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    Parity::from_transpositions(inversions)
}

/// The position permutation a move induces, read off by moving a labelled
/// array: cell `i` ends up holding whatever was at `perm[i]`.
pub fn move_permutation(dims: Dims, mv: Move) -> Vec<usize> {
    let e = MultiArray::standard(dims, Mode::Unsigned);
    let moved = e.apply_move(mv).unwrap();
    moved.cells().iter().map(|t| t.id as usize - 1).collect()
}

pub fn ids(a: &MultiArray) -> Vec<usize> {
    a.cells().iter().map(|t| t.id as usize - 1).collect()
}

/// Every extent list of the given rank with `cells` cells in total.
pub fn shapes_with_cells(rank: usize, cells: usize) -> Vec<Vec<usize>> {
    fn go(rank: usize, rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() + 1 == rank {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for d in 1..=rest {
            if rest.is_multiple_of(d) {
                prefix.push(d);
                go(rank, rest / d, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(rank, cells, &mut Vec::new(), &mut out);
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Every array of the given dims and mode (n! or n!·2^n of them).
pub fn all_arrays(dims: &[usize], mode: Mode) -> Vec<MultiArray> {
    let n: usize = dims.iter().product();
    let signs = if mode.is_signed() { 1u32 << n } else { 1 };
    let mut out = Vec::new();
    for p in permutations(n) {
        for mask in 0..signs {
            let values: Vec<i64> = p
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    let v = v as i64 + 1;
                    if mask >> i & 1 == 1 {
                        -v
                    } else {
                        v
                    }
                })
                .collect();
            out.push(MultiArray::from_signed(dims, mode, &values).unwrap());
        }
    }
    out
}
