use std::time::Instant;

use crate::error::ModelError;
use crate::model::{Mode, Move, MoveSequence, MultiArray};
use crate::solve::Solution;

fn require_line(line: &MultiArray, mode: Mode) -> Result<(), ModelError> {
    if line.dims().rank() != 1 {
        return Err(ModelError::Mode(format!(
            "greedy solver needs a rank-1 line, got dims {}",
            line.dims()
        )));
    }
    if line.mode() != mode {
        return Err(ModelError::Mode(format!(
            "greedy {mode} solver given a {} line",
            line.mode()
        )));
    }
    Ok(())
}

fn flip(values: &mut [i64], depth: usize, signed: bool, moves: &mut Vec<Move>) {
    values[..depth].reverse();
    if signed {
        values[..depth].iter_mut().for_each(|v| *v = -*v);
    }
    moves.push(Move::h(depth));
}

/// Brings the largest unplaced pancake to the front, then flips it into
/// place. At most `2n - 3` flips for `n >= 2`.
pub fn greedy_unsigned_1d(line: &MultiArray) -> Result<Solution, ModelError> {
    require_line(line, Mode::Unsigned)?;
    let start = Instant::now();
    let mut values = line.signed_values();
    let mut moves = Vec::new();
    for target in (2..=values.len()).rev() {
        let pos = values
            .iter()
            .position(|&v| v == target as i64)
            .expect("line is a permutation");
        if pos + 1 == target {
            continue;
        }
        if pos > 0 {
            flip(&mut values, pos + 1, false, &mut moves);
        }
        flip(&mut values, target, false, &mut moves);
    }
    Ok(Solution {
        moves: MoveSequence(moves),
        optimal: false,
        nodes_expanded: 0,
        elapsed: start.elapsed(),
    })
}

/// Places pancakes from the bottom up with at most three flips each: bring
/// to the front, flip it alone if it would land burnt side up, flip into
/// place. At most `3n` flips.
pub fn greedy_signed_1d(line: &MultiArray) -> Result<Solution, ModelError> {
    require_line(line, Mode::Signed)?;
    let start = Instant::now();
    let mut values = line.signed_values();
    let mut moves = Vec::new();
    for target in (1..=values.len()).rev() {
        let pos = values
            .iter()
            .position(|v| v.unsigned_abs() as usize == target)
            .expect("line is a permutation");
        if pos + 1 == target && values[pos] > 0 {
            continue;
        }
        if pos > 0 {
            flip(&mut values, pos + 1, true, &mut moves);
        }
        // must be Down at the front so the final flip leaves it Up
        if values[0] > 0 {
            flip(&mut values, 1, true, &mut moves);
        }
        flip(&mut values, target, true, &mut moves);
    }
    Ok(Solution {
        moves: MoveSequence(moves),
        optimal: false,
        nodes_expanded: 0,
        elapsed: start.elapsed(),
    })
}
