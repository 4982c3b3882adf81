use crate::error::ModelError;
use crate::model::{Mode, MultiArray};

/// Breakpoint lower bound on the flip distance of a rank-1 line.
///
/// With a sentinel `n + 1` after the last position, a signed line has a
/// breakpoint between `s_i` and `s_{i+1}` whenever `s_{i+1} != s_i + 1`.
/// An unsigned line has one whenever `|s_{i+1} - s_i| != 1`, since an
/// unsigned flip may turn an ascending adjacency into a descending one.
/// Each flip changes at most one adjacency, so the count is admissible.
pub fn breakpoint_bound(line: &MultiArray) -> Result<u32, ModelError> {
    if line.dims().rank() != 1 {
        return Err(ModelError::Dimension(format!(
            "breakpoint bound needs a rank-1 line, got dims {}",
            line.dims()
        )));
    }
    let codes: Vec<u16> = line
        .cells()
        .iter()
        .map(|&t| crate::key::token_code(t) as u16)
        .collect();
    Ok(breakpoints_codes(&codes, line.mode()))
}

/// Same count over working cell codes.
#[inline]
pub(crate) fn breakpoints_codes(codes: &[u16], mode: Mode) -> u32 {
    let value = |c: u16| -> i32 {
        let id = i32::from(c >> 1);
        if c & 1 == 1 {
            -id
        } else {
            id
        }
    };
    let sentinel = codes.len() as i32 + 1;
    let mut count = 0;
    for i in 0..codes.len() {
        let here = value(codes[i]);
        let next = codes.get(i + 1).map_or(sentinel, |&c| value(c));
        let adjacent = match mode {
            Mode::Signed => next == here + 1,
            Mode::Unsigned => (next - here).abs() == 1,
        };
        if !adjacent {
            count += 1;
        }
    }
    count
}
