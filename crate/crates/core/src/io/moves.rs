use crate::error::ParseError;
use crate::model::{Move, MoveSequence};

/// Parses whitespace-separated `H<k>`, `V<k>`, `D<k>` tokens. `F<k>` is
/// accepted as an alias for `H<k>`.
pub fn parse_moves(text: &str) -> Result<MoveSequence, ParseError> {
    text.split_whitespace()
        .enumerate()
        .map(|(index, token)| {
            parse_move(token).map_err(|message| ParseError::MoveToken {
                index,
                token: token.to_string(),
                message,
            })
        })
        .collect()
}

fn parse_move(token: &str) -> Result<Move, String> {
    let mut chars = token.chars();
    let axis = match chars.next() {
        Some('H' | 'F') => 0,
        Some('V') => 1,
        Some('D') => 2,
        _ => return Err("expected H, V, D or F followed by a depth".into()),
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return Err("depth must be a positive decimal integer without leading zeros".into());
    }
    let depth = digits.parse().map_err(|_| "depth too large".to_string())?;
    Ok(Move { axis, depth })
}

/// Canonical notation (`H`/`V`/`D`, single spaces).
pub fn write_moves(moves: &MoveSequence) -> String {
    moves.to_string()
}
