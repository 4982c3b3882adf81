//! Instance documents.
//!
//! ```text
//! # optional comment lines
//! signed
//! 2 3
//! c f e
//! b D A
//! ```
//!
//! Line 1 is the mode, line 2 the dims (1-3 positive integers). Rank 1 has
//! one line of tokens, rank 2 has `n` lines of `m` tokens, rank 3 has `n`
//! blocks of `m` lines of `l` tokens with one blank line between blocks.
//! A token is a nonzero integer (negative = Down) or a single letter
//! (`A`..`Z` = 1..26 Up, lowercase = Down); one file uses one style.

use crate::error::ParseError;
use crate::model::{Dims, Mode, MultiArray, Token};

fn at(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::At {
        line,
        column,
        message: message.into(),
    }
}

/// A line of the input with its 1-based number.
#[derive(Clone, Copy)]
struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    /// Whitespace-separated words with their 1-based columns.
    fn words(self) -> impl Iterator<Item = (usize, &'a str)> {
        let text = self.text;
        text.split_whitespace().map(move |w| {
            let offset = w.as_ptr() as usize - text.as_ptr() as usize;
            (text[..offset].chars().count() + 1, w)
        })
    }

    fn is_blank(self) -> bool {
        self.text.trim().is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Style {
    Numeric,
    Letter,
}

fn parse_token(word: &str, line: usize, column: usize) -> Result<(Token, Style), ParseError> {
    let mut chars = word.chars();
    if let (Some(c), None) = (chars.next(), chars.next()) {
        if c.is_ascii_alphabetic() {
            let id = (c.to_ascii_uppercase() as u32) - ('A' as u32) + 1;
            let token = if c.is_ascii_uppercase() {
                Token::up(id)
            } else {
                Token::down(id)
            };
            return Ok((token, Style::Letter));
        }
    }
    let value: i64 = word
        .parse()
        .map_err(|_| at(line, column, format!("invalid token {word:?}")))?;
    if value == 0 {
        return Err(at(line, column, "zero is not a valid token"));
    }
    let token = Token::from_signed(value)
        .ok_or_else(|| at(line, column, format!("token {word:?} out of range")))?;
    Ok((token, Style::Numeric))
}

pub fn parse_instance(text: &str) -> Result<MultiArray, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, text)| Line {
            number: i + 1,
            text,
        })
        .filter(|l| !l.text.trim_start().starts_with('#'));

    let mode_line = lines
        .by_ref()
        .find(|l| !l.is_blank())
        .ok_or_else(|| at(1, 1, "empty document: expected mode line"))?;
    let mode_word = mode_line.words().next().expect("non-blank line");
    let mode: Mode = mode_word
        .1
        .parse()
        .map_err(|e: crate::error::ModelError| at(mode_line.number, mode_word.0, e.to_string()))?;
    if let Some((col, extra)) = mode_line.words().nth(1) {
        return Err(at(
            mode_line.number,
            col,
            format!("unexpected {extra:?} after mode"),
        ));
    }

    let dims_line = lines
        .next()
        .ok_or_else(|| at(mode_line.number + 1, 1, "missing dims line"))?;
    let mut extents = Vec::new();
    for (col, word) in dims_line.words() {
        let e: usize = word
            .parse()
            .map_err(|_| at(dims_line.number, col, format!("invalid extent {word:?}")))?;
        extents.push(e);
    }
    let dims = Dims::new(&extents).map_err(|e| at(dims_line.number, 1, e.to_string()))?;
    let e = dims.as_slice();
    // (lines per block, blocks, tokens per line)
    let (rows_per_block, blocks, width) = match dims.rank() {
        1 => (1, 1, e[0]),
        2 => (e[0], 1, e[1]),
        _ => (e[1], e[0], e[2]),
    };

    let rest: Vec<Line> = lines.collect();
    let mut cursor = 0;
    let mut cells = Vec::with_capacity(dims.cell_count());
    let mut style: Option<Style> = None;
    let mut seen = vec![false; dims.cell_count()];
    let mut last_line = dims_line.number;

    for block in 0..blocks {
        if block > 0 {
            match rest.get(cursor) {
                Some(l) if l.is_blank() => cursor += 1,
                Some(l) => {
                    return Err(at(
                        l.number,
                        1,
                        format!("expected a blank line before block {}", block + 1),
                    ))
                }
                None => return Err(at(last_line + 1, 1, format!("missing block {}", block + 1))),
            }
        }
        for row in 0..rows_per_block {
            // rank 1 and 2 tolerate blank lines; rank 3 uses them as separators
            if dims.rank() < 3 {
                while rest.get(cursor).is_some_and(|l| l.is_blank()) {
                    cursor += 1;
                }
            }
            let line = *rest.get(cursor).ok_or_else(|| {
                at(
                    last_line + 1,
                    1,
                    format!("missing row {} (expected {width} tokens)", row + 1),
                )
            })?;
            cursor += 1;
            last_line = line.number;
            let mut count = 0;
            for (col, word) in line.words() {
                count += 1;
                if count > width {
                    return Err(at(
                        line.number,
                        col,
                        format!("too many tokens: expected {width}"),
                    ));
                }
                let (token, s) = parse_token(word, line.number, col)?;
                match style {
                    None => style = Some(s),
                    Some(prev) if prev != s => {
                        return Err(at(line.number, col, "mixed numeric and letter tokens"))
                    }
                    _ => {}
                }
                let id = token.id as usize;
                if id > dims.cell_count() {
                    return Err(at(
                        line.number,
                        col,
                        format!("id {id} exceeds the cell count {}", dims.cell_count()),
                    ));
                }
                if std::mem::replace(&mut seen[id - 1], true) {
                    return Err(at(line.number, col, format!("duplicate id {id}")));
                }
                if mode == Mode::Unsigned && !token.orientation.is_up() {
                    return Err(at(
                        line.number,
                        col,
                        format!("Down token {word:?} in an unsigned instance"),
                    ));
                }
                cells.push(token);
            }
            if count < width {
                let col = line.text.chars().count() + 1;
                return Err(at(
                    line.number,
                    col,
                    format!("too few tokens: expected {width}, got {count}"),
                ));
            }
        }
    }
    if let Some(extra) = rest[cursor..].iter().find(|l| !l.is_blank()) {
        return Err(at(extra.number, 1, "unexpected content after the last row"));
    }
    // a full permutation follows from the counts and the duplicate check
    MultiArray::new(dims, mode, cells).map_err(|source| ParseError::Model {
        line: last_line,
        source,
    })
}

/// Canonical form: numeric tokens, single spaces, newline-terminated lines.
pub fn write_instance(ma: &MultiArray) -> String {
    let dims = ma.dims();
    let mut out = format!("{}\n", ma.mode());
    let extents: Vec<String> = dims.as_slice().iter().map(|e| e.to_string()).collect();
    out.push_str(&extents.join(" "));
    out.push('\n');
    let width = *dims.as_slice().last().expect("rank >= 1");
    let block = if dims.rank() == 3 {
        dims.extent(1) * width
    } else {
        usize::MAX
    };
    for (i, row) in ma.cells().chunks(width).enumerate() {
        if i > 0 && (i * width).is_multiple_of(block) {
            out.push('\n');
        }
        let words: Vec<String> = row.iter().map(|t| t.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}
