//! Tokens, multidimensional arrays and prefix-reversal moves.
//!
//! An array of rank 1, 2 or 3 holds the tokens `1..=N` (N = cell count) in
//! row-major order. A move `(axis, depth)` takes the prefix slab made of the
//! first `depth` layers along `axis` and replaces it by its point reflection.
//! In signed mode every token inside the slab also flips its orientation.
//!
//! Axis 0 moves are written `H<depth>` (horizontal prefix reversal, the top
//! `depth` rows), axis 1 moves `V<depth>` (the left `depth` columns), and
//! axis 2 moves `D<depth>`.

use std::fmt;
use std::str::FromStr;

use crate::error::ModelError;

/// Maximum supported rank.
pub const MAX_RANK: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Orientation {
    #[default]
    Up,
    Down,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Up => Orientation::Down,
            Orientation::Down => Orientation::Up,
        }
    }

    pub fn is_up(self) -> bool {
        self == Orientation::Up
    }
}

/// A labelled cell content. `id` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Token {
    pub id: u32,
    pub orientation: Orientation,
}

impl Token {
    pub fn up(id: u32) -> Self {
        Token {
            id,
            orientation: Orientation::Up,
        }
    }

    pub fn down(id: u32) -> Self {
        Token {
            id,
            orientation: Orientation::Down,
        }
    }

    /// Builds a token from the burnt-pancake convention: negative means Down.
    /// Returns `None` for zero or magnitudes beyond `u32`.
    pub fn from_signed(value: i64) -> Option<Self> {
        if value == 0 {
            return None;
        }
        let id = u32::try_from(value.unsigned_abs()).ok()?;
        Some(if value > 0 {
            Token::up(id)
        } else {
            Token::down(id)
        })
    }

    pub fn signed_value(self) -> i64 {
        match self.orientation {
            Orientation::Up => i64::from(self.id),
            Orientation::Down => -i64::from(self.id),
        }
    }

    pub fn flipped(self) -> Self {
        Token {
            id: self.id,
            orientation: self.orientation.flip(),
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed_value())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Unsigned,
    Signed,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Unsigned => "unsigned",
            Mode::Signed => "signed",
        }
    }

    pub fn is_signed(self) -> bool {
        self == Mode::Signed
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unsigned" => Ok(Mode::Unsigned),
            "signed" => Ok(Mode::Signed),
            other => Err(ModelError::Mode(format!(
                "unknown mode {other:?} (expected `unsigned` or `signed`)"
            ))),
        }
    }
}

/// Extents of a rank 1-3 array.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dims {
    extents: [usize; MAX_RANK],
    rank: usize,
}

impl Dims {
    pub fn new(extents: &[usize]) -> Result<Self, ModelError> {
        if extents.is_empty() || extents.len() > MAX_RANK {
            return Err(ModelError::Dimension(format!(
                "rank must be 1..={MAX_RANK}, got {}",
                extents.len()
            )));
        }
        if let Some(pos) = extents.iter().position(|&e| e == 0) {
            return Err(ModelError::Dimension(format!(
                "extent {pos} is zero; all extents must be >= 1"
            )));
        }
        extents
            .iter()
            .try_fold(1usize, |acc, &e| acc.checked_mul(e))
            .ok_or_else(|| ModelError::Dimension("cell count overflows".into()))?;
        let mut arr = [1; MAX_RANK];
        arr[..extents.len()].copy_from_slice(extents);
        Ok(Dims {
            extents: arr,
            rank: extents.len(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.extents[..self.rank]
    }

    pub fn extent(&self, axis: usize) -> usize {
        self.as_slice()[axis]
    }

    pub fn cell_count(&self) -> usize {
        self.as_slice().iter().product()
    }

    /// Row-major strides, padded to rank 3.
    fn strides(&self) -> [usize; MAX_RANK] {
        let e = self.extents;
        [e[1] * e[2], e[2], 1]
    }

    fn index(&self, coords: [usize; MAX_RANK]) -> usize {
        let s = self.strides();
        coords[0] * s[0] + coords[1] * s[1] + coords[2] * s[2]
    }

    /// Cells in the prefix slab of `mv`, each paired with its mirror image
    /// under the slab's point reflection, in row-major order of the first
    /// component.
    pub(crate) fn slab_mirror_pairs(&self, mv: Move) -> Vec<(usize, usize)> {
        let mut bounds = self.extents;
        bounds[mv.axis] = mv.depth;
        let mut out = Vec::with_capacity(bounds.iter().product());
        for i in 0..bounds[0] {
            for j in 0..bounds[1] {
                for k in 0..bounds[2] {
                    let c = [i, j, k];
                    let mirror = [bounds[0] - 1 - i, bounds[1] - 1 - j, bounds[2] - 1 - k];
                    out.push((self.index(c), self.index(mirror)));
                }
            }
        }
        out
    }

    /// Checks `mv` against these extents.
    pub fn check_move(&self, mv: Move) -> Result<(), ModelError> {
        if mv.axis >= self.rank {
            return Err(ModelError::InvalidMove {
                field: "axis",
                value: mv.axis,
                min: 0,
                max: self.rank - 1,
            });
        }
        let max = self.extent(mv.axis);
        if mv.depth == 0 || mv.depth > max {
            return Err(ModelError::InvalidMove {
                field: "depth",
                value: mv.depth,
                min: 1,
                max,
            });
        }
        Ok(())
    }

    /// All moves, axis ascending then depth ascending. This is the canonical
    /// tie-break order used by every solver.
    pub fn legal_moves(&self) -> Vec<Move> {
        self.as_slice()
            .iter()
            .enumerate()
            .flat_map(|(axis, &ext)| (1..=ext).map(move |depth| Move { axis, depth }))
            .collect()
    }
}

impl fmt::Debug for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.as_slice()).finish()
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.as_slice().iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// One generator: reverse the first `depth` layers along `axis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub axis: usize,
    pub depth: usize,
}

impl Move {
    pub const AXIS_LETTERS: [char; MAX_RANK] = ['H', 'V', 'D'];

    pub fn new(axis: usize, depth: usize) -> Self {
        Move { axis, depth }
    }

    pub fn h(depth: usize) -> Self {
        Move { axis: 0, depth }
    }

    pub fn v(depth: usize) -> Self {
        Move { axis: 1, depth }
    }

    pub fn d(depth: usize) -> Self {
        Move { axis: 2, depth }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match Move::AXIS_LETTERS.get(self.axis) {
            Some(letter) => write!(f, "{letter}{}", self.depth),
            None => write!(f, "?{}:{}", self.axis, self.depth),
        }
    }
}

/// An ordered list of moves; the certificate format.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MoveSequence(pub Vec<Move>);

impl MoveSequence {
    pub fn new() -> Self {
        MoveSequence(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Move> {
        self.0.iter()
    }
}

impl From<Vec<Move>> for MoveSequence {
    fn from(v: Vec<Move>) -> Self {
        MoveSequence(v)
    }
}

impl FromIterator<Move> for MoveSequence {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Self {
        MoveSequence(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a MoveSequence {
    type Item = &'a Move;
    type IntoIter = std::slice::Iter<'a, Move>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Canonical notation: space-separated `H`/`V`/`D` tokens.
impl fmt::Display for MoveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_transpositions(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Parity of the composition.
    pub fn compose(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parity of the permutation `index -> perm[index]` by cycle counting.
pub fn permutation_parity(perm: &[usize]) -> Parity {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = perm[p];
        }
    }
    Parity::from_transpositions(n - cycles)
}

/// Parity of a move's position permutation, from its closed form: the slab
/// holds `t` cells and its reflection is `t / 2` disjoint transpositions.
pub fn move_parity(dims: Dims, mv: Move) -> Result<Parity, ModelError> {
    dims.check_move(mv)?;
    let others: usize = dims
        .as_slice()
        .iter()
        .enumerate()
        .filter(|&(axis, _)| axis != mv.axis)
        .map(|(_, &e)| e)
        .product();
    Ok(Parity::from_transpositions(mv.depth * others / 2))
}

/// A rank 1-3 array of tokens holding a permutation of `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiArray {
    dims: Dims,
    mode: Mode,
    cells: Vec<Token>,
}

impl MultiArray {
    /// Validates and builds an array from row-major cells.
    pub fn new(dims: Dims, mode: Mode, cells: Vec<Token>) -> Result<Self, ModelError> {
        let n = dims.cell_count();
        if cells.len() != n {
            return Err(ModelError::Cells(format!(
                "expected {n} cells for dims {dims}, got {}",
                cells.len()
            )));
        }
        let mut seen = vec![false; n];
        for (pos, t) in cells.iter().enumerate() {
            let id = t.id as usize;
            if id == 0 || id > n {
                return Err(ModelError::Cells(format!(
                    "cell {pos}: id {id} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[id - 1], true) {
                return Err(ModelError::Cells(format!("cell {pos}: duplicate id {id}")));
            }
            if mode == Mode::Unsigned && !t.orientation.is_up() {
                return Err(ModelError::Mode(format!(
                    "cell {pos}: token {id} is Down in an unsigned array"
                )));
            }
        }
        Ok(MultiArray { dims, mode, cells })
    }

    /// Builds an array from signed values (negative = Down).
    pub fn from_signed(dims: &[usize], mode: Mode, values: &[i64]) -> Result<Self, ModelError> {
        let dims = Dims::new(dims)?;
        let cells = values
            .iter()
            .enumerate()
            .map(|(pos, &v)| {
                Token::from_signed(v)
                    .ok_or_else(|| ModelError::Cells(format!("cell {pos}: invalid value {v}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MultiArray::new(dims, mode, cells)
    }

    /// The standard array: position `p` (row-major, 0-based) holds id `p + 1`,
    /// all Up. For rank 2 this is `e_ij = (i - 1) * m + j`.
    pub fn standard(dims: Dims, mode: Mode) -> Self {
        let cells = (1..=dims.cell_count() as u32).map(Token::up).collect();
        MultiArray { dims, mode, cells }
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn cells(&self) -> &[Token] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn signed_values(&self) -> Vec<i64> {
        self.cells.iter().map(|t| t.signed_value()).collect()
    }

    /// Point reflection of the whole array. In signed mode every token also
    /// flips.
    pub fn reverse_block(&self) -> Self {
        self.reflect_slab(Move::h(self.dims.extent(0)))
    }

    /// Applies one prefix reversal.
    pub fn apply_move(&self, mv: Move) -> Result<Self, ModelError> {
        self.dims.check_move(mv)?;
        Ok(self.reflect_slab(mv))
    }

    /// Replays `moves` in order, failing at the first illegal one.
    pub fn apply_moves<'a, I>(&self, moves: I) -> Result<Self, (usize, ModelError)>
    where
        I: IntoIterator<Item = &'a Move>,
    {
        let mut cur = self.clone();
        for (i, &mv) in moves.into_iter().enumerate() {
            cur = cur.apply_move(mv).map_err(|e| (i, e))?;
        }
        Ok(cur)
    }

    fn reflect_slab(&self, mv: Move) -> Self {
        let mut cells = self.cells.clone();
        let flip = self.mode.is_signed();
        for (dst, src) in self.dims.slab_mirror_pairs(mv) {
            let t = self.cells[src];
            cells[dst] = if flip { t.flipped() } else { t };
        }
        MultiArray {
            dims: self.dims,
            mode: self.mode,
            cells,
        }
    }

    pub fn legal_moves(&self) -> Vec<Move> {
        self.dims.legal_moves()
    }

    pub fn is_standard(&self) -> bool {
        self.cells
            .iter()
            .enumerate()
            .all(|(p, t)| t.id as usize == p + 1 && t.orientation.is_up())
    }

    /// Parity of the id arrangement relative to the standard array;
    /// orientations are ignored.
    pub fn id_parity(&self) -> Parity {
        let perm: Vec<usize> = self.cells.iter().map(|t| t.id as usize - 1).collect();
        permutation_parity(&perm)
    }

    /// Cell at the given coordinates (length must equal the rank).
    pub fn get(&self, coords: &[usize]) -> Option<Token> {
        if coords.len() != self.dims.rank()
            || coords
                .iter()
                .zip(self.dims.as_slice())
                .any(|(&c, &e)| c >= e)
        {
            return None;
        }
        let mut full = [0; MAX_RANK];
        full[..coords.len()].copy_from_slice(coords);
        Some(self.cells[self.dims.index(full)])
    }

    /// Same cells under different extents with the same cell count.
    pub fn reshape(&self, dims: Dims) -> Result<Self, ModelError> {
        if dims.cell_count() != self.cell_count() {
            return Err(ModelError::Dimension(format!(
                "cannot reshape {} into {dims}",
                self.dims
            )));
        }
        Ok(MultiArray {
            dims,
            mode: self.mode,
            cells: self.cells.clone(),
        })
    }
}
