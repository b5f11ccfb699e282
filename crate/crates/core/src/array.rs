//! The colored array model: an array with an odd number of rows `w = 2l - 1`
//! in which values increase by one along diagonals and rows alternate between
//! even and odd values. Each row holds one "color" (copy) of its value class.
//!
//! - [`ArrayParams`]: `l`, top-row parity and the imaginary initial
//!   frequencies `(k_0, ..., k_l)`; derives the level `k` and the modulus
//!   `M = 2l + 2k`.
//! - [`Entry`]: a position `(row, value)` in the extended array. Boundary
//!   entries carry virtual values `0` (even-valued rows) or `-1` (odd-valued
//!   rows) so that the `|dv| = 1` adjacency rule needs no special cases.
//! - [`ArrayShape`]: the finite truncation with `value <= max_value`, plus
//!   adjacency queries and downward path counting.

use std::fmt;

use thiserror::Error;

/// Value parity of the top row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    /// Rows 1, 3, 5, ... hold even values (flag 0, the default).
    Even,
    /// Rows 1, 3, 5, ... hold odd values (flag 1, experimental).
    Odd,
}

impl Parity {
    pub fn from_flag(flag: u8) -> Result<Self, ParamsError> {
        match flag {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            other => Err(ParamsError::BadParity(other)),
        }
    }

    pub fn flag(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamsError {
    #[error("l must be at least 2, got {0}")]
    EllTooSmall(usize),
    #[error("level k must be positive")]
    ZeroLevel,
    #[error("expected {compact} weights (k_0..k_l) or {full} boundary entries for l = {ell}, got {got}")]
    BadWeightCount {
        ell: usize,
        compact: usize,
        full: usize,
        got: usize,
    },
    #[error("parity flag must be 0 or 1, got {0}")]
    BadParity(u8),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("max_value must be at least 1")]
    EmptyTruncation,
    #[error("entry (row {row}, value {value}) is not part of the shape")]
    NoSuchEntry { row: usize, value: i64 },
    #[error("shape truncated at {max_value} clips paths through (row {row}, value {value}); need max_value >= {required}")]
    Clipped {
        row: usize,
        value: i64,
        max_value: u64,
        required: i64,
    },
}

/// Parameters of one counting problem: the array width via `l`, the top-row
/// parity, and the boundary diagonal of imaginary initial frequencies.
///
/// The boundary is stored bottom row first, which is the order the list form
/// `[k_0, k_1, ...]` is written in. A `(k_0, ..., k_l)` weight vector expands
/// to the boundary `[k_0, k_1, 0, k_2, 0, ..., 0, k_{l-1}, k_l]` (no zeros
/// when `l = 2`); a full `w`-entry vector is also accepted so that general
/// boundaries such as `[0, 0, 1, 0, 0]` can be explored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArrayParams {
    ell: usize,
    parity: Parity,
    boundary: Vec<u64>,
}

impl ArrayParams {
    /// Build from a weight list that is either compact (`l + 1` entries
    /// `k_0..k_l`) or a full boundary diagonal (`2l - 1` entries, bottom-up).
    pub fn new(ell: usize, parity: Parity, weights: &[u64]) -> Result<Self, ParamsError> {
        if ell < 2 {
            return Err(ParamsError::EllTooSmall(ell));
        }
        let w = 2 * ell - 1;
        let boundary = if weights.len() == ell + 1 {
            expand_weights(ell, weights)
        } else if weights.len() == w {
            weights.to_vec()
        } else {
            return Err(ParamsError::BadWeightCount {
                ell,
                compact: ell + 1,
                full: w,
                got: weights.len(),
            });
        };
        if boundary.iter().all(|&b| b == 0) {
            return Err(ParamsError::ZeroLevel);
        }
        Ok(ArrayParams {
            ell,
            parity,
            boundary,
        })
    }

    /// Build from the compact weight vector `(k_0, ..., k_l)` only.
    pub fn from_k_weights(ell: usize, parity: Parity, ks: &[u64]) -> Result<Self, ParamsError> {
        if ell >= 2 && ks.len() != ell + 1 {
            return Err(ParamsError::BadWeightCount {
                ell,
                compact: ell + 1,
                full: 2 * ell - 1,
                got: ks.len(),
            });
        }
        Self::new(ell, parity, ks)
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Number of rows, `w = 2l - 1` (always odd).
    pub fn width(&self) -> usize {
        2 * self.ell - 1
    }

    /// The level `k`: sum of all boundary entries.
    pub fn level(&self) -> u64 {
        self.boundary.iter().sum()
    }

    /// Conjectured product modulus `M = 2l + 2k`.
    pub fn modulus(&self) -> usize {
        2 * self.ell + 2 * self.level() as usize
    }

    /// Boundary entries, bottom row first (the printed list order).
    pub fn boundary_bottom_up(&self) -> &[u64] {
        &self.boundary
    }

    /// Imaginary initial frequency attached to `row` (rows count from the top).
    pub fn boundary_freq(&self, row: usize) -> u64 {
        self.boundary[self.width() - row]
    }

    /// Recover the compact `(k_0, ..., k_l)` form, if the boundary has zeros
    /// at all interleave slots.
    pub fn k_weights(&self) -> Option<Vec<u64>> {
        let w = self.width();
        let b = &self.boundary;
        let mut ks = Vec::with_capacity(self.ell + 1);
        ks.push(b[0]);
        ks.push(b[1]);
        for i in 2..self.ell {
            if b[2 * i - 2] != 0 {
                return None;
            }
            ks.push(b[2 * i - 1]);
        }
        ks.push(b[w - 1]);
        Some(ks)
    }

    /// List form of the boundary, e.g. `[1, 0, 0, 1, 0]`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.boundary.iter().map(|b| b.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }

    /// Parameters with the boundary read in the opposite direction. The map
    /// `row -> w + 1 - row` is a shape automorphism (w odd keeps row parity),
    /// so reversed parameters count the same partitions.
    pub fn reversed(&self) -> Self {
        let mut boundary = self.boundary.clone();
        boundary.reverse();
        ArrayParams {
            ell: self.ell,
            parity: self.parity,
            boundary,
        }
    }

    /// Whether `row` holds even values.
    pub fn row_is_even_valued(&self, row: usize) -> bool {
        debug_assert!(row >= 1 && row <= self.width());
        match self.parity {
            Parity::Even => row % 2 == 1,
            Parity::Odd => row % 2 == 0,
        }
    }

    /// Virtual value of the boundary entry in `row`: 0 for even-valued rows,
    /// -1 for odd-valued rows, so boundary entries obey the diagonal rule.
    pub fn virtual_value(&self, row: usize) -> i64 {
        if self.row_is_even_valued(row) {
            0
        } else {
            -1
        }
    }

    /// Whether `(row, value)` is a real cell of the (untruncated) array.
    pub fn is_cell(&self, row: usize, value: i64) -> bool {
        row >= 1
            && row <= self.width()
            && value >= 1
            && (value % 2 == 0) == self.row_is_even_valued(row)
    }

    /// Color of the cells in `row`: the number of rows of the same value
    /// parity at or above it. Rows 1, 2 hold color 1; rows 3, 4 color 2; ...
    pub fn color_of_row(&self, row: usize) -> usize {
        row.div_ceil(2)
    }

    /// The boundary diagonal as stored top-to-bottom, with virtual values.
    pub fn boundary_diagonal(&self) -> BoundaryDiagonal {
        let w = self.width();
        let entries = (1..=w).map(|row| self.boundary_freq(row)).collect();
        let virtual_values = (1..=w).map(|row| self.virtual_value(row)).collect();
        BoundaryDiagonal {
            entries,
            virtual_values,
        }
    }
}

fn expand_weights(ell: usize, ks: &[u64]) -> Vec<u64> {
    let w = 2 * ell - 1;
    let mut b = vec![0u64; w];
    b[0] = ks[0];
    b[1] = ks[1];
    for i in 2..ell {
        b[2 * i - 1] = ks[i];
    }
    b[w - 1] = ks[ell];
    b
}

/// The prepended diagonal of imaginary initial frequencies, top row first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryDiagonal {
    entries: Vec<u64>,
    virtual_values: Vec<i64>,
}

impl BoundaryDiagonal {
    /// Frequencies top-to-bottom.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Virtual value carried by the boundary entry of `row`.
    pub fn virtual_value(&self, row: usize) -> i64 {
        self.virtual_values[row - 1]
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().sum()
    }
}

/// A position in the extended array: a real cell when `value >= 1`, the
/// boundary entry of its row when `value <= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Entry {
    pub row: usize,
    pub value: i64,
}

impl Entry {
    pub fn new(row: usize, value: i64) -> Self {
        Entry { row, value }
    }

    pub fn is_boundary(&self) -> bool {
        self.value <= 0
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(row {}, value {})", self.row, self.value)
    }
}

/// A real cell together with its color index, e.g. value 6 in row 3 of a
/// five-row even-first array is `6_2` (second even-valued row).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredCell {
    pub row: usize,
    pub value: u64,
    pub color: usize,
}

impl ColoredCell {
    /// Validating constructor: the value must match the row's parity.
    pub fn new(params: &ArrayParams, row: usize, value: u64) -> Result<Self, ShapeError> {
        if !params.is_cell(row, value as i64) {
            return Err(ShapeError::NoSuchEntry {
                row,
                value: value as i64,
            });
        }
        Ok(ColoredCell {
            row,
            value,
            color: params.color_of_row(row),
        })
    }

    pub fn entry(&self) -> Entry {
        Entry::new(self.row, self.value as i64)
    }

    /// Text label `value_color`, e.g. `6_2`.
    pub fn label(&self) -> String {
        format!("{}_{}", self.value, self.color)
    }
}

/// The finite extended array holding every real cell with `value <= max_value`
/// plus the boundary diagonal. Immutable after construction.
#[derive(Debug, Clone)]
pub struct ArrayShape {
    params: ArrayParams,
    max_value: u64,
}

/// Truncate the array at `max_value`. Cells to the right carry frequency 0 in
/// any partition of `n <= max_value`, so this shape is complete for them.
pub fn build_shape(params: &ArrayParams, max_value: u64) -> Result<ArrayShape, ShapeError> {
    if max_value < 1 {
        return Err(ShapeError::EmptyTruncation);
    }
    Ok(ArrayShape {
        params: params.clone(),
        max_value,
    })
}

impl ArrayShape {
    pub fn params(&self) -> &ArrayParams {
        &self.params
    }

    pub fn max_value(&self) -> u64 {
        self.max_value
    }

    pub fn width(&self) -> usize {
        self.params.width()
    }

    /// Whether the extended shape holds an entry at this position.
    pub fn contains(&self, e: Entry) -> bool {
        if e.row < 1 || e.row > self.width() || e.value > self.max_value as i64 {
            return false;
        }
        if e.is_boundary() {
            e.value == self.params.virtual_value(e.row)
        } else {
            self.params.is_cell(e.row, e.value)
        }
    }

    /// All real cells, by row and then value.
    pub fn cells(&self) -> Vec<ColoredCell> {
        let mut out = Vec::new();
        for row in 1..=self.width() {
            let start = if self.params.row_is_even_valued(row) { 2 } else { 1 };
            let mut v = start;
            while v <= self.max_value {
                out.push(ColoredCell {
                    row,
                    value: v,
                    color: self.params.color_of_row(row),
                });
                v += 2;
            }
        }
        out
    }

    /// Entries of `row + 1` adjacent to `e`: the positions at value `e.value
    /// +- 1` that exist in the truncated shape. Empty for the bottom row.
    pub fn neighbors_below(&self, e: Entry) -> Vec<Entry> {
        if e.row >= self.width() {
            return Vec::new();
        }
        self.adjacent_in_row(e, e.row + 1)
    }

    /// Upward mirror of [`Self::neighbors_below`].
    pub fn neighbors_above(&self, e: Entry) -> Vec<Entry> {
        if e.row <= 1 {
            return Vec::new();
        }
        self.adjacent_in_row(e, e.row - 1)
    }

    fn adjacent_in_row(&self, e: Entry, row: usize) -> Vec<Entry> {
        let vmin = self.params.virtual_value(row);
        let mut out = Vec::new();
        for value in [e.value - 1, e.value + 1] {
            if value >= vmin && value <= self.max_value as i64 {
                out.push(Entry::new(row, value));
            }
        }
        out
    }

    /// Number of downward paths (one entry per row, consecutive entries
    /// adjacent) that contain `e`. Fails if the truncation would clip any
    /// such path on the right.
    pub fn downward_paths_through(&self, e: Entry) -> Result<u64, ShapeError> {
        if !self.contains(e) {
            return Err(ShapeError::NoSuchEntry {
                row: e.row,
                value: e.value,
            });
        }
        let w = self.width();
        let drift = (e.row - 1).max(w - e.row) as i64;
        let required = e.value + drift;
        if required > self.max_value as i64 {
            return Err(ShapeError::Clipped {
                row: e.row,
                value: e.value,
                max_value: self.max_value,
                required,
            });
        }
        Ok(self.count_directed(e, true) * self.count_directed(e, false))
    }

    fn count_directed(&self, e: Entry, downward: bool) -> u64 {
        let at_end = if downward { e.row == self.width() } else { e.row == 1 };
        if at_end {
            return 1;
        }
        let next = if downward {
            self.neighbors_below(e)
        } else {
            self.neighbors_above(e)
        };
        next.into_iter().map(|n| self.count_directed(n, downward)).sum()
    }
}
