//! Binary matrices, line/column contraction and grid density.
//!
//! A line contraction merges line `i` with line `i + 1` by summing them
//! entrywise and shifting every later line up; column contractions work the
//! same way to the left. A set of contractions is *valid* when no two ones
//! are ever summed into the same cell, i.e. the raw contracted matrix is
//! still binary. The *density* of a binary matrix is the number of unordered
//! pairs of ones at Chebyshev distance one (horizontal, vertical or diagonal
//! neighbors).
//!
//! All indices in this API are 0-based: a line contraction index `i` merges
//! lines `i` and `i + 1`, so `i` ranges over `0..lines - 1`. Text formats
//! (see [`crate::instances`]) use 1-based indices.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::MatrixError;

/// A dense 0/1 matrix with at least one line and one column.
///
/// The number of ones is cached; it is preserved by every valid contraction.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    lines: usize,
    columns: usize,
    cells: Vec<u8>,
    ones: usize,
}

/// A dense matrix of non-negative integers.
///
/// Raw contraction results live here: merging can stack several ones into a
/// single cell, as in an invalid contraction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerMatrix {
    lines: usize,
    columns: usize,
    cells: Vec<u32>,
}

/// A candidate contraction: strictly increasing line indices and strictly
/// increasing column indices, both 0-based.
///
/// Index `i` stands for merging line `i` with line `i + 1` of the *original*
/// matrix; the merges are applied largest index first, so earlier indices
/// keep their meaning throughout.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Selection {
    lines: Vec<usize>,
    columns: Vec<usize>,
}

impl Selection {
    /// Builds a selection, rejecting index lists that are not strictly
    /// increasing.
    pub fn new(lines: Vec<usize>, columns: Vec<usize>) -> Result<Self, MatrixError> {
        if !strictly_increasing(&lines) {
            return Err(MatrixError::UnsortedLines);
        }
        if !strictly_increasing(&columns) {
            return Err(MatrixError::UnsortedColumns);
        }
        Ok(Self { lines, columns })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn lines(&self) -> &[usize] {
        &self.lines
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty() && self.columns.is_empty()
    }

    /// Semicolon-joined 1-based indices, empty string for an empty list.
    /// This is the field format of the report CSV.
    pub fn lines_field(&self) -> String {
        join_one_based(&self.lines)
    }

    pub fn columns_field(&self) -> String {
        join_one_based(&self.columns)
    }
}

impl fmt::Display for Selection {
    /// The two-line wire format: `I: ...` / `J: ...` with 1-based,
    /// comma-separated indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I: ")?;
        write_one_based(f, &self.lines, ",")?;
        write!(f, "\nJ: ")?;
        write_one_based(f, &self.columns, ",")
    }
}

fn strictly_increasing(indices: &[usize]) -> bool {
    indices.windows(2).all(|w| w[0] < w[1])
}

fn write_one_based(f: &mut fmt::Formatter<'_>, indices: &[usize], sep: &str) -> fmt::Result {
    for (k, &i) in indices.iter().enumerate() {
        if k > 0 {
            write!(f, "{sep}")?;
        }
        write!(f, "{}", i + 1)?;
    }
    Ok(())
}

fn join_one_based(indices: &[usize]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (k, &i) in indices.iter().enumerate() {
        if k > 0 {
            out.push(';');
        }
        let _ = write!(out, "{}", i + 1);
    }
    out
}

impl BinaryMatrix {
    /// All-zero matrix. Panics if either dimension is zero.
    pub fn zeros(lines: usize, columns: usize) -> Self {
        assert!(lines >= 1 && columns >= 1, "matrix dimensions must be >= 1");
        Self {
            lines,
            columns,
            cells: vec![0; lines * columns],
            ones: 0,
        }
    }

    /// Builds a matrix from rows of `'0'`/`'1'` characters.
    pub fn from_rows(rows: &[&str]) -> Result<Self, MatrixError> {
        if rows.is_empty() {
            return Err(MatrixError::EmptyMatrix);
        }
        let columns = rows[0].len();
        if columns == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        let mut m = Self::zeros(rows.len(), columns);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != columns {
                return Err(MatrixError::RaggedRows {
                    line: i,
                    expected: columns,
                    found: row.len(),
                });
            }
            for (j, ch) in row.bytes().enumerate() {
                match ch {
                    b'0' => {}
                    b'1' => m.set(i, j, true),
                    _ => {
                        return Err(MatrixError::NotBinary {
                            line: i,
                            column: j,
                            value: u32::from(ch),
                        })
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn line_count(&self) -> usize {
        self.lines
    }

    pub fn column_count(&self) -> usize {
        self.columns
    }

    /// Number of ones.
    pub fn ones(&self) -> usize {
        self.ones
    }

    pub fn get(&self, line: usize, column: usize) -> bool {
        assert!(line < self.lines && column < self.columns, "cell out of range");
        self.cells[line * self.columns + column] != 0
    }

    pub(crate) fn set(&mut self, line: usize, column: usize, value: bool) {
        let cell = &mut self.cells[line * self.columns + column];
        self.ones -= usize::from(*cell);
        *cell = u8::from(value);
        self.ones += usize::from(value);
    }

    pub(crate) fn line(&self, i: usize) -> &[u8] {
        &self.cells[i * self.columns..(i + 1) * self.columns]
    }

    pub(crate) fn from_cells(lines: usize, columns: usize, cells: Vec<u8>) -> Self {
        debug_assert_eq!(cells.len(), lines * columns);
        debug_assert!(cells.iter().all(|&c| c <= 1));
        let ones = cells.iter().map(|&c| usize::from(c)).sum();
        Self {
            lines,
            columns,
            cells,
            ones,
        }
    }

    pub(crate) fn cells(&self) -> &[u8] {
        &self.cells
    }

    /// Coordinates of every 1-entry in row-major order.
    pub fn iter_ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let columns = self.columns;
        self.cells
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(move |(k, _)| (k / columns, k % columns))
    }

    /// Number of unordered pairs of ones at Chebyshev distance one
    /// (8-neighborhood, diagonals included).
    pub fn density(&self) -> u64 {
        let (p, q) = (self.lines, self.columns);
        let mut pairs = 0u64;
        for i in 0..p {
            let row = self.line(i);
            let below = (i + 1 < p).then(|| self.line(i + 1));
            for j in 0..q {
                if row[j] == 0 {
                    continue;
                }
                // east, then the three neighbors in the next line; each
                // unordered pair is seen exactly once.
                if j + 1 < q && row[j + 1] != 0 {
                    pairs += 1;
                }
                if let Some(b) = below {
                    if j > 0 && b[j - 1] != 0 {
                        pairs += 1;
                    }
                    if b[j] != 0 {
                        pairs += 1;
                    }
                    if j + 1 < q && b[j + 1] != 0 {
                        pairs += 1;
                    }
                }
            }
        }
        pairs
    }

    fn check_selection(&self, sel: &Selection) -> Result<(), MatrixError> {
        if let Some(&i) = sel.lines().last() {
            if i + 1 >= self.lines {
                return Err(MatrixError::LineOutOfRange {
                    index: i,
                    lines: self.lines,
                });
            }
        }
        if let Some(&j) = sel.columns().last() {
            if j + 1 >= self.columns {
                return Err(MatrixError::ColumnOutOfRange {
                    index: j,
                    columns: self.columns,
                });
            }
        }
        Ok(())
    }

    /// Raw contraction: merges the selected lines (largest index first),
    /// then the selected columns, summing entries. The result keeps the
    /// original dimensions, with `|I|` trailing zero lines and `|J|`
    /// trailing zero columns. Entries may exceed one; see
    /// [`BinaryMatrix::is_valid`].
    pub fn contract(&self, sel: &Selection) -> Result<IntegerMatrix, MatrixError> {
        self.check_selection(sel)?;
        let (p, q) = (self.lines, self.columns);
        let mut rows: Vec<Vec<u32>> = (0..p)
            .map(|i| self.line(i).iter().map(|&c| u32::from(c)).collect())
            .collect();
        for &i in sel.lines().iter().rev() {
            let merged = rows.remove(i + 1);
            for (dst, src) in rows[i].iter_mut().zip(merged) {
                *dst += src;
            }
        }
        for &j in sel.columns().iter().rev() {
            for row in &mut rows {
                let merged = row.remove(j + 1);
                row[j] += merged;
            }
        }
        let kept_columns = q - sel.columns().len();
        let mut cells = Vec::with_capacity(p * q);
        for row in &rows {
            cells.extend_from_slice(row);
            cells.extend(core::iter::repeat(0).take(q - kept_columns));
        }
        cells.extend(core::iter::repeat(0).take(sel.lines().len() * q));
        Ok(IntegerMatrix {
            lines: p,
            columns: q,
            cells,
        })
    }

    /// Whether the contraction keeps the matrix binary (no two ones merged
    /// into one cell).
    pub fn is_valid(&self, sel: &Selection) -> Result<bool, MatrixError> {
        Ok(self.contract_checked(sel)?.is_some())
    }

    /// Contracts and trims in one step; `None` when the contraction is not
    /// valid. Merging aborts as soon as a cell reaches two.
    pub(crate) fn contract_checked(
        &self,
        sel: &Selection,
    ) -> Result<Option<BinaryMatrix>, MatrixError> {
        self.check_selection(sel)?;
        let mut rows: Vec<Vec<u8>> = (0..self.lines).map(|i| self.line(i).to_vec()).collect();
        for &i in sel.lines().iter().rev() {
            let merged = rows.remove(i + 1);
            for (dst, src) in rows[i].iter_mut().zip(merged) {
                if *dst & src != 0 {
                    return Ok(None);
                }
                *dst |= src;
            }
        }
        for &j in sel.columns().iter().rev() {
            for row in &mut rows {
                let merged = row.remove(j + 1);
                if row[j] & merged != 0 {
                    return Ok(None);
                }
                row[j] |= merged;
            }
        }
        let columns = self.columns - sel.columns().len();
        let mut cells = Vec::with_capacity(rows.len() * columns);
        for row in &rows {
            cells.extend_from_slice(row);
        }
        Ok(Some(BinaryMatrix::from_cells(rows.len(), columns, cells)))
    }

    /// Trimmed contracted matrix, of size `(p - |I|) x (q - |J|)`.
    /// Fails with [`MatrixError::InvalidContraction`] when ones collide.
    pub fn contracted(&self, sel: &Selection) -> Result<BinaryMatrix, MatrixError> {
        self.contract_checked(sel)?
            .ok_or(MatrixError::InvalidContraction)
    }

    /// Deletes every all-zero line and all-zero column. An all-zero matrix
    /// collapses to a 1x1 zero matrix rather than an empty one.
    pub fn reduce_empty(&self) -> BinaryMatrix {
        let keep_lines: Vec<usize> = (0..self.lines)
            .filter(|&i| self.line(i).iter().any(|&c| c != 0))
            .collect();
        let keep_columns: Vec<usize> = (0..self.columns)
            .filter(|&j| (0..self.lines).any(|i| self.cells[i * self.columns + j] != 0))
            .collect();
        if keep_lines.is_empty() {
            return BinaryMatrix::zeros(1, 1);
        }
        let mut cells = Vec::with_capacity(keep_lines.len() * keep_columns.len());
        for &i in &keep_lines {
            let row = self.line(i);
            cells.extend(keep_columns.iter().map(|&j| row[j]));
        }
        BinaryMatrix::from_cells(keep_lines.len(), keep_columns.len(), cells)
    }

    /// Whether merging lines `i` and `i + 1` is a valid contraction, i.e.
    /// no column holds a one in both lines. Runs in `O(q)`.
    pub fn single_line_valid(&self, i: usize) -> Result<bool, MatrixError> {
        if i + 1 >= self.lines {
            return Err(MatrixError::LineOutOfRange {
                index: i,
                lines: self.lines,
            });
        }
        Ok(rows_disjoint(self.line(i), self.line(i + 1)))
    }

    /// Column twin of [`BinaryMatrix::single_line_valid`], in `O(p)`.
    pub fn single_column_valid(&self, j: usize) -> Result<bool, MatrixError> {
        if j + 1 >= self.columns {
            return Err(MatrixError::ColumnOutOfRange {
                index: j,
                columns: self.columns,
            });
        }
        let q = self.columns;
        Ok(!self
            .cells
            .chunks_exact(q)
            .any(|row| row[j] & row[j + 1] != 0))
    }

    /// Density gained by contracting line `i`, computed from lines
    /// `i - 1 ..= i + 2` only, in `O(q)`. Requires the contraction to be
    /// valid; equals the full recomputation
    /// `contracted.density() - self.density()`.
    ///
    /// Pairs between the two merged lines survive the merge (a vertical or
    /// diagonal pair becomes a horizontal one), and pairs not touching the
    /// merged lines are unaffected, so the increment is exactly the number
    /// of new adjacencies between line `i - 1` and line `i + 1`, plus those
    /// between line `i` and line `i + 2`.
    pub fn density_delta_line(&self, i: usize) -> Result<i64, MatrixError> {
        if !self.single_line_valid(i)? {
            return Err(MatrixError::InvalidContraction);
        }
        let mut delta = 0i64;
        if i > 0 {
            delta += cross_pairs(self.line(i - 1), self.line(i + 1));
        }
        if i + 2 < self.lines {
            delta += cross_pairs(self.line(i), self.line(i + 2));
        }
        Ok(delta)
    }

    /// Column twin of [`BinaryMatrix::density_delta_line`], in `O(p)`.
    pub fn density_delta_column(&self, j: usize) -> Result<i64, MatrixError> {
        if !self.single_column_valid(j)? {
            return Err(MatrixError::InvalidContraction);
        }
        let q = self.columns;
        let col = |c: usize| self.cells.iter().skip(c).step_by(q);
        let cross = |a: usize, b: usize| -> i64 {
            let mut pairs = 0i64;
            let mut prev = 0u8;
            let mut cur = 0u8;
            for (k, (&x, &y)) in col(a).zip(col(b)).enumerate() {
                if k > 0 {
                    // diagonal neighbors between consecutive lines
                    pairs += i64::from(prev & y) + i64::from(cur & x);
                }
                pairs += i64::from(x & y);
                prev = x;
                cur = y;
            }
            pairs
        };
        let mut delta = 0i64;
        if j > 0 {
            delta += cross(j - 1, j + 1);
        }
        if j + 2 < self.columns {
            delta += cross(j, j + 2);
        }
        Ok(delta)
    }
}

fn rows_disjoint(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x & y == 0)
}

/// Unordered adjacencies between a one of `a` and a one of `b` when the two
/// slices sit on lines at distance one: columns may differ by at most one.
fn cross_pairs(a: &[u8], b: &[u8]) -> i64 {
    let mut pairs = 0i64;
    for (j, &y) in b.iter().enumerate() {
        if y == 0 {
            continue;
        }
        if j > 0 && a[j - 1] != 0 {
            pairs += 1;
        }
        if a[j] != 0 {
            pairs += 1;
        }
        if j + 1 < a.len() && a[j + 1] != 0 {
            pairs += 1;
        }
    }
    pairs
}

impl IntegerMatrix {
    pub fn line_count(&self) -> usize {
        self.lines
    }

    pub fn column_count(&self) -> usize {
        self.columns
    }

    pub fn get(&self, line: usize, column: usize) -> u32 {
        assert!(line < self.lines && column < self.columns, "cell out of range");
        self.cells[line * self.columns + column]
    }

    pub fn is_binary(&self) -> bool {
        self.cells.iter().all(|&c| c <= 1)
    }

    /// Reinterprets as a binary matrix; fails on the first entry above one.
    pub fn try_into_binary(&self) -> Result<BinaryMatrix, MatrixError> {
        self.check_binary_region(self.lines, self.columns)?;
        let cells = self.cells.iter().map(|&c| c as u8).collect();
        Ok(BinaryMatrix::from_cells(self.lines, self.columns, cells))
    }

    /// Drops the `|I|` trailing zero lines and `|J|` trailing zero columns
    /// left by [`BinaryMatrix::contract`], keeping the
    /// `(p - |I|) x (q - |J|)` top-left block. The contraction must have
    /// been valid.
    pub fn trim(&self, sel: &Selection) -> Result<BinaryMatrix, MatrixError> {
        let lines = self
            .lines
            .checked_sub(sel.lines().len())
            .filter(|&p| p >= 1)
            .ok_or(MatrixError::LineOutOfRange {
                index: sel.lines().len(),
                lines: self.lines,
            })?;
        let columns = self
            .columns
            .checked_sub(sel.columns().len())
            .filter(|&q| q >= 1)
            .ok_or(MatrixError::ColumnOutOfRange {
                index: sel.columns().len(),
                columns: self.columns,
            })?;
        self.check_binary_region(lines, columns)?;
        let mut cells = Vec::with_capacity(lines * columns);
        for i in 0..lines {
            let row = &self.cells[i * self.columns..i * self.columns + columns];
            cells.extend(row.iter().map(|&c| c as u8));
        }
        Ok(BinaryMatrix::from_cells(lines, columns, cells))
    }

    fn check_binary_region(&self, lines: usize, columns: usize) -> Result<(), MatrixError> {
        for i in 0..lines {
            for j in 0..columns {
                let value = self.cells[i * self.columns + j];
                if value > 1 {
                    return Err(MatrixError::NotBinary {
                        line: i,
                        column: j,
                        value,
                    });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix({}x{}, n={})", self.lines, self.columns, self.ones)?;
        for i in 0..self.lines {
            for &c in self.line(i) {
                write!(f, "{}", c)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 4x4 running example: ones at (0,0) (1,0) (1,2) (2,2) (3,1) (3,3).
    pub(crate) fn example_matrix() -> BinaryMatrix {
        BinaryMatrix::from_rows(&["1000", "1010", "0010", "0101"]).unwrap()
    }

    fn sel(lines: &[usize], columns: &[usize]) -> Selection {
        Selection::new(lines.to_vec(), columns.to_vec()).unwrap()
    }

    #[test]
    fn density_of_example_and_its_contractions() {
        let m = example_matrix();
        assert_eq!(m.density(), 4);
        let b = m.contracted(&sel(&[2], &[])).unwrap();
        assert_eq!(b.density(), 7);
        let c = m.contracted(&sel(&[2], &[0])).unwrap();
        assert_eq!(c.density(), 10);
    }

    #[test]
    fn density_trivia() {
        assert_eq!(BinaryMatrix::zeros(3, 4).density(), 0);
        let ones = BinaryMatrix::from_rows(&["11", "11"]).unwrap();
        assert_eq!(ones.density(), 6); // all C(4,2) pairs are neighbors
    }

    #[test]
    fn contract_matches_worked_product() {
        let m = example_matrix();
        let raw = m.contract(&sel(&[2], &[0])).unwrap();
        let expected = ["1000", "1100", "1110", "0000"];
        for (i, row) in expected.iter().enumerate() {
            for (j, ch) in row.bytes().enumerate() {
                assert_eq!(raw.get(i, j), u32::from(ch - b'0'), "cell ({i},{j})");
            }
        }
    }

    #[test]
    fn contract_with_empty_selection_is_identity() {
        let m = example_matrix();
        let raw = m.contract(&Selection::empty()).unwrap();
        assert_eq!(raw.try_into_binary().unwrap(), m);
    }

    #[test]
    fn invalid_contraction_stacks_two_ones() {
        let m = example_matrix();
        let raw = m.contract(&sel(&[], &[0, 1])).unwrap();
        assert_eq!(raw.get(1, 0), 2);
        let expected = [[1, 0, 0, 0], [2, 0, 0, 0], [1, 0, 0, 0], [1, 1, 0, 0]];
        for (i, row) in expected.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(raw.get(i, j), v, "cell ({i},{j})");
            }
        }
        assert!(!m.is_valid(&sel(&[], &[0, 1])).unwrap());
        assert!(m.is_valid(&sel(&[2], &[0])).unwrap());
    }

    #[test]
    fn all_zero_matrix_accepts_any_selection() {
        let z = BinaryMatrix::zeros(4, 5);
        assert!(z.is_valid(&sel(&[0, 1, 2], &[0, 2, 3])).unwrap());
    }

    #[test]
    fn out_of_range_selection_is_rejected() {
        let m = example_matrix();
        assert!(matches!(
            m.contract(&sel(&[3], &[])),
            Err(MatrixError::LineOutOfRange { .. })
        ));
        assert!(matches!(
            m.is_valid(&sel(&[], &[3])),
            Err(MatrixError::ColumnOutOfRange { .. })
        ));
    }

    #[test]
    fn trim_drops_trailing_zeros() {
        let m = example_matrix();
        let raw = m.contract(&sel(&[2], &[0])).unwrap();
        let t = raw.trim(&sel(&[2], &[0])).unwrap();
        assert_eq!(t, BinaryMatrix::from_rows(&["100", "110", "111"]).unwrap());
        assert_eq!(t.ones(), m.ones());

        let raw = m.contract(&Selection::empty()).unwrap();
        assert_eq!(raw.trim(&Selection::empty()).unwrap(), m);

        let unit = BinaryMatrix::from_rows(&["1"]).unwrap();
        let raw = unit.contract(&Selection::empty()).unwrap();
        assert_eq!(raw.trim(&Selection::empty()).unwrap(), unit);
    }

    #[test]
    fn trim_rejects_invalid_contraction_results() {
        let m = example_matrix();
        let raw = m.contract(&sel(&[], &[0, 1])).unwrap();
        assert!(matches!(
            raw.trim(&sel(&[], &[0, 1])),
            Err(MatrixError::NotBinary { value: 2, .. })
        ));
    }

    #[test]
    fn reduce_empty_cases() {
        let m = BinaryMatrix::from_rows(&["00", "01"]).unwrap();
        assert_eq!(m.reduce_empty(), BinaryMatrix::from_rows(&["1"]).unwrap());

        let fig = example_matrix();
        assert_eq!(fig.reduce_empty(), fig);

        assert_eq!(BinaryMatrix::zeros(3, 3).reduce_empty(), BinaryMatrix::zeros(1, 1));
    }

    #[test]
    fn single_line_and_column_validity() {
        let m = example_matrix();
        assert!(!m.single_line_valid(0).unwrap()); // lines 1 and 2 share column 1
        assert!(m.single_line_valid(2).unwrap());
        assert!(m.single_column_valid(0).unwrap());
        assert!(m.single_column_valid(1).unwrap());
        assert!(m.single_column_valid(2).unwrap());

        let pair = BinaryMatrix::from_rows(&["11"]).unwrap();
        assert!(!pair.single_column_valid(0).unwrap());

        let z = BinaryMatrix::zeros(3, 3);
        assert!(z.single_line_valid(0).unwrap());
        assert!(z.single_line_valid(1).unwrap());
        assert!(z.single_column_valid(1).unwrap());
        assert!(z.single_line_valid(2).is_err());
    }

    #[test]
    fn line_delta_matches_caption_densities() {
        let m = example_matrix();
        assert_eq!(m.density_delta_line(2).unwrap(), 3); // 4 -> 7

        let z = BinaryMatrix::zeros(4, 4);
        for i in 0..3 {
            assert_eq!(z.density_delta_line(i).unwrap(), 0);
        }

        let diag = BinaryMatrix::from_rows(&["10", "00", "01"]).unwrap();
        assert_eq!(diag.density_delta_line(1).unwrap(), 1);
    }

    #[test]
    fn column_delta_matches_caption_densities() {
        let m = example_matrix();
        let b = m.contracted(&sel(&[2], &[])).unwrap();
        assert_eq!(b.density_delta_column(0).unwrap(), 3); // 7 -> 10

        let z = BinaryMatrix::zeros(4, 4);
        for j in 0..3 {
            assert_eq!(z.density_delta_column(j).unwrap(), 0);
        }

        let row = BinaryMatrix::from_rows(&["101"]).unwrap();
        assert_eq!(row.density_delta_column(1).unwrap(), 1);
    }

    #[test]
    fn delta_on_invalid_contraction_is_an_error() {
        let m = example_matrix();
        assert!(matches!(
            m.density_delta_line(0),
            Err(MatrixError::InvalidContraction)
        ));
    }

    #[test]
    fn selection_must_be_strictly_increasing() {
        assert!(Selection::new(vec![2, 1], vec![]).is_err());
        assert!(Selection::new(vec![1, 1], vec![]).is_err());
        assert!(Selection::new(vec![0, 2], vec![1]).is_ok());
    }

    #[test]
    fn selection_wire_format_is_one_based() {
        let s = sel(&[2], &[0]);
        assert_eq!(alloc::format!("{s}"), "I: 3\nJ: 1");
        assert_eq!(s.lines_field(), "3");
        let s = sel(&[0, 2], &[]);
        assert_eq!(s.lines_field(), "1;3");
        assert_eq!(s.columns_field(), "");
    }
}
