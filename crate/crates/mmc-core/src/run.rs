//! Incremental contraction state.
//!
//! Solvers and heuristics contract one line or column at a time on the
//! current (already trimmed) matrix. Indices into the current matrix drift
//! away from the original numbering as merges remove lines, so the state
//! tracks, for every current line, the original index consumed when it is
//! merged with its successor. This keeps the reported [`Selection`] in
//! original-matrix indices, as required by the contraction product.

use alloc::vec::Vec;

use crate::error::MatrixError;
use crate::matrix::{BinaryMatrix, Selection};

/// A matrix being contracted step by step, with the running density and the
/// original-index selection accumulated so far.
#[derive(Clone)]
pub struct ContractionRun {
    current: BinaryMatrix,
    /// For current line `k`, the original index of the last original line
    /// merged into it; contracting current line `k` consumes this label.
    line_labels: Vec<usize>,
    column_labels: Vec<usize>,
    lines_taken: Vec<usize>,
    columns_taken: Vec<usize>,
    density: u64,
}

impl ContractionRun {
    pub fn new(matrix: &BinaryMatrix) -> Self {
        Self {
            current: matrix.clone(),
            line_labels: (0..matrix.line_count()).collect(),
            column_labels: (0..matrix.column_count()).collect(),
            lines_taken: Vec::new(),
            columns_taken: Vec::new(),
            density: matrix.density(),
        }
    }

    /// Starts from an already chosen selection, which must be valid.
    pub fn from_selection(matrix: &BinaryMatrix, sel: &Selection) -> Result<Self, MatrixError> {
        let mut run = Self::new(matrix);
        // Largest index first: indices below each merge keep their meaning,
        // so original indices can be applied directly.
        for &i in sel.lines().iter().rev() {
            if i + 1 >= run.current.line_count() {
                return Err(MatrixError::LineOutOfRange {
                    index: i,
                    lines: matrix.line_count(),
                });
            }
            if !run.try_contract_line(i) {
                return Err(MatrixError::InvalidContraction);
            }
        }
        for &j in sel.columns().iter().rev() {
            if j + 1 >= run.current.column_count() {
                return Err(MatrixError::ColumnOutOfRange {
                    index: j,
                    columns: matrix.column_count(),
                });
            }
            if !run.try_contract_column(j) {
                return Err(MatrixError::InvalidContraction);
            }
        }
        Ok(run)
    }

    pub fn current(&self) -> &BinaryMatrix {
        &self.current
    }

    /// Density of the current matrix, maintained incrementally.
    pub fn density(&self) -> u64 {
        self.density
    }

    pub fn line_valid(&self, i: usize) -> bool {
        self.current.single_line_valid(i).unwrap_or(false)
    }

    pub fn column_valid(&self, j: usize) -> bool {
        self.current.single_column_valid(j).unwrap_or(false)
    }

    /// Contracts current line `i` if valid; returns whether it was applied.
    pub fn try_contract_line(&mut self, i: usize) -> bool {
        let Ok(delta) = self.current.density_delta_line(i) else {
            return false;
        };
        self.density = self.density.checked_add_signed(delta).expect("density overflow");
        self.current = self
            .current
            .contracted(&Selection::new(alloc::vec![i], Vec::new()).unwrap())
            .expect("checked valid");
        self.lines_taken.push(self.line_labels.remove(i));
        debug_assert_eq!(self.density, self.current.density());
        true
    }

    pub fn try_contract_column(&mut self, j: usize) -> bool {
        let Ok(delta) = self.current.density_delta_column(j) else {
            return false;
        };
        self.density = self.density.checked_add_signed(delta).expect("density overflow");
        self.current = self
            .current
            .contracted(&Selection::new(Vec::new(), alloc::vec![j]).unwrap())
            .expect("checked valid");
        self.columns_taken.push(self.column_labels.remove(j));
        debug_assert_eq!(self.density, self.current.density());
        true
    }

    /// The accumulated selection, in original-matrix indices.
    pub fn selection(&self) -> Selection {
        let mut lines = self.lines_taken.clone();
        let mut columns = self.columns_taken.clone();
        lines.sort_unstable();
        columns.sort_unstable();
        Selection::new(lines, columns).expect("labels are unique")
    }

    /// Whether no further single contraction is valid.
    pub fn is_maximal(&self) -> bool {
        let p = self.current.line_count();
        let q = self.current.column_count();
        !(0..p.saturating_sub(1)).any(|i| self.line_valid(i))
            && !(0..q.saturating_sub(1)).any(|j| self.column_valid(j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stepwise_contraction_tracks_original_indices() {
        // 5 lines; contract current line 2, then current line 2 again.
        let m = BinaryMatrix::zeros(5, 2);
        let mut run = ContractionRun::new(&m);
        assert!(run.try_contract_line(2));
        assert!(run.try_contract_line(2));
        // Second contraction merges the {2,3} group with line 4: original
        // boundary index 3.
        assert_eq!(run.selection().lines(), &[2, 3]);
        assert_eq!(run.current().line_count(), 3);
    }

    #[test]
    fn stepwise_result_equals_direct_contraction() {
        let m = BinaryMatrix::from_rows(&["1000", "1010", "0010", "0101"]).unwrap();
        let mut run = ContractionRun::new(&m);
        assert!(run.try_contract_line(2));
        assert!(run.try_contract_column(0));
        let sel = run.selection();
        assert_eq!(sel.lines(), &[2]);
        assert_eq!(sel.columns(), &[0]);
        assert_eq!(run.current(), &m.contracted(&sel).unwrap());
        assert_eq!(run.density(), 10);
        assert!(run.is_maximal());
    }

    #[test]
    fn invalid_step_is_refused_without_state_change() {
        let m = BinaryMatrix::from_rows(&["10", "10"]).unwrap();
        let mut run = ContractionRun::new(&m);
        assert!(!run.try_contract_line(0));
        assert_eq!(run.current(), &m);
        assert!(run.selection().is_empty());
    }

    #[test]
    fn from_selection_applies_and_rejects() {
        let m = BinaryMatrix::from_rows(&["1000", "1010", "0010", "0101"]).unwrap();
        let sel = Selection::new(vec![2], vec![0]).unwrap();
        let run = ContractionRun::from_selection(&m, &sel).unwrap();
        assert_eq!(run.density(), 10);
        assert_eq!(run.selection(), sel);

        let bad = Selection::new(vec![0], vec![]).unwrap();
        assert!(matches!(
            ContractionRun::from_selection(&m, &bad),
            Err(MatrixError::InvalidContraction)
        ));
    }
}
