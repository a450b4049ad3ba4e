//! Maximality, exhaustive enumeration and the exact branch-and-prune solver.
//!
//! A feasible selection is *maximal* when no further single line or column
//! contraction of the contracted matrix is valid. Every maximal solution of
//! an instance with `n >= 1` ones has density between `2 sqrt(n) - 2` and
//! `4 n`: each remaining line gap is blocked by a vertical neighbor pair,
//! each column gap by a horizontal one, and a one has at most eight
//! neighbors.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use crate::error::{MatrixError, SolveError};
use crate::matrix::{BinaryMatrix, Selection};
use crate::run::ContractionRun;

/// Tag for the algorithm that produced a report.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Algorithm {
    Lcl,
    Greedy,
    Neighborization,
    Exact,
    Naive,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Lcl => "lcl",
            Algorithm::Greedy => "greedy",
            Algorithm::Neighborization => "neigh",
            Algorithm::Exact => "exact",
            Algorithm::Naive => "naive",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of a solver run: the chosen selection, the trimmed contracted
/// matrix and its density, plus wall time and free-form provenance.
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub algorithm: Algorithm,
    pub selection: Selection,
    pub result: BinaryMatrix,
    pub density: u64,
    pub elapsed: Duration,
    pub instance_meta: String,
}

/// Column header matching [`SolveReport::csv_row`].
pub const REPORT_CSV_HEADER: &str = "algorithm,p,q,n,density,elapsed_ms,I,J";

impl SolveReport {
    /// One CSV row: `algorithm,p,q,n,density,elapsed_ms,I,J` where `p`, `q`
    /// and `n` describe the original instance and `I`/`J` are
    /// semicolon-joined 1-based indices.
    pub fn csv_row(&self) -> String {
        use core::fmt::Write;
        let p = self.result.line_count() + self.selection.lines().len();
        let q = self.result.column_count() + self.selection.columns().len();
        let mut row = String::new();
        let _ = write!(
            row,
            "{},{},{},{},{},{:.3},{},{}",
            self.algorithm,
            p,
            q,
            self.result.ones(),
            self.density,
            self.elapsed.as_secs_f64() * 1e3,
            self.selection.lines_field(),
            self.selection.columns_field(),
        );
        row
    }
}

#[cfg(feature = "std")]
pub(crate) fn measure<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = std::time::Instant::now();
    let value = f();
    (value, start.elapsed())
}

#[cfg(not(feature = "std"))]
pub(crate) fn measure<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    (f(), Duration::ZERO)
}

/// Whether `sel` is a maximal feasible solution for `matrix`: valid, and no
/// single additional line or column contraction of the trimmed result is
/// valid.
pub fn is_maximal(matrix: &BinaryMatrix, sel: &Selection) -> Result<bool, MatrixError> {
    let run = ContractionRun::from_selection(matrix, sel)?;
    Ok(run.is_maximal())
}

/// Scan order used by [`complete_to_maximal`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ScanOrder {
    /// Lines from the bottom up, then columns from the right, repeated to a
    /// fixpoint.
    #[default]
    LinesDescThenColumnsDesc,
    ColumnsDescThenLinesDesc,
}

/// Extends a valid selection until it is maximal, contracting greedily in
/// the given scan order. The input selection is always contained in the
/// output.
pub fn complete_to_maximal(
    matrix: &BinaryMatrix,
    sel: &Selection,
    order: ScanOrder,
) -> Result<Selection, MatrixError> {
    let mut run = ContractionRun::from_selection(matrix, sel)?;
    loop {
        let mut progressed = false;
        let passes: [bool; 2] = match order {
            ScanOrder::LinesDescThenColumnsDesc => [true, false],
            ScanOrder::ColumnsDescThenLinesDesc => [false, true],
        };
        for lines_pass in passes {
            if lines_pass {
                for i in (0..run.current().line_count().saturating_sub(1)).rev() {
                    progressed |= run.try_contract_line(i);
                }
            } else {
                for j in (0..run.current().column_count().saturating_sub(1)).rev() {
                    progressed |= run.try_contract_column(j);
                }
            }
        }
        if !progressed {
            return Ok(run.selection());
        }
    }
}

/// Instances with `p + q` above this are refused by [`naive_enumerate`];
/// the subset count doubles with every extra line or column.
pub const NAIVE_SIZE_LIMIT: usize = 20;

/// Exhaustively enumerates every subset of lines and columns, keeping the
/// valid contraction of maximum density; ties go to the lexicographically
/// smallest `(I, J)`. Refuses instances with `p + q > NAIVE_SIZE_LIMIT`.
pub fn naive_enumerate(matrix: &BinaryMatrix) -> Result<SolveReport, SolveError> {
    let (p, q) = (matrix.line_count(), matrix.column_count());
    if p + q > NAIVE_SIZE_LIMIT {
        return Err(SolveError::TooLarge {
            lines: p,
            columns: q,
            limit: NAIVE_SIZE_LIMIT,
        });
    }
    Ok(naive_enumerate_forced(matrix))
}

/// [`naive_enumerate`] without the size guard.
pub fn naive_enumerate_forced(matrix: &BinaryMatrix) -> SolveReport {
    let (outcome, elapsed) = measure(|| naive_search(matrix));
    let (selection, result, density) = outcome;
    SolveReport {
        algorithm: Algorithm::Naive,
        selection,
        result,
        density,
        elapsed,
        instance_meta: String::new(),
    }
}

fn mask_to_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&b| mask & (1 << b) != 0).collect()
}

fn naive_search(matrix: &BinaryMatrix) -> (Selection, BinaryMatrix, u64) {
    let (p, q) = (matrix.line_count(), matrix.column_count());
    let mut best: Option<(u64, Selection, BinaryMatrix)> = None;
    for line_mask in 0u32..1 << (p - 1) {
        let lines = mask_to_indices(line_mask);
        let line_sel = Selection::new(lines.clone(), Vec::new()).unwrap();
        // If the line merges alone already collide, no column subset can
        // help: contraction only ever adds entries together.
        let Some(row_merged) = matrix.contract_checked(&line_sel).unwrap() else {
            continue;
        };
        for column_mask in 0u32..1 << (q - 1) {
            let columns = mask_to_indices(column_mask);
            let column_sel = Selection::new(Vec::new(), columns.clone()).unwrap();
            let Some(final_matrix) = row_merged.contract_checked(&column_sel).unwrap() else {
                continue;
            };
            let density = final_matrix.density();
            let better = match &best {
                None => true,
                Some((best_density, best_sel, _)) => {
                    density > *best_density
                        || (density == *best_density
                            && (&lines, &columns)
                                < (&best_sel.lines().to_vec(), &best_sel.columns().to_vec()))
                }
            };
            if better {
                best = Some((
                    density,
                    Selection::new(lines.clone(), columns).unwrap(),
                    final_matrix,
                ));
            }
        }
    }
    let (density, selection, result) = best.expect("empty selection is always valid");
    (selection, result, density)
}

/// Exact solver: depth-first over contract-or-skip decisions, lines in
/// decreasing index order then columns, pruning branches as soon as a merge
/// collides. Deterministic: among optima it returns the lexicographically
/// smallest `(I, J)`.
pub fn exact_solve(matrix: &BinaryMatrix) -> SolveReport {
    let (outcome, elapsed) = measure(|| {
        let mut search = ExactSearch::new(matrix, None);
        search.run(matrix);
        search.into_best()
    });
    let (selection, result, density) = outcome;
    SolveReport {
        algorithm: Algorithm::Exact,
        selection,
        result,
        density,
        elapsed,
        instance_meta: String::new(),
    }
}

/// [`exact_solve`] with a wall-clock budget. Returns the report and whether
/// the search completed; on timeout the best solution found so far is
/// reported and flagged `non-certified` in its metadata.
#[cfg(feature = "std")]
pub fn exact_solve_with_budget(matrix: &BinaryMatrix, budget: Duration) -> (SolveReport, bool) {
    let deadline = std::time::Instant::now() + budget;
    let (outcome, elapsed) = measure(|| {
        let mut search = ExactSearch::new(matrix, Some(deadline));
        search.run(matrix);
        let certified = !search.timed_out;
        (search.into_best(), certified)
    });
    let ((selection, result, density), certified) = outcome;
    let report = SolveReport {
        algorithm: Algorithm::Exact,
        selection,
        result,
        density,
        elapsed,
        instance_meta: if certified {
            String::new()
        } else {
            String::from("non-certified: time budget exceeded")
        },
    };
    (report, certified)
}

struct ExactSearch {
    best: Option<(u64, Selection, BinaryMatrix)>,
    /// Densities can never exceed four times the number of ones, so a best
    /// solution hitting that bound ends the search.
    density_cap: u64,
    done: bool,
    #[cfg(feature = "std")]
    deadline: Option<std::time::Instant>,
    #[cfg(feature = "std")]
    node_counter: u32,
    #[cfg(feature = "std")]
    timed_out: bool,
}

#[cfg(feature = "std")]
type Deadline = Option<std::time::Instant>;
#[cfg(not(feature = "std"))]
type Deadline = Option<core::convert::Infallible>;

impl ExactSearch {
    fn new(matrix: &BinaryMatrix, deadline: Deadline) -> Self {
        #[cfg(not(feature = "std"))]
        let _ = deadline;
        Self {
            best: None,
            density_cap: 4 * matrix.ones() as u64,
            done: false,
            #[cfg(feature = "std")]
            deadline,
            #[cfg(feature = "std")]
            node_counter: 0,
            #[cfg(feature = "std")]
            timed_out: false,
        }
    }

    fn run(&mut self, matrix: &BinaryMatrix) {
        let run = ContractionRun::new(matrix);
        let first_line = matrix.line_count().checked_sub(2);
        self.descend_lines(run, first_line);
    }

    fn check_budget(&mut self) -> bool {
        #[cfg(feature = "std")]
        {
            if let Some(deadline) = self.deadline {
                self.node_counter = self.node_counter.wrapping_add(1);
                if self.node_counter % 64 == 0 && std::time::Instant::now() > deadline {
                    self.timed_out = true;
                    self.done = true;
                }
            }
        }
        self.done
    }

    fn descend_lines(&mut self, run: ContractionRun, next: Option<usize>) {
        if self.check_budget() {
            return;
        }
        let Some(i) = next else {
            let q = run.current().column_count();
            self.descend_columns(run, q.checked_sub(2));
            return;
        };
        // Decisions run in decreasing original index, so the current and
        // original numbering agree at index i. Skip first: the first leaf
        // is then the empty selection, the lexicographic minimum, which
        // keeps the density-cap stop tie-break safe.
        let branch = run.line_valid(i).then(|| run.clone());
        self.descend_lines(run, i.checked_sub(1));
        if self.done {
            return;
        }
        if let Some(mut contracted) = branch {
            let applied = contracted.try_contract_line(i);
            debug_assert!(applied);
            self.descend_lines(contracted, i.checked_sub(1));
        }
    }

    fn descend_columns(&mut self, run: ContractionRun, next: Option<usize>) {
        if self.check_budget() {
            return;
        }
        let Some(j) = next else {
            self.offer(run);
            return;
        };
        let branch = run.column_valid(j).then(|| run.clone());
        self.descend_columns(run, j.checked_sub(1));
        if self.done {
            return;
        }
        if let Some(mut contracted) = branch {
            let applied = contracted.try_contract_column(j);
            debug_assert!(applied);
            self.descend_columns(contracted, j.checked_sub(1));
        }
    }

    fn offer(&mut self, run: ContractionRun) {
        let density = run.density();
        let better = match &self.best {
            None => true,
            Some((best_density, best_sel, _)) => {
                density > *best_density
                    || (density == *best_density && run.selection() < *best_sel)
            }
        };
        if better {
            self.best = Some((density, run.selection(), run.current().clone()));
            if density >= self.density_cap {
                self.done = true;
            }
        }
    }

    fn into_best(self) -> (Selection, BinaryMatrix, u64) {
        let (density, selection, result) = self.best.expect("empty selection is always offered");
        (selection, result, density)
    }
}
