//! Polynomial heuristics: LCL, the density-increment greedy and the
//! neighborization greedy.
//!
//! LCL runs two first-come-first-served passes (lines then columns, and
//! columns then lines) and keeps the denser outcome; a pass scans indices
//! from the last gap down to the first and contracts every valid one on the
//! spot. The greedy applies, at each step, the single valid contraction
//! with the largest density increment. Neighborization instead maximizes
//! the number of pairs of ones that some valid contraction could still make
//! neighbors, which keeps it from locking pairs out for short-term gains.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::matrix::{BinaryMatrix, Selection};
use crate::run::ContractionRun;
use crate::solvers::{complete_to_maximal, measure, Algorithm, ScanOrder, SolveReport};

/// Reachability of 1-entry pairs: for every unordered pair of ones, whether
/// some valid contraction moves them next to each other. `count` is the
/// number of reachable pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReachability {
    pub count: u64,
    pub per_pair: BTreeMap<((usize, usize), (usize, usize)), bool>,
}

/// First-come-first-served heuristic. Runs the line-column pass and the
/// column-line pass, keeps the denser result (ties go to the line-column
/// pass), then completes it to a maximal solution as a backstop. Both
/// passes run in `O(p * q)` using in-place merges.
pub fn lcl(matrix: &BinaryMatrix) -> SolveReport {
    let (outcome, elapsed) = measure(|| {
        let lc = lc_pass(matrix);
        let cl = cl_pass(matrix);
        let lc_density = lc.matrix.density();
        let cl_density = cl.matrix.density();
        let (pass, chosen, pre_density) = if cl_density > lc_density {
            ("CL", cl, cl_density)
        } else {
            ("LC", lc, lc_density)
        };
        let picked = Selection::new(chosen.lines, chosen.columns).expect("sorted by pass");
        let selection =
            complete_to_maximal(matrix, &picked, ScanOrder::default()).expect("pass is valid");
        let result = matrix.contracted(&selection).expect("maximal completion is valid");
        let density = result.density();
        let meta = format!(
            "pass={pass};lc_density={lc_density};cl_density={cl_density};pre_backstop_density={pre_density}"
        );
        (selection, result, density, meta)
    });
    let (selection, result, density, instance_meta) = outcome;
    SolveReport {
        algorithm: Algorithm::Lcl,
        selection,
        result,
        density,
        elapsed,
        instance_meta,
    }
}

struct PassResult {
    lines: Vec<usize>,
    columns: Vec<usize>,
    matrix: BinaryMatrix,
}

fn lc_pass(matrix: &BinaryMatrix) -> PassResult {
    let (p, q) = (matrix.line_count(), matrix.column_count());
    let mut cells = matrix.cells().to_vec();
    let mut lines = line_sweep(&mut cells, p, q);
    let (cells, p) = compact_lines(&cells, p, q, &lines);
    let mut cells = cells;
    let mut columns = column_sweep(&mut cells, p, q);
    let (cells, q) = compact_columns(&cells, p, q, &columns);
    lines.reverse();
    columns.reverse();
    PassResult {
        lines,
        columns,
        matrix: BinaryMatrix::from_cells(p, q, cells),
    }
}

fn cl_pass(matrix: &BinaryMatrix) -> PassResult {
    let (p, q) = (matrix.line_count(), matrix.column_count());
    let mut cells = matrix.cells().to_vec();
    let mut columns = column_sweep(&mut cells, p, q);
    let (cells, q) = compact_columns(&cells, p, q, &columns);
    let mut cells = cells;
    let mut lines = line_sweep(&mut cells, p, q);
    let (cells, p) = compact_lines(&cells, p, q, &lines);
    lines.reverse();
    columns.reverse();
    PassResult {
        lines,
        columns,
        matrix: BinaryMatrix::from_cells(p, q, cells),
    }
}

/// Scans line gaps from `p - 2` down to `0`, merging line `i + 1` into line
/// `i` whenever the two share no column. Merged-away lines go stale in
/// place; the scan never revisits them. Returns the taken indices in
/// decreasing order.
fn line_sweep(cells: &mut [u8], p: usize, q: usize) -> Vec<usize> {
    let mut taken = Vec::new();
    for i in (0..p.saturating_sub(1)).rev() {
        let (head, tail) = cells.split_at_mut((i + 1) * q);
        let row = &mut head[i * q..];
        let next = &tail[..q];
        if row.iter().zip(next).all(|(&a, &b)| a & b == 0) {
            for (dst, &src) in row.iter_mut().zip(next) {
                *dst |= src;
            }
            taken.push(i);
        }
    }
    taken
}

fn compact_lines(cells: &[u8], p: usize, q: usize, taken: &[usize]) -> (Vec<u8>, usize) {
    let mut merged = vec![false; p];
    for &i in taken {
        merged[i] = true;
    }
    let mut out = Vec::with_capacity((p - taken.len()) * q);
    for i in 0..p {
        if i == 0 || !merged[i - 1] {
            out.extend_from_slice(&cells[i * q..(i + 1) * q]);
        }
    }
    (out, p - taken.len())
}

fn column_sweep(cells: &mut [u8], p: usize, q: usize) -> Vec<usize> {
    let mut taken = Vec::new();
    for j in (0..q.saturating_sub(1)).rev() {
        let conflict = (0..p).any(|r| cells[r * q + j] & cells[r * q + j + 1] != 0);
        if !conflict {
            for r in 0..p {
                cells[r * q + j] |= cells[r * q + j + 1];
            }
            taken.push(j);
        }
    }
    taken
}

fn compact_columns(cells: &[u8], p: usize, q: usize, taken: &[usize]) -> (Vec<u8>, usize) {
    let mut merged = vec![false; q];
    for &j in taken {
        merged[j] = true;
    }
    let keep: Vec<usize> = (0..q).filter(|&j| j == 0 || !merged[j - 1]).collect();
    let mut out = Vec::with_capacity(p * keep.len());
    for r in 0..p {
        out.extend(keep.iter().map(|&j| cells[r * q + j]));
    }
    (out, keep.len())
}

/// Density-increment greedy: repeatedly applies the valid single
/// contraction with the largest density delta until the solution is
/// maximal. Ties prefer lines over columns, then the smallest index.
pub fn greedy(matrix: &BinaryMatrix) -> SolveReport {
    let (run, elapsed) = measure(|| {
        let mut run = ContractionRun::new(matrix);
        loop {
            let current = run.current();
            let mut best: Option<(i64, Move)> = None;
            for i in 0..current.line_count().saturating_sub(1) {
                if let Ok(delta) = current.density_delta_line(i) {
                    if best.as_ref().is_none_or(|(d, _)| delta > *d) {
                        best = Some((delta, Move::Line(i)));
                    }
                }
            }
            for j in 0..current.column_count().saturating_sub(1) {
                if let Ok(delta) = current.density_delta_column(j) {
                    if best.as_ref().is_none_or(|(d, _)| delta > *d) {
                        best = Some((delta, Move::Column(j)));
                    }
                }
            }
            match best {
                Some((_, mv)) => apply(&mut run, mv),
                None => break,
            }
        }
        run
    });
    report_from_run(Algorithm::Greedy, run, elapsed)
}

#[derive(Clone, Copy)]
enum Move {
    Line(usize),
    Column(usize),
}

fn apply(run: &mut ContractionRun, mv: Move) {
    let applied = match mv {
        Move::Line(i) => run.try_contract_line(i),
        Move::Column(j) => run.try_contract_column(j),
    };
    debug_assert!(applied, "chosen move must be valid");
}

fn report_from_run(algorithm: Algorithm, run: ContractionRun, elapsed: core::time::Duration) -> SolveReport {
    debug_assert!(run.is_maximal());
    SolveReport {
        algorithm,
        selection: run.selection(),
        density: run.density(),
        result: run.current().clone(),
        elapsed,
        instance_meta: String::new(),
    }
}

/// Whether the ones at `a` and `b` can be made 8-neighbors by some valid
/// contraction. Zero when either coordinate holds a zero.
///
/// Only lines and columns strictly between the two entries change their
/// relative gaps, and dropping contractions from a valid selection keeps it
/// valid, so it is enough to try, per axis with gap at least two, every
/// choice of a single uncontracted line (or column) among the in-between
/// ones. Entries already adjacent are reachable through the empty
/// contraction.
pub fn n_pair(matrix: &BinaryMatrix, a: (usize, usize), b: (usize, usize)) -> bool {
    if a == b || !matrix.get(a.0, a.1) || !matrix.get(b.0, b.1) {
        return false;
    }
    let line_gap = a.0.abs_diff(b.0);
    let column_gap = a.1.abs_diff(b.1);
    if line_gap <= 1 && column_gap <= 1 {
        return true;
    }
    let line_choices = leave_one_out(a.0.min(b.0), line_gap);
    let column_choices = leave_one_out(a.1.min(b.1), column_gap);
    for lines in &line_choices {
        for columns in &column_choices {
            let sel = Selection::new(lines.clone(), columns.clone()).expect("increasing");
            if matrix.is_valid(&sel).expect("in range") {
                return true;
            }
        }
    }
    false
}

/// Contraction index sets between two entries at distance `gap` on one
/// axis, leaving exactly one index uncontracted; just the empty set when
/// the gap is already at most one.
fn leave_one_out(low: usize, gap: usize) -> Vec<Vec<usize>> {
    if gap <= 1 {
        return vec![Vec::new()];
    }
    (0..gap)
        .map(|skip| (low..low + gap).filter(|&k| k != low + skip).collect())
        .collect()
}

/// Computes [`n_pair`] for every unordered pair of ones.
pub fn n_value(matrix: &BinaryMatrix) -> PairReachability {
    let ones: Vec<(usize, usize)> = matrix.iter_ones().collect();
    let mut per_pair = BTreeMap::new();
    let mut count = 0u64;
    for (k, &a) in ones.iter().enumerate() {
        for &b in &ones[k + 1..] {
            let reachable = n_pair(matrix, a, b);
            count += u64::from(reachable);
            per_pair.insert((a, b), reachable);
        }
    }
    PairReachability { count, per_pair }
}

/// Sum-only variant of [`n_value`] used in the neighborization loop.
fn n_count(matrix: &BinaryMatrix) -> u64 {
    let ones: Vec<(usize, usize)> = matrix.iter_ones().collect();
    let mut count = 0u64;
    for (k, &a) in ones.iter().enumerate() {
        for &b in &ones[k + 1..] {
            count += u64::from(n_pair(matrix, a, b));
        }
    }
    count
}

/// Neighborization greedy: at each step applies the valid single
/// contraction whose result keeps the most pairs of ones reachable. Ties
/// prefer lines over columns, then the smallest index.
pub fn neighborization(matrix: &BinaryMatrix) -> SolveReport {
    let (run, elapsed) = measure(|| {
        let mut run = ContractionRun::new(matrix);
        loop {
            let mut best: Option<(u64, Move)> = None;
            let current = run.current();
            for i in 0..current.line_count().saturating_sub(1) {
                if run.line_valid(i) {
                    let score = score_move(&run, Move::Line(i));
                    if best.as_ref().is_none_or(|(s, _)| score > *s) {
                        best = Some((score, Move::Line(i)));
                    }
                }
            }
            for j in 0..current.column_count().saturating_sub(1) {
                if run.column_valid(j) {
                    let score = score_move(&run, Move::Column(j));
                    if best.as_ref().is_none_or(|(s, _)| score > *s) {
                        best = Some((score, Move::Column(j)));
                    }
                }
            }
            match best {
                Some((_, mv)) => apply(&mut run, mv),
                None => break,
            }
        }
        run
    });
    report_from_run(Algorithm::Neighborization, run, elapsed)
}

fn score_move(run: &ContractionRun, mv: Move) -> u64 {
    let mut probe = run.clone();
    apply(&mut probe, mv);
    n_count(probe.current())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{is_maximal, naive_enumerate};

    fn example_matrix() -> BinaryMatrix {
        BinaryMatrix::from_rows(&["1000", "1010", "0010", "0101"]).unwrap()
    }

    #[test]
    fn lcl_takes_line_then_column_on_the_example() {
        let m = example_matrix();
        let report = lcl(&m);
        assert_eq!(report.density, 10);
        assert_eq!(report.selection.lines(), &[2]);
        assert_eq!(report.selection.columns(), &[0]);
        assert!(report.instance_meta.contains("pass=LC"));
        assert!(report.instance_meta.contains("pre_backstop_density=10"));
    }

    #[test]
    fn lcl_contracts_a_zero_matrix_completely() {
        let z = BinaryMatrix::zeros(4, 3);
        let report = lcl(&z);
        assert_eq!(report.density, 0);
        assert_eq!(report.selection.lines(), &[0, 1, 2]);
        assert_eq!(report.selection.columns(), &[0, 1]);
        assert_eq!(report.result.line_count(), 1);
        assert_eq!(report.result.column_count(), 1);
    }

    #[test]
    fn lcl_on_single_column_instances_reaches_density_n_minus_1() {
        // At most one 1 per line: the LC part piles them into a line of ones.
        let m = BinaryMatrix::from_rows(&["1", "0", "1", "0", "1"]).unwrap();
        let report = lcl(&m);
        assert_eq!(report.density, m.ones() as u64 - 1);
    }

    #[test]
    fn greedy_takes_the_bait_on_the_example() {
        // The first step contracts column 2 for a +4 increment, which locks
        // the instance at density 8; the optimum 10 needs the +3 line move
        // first. The trap is what the neighborization score avoids.
        let m = example_matrix();
        let report = greedy(&m);
        assert_eq!(report.density, 8);
        assert_eq!(report.selection.lines(), &[]);
        assert_eq!(report.selection.columns(), &[1]);
        assert!(is_maximal(&m, &report.selection).unwrap());
        assert_eq!(naive_enumerate(&m).unwrap().density, 10);
    }

    #[test]
    fn greedy_on_trivial_instances() {
        let z = BinaryMatrix::zeros(3, 3);
        let report = greedy(&z);
        assert_eq!(report.density, 0);
        assert_eq!(report.selection.lines(), &[0, 1]);
        assert_eq!(report.selection.columns(), &[0, 1]);

        // 2x2 identity: every first move is worth 0; lines win the tie.
        let id = BinaryMatrix::from_rows(&["10", "01"]).unwrap();
        let report = greedy(&id);
        assert_eq!(report.density, 1);
        assert_eq!(report.selection.lines(), &[0]);
        assert_eq!(report.selection.columns(), &[]);
        assert_eq!(naive_enumerate(&id).unwrap().density, 1);
    }

    #[test]
    fn n_pair_examples() {
        let m = example_matrix();
        // Already vertical neighbors.
        assert!(n_pair(&m, (0, 0), (1, 0)));
        // Needs the line-3 contraction.
        assert!(n_pair(&m, (1, 2), (3, 1)));
        // A zero coordinate is unreachable by definition.
        assert!(!n_pair(&m, (0, 1), (1, 0)));

        // Both two-column contractions between the outer ones collide.
        let row = BinaryMatrix::from_rows(&["1101"]).unwrap();
        assert!(!n_pair(&row, (0, 0), (0, 3)));
    }

    #[test]
    fn n_pair_is_symmetric() {
        let m = example_matrix();
        let ones: Vec<_> = m.iter_ones().collect();
        for &a in &ones {
            for &b in &ones {
                assert_eq!(n_pair(&m, a, b), n_pair(&m, b, a));
            }
        }
    }

    #[test]
    fn n_value_counts() {
        assert_eq!(n_value(&BinaryMatrix::zeros(3, 3)).count, 0);

        let ones = BinaryMatrix::from_rows(&["11", "11"]).unwrap();
        let reach = n_value(&ones);
        assert_eq!(reach.count, 6);
        assert_eq!(reach.per_pair.len(), 6);
        assert!(reach.per_pair.values().all(|&v| v));

        // Frozen by the leave-one-out enumeration; at least the four
        // current density pairs must be reachable.
        let m = example_matrix();
        let reach = n_value(&m);
        assert_eq!(reach.per_pair.len(), 15);
        assert_eq!(reach.count, 11);
        assert!(reach.count >= m.density());
    }

    #[test]
    fn neighborization_reaches_the_example_optimum() {
        let m = example_matrix();
        let report = neighborization(&m);
        assert_eq!(report.density, 10);

        assert_eq!(neighborization(&BinaryMatrix::zeros(3, 3)).density, 0);

        let id = BinaryMatrix::from_rows(&["10", "01"]).unwrap();
        assert_eq!(neighborization(&id).density, 1);
    }

    #[test]
    fn heuristics_return_maximal_solutions() {
        let m = example_matrix();
        for report in [lcl(&m), greedy(&m), neighborization(&m)] {
            assert!(is_maximal(&m, &report.selection).unwrap(), "{}", report.algorithm);
            assert_eq!(report.density, report.result.density());
        }
    }
}
