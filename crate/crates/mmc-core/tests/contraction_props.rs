//! Property tests for the contraction semantics, checked against
//! independent oracles: the literal matrix-product definition of a
//! contraction, full density recomputation, and a step-by-step greedy
//! re-simulation.

use mmc_core::heuristics::{greedy, lcl, neighborization};
use mmc_core::instances::{parse_instance, serialize_instance};
use mmc_core::matrix::{BinaryMatrix, Selection};
use mmc_core::solvers::{complete_to_maximal, is_maximal, ScanOrder};
use proptest::prelude::*;

/// `p x p` line contraction matrix for 0-based contraction index `i`:
/// result line `k` collects source line `k` below `i`, lines `i` and
/// `i + 1` at `i`, line `k + 1` above, and nothing in the last line.
fn line_contraction_matrix(p: usize, i: usize) -> Vec<Vec<u32>> {
    let mut l = vec![vec![0u32; p]; p];
    for k in 0..p {
        if k < i {
            l[k][k] = 1;
        } else if k == i {
            l[k][i] = 1;
            l[k][i + 1] = 1;
        } else if k + 1 < p {
            l[k][k + 1] = 1;
        }
    }
    l
}

/// `q x q` column contraction matrix for 0-based contraction index `j`,
/// applied on the right.
fn column_contraction_matrix(q: usize, j: usize) -> Vec<Vec<u32>> {
    let mut c = vec![vec![0u32; q]; q];
    for l in 0..q {
        if l < j {
            c[l][l] = 1;
        } else if l == j {
            c[j][j] = 1;
            c[j + 1][j] = 1;
        } else if l + 1 < q {
            c[l + 1][l] = 1;
        }
    }
    c
}

fn matmul(a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let rows = a.len();
    let inner = b.len();
    let cols = b[0].len();
    let mut out = vec![vec![0u32; cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// The contraction computed straight from its definition as a product of
/// contraction matrices: `L_{i_1} ... L_{i_m} * M * C_{j_n} ... C_{j_1}`
/// with `I` and `J` sorted increasing.
fn product_oracle(m: &BinaryMatrix, sel: &Selection) -> Vec<Vec<u32>> {
    let (p, q) = (m.line_count(), m.column_count());
    let mut acc: Vec<Vec<u32>> = (0..p)
        .map(|i| (0..q).map(|j| u32::from(m.get(i, j))).collect())
        .collect();
    for &i in sel.lines().iter().rev() {
        acc = matmul(&line_contraction_matrix(p, i), &acc);
    }
    for &j in sel.columns().iter().rev() {
        acc = matmul(&acc, &column_contraction_matrix(q, j));
    }
    acc
}

/// Density by definition: scan all unordered pairs of ones.
fn density_oracle(m: &BinaryMatrix) -> u64 {
    let ones: Vec<(usize, usize)> = m.iter_ones().collect();
    let mut count = 0;
    for (k, a) in ones.iter().enumerate() {
        for b in &ones[k + 1..] {
            if a.0.abs_diff(b.0) <= 1 && a.1.abs_diff(b.1) <= 1 {
                count += 1;
            }
        }
    }
    count
}

prop_compose! {
    fn arb_matrix(max_lines: usize, max_columns: usize)
        (p in 1..=max_lines, q in 1..=max_columns)
        (cells in prop::collection::vec(any::<bool>(), p * q), p in Just(p), q in Just(q))
        -> BinaryMatrix
    {
        let rows: Vec<String> = (0..p)
            .map(|i| (0..q).map(|j| if cells[i * q + j] { '1' } else { '0' }).collect())
            .collect();
        let row_refs: Vec<&str> = rows.iter().map(String::as_str).collect();
        BinaryMatrix::from_rows(&row_refs).unwrap()
    }
}

prop_compose! {
    fn arb_matrix_and_selection(max_lines: usize, max_columns: usize)
        (m in arb_matrix(max_lines, max_columns))
        (line_mask in 0u32..1 << (m.line_count() - 1),
         column_mask in 0u32..1 << (m.column_count() - 1),
         m in Just(m))
        -> (BinaryMatrix, Selection)
    {
        let lines = (0..m.line_count() - 1).filter(|&k| line_mask & (1 << k) != 0).collect();
        let columns = (0..m.column_count() - 1).filter(|&k| column_mask & (1 << k) != 0).collect();
        (m, Selection::new(lines, columns).unwrap())
    }
}

proptest! {
    /// The merge implementation agrees entrywise with the matrix-product
    /// definition, including on invalid contractions.
    #[test]
    fn contract_matches_product_definition((m, sel) in arb_matrix_and_selection(8, 8)) {
        let raw = m.contract(&sel).unwrap();
        let oracle = product_oracle(&m, &sel);
        for i in 0..m.line_count() {
            for j in 0..m.column_count() {
                prop_assert_eq!(raw.get(i, j), oracle[i][j], "cell ({}, {})", i, j);
            }
        }
    }

    /// Valid selections applied one index at a time, largest first, land on
    /// the same matrix as the one-shot contraction, conserve the ones and
    /// shrink dimensions by exactly the selection sizes.
    #[test]
    fn valid_contraction_conservation((m, sel) in arb_matrix_and_selection(8, 8)) {
        if m.is_valid(&sel).unwrap() {
            let trimmed = m.contracted(&sel).unwrap();
            prop_assert_eq!(trimmed.line_count(), m.line_count() - sel.lines().len());
            prop_assert_eq!(trimmed.column_count(), m.column_count() - sel.columns().len());
            prop_assert_eq!(trimmed.ones(), m.ones());

            let mut step = m.clone();
            for &i in sel.lines().iter().rev() {
                step = step.contracted(&Selection::new(vec![i], vec![]).unwrap()).unwrap();
            }
            for &j in sel.columns().iter().rev() {
                step = step.contracted(&Selection::new(vec![], vec![j]).unwrap()).unwrap();
            }
            prop_assert_eq!(step, trimmed);
        }
    }

    #[test]
    fn density_in_bounds_and_matches_pair_scan(m in arb_matrix(8, 8)) {
        let d = m.density();
        prop_assert_eq!(d, density_oracle(&m));
        prop_assert!(d <= 4 * m.ones() as u64);
    }

    /// Single-contraction deltas agree with full recomputation.
    #[test]
    fn density_deltas_match_full_recomputation(m in arb_matrix(8, 8)) {
        let base = m.density();
        for i in 0..m.line_count() - 1 {
            if m.single_line_valid(i).unwrap() {
                let full = m.contracted(&Selection::new(vec![i], vec![]).unwrap()).unwrap();
                prop_assert_eq!(base as i64 + m.density_delta_line(i).unwrap(), full.density() as i64);
            }
        }
        for j in 0..m.column_count() - 1 {
            if m.single_column_valid(j).unwrap() {
                let full = m.contracted(&Selection::new(vec![], vec![j]).unwrap()).unwrap();
                prop_assert_eq!(base as i64 + m.density_delta_column(j).unwrap(), full.density() as i64);
            }
        }
    }

    #[test]
    fn completion_is_maximal_and_contains_input((m, sel) in arb_matrix_and_selection(7, 7)) {
        if m.is_valid(&sel).unwrap() {
            let done = complete_to_maximal(&m, &sel, ScanOrder::default()).unwrap();
            prop_assert!(is_maximal(&m, &done).unwrap());
            for i in sel.lines() {
                prop_assert!(done.lines().contains(i));
            }
            for j in sel.columns() {
                prop_assert!(done.columns().contains(j));
            }
        }
    }

    /// Every heuristic returns a valid, maximal solution whose density
    /// matches its reported matrix and sits within the maximality bounds.
    #[test]
    fn heuristics_return_maximal_solutions_in_bounds(m in arb_matrix(8, 8)) {
        let n = m.ones() as u64;
        for report in [lcl(&m), greedy(&m), neighborization(&m)] {
            prop_assert!(is_maximal(&m, &report.selection).unwrap(), "{}", report.algorithm);
            let again = m.contracted(&report.selection).unwrap();
            prop_assert_eq!(&again, &report.result);
            prop_assert_eq!(report.density, again.density());
            if n >= 1 {
                prop_assert!(report.density <= 4 * n);
                // density >= 2 sqrt(n) - 2, kept in integers
                prop_assert!((report.density + 2).pow(2) >= 4 * n);
            }
        }
    }

    /// Greedy re-simulated with full density recomputation and the same
    /// tie-break lands on the same result.
    #[test]
    fn greedy_always_takes_a_best_increment(m in arb_matrix(7, 7)) {
        let mut current = m.clone();
        loop {
            let mut best: Option<(u64, BinaryMatrix)> = None;
            for i in 0..current.line_count() - 1 {
                if current.single_line_valid(i).unwrap() {
                    let cand = current.contracted(&Selection::new(vec![i], vec![]).unwrap()).unwrap();
                    let d = cand.density();
                    if best.as_ref().is_none_or(|(bd, _)| d > *bd) {
                        best = Some((d, cand));
                    }
                }
            }
            for j in 0..current.column_count() - 1 {
                if current.single_column_valid(j).unwrap() {
                    let cand = current.contracted(&Selection::new(vec![], vec![j]).unwrap()).unwrap();
                    let d = cand.density();
                    if best.as_ref().is_none_or(|(bd, _)| d > *bd) {
                        best = Some((d, cand));
                    }
                }
            }
            match best {
                Some((_, next)) => current = next,
                None => break,
            }
        }
        let report = greedy(&m);
        prop_assert_eq!(report.result, current);
    }

    /// The instance text format round-trips.
    #[test]
    fn instance_text_round_trip(m in arb_matrix(9, 9)) {
        let text = serialize_instance(&m);
        prop_assert!(text.ends_with('\n'));
        prop_assert_eq!(parse_instance(&text).unwrap(), m);
    }
}
