//! Command implementations behind the `mmc` binary.
//!
//! Everything here is callable from tests; `main` only parses arguments
//! and maps [`CliError`] variants onto exit codes (0 success, 2 usage,
//! 3 guard refusal).

use std::fs;
use std::path::Path;
use std::time::Duration;

use mmc_core::heuristics::{greedy, lcl, neighborization};
use mmc_core::ilp::{build_model, check_against_enumeration, lp_string};
use mmc_core::instances::{
    from_clique, parse_graph, parse_instance, random_instance, serialize_instance,
    verify_reduction_gadget, GENERATOR_ID,
};
use mmc_core::matrix::BinaryMatrix;
use mmc_core::solvers::{
    exact_solve, exact_solve_with_budget, naive_enumerate, naive_enumerate_forced, Algorithm,
    SolveReport, REPORT_CSV_HEADER,
};
use thiserror::Error;

pub mod bench;

/// Failures mapped to process exit codes by `main`.
#[derive(Error, Debug)]
pub enum CliError {
    /// Bad input from the user: exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A size guard refused to run: exit code 3.
    #[error("{0}")]
    Guard(String),
    /// Unexpected internal failure: exit code 1.
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Internal(_) => 1,
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_instance(path: &Path) -> Result<BinaryMatrix, CliError> {
    parse_instance(&read_file(path)?)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// `gen`: write a seeded random instance; provenance goes to stderr so the
/// emitted file (or stdout stream) stays byte-reproducible.
pub fn cmd_gen(
    lines: usize,
    columns: usize,
    probability: f64,
    seed: u64,
    output: Option<&Path>,
) -> Result<(), CliError> {
    if lines == 0 || columns == 0 {
        return Err(CliError::Usage("dimensions must be at least 1".into()));
    }
    let matrix = random_instance(lines, columns, probability, seed)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    write_output(output, &serialize_instance(&matrix))?;
    eprintln!(
        "generated p={lines} q={columns} r={probability} n={} generator={GENERATOR_ID} seed={seed}",
        matrix.ones()
    );
    Ok(())
}

/// ASCII rendering of a matrix: dots for ones, blanks for zeros, framed.
pub fn render_grid(matrix: &BinaryMatrix) -> String {
    let (p, q) = (matrix.line_count(), matrix.column_count());
    let mut out = String::with_capacity((q + 3) * (p + 2));
    let border = format!("+{}+\n", "-".repeat(q));
    out.push_str(&border);
    for i in 0..p {
        out.push('|');
        for j in 0..q {
            out.push(if matrix.get(i, j) { '.' } else { ' ' });
        }
        out.push_str("|\n");
    }
    out.push_str(&border);
    out
}

fn run_solver(
    matrix: &BinaryMatrix,
    algorithm: Algorithm,
    force: bool,
    budget: Option<Duration>,
) -> Result<SolveReport, CliError> {
    Ok(match algorithm {
        Algorithm::Lcl => lcl(matrix),
        Algorithm::Greedy => greedy(matrix),
        Algorithm::Neighborization => neighborization(matrix),
        Algorithm::Exact => match budget {
            Some(limit) => {
                let (report, certified) = exact_solve_with_budget(matrix, limit);
                if !certified {
                    eprintln!("warning: time budget exceeded; result is not certified optimal");
                }
                report
            }
            None => exact_solve(matrix),
        },
        Algorithm::Naive => {
            if force {
                naive_enumerate_forced(matrix)
            } else {
                naive_enumerate(matrix).map_err(|e| CliError::Guard(e.to_string()))?
            }
        }
    })
}

/// `solve`: print the report CSV row, the selection in wire format and the
/// contracted grid.
pub fn cmd_solve(
    instance: &Path,
    algorithm: Algorithm,
    force: bool,
    budget: Option<Duration>,
) -> Result<(), CliError> {
    let matrix = load_instance(instance)?;
    let mut report = run_solver(&matrix, algorithm, force, budget)?;
    let source = format!("file={}", instance.display());
    report.instance_meta = if report.instance_meta.is_empty() {
        source
    } else {
        format!("{};{}", report.instance_meta, source)
    };
    println!("{REPORT_CSV_HEADER}");
    println!("{}", report.csv_row());
    println!("{}", report.selection);
    print!("{}", render_grid(&report.result));
    Ok(())
}

/// `export-lp`: emit the staged program as LP text; `--check` first runs
/// the assignment-enumeration certificate (guarded by instance size).
pub fn cmd_export_lp(instance: &Path, output: Option<&Path>, check: bool) -> Result<(), CliError> {
    let matrix = load_instance(instance)?;
    if check {
        let report = check_against_enumeration(&matrix)
            .map_err(|e| CliError::Guard(e.to_string()))?;
        match &report.mismatch {
            None => eprintln!(
                "oracle check passed: {} assignments, {} feasible, best objective {:?}",
                report.assignments, report.feasible, report.best_objective
            ),
            Some(problem) => {
                return Err(CliError::Internal(format!("oracle check failed: {problem}")))
            }
        }
    }
    let model = build_model(&matrix);
    eprintln!(
        "model: {} variables, {} constraints, {} stages",
        model.variable_count(),
        model.constraint_count(),
        model.stage_count()
    );
    write_output(output, &lp_string(&model))
}

/// `reduce-clique`: build the clique-reduction instance of a DIMACS graph.
pub fn cmd_reduce_clique(graph_path: &Path, output: Option<&Path>) -> Result<(), CliError> {
    let graph = parse_graph(&read_file(graph_path)?)
        .map_err(|e| CliError::Usage(format!("{}: {e}", graph_path.display())))?;
    let layout = from_clique(&graph);
    if !verify_reduction_gadget(&layout) {
        return Err(CliError::Internal(
            "reduction gadget failed verification".into(),
        ));
    }
    eprintln!(
        "reduction: |V|={} |E|={} matrix {}x{} base density {} (gadget verified)",
        graph.vertex_count(),
        graph.edge_count(),
        layout.matrix.line_count(),
        layout.matrix.column_count(),
        layout.base_density
    );
    write_output(output, &serialize_instance(&layout.matrix))
}

/// Output format for `bench`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BenchFormat {
    Csv,
    Markdown,
}

/// `bench`: run the harness and render the quality and head-to-head
/// tables.
pub fn cmd_bench(config: &bench::BenchConfig, format: BenchFormat, output: Option<&Path>) -> Result<(), CliError> {
    let outcomes = bench::collect(config)?;
    let cells = bench::aggregate(&outcomes);
    let wins = bench::head_to_head_from(&outcomes);
    let rendered = match format {
        BenchFormat::Csv => bench::render_csv(&cells, &wins),
        BenchFormat::Markdown => bench::render_markdown(&cells, &wins),
    };
    write_output(output, &rendered)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_rendering_uses_dots_and_blanks() {
        let m = BinaryMatrix::from_rows(&["10", "01"]).unwrap();
        assert_eq!(render_grid(&m), "+--+\n|. |\n| .|\n+--+\n");
    }
}
