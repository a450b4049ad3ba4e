use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use mmc_cli::bench::BenchConfig;
use mmc_cli::{cmd_bench, cmd_export_lp, cmd_gen, cmd_reduce_clique, cmd_solve, BenchFormat};
use mmc_core::solvers::Algorithm;

#[derive(Parser)]
#[command(name = "mmc", version, about = "Maximum matrix contraction toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum AlgoArg {
    Lcl,
    Greedy,
    Neigh,
    Exact,
    Naive,
}

impl From<AlgoArg> for Algorithm {
    fn from(value: AlgoArg) -> Self {
        match value {
            AlgoArg::Lcl => Algorithm::Lcl,
            AlgoArg::Greedy => Algorithm::Greedy,
            AlgoArg::Neigh => Algorithm::Neighborization,
            AlgoArg::Exact => Algorithm::Exact,
            AlgoArg::Naive => Algorithm::Naive,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded random instance
    Gen {
        /// Number of lines
        #[arg(short = 'p', long = "lines")]
        lines: usize,
        /// Number of columns
        #[arg(short = 'q', long = "columns")]
        columns: usize,
        /// Probability of a one per entry
        #[arg(short = 'r', long = "probability")]
        probability: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when absent)
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Solve an instance file and print the report
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum)]
        algo: AlgoArg,
        /// Override the size guard of the naive solver
        #[arg(long)]
        force: bool,
        /// Wall-clock budget in seconds for the exact solver
        #[arg(long)]
        budget_secs: Option<u64>,
    },
    /// Export the staged integer program as LP text
    ExportLp {
        instance: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        /// Certify the formulation by assignment enumeration first
        #[arg(long)]
        check: bool,
    },
    /// Build the clique-reduction instance of a DIMACS edge-list graph
    ReduceClique {
        graph: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Run the benchmark harness over a grid of random instances
    Bench {
        /// Square instance sizes, comma separated
        #[arg(long, value_delimiter = ',', default_value = "5,10")]
        sizes: Vec<usize>,
        /// Probabilities of a one, comma separated
        #[arg(long, value_delimiter = ',', default_value = "0.05,0.1,0.2,0.3")]
        probs: Vec<f64>,
        /// Instances per (size, probability) cell
        #[arg(long, default_value_t = 50)]
        reps: usize,
        #[arg(long, value_delimiter = ',', value_enum, default_value = "lcl,greedy,neigh,exact")]
        algos: Vec<AlgoArg>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-instance budget for exact runs; 0 means unlimited
        #[arg(long, default_value_t = 60)]
        exact_budget_secs: u64,
        /// Skip the removal of all-zero lines and columns
        #[arg(long)]
        no_preprocess: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen {
            lines,
            columns,
            probability,
            seed,
            output,
        } => cmd_gen(lines, columns, probability, seed, output.as_deref()),
        Command::Solve {
            instance,
            algo,
            force,
            budget_secs,
        } => cmd_solve(
            &instance,
            algo.into(),
            force,
            budget_secs.map(Duration::from_secs),
        ),
        Command::ExportLp {
            instance,
            output,
            check,
        } => cmd_export_lp(&instance, output.as_deref(), check),
        Command::ReduceClique { graph, output } => cmd_reduce_clique(&graph, output.as_deref()),
        Command::Bench {
            sizes,
            probs,
            reps,
            algos,
            seed,
            exact_budget_secs,
            no_preprocess,
            format,
            output,
        } => {
            let config = BenchConfig {
                sizes,
                probabilities: probs,
                repetitions: reps,
                algorithms: algos.into_iter().map(Algorithm::from).collect(),
                base_seed: seed,
                exact_budget: (exact_budget_secs > 0)
                    .then(|| Duration::from_secs(exact_budget_secs)),
                preprocess: !no_preprocess,
            };
            let format = match format {
                FormatArg::Csv => BenchFormat::Csv,
                FormatArg::Md => BenchFormat::Markdown,
            };
            cmd_bench(&config, format, output.as_deref())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}
