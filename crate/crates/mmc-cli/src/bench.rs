//! Benchmark harness: seeded random square instances, per-algorithm
//! quality statistics against the exact optimum, and head-to-head win
//! counts.
//!
//! The instance stream is a pure function of the configuration: every
//! `(size, probability, repetition)` cell folds into the base seed, so
//! reruns and partial runs see identical matrices. Quality CSV output
//! carries densities, ratios and counts only; wall times vary between runs
//! and are reported in the markdown rendering instead.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use mmc_core::heuristics::{greedy, lcl, neighborization};
use mmc_core::instances::random_instance;
use mmc_core::matrix::BinaryMatrix;
use mmc_core::solvers::{exact_solve, exact_solve_with_budget, Algorithm, NAIVE_SIZE_LIMIT};

use crate::CliError;

/// Grid of benchmark cells to run.
#[derive(Clone, Debug)]
pub struct BenchConfig {
    /// Instances are square `size x size` matrices.
    pub sizes: Vec<usize>,
    pub probabilities: Vec<f64>,
    /// Instances per `(size, probability)` cell.
    pub repetitions: usize,
    pub algorithms: Vec<Algorithm>,
    pub base_seed: u64,
    /// Wall-clock budget per exact run; `None` means unlimited, which is
    /// refused for sizes beyond the enumeration guard.
    pub exact_budget: Option<Duration>,
    /// Drop all-zero lines and columns before running the algorithms.
    pub preprocess: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: vec![5, 10],
            probabilities: vec![0.05, 0.1, 0.2, 0.3],
            repetitions: 50,
            algorithms: vec![
                Algorithm::Lcl,
                Algorithm::Greedy,
                Algorithm::Neighborization,
                Algorithm::Exact,
            ],
            base_seed: 0,
            exact_budget: Some(Duration::from_secs(60)),
            preprocess: true,
        }
    }
}

/// One algorithm's result on one instance.
#[derive(Clone, Copy, Debug)]
pub struct AlgoOutcome {
    pub density: u64,
    pub millis: f64,
    /// Always true for the heuristics; false for a timed-out exact run.
    pub certified: bool,
}

/// All results for one generated instance.
#[derive(Clone, Debug)]
pub struct InstanceOutcome {
    pub size: usize,
    pub probability: f64,
    pub repetition: usize,
    pub seed: u64,
    pub results: BTreeMap<Algorithm, AlgoOutcome>,
}

impl InstanceOutcome {
    /// Certified exact density, when available.
    pub fn optimum(&self) -> Option<u64> {
        self.results
            .get(&Algorithm::Exact)
            .filter(|r| r.certified)
            .map(|r| r.density)
    }
}

const SPLITMIX_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(SPLITMIX_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for one cell instance: the base seed with the cell coordinates
/// folded in through splitmix64, so any sub-grid of a configuration sees
/// the same matrices.
pub fn instance_seed(base: u64, size: usize, probability: f64, repetition: usize) -> u64 {
    let prob_milli = (probability * 1000.0).round() as u64;
    let mut state = splitmix64(base ^ size as u64);
    state = splitmix64(state ^ prob_milli);
    splitmix64(state ^ repetition as u64)
}

fn run_algorithm(
    algorithm: Algorithm,
    matrix: &BinaryMatrix,
    budget: Option<Duration>,
) -> AlgoOutcome {
    let (report, certified) = match algorithm {
        Algorithm::Lcl => (lcl(matrix), true),
        Algorithm::Greedy => (greedy(matrix), true),
        Algorithm::Neighborization => (neighborization(matrix), true),
        Algorithm::Exact => match budget {
            Some(limit) => exact_solve_with_budget(matrix, limit),
            None => (exact_solve(matrix), true),
        },
        Algorithm::Naive => unreachable!("bench never schedules the naive solver"),
    };
    AlgoOutcome {
        density: report.density,
        millis: report.elapsed.as_secs_f64() * 1e3,
        certified,
    }
}

/// Runs every cell of the configuration and returns the per-instance
/// results in deterministic order.
pub fn collect(config: &BenchConfig) -> Result<Vec<InstanceOutcome>, CliError> {
    if config.repetitions == 0 {
        return Err(CliError::Usage("bench needs at least one repetition".into()));
    }
    if config.algorithms.contains(&Algorithm::Naive) {
        return Err(CliError::Usage(
            "the naive solver is not benchable; use `exact`".into(),
        ));
    }
    if config.algorithms.contains(&Algorithm::Exact) && config.exact_budget.is_none() {
        if let Some(&size) = config.sizes.iter().find(|&&p| 2 * p > NAIVE_SIZE_LIMIT) {
            return Err(CliError::Guard(format!(
                "exact without a time budget is refused for size {size} \
                 (guard: p + q <= {NAIVE_SIZE_LIMIT}); pass an --exact-budget-secs \
                 or drop sizes above {}",
                NAIVE_SIZE_LIMIT / 2
            )));
        }
    }
    for &r in &config.probabilities {
        if !(0.0..=1.0).contains(&r) {
            return Err(CliError::Usage(format!("probability {r} outside [0, 1]")));
        }
    }

    let mut outcomes = Vec::new();
    for &size in &config.sizes {
        for &probability in &config.probabilities {
            for repetition in 0..config.repetitions {
                let seed = instance_seed(config.base_seed, size, probability, repetition);
                let raw = random_instance(size, size, probability, seed)
                    .expect("probability validated");
                let matrix = if config.preprocess { raw.reduce_empty() } else { raw };
                let mut results = BTreeMap::new();
                for &algorithm in &config.algorithms {
                    results.insert(
                        algorithm,
                        run_algorithm(algorithm, &matrix, config.exact_budget),
                    );
                }
                outcomes.push(InstanceOutcome {
                    size,
                    probability,
                    repetition,
                    seed,
                    results,
                });
            }
        }
    }
    Ok(outcomes)
}

/// Aggregated statistics for one algorithm in one cell.
#[derive(Clone, Debug)]
pub struct AlgoStats {
    pub algorithm: Algorithm,
    pub mean_millis: f64,
    pub mean_density: f64,
    /// Mean of the per-instance ratios `d* / d` over instances with a
    /// certified optimum; `0 / 0` counts as ratio one.
    pub mean_ratio: Option<f64>,
    /// Instances with a certified optimum where this algorithm hit it.
    pub optimal_hits: Option<usize>,
    pub certified: usize,
}

/// Aggregated statistics for one `(size, probability)` cell.
#[derive(Clone, Debug)]
pub struct BenchCell {
    pub size: usize,
    pub probability: f64,
    pub repetitions: usize,
    pub stats: Vec<AlgoStats>,
}

pub fn aggregate(outcomes: &[InstanceOutcome]) -> Vec<BenchCell> {
    let mut cells: Vec<BenchCell> = Vec::new();
    let mut keys: Vec<(usize, u64)> = Vec::new();
    for outcome in outcomes {
        let key = (outcome.size, outcome.probability.to_bits());
        if !keys.contains(&key) {
            keys.push(key);
            cells.push(BenchCell {
                size: outcome.size,
                probability: outcome.probability,
                repetitions: 0,
                stats: Vec::new(),
            });
        }
    }
    for ((size, prob_bits), cell) in keys.iter().zip(&mut cells) {
        let members: Vec<&InstanceOutcome> = outcomes
            .iter()
            .filter(|o| o.size == *size && o.probability.to_bits() == *prob_bits)
            .collect();
        cell.repetitions = members.len();
        let algorithms: Vec<Algorithm> = members[0].results.keys().copied().collect();
        for algorithm in algorithms {
            let mut millis = 0.0;
            let mut density_sum = 0.0;
            let mut ratio_sum = 0.0;
            let mut compared = 0usize;
            let mut hits = 0usize;
            let mut certified = 0usize;
            for outcome in &members {
                let result = outcome.results[&algorithm];
                millis += result.millis;
                density_sum += result.density as f64;
                certified += usize::from(result.certified);
                if algorithm != Algorithm::Exact {
                    if let Some(optimum) = outcome.optimum() {
                        compared += 1;
                        hits += usize::from(result.density == optimum);
                        ratio_sum += if optimum == 0 {
                            1.0
                        } else {
                            optimum as f64 / result.density as f64
                        };
                    }
                }
            }
            let count = members.len() as f64;
            cell.stats.push(AlgoStats {
                algorithm,
                mean_millis: millis / count,
                mean_density: density_sum / count,
                mean_ratio: (compared > 0).then(|| ratio_sum / compared as f64),
                optimal_hits: (compared > 0).then_some(hits),
                certified,
            });
        }
    }
    cells
}

/// Win matrix: for every ordered pair of algorithms, on how many instances
/// the first returned a strictly denser solution than the second.
pub fn head_to_head_from(outcomes: &[InstanceOutcome]) -> Vec<(Algorithm, Algorithm, usize)> {
    let Some(first) = outcomes.first() else {
        return Vec::new();
    };
    let algorithms: Vec<Algorithm> = first.results.keys().copied().collect();
    let mut wins = Vec::new();
    for &a in &algorithms {
        for &b in &algorithms {
            if a == b {
                continue;
            }
            let count = outcomes
                .iter()
                .filter(|o| o.results[&a].density > o.results[&b].density)
                .count();
            wins.push((a, b, count));
        }
    }
    wins
}

/// Runs the configuration and returns the win matrix; see
/// [`head_to_head_from`].
pub fn head_to_head(config: &BenchConfig) -> Result<Vec<(Algorithm, Algorithm, usize)>, CliError> {
    Ok(head_to_head_from(&collect(config)?))
}

fn fmt_opt(value: Option<f64>) -> String {
    value.map_or_else(String::new, |v| format!("{v:.4}"))
}

fn fmt_hits(value: Option<usize>) -> String {
    value.map_or_else(String::new, |v| v.to_string())
}

/// Deterministic quality table plus head-to-head table. No wall times: the
/// byte content is a pure function of the configuration.
pub fn render_csv(cells: &[BenchCell], wins: &[(Algorithm, Algorithm, usize)]) -> String {
    let mut out = String::new();
    out.push_str("p,r,reps,algorithm,mean_density,mean_ratio,optimal_hits,certified\n");
    for cell in cells {
        for s in &cell.stats {
            let _ = writeln!(
                out,
                "{},{:.3},{},{},{:.4},{},{},{}",
                cell.size,
                cell.probability,
                cell.repetitions,
                s.algorithm,
                s.mean_density,
                fmt_opt(s.mean_ratio),
                fmt_hits(s.optimal_hits),
                s.certified,
            );
        }
    }
    out.push('\n');
    out.push_str("algorithm,versus,strictly_better\n");
    for &(a, b, count) in wins {
        let _ = writeln!(out, "{a},{b},{count}");
    }
    out
}

/// Markdown rendering of the same cells, including mean wall times.
pub fn render_markdown(cells: &[BenchCell], wins: &[(Algorithm, Algorithm, usize)]) -> String {
    let mut rows: Vec<Vec<String>> = vec![vec![
        "p".into(),
        "r".into(),
        "reps".into(),
        "algo".into(),
        "mean ms".into(),
        "mean density".into(),
        "mean d*/d".into(),
        "d = d*".into(),
        "certified".into(),
    ]];
    for cell in cells {
        for s in &cell.stats {
            rows.push(vec![
                cell.size.to_string(),
                format!("{:.3}", cell.probability),
                cell.repetitions.to_string(),
                s.algorithm.to_string(),
                format!("{:.2}", s.mean_millis),
                format!("{:.4}", s.mean_density),
                fmt_opt(s.mean_ratio),
                fmt_hits(s.optimal_hits),
                s.certified.to_string(),
            ]);
        }
    }
    let mut out = aligned_table(&rows);
    if !wins.is_empty() {
        out.push('\n');
        let mut win_rows = vec![vec![
            "algorithm".into(),
            "versus".into(),
            "strictly better".into(),
        ]];
        for &(a, b, count) in wins {
            win_rows.push(vec![a.to_string(), b.to_string(), count.to_string()]);
        }
        out.push_str(&aligned_table(&win_rows));
    }
    out
}

fn aligned_table(rows: &[Vec<String>]) -> String {
    let columns = rows[0].len();
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for (idx, row) in rows.iter().enumerate() {
        out.push('|');
        for (w, cell) in widths.iter().zip(row) {
            let _ = write!(out, " {cell:<w$} |");
        }
        out.push('\n');
        if idx == 0 {
            out.push('|');
            for w in &widths {
                let _ = write!(out, "{:-<1$}|", "", w + 2);
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_stable_and_distinct() {
        let a = instance_seed(1, 5, 0.3, 0);
        assert_eq!(a, instance_seed(1, 5, 0.3, 0));
        assert_ne!(a, instance_seed(1, 5, 0.3, 1));
        assert_ne!(a, instance_seed(1, 10, 0.3, 0));
        assert_ne!(a, instance_seed(2, 5, 0.3, 0));
    }

    #[test]
    fn collect_is_deterministic_and_ordered() {
        let config = BenchConfig {
            sizes: vec![4],
            probabilities: vec![0.2],
            repetitions: 5,
            ..BenchConfig::default()
        };
        let first = collect(&config).unwrap();
        let second = collect(&config).unwrap();
        assert_eq!(first.len(), 5);
        for (a, b) in first.iter().zip(&second) {
            assert_eq!(a.seed, b.seed);
            for (algo, r) in &a.results {
                assert_eq!(r.density, b.results[algo].density);
            }
        }
    }

    #[test]
    fn exact_dominates_heuristics() {
        let config = BenchConfig {
            sizes: vec![5],
            probabilities: vec![0.2],
            repetitions: 10,
            ..BenchConfig::default()
        };
        let outcomes = collect(&config).unwrap();
        for outcome in &outcomes {
            let optimum = outcome.optimum().expect("small instances certify");
            for (algo, r) in &outcome.results {
                assert!(r.density <= optimum, "{algo} beat the optimum");
            }
        }
        let cells = aggregate(&outcomes);
        for s in &cells[0].stats {
            if let Some(ratio) = s.mean_ratio {
                assert!(ratio >= 1.0);
            }
        }
    }

    #[test]
    fn unbudgeted_exact_on_large_sizes_is_refused() {
        let config = BenchConfig {
            sizes: vec![50],
            exact_budget: None,
            repetitions: 1,
            ..BenchConfig::default()
        };
        assert!(matches!(collect(&config), Err(CliError::Guard(_))));
    }

    #[test]
    fn win_counts_exclude_ties() {
        let config = BenchConfig {
            sizes: vec![5],
            probabilities: vec![0.2, 0.3],
            repetitions: 8,
            ..BenchConfig::default()
        };
        let outcomes = collect(&config).unwrap();
        let wins = head_to_head_from(&outcomes);
        let total = outcomes.len();
        for &(a, b, count) in &wins {
            let reverse = wins
                .iter()
                .find(|&&(x, y, _)| x == b && y == a)
                .map(|&(_, _, c)| c)
                .unwrap();
            assert!(count + reverse <= total, "{a} vs {b}");
        }
    }

    #[test]
    fn csv_rendering_is_deterministic() {
        let config = BenchConfig {
            sizes: vec![4],
            probabilities: vec![0.25],
            repetitions: 3,
            ..BenchConfig::default()
        };
        let outcomes = collect(&config).unwrap();
        let a = render_csv(&aggregate(&outcomes), &head_to_head_from(&outcomes));
        let outcomes = collect(&config).unwrap();
        let b = render_csv(&aggregate(&outcomes), &head_to_head_from(&outcomes));
        assert_eq!(a, b);
        assert!(a.starts_with("p,r,reps,algorithm,"));
    }
}
