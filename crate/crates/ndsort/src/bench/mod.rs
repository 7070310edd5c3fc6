//! Benchmark harness: named algorithms, differential verification, and the
//! timed benchmark matrix behind the command-line tool.

mod io;

pub use io::{
    parse_population, parse_ranking, write_benchmark_csv, write_plot_data, write_population,
    write_ranking, BENCH_CSV_HEADER,
};

use crate::baselines::{ens_bs_rank, ens_ss_rank, fnds_rank};
use crate::core::{ComparisonTally, Error, ObjectiveMatrix, RankAssignment, SolutionId};
use crate::datagen::GenSpec;
use crate::mnds::mnds_rank;
use rayon::prelude::*;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

/// A ranking algorithm selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Mnds,
    Fnds,
    EnsSs,
    EnsBs,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Mnds,
        Algorithm::Fnds,
        Algorithm::EnsSs,
        Algorithm::EnsBs,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Mnds => "mnds",
            Algorithm::Fnds => "fnds",
            Algorithm::EnsSs => "ens-ss",
            Algorithm::EnsBs => "ens-bs",
        }
    }

    pub fn rank(
        &self,
        matrix: &ObjectiveMatrix,
        tally: &ComparisonTally,
    ) -> Result<RankAssignment, Error> {
        match self {
            Algorithm::Mnds => mnds_rank(matrix, tally),
            Algorithm::Fnds => fnds_rank(matrix, tally),
            Algorithm::EnsSs => ens_ss_rank(matrix, tally),
            Algorithm::EnsBs => ens_bs_rank(matrix, tally),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "mnds" => Ok(Algorithm::Mnds),
            "fnds" => Ok(Algorithm::Fnds),
            "ens-ss" => Ok(Algorithm::EnsSs),
            "ens-bs" => Ok(Algorithm::EnsBs),
            other => Err(Error::InvalidConfig(format!(
                "unknown algorithm {other:?} (expected mnds, fnds, ens-ss or ens-bs)"
            ))),
        }
    }
}

/// A benchmark input: a population file on disk or an inline generator.
#[derive(Debug, Clone)]
pub enum DatasetSpec {
    File(PathBuf),
    Inline(GenSpec),
}

impl DatasetSpec {
    fn load(&self) -> Result<(String, ObjectiveMatrix), Error> {
        match self {
            DatasetSpec::File(path) => {
                let label = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.display().to_string());
                Ok((label, parse_population(path)?))
            }
            DatasetSpec::Inline(spec) => Ok((spec.label(), spec.generate()?)),
        }
    }
}

/// One benchmark invocation: which algorithms to run on which datasets,
/// how many timed repetitions per cell, untimed warmup runs, and whether
/// cells may run on separate threads (repetitions inside a cell are always
/// serial).
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    pub datasets: Vec<DatasetSpec>,
    pub repetitions: u32,
    pub warmup: u32,
    pub parallel_cells: bool,
}

/// Measurements of a single timed repetition.
#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub dataset: String,
    pub n: usize,
    pub m: usize,
    pub rep: u32,
    pub wall_time_ns: u128,
    pub comparisons: u64,
    pub fronts: u32,
}

/// Runs every `algorithm x dataset` cell and returns one record per timed
/// repetition, in cell order. Dataset load errors abort the run; a cell
/// whose ranking fails is reported on stderr and skipped.
pub fn run_benchmark(config: &BenchConfig) -> Result<Vec<BenchRecord>, Error> {
    if config.repetitions < 1 {
        return Err(Error::InvalidConfig(
            "repetitions must be at least 1".into(),
        ));
    }
    if config.algorithms.is_empty() {
        return Err(Error::InvalidConfig("no algorithms selected".into()));
    }
    if config.datasets.is_empty() {
        return Err(Error::InvalidConfig("no datasets given".into()));
    }

    let datasets: Vec<(String, ObjectiveMatrix)> = config
        .datasets
        .iter()
        .map(DatasetSpec::load)
        .collect::<Result<_, _>>()?;

    let cells: Vec<(Algorithm, usize)> = datasets
        .iter()
        .enumerate()
        .flat_map(|(d, _)| config.algorithms.iter().map(move |&a| (a, d)))
        .collect();

    let run_cell = |&(algorithm, d): &(Algorithm, usize)| -> Vec<BenchRecord> {
        let (label, matrix) = &datasets[d];
        let mut records = Vec::with_capacity(config.repetitions as usize);
        for rep in 0..config.warmup + config.repetitions {
            let tally = ComparisonTally::new();
            let start = Instant::now();
            let ranks = algorithm.rank(matrix, &tally);
            let wall_time_ns = start.elapsed().as_nanos();
            match ranks {
                Ok(ranks) if rep >= config.warmup => records.push(BenchRecord {
                    algorithm,
                    dataset: label.clone(),
                    n: matrix.solutions(),
                    m: matrix.objectives(),
                    rep: rep - config.warmup,
                    wall_time_ns,
                    comparisons: tally.count(),
                    fronts: ranks.front_count(),
                }),
                Ok(_) => {}
                Err(e) => {
                    eprintln!("cell {algorithm} x {label} failed: {e}");
                    break;
                }
            }
        }
        records
    };

    let per_cell: Vec<Vec<BenchRecord>> = if config.parallel_cells {
        cells.par_iter().map(run_cell).collect()
    } else {
        cells.iter().map(run_cell).collect()
    };
    Ok(per_cell.into_iter().flatten().collect())
}

/// A rank disagreement for one solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub id: SolutionId,
    pub reference: u32,
    pub actual: u32,
}

/// Pointwise comparison of one algorithm against the reference.
#[derive(Debug, Clone)]
pub struct AlgorithmComparison {
    pub algorithm: Algorithm,
    pub mismatches: Vec<Mismatch>,
}

/// Outcome of [`verify`]: the first algorithm is the reference, every
/// other algorithm is compared rank-by-rank against it.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub reference: Algorithm,
    pub comparisons: Vec<AlgorithmComparison>,
}

impl VerifyReport {
    pub fn agreement(&self) -> bool {
        self.comparisons.iter().all(|c| c.mismatches.is_empty())
    }
}

/// Runs at least two algorithms on the same population and reports the
/// exact set of solutions on which any of them disagrees with the first.
pub fn verify(matrix: &ObjectiveMatrix, algorithms: &[Algorithm]) -> Result<VerifyReport, Error> {
    if algorithms.len() < 2 {
        return Err(Error::InvalidConfig(
            "verification needs at least two algorithms".into(),
        ));
    }
    let reference = algorithms[0];
    let reference_ranks = reference.rank(matrix, &ComparisonTally::new())?;
    let mut comparisons = Vec::new();
    for &algorithm in &algorithms[1..] {
        let ranks = algorithm.rank(matrix, &ComparisonTally::new())?;
        let mismatches = reference_ranks
            .iter()
            .filter(|&(id, expected)| ranks.rank_of(id) != expected)
            .map(|(id, expected)| Mismatch {
                id,
                reference: expected,
                actual: ranks.rank_of(id),
            })
            .collect();
        comparisons.push(AlgorithmComparison {
            algorithm,
            mismatches,
        });
    }
    Ok(VerifyReport {
        reference,
        comparisons,
    })
}
