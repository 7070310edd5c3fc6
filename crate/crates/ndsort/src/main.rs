//! Command-line front-end: dataset generation, ranking, differential
//! verification and the benchmark matrix.

use clap::{Parser, Subcommand, ValueEnum};
use ndsort::bench::{
    parse_population, run_benchmark, verify, write_benchmark_csv, write_plot_data,
    write_population, write_ranking, BenchConfig, BenchRecord, DatasetSpec,
};
use ndsort::{Algorithm, ComparisonTally, Error, GenSpec};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ndsort",
    version,
    about = "Non-dominated sorting toolkit: generate populations, rank them, \
             cross-check sorters and benchmark them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Uniform,
    Shells,
    Degenerate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Mnds,
    Fnds,
    EnsSs,
    EnsBs,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Algorithm {
        match a {
            AlgoArg::Mnds => Algorithm::Mnds,
            AlgoArg::Fnds => Algorithm::Fnds,
            AlgoArg::EnsSs => Algorithm::EnsSs,
            AlgoArg::EnsBs => Algorithm::EnsBs,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic population file
    Gen {
        /// Generator family
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Number of solutions
        #[arg(long)]
        n: usize,
        /// Number of objectives
        #[arg(long)]
        m: usize,
        /// Generator seed; the NDSORT_SEED environment variable overrides it
        #[arg(long)]
        seed: u64,
        /// Number of fronts (shells only)
        #[arg(long, required_if_eq("kind", "shells"))]
        k_fronts: Option<usize>,
        /// Fraction of rows replaced by duplicates, in [0,1) (degenerate only)
        #[arg(long, default_value_t = 0.0)]
        dup_fraction: f64,
        /// Snap values to this many grid levels, 0 = off (degenerate only)
        #[arg(long, default_value_t = 0)]
        quant_levels: u32,
        /// Output population file
        #[arg(long)]
        out: PathBuf,
    },
    /// Rank a population file and write id,rank CSV
    Rank {
        #[arg(long, value_enum)]
        algo: AlgoArg,
        /// Input population file
        #[arg(long = "in")]
        input: PathBuf,
        /// Output ranking CSV
        #[arg(long)]
        out: PathBuf,
        /// Print the number of objective-value comparisons performed
        #[arg(long)]
        count_comparisons: bool,
    },
    /// Rank with several algorithms and report any disagreement
    Verify {
        /// Input population file
        #[arg(long = "in")]
        input: PathBuf,
        /// Algorithms to compare (first is the reference), comma-separated
        #[arg(long, value_enum, value_delimiter = ',', num_args = 1..)]
        algos: Vec<AlgoArg>,
    },
    /// Time algorithms over datasets; write a CSV plus plot data files
    Bench {
        /// Algorithms to run, comma-separated
        #[arg(long, value_enum, value_delimiter = ',', num_args = 1..)]
        algos: Vec<AlgoArg>,
        /// Input population files
        #[arg(long = "in", num_args = 1.., required = true)]
        input: Vec<PathBuf>,
        /// Timed repetitions per cell
        #[arg(long, default_value_t = 100)]
        reps: u32,
        /// Untimed warmup runs per cell
        #[arg(long, default_value_t = 0)]
        warmup: u32,
        /// Run benchmark cells on separate threads
        #[arg(long)]
        parallel: bool,
        /// Output CSV path; plot data lands next to it
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InternalOrderViolation => ExitCode::from(1),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Gen {
            kind,
            n,
            m,
            seed,
            k_fronts,
            dup_fraction,
            quant_levels,
            out,
        } => {
            let seed = seed_override(seed)?;
            let spec = match kind {
                KindArg::Uniform => GenSpec::uniform(n, m, seed),
                KindArg::Shells => {
                    if m < 2 {
                        return Err(Error::InvalidConfig(
                            "shells need at least two objectives".into(),
                        ));
                    }
                    GenSpec::shells(n, m, k_fronts.unwrap_or(1).max(1), seed)
                }
                KindArg::Degenerate => {
                    if !(0.0..1.0).contains(&dup_fraction) {
                        return Err(Error::InvalidConfig(
                            "--dup-fraction must be in [0, 1)".into(),
                        ));
                    }
                    GenSpec::degenerate(n, m, seed, dup_fraction, quant_levels)
                }
            };
            let matrix = spec.generate()?;
            write_population(&out, &matrix)?;
            println!(
                "wrote {} ({} solutions, {} objectives)",
                out.display(),
                matrix.solutions(),
                matrix.objectives()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Rank {
            algo,
            input,
            out,
            count_comparisons,
        } => {
            let matrix = parse_population(&input)?;
            let algorithm = Algorithm::from(algo);
            let tally = ComparisonTally::new();
            let ranks = algorithm.rank(&matrix, &tally)?;
            write_ranking(&out, &ranks)?;
            println!(
                "wrote {} ({} solutions, {} fronts)",
                out.display(),
                ranks.len(),
                ranks.front_count()
            );
            if count_comparisons {
                println!("comparisons={}", tally.count());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input, algos } => {
            let matrix = parse_population(&input)?;
            let algorithms: Vec<Algorithm> = algos.into_iter().map(Algorithm::from).collect();
            let report = verify(&matrix, &algorithms)?;
            for comparison in &report.comparisons {
                if comparison.mismatches.is_empty() {
                    println!("{}: agrees with {}", comparison.algorithm, report.reference);
                } else {
                    println!(
                        "{}: {} disagreements with {}",
                        comparison.algorithm,
                        comparison.mismatches.len(),
                        report.reference
                    );
                    for mm in comparison.mismatches.iter().take(20) {
                        println!(
                            "  id {}: {}={} {}={}",
                            mm.id, report.reference, mm.reference, comparison.algorithm, mm.actual
                        );
                    }
                    if comparison.mismatches.len() > 20 {
                        println!("  ... {} more", comparison.mismatches.len() - 20);
                    }
                }
            }
            if report.agreement() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
        Command::Bench {
            algos,
            input,
            reps,
            warmup,
            parallel,
            out,
        } => {
            let config = BenchConfig {
                algorithms: algos.into_iter().map(Algorithm::from).collect(),
                datasets: input.into_iter().map(DatasetSpec::File).collect(),
                repetitions: reps,
                warmup,
                parallel_cells: parallel,
            };
            let records = run_benchmark(&config)?;
            write_benchmark_csv(&out, &records)?;
            print_cell_summaries(&records);
            println!("wrote {}", out.display());
            for path in write_plot_data(&out, &records)? {
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn seed_override(flag: u64) -> Result<u64, Error> {
    match std::env::var("NDSORT_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("NDSORT_SEED={v:?} is not an integer"))),
        Err(_) => Ok(flag),
    }
}

fn print_cell_summaries(records: &[BenchRecord]) {
    let mut index = 0;
    while index < records.len() {
        let cell_end = records[index..]
            .iter()
            .position(|r| {
                (r.algorithm, &r.dataset) != (records[index].algorithm, &records[index].dataset)
            })
            .map_or(records.len(), |off| index + off);
        let cell = &records[index..cell_end];
        let mut times: Vec<u128> = cell.iter().map(|r| r.wall_time_ns).collect();
        times.sort_unstable();
        let mean = times.iter().sum::<u128>() / times.len() as u128;
        let median = times[times.len() / 2];
        let first = &cell[0];
        println!(
            "{} {} n={} m={} reps={} mean_ns={} median_ns={} comparisons={} fronts={}",
            first.algorithm,
            first.dataset,
            first.n,
            first.m,
            cell.len(),
            mean,
            median,
            first.comparisons,
            first.fronts
        );
        index = cell_end;
    }
}
