//! File formats: population text files, ranking CSVs, benchmark CSVs and
//! gnuplot-ready data files.
//!
//! A population file is UTF-8 text with one solution per line as
//! comma-separated decimal values. Lines starting with `#` are comments;
//! `n=<int>` and `m=<int>` tokens inside them are cross-checked against
//! the data. Solution ids are 0-based line indices among the data lines.

use super::BenchRecord;
use crate::core::{validate_population, Error, ObjectiveMatrix, RankAssignment, SolutionId};
use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

pub fn parse_population(path: &Path) -> Result<ObjectiveMatrix, Error> {
    parse_population_str(&fs::read_to_string(path)?)
}

pub(crate) fn parse_population_str(text: &str) -> Result<ObjectiveMatrix, Error> {
    let mut header_n: Option<(usize, usize)> = None;
    let mut header_m: Option<(usize, usize)> = None;
    let mut values = Vec::new();
    let mut m: Option<usize> = None;
    let mut rows = 0usize;

    for (index, line) in text.lines().enumerate() {
        let line_no = index + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            for token in comment.split_whitespace() {
                if let Some(v) = token.strip_prefix("n=").and_then(|v| v.parse().ok()) {
                    header_n = Some((v, line_no));
                } else if let Some(v) = token.strip_prefix("m=").and_then(|v| v.parse().ok()) {
                    header_m = Some((v, line_no));
                }
            }
            continue;
        }
        let fields: Vec<&str> = trimmed.split(',').collect();
        let expected = *m.get_or_insert(fields.len());
        if fields.len() != expected {
            return Err(Error::Parse {
                line: line_no,
                column: fields.len().min(expected) + 1,
                message: format!("expected {expected} values, found {}", fields.len()),
            });
        }
        for (col, field) in fields.iter().enumerate() {
            let value: f64 = field.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                column: col + 1,
                message: format!("invalid number {:?}", field.trim()),
            })?;
            values.push(value);
        }
        rows += 1;
    }

    let m = match (m, header_m) {
        (Some(m), _) => m,
        (None, Some((hm, _))) => hm,
        (None, None) => {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "no data lines and no 'm=' header to size the matrix".into(),
            })
        }
    };
    if let Some((hn, line)) = header_n {
        if hn != rows {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!("header declares n={hn} but file has {rows} data lines"),
            });
        }
    }
    if let Some((hm, line)) = header_m {
        if hm != m {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!("header declares m={hm} but rows have {m} values"),
            });
        }
    }
    let matrix = ObjectiveMatrix::new(rows, m, values);
    validate_population(&matrix)?;
    Ok(matrix)
}

/// Writes a population in the format [`parse_population`] reads, with a
/// dimension header. Values round-trip exactly.
pub fn write_population(path: &Path, matrix: &ObjectiveMatrix) -> Result<(), Error> {
    let mut out = format!("# n={} m={}\n", matrix.solutions(), matrix.objectives());
    for row in matrix.rows() {
        let mut first = true;
        for v in row {
            if !first {
                out.push(',');
            }
            out.push_str(&v.to_string());
            first = false;
        }
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}

/// Writes `id,rank` CSV rows in ascending id order.
pub fn write_ranking(path: &Path, ranks: &RankAssignment) -> Result<(), Error> {
    let mut out = String::from("id,rank\n");
    for (id, rank) in ranks.iter() {
        out.push_str(&format!("{id},{rank}\n"));
    }
    fs::write(path, out)?;
    Ok(())
}

/// Reads a file written by [`write_ranking`].
pub fn parse_ranking(path: &Path) -> Result<Vec<(SolutionId, u32)>, Error> {
    let text = fs::read_to_string(path)?;
    let mut pairs = Vec::new();
    for (index, line) in text.lines().enumerate() {
        if index == 0 || line.trim().is_empty() {
            continue;
        }
        let parse = |field: &str, column: usize| -> Result<usize, Error> {
            field.trim().parse().map_err(|_| Error::Parse {
                line: index + 1,
                column,
                message: format!("invalid integer {:?}", field.trim()),
            })
        };
        match line.split_once(',') {
            Some((id, rank)) => pairs.push((SolutionId(parse(id, 1)?), parse(rank, 2)? as u32)),
            None => {
                return Err(Error::Parse {
                    line: index + 1,
                    column: 1,
                    message: "expected 'id,rank'".into(),
                })
            }
        }
    }
    Ok(pairs)
}

pub const BENCH_CSV_HEADER: &str = "algorithm,dataset,n,m,rep,wall_time_ns,comparisons,fronts";

/// Writes one CSV row per benchmark repetition.
pub fn write_benchmark_csv(path: &Path, records: &[BenchRecord]) -> Result<(), Error> {
    let mut out = String::from(BENCH_CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.algorithm, r.dataset, r.n, r.m, r.rep, r.wall_time_ns, r.comparisons, r.fronts
        ));
    }
    fs::write(path, out)?;
    Ok(())
}

/// Emits gnuplot-ready series next to the benchmark CSV: one file per
/// fixed population size with at least two objective counts
/// (`<stem>_time_vs_m_n<N>.dat`) and one per fixed objective count with at
/// least two population sizes (`<stem>_time_vs_n_m<M>.dat`). Columns are
/// whitespace-separated: the x value, then mean and median wall time in
/// nanoseconds per algorithm.
pub fn write_plot_data(csv_path: &Path, records: &[BenchRecord]) -> Result<Vec<PathBuf>, Error> {
    let stem = csv_path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "bench".into());
    let dir = csv_path.parent().unwrap_or_else(|| Path::new("."));

    let mut algorithms = Vec::new();
    for r in records {
        if !algorithms.contains(&r.algorithm) {
            algorithms.push(r.algorithm);
        }
    }

    let mut written = Vec::new();
    for fixed_n in [true, false] {
        let fixed_values: BTreeSet<usize> = records
            .iter()
            .map(|r| if fixed_n { r.n } else { r.m })
            .collect();
        for fixed in fixed_values {
            let subset: Vec<&BenchRecord> = records
                .iter()
                .filter(|r| (if fixed_n { r.n } else { r.m }) == fixed)
                .collect();
            let xs: BTreeSet<usize> = subset
                .iter()
                .map(|r| if fixed_n { r.m } else { r.n })
                .collect();
            if xs.len() < 2 {
                continue;
            }
            let mut out = String::from(if fixed_n { "# m" } else { "# n" });
            for a in &algorithms {
                out.push_str(&format!(" {a}_mean_ns {a}_median_ns"));
            }
            out.push('\n');
            for x in xs {
                out.push_str(&x.to_string());
                for a in &algorithms {
                    let times: Vec<u128> = subset
                        .iter()
                        .filter(|r| r.algorithm == *a && (if fixed_n { r.m } else { r.n }) == x)
                        .map(|r| r.wall_time_ns)
                        .collect();
                    out.push_str(&format!(" {} {}", mean(&times), median(&times)));
                }
                out.push('\n');
            }
            let name = if fixed_n {
                format!("{stem}_time_vs_m_n{fixed}.dat")
            } else {
                format!("{stem}_time_vs_n_m{fixed}.dat")
            };
            let path = dir.join(name);
            fs::write(&path, out)?;
            written.push(path);
        }
    }
    Ok(written)
}

fn mean(values: &[u128]) -> u128 {
    if values.is_empty() {
        return 0;
    }
    values.iter().sum::<u128>() / values.len() as u128
}

fn median(values: &[u128]) -> u128 {
    if values.is_empty() {
        return 0;
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mid = sorted.len() / 2;
    if sorted.len().is_multiple_of(2) {
        (sorted[mid - 1] + sorted[mid]) / 2
    } else {
        sorted[mid]
    }
}
