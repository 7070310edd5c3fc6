//! Domain types and Pareto-dominance primitives shared by all sorters.
//!
//! All objectives are minimized. Callers with maximization objectives must
//! negate them before building an [`ObjectiveMatrix`]. Ties and duplicates
//! are defined by exact floating-point equality; there is no epsilon.

use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;

/// Errors reported by the library.
#[derive(Debug)]
pub enum Error {
    /// A matrix entry is NaN or infinite.
    NonFiniteValue {
        row: usize,
        col: usize,
    },
    /// The matrix has zero objective columns.
    ZeroObjectives,
    /// Two objective vectors of different lengths were compared.
    LengthMismatch {
        left: usize,
        right: usize,
    },
    /// An objective index is outside `0..m`.
    ObjectiveOutOfRange {
        objective: usize,
        count: usize,
    },
    /// A dominance-set member had no rank assigned yet; the final ordering
    /// no longer places dominators before the solutions they dominate.
    InternalOrderViolation,
    /// A shell generator was asked for more fronts than points.
    InsufficientPoints {
        n: usize,
        k_fronts: usize,
    },
    /// A malformed input file.
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// An invalid run configuration.
    InvalidConfig(String),
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFiniteValue { row, col } => {
                write!(f, "non-finite objective value at row {row}, column {col}")
            }
            Error::ZeroObjectives => write!(f, "population has zero objectives"),
            Error::LengthMismatch { left, right } => {
                write!(f, "objective vectors differ in length: {left} vs {right}")
            }
            Error::ObjectiveOutOfRange { objective, count } => {
                write!(f, "objective index {objective} out of range (have {count})")
            }
            Error::InternalOrderViolation => {
                write!(f, "dominance-set member encountered before it was ranked")
            }
            Error::InsufficientPoints { n, k_fronts } => {
                write!(f, "cannot place {n} points on {k_fronts} fronts")
            }
            Error::Parse {
                line,
                column,
                message,
            } => write!(f, "parse error at line {line}, column {column}: {message}"),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

/// Identifier of a solution: its 0-based row index in the input matrix.
///
/// Stable across all sorting passes; output ranks are keyed by it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SolutionId(pub usize);

impl fmt::Display for SolutionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A population of `n` solutions with `m` objective values each, stored
/// row-major. Minimization convention.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveMatrix {
    values: Vec<f64>,
    n: usize,
    m: usize,
}

impl ObjectiveMatrix {
    /// Builds a matrix from a flat row-major buffer of `n * m` values.
    pub fn new(n: usize, m: usize, values: Vec<f64>) -> Self {
        assert_eq!(values.len(), n * m, "flat buffer must hold n*m values");
        ObjectiveMatrix { values, n, m }
    }

    /// Builds a matrix from per-solution rows, inferring `m` from the first
    /// row. Fails on ragged rows; an empty row list yields a 0 x `m` matrix
    /// only through [`ObjectiveMatrix::new`].
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, Error> {
        let m = rows.first().map_or(0, |r| r.len());
        let mut values = Vec::with_capacity(rows.len() * m);
        for row in rows {
            if row.len() != m {
                return Err(Error::LengthMismatch {
                    left: m,
                    right: row.len(),
                });
            }
            values.extend_from_slice(row);
        }
        Ok(ObjectiveMatrix::new(rows.len(), m, values))
    }

    pub fn solutions(&self) -> usize {
        self.n
    }

    pub fn objectives(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The objective vector of solution `row`.
    pub fn row(&self, row: usize) -> &[f64] {
        &self.values[row * self.m..(row + 1) * self.m]
    }

    pub fn value(&self, row: usize, objective: usize) -> f64 {
        self.values[row * self.m + objective]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.values.chunks_exact(self.m.max(1)).take(self.n)
    }
}

/// Map from solution id to 1-based front number.
///
/// Occupied ranks always form the contiguous range `1..=front_count()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankAssignment {
    ranks: Vec<u32>,
}

impl RankAssignment {
    /// Wraps per-id ranks (index = solution id). Ranks must be 1-based and
    /// occupy a contiguous range starting at 1.
    pub fn from_ranks(ranks: Vec<u32>) -> Self {
        if !ranks.is_empty() {
            let max = *ranks.iter().max().unwrap();
            let mut seen = vec![false; max as usize + 1];
            for &r in &ranks {
                assert!(r >= 1, "ranks are 1-based");
                seen[r as usize] = true;
            }
            assert!(
                seen[1..].iter().all(|&s| s),
                "occupied ranks must form a contiguous range 1..=max"
            );
        }
        RankAssignment { ranks }
    }

    pub fn rank_of(&self, id: SolutionId) -> u32 {
        self.ranks[id.0]
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Number of fronts, i.e. the highest rank value (0 for an empty population).
    pub fn front_count(&self) -> u32 {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    /// Iterates `(id, rank)` pairs in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = (SolutionId, u32)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .map(|(i, &r)| (SolutionId(i), r))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.ranks
    }
}

/// Counter of scalar objective-value comparisons performed during one run.
///
/// Each sorter receives the tally for its run; nothing is global. The count
/// only grows during a run and is reset between runs by the caller.
#[derive(Debug, Default)]
pub struct ComparisonTally {
    count: Cell<u64>,
}

impl ComparisonTally {
    pub fn new() -> Self {
        ComparisonTally::default()
    }

    pub fn add(&self, comparisons: u64) {
        self.count.set(self.count.get() + comparisons);
    }

    pub fn count(&self) -> u64 {
        self.count.get()
    }

    pub fn reset(&self) {
        self.count.set(0);
    }
}

/// Compares two scalar objective values, counting one comparison.
///
/// Values are expected to be finite (guaranteed by `validate_population`).
#[inline]
pub(crate) fn cmp_values(a: f64, b: f64, tally: &ComparisonTally) -> Ordering {
    tally.add(1);
    a.partial_cmp(&b).expect("objective values must be finite")
}

/// Checks every `ObjectiveMatrix` invariant: at least one objective column
/// and all entries finite. An empty population is valid.
pub fn validate_population(matrix: &ObjectiveMatrix) -> Result<(), Error> {
    if matrix.objectives() == 0 {
        return Err(Error::ZeroObjectives);
    }
    for row in 0..matrix.solutions() {
        for col in 0..matrix.objectives() {
            if !matrix.value(row, col).is_finite() {
                return Err(Error::NonFiniteValue { row, col });
            }
        }
    }
    Ok(())
}

/// Pareto dominance: true iff `a` is no worse than `b` on every objective
/// and strictly better on at least one (minimization).
///
/// Exits early on the first objective where `a` is worse; the tally counts
/// the comparisons actually performed. Values must be finite (the ranking
/// entry points guarantee this via [`validate_population`]).
pub fn dominates(a: &[f64], b: &[f64], tally: &ComparisonTally) -> Result<bool, Error> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(dominates_kernel(a, b, tally))
}

#[inline]
pub(crate) fn dominates_kernel(a: &[f64], b: &[f64], tally: &ComparisonTally) -> bool {
    let mut strict = false;
    for (&x, &y) in a.iter().zip(b) {
        match cmp_values(x, y, tally) {
            Ordering::Greater => return false,
            Ordering::Less => strict = true,
            Ordering::Equal => {}
        }
    }
    strict
}

/// Lexicographic order over objective vectors: objectives are compared left
/// to right until they differ; equal vectors compare equal. Values must be
/// finite.
pub fn lexicographic_compare(
    a: &[f64],
    b: &[f64],
    tally: &ComparisonTally,
) -> Result<Ordering, Error> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(lex_compare_kernel(a, b, tally))
}

#[inline]
pub(crate) fn lex_compare_kernel(a: &[f64], b: &[f64], tally: &ComparisonTally) -> Ordering {
    for (&x, &y) in a.iter().zip(b) {
        match cmp_values(x, y, tally) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}
