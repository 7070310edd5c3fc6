//! Deterministic synthetic population generators.
//!
//! All generators draw from [`SplitMix64`], a tiny fixed PRNG, so a given
//! `(kind, n, m, seed, ...)` tuple produces a bit-identical matrix on every
//! run and platform. Three regimes are covered: i.i.d. uniform clouds,
//! shifted simplex shells with an exact known front count, and degenerate
//! populations with forced ties and exact duplicates.

use crate::core::{Error, ObjectiveMatrix};

/// SplitMix64 pseudo-random generator.
///
/// The state advances by the 64-bit Weyl constant and the output is a
/// finalizing xor-shift-multiply mix:
///
/// ```text
/// state += 0x9E3779B97F4A7C15
/// z = state
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// output = z ^ (z >> 31)
/// ```
///
/// Unit doubles take the top 53 bits of the output over 2^53, giving
/// values in `[0, 1)`. Bounded indices are `output mod bound`. This is
/// small enough to reimplement exactly anywhere matrices must match
/// bit for bit.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[0, 1)` with a 53-bit mantissa.
    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform index in `[0, bound)`.
    pub fn next_index(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }
}

/// Which generator to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Uniform,
    Shells,
    Degenerate,
}

/// A fully specified generator invocation.
#[derive(Debug, Clone)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    /// Number of fronts; shells only.
    pub k_fronts: Option<usize>,
    /// Fraction of rows replaced by duplicates, in `[0, 1)`; degenerate only.
    pub dup_fraction: Option<f64>,
    /// Grid levels values are snapped to, 0 to disable; degenerate only.
    pub quant_levels: Option<u32>,
}

impl GenSpec {
    pub fn uniform(n: usize, m: usize, seed: u64) -> Self {
        GenSpec {
            kind: GenKind::Uniform,
            n,
            m,
            seed,
            k_fronts: None,
            dup_fraction: None,
            quant_levels: None,
        }
    }

    pub fn shells(n: usize, m: usize, k_fronts: usize, seed: u64) -> Self {
        GenSpec {
            kind: GenKind::Shells,
            n,
            m,
            seed,
            k_fronts: Some(k_fronts),
            dup_fraction: None,
            quant_levels: None,
        }
    }

    pub fn degenerate(n: usize, m: usize, seed: u64, dup_fraction: f64, quant_levels: u32) -> Self {
        GenSpec {
            kind: GenKind::Degenerate,
            n,
            m,
            seed,
            k_fronts: None,
            dup_fraction: Some(dup_fraction),
            quant_levels: Some(quant_levels),
        }
    }

    pub fn generate(&self) -> Result<ObjectiveMatrix, Error> {
        match self.kind {
            GenKind::Uniform => Ok(gen_uniform(self.n, self.m, self.seed)),
            GenKind::Shells => gen_shells(self.n, self.m, self.k_fronts.unwrap_or(1), self.seed),
            GenKind::Degenerate => Ok(gen_degenerate(
                self.n,
                self.m,
                self.seed,
                self.dup_fraction.unwrap_or(0.0),
                self.quant_levels.unwrap_or(0),
            )),
        }
    }

    /// Canonical dataset label used in benchmark output.
    pub fn label(&self) -> String {
        match self.kind {
            GenKind::Uniform => format!("uniform-n{}-m{}-s{}", self.n, self.m, self.seed),
            GenKind::Shells => format!(
                "shells-n{}-m{}-k{}-s{}",
                self.n,
                self.m,
                self.k_fronts.unwrap_or(1),
                self.seed
            ),
            GenKind::Degenerate => format!(
                "degenerate-n{}-m{}-d{}-q{}-s{}",
                self.n,
                self.m,
                self.dup_fraction.unwrap_or(0.0),
                self.quant_levels.unwrap_or(0),
                self.seed
            ),
        }
    }
}

/// `n` solutions with i.i.d. values in `[0, 1)`.
pub fn gen_uniform(n: usize, m: usize, seed: u64) -> ObjectiveMatrix {
    assert!(m >= 1, "at least one objective");
    let mut rng = SplitMix64::new(seed);
    let values = (0..n * m).map(|_| rng.next_unit()).collect();
    ObjectiveMatrix::new(n, m, values)
}

/// A population with exactly `k_fronts` fronts.
///
/// Base points are sampled uniformly on the standard simplex (normalized
/// exponential draws), so points within one shell are mutually
/// non-dominated; shell `j` adds `j` to every coordinate, so each shell is
/// dominated by everything in the shells below it. Row `r` lands in shell
/// `r mod k_fronts`, which keeps every shell populated whenever
/// `n >= k_fronts`.
pub fn gen_shells(
    n: usize,
    m: usize,
    k_fronts: usize,
    seed: u64,
) -> Result<ObjectiveMatrix, Error> {
    assert!(m >= 2, "shells need at least two objectives");
    assert!(k_fronts >= 1, "at least one front");
    if n < k_fronts {
        return Err(Error::InsufficientPoints { n, k_fronts });
    }
    let mut rng = SplitMix64::new(seed);
    let base_count = n.div_ceil(k_fronts);
    let mut base = Vec::with_capacity(base_count * m);
    for _ in 0..base_count {
        let start = base.len();
        let mut sum = 0.0;
        for _ in 0..m {
            let e = -(1.0 - rng.next_unit()).ln();
            base.push(e);
            sum += e;
        }
        for v in &mut base[start..] {
            *v /= sum;
        }
    }
    let mut values = Vec::with_capacity(n * m);
    for r in 0..n {
        let shell = (r % k_fronts) as f64;
        let b = r / k_fronts;
        values.extend(base[b * m..(b + 1) * m].iter().map(|v| v + shell));
    }
    Ok(ObjectiveMatrix::new(n, m, values))
}

/// A uniform cloud stressed with ties and duplicates.
///
/// Starts from the same value stream as [`gen_uniform`]. With
/// `quant_levels > 0` every value is snapped down to a grid of that many
/// levels, forcing tied objective values. Afterwards the last
/// `floor(dup_fraction * n)` rows are replaced by copies of rows drawn
/// (from the continued stream) out of the untouched prefix, so exactly
/// that many rows duplicate an earlier one; the grid may coincidentally
/// add more.
pub fn gen_degenerate(
    n: usize,
    m: usize,
    seed: u64,
    dup_fraction: f64,
    quant_levels: u32,
) -> ObjectiveMatrix {
    assert!(
        (0.0..1.0).contains(&dup_fraction),
        "dup_fraction must be in [0, 1)"
    );
    let mut rng = SplitMix64::new(seed);
    let mut values: Vec<f64> = (0..n * m).map(|_| rng.next_unit()).collect();
    if quant_levels > 0 {
        let q = quant_levels as f64;
        for v in &mut values {
            *v = (*v * q).floor() / q;
        }
    }
    let dup_count = (dup_fraction * n as f64).floor() as usize;
    let keep = n - dup_count;
    for r in keep..n {
        let source = rng.next_index(keep);
        let (head, tail) = values.split_at_mut(r * m);
        tail[..m].copy_from_slice(&head[source * m..source * m + m]);
    }
    ObjectiveMatrix::new(n, m, values)
}
