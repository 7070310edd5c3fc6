//! Reference sorters: fast non-dominated sorting (the Deb et al. 2002
//! procedure) as the brute-force oracle, and the efficient non-dominated
//! sort in its sequential-search and binary-search variants. All share the
//! dominance kernel and comparison tally of the rest of the crate.

use crate::core::{
    dominates_kernel, lex_compare_kernel, validate_population, ComparisonTally, Error,
    ObjectiveMatrix, RankAssignment, SolutionId,
};

/// Fronts as ordered sets of solution ids; front `k` holds the rank `k + 1`
/// solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontList {
    fronts: Vec<Vec<SolutionId>>,
}

impl FrontList {
    pub fn from_ranks(ranks: &RankAssignment) -> Self {
        let mut fronts = vec![Vec::new(); ranks.front_count() as usize];
        for (id, rank) in ranks.iter() {
            fronts[rank as usize - 1].push(id);
        }
        FrontList { fronts }
    }

    /// Inverse of [`FrontList::from_ranks`].
    pub fn to_ranks(&self) -> RankAssignment {
        let total: usize = self.fronts.iter().map(Vec::len).sum();
        let mut ranks = vec![0u32; total];
        for (k, front) in self.fronts.iter().enumerate() {
            for id in front {
                ranks[id.0] = k as u32 + 1;
            }
        }
        RankAssignment::from_ranks(ranks)
    }

    pub fn front(&self, k: usize) -> &[SolutionId] {
        &self.fronts[k]
    }

    pub fn len(&self) -> usize {
        self.fronts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fronts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[SolutionId]> {
        self.fronts.iter().map(Vec::as_slice)
    }
}

/// Fast non-dominated sorting: all-pairs dominance comparisons feeding
/// per-solution dominated lists and domination counters, then front
/// peeling. Theta(M N^2) comparisons regardless of front structure.
pub fn fnds_rank(
    matrix: &ObjectiveMatrix,
    tally: &ComparisonTally,
) -> Result<RankAssignment, Error> {
    validate_population(matrix)?;
    let n = matrix.solutions();
    let mut dominated_by: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut domination_count = vec![0u32; n];
    for p in 0..n {
        for q in (p + 1)..n {
            if dominates_kernel(matrix.row(p), matrix.row(q), tally) {
                dominated_by[p].push(q as u32);
                domination_count[q] += 1;
            } else if dominates_kernel(matrix.row(q), matrix.row(p), tally) {
                dominated_by[q].push(p as u32);
                domination_count[p] += 1;
            }
        }
    }

    let mut ranks = vec![0u32; n];
    let mut current: Vec<u32> = (0..n as u32)
        .filter(|&i| domination_count[i as usize] == 0)
        .collect();
    let mut rank = 1u32;
    while !current.is_empty() {
        let mut next = Vec::new();
        for &p in &current {
            ranks[p as usize] = rank;
            for &q in &dominated_by[p as usize] {
                domination_count[q as usize] -= 1;
                if domination_count[q as usize] == 0 {
                    next.push(q);
                }
            }
        }
        rank += 1;
        current = next;
    }
    Ok(RankAssignment::from_ranks(ranks))
}

/// Lexicographic pre-sort shared by both efficient-non-dominated-sort
/// variants. The standard library sort is stable, so exact duplicates stay
/// adjacent in first-occurrence order.
fn lex_order(matrix: &ObjectiveMatrix, tally: &ComparisonTally) -> Vec<u32> {
    let mut order: Vec<u32> = (0..matrix.solutions() as u32).collect();
    order.sort_by(|&a, &b| {
        lex_compare_kernel(matrix.row(a as usize), matrix.row(b as usize), tally)
    });
    order
}

/// True iff some member of `front` dominates solution `s`. Members are
/// checked in reverse insertion order; the order affects the tally, not
/// the outcome.
fn dominated_by_front(
    matrix: &ObjectiveMatrix,
    front: &[u32],
    s: u32,
    tally: &ComparisonTally,
) -> bool {
    front
        .iter()
        .rev()
        .any(|&u| dominates_kernel(matrix.row(u as usize), matrix.row(s as usize), tally))
}

fn ens_rank(
    matrix: &ObjectiveMatrix,
    tally: &ComparisonTally,
    binary_search: bool,
) -> Result<RankAssignment, Error> {
    validate_population(matrix)?;
    let mut fronts: Vec<Vec<u32>> = Vec::new();
    for &s in &lex_order(matrix, tally) {
        // Every solution that could dominate s precedes it in lexicographic
        // order, so s's front among those already placed is final.
        let k = if binary_search {
            let (mut lo, mut hi) = (0, fronts.len());
            while lo < hi {
                let mid = (lo + hi) / 2;
                if dominated_by_front(matrix, &fronts[mid], s, tally) {
                    lo = mid + 1;
                } else {
                    hi = mid;
                }
            }
            lo
        } else {
            let mut k = 0;
            while k < fronts.len() && dominated_by_front(matrix, &fronts[k], s, tally) {
                k += 1;
            }
            k
        };
        if k == fronts.len() {
            fronts.push(vec![s]);
        } else {
            fronts[k].push(s);
        }
    }

    let mut ranks = vec![0u32; matrix.solutions()];
    for (k, front) in fronts.iter().enumerate() {
        for &s in front {
            ranks[s as usize] = k as u32 + 1;
        }
    }
    Ok(RankAssignment::from_ranks(ranks))
}

/// Efficient non-dominated sort, sequential search: each solution walks the
/// existing fronts in order until one contains no dominator.
pub fn ens_ss_rank(
    matrix: &ObjectiveMatrix,
    tally: &ComparisonTally,
) -> Result<RankAssignment, Error> {
    ens_rank(matrix, tally, false)
}

/// Efficient non-dominated sort, binary search: the target front is located
/// by bisection, which is valid because "dominated by front k" is monotone
/// in k.
pub fn ens_bs_rank(
    matrix: &ObjectiveMatrix,
    tally: &ComparisonTally,
) -> Result<RankAssignment, Error> {
    ens_rank(matrix, tally, true)
}
