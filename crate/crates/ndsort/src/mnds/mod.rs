//! Merge non-dominated sorting: duplicate extraction, one stable sort per
//! objective, dominance sets maintained by range-limited bit-set
//! intersection, and rank extraction from the final sets.
//!
//! The dominance set of a solution is the set of solutions that dominate
//! it. It starts as the prefix of the population in first-objective order
//! (with lexicographic tie-breaks) and is intersected with the prefix under
//! every later objective order; after the last pass the set is exact.

mod bitset;
mod sort;

pub use bitset::{DominanceSet, SetBits};

use crate::core::{
    cmp_values, lex_compare_kernel, validate_population, ComparisonTally, Error, ObjectiveMatrix,
    RankAssignment, SolutionId,
};
use std::cmp::Ordering;

/// Ordering of compact indices produced by the per-objective sorts.
#[derive(Debug, Clone)]
pub struct SortPermutation {
    order: Vec<u32>,
}

impl SortPermutation {
    fn identity(n: usize) -> Self {
        SortPermutation {
            order: (0..n as u32).collect(),
        }
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Working state of one merge non-dominated sorting run.
///
/// Holds the deduplicated population in first-objective order; compact
/// index `c` refers to the solution at position `c` of that order, which is
/// also its bit position in every [`DominanceSet`].
#[derive(Debug)]
pub struct MndsState {
    matrix: ObjectiveMatrix,
    ids: Vec<SolutionId>,
    compact_of: Vec<Option<u32>>,
    perm: SortPermutation,
    scratch: Vec<u32>,
    ds: Vec<DominanceSet>,
    inc_set: DominanceSet,
    duplicates: Vec<(SolutionId, SolutionId)>,
}

/// Sorts the population by the first objective with lexicographic
/// tie-breaks, removes exact duplicates, and initializes every dominance
/// set to the preceding solutions in that order.
///
/// Duplicates are recorded as `(duplicate, canonical)` pairs where the
/// canonical solution is the first occurrence in sorted order; chains of
/// identical solutions all map to that first occurrence. An empty
/// population yields an empty state.
pub fn sort_first_objective(matrix: &ObjectiveMatrix, tally: &ComparisonTally) -> MndsState {
    let n = matrix.solutions();
    let mut order: Vec<u32> = (0..n as u32).collect();
    let mut scratch = Vec::new();
    sort::stable_sort_by(&mut order, &mut scratch, |a, b| {
        lex_compare_kernel(matrix.row(a as usize), matrix.row(b as usize), tally)
    });

    let mut ids = Vec::with_capacity(n);
    let mut compact_of = vec![None; n];
    let mut duplicates = Vec::new();
    let mut rows = Vec::with_capacity(n * matrix.objectives());
    let mut head: Option<SolutionId> = None;
    for &idx in &order {
        let id = SolutionId(idx as usize);
        let row = matrix.row(id.0);
        match head {
            Some(canonical)
                if lex_compare_kernel(matrix.row(canonical.0), row, tally) == Ordering::Equal =>
            {
                duplicates.push((id, canonical));
            }
            _ => {
                compact_of[id.0] = Some(ids.len() as u32);
                ids.push(id);
                rows.extend_from_slice(row);
                head = Some(id);
            }
        }
    }

    let n_compact = ids.len();
    let ds = (0..n_compact)
        .map(|i| DominanceSet::prefix(i, n_compact))
        .collect();

    MndsState {
        matrix: ObjectiveMatrix::new(n_compact, matrix.objectives(), rows),
        ids,
        compact_of,
        perm: SortPermutation::identity(n_compact),
        scratch,
        ds,
        inc_set: DominanceSet::empty(n_compact),
        duplicates,
    }
}

impl MndsState {
    /// Number of solutions after duplicate removal.
    pub fn solution_count(&self) -> usize {
        self.ids.len()
    }

    pub fn objective_count(&self) -> usize {
        self.matrix.objectives()
    }

    /// `(duplicate, canonical)` pairs in detection order.
    pub fn duplicates(&self) -> &[(SolutionId, SolutionId)] {
        &self.duplicates
    }

    /// Retained solution ids in first-objective order; position = compact index.
    pub fn retained_ids(&self) -> &[SolutionId] {
        &self.ids
    }

    /// Compact index of a retained solution; `None` for duplicates.
    pub fn compact_of(&self, id: SolutionId) -> Option<usize> {
        self.compact_of[id.0].map(|c| c as usize)
    }

    pub fn permutation(&self) -> &SortPermutation {
        &self.perm
    }

    /// Current permutation decoded to original solution ids.
    pub fn order_ids(&self) -> Vec<SolutionId> {
        self.perm
            .order
            .iter()
            .map(|&c| self.ids[c as usize])
            .collect()
    }

    /// Current dominance set of a retained solution, decoded to original
    /// ids in ascending compact order. `None` for duplicates.
    pub fn dominance_set(&self, id: SolutionId) -> Option<Vec<SolutionId>> {
        let c = self.compact_of(id)?;
        Some(self.ds[c].iter().map(|u| self.ids[u]).collect())
    }

    /// Reorders the permutation ascending by the given objective (0-based)
    /// with a stable merge sort. Ties are resolved by full lexicographic
    /// comparison when `lex_ties` is set and otherwise keep their prior
    /// relative order. Returns whether the permutation changed.
    pub fn sort_by_objective(
        &mut self,
        objective: usize,
        lex_ties: bool,
        tally: &ComparisonTally,
    ) -> Result<bool, Error> {
        if objective >= self.matrix.objectives() {
            return Err(Error::ObjectiveOutOfRange {
                objective,
                count: self.matrix.objectives(),
            });
        }
        Ok(self.sort_pass(objective, lex_ties, tally))
    }

    fn sort_pass(&mut self, objective: usize, lex_ties: bool, tally: &ComparisonTally) -> bool {
        let matrix = &self.matrix;
        if lex_ties {
            sort::stable_sort_by(&mut self.perm.order, &mut self.scratch, |a, b| {
                lex_compare_kernel(matrix.row(a as usize), matrix.row(b as usize), tally)
            })
        } else {
            sort::stable_sort_by(&mut self.perm.order, &mut self.scratch, |a, b| {
                cmp_values(
                    matrix.value(a as usize, objective),
                    matrix.value(b as usize, objective),
                    tally,
                )
            })
        }
    }

    /// Sweeps the current permutation once, intersecting each dominance set
    /// with the set of solutions seen so far. Returns whether any dominance
    /// set is still nonempty.
    pub fn refine_dominance_sets(&mut self) -> bool {
        self.inc_set.clear();
        let mut has_dominance = false;
        for &c in &self.perm.order {
            let ds = &mut self.ds[c as usize];
            if !ds.is_empty() {
                ds.intersect_with(&self.inc_set);
                has_dominance |= !ds.is_empty();
            }
            self.inc_set.insert(c as usize);
        }
        has_dominance
    }

    /// Runs the passes for objectives `2..=M`: sort, and when the order
    /// changed, refine the dominance sets against the new prefix order.
    ///
    /// Returns false as soon as every dominance set is empty (no solution
    /// dominates any other); remaining objectives are skipped. An unchanged
    /// sort skips the sweep, since intersecting a set with a prefix that
    /// already contains it cannot remove anything.
    pub fn sort_rest_of_objectives(&mut self, tally: &ComparisonTally) -> bool {
        let mut has_dominance = true;
        for objective in 1..self.matrix.objectives() {
            if !has_dominance {
                break;
            }
            if self.sort_pass(objective, false, tally) {
                has_dominance = self.refine_dominance_sets();
            }
        }
        has_dominance
    }

    /// Extracts 1-based ranks per compact index from the final dominance
    /// sets: a solution's rank is one more than the worst rank in its set,
    /// or 1 when the set is empty.
    ///
    /// Scanning a set stops early once the candidate rank exceeds the
    /// highest rank assigned so far, because no member seen later can raise
    /// it further. Requires the permutation to be the final objective
    /// order, which places every dominator before the solutions it
    /// dominates; a violation is reported as an error.
    pub fn get_ranking(&self) -> Result<Vec<u32>, Error> {
        let mut ranks = vec![0u32; self.ids.len()];
        let mut max_rank = 0u32;
        for &c in &self.perm.order {
            let mut rank = 1u32;
            for u in self.ds[c as usize].iter() {
                let r = ranks[u];
                if r == 0 {
                    return Err(Error::InternalOrderViolation);
                }
                if r >= rank {
                    rank = r + 1;
                }
                if rank > max_rank {
                    break;
                }
            }
            ranks[c as usize] = rank;
            max_rank = max_rank.max(rank);
        }
        Ok(ranks)
    }
}

/// Ranks a population with merge non-dominated sorting.
///
/// Composes the three phases and reinserts duplicates with the rank of
/// their canonical solution. When no solution dominates any other, the
/// objective loop exits early and every solution is assigned rank 1.
pub fn mnds_rank(
    matrix: &ObjectiveMatrix,
    tally: &ComparisonTally,
) -> Result<RankAssignment, Error> {
    validate_population(matrix)?;
    let mut state = sort_first_objective(matrix, tally);
    let compact_ranks = if state.sort_rest_of_objectives(tally) {
        state.get_ranking()?
    } else {
        vec![1; state.solution_count()]
    };

    let mut ranks = vec![0u32; matrix.solutions()];
    for (c, &id) in state.ids.iter().enumerate() {
        ranks[id.0] = compact_ranks[c];
    }
    for &(duplicate, canonical) in &state.duplicates {
        ranks[duplicate.0] = ranks[canonical.0];
    }
    Ok(RankAssignment::from_ranks(ranks))
}
