//! Non-dominated sorting for multi- and many-objective optimization.
//!
//! The main algorithm is merge non-dominated sorting ([`mnds_rank`]): it
//! derives each solution's set of dominators from one stable merge sort per
//! objective, intersecting prefix sets represented as range-pruned bit
//! sets, and reads the Pareto ranks off those sets. [`fnds_rank`] (the
//! NSGA-II procedure) serves as the brute-force oracle, with
//! [`ens_ss_rank`] and [`ens_bs_rank`] as additional baselines.
//!
//! Every sorter counts the scalar objective-value comparisons it performs
//! in a caller-supplied [`ComparisonTally`], giving a hardware-independent
//! cost measure next to wall time. [`datagen`] provides seeded,
//! bit-reproducible population generators and [`bench`] the file formats
//! and benchmark runner behind the `ndsort` command-line tool.

pub mod baselines;
pub mod bench;
pub mod core;
pub mod datagen;
pub mod mnds;
#[cfg(test)]
pub(crate) mod test_data;

pub use crate::core::{
    dominates, lexicographic_compare, validate_population, ComparisonTally, Error, ObjectiveMatrix,
    RankAssignment, SolutionId,
};
pub use baselines::{ens_bs_rank, ens_ss_rank, fnds_rank, FrontList};
pub use bench::{
    parse_population, run_benchmark, verify, write_ranking, Algorithm, BenchConfig, BenchRecord,
    DatasetSpec, VerifyReport,
};
pub use datagen::{gen_degenerate, gen_shells, gen_uniform, GenKind, GenSpec, SplitMix64};
pub use mnds::{mnds_rank, sort_first_objective, DominanceSet, MndsState, SortPermutation};
