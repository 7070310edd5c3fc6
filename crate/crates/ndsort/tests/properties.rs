//! Property tests for the dominance primitives and the structural
//! guarantees of the sorters.

mod common;

use ndsort::{
    dominates, ens_bs_rank, ens_ss_rank, fnds_rank, gen_degenerate, gen_shells, gen_uniform,
    lexicographic_compare, mnds_rank, sort_first_objective, ComparisonTally, FrontList,
    ObjectiveMatrix, SolutionId, SplitMix64,
};
use proptest::prelude::*;
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// `count` vectors sharing one dimension, with values from a small integer
/// grid so dominated pairs and ties are common.
fn vector_family(count: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    (2usize..4).prop_flat_map(move |dim| {
        prop::collection::vec(
            prop::collection::vec((0u8..4).prop_map(f64::from), dim),
            count,
        )
    })
}

proptest! {
    #[test]
    fn dominates_is_irreflexive_and_antisymmetric(pair in vector_family(2)) {
        let (a, b) = (&pair[0], &pair[1]);
        let t = ComparisonTally::new();
        prop_assert!(!dominates(a, a, &t).unwrap());
        if dominates(a, b, &t).unwrap() {
            prop_assert!(!dominates(b, a, &t).unwrap());
        }
    }

    #[test]
    fn dominates_is_transitive(vectors in vector_family(6)) {
        let t = ComparisonTally::new();
        for a in &vectors {
            for b in &vectors {
                for c in &vectors {
                    if dominates(a, b, &t).unwrap() && dominates(b, c, &t).unwrap() {
                        prop_assert!(dominates(a, c, &t).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn lexicographic_compare_is_a_total_order(triple in vector_family(3)) {
        let (a, b, c) = (&triple[0], &triple[1], &triple[2]);
        let t = ComparisonTally::new();
        let cmp = |x: &[f64], y: &[f64]| lexicographic_compare(x, y, &t).unwrap();
        prop_assert_eq!(cmp(a, a), Ordering::Equal);
        prop_assert_eq!(cmp(a, b), cmp(b, a).reverse());
        prop_assert_eq!(cmp(a, b) == Ordering::Equal, a == b);
        if cmp(a, b) != Ordering::Greater && cmp(b, c) != Ordering::Greater {
            prop_assert_ne!(cmp(a, c), Ordering::Greater);
        }
    }

    // The tie-break property the first sorting pass relies on: a dominator
    // always sorts ahead of the solutions it dominates.
    #[test]
    fn componentwise_smaller_sorts_first(
        (base, bumps, forced) in (1usize..6).prop_flat_map(|len| {
            (
                prop::collection::vec(0.0f64..100.0, len),
                prop::collection::vec(0.0f64..10.0, len),
                0..len,
            )
        }),
    ) {
        let mut worse = base.clone();
        for (i, bump) in bumps.iter().enumerate() {
            worse[i] += bump;
        }
        worse[forced] += 1.0;
        let t = ComparisonTally::new();
        prop_assert!(dominates(&base, &worse, &t).unwrap());
        prop_assert_eq!(
            lexicographic_compare(&base, &worse, &t).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn front_list_round_trips(seed in 0u64..500, n in 1usize..60, m in 2usize..5) {
        let matrix = gen_uniform(n, m, seed);
        let t = ComparisonTally::new();
        let ranks = fnds_rank(&matrix, &t).unwrap();
        let fronts = FrontList::from_ranks(&ranks);
        prop_assert!(fronts.iter().all(|f| !f.is_empty()));
        prop_assert_eq!(fronts.to_ranks(), ranks);
        let covered: usize = fronts.iter().map(<[SolutionId]>::len).sum();
        prop_assert_eq!(covered, n);
    }
}

/// After the objective passes complete, every dominance set must equal the
/// brute-force dominator set of its solution (duplicates excluded).
#[test]
fn dominance_sets_are_exact() {
    let mut rng = SplitMix64::new(0xE7AC);
    for i in 0..60u64 {
        let n = 2 + rng.next_index(148);
        let m = 2 + rng.next_index(5);
        let matrix = match i % 3 {
            0 => gen_uniform(n, m, i),
            1 => gen_degenerate(n, m, i, 0.2, 6),
            _ => gen_shells(n, m, 1 + rng.next_index(n.min(8)), i).unwrap(),
        };
        let tally = ComparisonTally::new();
        let mut state = sort_first_objective(&matrix, &tally);
        state.sort_rest_of_objectives(&tally);
        let check = ComparisonTally::new();
        for &id in state.retained_ids() {
            let actual: BTreeSet<SolutionId> =
                state.dominance_set(id).unwrap().into_iter().collect();
            let expected: BTreeSet<SolutionId> = state
                .retained_ids()
                .iter()
                .copied()
                .filter(|&u| {
                    u != id && dominates(matrix.row(u.0), matrix.row(id.0), &check).unwrap()
                })
                .collect();
            assert_eq!(actual, expected, "instance {i}: dominance set of {id}");
        }
    }
}

/// Total comparisons stay within the merge-sort envelope
/// (2M-1) * N * ceil(log2 N) plus M per first-pass tie encounter. Tie
/// encounters are bounded from above by the number of pairs sharing a
/// first-objective value plus one prescan and one duplicate-scan revisit
/// per adjacency.
#[test]
fn comparison_count_is_bounded() {
    let mut rng = SplitMix64::new(0xB0BD);
    for i in 0..80u64 {
        let n = 2 + rng.next_index(198);
        let m = 2 + rng.next_index(7);
        let matrix = if i % 2 == 0 {
            gen_uniform(n, m, i)
        } else {
            gen_degenerate(n, m, i, 0.0, [2, 4, 16][rng.next_index(3)])
        };
        let tally = ComparisonTally::new();
        mnds_rank(&matrix, &tally).unwrap();

        let mut eq_pairs = 0u64;
        for a in 0..n {
            for b in (a + 1)..n {
                if matrix.value(a, 0) == matrix.value(b, 0) {
                    eq_pairs += 1;
                }
            }
        }
        let tie_encounters = if eq_pairs > 0 {
            eq_pairs + 2 * n as u64
        } else {
            0
        };
        let envelope = (2 * m as u64 - 1) * n as u64 * (n as f64).log2().ceil() as u64;
        let bound = envelope + tie_encounters * m as u64;
        assert!(
            tally.count() <= bound,
            "instance {i} (n={n}, m={m}): tally {} exceeds bound {bound}",
            tally.count()
        );
    }
}

/// All three baselines and mnds agree on populations drawn from every
/// generator family, including tie- and duplicate-heavy ones.
#[test]
fn sorters_agree_across_generator_families() {
    let mut rng = SplitMix64::new(0xA9EE);
    for i in 0..40u64 {
        let n = 1 + rng.next_index(120);
        let m = 2 + rng.next_index(4);
        let matrix = match i % 4 {
            0 => gen_uniform(n, m, i),
            1 => gen_degenerate(n, m, i, 0.4, 3),
            2 => gen_degenerate(n, m, i, 0.6, 0),
            _ => gen_shells(n, m, 1 + rng.next_index(n.min(6)), i).unwrap(),
        };
        let t = ComparisonTally::new();
        let oracle = fnds_rank(&matrix, &t).unwrap();
        assert_eq!(mnds_rank(&matrix, &t).unwrap(), oracle, "instance {i}");
        assert_eq!(ens_ss_rank(&matrix, &t).unwrap(), oracle, "instance {i}");
        assert_eq!(ens_bs_rank(&matrix, &t).unwrap(), oracle, "instance {i}");
    }
}

/// Medium-size oracle check at the few-objective end of the spectrum.
#[test]
fn mnds_matches_oracle_at_500_solutions() {
    for m in [2usize, 3, 5] {
        let matrix = gen_uniform(500, m, 4242 + m as u64);
        let t = ComparisonTally::new();
        assert_eq!(
            mnds_rank(&matrix, &t).unwrap(),
            fnds_rank(&matrix, &t).unwrap(),
            "m = {m}"
        );
    }
}

/// ENS-SS magnitude anchor at N=800, M=10: tally lands within an order of
/// magnitude of 1e6 and at least 10x the MNDS tally on the same input.
#[test]
fn ens_ss_tally_magnitude_at_800_by_10() {
    let matrix = gen_uniform(800, 10, 1);
    let ens = ComparisonTally::new();
    ens_ss_rank(&matrix, &ens).unwrap();
    let mnds = ComparisonTally::new();
    mnds_rank(&matrix, &mnds).unwrap();
    assert!(
        (1e5..1e7).contains(&(ens.count() as f64)),
        "ens-ss tally {} not within order 1e6",
        ens.count()
    );
    let ratio = ens.count() as f64 / mnds.count() as f64;
    assert!(
        ratio >= 10.0,
        "ens-ss/mnds ratio {ratio:.2} below 10 (ens {}, mnds {})",
        ens.count(),
        mnds.count()
    );
}

/// ENS-BS does the same work as ENS-SS up to front-location strategy; the
/// tallies stay within the same order of magnitude.
#[test]
fn ens_bs_tally_tracks_ens_ss() {
    let matrix = gen_uniform(800, 5, 1);
    let ss = ComparisonTally::new();
    ens_ss_rank(&matrix, &ss).unwrap();
    let bs = ComparisonTally::new();
    ens_bs_rank(&matrix, &bs).unwrap();
    let ratio = bs.count() as f64 / ss.count() as f64;
    assert!(
        (0.2..=5.0).contains(&ratio),
        "ens-bs/ens-ss ratio {ratio:.2} (ss {}, bs {})",
        ss.count(),
        bs.count()
    );
}

/// The fnds tally is insensitive to row order only up to pair enumeration;
/// the resulting ranks must be identical. Quick differential on top of the
/// common fixture.
#[test]
fn fixture_ranks_survive_reversal() {
    let matrix = common::worked_example();
    let reversed_rows: Vec<Vec<f64>> = (0..matrix.solutions())
        .rev()
        .map(|r| matrix.row(r).to_vec())
        .collect();
    let reversed = ObjectiveMatrix::from_rows(&reversed_rows).unwrap();
    let t = ComparisonTally::new();
    let base = fnds_rank(&matrix, &t).unwrap();
    let flipped = fnds_rank(&reversed, &t).unwrap();
    let n = matrix.solutions();
    for (id, rank) in base.iter() {
        assert_eq!(flipped.rank_of(SolutionId(n - 1 - id.0)), rank);
    }
}
