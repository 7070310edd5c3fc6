//! Fixtures shared by unit tests.

/// 14 solutions x 3 objectives with known front structure, duplicates
/// (rows 13 and 12 duplicate rows 1 and 8) and first-objective ties.
pub(crate) const WORKED_EXAMPLE_ROWS: [[f64; 3]; 14] = [
    [34.0, 30.0, 40.0],
    [33.0, 34.0, 30.0],
    [32.0, 32.0, 31.0],
    [31.0, 34.0, 34.0],
    [34.0, 30.0, 41.0],
    [36.0, 35.0, 36.0],
    [36.0, 33.0, 32.0],
    [35.0, 31.0, 43.0],
    [37.0, 36.0, 39.0],
    [35.0, 34.0, 38.0],
    [38.0, 38.0, 37.0],
    [39.0, 37.0, 31.0],
    [37.0, 36.0, 39.0],
    [33.0, 34.0, 30.0],
];

/// Pareto ranks of `WORKED_EXAMPLE_ROWS`, index = row. Verified against brute-force
/// all-pairs dominance: fronts are {0,1,2,3,13}, {4,6,9,11}, {5,7}, {8,10,12}.
pub(crate) const WORKED_EXAMPLE_RANKS: [u32; 14] = [1, 1, 1, 1, 2, 3, 2, 3, 4, 2, 4, 2, 4, 1];
