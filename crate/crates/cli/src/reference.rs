//! Published reference values, stored as `[k - 1][n - 1]`.

/// Width/area counts of parallelogram polyominoes as published, including
/// the misprinted 551 at `(k = 3, n = 8)`.
pub const TABLE1_PUBLISHED: [[u64; 10]; 10] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 2, 4, 6, 9, 12, 16, 20, 25],
    [0, 0, 1, 3, 8, 17, 32, 551, 89, 136],
    [0, 0, 0, 1, 4, 13, 34, 78, 160, 305],
    [0, 0, 0, 0, 1, 5, 19, 58, 154, 365],
    [0, 0, 0, 0, 0, 1, 6, 26, 90, 269],
    [0, 0, 0, 0, 0, 0, 1, 7, 34, 131],
    [0, 0, 0, 0, 0, 0, 0, 1, 8, 43],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 9],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
];

/// The one published cell known to be wrong: `(k, n, printed, actual)`.
pub const TABLE1_MISPRINT: (u64, u64, u64, u64) = (3, 8, 551, 55);

/// Width/volume counts of parallelogram polycubes as published.
pub const TABLE2_PUBLISHED: [[u64; 10]; 10] = [
    [1, 2, 2, 3, 2, 4, 2, 4, 3, 4],
    [0, 1, 4, 10, 18, 32, 44, 70, 84, 126],
    [0, 0, 1, 6, 22, 59, 132, 264, 469, 808],
    [0, 0, 0, 1, 8, 38, 132, 374, 916, 2015],
    [0, 0, 0, 0, 1, 10, 58, 245, 836, 2438],
    [0, 0, 0, 0, 0, 1, 12, 82, 406, 1614],
    [0, 0, 0, 0, 0, 0, 1, 14, 110, 623],
    [0, 0, 0, 0, 0, 0, 0, 1, 16, 142],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 18],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
];

/// Parallelogram polyominoes with `n = 1..=10` cells (A006958).
pub const POLYOMINO_TOTALS: [u64; 10] = [1, 2, 4, 9, 20, 46, 105, 242, 557, 1285];

/// The published three-term expansion of `V_2`.
pub const V2_PUBLISHED: &str = "zeta(x1, x2-1) + zeta(x2, x1-1) + zeta(x1+x2-1)";

/// Note attached to reproductions of the width/area table.
pub fn table1_note() -> String {
    let (k, n, printed, actual) = TABLE1_MISPRINT;
    format!(
        "b(k={k},n={n}) = {actual}; the published table prints {printed}, which would make the n={n} total {} instead of {}",
        POLYOMINO_TOTALS[n as usize - 1] - actual + printed,
        POLYOMINO_TOTALS[n as usize - 1]
    )
}
