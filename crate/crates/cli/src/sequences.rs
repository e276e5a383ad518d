//! Integer sequences derived from our counts, for comparison with OEIS.

use num_bigint::BigInt;
use polygram_core::polycube::count_whd;
use polygram_core::polyomino::width_area_grid;
use polygram_core::BigCount;

/// A sequence we can produce and the b-file it should match.
#[derive(Debug, Clone, Copy)]
pub struct SequenceCheck {
    pub id: &'static str,
    pub description: &'static str,
    /// Number of terms to generate.
    pub terms: usize,
    pub generate: fn(usize) -> Vec<BigInt>,
}

impl SequenceCheck {
    /// `b006958.txt` for `A006958`.
    pub fn file_name(&self) -> String {
        format!("b{}.txt", &self.id[1..])
    }

    pub fn values(&self) -> Vec<BigInt> {
        (self.generate)(self.terms)
    }
}

pub const CHECKS: [SequenceCheck; 5] = [
    SequenceCheck {
        id: "A006958",
        description: "parallelogram polyominoes by area (row sums of b)",
        terms: 16,
        generate: polyomino_totals,
    },
    SequenceCheck {
        id: "A174158",
        description: "s(k,n,n) read by rows r = k+n-1",
        terms: 55,
        generate: whd_square_triangle,
    },
    SequenceCheck {
        id: "A045943",
        description: "s(2,2,m)",
        terms: 20,
        generate: whd_two_two,
    },
    SequenceCheck {
        id: "A000891",
        description: "s(n,n,1)",
        terms: 15,
        generate: whd_diagonal,
    },
    SequenceCheck {
        id: "A319743",
        description: "sum over n+k=l of s(k,n,n)",
        terms: 15,
        generate: whd_antidiagonal_sums,
    },
];

fn signed(v: BigCount) -> BigInt {
    BigInt::from(v)
}

/// `sum_k b_{k,n}` for `n = 1..=len`.
pub fn polyomino_totals(len: usize) -> Vec<BigInt> {
    let grid = width_area_grid(len, len);
    (0..len)
        .map(|n| signed(grid.iter().map(|row| &row[n]).sum()))
        .collect()
}

/// First `len` terms of `s_{1,1,1}; s_{1,2,2}, s_{2,1,1}; ...`: row `r`
/// lists `s_{k,r+1-k,r+1-k}` for `k = 1..=r`.
pub fn whd_square_triangle(len: usize) -> Vec<BigInt> {
    (1u64..)
        .flat_map(|r| (1..=r).map(move |k| (k, r + 1 - k)))
        .take(len)
        .map(|(k, n)| signed(count_whd(k, n, n)))
        .collect()
}

/// `s_{2,2,m}` for `m = 1..=len`.
pub fn whd_two_two(len: usize) -> Vec<BigInt> {
    (1..=len as u64)
        .map(|m| signed(count_whd(2, 2, m)))
        .collect()
}

/// `s_{n,n,1}` for `n = 1..=len`.
pub fn whd_diagonal(len: usize) -> Vec<BigInt> {
    (1..=len as u64)
        .map(|n| signed(count_whd(n, n, 1)))
        .collect()
}

/// `sum_{n+k=l} s_{k,n,n}` for `l = 2..=len+1`.
pub fn whd_antidiagonal_sums(len: usize) -> Vec<BigInt> {
    (2..=len as u64 + 1)
        .map(|l| signed((1..l).map(|k| count_whd(k, l - k, l - k)).sum()))
        .collect()
}
