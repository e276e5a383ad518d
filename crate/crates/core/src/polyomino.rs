//! Parallelogram polyominoes counted by column heights, by width and area,
//! and by width and height.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactmath::binomial;
use crate::series::TruncatedSeries;
use crate::table::CountTable;
use crate::{BigCount, Error, Result};

/// Column heights `(m_1, ..., m_k)` of a polyomino of width `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeightVector(Vec<u64>);

impl HeightVector {
    pub fn new(heights: Vec<u64>) -> Result<Self> {
        validate_positive("height vector", &heights)?;
        Ok(Self(heights))
    }

    pub fn heights(&self) -> &[u64] {
        &self.0
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }
}

pub(crate) fn validate_positive(what: &'static str, values: &[u64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::Empty { what });
    }
    if let Some(index) = values.iter().position(|&v| v == 0) {
        return Err(Error::ZeroEntry { what, index });
    }
    Ok(())
}

/// Number of parallelogram polyominoes whose i-th column has height `m_i`:
/// gluing column `i + 1` onto column `i` can be done in `min(m_i, m_{i+1})`
/// ways.
pub fn count_fixed_columns(m: &HeightVector) -> BigCount {
    m.heights()
        .windows(2)
        .map(|w| BigCount::from(w[0].min(w[1])))
        .product()
}

/// `grid[k - 1][n - 1]` is the number of parallelogram polyominoes of width
/// `k` and area `n`, for `1 <= k <= max_width`, `1 <= n <= max_area`.
///
/// Transfer over columns with state `(area used, last column height)`.
pub fn width_area_grid(max_width: usize, max_area: usize) -> Vec<Vec<BigCount>> {
    let zero_layer = || vec![vec![BigCount::zero(); max_area + 1]; max_area + 1];
    // layer[area][last_height]
    let mut layer = zero_layer();
    for (h, row) in layer.iter_mut().enumerate().skip(1) {
        row[h] = BigCount::one();
    }
    let mut grid = Vec::with_capacity(max_width);
    for width in 1..=max_width {
        grid.push(
            (1..=max_area)
                .map(|area| layer[area].iter().sum())
                .collect::<Vec<BigCount>>(),
        );
        if width == max_width {
            break;
        }
        let mut next = zero_layer();
        for area in width..max_area {
            for h in 1..=max_area - area {
                let glued: BigCount = layer[area]
                    .iter()
                    .enumerate()
                    .skip(1)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(prev, c)| c * (prev.min(h) as u64))
                    .sum();
                next[area + h][h] += glued;
            }
        }
        layer = next;
    }
    grid
}

/// `b_{k,n}`: parallelogram polyominoes of width `k` and area `n`.
pub fn count_width_area(k: usize, n: usize) -> BigCount {
    if k == 0 || n == 0 || k > n {
        return BigCount::zero();
    }
    width_area_grid(k, n)[k - 1][n - 1].clone()
}

/// Grid of `b_{k,n}` with rows `k = 1..=max_width` and columns `n = 1..=max_area`.
pub fn table_b(max_width: usize, max_area: usize) -> CountTable {
    let grid = width_area_grid(max_width, max_area);
    CountTable::from_parts(
        "b",
        &["k"],
        "n",
        (1..=max_width as u64).map(|k| vec![k]).collect(),
        (1..=max_area as u64).collect(),
        grid,
    )
}

/// `g_{k,n} = C(k+n-1, k) C(k+n-1, n) / (k+n-1)`: parallelogram
/// polyominoes of width `k` and height `n`. Zero if either is zero.
pub fn count_width_height(k: u64, n: u64) -> BigCount {
    if k == 0 || n == 0 {
        return BigCount::zero();
    }
    let s = k + n - 1;
    let numerator = binomial(s, k) * binomial(s, n);
    let (q, r) = numerator.div_rem(&BigCount::from(s));
    assert!(
        r.is_zero(),
        "g_{{{k},{n}}}: {s} does not divide the binomial product"
    );
    q
}

/// Grid of `g_{k,n}` with rows `k = 1..=max_width`, columns `n = 1..=max_height`.
pub fn table_g(max_width: u64, max_height: u64) -> CountTable {
    CountTable::build(
        "g",
        &["k"],
        "n",
        (1..=max_width).map(|k| vec![k]).collect(),
        (1..=max_height).collect(),
        |row, n| count_width_height(row[0], n),
    )
}

/// `G_k(x) = sum_{n>=1} g_{k,n} x^n` truncated at `order`.
pub fn series_g(k: u64, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for n in 1..=order {
        s.set_coeff(n, BigInt::from(count_width_height(k, n as u64)));
    }
    s
}

/// The numerator polynomial `B_{k-1}(x) = G_k(x) (1 - x)^{2k-1}`.
///
/// Computed at series order `3k`; every coefficient above degree
/// `max(k - 1, 1)` must vanish, otherwise [`Error::SeriesTailNonzero`].
pub fn numerator_b(k: u64) -> Result<TruncatedSeries> {
    numerator_b_at_order(k, 3 * k as usize)
}

pub fn numerator_b_at_order(k: u64, order: usize) -> Result<TruncatedSeries> {
    let bound = (k.saturating_sub(1)).max(1) as usize;
    clear_denominator(k, &series_g(k, order.max(bound)))
}

/// Multiplies a truncated `G_k` by `(1 - x)^{2k-1}` and checks that what is
/// left is a polynomial of degree at most `max(k - 1, 1)`.
pub(crate) fn clear_denominator(k: u64, g: &TruncatedSeries) -> Result<TruncatedSeries> {
    let bound = (k.saturating_sub(1)).max(1) as usize;
    let order = g.order();
    let product = g.mul_truncated(&TruncatedSeries::one_minus_x_pow(2 * k - 1, order));
    if let Some(degree) = (bound + 1..=order).find(|&i| !product.coeff(i).is_zero()) {
        return Err(Error::SeriesTailNonzero {
            k: k as u32,
            degree,
        });
    }
    Ok(TruncatedSeries::from_coeffs(
        product.coeffs()[..=bound.min(order)].to_vec(),
    ))
}
