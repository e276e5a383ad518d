//! Truncated power series with exact integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactmath::binomial;

/// `sum_{i=0..=order} c_i x^i`, every coefficient stored (length is `order + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// Builds a series of order `coeffs.len() - 1`; an empty vector gives the
    /// order-0 zero series.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            return Self::zero(0);
        }
        Self { coeffs }
    }

    /// `(1 - x)^power` truncated at `order`.
    pub fn one_minus_x_pow(power: u64, order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|i| {
                let c = BigInt::from(binomial(power, i as u64));
                if i % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, exponent: usize) -> BigInt {
        self.coeffs.get(exponent).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, exponent: usize, value: BigInt) {
        self.coeffs[exponent] = value;
    }

    /// Highest exponent with a nonzero coefficient, `None` for the zero series.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficients between the valuation and the degree read the same in
    /// both directions. The zero series counts as palindromic.
    pub fn is_palindromic(&self) -> bool {
        match (self.valuation(), self.degree()) {
            (Some(lo), Some(hi)) => {
                let support = &self.coeffs[lo..=hi];
                support.iter().eq(support.iter().rev())
            }
            _ => true,
        }
    }

    /// Cauchy product truncated at the smaller of the two orders.
    pub fn mul_truncated(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// `sum c_{i,j} x^i y^j` for `i <= order_x`, `j <= order_y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    coeffs: Vec<Vec<BigInt>>,
}

impl BivariateSeries {
    /// The product `a(x) * b(y)`.
    pub fn outer(a: &TruncatedSeries, b: &TruncatedSeries) -> Self {
        let coeffs = a
            .coeffs()
            .iter()
            .map(|ai| b.coeffs().iter().map(|bj| ai * bj).collect())
            .collect();
        Self { coeffs }
    }

    pub fn order_x(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn order_y(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    /// Coefficient of `x^i y^j`; zero outside the stored range.
    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_default()
    }
}
