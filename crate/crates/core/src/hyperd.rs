//! Parallelogram polyhypercubes in dimension `d`.
//!
//! Projecting onto each plane spanned by the width axis and one height axis
//! gives a parallelogram polyomino of the same width, and any `d - 1` such
//! polyominoes of equal width glue back into exactly one polyhypercube.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::dirichlet::dirichlet_power_coefficient;
use crate::exactmath::binomial;
use crate::polycube::VolumeVector;
use crate::polyomino::count_width_height;
use crate::{BigCount, Error, Result};

pub const DEFAULT_MAX_DIMENSION: u32 = 6;

/// Dimension, width and the `d - 1` heights of a bounding box.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperBoxSpec {
    dimension: u32,
    width: u64,
    heights: Vec<u64>,
}

impl HyperBoxSpec {
    pub fn new(dimension: u32, width: u64, heights: Vec<u64>) -> Result<Self> {
        Self::with_max_dimension(dimension, width, heights, DEFAULT_MAX_DIMENSION)
    }

    pub fn with_max_dimension(
        dimension: u32,
        width: u64,
        heights: Vec<u64>,
        max_dimension: u32,
    ) -> Result<Self> {
        if dimension < 2 || dimension > max_dimension {
            return Err(Error::DimensionOutOfRange {
                requested: dimension,
                cap: max_dimension,
            });
        }
        if width == 0 {
            return Err(Error::ZeroEntry {
                what: "width",
                index: 0,
            });
        }
        if heights.len() != dimension as usize - 1 {
            return Err(Error::ExponentArity {
                expected: dimension as usize - 1,
                got: heights.len(),
            });
        }
        if let Some(index) = heights.iter().position(|&h| h == 0) {
            return Err(Error::ZeroEntry {
                what: "heights",
                index,
            });
        }
        Ok(Self {
            dimension,
            width,
            heights,
        })
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn width(&self) -> u64 {
        self.width
    }

    pub fn heights(&self) -> &[u64] {
        &self.heights
    }
}

/// `s_{k,n_1..n_{d-1}} = prod_i g_{k,n_i}`.
pub fn count_hyper(spec: &HyperBoxSpec) -> BigCount {
    spec.heights
        .iter()
        .map(|&n| count_width_height(spec.width, n))
        .product()
}

/// `(1/k^(d-1)) prod_i n_i/(n_i+k-1) C(n_i+k-1, k-1)^2`, evaluated as one
/// exact division. Panics on a nonzero remainder.
pub fn count_hyper_closed_form(spec: &HyperBoxSpec) -> BigCount {
    let k = spec.width;
    let mut numerator = BigCount::one();
    let mut denominator = BigCount::one();
    for &n in &spec.heights {
        let c = binomial(n + k - 1, k - 1);
        numerator *= &c * &c * n;
        denominator *= (n + k - 1) * k;
    }
    let (q, r) = numerator.div_rem(&denominator);
    assert!(r.is_zero(), "closed form for {spec:?} left remainder {r}");
    q
}

/// d-dimensional parallelogram polyhypercubes whose i-th hyperplateau has
/// volume `n_i`: the coefficient of `V_k^(d-1)`.
pub fn count_hyper_fixed_volumes(d: u32, n: &VolumeVector) -> Result<BigCount> {
    dirichlet_power_coefficient(n, d)
}
