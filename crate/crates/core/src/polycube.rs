//! Parallelogram polycubes counted by plateau volumes, by width and volume,
//! and by width, height and depth.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactmath::{binomial, divisor_sieve, divisors};
use crate::polyomino::{series_g, validate_positive};
use crate::series::BivariateSeries;
use crate::table::CountTable;
use crate::{BigCount, Result};

/// Plateau volumes `(n_1, ..., n_k)` of a polycube of width `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VolumeVector(Vec<u64>);

impl VolumeVector {
    pub fn new(volumes: Vec<u64>) -> Result<Self> {
        validate_positive("volume vector", &volumes)?;
        Ok(Self(volumes))
    }

    pub fn volumes(&self) -> &[u64] {
        &self.0
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }
}

/// Cross-section of a plateau: `height x depth` unit cubes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlateauShape {
    pub height: u64,
    pub depth: u64,
}

impl PlateauShape {
    pub fn volume(&self) -> u64 {
        self.height * self.depth
    }

    /// Ways to glue a plateau of shape `next` after one of shape `self`.
    pub fn gluings(&self, next: &PlateauShape) -> u64 {
        self.height.min(next.height) * self.depth.min(next.depth)
    }

    /// All `tau(volume)` shapes of the given volume, by increasing height.
    pub fn all_of_volume(volume: u64) -> Vec<PlateauShape> {
        divisors(volume)
            .unwrap_or_default()
            .into_iter()
            .map(|height| PlateauShape {
                height,
                depth: volume / height,
            })
            .collect()
    }
}

/// `p_{n_1..n_k}`: parallelogram polycubes whose i-th plateau has volume `n_i`.
///
/// Sums `prod min(v_i, v_{i+1}) min(n_i/v_i, n_{i+1}/v_{i+1})` over all
/// divisor choices `v_i | n_i`, accumulated plateau by plateau.
pub fn count_fixed_plateaus(n: &VolumeVector) -> BigCount {
    let vols = n.volumes();
    let mut shapes = PlateauShape::all_of_volume(vols[0]);
    let mut weights = vec![BigCount::one(); shapes.len()];
    for &v in &vols[1..] {
        let next_shapes = PlateauShape::all_of_volume(v);
        let next_weights = next_shapes
            .iter()
            .map(|s| {
                shapes
                    .iter()
                    .zip(&weights)
                    .map(|(prev, w)| w * prev.gluings(s))
                    .sum()
            })
            .collect();
        shapes = next_shapes;
        weights = next_weights;
    }
    weights.into_iter().sum()
}

/// `grid[k - 1][n - 1]` is `c_{k,n}` for `k <= max_width`, `n <= max_volume`.
///
/// Transfer over plateaus with state `(volume used, shape of last plateau)`.
pub fn width_volume_grid(max_width: usize, max_volume: usize) -> Vec<Vec<BigCount>> {
    let sieve = divisor_sieve(max_volume as u64);
    let shapes: Vec<PlateauShape> = (1..=max_volume as u64)
        .flat_map(|v| {
            sieve[v as usize].iter().map(move |&h| PlateauShape {
                height: h,
                depth: v / h,
            })
        })
        .collect();
    let zero_layer = || vec![vec![BigCount::zero(); shapes.len()]; max_volume + 1];
    // layer[volume][shape index]
    let mut layer = zero_layer();
    for (i, s) in shapes.iter().enumerate() {
        layer[s.volume() as usize][i] = BigCount::one();
    }
    let mut grid = Vec::with_capacity(max_width);
    for width in 1..=max_width {
        grid.push(
            (1..=max_volume)
                .map(|vol| layer[vol].iter().sum())
                .collect::<Vec<BigCount>>(),
        );
        if width == max_width {
            break;
        }
        let mut next = zero_layer();
        for (vol, cells) in layer.iter().enumerate().take(max_volume).skip(width) {
            let live: Vec<(usize, &BigCount)> = cells
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if live.is_empty() {
                continue;
            }
            for (j, s) in shapes.iter().enumerate() {
                let target = vol + s.volume() as usize;
                if target > max_volume {
                    continue;
                }
                let glued: BigCount = live.iter().map(|&(i, c)| c * shapes[i].gluings(s)).sum();
                next[target][j] += glued;
            }
        }
        layer = next;
    }
    grid
}

/// `c_{k,n}`: parallelogram polycubes of width `k` and volume `n`.
pub fn count_width_volume(k: usize, n: usize) -> BigCount {
    if k == 0 || n == 0 || k > n {
        return BigCount::zero();
    }
    width_volume_grid(k, n)[k - 1][n - 1].clone()
}

/// Grid of `c_{k,n}` with rows `k = 1..=max_width`, columns `n = 1..=max_volume`.
pub fn table_c(max_width: usize, max_volume: usize) -> CountTable {
    CountTable::from_parts(
        "c",
        &["k"],
        "n",
        (1..=max_width as u64).map(|k| vec![k]).collect(),
        (1..=max_volume as u64).collect(),
        width_volume_grid(max_width, max_volume),
    )
}

/// `s_{k,n,m} = nm C(n+k-1, k-1)^2 C(m+k-1, k-1)^2 / (k^2 (n+k-1)(m+k-1))`:
/// parallelogram polycubes of width `k`, height `n` and depth `m`.
///
/// Panics if the division leaves a remainder.
pub fn count_whd(k: u64, n: u64, m: u64) -> BigCount {
    if k == 0 || n == 0 || m == 0 {
        return BigCount::zero();
    }
    let cn = binomial(n + k - 1, k - 1);
    let cm = binomial(m + k - 1, k - 1);
    let numerator = BigCount::from(n) * m * &cn * &cn * &cm * &cm;
    let denominator = BigCount::from(k) * k * (n + k - 1) * (m + k - 1);
    let (q, r) = numerator.div_rem(&denominator);
    assert!(
        r.is_zero(),
        "s_{{{k},{n},{m}}}: closed form left remainder {r}"
    );
    q
}

/// Grid of `s_{k,n,m}` with rows `(k, n)` and columns `m = 1..=max_depth`.
pub fn table_s(max_width: u64, max_height: u64, max_depth: u64) -> CountTable {
    let rows = (1..=max_width)
        .flat_map(|k| (1..=max_height).map(move |n| vec![k, n]))
        .collect();
    CountTable::build(
        "s",
        &["k", "n"],
        "m",
        rows,
        (1..=max_depth).collect(),
        |row, m| count_whd(row[0], row[1], m),
    )
}

/// `S_k(x, y) = G_k(x) G_k(y)`, truncated at `x^order_x`, `y^order_y`.
pub fn series_s(k: u64, order_x: usize, order_y: usize) -> BivariateSeries {
    BivariateSeries::outer(&series_g(k, order_x), &series_g(k, order_y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::compositions;
    use crate::polyomino::count_width_height;
    use num_bigint::BigInt;

    fn vv(v: &[u64]) -> VolumeVector {
        VolumeVector::new(v.to_vec()).unwrap()
    }

    /// Literal divisor-tuple sum, exponential in k.
    fn divisor_tuple_sum(n: &[u64]) -> BigCount {
        fn rec(n: &[u64], i: usize, chosen: &mut Vec<(u64, u64)>, acc: &mut BigCount) {
            if i == n.len() {
                let term: u64 = chosen
                    .windows(2)
                    .map(|w| w[0].0.min(w[1].0) * w[0].1.min(w[1].1))
                    .product();
                *acc += term;
                return;
            }
            for v in (1..=n[i]).filter(|v| n[i].is_multiple_of(*v)) {
                chosen.push((v, n[i] / v));
                rec(n, i + 1, chosen, acc);
                chosen.pop();
            }
        }
        let mut acc = BigCount::zero();
        rec(n, 0, &mut Vec::new(), &mut acc);
        acc
    }

    #[test]
    fn fixed_plateaus_examples() {
        assert_eq!(count_fixed_plateaus(&vv(&[6])), 4u32.into());
        assert_eq!(count_fixed_plateaus(&vv(&[2, 2])), 6u32.into());
        for k in 1..=6 {
            assert_eq!(count_fixed_plateaus(&vv(&vec![1; k])), 1u32.into());
        }
    }

    #[test]
    fn fixed_plateaus_match_literal_sum() {
        for a in 1..=8 {
            for b in 1..=8 {
                for c in 1..=6 {
                    let n = [a, b, c];
                    assert_eq!(
                        count_fixed_plateaus(&vv(&n)),
                        divisor_tuple_sum(&n),
                        "{n:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn width_volume_examples() {
        assert_eq!(count_width_volume(1, 6), 4u32.into());
        assert_eq!(count_width_volume(3, 6), 59u32.into());
        assert_eq!(count_width_volume(4, 7), 132u32.into());
        assert_eq!(count_width_volume(5, 4), 0u32.into());
    }

    #[test]
    fn dp_matches_composition_sum() {
        let grid = width_volume_grid(10, 10);
        for n in 1..=10u64 {
            for k in 1..=10usize {
                let direct: BigCount = compositions(n, k)
                    .map(|v| count_fixed_plateaus(&VolumeVector::new(v).unwrap()))
                    .sum();
                assert_eq!(grid[k - 1][n as usize - 1], direct, "c({k},{n})");
            }
        }
    }

    #[test]
    fn table_c_structure() {
        let t = table_c(10, 10);
        assert_eq!(t.column_sum(4), Some(20u32.into()));
        for n in 1..=10u64 {
            let tau = divisors(n).unwrap().len();
            assert_eq!(t.get(&[1], n), Some(&BigCount::from(tau)));
            assert_eq!(t.get(&[n], n), Some(&BigCount::one()));
        }
        for k in 1..=9u64 {
            assert_eq!(t.get(&[k], k + 1), Some(&BigCount::from(2 * k)));
        }
    }

    #[test]
    fn whd_examples() {
        for n in 1..=6 {
            for m in 1..=6 {
                assert_eq!(count_whd(1, n, m), 1u32.into());
            }
        }
        assert_eq!(count_whd(2, 2, 2), 9u32.into());
        assert_eq!(count_whd(2, 2, 3), 18u32.into());
        for m in 1..=20u64 {
            assert_eq!(count_whd(2, 2, m), BigCount::from(3 * m * (m + 1) / 2));
        }
    }

    #[test]
    fn whd_factorizes_and_is_symmetric() {
        for k in 1..=10 {
            for n in 1..=10 {
                for m in 1..=10 {
                    let s = count_whd(k, n, m);
                    assert_eq!(s, count_width_height(k, n) * count_width_height(k, m));
                    assert_eq!(s, count_whd(k, m, n));
                }
            }
        }
    }

    #[test]
    fn series_s_examples() {
        let s1 = series_s(1, 4, 4);
        for n in 1..=4 {
            for m in 1..=4 {
                assert_eq!(s1.coeff(n, m), BigInt::one());
            }
        }
        let s2 = series_s(2, 3, 3);
        assert_eq!(s2.coeff(2, 2), BigInt::from(9));
        assert_eq!(s2.coeff(2, 3), BigInt::from(18));
        let s3 = series_s(3, 2, 2);
        assert_eq!(s3.coeff(1, 1), BigInt::from(1));
        assert_eq!(s3.coeff(2, 2), BigInt::from(36));
    }

    #[test]
    fn plateau_shapes() {
        let shapes = PlateauShape::all_of_volume(6);
        assert_eq!(shapes.len(), 4);
        assert!(shapes.iter().all(|s| s.volume() == 6));
        assert_eq!(
            shapes[0],
            PlateauShape {
                height: 1,
                depth: 6
            }
        );
    }
}
