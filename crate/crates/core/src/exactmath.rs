//! Exact arithmetic substrate: big counts, rationals, binomials, divisors,
//! integer compositions and ordered set partitions.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use crate::{Error, Result};

/// Count of combinatorial objects. Never negative, never rounded.
pub type BigCount = BigUint;

/// Exact rational, always kept in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::default();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Ascending list of the positive divisors of `n`, by trial division.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::DivisorsOfZero);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Divisor lists for every integer in `0..=limit` (entry 0 is empty).
pub fn divisor_sieve(limit: u64) -> Vec<Vec<u64>> {
    let len = limit as usize + 1;
    let mut table = vec![Vec::new(); len];
    for d in 1..len {
        for multiple in (d..len).step_by(d) {
            table[multiple].push(d as u64);
        }
    }
    table
}

/// Ordered Bell (Fubini) number, by `F(n) = sum_{j=1..n} C(n, j) F(n - j)`.
pub fn fubini(k: usize) -> BigCount {
    let mut values: Vec<BigCount> = vec![BigCount::one()];
    for n in 1..=k {
        let next = (1..=n)
            .map(|j| binomial(n as u64, j as u64) * &values[n - j])
            .sum();
        values.push(next);
    }
    values.swap_remove(k)
}

/// Iterator over the compositions of `n` into exactly `k` positive parts,
/// in lexicographic order.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u64>>,
}

pub fn compositions(n: u64, k: usize) -> Compositions {
    let current = if k == 0 || (k as u64) > n {
        None
    } else {
        let mut first = vec![1; k];
        first[k - 1] = n - (k as u64 - 1);
        Some(first)
    };
    Compositions { current }
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.current.take()?;
        let k = current.len();
        let mut next = current.clone();
        let mut tail: u64 = current[k - 1];
        for i in (0..k.saturating_sub(1)).rev() {
            let slots = (k - 1 - i) as u64;
            if tail > slots {
                next[i] += 1;
                for slot in next.iter_mut().take(k - 1).skip(i + 1) {
                    *slot = 1;
                }
                next[k - 1] = tail - 1 - (slots - 1);
                self.current = Some(next);
                break;
            }
            tail += current[i];
        }
        Some(current)
    }
}

/// A sequence of disjoint nonempty blocks covering `{1..k}`; block order is
/// significant, elements inside a block are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    /// Validates that `blocks` is an ordered set partition of `{1..width}`.
    pub fn new(width: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let fail = |reason: String| Error::NotAPartition { width, reason };
        let mut seen = vec![false; width + 1];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(fail("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > width {
                    return Err(fail(format!("element {x} out of range")));
                }
                if seen[x] {
                    return Err(fail(format!("element {x} appears twice")));
                }
                seen[x] = true;
            }
        }
        if let Some(missing) = (1..=width).find(|&x| !seen[x]) {
            return Err(fail(format!("element {missing} is not covered")));
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn width(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Zero-based index of the block holding `element`.
    pub fn block_of(&self, element: usize) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&element).is_ok())
    }
}

/// Every ordered set partition of `{1..k}` exactly once.
///
/// Order: partitions with more blocks come first (`l = k` down to `1`), and
/// partitions with the same number of blocks are sorted lexicographically
/// as sequences of sorted blocks, so `({1},{2})` precedes `({2},{1})` and
/// `({1},{2,3})` precedes `({1,2},{3})`.
pub fn ordered_set_partitions(k: usize) -> impl Iterator<Item = OrderedSetPartition> {
    (1..=k)
        .rev()
        .flat_map(move |l| with_block_count(k, l).into_iter())
}

fn with_block_count(k: usize, l: usize) -> Vec<OrderedSetPartition> {
    fn assign(
        element: usize,
        k: usize,
        blocks: &mut Vec<Vec<usize>>,
        empty: usize,
        out: &mut Vec<OrderedSetPartition>,
    ) {
        if element > k {
            if empty == 0 {
                out.push(OrderedSetPartition {
                    blocks: blocks.clone(),
                });
            }
            return;
        }
        // Elements left must be able to fill the still-empty blocks.
        if k - element + 1 < empty {
            return;
        }
        for b in 0..blocks.len() {
            let was_empty = blocks[b].is_empty();
            blocks[b].push(element);
            assign(element + 1, k, blocks, empty - usize::from(was_empty), out);
            blocks[b].pop();
        }
    }

    let mut out = Vec::new();
    if l == 0 || l > k {
        return out;
    }
    let mut blocks = vec![Vec::new(); l];
    assign(1, k, &mut blocks, l, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_division(n: u64) -> Vec<u64> {
        (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
    }

    fn tau_from_factorization(mut n: u64) -> usize {
        let mut tau = 1;
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            tau *= e + 1;
            p += 1;
        }
        if n > 1 {
            tau *= 2;
        }
        tau
    }

    #[test]
    fn binomial_small_cases() {
        assert_eq!(binomial(5, 0), 1u32.into());
        assert_eq!(binomial(5, 2), 10u32.into());
        assert_eq!(binomial(3, 4), BigCount::default());
        assert_eq!(binomial(0, 0), 1u32.into());
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![BigCount::one()];
        for n in 1..=40u64 {
            let mut next = vec![BigCount::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for (k, value) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as u64), value, "C({n},{k})");
            }
        }
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(6).unwrap(), vec![1, 2, 3, 6]);
        assert_eq!(divisors(12).unwrap(), trial_division(12));
        assert_eq!(divisors(0), Err(Error::DivisorsOfZero));
    }

    #[test]
    fn divisor_count_matches_factorization() {
        let sieve = divisor_sieve(500);
        for n in 1..=500u64 {
            let d = divisors(n).unwrap();
            assert_eq!(d.len(), tau_from_factorization(n), "tau({n})");
            assert_eq!(d, trial_division(n));
            assert_eq!(sieve[n as usize], d);
        }
    }

    #[test]
    fn compositions_examples() {
        assert_eq!(compositions(3, 1).collect::<Vec<_>>(), vec![vec![3]]);
        assert_eq!(
            compositions(4, 2).collect::<Vec<_>>(),
            vec![vec![1, 3], vec![2, 2], vec![3, 1]]
        );
        assert_eq!(compositions(6, 3).count(), 10);
        assert_eq!(compositions(3, 4).count(), 0);
    }

    #[test]
    fn compositions_count_and_order() {
        for n in 1..=20u64 {
            for k in 1..=n as usize {
                let all: Vec<_> = compositions(n, k).collect();
                assert_eq!(
                    BigCount::from(all.len()),
                    binomial(n - 1, k as u64 - 1),
                    "n={n} k={k}"
                );
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all
                    .iter()
                    .all(|c| c.iter().sum::<u64>() == n && c.iter().all(|&p| p >= 1)));
            }
        }
    }

    #[test]
    fn ordered_set_partition_counts() {
        assert_eq!(ordered_set_partitions(1).count(), 1);
        assert_eq!(ordered_set_partitions(3).count(), 13);
        assert_eq!(ordered_set_partitions(4).count(), 75);
        for k in 1..=8 {
            assert_eq!(
                BigCount::from(ordered_set_partitions(k).count()),
                fubini(k),
                "k={k}"
            );
        }
    }

    #[test]
    fn ordered_set_partition_order_is_documented_order() {
        let two: Vec<_> = ordered_set_partitions(2)
            .map(|p| p.blocks().to_vec())
            .collect();
        assert_eq!(
            two,
            vec![
                vec![vec![1], vec![2]],
                vec![vec![2], vec![1]],
                vec![vec![1, 2]]
            ]
        );
        let all: Vec<_> = ordered_set_partitions(5).collect();
        for w in all.windows(2) {
            assert!(w[0].len() > w[1].len() || (w[0].len() == w[1].len() && w[0] < w[1]));
        }
        let distinct: std::collections::BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len());
    }

    #[test]
    fn ordered_set_partition_validation() {
        assert!(OrderedSetPartition::new(3, vec![vec![3, 1], vec![2]]).is_ok());
        assert!(OrderedSetPartition::new(3, vec![vec![1], vec![2]]).is_err());
        assert!(OrderedSetPartition::new(2, vec![vec![1, 2], vec![]]).is_err());
        assert!(OrderedSetPartition::new(2, vec![vec![1, 2], vec![2]]).is_err());
        assert!(OrderedSetPartition::new(2, vec![vec![1, 4]]).is_err());
        let p = OrderedSetPartition::new(3, vec![vec![3, 1], vec![2]]).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 3], vec![2]]);
        assert_eq!(p.block_of(2), Some(1));
        assert_eq!(p.width(), 3);
    }

    #[test]
    fn fubini_values() {
        let expected = [1u32, 1, 3, 13, 75, 541, 4683, 47293, 545835];
        for (k, &v) in expected.iter().enumerate() {
            assert_eq!(fubini(k), v.into());
        }
    }

    proptest! {
        #[test]
        fn binomial_symmetry(n in 0u64..200, k in 0u64..200) {
            prop_assume!(k <= n);
            prop_assert_eq!(binomial(n, k), binomial(n, n - k));
        }
    }
}
