//! The Dirichlet generating function `V_k` of parallelogram polyominoes of
//! width `k`, its expansion into multiple zeta functions, exact truncated
//! evaluation of both sides, and coordinatewise Dirichlet powers.
//!
//! `V_k(x_1..x_k) = sum_{n_1..n_k >= 1} min(n_1,n_2)...min(n_{k-1},n_k) / (n_1^x_1 ... n_k^x_k)`
//!
//! Splitting the summation domain by the order pattern of `(n_1..n_k)`
//! gives one multiple zeta term per ordered set partition of `{1..k}`:
//! blocks hold indices with equal `n`, and blocks are listed by decreasing
//! `n`. Each `min(n_j, n_{j+1})` lowers the exponent of the smaller of the
//! two by one (the left one when they are equal).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactmath::{divisors, ordered_set_partitions, OrderedSetPartition};
use crate::polycube::VolumeVector;
use crate::polyomino::{count_fixed_columns, HeightVector};
use crate::{BigCount, Error, ExactRational, Result};

/// Default upper bound on `k` for [`expand_v`]; Fubini(8) = 545835 terms.
pub const MAX_EXPANSION_WIDTH: usize = 8;

/// `sum_{j in variables} x_j - offset`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExponent {
    variables: Vec<usize>,
    offset: u64,
}

impl LinearExponent {
    /// `variables` are 1-based indices; they are sorted and must be nonempty.
    pub fn new(mut variables: Vec<usize>, offset: u64) -> Result<Self> {
        if variables.is_empty() {
            return Err(Error::Empty {
                what: "exponent variable set",
            });
        }
        variables.sort_unstable();
        Ok(Self { variables, offset })
    }

    pub fn variables(&self) -> &[usize] {
        &self.variables
    }

    pub fn offset(&self) -> u64 {
        self.offset
    }

    /// Value at the concrete point `x` (`x[j - 1]` is `x_j`).
    pub fn eval(&self, x: &[i64]) -> i64 {
        self.variables.iter().map(|&j| x[j - 1]).sum::<i64>() - self.offset as i64
    }
}

impl fmt::Display for LinearExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in self.variables.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "x{j}")?;
        }
        if self.offset > 0 {
            write!(f, "-{}", self.offset)?;
        }
        Ok(())
    }
}

impl FromStr for LinearExponent {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (vars, offset) = match s.split_once('-') {
            Some((vars, off)) => (vars, off.parse::<u64>().map_err(|e| format!("{s}: {e}"))?),
            None => (s.as_str(), 0),
        };
        let variables = vars
            .split('+')
            .map(|v| {
                v.strip_prefix('x')
                    .and_then(|i| i.parse::<usize>().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| format!("bad variable {v:?} in {s:?}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        LinearExponent::new(variables, offset).map_err(|e| e.to_string())
    }
}

/// `zeta_l(e_1, ..., e_l) = sum_{n_1 > ... > n_l >= 1} 1 / (n_1^e_1 ... n_l^e_l)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZetaTerm {
    arguments: Vec<LinearExponent>,
}

impl ZetaTerm {
    pub fn new(arguments: Vec<LinearExponent>) -> Result<Self> {
        if arguments.is_empty() {
            return Err(Error::Empty {
                what: "zeta argument list",
            });
        }
        Ok(Self { arguments })
    }

    pub fn depth(&self) -> usize {
        self.arguments.len()
    }

    pub fn arguments(&self) -> &[LinearExponent] {
        &self.arguments
    }

    /// Whether the argument variable sets partition `{1..k}`.
    pub fn is_well_formed(&self, k: usize) -> bool {
        let mut seen = vec![false; k + 1];
        for j in self.arguments.iter().flat_map(|a| a.variables()) {
            if *j > k || seen[*j] {
                return false;
            }
            seen[*j] = true;
        }
        seen[1..].iter().all(|&s| s)
    }
}

impl fmt::Display for ZetaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta(")?;
        for (i, a) in self.arguments.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for ZetaTerm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let inner = s
            .trim()
            .strip_prefix("zeta(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| format!("expected zeta(...), got {s:?}"))?;
        let arguments = inner
            .split(',')
            .map(str::parse)
            .collect::<std::result::Result<Vec<LinearExponent>, _>>()?;
        ZetaTerm::new(arguments).map_err(|e| e.to_string())
    }
}

/// `V_k` written as a sum of multiple zeta terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaExpansion {
    width: usize,
    terms: Vec<ZetaTerm>,
}

impl ZetaExpansion {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn terms(&self) -> &[ZetaTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for ZetaExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// The zeta term contributed by the order pattern `partition`.
///
/// For each element `m` of block `i`: one is subtracted when `m - 1` sits in
/// a strictly earlier block, and one when `m + 1` sits in block `i` or an
/// earlier one.
pub fn zeta_term_from_partition(partition: &OrderedSetPartition, k: usize) -> Result<ZetaTerm> {
    if partition.width() != k {
        return Err(Error::NotAPartition {
            width: k,
            reason: format!("partition covers {} elements", partition.width()),
        });
    }
    let mut block_of = vec![usize::MAX; k + 2];
    for (i, block) in partition.blocks().iter().enumerate() {
        for &m in block {
            if m == 0 || m > k {
                return Err(Error::NotAPartition {
                    width: k,
                    reason: format!("element {m} out of range"),
                });
            }
            block_of[m] = i;
        }
    }
    let arguments = partition
        .blocks()
        .iter()
        .enumerate()
        .map(|(i, block)| {
            let offset = block
                .iter()
                .map(|&m| {
                    let left = m > 1 && block_of[m - 1] < i;
                    let right = m < k && block_of[m + 1] <= i;
                    u64::from(left) + u64::from(right)
                })
                .sum();
            LinearExponent {
                variables: block.clone(),
                offset,
            }
        })
        .collect();
    Ok(ZetaTerm { arguments })
}

/// Expansion of `V_k`, one term per ordered set partition, in the order of
/// [`ordered_set_partitions`]. Refuses `k` above [`MAX_EXPANSION_WIDTH`].
pub fn expand_v(k: usize) -> Result<ZetaExpansion> {
    expand_v_with_cap(k, MAX_EXPANSION_WIDTH)
}

pub fn expand_v_with_cap(k: usize, cap: usize) -> Result<ZetaExpansion> {
    if k == 0 {
        return Err(Error::Empty {
            what: "variable set",
        });
    }
    if k > cap {
        return Err(Error::WidthAboveCap { requested: k, cap });
    }
    let terms = ordered_set_partitions(k)
        .map(|p| zeta_term_from_partition(&p, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(ZetaExpansion { width: k, terms })
}

/// Integer evaluation of products `prod n_i^(-e_i)` over a common
/// denominator: the factor for `n^(-e)` is `L^max(e,0) / n^e` with
/// `L = lcm(1..=bound)`, which is always an integer, so a product of factors
/// is the true value times `L^(sum of positive exponents)`.
struct ScaledPowers {
    lcm: BigInt,
}

impl ScaledPowers {
    fn new(bound: u64) -> Self {
        let lcm = (1..=bound).fold(BigInt::one(), |acc, n| acc.lcm(&BigInt::from(n)));
        Self { lcm }
    }

    fn factor(&self, n: u64, e: i64) -> BigInt {
        let magnitude = e.unsigned_abs() as u32;
        if e >= 0 {
            self.lcm.pow(magnitude) / BigInt::from(n).pow(magnitude)
        } else {
            BigInt::from(n).pow(magnitude)
        }
    }

    /// Undoes the scaling for a product whose exponents are `exps`.
    fn unscale(&self, total: BigInt, exps: &[i64]) -> ExactRational {
        let positive: i64 = exps.iter().filter(|&&e| e > 0).sum();
        BigRational::new(total, self.lcm.pow(positive as u32))
    }
}

fn check_arity(k: usize, x: &[i64]) -> Result<()> {
    if x.len() != k {
        return Err(Error::ExponentArity {
            expected: k,
            got: x.len(),
        });
    }
    Ok(())
}

/// `V_k(x)` summed over `(n_1..n_k)` in `{1..bound}^k`, exactly.
pub fn truncated_v(k: usize, x: &[i64], bound: u64) -> Result<ExactRational> {
    if k == 0 {
        return Err(Error::Empty {
            what: "variable set",
        });
    }
    check_arity(k, x)?;
    let powers = ScaledPowers::new(bound);
    // acc[n - 1]: scaled sum over prefixes ending with n_i = n.
    let mut acc: Vec<BigInt> = (1..=bound).map(|n| powers.factor(n, x[0])).collect();
    for &xi in &x[1..] {
        acc = (1..=bound)
            .map(|n| {
                let glued: BigInt = acc
                    .iter()
                    .enumerate()
                    .map(|(p, a)| a * BigInt::from((p as u64 + 1).min(n)))
                    .sum();
                glued * powers.factor(n, xi)
            })
            .collect();
    }
    Ok(powers.unscale(acc.into_iter().sum(), x))
}

/// One zeta term summed over `bound >= n_1 > ... > n_l >= 1`, with each
/// argument evaluated at `x`.
pub fn truncated_zeta_term(term: &ZetaTerm, x: &[i64], bound: u64) -> Result<ExactRational> {
    let k = x.len();
    if !term.is_well_formed(k) {
        return Err(Error::NotAPartition {
            width: k,
            reason: format!("{term} does not use each of x1..x{k} exactly once"),
        });
    }
    let exps: Vec<i64> = term.arguments.iter().map(|a| a.eval(x)).collect();
    let powers = ScaledPowers::new(bound);
    // acc[n - 1]: scaled sum over decreasing prefixes whose last entry is n.
    let mut acc: Vec<BigInt> = (1..=bound).map(|n| powers.factor(n, exps[0])).collect();
    for &e in &exps[1..] {
        let mut above = BigInt::zero();
        let mut next = vec![BigInt::zero(); acc.len()];
        for n in (1..=bound).rev() {
            let i = (n - 1) as usize;
            next[i] = &above * powers.factor(n, e);
            above += &acc[i];
        }
        acc = next;
    }
    Ok(powers.unscale(acc.into_iter().sum(), &exps))
}

/// Both sides of the expansion identity at one truncated point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionReport {
    pub k: usize,
    pub x: Vec<i64>,
    pub bound: u64,
    pub direct: ExactRational,
    pub expanded: ExactRational,
    pub per_term: Vec<(ZetaTerm, ExactRational)>,
}

impl ExpansionReport {
    pub fn holds(&self) -> bool {
        self.direct == self.expanded
    }
}

/// Compares the direct truncated sum of `V_k` with the sum of the truncated
/// zeta terms of [`expand_v`]. A mismatch is reported, not raised.
pub fn verify_expansion(k: usize, x: &[i64], bound: u64) -> Result<ExpansionReport> {
    let expansion = expand_v(k)?;
    let direct = truncated_v(k, x, bound)?;
    let eval = |t: &ZetaTerm| truncated_zeta_term(t, x, bound).map(|v| (t.clone(), v));
    #[cfg(feature = "parallel")]
    let per_term = {
        use rayon::prelude::*;
        expansion
            .terms
            .par_iter()
            .map(eval)
            .collect::<Result<Vec<_>>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let per_term = expansion
        .terms
        .iter()
        .map(eval)
        .collect::<Result<Vec<_>>>()?;
    let expanded = per_term.iter().map(|(_, v)| v).sum();
    Ok(ExpansionReport {
        k,
        x: x.to_vec(),
        bound,
        direct,
        expanded,
        per_term,
    })
}

/// The ordered set partition describing the order pattern of `tuple`:
/// equal entries share a block, blocks run from the largest value down.
pub fn order_pattern(tuple: &[u64]) -> OrderedSetPartition {
    let mut values: Vec<u64> = tuple.to_vec();
    values.sort_unstable_by(|a, b| b.cmp(a));
    values.dedup();
    let blocks = values
        .iter()
        .map(|&v| (1..=tuple.len()).filter(|&j| tuple[j - 1] == v).collect())
        .collect();
    OrderedSetPartition::new(tuple.len(), blocks).expect("order pattern covers every index")
}

/// Whether `tuple` follows the order pattern `partition`.
pub fn matches_pattern(partition: &OrderedSetPartition, tuple: &[u64]) -> bool {
    if partition.width() != tuple.len() {
        return false;
    }
    let mut previous: Option<u64> = None;
    for block in partition.blocks() {
        let v = tuple[block[0] - 1];
        if block.iter().any(|&j| tuple[j - 1] != v) {
            return false;
        }
        if previous.is_some_and(|p| p <= v) {
            return false;
        }
        previous = Some(v);
    }
    true
}

/// Coefficient of `n_1^-x_1 ... n_k^-x_k` in `V_k^(d-1)`: the `(d-1)`-fold
/// coordinatewise Dirichlet convolution of `a_{m_1..m_k} = prod min(m_i, m_{i+1})`.
///
/// For `d = 3` this is the number of parallelogram polycubes with plateau
/// volumes `n`; in general it counts d-dimensional parallelogram
/// polyhypercubes with hyperplateau volumes `n`.
pub fn dirichlet_power_coefficient(n: &VolumeVector, d: u32) -> Result<BigCount> {
    if d < 2 {
        return Err(Error::DimensionBelowTwo(d));
    }
    let mut memo = HashMap::new();
    Ok(power_coefficient(n.volumes(), d - 1, &mut memo))
}

fn power_coefficient(
    n: &[u64],
    factors: u32,
    memo: &mut HashMap<(Vec<u64>, u32), BigCount>,
) -> BigCount {
    if factors == 1 {
        let m = HeightVector::new(n.to_vec()).expect("positive entries");
        return count_fixed_columns(&m);
    }
    if let Some(v) = memo.get(&(n.to_vec(), factors)) {
        return v.clone();
    }
    let choices: Vec<Vec<u64>> = n.iter().map(|&v| divisors(v).expect("positive")).collect();
    let mut total = BigCount::zero();
    let mut index = vec![0usize; n.len()];
    loop {
        let first: Vec<u64> = index.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        let rest: Vec<u64> = n.iter().zip(&first).map(|(a, b)| a / b).collect();
        let head = count_fixed_columns(&HeightVector::new(first).expect("positive"));
        total += head * power_coefficient(&rest, factors - 1, memo);
        // odometer over divisor tuples
        let mut pos = 0;
        loop {
            if pos == n.len() {
                memo.insert((n.to_vec(), factors), total.clone());
                return total;
            }
            index[pos] += 1;
            if index[pos] < choices[pos].len() {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
}
