//! Partitions, strict and odd partitions, modified Frobenius coordinates,
//! the doubling map and Kerov interlacing coordinates.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{rat, Rational};

/// Weakly decreasing sequence of positive integers; the empty partition is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Trailing zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        Self(
            (1..=width)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
                .collect(),
        )
    }

    /// Number of boxes on the main diagonal.
    pub fn durfee(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize > *i)
            .count()
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `5,4,2,1`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// Partition with distinct parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let p = Partition::new(parts)?;
        if p.0.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{:?} has repeated parts",
                p.0
            )));
        }
        Ok(Self(p))
    }

    pub fn empty() -> Self {
        Self(Partition::empty())
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn size(&self) -> u32 {
        self.0.size()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;
    fn try_from(p: Partition) -> Result<Self> {
        Self::new(p.0)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::from_str(s)?.try_into()
    }
}

/// Partition whose parts are all odd.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OddPartition(Partition);

impl OddPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let p = Partition::new(parts)?;
        if p.0.iter().any(|x| x % 2 == 0) {
            return Err(Error::InvalidPartition(format!("{:?} has an even part", p.0)));
        }
        Ok(Self(p))
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn size(&self) -> u32 {
        self.0.size()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` padded with parts equal to 1 up to size `n`.
    pub fn padded_with_ones(&self, n: u32) -> Self {
        let mut parts = self.0 .0.clone();
        parts.extend(std::iter::repeat_n(1, n.saturating_sub(self.size()) as usize));
        Self(Partition(parts))
    }
}

impl TryFrom<Partition> for OddPartition {
    type Error = Error;
    fn try_from(p: Partition) -> Result<Self> {
        Self::new(p.0)
    }
}

impl fmt::Display for OddPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Modified Frobenius coordinates `[a_1, ..., a_d | b_1, ..., b_d]` with
/// `a_i = lambda_i - i + 1/2` and `b_i = lambda'_i - i + 1/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
}

impl FrobeniusCoords {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    fn validate(&self) -> Result<()> {
        if self.a.len() != self.b.len() {
            return Err(Error::InvalidFrobenius(format!(
                "arm and leg lists differ in length ({} vs {})",
                self.a.len(),
                self.b.len()
            )));
        }
        let two = BigInt::from(2);
        for x in self.a.iter().chain(&self.b) {
            if *x.denom() != two {
                return Err(Error::InvalidFrobenius(format!("{x} is not in Z + 1/2")));
            }
            if !x.is_positive() {
                return Err(Error::InvalidFrobenius(format!("{x} is not positive")));
            }
        }
        for seq in [&self.a, &self.b] {
            if seq.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidFrobenius(
                    "coordinates must be strictly decreasing".into(),
                ));
            }
        }
        Ok(())
    }
}

pub fn frobenius(lambda: &Partition) -> FrobeniusCoords {
    let conj = lambda.conjugate();
    let d = lambda.durfee();
    let half = rat(1, 2);
    let coord = |len: u32, i: usize| Rational::from_integer((len as i64 - i as i64 - 1).into()) + &half;
    FrobeniusCoords {
        a: (0..d).map(|i| coord(lambda.part(i), i)).collect(),
        b: (0..d).map(|i| coord(conj.part(i), i)).collect(),
    }
}

pub fn from_frobenius(c: &FrobeniusCoords) -> Result<Partition> {
    c.validate()?;
    let d = c.len();
    let half = rat(1, 2);
    let to_len = |x: &Rational, i: usize| -> u32 {
        let v = x + Rational::from_integer((i as i64).into()) + &half;
        v.to_integer().try_into().expect("positive length")
    };
    let rows: Vec<u32> = c.a.iter().enumerate().map(|(i, x)| to_len(x, i)).collect();
    let cols: Vec<u32> = c.b.iter().enumerate().map(|(i, x)| to_len(x, i)).collect();
    let mut parts = rows;
    let depth = cols.first().copied().unwrap_or(0);
    for row in (d as u32 + 1)..=depth {
        parts.push(cols.iter().filter(|&&c| c >= row).count() as u32);
    }
    let p = Partition::new(parts)
        .map_err(|e| Error::InvalidFrobenius(format!("coordinates do not form a diagram: {e}")))?;
    if frobenius(&p) != *c {
        return Err(Error::InvalidFrobenius(
            "coordinates do not form a diagram".into(),
        ));
    }
    Ok(p)
}

/// The double diagram `[l_1 + 1/2, ..., l_l + 1/2 | l_1 - 1/2, ..., l_l - 1/2]`.
pub fn double(lambda: &StrictPartition) -> Partition {
    let half = rat(1, 2);
    let parts = lambda.parts().iter().map(|&p| Rational::from_integer(p.into()));
    let coords = FrobeniusCoords {
        a: parts.clone().map(|p| p + &half).collect(),
        b: parts.map(|p| p - &half).collect(),
    };
    from_frobenius(&coords).expect("double of a strict partition is a diagram")
}

/// Local minima `x` and maxima `y` of the rotated diagram profile,
/// `x_1 < y_1 < x_2 < ... < y_{r-1} < x_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacingCoords {
    pub minima: Vec<i64>,
    pub maxima: Vec<i64>,
}

/// Minima are contents of addable boxes, maxima contents of removable boxes.
pub fn interlacing(mu: &Partition) -> InterlacingCoords {
    let parts = mu.parts();
    let l = parts.len();
    let mut minima = Vec::with_capacity(l + 1);
    let mut maxima = Vec::with_capacity(l);
    // addable box in row i+1 (1-based) at column parts[i]+1
    for i in 0..=l {
        let here = mu.part(i);
        if i == 0 || mu.part(i - 1) > here {
            minima.push(here as i64 - i as i64);
        }
        if i < l && here > mu.part(i + 1) {
            maxima.push(here as i64 - 1 - i as i64);
        }
    }
    minima.reverse();
    maxima.reverse();
    InterlacingCoords { minima, maxima }
}

/// `z_nu = prod_i i^{m_i} m_i!`.
pub fn z_factor(nu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (part, mult) in nu.multiplicities() {
        for k in 1..=mult {
            z *= BigInt::from(part) * BigInt::from(k);
        }
    }
    z
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionKind {
    All,
    Strict,
    Odd,
}

/// All partitions of `n` of the given kind in reverse lexicographic order.
pub fn enumerate(n: u32, kind: PartitionKind) -> Vec<Partition> {
    fn go(rest: u32, max: u32, kind: PartitionKind, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            if kind == PartitionKind::Odd && p % 2 == 0 {
                continue;
            }
            cur.push(p);
            let next_max = if kind == PartitionKind::Strict { p - 1 } else { p };
            go(rest - p, next_max, kind, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, kind, &mut Vec::new(), &mut out);
    out
}

pub fn strict_partitions(n: u32) -> Vec<StrictPartition> {
    enumerate(n, PartitionKind::Strict)
        .into_iter()
        .map(StrictPartition)
        .collect()
}

pub fn odd_partitions(n: u32) -> Vec<OddPartition> {
    enumerate(n, PartitionKind::Odd)
        .into_iter()
        .map(OddPartition)
        .collect()
}

/// `p_k(lambda) = sum_i lambda_i^k` for odd `k <= max_subscript`.
pub fn power_sums(lambda: &StrictPartition, max_subscript: u32) -> BTreeMap<u32, Rational> {
    (1..=max_subscript)
        .step_by(2)
        .map(|k| {
            let s: BigInt = lambda
                .parts()
                .iter()
                .map(|&p| num_traits::pow(BigInt::from(p), k as usize))
                .fold(BigInt::zero(), |a, b| a + b);
            (k, Rational::from_integer(s))
        })
        .collect()
}
