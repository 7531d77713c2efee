//! Spin character values from Schur Q-functions written in odd power sums.
//!
//! `p_rho = sum_lambda X^lambda_rho P_lambda` with `P_lambda = 2^{-len} Q_lambda`
//! is solved exactly in each homogeneous component. Nothing here goes through
//! Laurent series or cumulants, so the table is an independent check on the
//! spin character polynomials.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::OddMonomial;
use crate::error::{Error, Result};
use crate::linalg::solve_exact;
use crate::partitions::{odd_partitions, strict_partitions, OddPartition, StrictPartition};
use crate::{Poly, Rational};

/// `q_0, ..., q_max` from `sum_r q_r t^r = exp(2 sum_{k odd} p_k t^k / k)`.
pub fn q_polynomials(max_r: u32) -> Vec<Poly> {
    let n = max_r as usize;
    // r q_r = sum_{k odd, k <= r} 2 p_k q_{r-k}
    let mut q = vec![Poly::one()];
    for r in 1..=n {
        let mut acc = Poly::zero();
        for k in (1..=r).step_by(2) {
            acc = acc.add(&Poly::p(k as u32).mul(&q[r - k]).scale(&Rational::from_integer(2.into())));
        }
        q.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(r))));
    }
    q
}

/// Builds and caches `Q_lambda` for strict partitions up to a fixed size.
pub struct QFunctions {
    q: Vec<Poly>,
    pairs: HashMap<(u32, u32), Poly>,
    pfaffians: HashMap<Vec<u32>, Poly>,
}

impl QFunctions {
    pub fn new(max_size: u32) -> Self {
        Self {
            q: q_polynomials(max_size),
            pairs: HashMap::new(),
            pfaffians: HashMap::new(),
        }
    }

    fn q(&self, r: u32) -> Result<&Poly> {
        self.q.get(r as usize).ok_or_else(|| {
            Error::InvalidArgument(format!("Q-function of size {r} exceeds the prepared range"))
        })
    }

    /// `Q_{(a,b)}` for `a > b >= 0`.
    pub fn pair(&mut self, a: u32, b: u32) -> Result<Poly> {
        if let Some(p) = self.pairs.get(&(a, b)) {
            return Ok(p.clone());
        }
        let mut out = self.q(a)?.mul(self.q(b)?);
        let two = Rational::from_integer(2.into());
        for i in 1..=b {
            let term = self.q(a + i)?.mul(self.q(b - i)?).scale(&two);
            out = if i % 2 == 1 { out.sub(&term) } else { out.add(&term) };
        }
        self.pairs.insert((a, b), out.clone());
        Ok(out)
    }

    /// `Q_lambda` as the Pfaffian of the `Q_{(lambda_i, lambda_j)}`, padding
    /// with a zero part when `lambda` has odd length.
    pub fn schur_q(&mut self, lambda: &StrictPartition) -> Result<Poly> {
        let mut parts = lambda.parts().to_vec();
        if parts.len() % 2 == 1 {
            parts.push(0);
        }
        self.pfaffian(&parts)
    }

    /// Pfaffian of `Q_{(parts_i, parts_j)}` for strictly decreasing `parts` of
    /// even length, the last part possibly zero.
    pub fn pfaffian(&mut self, parts: &[u32]) -> Result<Poly> {
        if parts.is_empty() {
            return Ok(Poly::one());
        }
        if parts.len() % 2 == 1 {
            return Err(Error::InvalidArgument("Pfaffian needs an even number of parts".into()));
        }
        if let Some(p) = self.pfaffians.get(parts) {
            return Ok(p.clone());
        }
        let mut out = Poly::zero();
        for j in 1..parts.len() {
            let entry = self.pair(parts[0], parts[j])?;
            let minor: Vec<u32> = parts[1..]
                .iter()
                .enumerate()
                .filter(|&(i, _)| i + 1 != j)
                .map(|(_, &p)| p)
                .collect();
            let term = entry.mul(&self.pfaffian(&minor)?);
            // expansion along the first row: sign (-1)^{j+1} for 0-based j
            out = if j % 2 == 1 { out.add(&term) } else { out.sub(&term) };
        }
        self.pfaffians.insert(parts.to_vec(), out.clone());
        Ok(out)
    }
}

/// `Q_lambda` in odd power sums.
pub fn schur_q(lambda: &StrictPartition) -> Result<Poly> {
    QFunctions::new(lambda.size()).schur_q(lambda)
}

/// `Q_lambda` for every strict `lambda` of size `n`.
#[derive(Clone, Debug)]
pub struct QFunctionTable {
    pub n: u32,
    pub entries: BTreeMap<StrictPartition, Poly>,
}

impl QFunctionTable {
    pub fn new(n: u32) -> Result<Self> {
        let mut qf = QFunctions::new(n);
        let entries = strict_partitions(n)
            .into_iter()
            .map(|l| qf.schur_q(&l).map(|q| (l, q)))
            .collect::<Result<_>>()?;
        Ok(Self { n, entries })
    }

    /// `P_lambda = 2^{-len(lambda)} Q_lambda`.
    pub fn schur_p(&self, lambda: &StrictPartition) -> Option<Poly> {
        let scale = Rational::new(BigInt::one(), BigInt::from(2).pow(lambda.len() as u32));
        self.entries.get(lambda).map(|q| q.scale(&scale))
    }
}

/// `X^lambda_rho` for all strict `lambda` and odd `rho` of size `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinCharacterTable {
    pub n: u32,
    pub values: BTreeMap<(StrictPartition, OddPartition), BigInt>,
    /// `g^lambda = X^lambda_{(1^n)}`.
    pub dimensions: BTreeMap<StrictPartition, BigInt>,
}

fn odd_monomial(rho: &OddPartition) -> OddMonomial {
    OddMonomial::from_subscripts(rho.parts())
}

/// Solves `p_rho = sum X^lambda_rho P_lambda` in the degree-`n` component.
pub fn character_table(n: u32) -> Result<SpinCharacterTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("character table needs n >= 1".into()));
    }
    let table = QFunctionTable::new(n)?;
    let lambdas = strict_partitions(n);
    let rhos = odd_partitions(n);
    if lambdas.len() != rhos.len() {
        return Err(Error::Internal(format!(
            "{} strict but {} odd partitions of {n}",
            lambdas.len(),
            rhos.len()
        )));
    }
    let p_functions: Vec<Poly> = lambdas
        .iter()
        .map(|l| table.schur_p(l).expect("table covers every strict partition"))
        .collect();
    // rows: coefficient of p_sigma; columns: P_lambda
    let matrix: Vec<Vec<Rational>> = rhos
        .iter()
        .map(|sigma| {
            let m = odd_monomial(sigma);
            p_functions.iter().map(|p| p.coefficient(&m)).collect()
        })
        .collect();
    let mut values = BTreeMap::new();
    for rho in &rhos {
        let rhs: Vec<Rational> = rhos
            .iter()
            .map(|sigma| if sigma == rho { Rational::one() } else { Rational::zero() })
            .collect();
        let x = solve_exact(&matrix, &rhs)?;
        for (lambda, v) in lambdas.iter().zip(x) {
            if !v.is_integer() {
                return Err(Error::Internal(format!(
                    "non-integer spin character {v} at lambda = {lambda}, rho = {rho}"
                )));
            }
            values.insert((lambda.clone(), rho.clone()), v.to_integer());
        }
    }
    let ones = OddPartition::new(vec![1; n as usize])?;
    let dimensions = lambdas
        .iter()
        .map(|l| (l.clone(), values[&(l.clone(), ones.clone())].clone()))
        .collect();
    Ok(SpinCharacterTable {
        n,
        values,
        dimensions,
    })
}

impl SpinCharacterTable {
    pub fn value(&self, lambda: &StrictPartition, rho: &OddPartition) -> Option<&BigInt> {
        self.values.get(&(lambda.clone(), rho.clone()))
    }

    /// `n(n-1)...(n-k+1) X^lambda_{rho + (1^{n-k})} / g^lambda`, `k = |rho|`.
    pub fn normalized_character(&self, rho: &OddPartition, lambda: &StrictPartition) -> Result<Rational> {
        let n = lambda.size();
        if n != self.n {
            return Err(Error::InvalidArgument(format!(
                "table is for size {}, partition has size {n}",
                self.n
            )));
        }
        let k = rho.size();
        if k > n {
            return Ok(Rational::zero());
        }
        let full = rho.padded_with_ones(n);
        let x = self
            .value(lambda, &full)
            .ok_or_else(|| Error::Internal(format!("missing table entry {lambda} / {full}")))?;
        let falling: BigInt = (0..k).map(|i| BigInt::from(n - i)).product();
        Ok(Rational::new(falling * x, self.dimensions[lambda].clone()))
    }
}

/// `p_rho(lambda)` from the character table of size `|lambda|`.
pub fn normalized_character(rho: &OddPartition, lambda: &StrictPartition) -> Result<Rational> {
    if lambda.size() == 0 {
        return Ok(if rho.size() == 0 { Rational::one() } else { Rational::zero() });
    }
    if rho.size() > lambda.size() {
        return Ok(Rational::zero());
    }
    character_table(lambda.size())?.normalized_character(rho, lambda)
}
