//! Transition and Rayleigh measures of diagrams, their moments and free
//! cumulants, and super power sums.

use num_traits::{One, Zero};

use crate::algebra::{expand_shifted_inverse_power, Coefficient, LaurentTail, Scalar};
use crate::error::{Error, Result};
use crate::partitions::{enumerate, interlacing, z_factor, FrobeniusCoords, Partition, PartitionKind};
use crate::{rat, Rational, Series};

/// Finitely supported signed measure, atoms sorted by location.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomicMeasure {
    pub atoms: Vec<(Rational, Rational)>,
}

impl AtomicMeasure {
    pub fn total_mass(&self) -> Rational {
        self.atoms.iter().map(|(_, w)| w.clone()).sum()
    }

    pub fn moment(&self, k: u32) -> Rational {
        self.atoms
            .iter()
            .map(|(x, w)| w * x.pow_u32(k))
            .sum()
    }
}

/// Moments `M_1, ..., M_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSequence(pub Vec<Rational>);

/// Free cumulants `R_1, ..., R_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CumulantSequence(pub Vec<Rational>);

impl MomentSequence {
    /// `M_k`, 1-based.
    pub fn get(&self, k: usize) -> &Rational {
        &self.0[k - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl CumulantSequence {
    /// `R_k`, 1-based.
    pub fn get(&self, k: usize) -> &Rational {
        &self.0[k - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// `+1` atoms at the minima, `-1` atoms at the maxima.
pub fn rayleigh_measure(mu: &Partition) -> AtomicMeasure {
    let c = interlacing(mu);
    let mut atoms: Vec<_> = c
        .minima
        .iter()
        .map(|&x| (int(x), Rational::one()))
        .chain(c.maxima.iter().map(|&y| (int(y), -Rational::one())))
        .collect();
    atoms.sort();
    AtomicMeasure { atoms }
}

/// Probability measure on the minima whose Cauchy transform is
/// `prod (z - y_j) / prod (z - x_i)`; weights are the residues at `x_i`.
pub fn transition_measure(mu: &Partition) -> AtomicMeasure {
    let c = interlacing(mu);
    let atoms = c
        .minima
        .iter()
        .map(|&x| {
            let num: i64 = c.maxima.iter().map(|&y| x - y).product();
            let den: i64 = c.minima.iter().filter(|&&o| o != x).map(|&o| x - o).product();
            (int(x), rat(num, den))
        })
        .collect();
    AtomicMeasure { atoms }
}

pub fn rayleigh_moments(mu: &Partition, n: usize) -> MomentSequence {
    let tau = rayleigh_measure(mu);
    MomentSequence((1..=n as u32).map(|k| tau.moment(k)).collect())
}

/// Transition-measure moments from Rayleigh moments by the exponential
/// formula `M_n = sum_{nu |- n} z_nu^{-1} prod_i M_{nu_i}[tau]`.
pub fn transition_moments(mu: &Partition, n: usize) -> MomentSequence {
    let tau = rayleigh_moments(mu, n);
    let values = (1..=n as u32)
        .map(|m| {
            enumerate(m, PartitionKind::All)
                .iter()
                .map(|nu| {
                    let prod: Rational = nu
                        .parts()
                        .iter()
                        .map(|&p| tau.get(p as usize).clone())
                        .product();
                    prod / Rational::from_integer(z_factor(nu))
                })
                .sum()
        })
        .collect();
    MomentSequence(values)
}

/// Cauchy transform `prod (z - y_j) / prod (z - x_i)` expanded through `z^{-order}`.
pub fn cauchy_transform(mu: &Partition, order: i64) -> Series {
    let c = interlacing(mu);
    // z^{-1} * prod (1 - y/z) * prod 1/(1 - x/z)
    let inner = order - 1;
    let mut acc = Series::one(inner);
    for &y in &c.maxima {
        let factor = Series::from_coeffs(0, vec![Rational::one(), -int(y)], inner);
        acc = acc.mul(&factor).expect("equal orders");
    }
    for &x in &c.minima {
        let factor = expand_shifted_inverse_power(1, &int(x), inner + 1)
            .expect("positive power")
            .shifted(-1);
        acc = acc.mul(&factor).expect("equal orders");
    }
    acc.shifted(1)
}

/// Reads `M_1, ..., M_n` off a Cauchy transform `sum_k M_k z^{-k-1}`.
pub fn moments_from_cauchy(g: &Series, n: usize) -> Result<MomentSequence> {
    (1..=n as i64)
        .map(|k| g.coefficient(k + 1))
        .collect::<Result<_>>()
        .map(MomentSequence)
}

// [z^n] (z M(z))^k for n <= len, as a table indexed [k][n].
fn shifted_moment_powers(moments: &[Rational], len: usize) -> Vec<Vec<Rational>> {
    // z M(z) = z + M_1 z^2 + ...
    let mut base = vec![Rational::zero(); len + 1];
    if len >= 1 {
        base[1] = Rational::one();
    }
    for (j, m) in moments.iter().enumerate() {
        if j + 2 <= len {
            base[j + 2] = m.clone();
        }
    }
    let mut powers = vec![vec![Rational::zero(); len + 1]];
    powers[0][0] = Rational::one();
    for k in 1..=len {
        let prev = &powers[k - 1];
        let mut next = vec![Rational::zero(); len + 1];
        for (i, a) in prev.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in base.iter().enumerate().take(len + 1 - i) {
                if !b.is_zero() {
                    next[i + j] += a * b;
                }
            }
        }
        powers.push(next);
    }
    powers
}

/// Free cumulants from moments via the functional equation `M(z) = C(z M(z))`
/// of the ordinary generating functions.
pub fn moments_to_cumulants(m: &MomentSequence) -> CumulantSequence {
    let n = m.len();
    let powers = shifted_moment_powers(&m.0, n);
    let mut r: Vec<Rational> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut v = m.get(k).clone();
        for (j, rj) in r.iter().enumerate() {
            v -= rj * &powers[j + 1][k];
        }
        r.push(v);
    }
    CumulantSequence(r)
}

pub fn cumulants_to_moments(r: &CumulantSequence) -> MomentSequence {
    let n = r.len();
    let mut m: Vec<Rational> = Vec::with_capacity(n);
    for k in 1..=n {
        let powers = shifted_moment_powers(&m, k);
        let mut v = r.get(k).clone();
        for j in 1..k {
            v += r.get(j) * &powers[j][k];
        }
        m.push(v);
    }
    MomentSequence(m)
}

/// `R_k = -(1/(k-1)) [z^{-1}] G(z)^{-(k-1)}` for a Cauchy transform `G`
/// known through at least `z^{-(k+1)}`.
pub fn free_cumulant_from_cauchy<C: Coefficient>(g: &LaurentTail<C>, k: u32) -> Result<C> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "cumulant extraction needs k >= 2, got {k}"
        )));
    }
    let inv = g.inverse()?;
    let power = inv.pow(k - 1)?;
    let c = power.coefficient(1)?;
    Ok(c.scaled(&<C::Scalar as Scalar>::ratio(-1, k as i64 - 1)))
}

/// Free cumulant `R_k` of the transition measure of `mu`, `k >= 2`.
pub fn biane_cumulant(mu: &Partition, k: u32) -> Result<Rational> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "free cumulant index must be at least 2, got {k}"
        )));
    }
    // G^{-(k-1)} starts at z^{k-1}; one extra term guards the extraction.
    let g = cauchy_transform(mu, k as i64 + 2);
    free_cumulant_from_cauchy(&g, k)
}

/// `R_2, ..., R_max` of the transition measure of `mu` from a single
/// expansion of `G^{-1}`; entry `j - 2` holds `R_j`.
pub fn free_cumulants(mu: &Partition, max: u32) -> Vec<Rational> {
    if max < 2 {
        return Vec::new();
    }
    let g = cauchy_transform(mu, max as i64 + 2);
    let inv = g.inverse().expect("Cauchy transform starts at 1/z");
    let mut power = inv.clone();
    let mut out = Vec::with_capacity(max as usize - 1);
    for k in 2..=max {
        if k > 2 {
            power = power.mul_aligned(&inv).expect("aligned orders");
        }
        let c = power.coefficient(1).expect("order chosen from max");
        out.push(c * rat(-1, k as i64 - 1));
    }
    out
}

/// `p_k^super = sum_i (a_i^k + (-1)^{k-1} b_i^k)`.
pub fn super_power_sum(c: &FrobeniusCoords, k: u32) -> Rational {
    let sign = if k % 2 == 1 { int(1) } else { int(-1) };
    c.a.iter()
        .zip(&c.b)
        .map(|(a, b)| a.pow_u32(k) + &sign * b.pow_u32(k))
        .sum()
}

/// Rayleigh moment `M_n[tau]` from super power sums, `n >= 2`:
/// `sum_j binom(n, 2j+1) 2^{-2j} p^super_{n-2j-1}`.
pub fn rayleigh_from_super(c: &FrobeniusCoords, n: u32) -> Result<Rational> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "super power sum formula needs n >= 2, got {n}"
        )));
    }
    let mut total = Rational::zero();
    for j in 0..=(n / 2 - 1) {
        let coeff = binomial(n, 2 * j + 1) / Rational::from_integer(num_bigint::BigInt::from(4).pow(j));
        total += coeff * super_power_sum(c, n - 2 * j - 1);
    }
    Ok(total)
}

/// `phi(z - shift) = prod_i (z - shift + b_i) / (z - shift - a_i)` through `z^{-order}`.
pub fn frobenius_phi_series(c: &FrobeniusCoords, shift: &Rational, order: i64) -> Series {
    let mut acc = Series::one(order);
    for (a, b) in c.a.iter().zip(&c.b) {
        let num = Series::from_coeffs(0, vec![Rational::one(), b - shift], order);
        let den = expand_shifted_inverse_power(1, &(a + shift), order + 1)
            .expect("positive power")
            .shifted(-1);
        acc = acc.mul(&num).and_then(|s| s.mul(&den)).expect("equal orders");
    }
    acc
}

pub(crate) fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = num_bigint::BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Rational::from_integer(acc)
}
