//! The generating function `Phi(z; lambda) = prod (z + l_i)/(z - l_i)` of a
//! strict partition and the quantities extracted from it: spin characters,
//! spin free cumulants and the cumulants of the symmetrized double.
//!
//! Every extraction is written once over a generic [`Coefficient`] ring and
//! runs in two modes: symbolically, with `log Phi` carried as odd power-sum
//! polynomials, or numerically at a fixed strict partition.

use num_traits::{One, Zero};

use crate::algebra::{expand_shifted_inverse_power, Coefficient, LaurentTail};
use crate::error::{Error, Result};
use crate::measures::binomial;
use crate::partitions::{power_sums, StrictPartition};
use crate::{rat, Poly, Rational};

/// Coefficients of `log Phi(z) = sum_j c_j z^{-(2j-1)}` with
/// `c_j = 2 p_{2j-1} / (2j-1)`; `coefficients[j-1]` holds `c_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiLogData<C: Coefficient> {
    pub coefficients: Vec<C>,
}

impl<C: Coefficient> PhiLogData<C> {
    pub fn max_index(&self) -> usize {
        self.coefficients.len()
    }
}

impl PhiLogData<Poly> {
    pub fn symbolic(max_index: usize) -> Self {
        Self {
            coefficients: (1..=max_index as u32)
                .map(|j| Poly::p(2 * j - 1).scale(&rat(2, 2 * j as i64 - 1)))
                .collect(),
        }
    }
}

impl PhiLogData<Rational> {
    pub fn numeric(lambda: &StrictPartition, max_index: usize) -> Self {
        let ps = power_sums(lambda, 2 * max_index as u32 - 1);
        Self {
            coefficients: (1..=max_index as u32)
                .map(|j| &ps[&(2 * j - 1)] * rat(2, 2 * j as i64 - 1))
                .collect(),
        }
    }
}

/// `(Phi(z - s1) / Phi(z - s2))^power` through `z^{-order}`, expanded as
/// `exp(power * (log Phi(z - s1) - log Phi(z - s2)))`.
pub fn phi_ratio_series<C: Coefficient<Scalar = Rational>>(
    s1: &Rational,
    s2: &Rational,
    power: i64,
    order: i64,
    data: &PhiLogData<C>,
    degree_cap: Option<u32>,
) -> Result<LaurentTail<C>> {
    let needed = ((order.max(0) + 1) / 2) as usize;
    if data.max_index() < needed {
        return Err(Error::InsufficientPhiData {
            needed,
            available: data.max_index(),
        });
    }
    let mut log = LaurentTail::<C>::zero(order);
    if let Some(cap) = degree_cap {
        log = log.with_degree_cap(cap);
    }
    if power == 0 || s1 == s2 {
        return log.exp();
    }
    for (idx, c) in data.coefficients.iter().take(needed).enumerate() {
        let m = 2 * idx as i64 + 1;
        let diff = expand_shifted_inverse_power(m, s1, order)?
            .sub(&expand_shifted_inverse_power(m, s2, order)?)?;
        let lifted = diff.map(|x| c.scaled(x));
        log = log.add(&lifted)?;
    }
    log.scale(&Rational::from_integer(power.into())).exp()
}

fn cap_for(degree: u32) -> Option<u32> {
    Some(degree)
}

/// `p_k(lambda) = [z^{-1}] (-1/(4k)) (2z - k) prod_{j=1}^{k-1} (z - j) * Phi(z)/Phi(z - k)`
/// in the ring of `data`.
pub fn spin_character_with<C: Coefficient<Scalar = Rational>>(
    k: u32,
    data: &PhiLogData<C>,
    degree_cap: Option<u32>,
) -> Result<C> {
    check_odd(k)?;
    let k_i = k as i64;
    // prefactor has degree k in z; one guard coefficient past z^{-(k+1)}
    let order = k_i + 2;
    let ratio = phi_ratio_series(&Rational::zero(), &Rational::from_integer(k_i.into()), 1, order, data, degree_cap)?;
    let prefactor = spin_prefactor(k);
    let leading = -(prefactor.len() as i64 - 1);
    let coeffs: Vec<C> = prefactor.into_iter().rev().map(C::from_scalar).collect();
    let pre = LaurentTail::from_coeffs(leading, coeffs, order);
    pre.mul(&ratio)?.coefficient(1)
}

/// Coefficients (ascending powers of `z`) of `(-1/(4k)) (2z - k) prod_{j<k} (z - j)`.
fn spin_prefactor(k: u32) -> Vec<Rational> {
    let mut poly = vec![Rational::from_integer((-(k as i64)).into()), Rational::from_integer(2.into())];
    for j in 1..k {
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * Rational::from_integer(j.into());
        }
        poly = next;
    }
    let scale = rat(-1, 4 * k as i64);
    poly.into_iter().map(|c| c * &scale).collect()
}

fn check_odd(k: u32) -> Result<()> {
    if k % 2 == 0 || k == 0 {
        return Err(Error::InvalidArgument(format!(
            "spin characters are indexed by odd positive integers, got {k}"
        )));
    }
    Ok(())
}

/// The spin character `p_k` as a polynomial in `p1, p3, ...`.
pub fn spin_character_poly(k: u32) -> Result<Poly> {
    spin_character_poly_capped(k, cap_for(k))
}

/// As [`spin_character_poly`] with an explicit degree cap on intermediate
/// series coefficients (`None` disables pruning).
pub fn spin_character_poly_capped(k: u32, cap: Option<u32>) -> Result<Poly> {
    check_odd(k)?;
    let data = PhiLogData::symbolic((k as usize + 3) / 2);
    spin_character_with(k, &data, cap)
}

/// `p_k(lambda)` evaluated directly from the parts of `lambda`.
pub fn spin_character_eval(k: u32, lambda: &StrictPartition) -> Result<Rational> {
    check_odd(k)?;
    let data = PhiLogData::numeric(lambda, (k as usize + 3) / 2);
    spin_character_with(k, &data, None)
}

/// `r_{2k} = -(1/(2(2k-1))) [z^{-2k}] (Phi(z)/Phi(z-1))^{2k-1}` in the ring of `data`.
pub fn spin_free_cumulant_with<C: Coefficient<Scalar = Rational>>(
    two_k: u32,
    data: &PhiLogData<C>,
    degree_cap: Option<u32>,
) -> Result<C> {
    if two_k == 0 || two_k % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "spin free cumulants are indexed by even positive integers, got {two_k}"
        )));
    }
    let power = two_k as i64 - 1;
    let order = two_k as i64 + 1;
    let series = phi_ratio_series(&Rational::zero(), &Rational::one(), power, order, data, degree_cap)?;
    let c = series.coefficient(two_k as i64)?;
    Ok(c.scaled(&rat(-1, 2 * power)))
}

pub fn spin_free_cumulant_poly(two_k: u32) -> Result<Poly> {
    spin_free_cumulant_poly_capped(two_k, two_k.checked_sub(1))
}

pub fn spin_free_cumulant_poly_capped(two_k: u32, cap: Option<u32>) -> Result<Poly> {
    let data = PhiLogData::symbolic(two_k as usize / 2 + 1);
    spin_free_cumulant_with(two_k, &data, cap)
}

pub fn spin_free_cumulant_eval(two_k: u32, lambda: &StrictPartition) -> Result<Rational> {
    let data = PhiLogData::numeric(lambda, two_k as usize / 2 + 1);
    spin_free_cumulant_with(two_k, &data, None)
}

/// Half the `k`-th free cumulant of the symmetrized double:
/// `-(1/(2(k-1))) [z^{-k}] (Phi(z + 1/2)/Phi(z - 1/2))^{k-1}`.
pub fn symmetrized_cumulant_with<C: Coefficient<Scalar = Rational>>(
    k: u32,
    data: &PhiLogData<C>,
    degree_cap: Option<u32>,
) -> Result<C> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "symmetrized cumulants need k >= 2, got {k}"
        )));
    }
    let power = k as i64 - 1;
    let order = k as i64 + 1;
    let series = phi_ratio_series(&rat(-1, 2), &rat(1, 2), power, order, data, degree_cap)?;
    let c = series.coefficient(k as i64)?;
    Ok(c.scaled(&rat(-1, 2 * power)))
}

pub fn symmetrized_cumulant_poly(k: u32) -> Result<Poly> {
    let data = PhiLogData::symbolic(k as usize / 2 + 1);
    symmetrized_cumulant_with(k, &data, k.checked_sub(1))
}

pub fn symmetrized_cumulant_eval(k: u32, lambda: &StrictPartition) -> Result<Rational> {
    let data = PhiLogData::numeric(lambda, k as usize / 2 + 1);
    symmetrized_cumulant_with(k, &data, None)
}

/// `p_n^super(D(lambda)) = sum_j binom(n, 2j+1) 2^{-(n-2j-2)} p_{2j+1}(lambda)`.
pub fn super_power_sum_double_poly(n: u32) -> Result<Poly> {
    if n == 0 {
        return Err(Error::InvalidArgument("super power sums start at n = 1".into()));
    }
    let mut out = Poly::zero();
    for j in 0..=((n - 1) / 2) {
        let e = n as i64 - 2 * j as i64 - 2;
        let two_pow = if e >= 0 {
            Rational::one() / Rational::from_integer(num_bigint::BigInt::from(2).pow(e as u32))
        } else {
            Rational::from_integer(num_bigint::BigInt::from(2).pow((-e) as u32))
        };
        out = out.add(&Poly::p(2 * j + 1).scale(&(binomial(n, 2 * j + 1) * two_pow)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::OddMonomial;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn poly(terms: &[(&[u32], Rational)]) -> Poly {
        Poly::from_terms(
            terms
                .iter()
                .map(|(subs, c)| (OddMonomial::from_subscripts(subs), c.clone())),
        )
    }

    fn int(n: i64) -> Rational {
        rat(n, 1)
    }

    #[test]
    fn ratio_trivial_cases() {
        let data = PhiLogData::numeric(&sp(&[2, 1]), 4);
        let one = phi_ratio_series(&int(0), &int(1), 0, 5, &data, None).unwrap();
        assert_eq!(one, LaurentTail::one(5));
        let same = phi_ratio_series(&int(2), &int(2), 3, 5, &data, None).unwrap();
        assert_eq!(same, LaurentTail::one(5));
    }

    #[test]
    fn ratio_numeric_example() {
        let data = PhiLogData::numeric(&sp(&[2, 1]), 2);
        let s = phi_ratio_series(&int(0), &int(1), 1, 2, &data, None).unwrap();
        assert_eq!(s.coefficient(0).unwrap(), int(1));
        assert_eq!(s.coefficient(1).unwrap(), int(0));
        assert_eq!(s.coefficient(2).unwrap(), int(-6));
    }

    #[test]
    fn ratio_needs_enough_data() {
        let data = PhiLogData::numeric(&sp(&[2, 1]), 1);
        assert!(matches!(
            phi_ratio_series(&int(0), &int(1), 1, 5, &data, None),
            Err(Error::InsufficientPhiData { .. })
        ));
    }

    #[test]
    fn low_spin_characters() {
        assert_eq!(spin_character_poly(1).unwrap(), Poly::p(1));
        let want3 = poly(&[(&[3], int(1)), (&[1, 1], int(-3)), (&[1], int(2))]);
        assert_eq!(spin_character_poly(3).unwrap(), want3);
        let want5 = poly(&[
            (&[5], int(1)),
            (&[3, 1], int(-10)),
            (&[3], rat(55, 3)),
            (&[1, 1, 1], rat(50, 3)),
            (&[1, 1], int(-50)),
            (&[1], int(24)),
        ]);
        assert_eq!(spin_character_poly(5).unwrap(), want5);
        assert!(spin_character_poly(4).is_err());
    }

    #[test]
    fn low_spin_free_cumulants() {
        assert_eq!(spin_free_cumulant_poly(2).unwrap(), Poly::p(1));
        let want4 = poly(&[(&[3], int(1)), (&[1, 1], int(-3)), (&[1], int(1))]);
        assert_eq!(spin_free_cumulant_poly(4).unwrap(), want4);
        assert!(spin_free_cumulant_poly(3).is_err());
    }

    #[test]
    fn symmetrized_examples() {
        assert_eq!(symmetrized_cumulant_poly(2).unwrap(), Poly::p(1));
        let want4 = poly(&[(&[3], int(1)), (&[1, 1], int(-3)), (&[1], rat(1, 4))]);
        assert_eq!(symmetrized_cumulant_poly(4).unwrap(), want4);
        assert!(symmetrized_cumulant_poly(3).unwrap().is_zero());
    }

    #[test]
    fn super_power_sums_of_doubles() {
        assert_eq!(super_power_sum_double_poly(1).unwrap(), Poly::p(1).scale(&int(2)));
        assert_eq!(super_power_sum_double_poly(2).unwrap(), Poly::p(1).scale(&int(2)));
        let want3 = Poly::p(3).scale(&int(2)).add(&Poly::p(1).scale(&rat(3, 2)));
        assert_eq!(super_power_sum_double_poly(3).unwrap(), want3);
    }

    #[test]
    fn spin_character_values() {
        assert_eq!(spin_character_eval(3, &sp(&[2, 1])).unwrap(), int(-12));
        assert_eq!(spin_character_eval(3, &sp(&[3])).unwrap(), int(6));
        assert_eq!(spin_character_eval(5, &sp(&[2, 1])).unwrap(), int(0));
    }

    #[test]
    fn spin_cumulant_value() {
        assert_eq!(spin_free_cumulant_eval(4, &sp(&[2, 1])).unwrap(), int(-15));
    }
}
