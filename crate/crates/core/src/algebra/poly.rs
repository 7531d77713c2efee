use std::collections::BTreeMap;
use std::fmt;

use super::scalar::{Coefficient, Scalar};
use crate::error::{Error, Result};

/// Exponent vector over the odd generators `p1, p3, p5, ...`.
///
/// Entry `i` is the exponent of `p_{2i+1}`; trailing zeros are trimmed.
/// The derived order compares the grading degree first and then the
/// exponents lexicographically starting from `p1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OddMonomial {
    degree: u32,
    exps: Vec<u32>,
}

impl OddMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        let degree = exps
            .iter()
            .enumerate()
            .map(|(i, &e)| (2 * i as u32 + 1) * e)
            .sum();
        Self { degree, exps }
    }

    /// `p_subscript^exp`; panics on an even subscript.
    pub fn generator(subscript: u32, exp: u32) -> Self {
        assert!(subscript % 2 == 1, "odd power sums only, got p{subscript}");
        let mut exps = vec![0; (subscript as usize - 1) / 2 + 1];
        exps[(subscript as usize - 1) / 2] = exp;
        Self::from_exponents(exps)
    }

    /// Builds the monomial `p_{s1} p_{s2} ...` from a list of odd subscripts.
    pub fn from_subscripts(subscripts: &[u32]) -> Self {
        let mut exps = Vec::new();
        for &s in subscripts {
            assert!(s % 2 == 1, "odd power sums only, got p{s}");
            let idx = (s as usize - 1) / 2;
            if exps.len() <= idx {
                exps.resize(idx + 1, 0);
            }
            exps[idx] += 1;
        }
        Self::from_exponents(exps)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, subscript: u32) -> u32 {
        if subscript % 2 == 0 {
            return 0;
        }
        self.exps
            .get((subscript as usize - 1) / 2)
            .copied()
            .unwrap_or(0)
    }

    /// `(subscript, exponent)` pairs with nonzero exponent, smallest subscript first.
    pub fn factors(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (2 * i as u32 + 1, e))
    }

    /// Subscripts repeated by multiplicity, largest first.
    pub fn subscripts(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (s, e) in self.factors() {
            out.extend(std::iter::repeat_n(s, e as usize));
        }
        out.reverse();
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.exps.len().max(other.exps.len());
        let exps = (0..n)
            .map(|i| self.exps.get(i).unwrap_or(&0) + other.exps.get(i).unwrap_or(&0))
            .collect();
        Self {
            degree: self.degree + other.degree,
            exps,
        }
    }
}

impl fmt::Display for OddMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (s, e) in self.factors().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "p{s}")?;
            } else {
                write!(f, "p{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Element of the algebra generated by the odd power sums `p1, p3, p5, ...`.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OddPowerSumPolynomial<S: Scalar> {
    terms: BTreeMap<OddMonomial, S>,
}

impl<S: Scalar> OddPowerSumPolynomial<S> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(OddMonomial::one(), c)
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn monomial(m: OddMonomial, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// The generator `p_subscript`.
    pub fn p(subscript: u32) -> Self {
        Self::monomial(OddMonomial::generator(subscript, 1), S::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (OddMonomial, S)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Grading degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(OddMonomial::degree)
    }

    pub fn coefficient(&self, m: &OddMonomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&OddMonomial, &S)> {
        self.terms.iter()
    }

    /// Largest odd subscript that occurs, if any.
    pub fn max_subscript(&self) -> Option<u32> {
        self.terms
            .keys()
            .filter_map(|m| m.factors().map(|(s, _)| s).max())
            .max()
    }

    pub fn add_term(&mut self, m: OddMonomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_capped(other, None)
    }

    /// Product with every monomial of degree above `cap` discarded.
    pub fn mul_capped(&self, other: &Self, cap: Option<u32>) -> Self {
        let mut out = Self::zero();
        let limit = cap.unwrap_or(u32::MAX);
        for (ma, ca) in &self.terms {
            if ma.degree() > limit {
                break;
            }
            for (mb, cb) in &other.terms {
                if ma.degree() + mb.degree() > limit {
                    break;
                }
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Drops all monomials of grading degree greater than `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous component of the given degree.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes values for the generators, keyed by odd subscript.
    pub fn eval(&self, values: &BTreeMap<u32, S>) -> Result<S> {
        let mut total = S::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (s, e) in m.factors() {
                let v = values.get(&s).ok_or(Error::MissingGenerator(s))?;
                term = term * v.pow_u32(e);
            }
            total = total + term;
        }
        Ok(total)
    }
}

impl<S: Scalar + fmt::Display + PartialOrd> fmt::Display for OddPowerSumPolynomial<S> {
    /// Highest degree first, e.g. `p3 - 3 p1^2 + 2 p1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = *c < S::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs} {m}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> Coefficient for OddPowerSumPolynomial<S> {
    type Scalar = S;

    fn zero_coeff() -> Self {
        OddPowerSumPolynomial::zero()
    }
    fn one_coeff() -> Self {
        OddPowerSumPolynomial::one()
    }
    fn is_zero_coeff(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_scalar(s: S) -> Self {
        OddPowerSumPolynomial::constant(s)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, s: &S) -> Self {
        self.scale(s)
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && m.is_one() => {
                c.checked_recip().map(Self::constant)
            }
            _ => None,
        }
    }
    fn cap_degree(self, cap: u32) -> Self {
        if self.degree().is_some_and(|d| d > cap) {
            self.truncate(cap)
        } else {
            self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = OddPowerSumPolynomial<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn spin3() -> P {
        P::p(3)
            .sub(&P::p(1).mul(&P::p(1)).scale(&q(3, 1)))
            .add(&P::p(1).scale(&q(2, 1)))
    }

    #[test]
    fn square_of_p1() {
        let sq = P::p(1).mul(&P::p(1));
        assert_eq!(sq.degree(), Some(2));
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.coefficient(&OddMonomial::generator(1, 2)), q(1, 1));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p1sq = P::p(1).mul(&P::p(1)).scale(&q(3, 1));
        let a = P::p(3).sub(&p1sq);
        assert_eq!(a.add(&p1sq), P::p(3));
        assert_eq!(a.sub(&a).len(), 0);
    }

    #[test]
    fn product_with_p1() {
        let got = spin3().mul(&P::p(1));
        let p1 = P::p(1);
        let want = P::p(3)
            .mul(&p1)
            .sub(&p1.pow(3).scale(&q(3, 1)))
            .add(&p1.pow(2).scale(&q(2, 1)));
        assert_eq!(got, want);
        assert_eq!(got.len(), 3);
    }

    #[test]
    fn truncation() {
        let f = P::p(3).add(&P::p(1).pow(3)).add(&P::p(1));
        assert_eq!(f.truncate(2), P::p(1));
        assert_eq!(f.truncate(f.degree().unwrap()), f);
        let g = P::p(5).sub(&P::p(3).mul(&P::p(1)).scale(&q(10, 1)));
        assert!(g.truncate(3).is_zero());
    }

    #[test]
    fn evaluation() {
        let mut vals = BTreeMap::new();
        vals.insert(1, q(3, 1));
        assert_eq!(P::p(1).eval(&vals).unwrap(), q(3, 1));
        vals.insert(3, q(9, 1));
        assert_eq!(spin3().eval(&vals).unwrap(), q(-12, 1));
        let mut small = BTreeMap::new();
        small.insert(1, q(2, 1));
        small.insert(3, q(8, 1));
        assert_eq!(spin3().eval(&small).unwrap(), q(0, 1));
    }

    #[test]
    fn evaluation_reports_missing_generator() {
        let mut vals = BTreeMap::new();
        vals.insert(1, q(3, 1));
        assert_eq!(spin3().eval(&vals), Err(Error::MissingGenerator(3)));
    }

    #[test]
    fn monomial_order_is_graded_then_lex() {
        let p3 = OddMonomial::generator(3, 1);
        let p1cubed = OddMonomial::generator(1, 3);
        let p1 = OddMonomial::generator(1, 1);
        assert!(p1 < p3);
        // same degree: exponent of p1 decides
        assert!(p3 < p1cubed);
    }

    #[test]
    fn display_descends_in_degree() {
        assert_eq!(spin3().to_string(), "p3 - 3 p1^2 + 2 p1");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn generic_over_f64() {
        let f = OddPowerSumPolynomial::<f64>::p(1).scale(&2.0).add(&OddPowerSumPolynomial::p(3));
        let mut vals = BTreeMap::new();
        vals.insert(1, 1.5);
        vals.insert(3, 2.0);
        assert_eq!(f.eval(&vals).unwrap(), 5.0);
    }
}
