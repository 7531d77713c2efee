use super::scalar::{Coefficient, Scalar};
use crate::error::{Error, Result};

/// Truncated Laurent expansion at `z = infinity`:
/// `sum_{n = leading}^{order} c_n z^{-n} + O(z^{-order-1})`.
///
/// A negative `leading` exponent carries a polynomial part in `z`.
/// Every retained coefficient is exact; nothing past `z^{-order}` is kept.
/// Binary operations insist on equal truncation orders.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentTail<C: Coefficient> {
    leading: i64,
    coeffs: Vec<C>,
    order: i64,
    degree_cap: Option<u32>,
}

impl<C: Coefficient> LaurentTail<C> {
    /// Series from the coefficients of `z^{-leading}, z^{-leading-1}, ...`.
    /// Missing coefficients up to `order` are zero; extra ones are dropped.
    pub fn from_coeffs(leading: i64, mut coeffs: Vec<C>, order: i64) -> Self {
        let len = (order - leading + 1).max(0) as usize;
        coeffs.resize(len, C::zero_coeff());
        Self {
            leading,
            coeffs,
            order,
            degree_cap: None,
        }
    }

    pub fn zero(order: i64) -> Self {
        Self::from_coeffs(order + 1, Vec::new(), order)
    }

    pub fn one(order: i64) -> Self {
        Self::from_coeffs(0, vec![C::one_coeff()], order)
    }

    /// `c * z^{-n}`.
    pub fn monomial(c: C, n: i64, order: i64) -> Self {
        if n > order {
            return Self::zero(order);
        }
        Self::from_coeffs(n, vec![c], order)
    }

    /// Caps the grading degree of polynomial coefficients in this value and
    /// everything derived from it.
    pub fn with_degree_cap(mut self, cap: u32) -> Self {
        self.degree_cap = Some(cap);
        self.coeffs = self.coeffs.into_iter().map(|c| c.cap_degree(cap)).collect();
        self
    }

    pub fn degree_cap(&self) -> Option<u32> {
        self.degree_cap
    }

    pub fn leading_exponent(&self) -> i64 {
        self.leading
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of `z^{-n}`.
    pub fn coefficient(&self, n: i64) -> Result<C> {
        if n > self.order {
            return Err(Error::InsufficientTruncation {
                requested: n,
                order: self.order,
            });
        }
        if n < self.leading {
            return Ok(C::zero_coeff());
        }
        Ok(self.coeffs[(n - self.leading) as usize].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero_coeff)
    }

    /// Drops leading zero coefficients so that `leading` is the true valuation.
    pub fn normalized(mut self) -> Self {
        let skip = self.coeffs.iter().take_while(|c| c.is_zero_coeff()).count();
        self.coeffs.drain(..skip);
        self.leading += skip as i64;
        self
    }

    /// Forgets everything past `z^{-order}`.
    pub fn truncated(mut self, order: i64) -> Self {
        if order >= self.order {
            return self;
        }
        let len = (order - self.leading + 1).max(0) as usize;
        self.coeffs.truncate(len);
        self.order = order;
        self
    }

    /// Multiplies by `z^{-shift}`.
    pub fn shifted(mut self, shift: i64) -> Self {
        self.leading += shift;
        self.order += shift;
        self
    }

    fn combined_cap(&self, other: &Self) -> Option<u32> {
        match (self.degree_cap, other.degree_cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    fn check_orders(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Result<Self> {
        self.check_orders(other)?;
        let leading = self.leading.min(other.leading);
        let coeffs = (leading..=self.order)
            .map(|n| {
                let a = self.coefficient(n).expect("within order");
                let b = other.coefficient(n).expect("within order");
                f(&a, &b)
            })
            .collect();
        let mut out = Self::from_coeffs(leading, coeffs, self.order);
        out.degree_cap = self.combined_cap(other);
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, C::plus)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, C::minus)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(C::negated).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, s: &C::Scalar) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scaled(s)).collect(),
            ..self.clone()
        }
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn scale_by(&self, c: &C) -> Self {
        let cap = self.degree_cap;
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|x| apply_cap(x.times(c), cap))
                .collect(),
            ..self.clone()
        }
    }

    /// Product of two series with equal truncation order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        Ok(self.product(other))
    }

    /// Product of series whose truncation orders may differ. The result is
    /// known through `min(N_a + b_0, N_b + a_0)`, so a polynomial part of
    /// degree `d` in one factor costs `d` orders of the other.
    pub fn mul_aligned(&self, other: &Self) -> Result<Self> {
        Ok(self.product(other))
    }

    fn product(&self, other: &Self) -> Self {
        let cap = self.combined_cap(other);
        let order = (self.order + other.leading).min(other.order + self.leading);
        let leading = self.leading + other.leading;
        let len = (order - leading + 1).max(0) as usize;
        let mut coeffs = vec![C::zero_coeff(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_coeff() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if b.is_zero_coeff() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].plus(&apply_cap(a.times(b), cap));
            }
        }
        Self {
            leading,
            coeffs,
            order,
            degree_cap: cap,
        }
    }

    /// Non-negative integer power by repeated multiplication.
    pub fn pow(&self, exp: u32) -> Result<Self> {
        let mut acc = Self::one(self.order - self.leading);
        acc.degree_cap = self.degree_cap;
        for _ in 0..exp {
            acc = acc.product(self);
        }
        Ok(acc)
    }

    /// Integer power; negative exponents go through [`Self::inverse`].
    pub fn powi(&self, exp: i64) -> Result<Self> {
        if exp >= 0 {
            self.pow(exp as u32)
        } else {
            self.inverse()?.pow(exp.unsigned_abs() as u32)
        }
    }

    /// Multiplicative inverse; needs a unit as lowest-order coefficient.
    pub fn inverse(&self) -> Result<Self> {
        let a = self.clone().normalized();
        let v = a.leading;
        let lead = a.coeffs.first().ok_or(Error::NotInvertible)?;
        let lead_inv = lead.unit_inverse().ok_or(Error::NotInvertible)?;
        let order = a.order - 2 * v;
        let len = (order + v + 1).max(0) as usize;
        let mut out: Vec<C> = Vec::with_capacity(len);
        for n in 0..len {
            if n == 0 {
                out.push(lead_inv.clone());
                continue;
            }
            let mut acc = C::zero_coeff();
            for i in 1..=n.min(a.coeffs.len() - 1) {
                acc = acc.plus(&apply_cap(a.coeffs[i].times(&out[n - i]), a.degree_cap));
            }
            out.push(apply_cap(acc.times(&lead_inv).negated(), a.degree_cap));
        }
        Ok(Self {
            leading: -v,
            coeffs: out,
            order,
            degree_cap: a.degree_cap,
        })
    }

    /// `exp(self)`; requires the series to start at `z^{-1}` or later.
    pub fn exp(&self) -> Result<Self> {
        let t = self.clone().normalized();
        if t.leading < 1 {
            return Err(Error::DivergentExponential(t.leading));
        }
        let order = t.order;
        if order < 0 {
            return Ok(Self::zero(order));
        }
        let n_max = order as usize;
        let tc = |j: usize| -> C { t.coefficient(j as i64).expect("within order") };
        let mut e: Vec<C> = vec![C::one_coeff()];
        for n in 1..=n_max {
            let mut acc = C::zero_coeff();
            for j in (t.leading as usize)..=n {
                let tj = tc(j);
                if tj.is_zero_coeff() {
                    continue;
                }
                let term = tj
                    .times(&e[n - j])
                    .scaled(&<C::Scalar as Scalar>::of_int(j as i64));
                acc = acc.plus(&apply_cap(term, t.degree_cap));
            }
            e.push(acc.scaled(&<C::Scalar as Scalar>::ratio(1, n as i64)));
        }
        Ok(Self {
            leading: 0,
            coeffs: e,
            order,
            degree_cap: t.degree_cap,
        })
    }

    /// Re-expresses the coefficients in another ring.
    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> LaurentTail<D> {
        LaurentTail {
            leading: self.leading,
            coeffs: self.coeffs.iter().map(f).collect(),
            order: self.order,
            degree_cap: self.degree_cap,
        }
    }
}

fn apply_cap<C: Coefficient>(c: C, cap: Option<u32>) -> C {
    match cap {
        Some(d) => c.cap_degree(d),
        None => c,
    }
}

/// Expansion of `(z - c)^{-m}` at infinity through `z^{-order}`:
/// `sum_{i >= 0} binom(m + i - 1, i) c^i z^{-m-i}`.
pub fn expand_shifted_inverse_power<S: Scalar>(
    m: i64,
    c: &S,
    order: i64,
) -> Result<LaurentTail<S>> {
    if m <= 0 {
        return Err(Error::InvalidArgument(format!(
            "inverse power must be positive, got {m}"
        )));
    }
    let mut coeffs = Vec::new();
    let mut binom = S::one();
    let mut cpow = S::one();
    for i in 0..=(order - m).max(-1) {
        if i > 0 {
            // binom(m+i-1, i) = binom(m+i-2, i-1) * (m+i-1) / i
            binom = binom * S::of_int(m + i - 1) / S::of_int(i);
            cpow = cpow * c.clone();
        }
        coeffs.push(binom.clone() * cpow.clone());
    }
    Ok(LaurentTail::from_coeffs(m, coeffs, order))
}

/// Coefficient of `z^{-n}`, failing when the series is not known that far.
pub fn series_coefficient<C: Coefficient>(t: &LaurentTail<C>, n: i64) -> Result<C> {
    t.coefficient(n)
}
