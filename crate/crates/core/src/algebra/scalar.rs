use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Scalar field the algebra is built over.
///
/// Every computation in this crate is instantiated with [`crate::Rational`];
/// the trait exists so that polynomial and series code does not hard-wire
/// the coefficient field. Any `num-traits` numeric type with negation
/// qualifies, including `f64` for quick experiments.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + Debug + FromPrimitive + Send + Sync + 'static
{
    fn of_int(n: i64) -> Self {
        <Self as FromPrimitive>::from_i64(n).expect("integer not representable in scalar type")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::of_int(num) / Self::of_int(den)
    }

    fn pow_u32(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    fn checked_recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

impl<T> Scalar for T where
    T: Num + Neg<Output = T> + Clone + Debug + FromPrimitive + Send + Sync + 'static
{
}

/// Ring elements usable as coefficients of a [`super::LaurentTail`].
///
/// Implemented for every [`Scalar`] and for polynomials over a scalar.
pub trait Coefficient: Clone + Debug + PartialEq + Send + Sync {
    type Scalar: Scalar;

    fn zero_coeff() -> Self;
    fn one_coeff() -> Self;
    fn is_zero_coeff(&self) -> bool;
    fn from_scalar(s: Self::Scalar) -> Self;

    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, s: &Self::Scalar) -> Self;

    /// Inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    /// Drops components of grading degree above `cap`. Identity on scalars.
    fn cap_degree(self, _cap: u32) -> Self {
        self
    }
}

impl<S: Scalar> Coefficient for S {
    type Scalar = S;

    fn zero_coeff() -> Self {
        S::zero()
    }
    fn one_coeff() -> Self {
        S::one()
    }
    fn is_zero_coeff(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn from_scalar(s: S) -> Self {
        s
    }
    fn plus(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }
    fn minus(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }
    fn times(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
    fn negated(&self) -> Self {
        -self.clone()
    }
    fn scaled(&self, s: &S) -> Self {
        self.clone() * s.clone()
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.checked_recip()
    }
}
