//! Spin Kerov polynomials in exact arithmetic.
//!
//! The crate expresses normalized spin characters `p_k` of the symmetric
//! groups as polynomials in spin free cumulants `r_2, r_4, ...` (half the even
//! free cumulants of the double diagram of a strict partition), and carries
//! the supporting machinery: odd power-sum polynomials, truncated Laurent
//! series, Kerov transition and Rayleigh measures, ordinary Kerov polynomials
//! by exact interpolation, and an independent Schur Q-function oracle for
//! spin character values.
//!
//! The algebraic core is generic over the scalar field; everything above it
//! works with the aliases defined here.

pub mod algebra;
pub mod characters;
pub mod error;
pub mod json;
pub mod kerov;
pub mod linalg;
pub mod measures;
pub mod oracle;
pub mod partitions;
pub mod spin;

pub use error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Element of the algebra generated by `p1, p3, p5, ...` over the rationals.
pub type Poly = algebra::OddPowerSumPolynomial<Rational>;

/// Laurent tail with rational coefficients.
pub type Series = algebra::LaurentTail<Rational>;

/// Laurent tail with odd power-sum polynomial coefficients.
pub type PolySeries = algebra::LaurentTail<Poly>;

pub use algebra::{Coefficient, LaurentTail, OddMonomial, OddPowerSumPolynomial, Scalar};
pub use kerov::{GeneratorFamily, KerovPolynomial};
pub use partitions::{OddPartition, Partition, StrictPartition};

/// Shorthand for the rational `num / den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
