//! Exact arithmetic substrate: scalars, odd power-sum polynomials and
//! truncated Laurent series at infinity.

mod poly;
mod scalar;
mod series;

pub use poly::{OddMonomial, OddPowerSumPolynomial};
pub use scalar::{Coefficient, Scalar};
pub use series::{expand_shifted_inverse_power, series_coefficient, LaurentTail};
