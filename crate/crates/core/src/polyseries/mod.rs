//! Exact polynomials and truncated formal power series.
//!
//! [`DensePoly`] and [`LaurentPoly`] are the brute-force expansion oracles
//! (powers of `1 + x + x^m` and `1 + x + 1/x`); [`TruncatedSeries`] carries
//! generating functions to an explicit truncation order.

mod poly;
mod series;

pub use poly::{central_coeff, laurent_trinomial_coeff, DensePoly, LaurentPoly};
pub use series::TruncatedSeries;
