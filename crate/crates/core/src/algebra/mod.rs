//! Exact scalar arithmetic, truncated power series and bivariate fitting.

mod binomial;
mod bivariate;
mod scalar;
mod series;

pub use binomial::{binomial_general, factorial};
pub use bivariate::{fit_bivariate, BivariatePolynomial};
pub use scalar::{parse_rational, rational_to_string, Algebra, Ring, Scalar};
pub use series::PowerSeries;
