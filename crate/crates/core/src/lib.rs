//! Exact intersection numbers of tautological classes on symmetric products
//! of curves, and the secant-plane counts built from them.
//!
//! Every computation is carried out over an exact scalar type. The numeric
//! core is generic over [`Scalar`]; the aliases below fix it to
//! arbitrary-precision rationals, which is what the engine and the front end
//! use throughout.

pub mod algebra;
pub mod engine;
pub mod error;
pub mod geometry;
pub mod secant;
pub mod symfunc;
pub mod verify;

pub use algebra::{
    binomial_general, factorial, fit_bivariate, parse_rational, rational_to_string, Algebra,
    BivariatePolynomial, PowerSeries, Ring, Scalar,
};

pub use engine::{Engine, UniversalIntegral};
pub use error::{Error, Result};
pub use geometry::{CohClass, ModelSpace};
pub use secant::{CountReport, SecantProblem, Warning};
pub use verify::{Report, Suite};
pub use symfunc::{ClassExpr, ClassKind, Generator, GradedClassVector, Monomial, Partition};

/// Arbitrary-precision exact rational; the scalar everywhere.
pub type Rational = num_rational::BigRational;
/// Truncated power series with rational coefficients.
pub type Series = PowerSeries<Rational>;
/// Polynomial in `(d, g)` with rational coefficients.
pub type Poly2 = BivariatePolynomial<Rational>;
/// Integrand expression with rational coefficients.
pub type Expr = ClassExpr<Rational>;
/// Cohomology class on a product of projective spaces, rational coefficients.
pub type Class = CohClass<Rational>;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `p/q`. Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}
