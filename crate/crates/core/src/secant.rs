//! Secant-plane counts: problem validation, the `f = 1` and `f = 2`
//! integrands, and their evaluation through independent routes.

use std::fmt;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::rational_to_string;
use crate::engine::{castelnuovo_count, Engine};
use crate::error::{Error, Result};
use crate::symfunc::{delta_determinant, dualize, square_expansion, sshift_expansion, ClassKind, GradedClassVector};
use crate::{Expr, Rational};

/// Count `e`-secant `(e - f - 1)`-planes to a genus-`g` curve embedded by a
/// complete linear series of degree `d` in `P^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SecantProblem {
    pub e: i64,
    pub f: i64,
    pub d: i64,
    pub g: i64,
    pub r: i64,
}

/// Conditions under which a count is still computed but may be only virtual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Warning {
    /// `d ≠ g + r`: the series of degree `d` is not complete and nonspecial in `P^r`.
    IncompleteSeries { d: i64, g: i64, r: i64 },
    /// `r < 3`: below the dimension range of the secant-plane setting.
    LowDimension { r: i64 },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::IncompleteSeries { d, g, r } => write!(
                f,
                "d={d} differs from g+r={}; count is virtual",
                g + r
            ),
            Warning::LowDimension { r } => write!(f, "r={r} is below 3; count is virtual"),
        }
    }
}

/// `e - f(r + 1 - e + f)`.
pub fn expected_dimension(e: i64, f: i64, r: i64) -> i64 {
    e - f * (r + 1 - e + f)
}

impl SecantProblem {
    pub fn expected_dimension(&self) -> i64 {
        expected_dimension(self.e, self.f, self.r)
    }
}

/// Builds the problem with the dimension `r` that makes the expected
/// dimension zero.
pub fn validate_problem(e: i64, f: i64, d: i64, g: i64) -> Result<(SecantProblem, Vec<Warning>)> {
    let r = match f {
        1 => {
            if e < 2 {
                return Err(Error::InvalidProblem(format!("e must be at least 2, got {e}")));
            }
            2 * e - 2
        }
        2 => {
            if e % 2 != 0 {
                return Err(Error::InvalidProblem(format!("e must be even for f=2, got {e}")));
            }
            if e < 4 {
                return Err(Error::InvalidProblem(format!("e must be at least 4 for f=2, got {e}")));
            }
            3 * e / 2 - 3
        }
        _ => return Err(Error::InvalidProblem(format!("f must be 1 or 2, got {f}"))),
    };
    if g < 0 {
        return Err(Error::InvalidProblem(format!("g must be non-negative, got {g}")));
    }
    let problem = SecantProblem { e, f, d, g, r };
    let mut warnings = Vec::new();
    if d != g + r {
        warnings.push(Warning::IncompleteSeries { d, g, r });
    }
    if r < 3 {
        warnings.push(Warning::LowDimension { r });
    }
    Ok((problem, warnings))
}

fn dual_segre_symbols(cap: u32) -> GradedClassVector<Expr> {
    let s = GradedClassVector::with_unit(ClassKind::Segre, (1..=cap).map(Expr::segre).collect());
    dualize(&s)
}

/// `s_e` of the dual tautological bundle.
pub fn f1_class_expression(e: u32) -> Expr {
    dual_segre_symbols(e).get(e as usize)
}

/// `Δ_{e/2}^{(2)}` of the dual Segre classes, i.e.
/// `s_{e/2}^2 - s_{e/2-1} s_{e/2+1}` (the signs from dualising cancel).
pub fn f2_class_expression(e: u32) -> Result<Expr> {
    if !e.is_multiple_of(2) || e < 2 {
        return Err(Error::InvalidProblem(format!("e must be even for f=2, got {e}")));
    }
    let n = e / 2;
    delta_determinant(2, n as usize, &dual_segre_symbols(n + 1))
}

/// The same integrand written in Chern characters: `(h_n)^2 - h_{n-1} h_{n+1}`.
pub fn f2_ch_expression(e: u32) -> Result<Expr> {
    if !e.is_multiple_of(2) || e < 2 {
        return Err(Error::InvalidProblem(format!("e must be even for f=2, got {e}")));
    }
    let n = e / 2;
    Ok(square_expansion(n) - sshift_expansion(n))
}

fn mismatch(what: String, values: &[(&str, &Rational)]) -> Error {
    let detail = values
        .iter()
        .map(|(name, v)| format!("{name}={}", rational_to_string(v)))
        .collect::<Vec<_>>()
        .join(", ");
    Error::RouteMismatch { what, detail }
}

/// Value of one computation route.
#[derive(Debug, Clone, PartialEq)]
pub struct Route {
    pub name: &'static str,
    pub value: Rational,
}

/// `f = 1`: the engine integral of `s_e` of the dual, and the closed sum.
pub fn count_f1_routes(engine: &Engine, e: i64, d: i64, g: i64) -> Result<Vec<Route>> {
    let k = e as u32;
    let integral = engine.integral(&f1_class_expression(k), k, d, g)?;
    Ok(vec![
        Route {
            name: "segre-integral",
            value: integral,
        },
        Route {
            name: "castelnuovo-sum",
            value: castelnuovo_count(e, d, g),
        },
    ])
}

/// `f = 2`: the determinant integrand as one universal integral, and its
/// Chern-character expansion integrated monomial by monomial.
pub fn count_f2_routes(engine: &Engine, e: i64, d: i64, g: i64) -> Result<Vec<Route>> {
    let k = e as u32;
    let det = engine.integral(&f2_class_expression(k)?, k, d, g)?;
    let expansion = f2_ch_expression(k)?;
    let terms: Vec<_> = expansion.terms().iter().collect();
    let parts = terms
        .into_par_iter()
        .map(|(m, c)| {
            let monomial = Expr::term(m.clone(), Rational::one());
            Ok(engine.integral(&monomial, k, d, g)? * c)
        })
        .collect::<Result<Vec<Rational>>>()?;
    let ch_route = parts.into_iter().sum();
    Ok(vec![
        Route {
            name: "determinant",
            value: det,
        },
        Route {
            name: "ch-expansion",
            value: ch_route,
        },
    ])
}

fn agree(what: String, routes: &[Route]) -> Result<Rational> {
    let first = &routes[0].value;
    if routes.iter().any(|r| &r.value != first) {
        let values: Vec<_> = routes.iter().map(|r| (r.name, &r.value)).collect();
        return Err(mismatch(what, &values));
    }
    Ok(first.clone())
}

pub fn count_f1(engine: &Engine, e: i64, d: i64, g: i64) -> Result<Rational> {
    agree(format!("f=1 e={e} d={d} g={g}"), &count_f1_routes(engine, e, d, g)?)
}

pub fn count_f2(engine: &Engine, e: i64, d: i64, g: i64) -> Result<Rational> {
    agree(format!("f=2 e={e} d={d} g={g}"), &count_f2_routes(engine, e, d, g)?)
}

/// A finished count with everything the front end reports.
#[derive(Debug, Clone, PartialEq)]
pub struct CountReport {
    pub problem: SecantProblem,
    pub expected_dim: i64,
    pub count: Rational,
    pub routes: Vec<Route>,
    pub warnings: Vec<Warning>,
}

/// Validates, computes every route, and requires agreement and integrality.
pub fn compute(engine: &Engine, e: i64, f: i64, d: i64, g: i64) -> Result<CountReport> {
    let (problem, warnings) = validate_problem(e, f, d, g)?;
    let routes = match f {
        1 => count_f1_routes(engine, e, d, g)?,
        _ => count_f2_routes(engine, e, d, g)?,
    };
    let count = agree(format!("f={f} e={e} d={d} g={g}"), &routes)?;
    if !count.is_integer() {
        return Err(Error::NonIntegral {
            value: rational_to_string(&count),
        });
    }
    Ok(CountReport {
        expected_dim: problem.expected_dimension(),
        problem,
        count,
        routes,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn expected_dimensions() {
        assert_eq!(expected_dimension(4, 2, 3), 0);
        assert_eq!(expected_dimension(6, 2, 6), 0);
        for e in 2..10 {
            assert_eq!(expected_dimension(e, 1, 2 * e - 2), 0);
        }
    }

    #[test]
    fn validation() {
        let (p, w) = validate_problem(4, 2, 6, 0).unwrap();
        assert_eq!(p.r, 3);
        assert_eq!(w, vec![Warning::IncompleteSeries { d: 6, g: 0, r: 3 }]);
        assert!(validate_problem(4, 2, 5, 2).unwrap().1.is_empty());
        let err = validate_problem(5, 2, 7, 0).unwrap_err();
        assert!(err.to_string().contains("e must be even for f=2"));
        assert!(validate_problem(4, 3, 7, 0).is_err());
        let (_, w) = validate_problem(2, 1, 2, 0).unwrap();
        assert_eq!(w, vec![Warning::LowDimension { r: 2 }]);
    }

    #[test]
    fn integrands() {
        assert_eq!(f2_class_expression(4).unwrap(), Expr::parse("s2^2 - s1*s3").unwrap());
        assert_eq!(f2_class_expression(6).unwrap(), Expr::parse("s3^2 - s2*s4").unwrap());
        for e in [4, 6, 8] {
            let x = f2_class_expression(e).unwrap();
            assert_eq!(x.dualized(), x);
        }
        assert!(f2_class_expression(5).is_err());
        assert_eq!(f1_class_expression(3), Expr::parse("-s3").unwrap());
    }

    #[test]
    fn small_counts() {
        let engine = Engine::new();
        assert_eq!(count_f2(&engine, 4, 6, 0).unwrap(), rat(6));
        assert_eq!(count_f2(&engine, 4, 4, 0).unwrap(), rat(0));
        assert_eq!(count_f1(&engine, 3, 6, 0).unwrap(), rat(4));
        assert_eq!(count_f1(&engine, 2, 4, 0).unwrap(), rat(3));
    }
}
