use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{fit_bivariate, rational_to_string};
use crate::error::{Error, Result};
use crate::geometry::eval_expr_on_union;
use crate::{rat, Expr, Poly2, Rational};

/// One evaluation on a disjoint union of lines.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplePoint {
    pub degrees: Vec<i64>,
    pub d: i64,
    pub g: i64,
    pub value: Rational,
}

impl SamplePoint {
    fn compute(expr: &Expr, k: u32, degrees: Vec<i64>) -> Result<Self> {
        let value = eval_expr_on_union(expr, &degrees, k)?;
        Ok(Self {
            d: degrees.iter().sum(),
            g: 1 - degrees.len() as i64,
            degrees,
            value,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "degrees": self.degrees,
            "d": self.d,
            "g": self.g,
            "value": rational_to_string(&self.value),
        })
    }
}

/// Sample grid used for a fit and the extra points it was checked on.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Witness {
    pub samples: Vec<SamplePoint>,
    pub held_out: Vec<SamplePoint>,
}

/// `∫_{C^{[k]}} expr` as a polynomial in the degree `d` and genus `g`.
#[derive(Debug, Clone, PartialEq)]
pub struct UniversalIntegral {
    expr: Expr,
    k: u32,
    polynomial: Poly2,
    degree_bound: u32,
    witness: Witness,
}

impl UniversalIntegral {
    pub(crate) fn from_parts(
        expr: Expr,
        k: u32,
        polynomial: Poly2,
        degree_bound: u32,
        witness: Witness,
    ) -> Self {
        Self {
            expr,
            k,
            polynomial,
            degree_bound,
            witness,
        }
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn polynomial(&self) -> &Poly2 {
        &self.polynomial
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn witness(&self) -> &Witness {
        &self.witness
    }

    pub fn eval(&self, d: i64, g: i64) -> Rational {
        self.polynomial.eval(&rat(d), &rat(g))
    }

    /// `("d^i*g^j", "p/q")` pairs, highest degree first.
    pub fn coefficients(&self) -> Vec<(String, String)> {
        let mut terms: Vec<_> = self.polynomial.terms().iter().collect();
        terms.sort_by(|a, b| {
            let (ia, ja) = *a.0;
            let (ib, jb) = *b.0;
            (ib + jb, ib).cmp(&(ia + ja, ia))
        });
        terms
            .into_iter()
            .map(|(&(i, j), c)| (term_label(i, j), rational_to_string(c)))
            .collect()
    }

    pub fn coefficient_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        for (label, c) in self.coefficients() {
            map.insert(label, Value::String(c));
        }
        Value::Object(map)
    }
}

/// `d^i*g^j` with zero powers omitted; `1` for the constant term.
pub fn term_label(i: u32, j: u32) -> String {
    let mut parts = Vec::new();
    if i > 0 {
        parts.push(format!("d^{i}"));
    }
    if j > 0 {
        parts.push(format!("g^{j}"));
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Inverse of [`term_label`].
pub fn parse_term_label(label: &str) -> Result<(u32, u32)> {
    let bad = |reason: &str| Error::Parse {
        input: label.to_string(),
        reason: reason.to_string(),
    };
    if label.trim() == "1" {
        return Ok((0, 0));
    }
    let (mut i, mut j) = (0, 0);
    for part in label.split('*') {
        let (var, exp) = part.trim().split_once('^').ok_or_else(|| bad("expected var^exp"))?;
        let exp: u32 = exp.parse().map_err(|_| bad("exponent is not an integer"))?;
        match var {
            "d" => i += exp,
            "g" => j += exp,
            _ => return Err(bad("unknown variable")),
        }
    }
    Ok((i, j))
}

/// Degree splits sampled for a fit of total degree `bound`: `m = 1..=bound+1`
/// lines, and for each `m` the totals `d = 0..=bound` split as
/// `(d - m + 1, 1, ..., 1)`.
pub fn sample_degrees(bound: u32) -> Vec<Vec<i64>> {
    let b = bound as i64;
    let mut out = Vec::new();
    for m in 1..=b + 1 {
        for d in 0..=b {
            let mut degrees = vec![1; m as usize];
            degrees[0] = d - m + 1;
            out.push(degrees);
        }
    }
    out
}

/// Verification splits outside the sample grid, with unequal and equal parts.
pub fn held_out_degrees(bound: u32) -> Vec<Vec<i64>> {
    let b = bound as i64;
    vec![
        vec![b + 1, b + 2],
        vec![b + 1; 3],
        vec![2, 3, -1, b + 2],
        vec![b + 4],
    ]
}

fn evaluate_all(expr: &Expr, k: u32, splits: Vec<Vec<i64>>) -> Result<Vec<SamplePoint>> {
    splits
        .into_par_iter()
        .map(|degrees| SamplePoint::compute(expr, k, degrees))
        .collect()
}

pub(crate) fn check_held_out(
    expr: &Expr,
    polynomial: &Poly2,
    held_out: &[SamplePoint],
) -> Result<()> {
    for p in held_out {
        let fitted = polynomial.eval(&rat(p.d), &rat(p.g));
        if fitted != p.value {
            return Err(Error::HeldOutMismatch {
                expr: expr.to_string(),
                degrees: p.degrees.clone(),
                fitted: rational_to_string(&fitted),
                direct: rational_to_string(&p.value),
            });
        }
    }
    Ok(())
}

fn fit_with_bound(expr: &Expr, k: u32, bound: u32) -> Result<UniversalIntegral> {
    let samples = evaluate_all(expr, k, sample_degrees(bound))?;
    let points: Vec<_> = samples
        .iter()
        .map(|p| ((rat(p.d), rat(p.g)), p.value.clone()))
        .collect();
    let polynomial = fit_bivariate(&points, bound)?;
    let held_out = evaluate_all(expr, k, held_out_degrees(bound))?;
    check_held_out(expr, &polynomial, &held_out)?;
    Ok(UniversalIntegral {
        expr: expr.clone(),
        k,
        polynomial,
        degree_bound: bound,
        witness: Witness { samples, held_out },
    })
}

/// Interpolates `∫_{C^{[k]}} expr` from unions of lines (genus `≤ 0`).
///
/// With no explicit bound the fit is attempted at total degree `k`, then once
/// more at `k + 2` if the samples or the held-out checks disagree.
pub fn universal_integral(expr: &Expr, k: u32, degree_bound: Option<u32>) -> Result<UniversalIntegral> {
    if !expr.has_weight(k) {
        return Err(Error::WeightMismatch {
            expected: k,
            found: expr.weight(),
        });
    }
    match degree_bound {
        Some(b) => fit_with_bound(expr, k, b),
        None => match fit_with_bound(expr, k, k) {
            Err(Error::Inconsistent { .. } | Error::HeldOutMismatch { .. }) => {
                fit_with_bound(expr, k, k + 2)
            }
            other => other,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    #[test]
    fn first_and_second_chern() {
        let c1 = universal_integral(&Expr::chern(1), 1, None).unwrap();
        assert_eq!(c1.coefficients(), vec![("d^1".to_string(), "1".to_string())]);
        let c2 = universal_integral(&Expr::chern(2), 2, None).unwrap();
        assert_eq!(
            c2.coefficients(),
            vec![("d^2".to_string(), "1/2".to_string()), ("d^1".to_string(), "-1/2".to_string())]
        );
        assert!(c2.witness().held_out.len() >= 3);
        assert_eq!(c2.degree_bound(), 2);
    }

    #[test]
    fn chern_character_matches_linear_formula() {
        for k in 1..=4u32 {
            let u = universal_integral(&Expr::ch(k), k, None).unwrap();
            let sign = if k % 2 == 1 { 1 } else { -1 };
            for (d, g) in [(0, 0), (5, 2), (-3, 4), (7, 1)] {
                let expected = ratio(sign * (d + (k as i64 - 1) * g - k as i64 + 1), 1)
                    / crate::factorial::<Rational>(k);
                assert_eq!(u.eval(d, g), expected);
            }
        }
    }

    #[test]
    fn labels_round_trip() {
        for (i, j) in [(0, 0), (2, 0), (0, 3), (1, 1)] {
            assert_eq!(parse_term_label(&term_label(i, j)).unwrap(), (i, j));
        }
        assert!(parse_term_label("x^2").is_err());
    }

    #[test]
    fn weight_mismatch() {
        assert!(matches!(
            universal_integral(&Expr::chern(2), 3, None),
            Err(Error::WeightMismatch { expected: 3, .. })
        ));
    }

    #[test]
    fn sample_design_is_a_tensor_grid() {
        let splits = sample_degrees(3);
        assert_eq!(splits.len(), 16);
        for s in &splits {
            assert!(s[1..].iter().all(|&x| x == 1));
        }
        let mut dg: Vec<(i64, i64)> = splits
            .iter()
            .map(|s| (s.iter().sum(), 1 - s.len() as i64))
            .collect();
        dg.sort();
        dg.dedup();
        assert_eq!(dg.len(), 16);
    }
}
