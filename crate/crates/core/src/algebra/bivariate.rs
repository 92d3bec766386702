use std::collections::BTreeMap;

use super::Scalar;
use crate::error::{Error, Result};

/// `sum c_ij d^i g^j` with `i + j <= max_total_degree`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariatePolynomial<S> {
    coeffs: BTreeMap<(u32, u32), S>,
    max_total_degree: u32,
}

impl<S: Scalar> BivariatePolynomial<S> {
    pub fn zero(max_total_degree: u32) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            max_total_degree,
        }
    }

    /// Builds from `((i, j), c)` pairs, summing repeats. Panics if a term exceeds the degree bound.
    pub fn from_terms(
        max_total_degree: u32,
        terms: impl IntoIterator<Item = ((u32, u32), S)>,
    ) -> Self {
        let mut p = Self::zero(max_total_degree);
        for ((i, j), c) in terms {
            assert!(i + j <= max_total_degree, "term d^{i} g^{j} exceeds degree bound");
            let entry = p.coeffs.entry((i, j)).or_insert_with(S::zero);
            *entry += &c;
        }
        p.coeffs.retain(|_, c| !c.is_zero());
        p
    }

    pub fn max_total_degree(&self) -> u32 {
        self.max_total_degree
    }

    /// Actual total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(i, j)| i + j).max()
    }

    pub fn coeff(&self, i: u32, j: u32) -> S {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(S::zero)
    }

    /// Nonzero terms keyed by `(deg_d, deg_g)`.
    pub fn terms(&self) -> &BTreeMap<(u32, u32), S> {
        &self.coeffs
    }

    pub fn eval(&self, d: &S, g: &S) -> S {
        let mut acc = S::zero();
        for (&(i, j), c) in &self.coeffs {
            acc += &(c.clone() * d.pow_u32(i) * g.pow_u32(j));
        }
        acc
    }
}

fn exponents(max_total_degree: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for t in 0..=max_total_degree {
        for i in (0..=t).rev() {
            out.push((i, t - i));
        }
    }
    out
}

/// Exact interpolation of a polynomial of total degree at most `max_total_degree`.
///
/// Extra samples beyond the number of unknowns are not smoothed over: each one
/// must be reproduced exactly or the fit fails with [`Error::Inconsistent`].
pub fn fit_bivariate<S: Scalar + std::fmt::Display>(
    samples: &[((S, S), S)],
    max_total_degree: u32,
) -> Result<BivariatePolynomial<S>> {
    let cols = exponents(max_total_degree);
    let unknowns = cols.len();
    if samples.len() < unknowns {
        return Err(Error::TooFewSamples {
            got: samples.len(),
            needed: unknowns,
        });
    }
    for (a, ((d1, g1), _)) in samples.iter().enumerate() {
        if samples[..a].iter().any(|((d0, g0), _)| d0 == d1 && g0 == g1) {
            return Err(Error::DuplicateSample {
                d: d1.to_string(),
                g: g1.to_string(),
            });
        }
    }

    // Augmented rows, remembering which sample each row came from.
    let mut rows: Vec<(usize, Vec<S>)> = samples
        .iter()
        .enumerate()
        .map(|(idx, ((d, g), v))| {
            let mut row: Vec<S> = cols.iter().map(|&(i, j)| d.pow_u32(i) * g.pow_u32(j)).collect();
            row.push(v.clone());
            (idx, row)
        })
        .collect();

    let mut rank = 0;
    let mut pivots = Vec::with_capacity(unknowns);
    for col in 0..unknowns {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r].1[col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = S::one() / rows[rank].1[col].clone();
        for x in rows[rank].1.iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].1.clone();
        for (r, (_, row)) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &(factor.clone() * p.clone());
            }
        }
        pivots.push(col);
        rank += 1;
    }

    if let Some((idx, _)) = rows[rank..].iter().find(|(_, row)| !row[unknowns].is_zero()) {
        let ((d, g), _) = &samples[*idx];
        return Err(Error::Inconsistent {
            index: *idx,
            d: d.to_string(),
            g: g.to_string(),
            degree: max_total_degree,
        });
    }
    if rank < unknowns {
        return Err(Error::RankDeficient { rank, unknowns });
    }

    let terms = pivots
        .iter()
        .enumerate()
        .map(|(r, &col)| (cols[col], rows[r].1[unknowns].clone()));
    Ok(BivariatePolynomial::from_terms(max_total_degree, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio, Poly2, Rational};
    use proptest::prelude::*;

    fn grid(n: i64, f: impl Fn(i64, i64) -> Rational) -> Vec<((Rational, Rational), Rational)> {
        let mut v = Vec::new();
        for d in 0..n {
            for g in 0..n {
                v.push(((rat(d), rat(-g)), f(d, -g)));
            }
        }
        v
    }

    #[test]
    fn recovers_linear() {
        let p = fit_bivariate(&grid(3, |d, _| rat(d)), 2).unwrap();
        assert_eq!(p, Poly2::from_terms(2, [((1, 0), rat(1))]));
        assert_eq!(p.eval(&rat(7), &rat(3)), rat(7));
    }

    #[test]
    fn recovers_pair_count() {
        let p = fit_bivariate(&grid(3, |d, _| ratio(d * (d - 1), 2)), 2).unwrap();
        assert_eq!(
            p,
            Poly2::from_terms(2, [((2, 0), ratio(1, 2)), ((1, 0), ratio(-1, 2))])
        );
        assert_eq!(p.eval(&rat(5), &rat(9)), rat(10));
    }

    #[test]
    fn zero_polynomial() {
        let p = Poly2::zero(3);
        assert_eq!(p.eval(&rat(4), &rat(-2)), rat(0));
        assert_eq!(p.total_degree(), None);
    }

    #[test]
    fn inconsistent_samples() {
        let samples = vec![
            ((rat(0), rat(0)), rat(0)),
            ((rat(1), rat(0)), rat(0)),
            ((rat(2), rat(0)), rat(1)),
        ];
        // No affine function of d fits, whatever g does.
        assert!(matches!(
            fit_bivariate(&samples, 1),
            Err(Error::Inconsistent { index: 2, .. })
        ));
        let consistent = vec![
            ((rat(0), rat(0)), rat(0)),
            ((rat(1), rat(0)), rat(1)),
            ((rat(2), rat(0)), rat(2)),
        ];
        assert_eq!(
            fit_bivariate(&consistent, 1),
            Err(Error::RankDeficient { rank: 2, unknowns: 3 })
        );
    }

    #[test]
    fn too_few_and_duplicates() {
        let s = vec![((rat(0), rat(0)), rat(0))];
        assert!(matches!(fit_bivariate(&s, 1), Err(Error::TooFewSamples { .. })));
        let dup = vec![
            ((rat(0), rat(0)), rat(0)),
            ((rat(1), rat(0)), rat(0)),
            ((rat(0), rat(0)), rat(0)),
        ];
        assert!(matches!(fit_bivariate(&dup, 1), Err(Error::DuplicateSample { .. })));
    }

    proptest! {
        #[test]
        fn fit_reproduces_samples(
            coeffs in proptest::collection::vec((-9i64..9, 1i64..5), 10),
            deg in 0u32..=3,
        ) {
            let cols = exponents(deg);
            let truth = Poly2::from_terms(
                deg,
                cols.iter().zip(&coeffs).map(|(&e, &(p, q))| (e, ratio(p, q))),
            );
            let mut samples = Vec::new();
            for d in 0..=(deg as i64 + 1) {
                for g in 0..=(deg as i64) {
                    let (d, g) = (rat(2 * d - 1), rat(-g));
                    let v = truth.eval(&d, &g);
                    samples.push(((d, g), v));
                }
            }
            let fitted = fit_bivariate(&samples, deg).unwrap();
            for ((d, g), v) in &samples {
                prop_assert_eq!(&fitted.eval(d, g), v);
            }
            prop_assert_eq!(fitted, truth);
        }
    }
}
