use crate::algebra::{binomial_general, factorial, Scalar};
use crate::error::{Error, Result};
use crate::geometry::CohClass;
use crate::symfunc::{ClassKind, GradedClassVector};

/// `P^{k_1} × ... × P^{k_m}`, with `O(d_i)` on the `i`-th line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModelSpace {
    factor_dims: Vec<u32>,
    factor_degrees: Vec<i64>,
}

impl ModelSpace {
    pub fn new(factor_dims: Vec<u32>, factor_degrees: Vec<i64>) -> Result<Self> {
        if factor_dims.is_empty() {
            return Err(Error::InvalidSpace("a model space needs at least one factor".into()));
        }
        if factor_dims.len() != factor_degrees.len() {
            return Err(Error::InvalidSpace(format!(
                "{} factor dimensions but {} degrees",
                factor_dims.len(),
                factor_degrees.len()
            )));
        }
        Ok(Self {
            factor_dims,
            factor_degrees,
        })
    }

    pub fn factor_dims(&self) -> &[u32] {
        &self.factor_dims
    }

    pub fn factor_degrees(&self) -> &[i64] {
        &self.factor_degrees
    }

    pub fn factors(&self) -> usize {
        self.factor_dims.len()
    }

    /// Complex dimension, equal to the number of points.
    pub fn dimension(&self) -> u32 {
        self.factor_dims.iter().sum()
    }
}

fn check_degree(l: u32, k: u32) -> Result<()> {
    if l > k {
        Err(Error::DegreeOutOfRange {
            degree: l as i64,
            max: k as i64,
        })
    } else {
        Ok(())
    }
}

fn hyperplane_power<S: Scalar>(k: u32, l: u32, c: S) -> CohClass<S> {
    CohClass::monomial(&[k], &[l], c)
}

/// `c_l` of the tautological bundle of `O(d)` on `P^k = (P^1)^{[k]}`.
pub fn taut_chern<S: Scalar>(k: u32, d: i64, l: u32) -> Result<CohClass<S>> {
    check_degree(l, k)?;
    let top = S::from_int(d - k as i64 + l as i64);
    Ok(hyperplane_power(k, l, binomial_general(&top, l as i64)))
}

/// `s_l` of the same bundle.
pub fn taut_segre<S: Scalar>(k: u32, d: i64, l: u32) -> Result<CohClass<S>> {
    check_degree(l, k)?;
    let b = binomial_general(&S::from_int(d - k as i64 + 1), l as i64);
    let c = if l.is_multiple_of(2) { b } else { -b };
    Ok(hyperplane_power(k, l, c))
}

/// `ch_i` of the same bundle; `ch_0` is the rank `k`.
pub fn taut_ch<S: Scalar>(k: u32, d: i64, i: u32) -> Result<CohClass<S>> {
    check_degree(i, k)?;
    if i == 0 {
        return Ok(CohClass::constant_on(&[k], S::from_int(k as i64)));
    }
    let mut c = S::from_int(d - k as i64 + 1) / factorial::<S>(i);
    if i.is_multiple_of(2) {
        c = -c;
    }
    Ok(hyperplane_power(k, i, c))
}

/// Components of `(P^1 ⊔ ... ⊔ P^1)^{[k]}` for lines of the given degrees:
/// one product of projective spaces per composition of `k`.
pub fn model_components(degrees: &[i64], k: u32) -> Vec<ModelSpace> {
    let mut out = Vec::new();
    if degrees.is_empty() {
        return out;
    }
    let mut parts = vec![0u32; degrees.len()];
    fn go(i: usize, remaining: u32, parts: &mut [u32], degrees: &[i64], out: &mut Vec<ModelSpace>) {
        if i + 1 == parts.len() {
            parts[i] = remaining;
            out.push(ModelSpace {
                factor_dims: parts.to_vec(),
                factor_degrees: degrees.to_vec(),
            });
            return;
        }
        for ki in (0..=remaining).rev() {
            parts[i] = ki;
            go(i + 1, remaining - ki, parts, degrees, out);
        }
    }
    go(0, k, &mut parts, degrees, &mut out);
    out
}

/// Chern vector of the tautological bundle on a component, up to degree `cap`:
/// the product of the pulled-back total Chern classes of the factors.
pub fn taut_classes_on_component<S: Scalar>(
    space: &ModelSpace,
    cap: u32,
) -> Result<GradedClassVector<CohClass<S>>> {
    check_degree(cap, space.dimension())?;
    let caps = space.factor_dims();
    let mut total = CohClass::constant_on(caps, S::one());
    for (i, (&k, &d)) in caps.iter().zip(space.factor_degrees()).enumerate() {
        let mut factor = CohClass::zero_on(caps);
        for l in 0..=k {
            factor += &taut_chern::<S>(k, d, l)?.embed(caps, i);
        }
        total *= &factor;
    }
    let entries = (0..=cap).map(|j| total.graded_part(j)).collect();
    Ok(GradedClassVector::new(ClassKind::Chern, entries))
}

/// Degree of the top class `h_1^{k_1} ... h_m^{k_m}`.
pub fn integrate<S: Scalar>(cls: &CohClass<S>, space: &ModelSpace) -> S {
    if cls.is_scalar() {
        return if space.dimension() == 0 {
            cls.top_coefficient()
        } else {
            S::zero()
        };
    }
    assert_eq!(cls.caps(), space.factor_dims(), "class lives on a different space");
    cls.top_coefficient()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio, Class, Rational};
    use crate::algebra::Ring;
    use num_traits::One;

    fn h(k: u32, l: u32, c: Rational) -> Class {
        Class::monomial(&[k], &[l], c)
    }

    #[test]
    fn chern_examples() {
        assert_eq!(taut_chern::<Rational>(4, 6, 1).unwrap(), h(4, 1, rat(3)));
        assert_eq!(taut_chern::<Rational>(4, 6, 0).unwrap(), Class::one());
        assert_eq!(taut_chern::<Rational>(2, 2, 2).unwrap(), h(2, 2, rat(1)));
        assert!(matches!(
            taut_chern::<Rational>(2, 2, 3),
            Err(Error::DegreeOutOfRange { degree: 3, max: 2 })
        ));
    }

    #[test]
    fn segre_examples() {
        assert_eq!(taut_segre::<Rational>(4, 6, 2).unwrap(), h(4, 2, rat(3)));
        assert_eq!(taut_segre::<Rational>(4, 4, 2).unwrap(), h(4, 2, rat(0)));
        assert_eq!(taut_segre::<Rational>(4, 6, 1).unwrap(), h(4, 1, rat(-3)));
    }

    #[test]
    fn ch_examples() {
        assert_eq!(taut_ch::<Rational>(3, 5, 0).unwrap(), Class::scalar(rat(3)));
        assert_eq!(taut_ch::<Rational>(3, 5, 2).unwrap(), h(3, 2, ratio(-3, 2)));
        assert_eq!(taut_ch::<Rational>(1, 7, 1).unwrap(), h(1, 1, rat(7)));
    }

    #[test]
    fn components() {
        let dims: Vec<Vec<u32>> = model_components(&[1, 1], 2)
            .iter()
            .map(|s| s.factor_dims().to_vec())
            .collect();
        assert_eq!(dims, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(model_components(&[3], 5).len(), 1);
        assert_eq!(model_components(&[1, 2, 3], 2).len(), 6);
        assert_eq!(model_components(&[1, 2, 3, 4], 5).len(), 56);
    }

    #[test]
    fn two_lines_first_chern() {
        let space = ModelSpace::new(vec![1, 1], vec![4, 7]).unwrap();
        let c = taut_classes_on_component::<Rational>(&space, 2).unwrap();
        let expected = Class::monomial(&[1, 1], &[1, 0], rat(4)) + Class::monomial(&[1, 1], &[0, 1], rat(7));
        assert_eq!(c.get(1), expected);
        assert_eq!(integrate(&c.get(2), &space), rat(28));
    }

    #[test]
    fn integration_examples() {
        let p4 = ModelSpace::new(vec![4], vec![6]).unwrap();
        assert_eq!(integrate(&h(4, 4, rat(1)), &p4), rat(1));
        for (k, d) in [(3u32, 5i64), (4, 2), (2, 9)] {
            let space = ModelSpace::new(vec![k], vec![d]).unwrap();
            let c1 = taut_chern::<Rational>(k, d, 1).unwrap();
            assert_eq!(integrate(&c1.pow_u32(k), &space), rat(d - k as i64 + 1).pow_u32(k));
        }
        let s = |l| taut_segre::<Rational>(4, 6, l).unwrap();
        let det = s(2) * s(2) - s(1) * s(3);
        assert_eq!(integrate(&det, &p4), rat(6));
    }

}
