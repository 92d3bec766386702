use num_traits::One;

use super::ClassKind;
use crate::algebra::{factorial, Algebra, Ring, Scalar};
use crate::error::{Error, Result};

/// Classes `v_0, ..., v_cap` of one bundle, graded by degree.
///
/// For Chern and Segre vectors `v_0` is the identity; for Chern characters it
/// is the rank.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedClassVector<R> {
    entries: Vec<R>,
    kind: ClassKind,
}

impl<R: Ring> GradedClassVector<R> {
    /// Panics on an empty entry list.
    pub fn new(kind: ClassKind, entries: Vec<R>) -> Self {
        assert!(!entries.is_empty(), "class vector needs a degree-0 entry");
        Self { entries, kind }
    }

    /// Chern or Segre vector from the positive-degree entries `v_1..v_cap`.
    pub fn with_unit(kind: ClassKind, positive: Vec<R>) -> Self {
        let mut entries = Vec::with_capacity(positive.len() + 1);
        entries.push(R::one());
        entries.extend(positive);
        Self::new(kind, entries)
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn cap(&self) -> usize {
        self.entries.len() - 1
    }

    /// Entry in degree `i`; zero above the cap.
    pub fn get(&self, i: usize) -> R {
        self.entries.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn map<T: Ring>(&self, f: impl FnMut(&R) -> T) -> GradedClassVector<T> {
        GradedClassVector::new(self.kind, self.entries.iter().map(f).collect())
    }

    fn expect(&self, kind: ClassKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::WrongKind {
                expected: kind.name(),
                found: self.kind.name(),
            });
        }
        Ok(())
    }
}

// s_n = -sum_{i=1}^n c_i s_{n-i}; the relation is symmetric in c and s.
fn invert_unit_series<R: Ring>(v: &[R]) -> Vec<R> {
    let mut out: Vec<R> = Vec::with_capacity(v.len());
    out.push(R::one());
    for n in 1..v.len() {
        let mut acc = R::zero();
        for i in 1..=n {
            if !v[i].is_zero() && !out[n - i].is_zero() {
                acc += &v[i].mul_ref(&out[n - i]);
            }
        }
        out.push(-acc);
    }
    out
}

/// Segre classes of the same bundle: `s(t) = 1 / c(t)`.
pub fn chern_to_segre<R: Ring>(c: &GradedClassVector<R>) -> Result<GradedClassVector<R>> {
    c.expect(ClassKind::Chern)?;
    Ok(GradedClassVector::new(ClassKind::Segre, invert_unit_series(&c.entries)))
}

pub fn segre_to_chern<R: Ring>(s: &GradedClassVector<R>) -> Result<GradedClassVector<R>> {
    s.expect(ClassKind::Segre)?;
    Ok(GradedClassVector::new(ClassKind::Chern, invert_unit_series(&s.entries)))
}

/// Classes of the dual bundle: degree `i` picks up `(-1)^i`.
pub fn dualize<R: Ring>(v: &GradedClassVector<R>) -> GradedClassVector<R> {
    let entries = v
        .entries
        .iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 1 { -x.clone() } else { x.clone() })
        .collect();
    GradedClassVector::new(v.kind, entries)
}

/// Chern character from Chern classes through Newton's identities, `ch_i = p_i / i!`.
pub fn chern_to_ch<R: Algebra>(
    c: &GradedClassVector<R>,
    rank: R::Scalar,
) -> Result<GradedClassVector<R>> {
    c.expect(ClassKind::Chern)?;
    let e = &c.entries;
    // p_l = (-1)^{l-1} (l e_l - sum_{j<l} (-1)^{j-1} e_{l-j} p_j)
    let mut p: Vec<R> = vec![R::zero()];
    for l in 1..e.len() {
        let mut acc = e[l].scale(&R::Scalar::from_int(l as i64));
        for j in 1..l {
            if e[l - j].is_zero() || p[j].is_zero() {
                continue;
            }
            let t = e[l - j].mul_ref(&p[j]);
            if j % 2 == 1 {
                acc -= &t;
            } else {
                acc += &t;
            }
        }
        p.push(if l % 2 == 1 { acc } else { -acc });
    }
    let mut entries = Vec::with_capacity(e.len());
    entries.push(R::from_scalar(rank));
    for (l, pl) in p.iter().enumerate().skip(1) {
        let inv = R::Scalar::one() / factorial::<R::Scalar>(l as u32);
        entries.push(pl.scale(&inv));
    }
    Ok(GradedClassVector::new(ClassKind::Ch, entries))
}

/// Inverse of [`chern_to_ch`] in positive degrees: `e_l = (1/l) sum_j (-1)^{j-1} e_{l-j} p_j`.
pub fn ch_to_chern<R: Algebra>(ch: &GradedClassVector<R>) -> Result<GradedClassVector<R>> {
    ch.expect(ClassKind::Ch)?;
    let p: Vec<R> = ch
        .entries
        .iter()
        .enumerate()
        .map(|(j, x)| x.scale(&factorial::<R::Scalar>(j as u32)))
        .collect();
    let mut e: Vec<R> = vec![R::one()];
    for l in 1..p.len() {
        let mut acc = R::zero();
        for j in 1..=l {
            if e[l - j].is_zero() || p[j].is_zero() {
                continue;
            }
            let t = e[l - j].mul_ref(&p[j]);
            if j % 2 == 1 {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
        e.push(acc.scale(&R::Scalar::from_frac(1, l as i64)));
    }
    Ok(GradedClassVector::new(ClassKind::Chern, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{ClassExpr, Generator};
    use crate::{rat, ratio, Expr, Rational};
    use proptest::prelude::*;

    fn sym(kind: ClassKind, cap: u32) -> GradedClassVector<Expr> {
        GradedClassVector::with_unit(
            kind,
            (1..=cap).map(|i| ClassExpr::generator(Generator::new(kind, i))).collect(),
        )
    }

    fn single_root(alpha: &Rational, cap: usize) -> GradedClassVector<Rational> {
        let mut v = vec![rat(0); cap + 1];
        v[0] = rat(1);
        v[1] = alpha.clone();
        GradedClassVector::new(ClassKind::Chern, v)
    }

    #[test]
    fn segre_degree_one() {
        let s = chern_to_segre(&sym(ClassKind::Chern, 1)).unwrap();
        assert_eq!(s.get(1), -ClassExpr::chern(1));
        let trivial = GradedClassVector::<Rational>::with_unit(ClassKind::Chern, vec![rat(0); 5]);
        assert_eq!(
            chern_to_segre(&trivial).unwrap().entries(),
            &[rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)]
        );
    }

    #[test]
    fn segre_of_single_root() {
        // 1/(1 + a t) = sum (-a)^l t^l; the dual bundle gives a^l.
        let a = ratio(3, 2);
        let s = chern_to_segre(&single_root(&a, 8)).unwrap();
        let dual = dualize(&s);
        for l in 0..=8u32 {
            assert_eq!(s.get(l as usize), (-a.clone()).pow_u32(l));
            assert_eq!(dual.get(l as usize), a.pow_u32(l));
        }
        assert_eq!(segre_to_chern(&s).unwrap(), single_root(&a, 8));
    }

    #[test]
    fn wrong_kind_is_rejected() {
        let s = sym(ClassKind::Segre, 2);
        assert!(matches!(chern_to_segre(&s), Err(Error::WrongKind { .. })));
        assert!(chern_to_ch(&s, rat(2)).is_err());
        assert!(ch_to_chern(&s).is_err());
    }

    #[test]
    fn dualize_signs() {
        let c = sym(ClassKind::Chern, 2);
        let d = dualize(&c);
        assert_eq!(d.get(1), -ClassExpr::chern(1));
        assert_eq!(d.get(2), ClassExpr::chern(2));
        assert_eq!(dualize(&d), c);
        let ch = GradedClassVector::new(ClassKind::Ch, vec![rat(3), rat(1), rat(1)]);
        assert_eq!(dualize(&ch).get(0), rat(3));
    }

    #[test]
    fn newton_low_degrees() {
        let ch = chern_to_ch(&sym(ClassKind::Chern, 2), rat(5)).unwrap();
        assert_eq!(ch.get(0), ClassExpr::constant(rat(5)));
        assert_eq!(ch.get(1), ClassExpr::chern(1));
        let c1 = ClassExpr::chern(1);
        let expected = (c1.clone() * c1 - ClassExpr::chern(2).scale(&rat(2))).scale(&ratio(1, 2));
        assert_eq!(ch.get(2), expected);

        // e_2 = (p_1^2 - p_2)/2 with p_2 = 2! ch_2
        let c = ch_to_chern(&sym(ClassKind::Ch, 2)).unwrap();
        let ch1 = ClassExpr::ch(1);
        assert_eq!(c.get(2), (ch1.clone() * ch1).scale(&ratio(1, 2)) - ClassExpr::ch(2));
    }

    #[test]
    fn ch_of_single_root() {
        let a = ratio(-2, 3);
        let ch = chern_to_ch(&single_root(&a, 7), rat(1)).unwrap();
        for i in 1..=7u32 {
            let f: Rational = factorial(i);
            assert_eq!(ch.get(i as usize), a.pow_u32(i) / f);
        }
    }

    fn rational_vector(cap: usize) -> impl Strategy<Value = GradedClassVector<Rational>> {
        proptest::collection::vec((-30i64..30, 1i64..7), cap).prop_map(|v| {
            GradedClassVector::with_unit(
                ClassKind::Chern,
                v.into_iter().map(|(p, q)| ratio(p, q)).collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn newton_round_trip(c in (0usize..=10).prop_flat_map(rational_vector)) {
            let ch = chern_to_ch(&c, rat(4)).unwrap();
            prop_assert_eq!(ch_to_chern(&ch).unwrap(), c);
        }

        #[test]
        fn segre_round_trip(c in (0usize..=10).prop_flat_map(rational_vector)) {
            prop_assert_eq!(segre_to_chern(&chern_to_segre(&c).unwrap()).unwrap(), c);
        }
    }
}
