use std::collections::HashMap;

use super::GradedClassVector;
use crate::algebra::Ring;
use crate::error::{Error, Result};

/// Determinant over a commutative ring by cofactor expansion along rows,
/// memoised on the set of columns still available.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    assert!(n < 32, "matrix too large for cofactor expansion");
    let mut memo: HashMap<u32, R> = HashMap::new();
    minor(m, 0, (1u32 << n) - 1, &mut memo)
}

fn minor<R: Ring>(m: &[Vec<R>], row: usize, cols: u32, memo: &mut HashMap<u32, R>) -> R {
    if row == m.len() {
        return R::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = R::zero();
    let mut sign_positive = true;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let sub = minor(m, row + 1, cols & !(1 << c), memo);
            let term = entry.mul_ref(&sub);
            if sign_positive {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// `Δ_q^{(p)}(v)`: determinant of the `p × p` matrix with entries `v_{q+j-i}`.
pub fn delta_determinant<R: Ring>(p: usize, q: usize, v: &GradedClassVector<R>) -> Result<R> {
    assert!(p >= 1, "delta determinant needs p >= 1");
    let needed = q + p - 1;
    if v.cap() < needed {
        return Err(Error::InsufficientCap {
            cap: v.cap(),
            needed,
        });
    }
    let m: Vec<Vec<R>> = (0..p)
        .map(|i| {
            (0..p)
                .map(|j| {
                    let idx = q as isize + j as isize - i as isize;
                    if idx < 0 {
                        R::zero()
                    } else {
                        v.get(idx as usize)
                    }
                })
                .collect()
        })
        .collect();
    Ok(determinant(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{chern_to_segre, dualize, ClassKind};
    use crate::{rat, ratio, Expr, Rational};
    use proptest::prelude::*;

    fn segre_symbols(cap: u32) -> GradedClassVector<Expr> {
        GradedClassVector::with_unit(ClassKind::Segre, (1..=cap).map(Expr::segre).collect())
    }

    #[test]
    fn small_determinants() {
        let m = vec![vec![rat(2), rat(3)], vec![rat(5), rat(7)]];
        assert_eq!(determinant(&m), rat(-1));
        let m3 = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(0), rat(1), rat(4)],
            vec![rat(5), rat(6), rat(0)],
        ];
        assert_eq!(determinant(&m3), rat(1));
    }

    #[test]
    fn one_by_one_is_the_entry() {
        let v = segre_symbols(5);
        for q in 0..=5 {
            assert_eq!(delta_determinant(1, q, &v).unwrap(), v.get(q));
        }
    }

    #[test]
    fn two_by_two_segre() {
        let v = segre_symbols(4);
        let d = delta_determinant(2, 2, &v).unwrap();
        assert_eq!(d, Expr::parse("s2^2 - s1*s3").unwrap());
    }

    #[test]
    fn cap_check() {
        let v = segre_symbols(3);
        assert_eq!(
            delta_determinant(2, 3, &v),
            Err(Error::InsufficientCap { cap: 3, needed: 4 })
        );
    }

    #[test]
    fn lower_triangle_uses_unit_and_zero() {
        // Δ_1^{(2)}(c) = c_1^2 - c_2
        let c = GradedClassVector::with_unit(ClassKind::Chern, (1..=2).map(Expr::chern).collect());
        assert_eq!(delta_determinant(2, 1, &c).unwrap(), Expr::parse("c1^2 - c2").unwrap());
    }

    fn chern_vector() -> impl Strategy<Value = GradedClassVector<Rational>> {
        proptest::collection::vec((-12i64..12, 1i64..4), 8).prop_map(|v| {
            GradedClassVector::with_unit(
                ClassKind::Chern,
                v.into_iter().map(|(p, q)| ratio(p, q)).collect(),
            )
        })
    }

    proptest! {
        // Conjugate determinants agree once the Chern vector is inverted into
        // the dual bundle's Segre classes; with the same bundle's Segre
        // classes the sign (-1)^{pq} appears.
        #[test]
        fn porteous_duality(c in chern_vector(), p in 1usize..=4, q in 1usize..=4) {
            let s = chern_to_segre(&c).unwrap();
            let beta = dualize(&s);
            let lhs = delta_determinant(p, q, &c).unwrap();
            prop_assert_eq!(&lhs, &delta_determinant(q, p, &beta).unwrap());
            let sign = if (p * q) % 2 == 0 { rat(1) } else { rat(-1) };
            prop_assert_eq!(lhs, sign * delta_determinant(q, p, &s).unwrap());
        }
    }
}
