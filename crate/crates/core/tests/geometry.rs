use proptest::prelude::*;
use secant_core::algebra::binomial_general;
use secant_core::geometry::{eval_expr_on_union, model_components, LineUnion};
use secant_core::{rat, CohClass, Expr, Rational};

fn binom(n: i64, k: i64) -> Rational {
    binomial_general(&rat(n), k)
}

fn eval(expr: &str, degrees: &[i64], k: u32) -> Rational {
    eval_expr_on_union(&Expr::parse(expr).unwrap(), degrees, k).unwrap()
}

#[test]
fn projective_space_tops() {
    for d in -3..10 {
        for k in 1..=5u32 {
            let kk = k as i64;
            assert_eq!(eval(&format!("c{k}"), &[d], k), binom(d, kk));
            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
            assert_eq!(eval(&format!("s{k}"), &[d], k), sign * binom(d - kk + 1, kk));
        }
    }
}

#[test]
fn component_counts() {
    // Weak compositions of k into m parts.
    for m in 1..=4usize {
        for k in 0..=5u32 {
            let n = model_components(&vec![1; m], k).len() as i64;
            assert_eq!(rat(n), binom(k as i64 + m as i64 - 1, m as i64 - 1));
        }
    }
}

#[test]
fn weight_mismatch_is_rejected() {
    assert!(eval_expr_on_union(&Expr::chern(2), &[3], 3).is_err());
    assert!(LineUnion::new(vec![2, 3]).unwrap().eval(&Expr::chern(1), 2).is_err());
}

fn small_class(c: [i64; 6]) -> CohClass<Rational> {
    let caps = [2u32, 1];
    let mut acc = CohClass::zero_on(&caps);
    let mut it = c.iter();
    for a in 0..=2 {
        for b in 0..=1 {
            acc = acc + CohClass::monomial(&caps, &[a, b], rat(*it.next().unwrap()));
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn order_of_lines_is_irrelevant(mut degrees in proptest::collection::vec(-3i64..8, 1..4), k in 1u32..5) {
        let expr = format!("c1^{k}");
        let a = eval(&expr, &degrees, k);
        degrees.reverse();
        prop_assert_eq!(eval(&expr, &degrees, k), a);
    }

    #[test]
    fn chern_character_is_additive(d1 in -3i64..9, d2 in -3i64..9, k in 1u32..6) {
        let expr = format!("ch{k}");
        prop_assert_eq!(
            eval(&expr, &[d1, d2], k),
            eval(&expr, &[d1], k) + eval(&expr, &[d2], k)
        );
    }

    #[test]
    fn top_chern_class_convolves(d1 in -3i64..9, d2 in -3i64..9, k in 1u32..6) {
        let mut conv = rat(0);
        for i in 0..=k {
            conv += binom(d1, i as i64) * binom(d2, (k - i) as i64);
        }
        prop_assert_eq!(eval(&format!("c{k}"), &[d1, d2], k), conv);
    }

    #[test]
    fn cohomology_ring_axioms(a in any::<[i64; 6]>().prop_map(|v| v.map(|x| x % 7)),
                              b in any::<[i64; 6]>().prop_map(|v| v.map(|x| x % 7)),
                              c in any::<[i64; 6]>().prop_map(|v| v.map(|x| x % 7))) {
        let (a, b, c) = (small_class(a), small_class(b), small_class(c));
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a * c);
    }
}
