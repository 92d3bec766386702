use num_traits::Zero;
use proptest::prelude::*;
use secant_core::symfunc::{
    ch_to_chern, chern_to_ch, chern_to_segre, dualize, partitions, segre_to_chern, ClassKind,
    GradedClassVector,
};
use secant_core::{rat, ratio, Expr};

fn chern_symbols(cap: u32) -> GradedClassVector<Expr> {
    GradedClassVector::with_unit(ClassKind::Chern, (1..=cap).map(Expr::chern).collect())
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

#[test]
fn symbolic_round_trips() {
    let c = chern_symbols(6);
    assert_eq!(segre_to_chern(&chern_to_segre(&c).unwrap()).unwrap(), c);
    let ch = chern_to_ch(&c, rat(0)).unwrap();
    assert_eq!(ch_to_chern(&ch).unwrap(), c);
    assert_eq!(dualize(&dualize(&c)), c);
}

#[test]
fn newton_in_low_degree() {
    let ch = chern_to_ch(&chern_symbols(3), rat(0)).unwrap();
    assert_eq!(ch.get(1), Expr::chern(1));
    assert_eq!(ch.get(2), Expr::parse("1/2*c1^2 - c2").unwrap());
    assert_eq!(ch.get(3), Expr::parse("1/6*c1^3 - 1/2*c1*c2 + 1/2*c3").unwrap());
}

fn monomial_text() -> impl Strategy<Value = String> {
    let generator = (prop_oneof![Just("c"), Just("s"), Just("ch")], 1u32..5, 1u32..4)
        .prop_map(|(k, i, e)| if e == 1 { format!("{k}{i}") } else { format!("{k}{i}^{e}") });
    proptest::collection::vec(generator, 1..4).prop_map(|v| v.join("*"))
}

fn expr_strategy() -> impl Strategy<Value = Expr> {
    proptest::collection::vec((monomial_text(), -6i64..7, 1i64..5), 1..5).prop_map(|terms| {
        let mut e = Expr::zero();
        for (m, p, q) in terms {
            e = e + Expr::parse(&m).unwrap() * Expr::constant(ratio(p, q));
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parses_back(e in expr_strategy()) {
        prop_assert_eq!(Expr::parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn basis_changes_are_consistent(e in expr_strategy()) {
        let chern = e.to_chern_basis();
        prop_assert_eq!(chern.to_chern_basis(), chern.clone());
        prop_assert_eq!(e.to_ch_basis().to_chern_basis(), chern.clone());
        prop_assert_eq!(e.dualized().dualized().to_chern_basis(), chern);
    }

    #[test]
    fn chern_basis_is_a_ring_map(a in expr_strategy(), b in expr_strategy()) {
        prop_assert_eq!(
            (a.clone() * b.clone()).to_chern_basis(),
            a.to_chern_basis() * b.to_chern_basis()
        );
    }
}
