use num_traits::{One, Zero};

use crate::algebra::{factorial, Algebra, Ring, Scalar};
use crate::symfunc::ClassExpr;

/// Integer partition with weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// From multiplicities `m[i]` = number of parts equal to `i + 1`.
    pub fn from_multiplicities(m: &[u32]) -> Self {
        let parts = m
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| std::iter::repeat_n(i as u32 + 1, n as usize))
            .collect();
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let largest = self.parts.first().copied().unwrap_or(0);
        Self::new(
            (1..=largest)
                .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
                .collect(),
        )
    }

    /// `m[i]` = number of parts equal to `i + 1`, length = weight.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.weight() as usize];
        for &p in &self.parts {
            m[p as usize - 1] += 1;
        }
        m
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Vectors `(n_1, n_2, ..., n_n)` with `n_1 + 2 n_2 + ... = n`.
pub fn multiplicity_vectors(n: u32) -> Vec<Vec<u32>> {
    partitions(n).iter().map(Partition::multiplicities).collect()
}

// sum over (n_i) of prod_i (w_i x_i)^{n_i} / (i^{n_i} n_i!), with x_i supplied by `gen`.
fn power_sum_expansion<S: Scalar>(
    n: u32,
    weight: impl Fn(u32) -> S,
    gen: impl Fn(u32) -> ClassExpr<S>,
) -> ClassExpr<S> {
    let mut acc = ClassExpr::zero();
    for m in multiplicity_vectors(n) {
        let mut term = ClassExpr::one();
        let mut coeff = S::one();
        for (idx, &ni) in m.iter().enumerate() {
            if ni == 0 {
                continue;
            }
            let i = idx as u32 + 1;
            let w = weight(i) / S::from_int(i as i64);
            coeff *= &(w.pow_u32(ni) / factorial::<S>(ni));
            term *= &gen(i).pow_u32(ni);
        }
        acc += &term.scale(&coeff);
    }
    acc
}

/// Complete homogeneous `h_n` of the Chern roots, written in Chern characters
/// (`p_i = i! ch_i`). This is the degree-`n` Segre class of the dual bundle.
pub fn complete_homogeneous_in_ch<S: Scalar>(n: i64) -> ClassExpr<S> {
    if n < 0 {
        return ClassExpr::zero();
    }
    power_sum_expansion(n as u32, factorial::<S>, ClassExpr::ch)
}

/// Coefficient of `t^n` in `exp(sum_n t^n/n (n!)^2 ch_n^2)`.
///
/// This is `sum_{|λ| = n} s_λ^2` over Schur polynomials in the Chern roots.
/// It equals `h_n^2`, the square of the dual Segre class, only in rank one;
/// [`square_expansion`] is the square in every rank.
pub fn ssq_expansion<S: Scalar>(n: u32) -> ClassExpr<S> {
    power_sum_expansion(
        n,
        |i| {
            let f = factorial::<S>(i);
            f.clone() * f
        },
        |i| ClassExpr::ch(i).pow_u32(2),
    )
}

/// `s_n^2` of the dual bundle in Chern characters.
pub fn square_expansion<S: Scalar>(n: u32) -> ClassExpr<S> {
    let h = complete_homogeneous_in_ch::<S>(n as i64);
    h.clone() * h
}

/// `s_{n-1} s_{n+1}` of the dual bundle in Chern characters: product of the
/// weight `n-1` and weight `n+1` power-sum expansions.
pub fn sshift_expansion<S: Scalar>(n: u32) -> ClassExpr<S> {
    assert!(n >= 1, "shifted product needs n >= 1");
    complete_homogeneous_in_ch::<S>(n as i64 - 1) * complete_homogeneous_in_ch::<S>(n as i64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{chern_to_segre, dualize, ClassKind, GradedClassVector};
    use crate::{ratio, Expr, Rational};

    // ch_i -> a^i / i! for a single Chern root a.
    fn single_root(e: &Expr, a: &Rational) -> Rational {
        e.eval(|g| {
            assert_eq!(g.kind, ClassKind::Ch);
            a.pow_u32(g.degree) / factorial::<Rational>(g.degree)
        })
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        for m in multiplicity_vectors(7) {
            let w: u32 = m.iter().enumerate().map(|(i, n)| (i as u32 + 1) * n).sum();
            assert_eq!(w, 7);
        }
    }

    #[test]
    fn conjugates() {
        let lambda = Partition::new(vec![2, 2, 2]);
        assert_eq!(lambda.conjugate(), Partition::new(vec![3, 3]));
        assert_eq!(lambda.conjugate().conjugate(), lambda);
        assert_eq!(Partition::new(vec![0, 1, 3]).parts(), &[3, 1]);
        assert_eq!(
            Partition::from_multiplicities(&[2, 0, 1]),
            Partition::new(vec![3, 1, 1])
        );
    }

    #[test]
    fn ssq_small() {
        assert_eq!(ssq_expansion::<Rational>(0), Expr::one());
        assert_eq!(ssq_expansion::<Rational>(1), Expr::ch(1).pow_u32(2));
        assert_eq!(
            ssq_expansion::<Rational>(2),
            Expr::parse("1/2*ch1^4 + 2*ch2^2").unwrap()
        );
    }

    #[test]
    fn sshift_small() {
        assert_eq!(sshift_expansion::<Rational>(1), Expr::parse("1/2*ch1^2 + ch2").unwrap());
        assert_eq!(complete_homogeneous_in_ch::<Rational>(0), Expr::one());
        assert_eq!(complete_homogeneous_in_ch::<Rational>(-1), Expr::zero());
    }

    #[test]
    fn single_root_oracle() {
        let a = ratio(5, 3);
        for n in 0..=6u32 {
            assert_eq!(single_root(&ssq_expansion(n), &a), a.pow_u32(2 * n));
            if n >= 1 {
                assert_eq!(single_root(&sshift_expansion(n), &a), a.pow_u32(2 * n));
            }
        }
    }

    #[test]
    fn matches_dual_segre_from_newton() {
        // h_n in ch agrees with s_n of the dual computed through Chern classes.
        let cap = 7u32;
        let mut ch = vec![Expr::zero()];
        ch.extend((1..=cap).map(Expr::ch));
        let c = crate::symfunc::ch_to_chern(&GradedClassVector::new(ClassKind::Ch, ch)).unwrap();
        let dual_segre = dualize(&chern_to_segre(&c).unwrap());
        for n in 0..=cap {
            assert_eq!(dual_segre.get(n as usize), complete_homogeneous_in_ch(n as i64));
        }
        for n in 0..=3u32 {
            let s = dual_segre.get(n as usize);
            assert_eq!(s.clone() * s, square_expansion(n));
        }
    }

    // Jacobi-Trudi: s_λ = det(h_{λ_i - i + j}).
    fn schur_in_ch(lambda: &Partition) -> Expr {
        let l = lambda.len();
        let m: Vec<Vec<Expr>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        complete_homogeneous_in_ch(lambda.parts()[i] as i64 - i as i64 + j as i64)
                    })
                    .collect()
            })
            .collect();
        crate::symfunc::determinant(&m)
    }

    #[test]
    fn ssq_is_the_cauchy_sum() {
        for n in 0..=5u32 {
            let mut cauchy = Expr::zero();
            for lambda in partitions(n) {
                let s = schur_in_ch(&lambda);
                cauchy += &(s.clone() * s);
            }
            assert_eq!(ssq_expansion::<Rational>(n), cauchy);
        }
    }

    #[test]
    fn ssq_differs_from_square_beyond_rank_one() {
        assert_eq!(ssq_expansion::<Rational>(1), square_expansion(1));
        assert_eq!(
            square_expansion::<Rational>(2),
            Expr::parse("1/4*ch1^4 + ch1^2*ch2 + ch2^2").unwrap()
        );
        assert_ne!(ssq_expansion::<Rational>(2), square_expansion(2));
        let a = ratio(-7, 2);
        for n in 0..=6u32 {
            assert_eq!(single_root(&square_expansion(n), &a), a.pow_u32(2 * n));
        }
    }
}
