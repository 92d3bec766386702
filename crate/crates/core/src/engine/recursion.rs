use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::{binomial_general, factorial, Ring};
use crate::error::{Error, Result};
use crate::symfunc::{ClassKind, Monomial};
use crate::{rat, Expr, Rational};

/// Integrals computed through the disjoint-union identity, without sampling.
///
/// For `C' = C ⊔ P^1` with `O(1)` on the line, `(C')^{[k]}` splits into
/// `C^{[k_1]} × P^{k_2}` and Chern characters add. Solving for the `k_2 = 0`
/// term expresses genus `g` at degree `d` through genus `g - 1` at degree
/// `d + 1` and lower-weight integrals at genus `g`, down to `P^k` at `g = 0`.
#[derive(Debug, Default)]
pub struct Recursion {
    memo: HashMap<(Monomial, i64, i64), Rational>,
}

// ∫_{P^k} of a ch monomial of weight k for O(d)^{[k]}, where
// ch_i = (-1)^{i-1} (d - k + 1) / i! h^i.
fn projective_value(m: &Monomial, d: i64) -> Rational {
    let k = m.weight() as i64;
    let mut acc = Rational::one();
    for &(g, e) in m.factors() {
        let i = g.degree;
        let mut c = rat(d - k + 1) / factorial::<Rational>(i);
        if i % 2 == 0 {
            c = -c;
        }
        acc *= &c.pow_u32(e);
    }
    acc
}

// All ways to write m = a·b with the multinomial weight of the binomial expansion.
fn splits(m: &Monomial) -> Vec<(Monomial, Monomial, Rational)> {
    let mut out = vec![(Monomial::one(), Monomial::one(), Rational::one())];
    for &(g, e) in m.factors() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for (a, b, c) in &out {
            for j in 0..=e {
                let coeff = c.clone() * binomial_general(&rat(e as i64), j as i64);
                next.push((
                    a.mul(&Monomial::power(g, j)),
                    b.mul(&Monomial::power(g, e - j)),
                    coeff,
                ));
            }
        }
        out = next;
    }
    out
}

impl Recursion {
    pub fn new() -> Self {
        Self::default()
    }

    /// `∫_{C^{[k]}} expr` for a curve of genus `g ≥ 0` and degree `d`.
    pub fn integral(&mut self, expr: &Expr, k: u32, g: i64, d: i64) -> Result<Rational> {
        if g < 0 {
            return Err(Error::InvalidProblem(format!("genus {g} is negative")));
        }
        if !expr.has_weight(k) {
            return Err(Error::WeightMismatch {
                expected: k,
                found: expr.weight(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in expr.to_ch_basis().terms() {
            acc += &(c.clone() * self.monomial(m, g, d));
        }
        Ok(acc)
    }

    fn monomial(&mut self, m: &Monomial, g: i64, d: i64) -> Rational {
        debug_assert!(m.kinds().all(|k| k == ClassKind::Ch));
        if m.is_one() {
            return Rational::one();
        }
        if g == 0 {
            return projective_value(m, d);
        }
        let key = (m.clone(), g, d);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut value = self.monomial(m, g - 1, d + 1);
        for (a, b, c) in splits(m) {
            if b.is_one() {
                continue;
            }
            let line = projective_value(&b, 1);
            if line.is_zero() {
                continue;
            }
            value -= &(c * self.monomial(&a, g, d) * line);
        }
        self.memo.insert(key, value.clone());
        value
    }
}

/// One-shot form of [`Recursion::integral`].
pub fn recursion_integral(expr: &Expr, k: u32, g: i64, d: i64) -> Result<Rational> {
    Recursion::new().integral(expr, k, g, d)
}
