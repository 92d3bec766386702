use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{binomial_general, factorial, Ring};
use crate::error::{Error, Result};
use crate::{rat, ratio, Rational, Series};

fn binom(n: i64, k: i64) -> Rational {
    binomial_general(&rat(n), k)
}

fn sign(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// How a closed form relates to the source it was transcribed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Transcribed as printed and confirmed by the engine.
    Verbatim,
    /// Transcribed as printed; disagrees with the engine.
    SuspectedErratum,
    /// Re-derived replacement for a suspected erratum.
    Corrected,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosedFormInfo {
    pub name: &'static str,
    pub provenance: Provenance,
    pub formula: &'static str,
}

pub fn closed_form_catalogue() -> Vec<ClosedFormInfo> {
    use Provenance::*;
    let entry = |name, provenance, formula| ClosedFormInfo {
        name,
        provenance,
        formula,
    };
    vec![
        entry("castelnuovo_count", Verbatim, "sum_a (-1)^a C(g+2e-d-2, a) C(g, e-a)"),
        entry(
            "castelnuovo_series",
            Verbatim,
            "((1+sqrt(1+4t))/2)^d ((-1-4t+(1+2t)sqrt(1+4t))/(2t^2))^(g-1)",
        ),
        entry("closed_a", Verbatim, "(-1)^(k-1)/k! (d+(k-1)g-k+1)"),
        entry(
            "closed_b_literal",
            SuspectedErratum,
            "(-1)^k/(k-1)! [(d+g-k+1)^2 - g(2-k)(2-k-(g-1)/2) - (4-k)(g-2)(2d+g-1)/2]",
        ),
        entry(
            "closed_b",
            Corrected,
            "(-1)^k/(k-1)! [(d+g-k+1)^2 - g(2-k)(2-k-(g-1)/2) - (4-k)g(2d+g-1)/2]",
        ),
        entry(
            "closed_s4",
            Verbatim,
            "C(d,4) - 3C(d,3) + C(d,2)(6-g) + 5d(g-2) + C(g,2) - 15g + 15",
        ),
        entry(
            "closed_c4",
            Verbatim,
            "C(d+g,4) - sum_{m<g} (C(d+g+m,3) - sum_{n<g} C(d+m+n,2))",
        ),
        entry("sigma1_coefficient_literal", SuspectedErratum, "(g-2)(2d+g-1)/2"),
        entry("sigma1_coefficient", Corrected, "g(2d+g-1)/2"),
        entry("hpsi_series", Verbatim, "((g-1)z-d+g-1) z e^(-z)"),
        entry("hphipsi0_literal_series", SuspectedErratum, "-(z^2/2+(2d-1)z+d^2) z e^(-z)"),
        entry("hphipsi0_series", Corrected, "-(z^2+(2d-1)z+d^2) z e^(-z)"),
        entry(
            "hphipsi_closed_series",
            Corrected,
            "((g-1) z^2 + (gd-2d-g+1) z - (d+g)^2 + g - g(g-1)/2 + 3g(2d+g-1)/2) z e^(-z)",
        ),
        entry(
            "hphipsi_literal_series",
            SuspectedErratum,
            "(B z^2 + C z + D) z e^(-z) with the printed B, C, D",
        ),
    ]
}

/// Number of `e`-secant `(e-2)`-planes: the alternating binomial sum.
pub fn castelnuovo_count(e: i64, d: i64, g: i64) -> Rational {
    let mut acc = Rational::zero();
    for a in 0..=e {
        acc += &(sign(a) * binom(g + 2 * e - d - 2, a) * binom(g, e - a));
    }
    acc
}

/// Generating function of [`castelnuovo_count`] in `t`, truncated at `order`.
pub fn castelnuovo_series(d: i64, g: i64, order: usize) -> Result<Series> {
    let root = Series::sqrt_one_plus(&rat(4), order + 2);
    let half = ratio(1, 2);
    let first = Series::one(order + 2).add(&root)?.scale_by(&half).truncate(order);
    let linear = Series::from_coeffs(vec![rat(-1), rat(-4)]).truncate(order + 2);
    let factor = Series::from_coeffs(vec![rat(1), rat(2)]).truncate(order + 2);
    let numerator = linear.add(&factor.mul(&root)?)?;
    let second = numerator.shift_down(2)?.scale_by(&half).truncate(order);
    first.pow(d)?.mul(&second.pow(g - 1)?)
}

/// `∫_{C^{[k]}} ch_k(L^{[k]})`.
pub fn closed_a(k: i64, g: i64, d: i64) -> Rational {
    sign(k - 1) * rat(d + (k - 1) * g - k + 1) / factorial::<Rational>(k as u32)
}

fn b_with(k: i64, g: i64, d: i64, sigma_factor: i64) -> Result<Rational> {
    if k < 2 {
        return Err(Error::InvalidProblem(format!(
            "closed form for c1*ch_(k-1) needs k >= 2, got {k}"
        )));
    }
    let (kk, gg, dd) = (rat(k), rat(g), rat(d));
    let base = rat(d + g - k + 1).pow_u32(2);
    let mid = gg.clone()
        * (rat(2) - kk.clone())
        * (rat(2) - kk.clone() - (gg.clone() - rat(1)) / rat(2));
    let tail = (rat(4) - kk) * rat(sigma_factor) * (rat(2) * dd + gg - rat(1)) / rat(2);
    let a = base - mid - tail;
    Ok(sign(k) * a / factorial::<Rational>(k as u32 - 1))
}

/// `∫_{C^{[k]}} c_1 ch_{k-1}` as printed, including the `(g-2)` factor.
pub fn closed_b_literal(k: i64, g: i64, d: i64) -> Result<Rational> {
    b_with(k, g, d, g - 2)
}

/// `∫_{C^{[k]}} c_1 ch_{k-1}` with the arithmetic-sum factor `g`.
pub fn closed_b(k: i64, g: i64, d: i64) -> Result<Rational> {
    b_with(k, g, d, g)
}

/// `∫_{C^{[4]}} s_4(L^{[4]})` as printed.
pub fn closed_s4(d: i64, g: i64) -> Rational {
    binom(d, 4) - rat(3) * binom(d, 3) + binom(d, 2) * rat(6 - g) + rat(5 * d * (g - 2)) + binom(g, 2)
        - rat(15 * g)
        + rat(15)
}

/// `∫_{C^{[4]}} c_4(L^{[4]})`.
pub fn closed_c4(d: i64, g: i64) -> Rational {
    let mut acc = binom(d + g, 4);
    for m in 0..g {
        let mut inner = binom(d + g + m, 3);
        for n in 0..g {
            inner -= &binom(d + m + n, 2);
        }
        acc -= &inner;
    }
    acc
}

/// z-coefficient of `Σ_{j<g} H_φ(g-j, d+j)`, i.e. `d + (d+1) + ... + (d+g-1)`.
pub fn sigma1_coefficient(g: i64, d: i64) -> Rational {
    ratio(g * (2 * d + g - 1), 2)
}

/// The same coefficient as printed.
pub fn sigma1_coefficient_literal(g: i64, d: i64) -> Rational {
    ratio((g - 2) * (2 * d + g - 1), 2)
}

// (c0 + c1 z + c2 z^2) z e^{-z}
fn quadratic_times_z_exp(c: [Rational; 3], order: usize) -> Series {
    Series::from_fn(order, |n| {
        let mut acc = Rational::zero();
        for (j, cj) in c.iter().enumerate() {
            if n > j {
                let p = (n - 1 - j) as i64;
                acc += &(cj.clone() * sign(p) / factorial::<Rational>(p as u32));
            }
        }
        acc
    })
}

/// `((g-1)z - d + g - 1) z e^{-z}`.
pub fn hpsi_series(g: i64, d: i64, order: usize) -> Series {
    quadratic_times_z_exp([rat(g - d - 1), rat(g - 1), rat(0)], order)
}

/// `-(z^2 + (2d-1)z + d^2) z e^{-z}`, whose `z^k` coefficient is
/// `(-1)^k (d-k+1)^2 / (k-1)!`.
pub fn hphipsi0_series(d: i64, order: usize) -> Series {
    quadratic_times_z_exp([rat(-d * d), rat(1 - 2 * d), rat(-1)], order)
}

/// `-(z^2/2 + (2d-1)z + d^2) z e^{-z}` as printed.
pub fn hphipsi0_literal_series(d: i64, order: usize) -> Series {
    quadratic_times_z_exp([rat(-d * d), rat(1 - 2 * d), ratio(-1, 2)], order)
}

/// `(B z^2 + C z + D) z e^{-z}` with `B`, `C`, `D` as printed.
pub fn hphipsi_literal_series(g: i64, d: i64, order: usize) -> Series {
    let (gg, dd) = (rat(g), rat(d));
    let common = rat(g - 2) * rat(2 * d + g - 1);
    let b = (gg.clone() - rat(1)) * (rat(1) - gg.clone() / rat(2)) + common.clone();
    let c = rat(g - 2 * d + 2) + common;
    let dc = -(dd + gg.clone()).pow_u32(2) + rat(4 * g) - gg.clone() * (gg - rat(1)) / rat(2);
    quadratic_times_z_exp([dc, c, b], order)
}


/// `(B z^2 + C z + D) z e^{-z}` resummed from [`closed_b`]: `B = g - 1`,
/// `C = gd - 2d - g + 1`, `D = -(d+g)^2 + g - g(g-1)/2 + 3g(2d+g-1)/2`.
/// Coefficients agree with [`closed_b`] for `k >= 2`.
pub fn hphipsi_closed_series(g: i64, d: i64, order: usize) -> Series {
    let s = rat(2 * d + g - 1);
    let b = rat(g - 1);
    let c = rat(g * d - 2 * d - g + 1);
    let dc = -rat(d + g).pow_u32(2) + rat(g) - ratio(g * (g - 1), 2) + rat(3 * g) * s / rat(2);
    quadratic_times_z_exp([dc, c, b], order)
}
