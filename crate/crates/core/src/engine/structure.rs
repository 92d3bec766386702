//! Generating series in `z` assembled from universal integrals, used to test
//! the multiplicative and additive structure over disjoint unions.

use num_traits::{One, Zero};

use super::Engine;
use crate::error::Result;
use crate::{Expr, Rational, Series};

/// `Σ_k z^k ∫_{C^{[k]}} s_k((L^{[k]})^∨)`.
pub fn segre_top_series(engine: &Engine, d: i64, g: i64, order: usize) -> Result<Series> {
    let mut coeffs = vec![Rational::one()];
    for k in 1..=order as u32 {
        coeffs.push(engine.integral(&Expr::segre(k).dualized(), k, d, g)?);
    }
    Ok(Series::from_coeffs(coeffs))
}

/// `Σ_k z^k ∫_{C^{[k]}} c_1`; only `k = 1` contributes.
pub fn hphi_series(engine: &Engine, d: i64, g: i64, order: usize) -> Result<Series> {
    let c1 = engine.integral(&Expr::chern(1), 1, d, g)?;
    Ok(Series::monomial(c1, 1, order))
}

/// `Σ_k z^k ∫_{C^{[k]}} ch_k`, with the rank-zero value at `k = 0`.
pub fn ch_series(engine: &Engine, d: i64, g: i64, order: usize) -> Result<Series> {
    let mut coeffs = vec![Rational::zero()];
    for k in 1..=order as u32 {
        coeffs.push(engine.integral(&Expr::ch(k), k, d, g)?);
    }
    Ok(Series::from_coeffs(coeffs))
}

/// `Σ_{k≥1} z^k ∫_{C^{[k-1]}} ch_{k-1}`: [`ch_series`] shifted up by one.
pub fn hpsi_engine_series(engine: &Engine, d: i64, g: i64, order: usize) -> Result<Series> {
    Ok(ch_series(engine, d, g, order)?.shift_up(1))
}

/// `Σ_{k≥1} z^k ∫_{C^{[k]}} c_1 ch_{k-1}`, where `ch_0` is the rank.
pub fn hphipsi_series(engine: &Engine, d: i64, g: i64, order: usize) -> Result<Series> {
    let mut coeffs = vec![Rational::zero()];
    for k in 1..=order as u32 {
        let expr = if k == 1 {
            Expr::chern(1)
        } else {
            Expr::chern(1) * Expr::ch(k - 1)
        };
        coeffs.push(engine.integral(&expr, k, d, g)?);
    }
    Ok(Series::from_coeffs(coeffs))
}

/// `H_{φψ} - H_φ · F` with `F` = [`ch_series`]: the mixed second derivative of
/// `log Σ_k z^k ∫ exp(s c_1 + t ch)`, hence additive over disjoint unions.
pub fn defect_series(engine: &Engine, d: i64, g: i64, order: usize) -> Result<Series> {
    let joint = hphipsi_series(engine, d, g, order)?;
    let product = hphi_series(engine, d, g, order)?.mul(&ch_series(engine, d, g, order)?)?;
    joint.sub(&product)
}
