//! The verification suite: cross-route agreement, closed-form reproduction,
//! structural invariants, and a report on transcription discrepancies.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{binomial_general, fit_bivariate, rational_to_string};
use crate::engine::{
    castelnuovo_count, castelnuovo_series, closed_a, closed_b, closed_b_literal, closed_c4,
    closed_s4, defect_series, hphipsi0_literal_series, hphipsi_literal_series, hphipsi_series,
    segre_top_series, sigma1_coefficient_literal, Engine, Recursion,
};
use crate::error::Result;
use crate::secant::{count_f1, count_f2, count_f2_routes, f2_class_expression};
use crate::symfunc::{ssq_expansion, sshift_expansion};
use crate::{factorial, rat, Expr, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Fast,
    Full,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "fast" => Some(Suite::Fast),
            "full" => Some(Suite::Full),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub criterion: u8,
    pub description: &'static str,
    /// Soft checks are reported but do not fail the suite.
    pub hard: bool,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub id: &'static str,
    pub printed: String,
    pub engine: String,
    pub printed_consistent: bool,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub findings: Vec<Finding>,
}

fn binom(n: i64, k: i64) -> Rational {
    binomial_general(&rat(n), k)
}

fn s(v: &Rational) -> String {
    rational_to_string(v)
}

fn check(
    id: &'static str,
    criterion: u8,
    description: &'static str,
    hard: bool,
    body: impl FnOnce() -> Result<std::result::Result<String, String>>,
) -> Check {
    let (passed, detail) = match body() {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    Check {
        id,
        criterion,
        description,
        hard,
        passed,
        detail,
    }
}

struct Grids {
    f1_e: Vec<i64>,
    f1_span: i64,
    f1_g: i64,
    f2_e: Vec<i64>,
    f2_span: i64,
    f2_g: i64,
    pairs: usize,
}

fn grids(suite: Suite) -> Grids {
    match suite {
        Suite::Fast => Grids {
            f1_e: vec![2, 3, 4],
            f1_span: 4,
            f1_g: 2,
            f2_e: vec![4],
            f2_span: 4,
            f2_g: 2,
            pairs: 3,
        },
        Suite::Full => Grids {
            f1_e: (2..=6).collect(),
            f1_span: 8,
            f1_g: 5,
            f2_e: vec![4, 6],
            f2_span: 6,
            f2_g: 4,
            pairs: 10,
        },
    }
}

pub fn castelnuovo_agreement(engine: &Engine, suite: Suite) -> Check {
    let gr = grids(suite);
    check(
        "castelnuovo-three-way",
        1,
        "Castelnuovo sum = generating-series coefficient = engine integral of s_e of the dual",
        true,
        || {
            let mut n = 0;
            for &e in &gr.f1_e {
                for g in 0..=gr.f1_g {
                    for d in e..=e + gr.f1_span {
                        let sum = castelnuovo_count(e, d, g);
                        let series = castelnuovo_series(d, g, e as usize)?.coeff(e as usize);
                        let integral = count_f1(engine, e, d, g)?;
                        if sum != series || sum != integral {
                            return Ok(Err(format!(
                                "e={e} d={d} g={g}: sum {} series {} engine {}",
                                s(&sum),
                                s(&series),
                                s(&integral)
                            )));
                        }
                        n += 1;
                    }
                }
            }
            Ok(Ok(format!("{n} points")))
        },
    )
}

pub fn f2_route_agreement(engine: &Engine, suite: Suite) -> Check {
    let gr = grids(suite);
    check(
        "f2-route-agreement",
        2,
        "determinant route and Chern-character route of the f=2 count agree",
        true,
        || {
            let mut n = 0;
            for &e in &gr.f2_e {
                for g in 0..=gr.f2_g {
                    for d in e..=e + gr.f2_span {
                        let routes = count_f2_routes(engine, e, d, g)?;
                        if routes[0].value != routes[1].value {
                            return Ok(Err(format!(
                                "e={e} d={d} g={g}: {} vs {}",
                                s(&routes[0].value),
                                s(&routes[1].value)
                            )));
                        }
                        n += 1;
                    }
                }
            }
            Ok(Ok(format!("{n} points")))
        },
    )
}

pub fn genus_zero_forms(engine: &Engine) -> Check {
    check(
        "genus-zero-closed-forms",
        3,
        "genus-0 counts match binomial closed forms for d in 4..=14",
        true,
        || {
            for d in 4..=14 {
                for e in 2..=6 {
                    let v = count_f1(engine, e, d, 0)?;
                    if v != binom(d - e + 1, e) {
                        return Ok(Err(format!("f=1 e={e} d={d}: {}", s(&v))));
                    }
                }
                let v = count_f2(engine, 4, d, 0)?;
                let expected = binom(d - 3, 2) * binom(d - 3, 2) - binom(d - 3, 1) * binom(d - 3, 3);
                if v != expected {
                    return Ok(Err(format!("f=2 e=4 d={d}: {} vs {}", s(&v), s(&expected))));
                }
            }
            let six = count_f2(engine, 4, 6, 0)?;
            let zero = count_f2(engine, 4, 4, 0)?;
            if six != rat(6) || zero != rat(0) {
                return Ok(Err(format!("count(4,6,0)={} count(4,4,0)={}", s(&six), s(&zero))));
            }
            Ok(Ok("count(4,6,0)=6, count(4,4,0)=0".into()))
        },
    )
}

pub fn closed_forms(engine: &Engine) -> Check {
    check(
        "closed-form-reproduction",
        4,
        "engine reproduces a_k (k<=6), b_4, the s_4 display, C_4, and H_phipsi(0,d) coefficients (k>=2)",
        true,
        || {
            for k in 2..=6u32 {
                for g in 0..=5 {
                    for d in 0..=10 {
                        let v = engine.integral(&Expr::ch(k), k, d, g)?;
                        if v != closed_a(k as i64, g, d) {
                            return Ok(Err(format!("a_{k} at d={d} g={g}: {}", s(&v))));
                        }
                    }
                }
            }
            let c1ch3 = Expr::chern(1) * Expr::ch(3);
            for g in 0..=5 {
                for d in 4..=10 {
                    let b4 = engine.integral(&c1ch3, 4, d, g)?;
                    let printed = Rational::new(((d + g - 3).pow(2) - 4 * g - g * (g - 1)).into(), 6.into());
                    if b4 != printed {
                        return Ok(Err(format!("b_4 at d={d} g={g}: {} vs {}", s(&b4), s(&printed))));
                    }
                    let s4 = engine.integral(&Expr::segre(4), 4, d, g)?;
                    if s4 != closed_s4(d, g) {
                        return Ok(Err(format!("s_4 at d={d} g={g}: {}", s(&s4))));
                    }
                    let c4 = engine.integral(&Expr::chern(4), 4, d, g)?;
                    if c4 != closed_c4(d, g) {
                        return Ok(Err(format!("c_4 at d={d} g={g}: {}", s(&c4))));
                    }
                }
            }
            for d in 0..=10 {
                let h = hphipsi_series(engine, d, 0, 8)?;
                for k in 2..=8i64 {
                    let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
                    let expected = sign * rat((d - k + 1).pow(2)) / factorial::<Rational>(k as u32 - 1);
                    if h.coeff(k as usize) != expected {
                        return Ok(Err(format!("H_phipsi(0,{d}) z^{k}: {}", s(&h.coeff(k as usize)))));
                    }
                }
            }
            Ok(Ok("all closed forms reproduced".into()))
        },
    )
}

pub fn four_term_identity(engine: &Engine, suite: Suite) -> Check {
    let gr = grids(suite);
    check(
        "four-secant-identity",
        5,
        "s2^2 - s1*s3 = c4 + s4 - 6*c1*ch3 symbolically and after integration",
        true,
        || {
            let lhs = Expr::parse("s2^2 - s1*s3")?;
            let rhs = Expr::parse("c4 + s4 - 6*c1*ch3")?;
            if lhs.to_chern_basis() != rhs.to_chern_basis() {
                return Ok(Err(format!(
                    "symbolic: {} vs {}",
                    lhs.to_chern_basis(),
                    rhs.to_chern_basis()
                )));
            }
            let c1ch3 = Expr::chern(1) * Expr::ch(3);
            let mut n = 0;
            for g in 0..=gr.f2_g {
                for d in 4..=4 + gr.f2_span {
                    let count = count_f2(engine, 4, d, g)?;
                    let parts = engine.integral(&Expr::chern(4), 4, d, g)?
                        + engine.integral(&Expr::segre(4), 4, d, g)?
                        - rat(6) * engine.integral(&c1ch3, 4, d, g)?;
                    if count != parts {
                        return Ok(Err(format!("d={d} g={g}: {} vs {}", s(&count), s(&parts))));
                    }
                    n += 1;
                }
            }
            Ok(Ok(format!("symbolic identity and {n} integrated points")))
        },
    )
}

fn random_pairs(count: usize, seed: u64) -> Vec<((i64, i64), (i64, i64))> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (
                (rng.gen_range(-4..=12), rng.gen_range(0..=4)),
                (rng.gen_range(-4..=12), rng.gen_range(0..=4)),
            )
        })
        .collect()
}

pub fn structure_invariants(engine: &Engine, suite: Suite) -> Check {
    let gr = grids(suite);
    check(
        "structure-invariants",
        6,
        "top-Segre series is multiplicative and the c1/ch defect series additive over disjoint unions (order 6)",
        true,
        || {
            for ((d1, g1), (d2, g2)) in random_pairs(gr.pairs, 0x5ec4) {
                let (d, g) = (d1 + d2, g1 + g2 - 1);
                let t = segre_top_series(engine, d, g, 6)?;
                let product = segre_top_series(engine, d1, g1, 6)?.mul(&segre_top_series(engine, d2, g2, 6)?)?;
                if t != product {
                    return Ok(Err(format!("T not multiplicative at ({d1},{g1}) + ({d2},{g2})")));
                }
                let defect = defect_series(engine, d, g, 6)?;
                let sum = defect_series(engine, d1, g1, 6)?.add(&defect_series(engine, d2, g2, 6)?)?;
                if defect != sum {
                    return Ok(Err(format!("D not additive at ({d1},{g1}) + ({d2},{g2})")));
                }
            }
            let mut samples = Vec::new();
            for g in 0..=3 {
                for d in 0..=3 {
                    samples.push(((d, g), defect_series(engine, d, g, 6)?));
                }
            }
            for k in 0..=6 {
                let pts: Vec<_> = samples
                    .iter()
                    .map(|((d, g), series)| ((rat(*d), rat(*g)), series.coeff(k)))
                    .collect();
                let p = fit_bivariate(&pts, 1)?;
                if p.coeff(0, 1) != -p.coeff(0, 0) {
                    return Ok(Err(format!("D coefficient z^{k} is not of the form a*d + b*(2-2g)")));
                }
            }
            Ok(Ok(format!("{} random pairs; defect linear in d and 2-2g", gr.pairs)))
        },
    )
}

pub fn self_validation(engine: &Engine) -> Check {
    check(
        "interpolation-self-validation",
        7,
        "every universal integral verified on at least 3 held-out points; recursion route agrees",
        true,
        || {
            let probes = ["c1*ch3", "s2^2 - s1*s3", "c2*s2", "ch1*ch2"];
            let mut rec = Recursion::new();
            for text in probes {
                let expr = Expr::parse(text)?;
                let k = expr.weight().unwrap_or(0);
                let u = engine.universal(&expr, k)?;
                for g in 0..=3 {
                    for d in -4..=8 {
                        let via = rec.integral(&expr, k, g, d)?;
                        if u.eval(d, g) != via {
                            return Ok(Err(format!("{text} at d={d} g={g}: universal vs recursion")));
                        }
                    }
                }
            }
            let entries = engine.entries();
            if let Some(u) = entries.iter().find(|u| u.witness().held_out.len() < 3) {
                return Ok(Err(format!("{} has only {} held-out points", u.expr(), u.witness().held_out.len())));
            }
            Ok(Ok(format!("{} cached integrals, each with >= 3 held-out points", entries.len())))
        },
    )
}

/// Discrepancies between printed formulas and the engine.
pub fn findings(engine: &Engine) -> Result<Vec<Finding>> {
    let mut out = Vec::new();

    // Σ₁: z-coefficient of Σ_{j<g} H_φ(g-j, d+j), compared as a multiple of (2d+g-1)/2.
    let mut factor_is_g = true;
    let mut factor_is_g_minus_2 = true;
    for g in 1..=5 {
        for d in 0..=6 {
            let mut sum = Rational::from_integer(0.into());
            for j in 0..g {
                sum += engine.integral(&Expr::chern(1), 1, d + j, g - j)?;
            }
            let unit = Rational::new((2 * d + g - 1).into(), 2.into());
            factor_is_g &= sum == rat(g) * unit.clone();
            factor_is_g_minus_2 &= sum == sigma1_coefficient_literal(g, d);
        }
    }
    out.push(Finding {
        id: "sigma1-coefficient",
        printed: "(g-2)(2d+g-1)/2".into(),
        engine: if factor_is_g { "g(2d+g-1)/2".into() } else { "neither g nor g-2".into() },
        printed_consistent: factor_is_g_minus_2,
        note: "the arithmetic sum d + (d+1) + ... + (d+g-1) has factor g".into(),
    });

    let mut literal_ok = true;
    let mut corrected_ok = true;
    let mut k4_ok = true;
    for k in 2..=6u32 {
        let expr = Expr::chern(1) * Expr::ch(k - 1);
        for g in 0..=4 {
            for d in 0..=8 {
                let v = engine.integral(&expr, k, d, g)?;
                let lit = closed_b_literal(k as i64, g, d)?;
                literal_ok &= v == lit;
                corrected_ok &= v == closed_b(k as i64, g, d)?;
                if k == 4 {
                    k4_ok &= v == lit;
                }
            }
        }
    }
    out.push(Finding {
        id: "closed-form-b",
        printed: "A(k,g,d) with (4-k)(g-2)(2d+g-1)/2".into(),
        engine: if corrected_ok {
            "A(k,g,d) with (4-k)g(2d+g-1)/2, k=2..6".into()
        } else {
            "neither form".into()
        },
        printed_consistent: literal_ok,
        note: format!(
            "k=4 specialisation (1/6)((d+g-3)^2-4g-g(g-1)) {} by the discrepancy",
            if k4_ok { "is unaffected" } else { "is affected" }
        ),
    });

    let mut series_ok = true;
    for d in 0..=6 {
        let engine_series = hphipsi_series(engine, d, 0, 8)?;
        let printed = hphipsi0_literal_series(d, 8);
        for k in 2..=8 {
            series_ok &= engine_series.coeff(k) == printed.coeff(k);
        }
    }
    out.push(Finding {
        id: "hphipsi-genus-zero-series",
        printed: "-(z^2/2+(2d-1)z+d^2) z e^(-z)".into(),
        engine: "-(z^2+(2d-1)z+d^2) z e^(-z)".into(),
        printed_consistent: series_ok,
        note: "the printed coefficient formula (-1)^k (d-k+1)^2/(k-1)! is correct; the series solving for it is not".into(),
    });

    let mut prop_ok = true;
    for g in 0..=3 {
        for d in 0..=5 {
            let engine_series = hphipsi_series(engine, d, g, 8)?;
            let printed = hphipsi_literal_series(g, d, 8);
            for k in 2..=8 {
                prop_ok &= engine_series.coeff(k) == printed.coeff(k);
            }
        }
    }
    out.push(Finding {
        id: "hphipsi-generating-function",
        printed: "(B z^2 + C z + D) z e^(-z), printed B, C, D".into(),
        engine: "B = g-1, C = gd-2d-g+1, D = -(d+g)^2 + g - g(g-1)/2 + 3g(2d+g-1)/2 (k >= 2)".into(),
        printed_consistent: prop_ok,
        note: "compared on coefficients z^2..z^8".into(),
    });

    let mut c4_ok = true;
    for g in 0..=5 {
        for d in 0..=10 {
            c4_ok &= engine.integral(&Expr::chern(4), 4, d, g)? == closed_c4(d, g);
        }
    }
    out.push(Finding {
        id: "c4-closed-form",
        printed: "C(d+g,4) - sum_{m<g} (C(d+g+m,3) - sum_{n<g} C(d+m+n,2))".into(),
        engine: "same values on d in 0..=10, g in 0..=5".into(),
        printed_consistent: c4_ok,
        note: "index ranges confirmed as printed".into(),
    });

    let (d, g) = (6, 0);
    let literal = ssq_expansion::<Rational>(2) - sshift_expansion::<Rational>(2);
    let mut literal_value = Rational::from_integer(0.into());
    for (m, c) in literal.terms() {
        literal_value += &(engine.integral(&Expr::term(m.clone(), rat(1)), 4, d, g)? * c);
    }
    let true_value = engine.integral(&f2_class_expression(4)?, 4, d, g)?;
    out.push(Finding {
        id: "hadamard-square",
        printed: "s_t * s_t = exp(sum t^n/n (n!)^2 ch_n^2)".into(),
        engine: format!(
            "at e=4, d=6, g=0 the printed expansion integrates to {} while the count is {}",
            s(&literal_value),
            s(&true_value)
        ),
        printed_consistent: literal_value == true_value,
        note: "the right-hand side is the Cauchy sum over all Schur squares; it equals s_n^2 only in rank one".into(),
    });
    Ok(out)
}

pub fn erratum_report(engine: &Engine) -> Check {
    check(
        "sigma1-erratum",
        8,
        "sigma-1 coefficient and the c1*ch_(k-1) closed form adjudicated against the engine (soft)",
        false,
        || {
            let f = findings(engine)?;
            let sigma = &f[0];
            let a = &f[1];
            let text = format!(
                "sigma1: printed (g-2) {}, engine {}; A(k,g,d): printed {}, {}",
                if sigma.printed_consistent { "consistent" } else { "inconsistent" },
                sigma.engine,
                if a.printed_consistent { "consistent" } else { "inconsistent" },
                a.note
            );
            Ok(if sigma.engine.starts_with("g(") && a.note.contains("unaffected") {
                Ok(text)
            } else {
                Err(text)
            })
        },
    )
}

/// Runs every check in criterion order and collects the findings.
pub fn run_suite(engine: &Engine, suite: Suite) -> Report {
    let checks = vec![
        castelnuovo_agreement(engine, suite),
        f2_route_agreement(engine, suite),
        genus_zero_forms(engine),
        closed_forms(engine),
        four_term_identity(engine, suite),
        structure_invariants(engine, suite),
        self_validation(engine),
        erratum_report(engine),
    ];
    let findings = findings(engine).unwrap_or_default();
    Report {
        suite,
        passed: checks.iter().all(|c| c.passed || !c.hard),
        checks,
        findings,
    }
}
