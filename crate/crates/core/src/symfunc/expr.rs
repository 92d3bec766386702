use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::vector::{ch_to_chern, chern_to_segre, GradedClassVector};
use crate::algebra::{parse_rational, Algebra, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKind {
    Chern,
    Segre,
    Ch,
}

impl ClassKind {
    pub fn name(self) -> &'static str {
        match self {
            ClassKind::Chern => "chern",
            ClassKind::Segre => "segre",
            ClassKind::Ch => "ch",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            ClassKind::Chern => "c",
            ClassKind::Segre => "s",
            ClassKind::Ch => "ch",
        }
    }
}

/// `c_i`, `s_i` or `ch_i` of the tautological bundle, `i >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub kind: ClassKind,
    pub degree: u32,
}

impl Generator {
    pub fn new(kind: ClassKind, degree: u32) -> Self {
        assert!(degree >= 1, "generators live in positive degree");
        Self { kind, degree }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.symbol(), self.degree)
    }
}

/// Product of generator powers, kept sorted with positive exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Generator, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn power(g: Generator, exp: u32) -> Self {
        if exp == 0 {
            Self::one()
        } else {
            Self(vec![(g, exp)])
        }
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Generator, u32)>) -> Self {
        let mut map: BTreeMap<Generator, u32> = BTreeMap::new();
        for (g, e) in factors {
            *map.entry(g).or_default() += e;
        }
        Self(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|(g, e)| g.degree * e).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_factors(self.0.iter().chain(&other.0).copied())
    }

    pub fn kinds(&self) -> impl Iterator<Item = ClassKind> + '_ {
        self.0.iter().map(|(g, _)| g.kind)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, (g, e)) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial in the generators `c_i, s_i, ch_i` of a single bundle.
///
/// Integrands are homogeneous: every monomial has the same weight, where a
/// generator of degree `i` weighs `i`. Arithmetic does not enforce this, so
/// intermediate results may mix weights; [`ClassExpr::weight`] reports it.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassExpr<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> ClassExpr<S> {
    pub fn constant(c: S) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(Monomial::power(g, 1), S::one())
    }

    pub fn chern(i: u32) -> Self {
        Self::generator(Generator::new(ClassKind::Chern, i))
    }

    pub fn segre(i: u32) -> Self {
        Self::generator(Generator::new(ClassKind::Segre, i))
    }

    pub fn ch(i: u32) -> Self {
        Self::generator(Generator::new(ClassKind::Ch, i))
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, S> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common weight of all monomials; `None` when empty or mixed.
    pub fn weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(Monomial::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// True when every monomial has weight `k` (vacuously for zero).
    pub fn has_weight(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == k)
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(g, _)| g.degree))
            .max()
            .unwrap_or(0)
    }

    pub fn uses_kind(&self, kind: ClassKind) -> bool {
        self.terms.keys().any(|m| m.kinds().any(|k| k == kind))
    }

    fn add_term(&mut self, m: Monomial, c: &S) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                v.is_zero()
            }
            None => {
                self.terms.insert(m, c.clone());
                false
            }
        };
        if remove {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Substitutes a ring element for every generator.
    pub fn eval<R: Algebra<Scalar = S>>(&self, mut lookup: impl FnMut(Generator) -> R) -> R {
        let mut powers: HashMap<Generator, Vec<R>> = HashMap::new();
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut prod: Option<R> = None;
            for &(g, e) in m.factors() {
                let table = powers.entry(g).or_insert_with(|| vec![R::one(), lookup(g)]);
                while table.len() <= e as usize {
                    let next = table[table.len() - 1].mul_ref(&table[1]);
                    table.push(next);
                }
                let p = &table[e as usize];
                prod = Some(match prod {
                    None => p.clone(),
                    Some(x) => x.mul_ref(p),
                });
            }
            let value = match prod {
                None => R::from_scalar(c.clone()),
                Some(x) => x.scale(c),
            };
            acc += &value;
        }
        acc
    }

    /// Rewrites Chern and Segre generators as polynomials in Chern characters.
    ///
    /// Newton's identities never involve the rank, so the result is valid for
    /// a bundle of any rank.
    pub fn to_ch_basis(&self) -> Self {
        let cap = self.max_generator_degree() as usize;
        if !self.uses_kind(ClassKind::Chern) && !self.uses_kind(ClassKind::Segre) {
            return self.clone();
        }
        let mut ch_entries = vec![Self::zero()];
        ch_entries.extend((1..=cap as u32).map(Self::ch));
        let ch = GradedClassVector::new(ClassKind::Ch, ch_entries);
        let chern = ch_to_chern(&ch).expect("kind is ch");
        let segre = chern_to_segre(&chern).expect("kind is chern");
        self.eval(|g| match g.kind {
            ClassKind::Chern => chern.get(g.degree as usize),
            ClassKind::Segre => segre.get(g.degree as usize),
            ClassKind::Ch => Self::generator(g),
        })
    }

    /// Rewrites every generator in terms of Chern classes.
    pub fn to_chern_basis(&self) -> Self {
        let cap = self.max_generator_degree() as usize;
        let chern = GradedClassVector::with_unit(
            ClassKind::Chern,
            (1..=cap as u32).map(Self::chern).collect(),
        );
        let segre = chern_to_segre(&chern).expect("kind is chern");
        let ch = super::vector::chern_to_ch(&chern, S::zero()).expect("kind is chern");
        self.eval(|g| match g.kind {
            ClassKind::Chern => Self::generator(g),
            ClassKind::Segre => segre.get(g.degree as usize),
            ClassKind::Ch => ch.get(g.degree as usize),
        })
    }

    /// Replaces each generator of degree `i` by `(-1)^i` times itself: the
    /// same expression for the dual bundle.
    pub fn dualized(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let odd = m
                .factors()
                .iter()
                .map(|(g, e)| g.degree * e)
                .sum::<u32>()
                % 2
                == 1;
            let c = if odd { -c.clone() } else { c.clone() };
            out.add_term(m.clone(), &c);
        }
        out
    }
}

impl ClassExpr<BigRational> {
    /// Parses the canonical text form, e.g. `1/2*ch1^4 + 2*ch2^2` or `c1*ch3`.
    pub fn parse(input: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(err("empty expression"));
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in text.chars().enumerate() {
            if (ch == '+' || ch == '-') && !current.ends_with('^') {
                if i > 0 {
                    if current.is_empty() {
                        return Err(err("dangling sign"));
                    }
                    pieces.push((negative, std::mem::take(&mut current)));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(err("dangling sign"));
        }
        pieces.push((negative, current));

        let mut out = Self::zero();
        for (neg, piece) in pieces {
            let mut coeff = BigRational::one();
            let mut factors = Vec::new();
            for (n, tok) in piece.split('*').enumerate() {
                if tok.is_empty() {
                    return Err(err("empty factor"));
                }
                if tok.starts_with(|c: char| c.is_ascii_digit()) {
                    if n > 0 {
                        return Err(err("coefficient must come first"));
                    }
                    coeff = parse_rational(tok)?;
                    continue;
                }
                factors.push(parse_factor(tok).ok_or_else(|| err(&format!("bad factor {tok:?}")))?);
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(Monomial::from_factors(factors), &coeff);
        }
        Ok(out)
    }
}

fn parse_factor(tok: &str) -> Option<(Generator, u32)> {
    let (kind, rest) = if let Some(r) = tok.strip_prefix("ch") {
        (ClassKind::Ch, r)
    } else if let Some(r) = tok.strip_prefix('c') {
        (ClassKind::Chern, r)
    } else {
        let r = tok.strip_prefix('s')?;
        (ClassKind::Segre, r)
    };
    let (deg, exp) = match rest.split_once('^') {
        Some((d, e)) => (d.parse::<u32>().ok()?, e.parse::<u32>().ok()?),
        None => (rest.parse::<u32>().ok()?, 1),
    };
    (deg >= 1 && exp >= 1).then(|| (Generator::new(kind, deg), exp))
}

impl<S: Scalar + fmt::Display + PartialOrd> fmt::Display for ClassExpr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let negative = *c < S::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> Zero for ClassExpr<S> {
    fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Scalar> One for ClassExpr<S> {
    fn one() -> Self {
        Self::constant(S::one())
    }
}

impl<'a, S: Scalar> AddAssign<&'a ClassExpr<S>> for ClassExpr<S> {
    fn add_assign(&mut self, rhs: &'a ClassExpr<S>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl<'a, S: Scalar> SubAssign<&'a ClassExpr<S>> for ClassExpr<S> {
    fn sub_assign(&mut self, rhs: &'a ClassExpr<S>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c.clone());
        }
    }
}

impl<'a, S: Scalar> MulAssign<&'a ClassExpr<S>> for ClassExpr<S> {
    fn mul_assign(&mut self, rhs: &'a ClassExpr<S>) {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1.clone() * c2.clone()));
            }
        }
        *self = out;
    }
}

impl<S: Scalar> Add for ClassExpr<S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<S: Scalar> Sub for ClassExpr<S> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<S: Scalar> Mul for ClassExpr<S> {
    type Output = Self;
    fn mul(mut self, rhs: Self) -> Self {
        self *= &rhs;
        self
    }
}

impl<S: Scalar> Neg for ClassExpr<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<S: Scalar> Algebra for ClassExpr<S> {
    type Scalar = S;

    fn from_scalar(s: S) -> Self {
        Self::constant(s)
    }

    fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;
    use crate::{rat, ratio, Expr};

    #[test]
    fn canonical_text_and_parse() {
        let e = Expr::ch(1).pow_u32(4).scale(&ratio(1, 2)) + Expr::ch(2).pow_u32(2).scale(&rat(2));
        assert_eq!(e.to_string(), "1/2*ch1^4 + 2*ch2^2");
        assert_eq!(Expr::parse(&e.to_string()).unwrap(), e);
        let f = Expr::chern(1) * Expr::ch(3) - Expr::segre(2).scale(&ratio(3, 4)) + Expr::one();
        assert_eq!(f.to_string(), "1 + c1*ch3 - 3/4*s2");
        assert_eq!(Expr::parse(&f.to_string()).unwrap(), f);
        assert_eq!(Expr::parse("-c2^2*c1").unwrap(), -(Expr::chern(2).pow_u32(2) * Expr::chern(1)));
        assert_eq!(Expr::zero().to_string(), "0");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "c0", "x1", "c1*", "c1 + ", "c1*2", "ch", "s2^0"] {
            assert!(Expr::parse(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn weights() {
        assert_eq!((Expr::chern(1) * Expr::ch(3)).weight(), Some(4));
        assert_eq!((Expr::chern(1) + Expr::chern(2)).weight(), None);
        assert_eq!(Expr::zero().weight(), None);
        assert!(Expr::zero().has_weight(3));
    }

    #[test]
    fn ch_basis_of_low_classes() {
        // c_2 = ch_1^2/2 - ch_2, s_1 = -ch_1
        let c2 = Expr::chern(2).to_ch_basis();
        assert_eq!(c2, Expr::ch(1).pow_u32(2).scale(&ratio(1, 2)) - Expr::ch(2));
        assert_eq!(Expr::segre(1).to_ch_basis(), -Expr::ch(1));
        // round trip through the Chern basis
        let e = Expr::parse("s2^2 - s1*s3").unwrap();
        assert_eq!(e.to_ch_basis().to_chern_basis(), e.to_chern_basis());
    }

    #[test]
    fn dual_flips_odd_monomials() {
        let e = Expr::parse("s1*s3 + c1 + ch2").unwrap();
        assert_eq!(e.dualized(), Expr::parse("s1*s3 - c1 + ch2").unwrap());
    }
}
