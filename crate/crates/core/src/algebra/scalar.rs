use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A commutative ring with unit.
///
/// Implemented automatically for anything with the right operator set, so
/// the scalar fields, cohomology classes and symbolic expressions all qualify.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out *= other;
        out
    }

    fn pow_u32(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + for<'a> MulAssign<&'a T>
{
}

/// A field of characteristic zero that integers embed into.
pub trait Scalar: Ring + Div<Output = Self> + for<'a> DivAssign<&'a Self> {
    fn from_int(n: i64) -> Self;

    fn from_frac(p: i64, q: i64) -> Self {
        Self::from_int(p) / Self::from_int(q)
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_frac(p: i64, q: i64) -> Self {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }
}

impl Scalar for Ratio<i128> {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n as i128)
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }
}

impl Scalar for f32 {
    fn from_int(n: i64) -> Self {
        n as f32
    }
}

/// A ring containing a copy of some scalar field, i.e. a `Scalar`-algebra.
pub trait Algebra: Ring {
    type Scalar: Scalar;

    fn from_scalar(s: Self::Scalar) -> Self;

    fn scale(&self, s: &Self::Scalar) -> Self;
}

macro_rules! self_algebra {
    ($($t:ty),*) => {$(
        impl Algebra for $t {
            type Scalar = $t;

            fn from_scalar(s: $t) -> $t {
                s
            }

            fn scale(&self, s: &$t) -> $t {
                self.mul_ref(s)
            }
        }
    )*};
}

self_algebra!(BigRational, Ratio<i128>, f64, f32);

/// Canonical text: `p/q` in lowest terms, or `p` when the denominator is one.
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let err = |reason: &str| Error::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| err("bad numerator"))?;
            let q = BigInt::from_str(q.trim()).map_err(|_| err("bad denominator"))?;
            if q.is_zero() {
                return Err(err("zero denominator"));
            }
            Ok(BigRational::new(p, q))
        }
        None => BigInt::from_str(s)
            .map(BigRational::from_integer)
            .map_err(|_| err("bad integer")),
    }
}
