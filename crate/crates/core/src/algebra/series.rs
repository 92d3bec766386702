use super::{binomial_general, Algebra, Ring, Scalar};
use crate::error::{Error, Result};

/// Truncated univariate power series `sum_{i<=order} a_i z^i`.
///
/// Binary operations insist on equal orders; use [`PowerSeries::truncate`]
/// or [`PowerSeries::mul_truncated`] to combine series of different length.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> PowerSeries<T> {
    /// Panics on an empty coefficient list.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least one coefficient");
        Self { coeffs }
    }

    /// Builds a series from the first `order + 1` values of `f`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        Self::from_coeffs((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| T::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(T::one(), 0, order)
    }

    /// `c z^power`, truncated.
    pub fn monomial(c: T, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^i`; zero beyond the truncation order.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Keeps coefficients up to `order`, padding with zeros if needed.
    pub fn truncate(&self, order: usize) -> Self {
        Self::from_fn(order, |i| self.coeff(i))
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order(), |i| {
            self.coeffs[i].clone() + other.coeffs[i].clone()
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order(), |i| {
            self.coeffs[i].clone() - other.coeffs[i].clone()
        }))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order(), |i| -self.coeffs[i].clone())
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale_by(&self, c: &T) -> Self {
        Self::from_fn(self.order(), |i| self.coeffs[i].mul_ref(c))
    }

    /// Cauchy product. Orders must agree.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.cauchy(other, self.order()))
    }

    /// Cauchy product truncated to the smaller of the two orders.
    pub fn mul_truncated(&self, other: &Self) -> Self {
        self.cauchy(other, self.order().min(other.order()))
    }

    fn cauchy(&self, other: &Self, order: usize) -> Self {
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += &a.mul_ref(b);
                }
            }
        }
        Self::from_coeffs(out)
    }

    /// Coefficient-wise product `sum a_i b_i z^i`.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order(), |i| {
            self.coeffs[i].mul_ref(&other.coeffs[i])
        }))
    }

    /// Multiplies by `z^n`, dropping what falls past the order.
    pub fn shift_up(&self, n: usize) -> Self {
        Self::from_fn(self.order(), |i| {
            if i >= n {
                self.coeffs[i - n].clone()
            } else {
                T::zero()
            }
        })
    }

    /// Divides by `z^n`; the low `n` coefficients must vanish. The order drops by `n`.
    pub fn shift_down(&self, n: usize) -> Result<Self> {
        if self.coeffs.iter().take(n).any(|c| !c.is_zero()) || n > self.order() {
            return Err(Error::NonzeroConstantTerm);
        }
        Ok(Self::from_coeffs(self.coeffs[n..].to_vec()))
    }
}

impl<T: Algebra> PowerSeries<T> {
    /// `exp(a)` for `a` with zero constant term, via `n e_n = sum_k k a_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut out: Vec<T> = Vec::with_capacity(order + 1);
        out.push(T::one());
        for n in 1..=order {
            let mut acc = T::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let term = self.coeffs[k]
                    .mul_ref(&out[n - k])
                    .scale(&T::Scalar::from_int(k as i64));
                acc += &term;
            }
            out.push(acc.scale(&T::Scalar::from_frac(1, n as i64)));
        }
        Ok(Self::from_coeffs(out))
    }

    /// Derivative, keeping the order (the top coefficient becomes zero).
    pub fn derivative(&self) -> Self {
        Self::from_fn(self.order(), |i| {
            if i < self.order() {
                self.coeffs[i + 1].scale(&T::Scalar::from_int(i as i64 + 1))
            } else {
                T::zero()
            }
        })
    }

    /// Antiderivative with zero constant term; the top coefficient is lost.
    pub fn integral(&self) -> Self {
        Self::from_fn(self.order(), |i| {
            if i == 0 {
                T::zero()
            } else {
                self.coeffs[i - 1].scale(&T::Scalar::from_frac(1, i as i64))
            }
        })
    }
}

impl<S: Scalar + Algebra<Scalar = S>> PowerSeries<S> {
    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = S::one() / c0.clone();
        let mut out: Vec<S> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = S::zero();
            for k in 1..=n {
                acc += &self.coeffs[k].mul_ref(&out[n - k]);
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(Self::from_coeffs(out))
    }

    /// `log(a)` for `a` with constant term one.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != S::one() {
            return Err(Error::NotInvertible);
        }
        let quotient = self.derivative().mul(&self.inverse()?)?;
        Ok(quotient.integral())
    }

    /// Integer power; negative exponents go through [`PowerSeries::inverse`].
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// `sqrt(1 + c z)` as the binomial series `sum_k C(1/2, k) c^k z^k`.
    pub fn sqrt_one_plus(c: &S, order: usize) -> Self {
        let half = S::from_frac(1, 2);
        Self::from_fn(order, |k| binomial_general(&half, k as i64) * c.pow_u32(k as u32))
    }

    /// Evaluates the truncated polynomial at a point.
    pub fn eval(&self, z: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * z.clone() + c.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio, Rational, Series};
    use proptest::prelude::*;

    fn s(v: &[i64]) -> Series {
        Series::from_coeffs(v.iter().map(|&x| rat(x)).collect())
    }

    fn exp_z(sign: i64, order: usize) -> Series {
        let mut fact = 1i64;
        Series::from_fn(order, |k| {
            if k > 0 {
                fact *= k as i64;
            }
            ratio(sign.pow(k as u32), fact)
        })
    }

    #[test]
    fn products() {
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, -1, 0])).unwrap(), s(&[1, 0, -1]));
        assert_eq!(exp_z(-1, 6).mul(&exp_z(1, 6)).unwrap(), Series::one(6));
        assert_eq!(s(&[1, 1]).mul(&Series::one(1)).unwrap(), s(&[1, 1]));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        assert_eq!(
            s(&[1, 1]).mul(&s(&[1, 1, 1])),
            Err(Error::OrderMismatch { left: 1, right: 2 })
        );
        assert_eq!(s(&[1, 1]).mul_truncated(&s(&[1, 1, 1])), s(&[1, 2]));
        assert!(s(&[1]).hadamard(&s(&[1, 2])).is_err());
    }

    #[test]
    fn exponential() {
        assert_eq!(Series::zero(5).exp().unwrap(), Series::one(5));
        let minus_z = Series::monomial(rat(-1), 1, 4);
        assert_eq!(minus_z.exp().unwrap(), exp_z(-1, 4));
        assert_eq!(s(&[1, 1]).exp(), Err(Error::NonzeroConstantTerm));
        let one_plus_z = s(&[1, 1, 0, 0, 0, 0]);
        assert_eq!(one_plus_z.log().unwrap().exp().unwrap(), one_plus_z);
    }

    #[test]
    fn sqrt_series() {
        assert_eq!(Series::sqrt_one_plus(&rat(4), 4), s(&[1, 2, -2, 4, -10]));
        assert_eq!(Series::sqrt_one_plus(&rat(0), 3), Series::one(3));
        let r = Series::sqrt_one_plus(&rat(4), 4);
        assert_eq!(r.mul(&r).unwrap(), s(&[1, 4, 0, 0, 0]));
    }

    #[test]
    fn hadamard_examples() {
        let ones = Series::from_fn(6, |_| rat(1));
        assert_eq!(ones.hadamard(&ones).unwrap(), ones);
        let e = exp_z(1, 6);
        let expected = Series::from_fn(6, |n| {
            let f: Rational = crate::factorial(n as u32);
            rat(1) / (f.clone() * f)
        });
        assert_eq!(e.hadamard(&e).unwrap(), expected);
        let f = s(&[3, -1, 4, 1, -5, 9, 2]);
        assert_eq!(f.hadamard(&ones).unwrap(), f);
    }

    #[test]
    fn powers_and_inverse() {
        let a = s(&[1, 2, 3, 4]);
        assert_eq!(a.pow(0).unwrap(), Series::one(3));
        assert_eq!(a.pow(3).unwrap(), a.mul(&a).unwrap().mul(&a).unwrap());
        assert_eq!(a.pow(-2).unwrap().mul(&a.pow(2).unwrap()).unwrap(), Series::one(3));
        assert_eq!(s(&[0, 1]).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn shifts() {
        let a = s(&[0, 0, 5, 7]);
        assert_eq!(a.shift_down(2).unwrap(), s(&[5, 7]));
        assert!(a.shift_down(3).is_err());
        assert_eq!(s(&[1, 2, 3]).shift_up(1), s(&[0, 1, 2]));
    }

    fn zero_constant(order: usize) -> impl Strategy<Value = Series> {
        proptest::collection::vec((-20i64..20, 1i64..6), order).prop_map(|v| {
            let mut c = vec![rat(0)];
            c.extend(v.into_iter().map(|(p, q)| ratio(p, q)));
            Series::from_coeffs(c)
        })
    }

    proptest! {
        #[test]
        fn exp_is_a_homomorphism(order in 1usize..=12, a in zero_constant(12), b in zero_constant(12)) {
            let (a, b) = (a.truncate(order), b.truncate(order));
            let lhs = a.add(&b).unwrap().exp().unwrap();
            let rhs = a.exp().unwrap().mul(&b.exp().unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
