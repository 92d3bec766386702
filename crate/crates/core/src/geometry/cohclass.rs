use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::algebra::{Algebra, Scalar};

/// Element of `Q[h_1, ..., h_m] / (h_i^{k_i + 1})`, the cohomology of
/// `P^{k_1} × ... × P^{k_m}`.
///
/// Coefficients are stored densely in mixed radix, `h_1` least significant.
/// A class with no variables is a bare scalar and combines with a class of
/// any shape; this is what `zero()` and `one()` return.
#[derive(Debug, Clone)]
pub struct CohClass<S> {
    caps: Vec<u32>,
    coeffs: Vec<S>,
}

fn strides(caps: &[u32]) -> Vec<usize> {
    let mut s = Vec::with_capacity(caps.len());
    let mut acc = 1usize;
    for &k in caps {
        s.push(acc);
        acc *= k as usize + 1;
    }
    s
}

fn size(caps: &[u32]) -> usize {
    caps.iter().map(|&k| k as usize + 1).product()
}

impl<S: Scalar> CohClass<S> {
    pub fn scalar(c: S) -> Self {
        Self {
            caps: Vec::new(),
            coeffs: vec![c],
        }
    }

    pub fn zero_on(caps: &[u32]) -> Self {
        Self {
            caps: caps.to_vec(),
            coeffs: vec![S::zero(); size(caps)],
        }
    }

    pub fn constant_on(caps: &[u32], c: S) -> Self {
        let mut out = Self::zero_on(caps);
        out.coeffs[0] = c;
        out
    }

    /// `c h_1^{e_1} ... h_m^{e_m}`; zero if some exponent exceeds its cap.
    pub fn monomial(caps: &[u32], exps: &[u32], c: S) -> Self {
        assert_eq!(caps.len(), exps.len(), "exponent vector length");
        let mut out = Self::zero_on(caps);
        if exps.iter().zip(caps).all(|(e, k)| e <= k) {
            let idx = Self::index(caps, exps);
            out.coeffs[idx] = c;
        }
        out
    }

    fn index(caps: &[u32], exps: &[u32]) -> usize {
        strides(caps)
            .iter()
            .zip(exps)
            .map(|(s, &e)| s * e as usize)
            .sum()
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn is_scalar(&self) -> bool {
        self.caps.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> S {
        if self.is_scalar() {
            return if exps.iter().all(|&e| e == 0) {
                self.coeffs[0].clone()
            } else {
                S::zero()
            };
        }
        if exps.iter().zip(&self.caps).any(|(e, k)| e > k) {
            return S::zero();
        }
        self.coeffs[Self::index(&self.caps, exps)].clone()
    }

    /// Coefficient of `h_1^{k_1} ... h_m^{k_m}`.
    pub fn top_coefficient(&self) -> S {
        self.coeffs.last().cloned().expect("nonempty")
    }

    /// Terms of total degree `j` only.
    pub fn graded_part(&self, j: u32) -> Self {
        let mut out = self.clone();
        let mut digits = vec![0u32; self.caps.len()];
        for (idx, c) in out.coeffs.iter_mut().enumerate() {
            if idx > 0 {
                increment(&mut digits, &self.caps);
            }
            if digits.iter().sum::<u32>() != j {
                *c = S::zero();
            }
        }
        out
    }

    /// Embeds a class on `P^{k_i}` (one variable) as factor `i` of a product.
    pub fn embed(&self, caps: &[u32], factor: usize) -> Self {
        if self.is_scalar() {
            return Self::constant_on(caps, self.coeffs[0].clone());
        }
        assert_eq!(self.caps.len(), 1, "embedding expects a single-factor class");
        assert_eq!(self.caps[0], caps[factor], "factor dimension mismatch");
        let mut out = Self::zero_on(caps);
        let stride = strides(caps)[factor];
        for (e, c) in self.coeffs.iter().enumerate() {
            out.coeffs[e * stride] = c.clone();
        }
        out
    }

    fn reshaped(&self, caps: &[u32]) -> Self {
        if self.caps == caps {
            self.clone()
        } else if self.is_scalar() {
            Self::constant_on(caps, self.coeffs[0].clone())
        } else {
            panic!("cohomology classes on different spaces: {:?} vs {:?}", self.caps, caps);
        }
    }

    fn combine(&mut self, rhs: &Self, f: impl Fn(&mut S, &S)) {
        if rhs.is_scalar() && !self.is_scalar() {
            f(&mut self.coeffs[0], &rhs.coeffs[0]);
            return;
        }
        if self.caps != rhs.caps {
            *self = self.reshaped(&rhs.caps);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            f(a, b);
        }
    }
}

fn increment(digits: &mut [u32], caps: &[u32]) {
    for (d, &k) in digits.iter_mut().zip(caps) {
        if *d < k {
            *d += 1;
            return;
        }
        *d = 0;
    }
}

impl<S: Scalar> PartialEq for CohClass<S> {
    fn eq(&self, other: &Self) -> bool {
        if self.caps == other.caps {
            self.coeffs == other.coeffs
        } else if self.is_scalar() {
            self.reshaped(&other.caps).coeffs == other.coeffs
        } else if other.is_scalar() {
            self.coeffs == other.reshaped(&self.caps).coeffs
        } else {
            false
        }
    }
}

impl<S: Scalar> Zero for CohClass<S> {
    fn zero() -> Self {
        Self::scalar(S::zero())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl<S: Scalar> One for CohClass<S> {
    fn one() -> Self {
        Self::scalar(S::one())
    }
}

impl<'a, S: Scalar> AddAssign<&'a CohClass<S>> for CohClass<S> {
    fn add_assign(&mut self, rhs: &'a CohClass<S>) {
        self.combine(rhs, |a, b| *a += b);
    }
}

impl<'a, S: Scalar> SubAssign<&'a CohClass<S>> for CohClass<S> {
    fn sub_assign(&mut self, rhs: &'a CohClass<S>) {
        self.combine(rhs, |a, b| *a -= b);
    }
}

impl<'a, S: Scalar> MulAssign<&'a CohClass<S>> for CohClass<S> {
    fn mul_assign(&mut self, rhs: &'a CohClass<S>) {
        if rhs.is_scalar() {
            let c = &rhs.coeffs[0];
            for a in self.coeffs.iter_mut() {
                *a *= c;
            }
            return;
        }
        if self.is_scalar() {
            let c = self.coeffs[0].clone();
            *self = rhs.clone();
            for a in self.coeffs.iter_mut() {
                *a *= &c;
            }
            return;
        }
        assert_eq!(self.caps, rhs.caps, "cohomology classes on different spaces");
        let caps = &self.caps;
        let st = strides(caps);
        let m = caps.len();
        let mut out = vec![S::zero(); self.coeffs.len()];
        let mut da = vec![0u32; m];
        let mut db = vec![0u32; m];
        for (a, x) in self.coeffs.iter().enumerate() {
            if a > 0 {
                increment(&mut da, caps);
            }
            if x.is_zero() {
                continue;
            }
            // b ranges over exponents with da + db <= caps; indices then add without carry.
            db.iter_mut().for_each(|d| *d = 0);
            let mut b = 0usize;
            'walk: loop {
                let y = &rhs.coeffs[b];
                if !y.is_zero() {
                    out[a + b] += &x.mul_ref(y);
                }
                let mut i = 0;
                loop {
                    if i == m {
                        break 'walk;
                    }
                    if db[i] + da[i] < caps[i] {
                        db[i] += 1;
                        b += st[i];
                        break;
                    }
                    b -= db[i] as usize * st[i];
                    db[i] = 0;
                    i += 1;
                }
            }
        }
        self.coeffs = out;
    }
}

impl<S: Scalar> Add for CohClass<S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<S: Scalar> Sub for CohClass<S> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<S: Scalar> Mul for CohClass<S> {
    type Output = Self;
    fn mul(mut self, rhs: Self) -> Self {
        self *= &rhs;
        self
    }
}

impl<S: Scalar> Neg for CohClass<S> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.coeffs.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<S: Scalar> Algebra for CohClass<S> {
    type Scalar = S;

    fn from_scalar(s: S) -> Self {
        Self::scalar(s)
    }

    fn scale(&self, s: &S) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= s;
        }
        out
    }
}
