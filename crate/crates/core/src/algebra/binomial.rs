use super::Scalar;

/// `x (x-1) ... (x-k+1) / k!`, and zero for negative `k`.
pub fn binomial_general<S: Scalar>(x: &S, k: i64) -> S {
    if k < 0 {
        return S::zero();
    }
    let mut num = S::one();
    let mut den = S::one();
    for i in 0..k {
        num *= &(x.clone() - S::from_int(i));
        den *= &S::from_int(i + 1);
    }
    num / den
}

pub fn factorial<S: Scalar>(n: u32) -> S {
    (1..=n as i64).fold(S::one(), |acc, i| acc * S::from_int(i))
}
