//! Exact rational scalars and the handful of combinatorial quantities the
//! closed-form bases are built from. Everything here is arbitrary precision;
//! there is no floating point anywhere in the crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Scalar type for all coefficients: arbitrary-precision rationals, always
/// stored reduced with a positive denominator (the backing type maintains
/// both invariants on construction).
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    acc
}

/// Double factorial `n!! = n(n-2)(n-4)...`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n as u64;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n as u64 - i as u64) / (i as u64 + 1);
    }
    acc
}

/// Falling factorial `n (n-1) ... (n-k+1)`.
pub fn falling(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k as u64 {
        acc *= n as u64 - i;
    }
    acc
}

/// Render a rational in the `p` / `p/q` text form used by the polynomial grammar.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// True when the rational is a negative number (used by the printers).
pub fn is_negative(q: &Rational) -> bool {
    q.numer().is_negative()
}
