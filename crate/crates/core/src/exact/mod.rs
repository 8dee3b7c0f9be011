//! Exact arithmetic: rationals, polynomials and rational functions in the
//! symbolic parameter `n`, and interpolation in `n`.

mod interpolate;
mod poly;
mod ratfunc;

pub use interpolate::{poly_interpolate, rational_reconstruct, QPoly};
pub use poly::PolyInN;
pub use ratfunc::RatFunc;

pub(crate) use poly::forward_owned;
pub(crate) use ratfunc::factored_latex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// Exact rational number. Always reduced with a positive denominator.
pub type Rational = BigRational;

/// `m (m-1) ... (m-j+1)`; the empty product for `j = 0`.
pub fn falling_factorial(m: &BigInt, j: u32) -> BigInt {
    (0..j).fold(BigInt::one(), |acc, i| acc * (m - BigInt::from(i)))
}

pub fn factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn rational(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

pub fn int(a: i64) -> Rational {
    Rational::from_integer(a.into())
}

/// `"a/b"` or `"a"`, as produced by `BigRational`'s `Display`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(0, format!("bad rational numerator {num:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse(0, format!("bad rational denominator {den:?}")))?;
    if den == BigInt::from(0) {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}
