//! Integer-coefficient polynomials in the symbolic parameter `n`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense polynomial in `n` over the integers, lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyInN {
    coeffs: Vec<BigInt>,
}

impl PolyInN {
    pub fn zero() -> Self {
        PolyInN { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The monomial `n`.
    pub fn n() -> Self {
        PolyInN {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = PolyInN { coeffs };
        p.trim();
        p
    }

    /// Builds from small integer coefficients, lowest degree first.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `n - root`.
    pub fn linear(root: i64) -> Self {
        Self::from_i64s(&[-root, 1])
    }

    /// `(n - shift)(n - shift - 1)...(n - shift - j + 1)`.
    pub fn falling_from(shift: i64, j: u32) -> Self {
        (0..j as i64).fold(Self::one(), |acc, i| acc * Self::linear(shift + i))
    }

    /// The falling factorial `(n)_j`.
    pub fn falling_factorial(j: u32) -> Self {
        Self::falling_from(0, j)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content().is_one() && self.leading().is_positive()
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        PolyInN {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Caller guarantees that `k` divides every coefficient.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Self {
        PolyInN {
            coeffs: self.coeffs.iter().map(|c| c / k).collect(),
        }
    }

    fn shifted(&self, by: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyInN { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Pseudo-remainder of `self` by `divisor`, scaling by the divisor's
    /// leading coefficient as needed to stay inside the integers.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        let d = divisor.degree().expect("pseudo_rem by zero polynomial");
        let lc = divisor.leading();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < d {
                break;
            }
            let lr = r.leading();
            r = &r.scale(&lc) - &divisor.scale(&lr).shifted(dr - d);
        }
        r
    }

    /// Exact quotient in `Z[n]`, or `None` when `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let d = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lc = divisor.leading();
        let mut r = self.clone();
        let top = r.degree()?;
        if top < d {
            return None;
        }
        let mut q = vec![BigInt::zero(); top - d + 1];
        while let Some(dr) = r.degree() {
            if dr < d {
                return None;
            }
            let (quot, rem) = r.leading().div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            r = &r - &divisor.scale(&quot).shifted(dr - d);
            q[dr - d] = quot;
        }
        Some(Self::from_coeffs(q))
    }

    /// Greatest common divisor in `Z[n]`: content gcd times the primitive gcd,
    /// with positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive_part().scale(&b.content());
        }
        if b.is_zero() {
            return a.primitive_part().scale(&a.content());
        }
        let content = a.content().gcd(&b.content());
        let (mut x, mut y) = (a.primitive_part(), b.primitive_part());
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let r = x.pseudo_rem(&y);
            x = y;
            y = r.primitive_part();
        }
        x.primitive_part().scale(&content)
    }

    /// Integer roots, with multiplicity, found by trial over divisors of the
    /// lowest nonzero coefficient. Returns the roots and the cofactor.
    pub fn integer_roots(&self) -> (Vec<i64>, Self) {
        let mut roots = Vec::new();
        let mut rest = self.clone();
        if rest.is_zero() {
            return (roots, rest);
        }
        loop {
            if rest.degree() == Some(0) {
                break;
            }
            if rest.coeff(0).is_zero() {
                roots.push(0);
                rest = rest.div_exact(&Self::n()).expect("n divides");
                continue;
            }
            let c0 = rest.coeff(0).abs();
            let found = small_divisors(&c0)
                .into_iter()
                .flat_map(|d| [d, -d])
                .find(|&x| rest.eval_i64(x).is_zero());
            match found {
                Some(x) => {
                    roots.push(x);
                    rest = rest.div_exact(&Self::linear(x)).expect("linear factor divides");
                }
                None => break,
            }
        }
        roots.sort();
        (roots, rest)
    }

    /// Cauchy bound: every real root has absolute value below the result.
    pub fn root_bound(&self) -> BigInt {
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        if d == 0 {
            return BigInt::zero();
        }
        let lc = self.leading().abs();
        let max = self.coeffs[..d].iter().map(|c| c.abs()).max().unwrap_or_default();
        // 1 + ceil(max / lc)
        BigInt::one() + max.div_ceil(&lc)
    }

    /// Sign of the polynomial for all sufficiently large `n`.
    pub fn eventual_sign(&self) -> Sign {
        self.leading().sign()
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, times: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}{times}")?;
                    }
                    if i == 1 {
                        write!(f, "n")?;
                    } else {
                        write!(f, "n^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }

    /// Renders as LaTeX, e.g. `4n^2-24n+30`.
    pub fn to_latex(&self) -> String {
        struct L<'a>(&'a PolyInN);
        impl fmt::Display for L<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, "")
            }
        }
        L(self).to_string()
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

fn small_divisors(c: &BigInt) -> Vec<i64> {
    // Roots that matter here are small shifts like n-2; bound the search.
    const LIMIT: i64 = 4096;
    let mut out = Vec::new();
    for d in 1..=LIMIT {
        let bd = BigInt::from(d);
        if &bd > c {
            break;
        }
        if (c % &bd).is_zero() {
            out.push(d);
        }
    }
    out
}

impl fmt::Display for PolyInN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "*")
    }
}

impl fmt::Debug for PolyInN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyInN({self})")
    }
}

impl PartialOrd for PolyInN {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PolyInN {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<'a> Add<&'a PolyInN> for &'a PolyInN {
    type Output = PolyInN;
    fn add(self, rhs: &PolyInN) -> PolyInN {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        PolyInN::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a PolyInN> for &'a PolyInN {
    type Output = PolyInN;
    fn sub(self, rhs: &PolyInN) -> PolyInN {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        PolyInN::from_coeffs(coeffs)
    }
}

impl<'a> Mul<&'a PolyInN> for &'a PolyInN {
    type Output = PolyInN;
    fn mul(self, rhs: &PolyInN) -> PolyInN {
        if self.is_zero() || rhs.is_zero() {
            return PolyInN::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyInN::from_coeffs(coeffs)
    }
}

impl Neg for &PolyInN {
    type Output = PolyInN;
    fn neg(self) -> PolyInN {
        PolyInN {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for PolyInN {
    type Output = PolyInN;
    fn neg(self) -> PolyInN {
        -&self
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                (&self).$m(rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(PolyInN, Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> PolyInN {
        PolyInN::from_i64s(c)
    }

    #[test]
    fn falling_factorial_of_n() {
        assert_eq!(PolyInN::falling_factorial(3), p(&[0, 2, -3, 1]));
        assert_eq!(PolyInN::falling_factorial(0), PolyInN::one());
    }

    #[test]
    fn gcd_and_exact_division() {
        let a = p(&[0, -2, 2]); // 2n(n-1)
        let b = p(&[0, 4, -4, 0]).scale(&BigInt::from(-1)); // -4n(1-n)... = 4n^2-4n
        let g = PolyInN::gcd(&a, &b);
        assert_eq!(g, p(&[0, -2, 2]));
        assert_eq!(b.div_exact(&g), Some(p(&[2])));
        assert_eq!(p(&[1, 1]).div_exact(&p(&[0, 2])), None);
    }

    #[test]
    fn integer_roots_of_product() {
        let f = p(&[0, 1]) * p(&[-2, 1]) * p(&[-2, 1]) * p(&[1, 0, 1]);
        let (roots, rest) = f.integer_roots();
        assert_eq!(roots, vec![0, 2, 2]);
        assert_eq!(rest, p(&[1, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[30, -24, 4]).to_string(), "4*n^2-24*n+30");
        assert_eq!(p(&[30, -24, 4]).to_latex(), "4n^2-24n+30");
        assert_eq!(p(&[0, -1]).to_string(), "-n");
        assert_eq!(PolyInN::zero().to_string(), "0");
    }

    #[test]
    fn root_bound_exceeds_roots() {
        let f = p(&[-7, 1]) * p(&[3, 1]);
        let b = f.root_bound();
        assert!(b > BigInt::from(7));
    }
}
