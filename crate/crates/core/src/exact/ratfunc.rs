//! Rational functions in `n` with integer coefficients, kept in lowest terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{forward_owned, PolyInN};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` in `Z[n]` and `den` having a
/// positive leading coefficient. The zero function is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: PolyInN,
    den: PolyInN,
}

impl RatFunc {
    pub fn new(num: PolyInN, den: PolyInN) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: PolyInN, den: PolyInN) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let d = den.leading();
            let mut g = num.content().gcd(&d);
            if d.is_negative() {
                g = -g;
            }
            return RatFunc {
                num: num.div_scalar_exact(&g),
                den: PolyInN::constant(d / g),
            };
        }
        // Fast path: den | num over Q. By Gauss's lemma it suffices to divide
        // by the primitive part of den inside Z[n].
        let primitive = den.primitive_part();
        if let Some(q) = num.div_exact(&primitive) {
            let c = den.div_exact(&primitive).expect("content divides");
            return Self::normalized(q, c);
        }
        let g = PolyInN::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.leading().is_negative() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: PolyInN::zero(),
            den: PolyInN::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(PolyInN::one())
    }

    /// The symbol `n`.
    pub fn n() -> Self {
        Self::from_poly(PolyInN::n())
    }

    pub fn from_poly(p: PolyInN) -> Self {
        RatFunc {
            num: p,
            den: PolyInN::one(),
        }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_poly(PolyInN::constant(BigInt::from(k)))
    }

    pub fn from_bigint(k: BigInt) -> Self {
        Self::from_poly(PolyInN::constant(k))
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::normalized(
            PolyInN::constant(q.numer().clone()),
            PolyInN::constant(q.denom().clone()),
        )
    }

    /// `a / b` for small integers; panics if `b == 0`.
    pub fn frac(a: i64, b: i64) -> Self {
        Self::from_rational(&BigRational::new(a.into(), b.into()))
    }

    pub fn num(&self) -> &PolyInN {
        &self.num
    }

    pub fn den(&self) -> &PolyInN {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value when the function does not depend on `n`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_constant()
            .then(|| BigRational::new(self.num.coeff(0), self.den.coeff(0)))
    }

    pub fn eval(&self, n0: i64) -> Result<BigRational> {
        let d = self.den.eval_i64(n0);
        if d.is_zero() {
            return Err(Error::Pole(n0));
        }
        Ok(BigRational::new(self.num.eval_i64(n0), d))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        self * &Self::from_rational(k)
    }

    /// Numerator degree in `n`, `None` for zero.
    pub fn num_degree(&self) -> Option<usize> {
        self.num.degree()
    }

    /// Renders as LaTeX with the denominator factored into linear terms
    /// where possible, e.g. `\frac{1}{8n(n-2)^2}`.
    pub fn to_latex(&self) -> String {
        let num = factored_latex(&self.num);
        if self.den.is_one() {
            return num;
        }
        let (sign, num) = match num.strip_prefix('-') {
            Some(rest) if self.num.term_count() == 1 => ("-", rest.to_string()),
            _ => ("", num),
        };
        format!("{sign}\\frac{{{num}}}{{{}}}", factored_latex(&self.den))
    }
}

/// `c n^a (n-1)^b ...` style rendering; falls back to the expanded form
/// for the cofactor without integer roots.
pub(crate) fn factored_latex(p: &PolyInN) -> String {
    if p.degree().unwrap_or(0) <= 1 {
        return p.to_latex();
    }
    let (roots, rest) = p.integer_roots();
    if roots.is_empty() {
        return p.to_latex();
    }
    let mut out = String::new();
    let rest_str = if rest.is_one() {
        String::new()
    } else if rest.is_constant() {
        if rest.leading() == -BigInt::one() {
            "-".to_string()
        } else {
            rest.to_latex()
        }
    } else {
        format!("({})", rest.to_latex())
    };
    out.push_str(&rest_str);
    let mut i = 0;
    while i < roots.len() {
        let r = roots[i];
        let mult = roots[i..].iter().take_while(|&&x| x == r).count();
        let base = match r {
            0 => "n".to_string(),
            r if r > 0 => format!("(n-{r})"),
            r => format!("(n+{})", -r),
        };
        out.push_str(&base);
        if mult > 1 {
            out.push_str(&format!("^{mult}"));
        }
        i += mult;
    }
    out
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &PolyInN| {
            if p.term_count() <= 1 {
                p.to_string()
            } else {
                format!("({p})")
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = Error;

    /// Accepts the `Display` form: `poly` or `poly/poly`, where each side is
    /// an integer polynomial in `n`, optionally parenthesized.
    fn from_str(s: &str) -> Result<Self> {
        let mut parser = PolyParser {
            src: s.as_bytes(),
            pos: 0,
        };
        let num = parser.factor()?;
        parser.skip_ws();
        let den = if parser.eat(b'/') {
            parser.factor()?
        } else {
            PolyInN::one()
        };
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(Error::parse(parser.pos, "trailing input"));
        }
        RatFunc::new(num, den)
    }
}

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl PolyParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn factor(&mut self) -> Result<PolyInN> {
        if self.eat(b'(') {
            let p = self.sum()?;
            if !self.eat(b')') {
                return Err(Error::parse(self.pos, "expected ')'"));
            }
            Ok(p)
        } else {
            self.sum()
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .unwrap()
        })
    }

    fn sum(&mut self) -> Result<PolyInN> {
        let mut acc = PolyInN::zero();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') if !first => {
                    self.pos += 1;
                    false
                }
                _ if first => false,
                _ => break,
            };
            let term = self.term()?;
            acc = if neg { &acc - &term } else { &acc + &term };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<PolyInN> {
        let coeff = self.integer();
        let has_var = if coeff.is_some() {
            if self.eat(b'*') {
                if !self.eat(b'n') {
                    return Err(Error::parse(self.pos, "expected 'n' after '*'"));
                }
                true
            } else {
                self.eat(b'n')
            }
        } else if self.eat(b'n') {
            true
        } else {
            return Err(Error::parse(self.pos, "expected integer or 'n'"));
        };
        let coeff = coeff.unwrap_or_else(BigInt::one);
        if !has_var {
            return Ok(PolyInN::constant(coeff));
        }
        let exp = if self.eat(b'^') {
            self.integer()
                .ok_or_else(|| Error::parse(self.pos, "expected exponent"))?
        } else {
            BigInt::one()
        };
        let exp: usize = exp
            .try_into()
            .map_err(|_| Error::parse(self.pos, "exponent too large"))?;
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = coeff;
        Ok(PolyInN::from_coeffs(coeffs))
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc::from_poly(num);
            }
            return RatFunc::normalized(num, self.den.clone());
        }
        RatFunc::normalized(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

forward_owned!(RatFunc, Add::add, Sub::sub, Mul::mul);

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |a, b| &a + &b)
    }
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n_minus(k: i64) -> RatFunc {
        RatFunc::from_poly(PolyInN::linear(k))
    }

    #[test]
    fn examples_from_arith_contract() {
        let n_over = RatFunc::n().checked_div(&n_minus(2)).unwrap();
        assert_eq!(&n_over + &RatFunc::zero(), n_over);

        let b = n_minus(1).checked_div(&n_minus(2).pow(2)).unwrap();
        let prod = &RatFunc::n() * &b;
        assert_eq!(prod.num(), &PolyInN::from_i64s(&[0, -1, 1]));
        assert_eq!(prod.den(), &PolyInN::from_i64s(&[4, -4, 1]));

        let x = RatFunc::new(PolyInN::from_i64s(&[-6, 4]), PolyInN::from_i64s(&[0, -4, 2])).unwrap();
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn canonical_form() {
        let x = RatFunc::new(PolyInN::from_i64s(&[0, 2]), PolyInN::from_i64s(&[0, -4])).unwrap();
        assert_eq!(x, RatFunc::frac(-1, 2));
        let y = RatFunc::new(PolyInN::from_i64s(&[-6, 4]), PolyInN::from_i64s(&[0, -4, 2])).unwrap();
        // (4n-6)/(2n^2-4n) = (2n-3)/(n^2-2n)
        assert_eq!(y.num(), &PolyInN::from_i64s(&[-3, 2]));
        assert_eq!(y.den(), &PolyInN::from_i64s(&[0, -2, 1]));
    }

    #[test]
    fn evaluation_and_poles() {
        let f = (&RatFunc::n() * &n_minus(1)).checked_div(&n_minus(2).pow(2)).unwrap();
        assert_eq!(f.eval(3).unwrap(), BigRational::from_integer(6.into()));
        let g = RatFunc::from_int(6)
            .checked_div(&(&RatFunc::n() * &n_minus(2)))
            .unwrap();
        assert_eq!(g.eval(5).unwrap(), BigRational::new(2.into(), 5.into()));
        let h = RatFunc::n().checked_div(&n_minus(2)).unwrap();
        assert_eq!(h.eval(2), Err(Error::Pole(2)));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(RatFunc::one().checked_div(&RatFunc::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_parse_round_trip() {
        for s in [
            "0",
            "1",
            "-3/2",
            "n^2-n",
            "(4*n^2-24*n+30)/(n^2-2*n)",
            "1/(8*n^3-32*n^2+32*n)",
            "(-n^2+n)/(n^2-4*n+4)",
            "2*n/3",
        ] {
            let f: RatFunc = s.parse().unwrap();
            let again: RatFunc = f.to_string().parse().unwrap();
            assert_eq!(f, again, "{s}");
        }
        assert!("n^".parse::<RatFunc>().is_err());
        assert!("1/0".parse::<RatFunc>().is_err());
    }

    #[test]
    fn latex_factors_denominator() {
        let f = RatFunc::one()
            .checked_div(&(&RatFunc::from_int(8) * &(&RatFunc::n() * &n_minus(2).pow(2))))
            .unwrap();
        assert_eq!(f.to_latex(), "\\frac{1}{8n(n-2)^2}");
        let g = RatFunc::from_int(-1)
            .checked_div(&(&RatFunc::n() * &n_minus(1)))
            .unwrap();
        assert_eq!(g.to_latex(), "-\\frac{1}{n(n-1)}");
    }
}
