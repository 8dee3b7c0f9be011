use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, PolyInN, RatFunc, Rational};
use crate::multipoly::quartic_disc_formula;

use super::eval::moment_eval;
use super::newton::newton_e_from_p;
use super::poly::MomentPolynomial;
use super::terminal::terminal_disc;

/// `constant * prod_s ((n - s)!)^{power_s}`. Factorials are not rational
/// functions of `n`, so they stay symbolic until `n` is fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorialPrefactor {
    constant: Rational,
    /// shift `s` -> power of `(n - s)!`; powers are positive.
    factorials: BTreeMap<u32, u32>,
}

impl FactorialPrefactor {
    pub fn new(constant: Rational, factorials: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (s, p) in factorials {
            if p > 0 {
                *map.entry(s).or_insert(0) += p;
            }
        }
        FactorialPrefactor {
            constant,
            factorials: map,
        }
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn factorials(&self) -> &BTreeMap<u32, u32> {
        &self.factorials
    }

    /// Sum of all factorial powers.
    pub fn total_power(&self) -> u32 {
        self.factorials.values().sum()
    }

    /// Largest shift; `n` must be at least this for the value to exist.
    pub fn max_shift(&self) -> u32 {
        self.factorials.keys().next_back().copied().unwrap_or(0)
    }

    pub fn eval(&self, n0: i64) -> Result<Rational> {
        let mut v = self.constant.clone();
        for (&s, &p) in &self.factorials {
            let m = n0 - s as i64;
            if m < 0 {
                return Err(Error::OutOfRange(format!("({n0}-{s})! is undefined")));
            }
            v *= Rational::from_integer(num_traits::pow(factorial(m as u64), p as usize));
        }
        Ok(v)
    }

    /// The prefactor as `R(n) * ((n - base)!)^{total_power}` for any
    /// `base >= max_shift`, returning `R(n)`.
    pub fn relative_to(&self, base: u32) -> RatFunc {
        assert!(base >= self.max_shift(), "base below a stored shift");
        self.factorials
            .iter()
            .fold(RatFunc::from_rational(&self.constant), |acc, (&s, &p)| {
                &acc * &RatFunc::from_poly(PolyInN::falling_from(s as i64, base - s).pow(p))
            })
    }

    pub fn to_latex(&self) -> String {
        let mut body = String::new();
        for (&s, &p) in &self.factorials {
            let f = if s == 0 { "n!".to_string() } else { format!("(n-{s})!") };
            match p {
                1 => body.push_str(&f),
                _ => body.push_str(&format!("({f})^{{{p}}}")),
            }
        }
        let c = &self.constant;
        let num = c.numer().abs();
        let mut top = if num.is_one() && !body.is_empty() {
            body
        } else {
            format!("{num}{body}")
        };
        if c.is_negative() {
            top.insert(0, '-');
        }
        if c.denom().is_one() {
            top
        } else {
            let (sign, t) = match top.strip_prefix('-') {
                Some(t) => ("-", t.to_string()),
                None => ("", top),
            };
            format!("{sign}\\frac{{{t}}}{{{}}}", c.denom())
        }
    }
}

impl fmt::Display for FactorialPrefactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        for (&s, &p) in &self.factorials {
            let fac = if s == 0 { "n!".to_string() } else { format!("(n-{s})!") };
            if p == 1 {
                write!(f, "*{fac}")?;
            } else {
                write!(f, "*({fac})^{p}")?;
            }
        }
        Ok(())
    }
}

/// `prefactor * moment`, a terminal discriminant in closed form valid for
/// `n >= floor_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormula {
    pub prefactor: FactorialPrefactor,
    pub moment: MomentPolynomial,
    pub floor_n: i64,
}

impl ClosedFormula {
    /// The full value on a concrete root list.
    pub fn eval(&self, roots: &[Rational]) -> Result<Rational> {
        let n0 = roots.len() as i64;
        if n0 < self.floor_n {
            return Err(Error::OutOfRange(format!(
                "n = {n0} is below the formula's floor {}",
                self.floor_n
            )));
        }
        let m = moment_eval(&self.moment, roots, n0)?;
        if m.is_zero() {
            return Ok(m);
        }
        Ok(self.prefactor.eval(n0)? * m)
    }

    /// Exact identity of `self` and `other` as functions of symbolic `n`
    /// and the moments. Requires matching total factorial power.
    pub fn symbolically_equal(&self, other: &Self) -> bool {
        if self.prefactor.total_power() != other.prefactor.total_power() {
            return false;
        }
        let base = self.prefactor.max_shift().max(other.prefactor.max_shift());
        let a = self.moment.scale(&self.prefactor.relative_to(base));
        let b = other.moment.scale(&other.prefactor.relative_to(base));
        a == b
    }
}

/// `n(n-1) p_2` with prefactor `((n-2)!)^2`.
pub fn closed_quadratic() -> ClosedFormula {
    ClosedFormula {
        prefactor: FactorialPrefactor::new(Rational::one(), [(2, 2)]),
        moment: MomentPolynomial::p(true, 2).scale(&RatFunc::from_poly(PolyInN::falling_factorial(2))),
        floor_n: 2,
    }
}

/// `p_2^3 - n(n-1)/(n-2)^2 p_3^2` with prefactor `n! ((n-2)!)^3 / 12`.
pub fn closed_cubic() -> ClosedFormula {
    let p2 = MomentPolynomial::p(true, 2);
    let p3 = MomentPolynomial::p(true, 3);
    let ratio = RatFunc::new(PolyInN::falling_factorial(2), PolyInN::linear(2).pow(2)).expect("nonzero denominator");
    ClosedFormula {
        prefactor: FactorialPrefactor::new(Rational::new(1.into(), 12.into()), [(0, 1), (2, 3)]),
        moment: &p2.pow(3) - &p3.pow(2).scale(&ratio),
        floor_n: 3,
    }
}

/// The six-term quartic discriminant in `A, B, C, D` of the derivative
/// `P^{(n-4)} = A t^4 + B t^2 + C t + D`, each coefficient with the common
/// factor `(n-4)!` pulled into the prefactor `((n-4)!)^6`.
pub fn closed_quartic() -> ClosedFormula {
    let c = |r: RatFunc, m: MomentPolynomial| m.scale(&r);
    let one = MomentPolynomial::one(true);
    let ff = |shift: u32, len: u32| RatFunc::from_poly(PolyInN::falling_from(shift as i64, len));
    let a = c(&ff(0, 4) * &RatFunc::frac(1, 24), one);
    let b = c(&ff(2, 2) * &RatFunc::frac(-1, 4), MomentPolynomial::p(true, 2));
    let cc = c(&ff(3, 1) * &RatFunc::frac(-1, 3), MomentPolynomial::p(true, 3));
    let d = newton_e_from_p(4, true);
    ClosedFormula {
        prefactor: FactorialPrefactor::new(Rational::one(), [(4, 6)]),
        moment: quartic_disc_formula(&a, &b, &cc, &d),
        floor_n: 4,
    }
}

/// `(n!/r!)^{2r-2} disc(J_{n,r})`.
pub fn rescaled_terminal(r: u32) -> Result<ClosedFormula> {
    let moment = terminal_disc(r)?;
    let rf = Rational::from_integer(factorial(r as u64));
    Ok(ClosedFormula {
        prefactor: FactorialPrefactor::new(num_traits::pow(rf.recip(), (2 * r - 2) as usize), [(0, 2 * r - 2)]),
        moment,
        floor_n: r as i64,
    })
}
