use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{forward_owned, PolyInN, RatFunc, Rational};

/// A product of power sums `p_{r1} p_{r2} ... p_{rk}`, stored as the
/// multiset of indices in descending order. The empty partition is `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MomentPartition(Vec<u32>);

impl MomentPartition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        MomentPartition(parts)
    }

    pub fn one() -> Self {
        MomentPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Total degree: the sum of the parts.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn contains(&self, part: u32) -> bool {
        self.0.contains(&part)
    }

    pub fn merge(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] >= other.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        MomentPartition(out)
    }

    /// `other` as a sub-multiset of `self`, returning the complement.
    fn strip(&self, other: &Self) -> Option<Self> {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &p in &self.0 {
            if j < other.0.len() && other.0[j] == p {
                j += 1;
            } else if j < other.0.len() && other.0[j] > p {
                return None;
            } else {
                rest.push(p);
            }
        }
        (j == other.0.len()).then_some(MomentPartition(rest))
    }

    /// Multiplicity of each index, from the largest index down.
    fn counts_desc(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// A monomial order: weighted degree first, then lexicographic on the
    /// multiplicities of the largest indices.
    fn monomial_cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (self.counts_desc(), other.counts_desc());
            for (x, y) in a.iter().zip(&b) {
                let ord = x.0.cmp(&y.0).then(x.1.cmp(&y.1));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            a.len().cmp(&b.len())
        })
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, sep: &str) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, c)) in self.counts_desc().into_iter().rev().enumerate() {
            if i > 0 {
                write!(f, "{sep}")?;
            }
            write!(f, "p_{p}")?;
            if c > 1 {
                write!(f, "^{c}")?;
            }
        }
        Ok(())
    }

    /// `p_2^3`, `p_2p_4`: ascending indices, juxtaposed.
    pub fn to_latex(&self) -> String {
        struct L<'a>(&'a MomentPartition);
        impl fmt::Display for L<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, "")
            }
        }
        L(self).to_string()
    }
}

impl fmt::Display for MomentPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "*")
    }
}

impl fmt::Debug for MomentPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Polynomial in power sums `p_r` with coefficients in `Q(n)`.
///
/// In centered mode `p_1 = 0` and no stored partition contains a `1`. In
/// both modes `p_0 = n` is absorbed into the coefficient on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MomentPolynomial {
    centered: bool,
    terms: BTreeMap<MomentPartition, RatFunc>,
}

impl MomentPolynomial {
    pub fn zero(centered: bool) -> Self {
        MomentPolynomial {
            centered,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(centered: bool, c: RatFunc) -> Self {
        Self::monomial(centered, MomentPartition::one(), c)
    }

    pub fn one(centered: bool) -> Self {
        Self::constant(centered, RatFunc::one())
    }

    /// The power sum `p_r`.
    pub fn p(centered: bool, r: u32) -> Self {
        Self::monomial(centered, MomentPartition::new(vec![r]), RatFunc::one())
    }

    /// `c * prod p_{parts}`, resolving `p_0` and (if centered) `p_1`.
    pub fn monomial(centered: bool, partition: MomentPartition, c: RatFunc) -> Self {
        let mut out = Self::zero(centered);
        out.add_term(partition, c);
        out
    }

    fn add_term(&mut self, partition: MomentPartition, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let zeros = partition.0.iter().filter(|&&p| p == 0).count();
        if self.centered && partition.contains(1) {
            return;
        }
        let (partition, c) = if zeros > 0 {
            let kept = partition.0.into_iter().filter(|&p| p != 0).collect();
            (MomentPartition(kept), &c * &RatFunc::n().pow(zeros as u32))
        } else {
            (partition, c)
        };
        match self.terms.entry(partition) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn from_terms(centered: bool, terms: impl IntoIterator<Item = (MomentPartition, RatFunc)>) -> Self {
        let mut out = Self::zero(centered);
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    pub fn is_centered(&self) -> bool {
        self.centered
    }

    pub fn terms(&self) -> &BTreeMap<MomentPartition, RatFunc> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a partition (zero when absent).
    pub fn coeff(&self, parts: &[u32]) -> RatFunc {
        self.terms
            .get(&MomentPartition::new(parts.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// The common total degree of all terms, or `None` if mixed.
    /// The zero polynomial reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(MomentPartition::degree);
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }

    /// Largest numerator degree in `n` across coefficients.
    pub fn max_n_degree(&self) -> usize {
        self.terms.values().filter_map(RatFunc::num_degree).max().unwrap_or(0)
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        if k.is_zero() {
            return Self::zero(self.centered);
        }
        MomentPolynomial {
            centered: self.centered,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.centered), |acc, _| &acc * self)
    }

    /// Sets `p_part = 0`.
    pub fn drop_part(&self, part: u32) -> Self {
        MomentPolynomial {
            centered: self.centered,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| !p.contains(part))
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sets `p_1 = 0`, turning an uncentered expansion into a centered one.
    pub fn centered(&self) -> Self {
        Self::from_terms(true, self.terms.clone())
    }

    /// Specializes every coefficient at `n = n0`.
    pub fn eval_coefficients(&self, n0: i64) -> Result<BTreeMap<MomentPartition, Rational>> {
        self.terms
            .iter()
            .map(|(p, c)| Ok((p.clone(), c.eval(n0)?)))
            .filter(|r| r.as_ref().map_or(true, |(_, v)| !v.is_zero()))
            .collect()
    }

    /// Evaluates at `n = n0` with `p_r` supplied by `power_sum`.
    pub fn eval_with(&self, n0: i64, mut power_sum: impl FnMut(u32) -> Rational) -> Result<Rational> {
        let mut total = Rational::zero();
        for (p, c) in &self.terms {
            let mut v = c.eval(n0)?;
            for &part in p.parts() {
                if v.is_zero() {
                    break;
                }
                v *= power_sum(part);
            }
            total += v;
        }
        Ok(total)
    }

    fn leading(&self) -> Option<(&MomentPartition, &RatFunc)> {
        self.terms.iter().max_by(|a, b| a.0.monomial_cmp(b.0))
    }

    /// Exact division in `Q(n)[p_1, p_2, ...]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lm, lc) = divisor.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.centered);
        while let Some((m, c)) = rem.leading() {
            let qm = m.strip(&lm)?;
            let qc = c.checked_div(&lc).ok()?;
            let step = MomentPolynomial {
                centered: self.centered,
                terms: divisor.terms.iter().map(|(p, dc)| (p.merge(&qm), dc * &qc)).collect(),
            };
            rem = &rem - &step;
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    /// A single common denominator and the numerator coefficients over it.
    pub fn common_denominator(&self) -> (PolyInN, Vec<(MomentPartition, PolyInN)>) {
        let den = self.terms.values().fold(PolyInN::one(), |acc, c| {
            let g = PolyInN::gcd(&acc, c.den());
            (&acc * c.den()).div_exact(&g).expect("gcd divides")
        });
        let nums = self
            .terms
            .iter()
            .map(|(p, c)| {
                let factor = den.div_exact(c.den()).expect("den divides lcm");
                (p.clone(), c.num() * &factor)
            })
            .collect();
        (den, nums)
    }

    /// LaTeX over a common denominator, e.g. `\frac{15p_2^2-30p_4}{n(n-1)(n-2)(n-3)}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let (den, nums) = self.common_denominator();
        let mut body = String::new();
        // descending degree of the power-sum part, largest partition first
        for (i, (p, c)) in nums.iter().enumerate() {
            let neg = c.term_count() == 1 && c.leading() < BigInt::zero();
            let coeff = if c.term_count() == 1 {
                let mag = if neg { -c } else { c.clone() };
                let s = crate::exact::factored_latex(&mag);
                if s == "1" && !p.parts().is_empty() {
                    String::new()
                } else {
                    s
                }
            } else {
                format!("({})", c.to_latex())
            };
            if i > 0 || neg {
                body.push(if neg { '-' } else { '+' });
            }
            body.push_str(&coeff);
            if !p.parts().is_empty() {
                body.push_str(&p.to_latex());
            }
        }
        if den.is_one() {
            return body;
        }
        let (sign, body) = match body.strip_prefix('-') {
            Some(rest) if nums.len() == 1 => ("-", rest.to_string()),
            _ => ("", body),
        };
        format!("{sign}\\frac{{{body}}}{{{}}}", crate::exact::factored_latex(&den))
    }
}

impl fmt::Display for MomentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]*{p}")?;
        }
        Ok(())
    }
}

impl MomentPolynomial {
    /// Parses the `Display` form, `[coeff]*p_2^3*p_3 + [coeff]*1`, or `0`.
    pub fn parse(s: &str, centered: bool) -> Result<Self> {
        let s = s.trim();
        let mut out = Self::zero(centered);
        if s == "0" {
            return Ok(out);
        }
        let mut rest = s;
        let offset = |r: &str| s.len() - r.len();
        loop {
            rest = rest.trim_start();
            let body = rest
                .strip_prefix('[')
                .ok_or_else(|| Error::parse(offset(rest), "expected '['"))?;
            let close = body
                .find(']')
                .ok_or_else(|| Error::parse(offset(body), "expected ']'"))?;
            let coeff: RatFunc = body[..close].parse()?;
            let after = body[close + 1..]
                .strip_prefix('*')
                .ok_or_else(|| Error::parse(offset(&body[close + 1..]), "expected '*'"))?;
            let end = after.find(" + ").unwrap_or(after.len());
            let mut parts = Vec::new();
            let mono = after[..end].trim();
            if mono != "1" {
                for factor in mono.split('*') {
                    let bad = || Error::parse(offset(after), format!("bad power sum {factor:?}"));
                    let f = factor.strip_prefix("p_").ok_or_else(bad)?;
                    let (idx, exp) = f.split_once('^').unwrap_or((f, "1"));
                    let idx: u32 = idx.parse().map_err(|_| bad())?;
                    let exp: usize = exp.parse().map_err(|_| bad())?;
                    parts.extend(std::iter::repeat_n(idx, exp));
                }
            }
            out.add_term(MomentPartition::new(parts), coeff);
            if end == after.len() {
                return Ok(out);
            }
            rest = &after[end + 3..];
        }
    }
}

impl std::str::FromStr for MomentPolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, true)
    }
}

impl fmt::Debug for MomentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MomentPolynomial({self})")
    }
}

impl<'a> Add<&'a MomentPolynomial> for &'a MomentPolynomial {
    type Output = MomentPolynomial;
    fn add(self, rhs: &MomentPolynomial) -> MomentPolynomial {
        let mut out = self.clone();
        // Mixing conventions yields the raw one.
        out.centered = self.centered && rhs.centered;
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MomentPolynomial> for &'a MomentPolynomial {
    type Output = MomentPolynomial;
    fn sub(self, rhs: &MomentPolynomial) -> MomentPolynomial {
        let mut out = self.clone();
        out.centered &= rhs.centered;
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MomentPolynomial> for &'a MomentPolynomial {
    type Output = MomentPolynomial;
    fn mul(self, rhs: &MomentPolynomial) -> MomentPolynomial {
        let mut out = MomentPolynomial::zero(self.centered && rhs.centered);
        for (pa, ca) in &self.terms {
            for (pb, cb) in &rhs.terms {
                out.add_term(pa.merge(pb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MomentPolynomial {
    type Output = MomentPolynomial;
    fn neg(self) -> MomentPolynomial {
        MomentPolynomial {
            centered: self.centered,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

forward_owned!(MomentPolynomial, Add::add, Sub::sub, Mul::mul);

impl crate::ring::Ring for MomentPolynomial {
    fn zero_like(&self) -> Self {
        MomentPolynomial::zero(self.centered)
    }
    fn one_like(&self) -> Self {
        MomentPolynomial::one(self.centered)
    }
    fn is_zero(&self) -> bool {
        MomentPolynomial::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, k: &BigInt) -> Self {
        self.scale(&RatFunc::from_bigint(k.clone()))
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.div_exact(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: u32) -> MomentPolynomial {
        MomentPolynomial::p(true, r)
    }

    #[test]
    fn centered_resolution() {
        assert!(p(1).is_zero());
        assert_eq!(p(0), MomentPolynomial::constant(true, RatFunc::n()));
        let raw = MomentPolynomial::p(false, 1);
        assert!(!raw.is_zero());
        assert!(raw.centered().is_zero());
    }

    #[test]
    fn partition_order_matches_basis_listing() {
        let mut v = [
            MomentPartition::new(vec![6]),
            MomentPartition::new(vec![2, 4]),
            MomentPartition::new(vec![3, 3]),
            MomentPartition::new(vec![2, 2, 2]),
        ];
        v.sort();
        let parts: Vec<&[u32]> = v.iter().map(|p| p.parts()).collect();
        assert_eq!(parts, vec![&[2, 2, 2][..], &[3, 3], &[4, 2], &[6]]);
    }

    #[test]
    fn exact_division_round_trip() {
        let a = &p(2).pow(2) + &p(3).scale(&RatFunc::n());
        let b = &p(4) - &(&p(2) * &p(3)).scale(&RatFunc::frac(1, 3));
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b));
        assert_eq!(a.div_exact(&p(5)), None);
    }

    #[test]
    fn display_parse_round_trip() {
        let f = &(&p(2).pow(3).scale(&"(4*n-6)/(n^2-2*n)".parse().unwrap()) - &p(3).pow(2))
            + &MomentPolynomial::one(true).scale(&RatFunc::frac(-1, 7));
        let s = f.to_string();
        assert_eq!(MomentPolynomial::parse(&s, true).unwrap(), f);
        assert_eq!(
            MomentPolynomial::parse("0", false).unwrap(),
            MomentPolynomial::zero(false)
        );
        assert!(MomentPolynomial::parse("[1]*q_2", true).is_err());
        assert!(MomentPolynomial::parse("[1]p_2", true).is_err());
    }

    #[test]
    fn latex_rendering() {
        let j2 = -&p(2).scale(&"1/(n^2-n)".parse().unwrap());
        assert_eq!(j2.to_latex(), "-\\frac{p_2}{n(n-1)}");
        let c = &p(2).pow(2).scale(&RatFunc::from_int(15)) - &p(4).scale(&RatFunc::from_int(30));
        let c = c.scale(
            &RatFunc::one()
                .checked_div(&RatFunc::from_poly(PolyInN::falling_factorial(4)))
                .unwrap(),
        );
        assert_eq!(c.to_latex(), "\\frac{15p_2^2-30p_4}{n(n-1)(n-2)(n-3)}");
    }
}
