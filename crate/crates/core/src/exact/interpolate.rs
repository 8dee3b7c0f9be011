//! Polynomial interpolation in `n` and rational-function reconstruction.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::PolyInN;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Dense polynomial in `n` with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = QPoly { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    fn sub(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let d = rhs.degree().expect("division by zero polynomial");
        let lc = rhs.coeffs[d].clone();
        let mut rem = self.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(d).max(1)];
        while let Some(dr) = rem.degree() {
            if dr < d {
                break;
            }
            let c = &rem.coeffs[dr] / &lc;
            let mut shifted = vec![BigRational::zero(); dr - d];
            shifted.extend(rhs.coeffs.iter().map(|x| x * &c));
            rem = rem.sub(&Self::from_coeffs(shifted));
            quot[dr - d] = c;
        }
        (Self::from_coeffs(quot), rem)
    }

    /// Splits into an integer polynomial and a positive integer denominator.
    pub fn to_integer_parts(&self) -> (PolyInN, BigInt) {
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        (PolyInN::from_coeffs(coeffs), den)
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let (p, d) = self.to_integer_parts();
        RatFunc::new(p, PolyInN::constant(d)).expect("positive denominator")
    }
}

fn check_points(points: &[(i64, BigRational)]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::Empty("interpolation points"));
    }
    let mut seen = BTreeSet::new();
    for (x, _) in points {
        if !seen.insert(*x) {
            return Err(Error::DuplicateAbscissa(*x));
        }
    }
    Ok(())
}

/// The unique polynomial of degree `< points.len()` through `points`
/// (Newton divided differences). Fails with `DegreeCapExceeded` when a cap
/// is supplied and the interpolant's degree is above it.
pub fn poly_interpolate(points: &[(i64, BigRational)], cap: Option<usize>) -> Result<QPoly> {
    check_points(points)?;
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(x, _)| BigRational::from_integer((*x).into()))
        .collect();
    let mut dd: Vec<BigRational> = points.iter().map(|(_, v)| v.clone()).collect();
    let k = dd.len();
    for level in 1..k {
        for i in (level..k).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner-style accumulation of the Newton form.
    let mut acc = QPoly::constant(dd[k - 1].clone());
    for i in (0..k - 1).rev() {
        let factor = QPoly::from_coeffs(vec![-xs[i].clone(), BigRational::one()]);
        acc = acc.mul(&factor).add(&QPoly::constant(dd[i].clone()));
    }
    if let (Some(cap), Some(deg)) = (cap, acc.degree()) {
        if deg > cap {
            return Err(Error::DegreeCapExceeded { degree: deg, cap });
        }
    }
    Ok(acc)
}

/// Reconstructs `N/D` from samples with `deg N, deg D <= max_degree`, via the
/// extended Euclidean algorithm on the interpolant and `prod (n - n_i)`.
///
/// A candidate is accepted only when it uses fewer degrees of freedom than
/// there are samples (at least one sample is redundant) and it reproduces
/// every sample exactly. Returns `None` if no such candidate exists.
pub fn rational_reconstruct(points: &[(i64, BigRational)], max_degree: usize) -> Result<Option<RatFunc>> {
    check_points(points)?;
    let k = points.len();
    let interp = poly_interpolate(points, None)?;
    let modulus = points.iter().fold(QPoly::constant(BigRational::one()), |acc, (x, _)| {
        acc.mul(&QPoly::from_coeffs(vec![
            BigRational::from_integer((-*x).into()),
            BigRational::one(),
        ]))
    });
    // Invariant: r_i = s_i * modulus + t_i * interp.
    let (mut r0, mut r1) = (modulus, interp);
    let (mut t0, mut t1) = (QPoly::zero(), QPoly::constant(BigRational::one()));
    loop {
        if let Some(candidate) = accept(points, k, max_degree, &r1, &t1) {
            return Ok(Some(candidate));
        }
        if r1.is_zero() {
            return Ok(None);
        }
        let (q, r2) = r0.div_rem(&r1);
        let t2 = t0.sub(&q.mul(&t1));
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
}

fn accept(points: &[(i64, BigRational)], k: usize, max_degree: usize, num: &QPoly, den: &QPoly) -> Option<RatFunc> {
    let dn = num.degree().unwrap_or(0);
    let dd = den.degree()?;
    if dn > max_degree || dd > max_degree || dn + dd + 1 >= k {
        return None;
    }
    for (x, v) in points {
        let x = BigRational::from_integer((*x).into());
        let d = den.eval(&x);
        if d.is_zero() || num.eval(&x) != v * d {
            return None;
        }
    }
    let (np, nd) = num.to_integer_parts();
    let (dp, ddn) = den.to_integer_parts();
    let f = RatFunc::new(np.scale(&ddn), dp.scale(&nd)).ok()?;
    Some(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<(i64, BigRational)> {
        v.iter()
            .map(|&(x, y)| (x, BigRational::from_integer(y.into())))
            .collect()
    }

    #[test]
    fn interpolation_examples() {
        let line = poly_interpolate(&pts(&[(1, 2), (2, 3)]), None).unwrap();
        assert_eq!(line.to_ratfunc(), "n+1".parse().unwrap());
        let quad = poly_interpolate(&pts(&[(3, 6), (4, 12), (5, 20)]), None).unwrap();
        assert_eq!(quad.to_ratfunc(), "n^2-n".parse().unwrap());
        let c = poly_interpolate(&pts(&[(1, 1), (2, 1), (3, 1)]), None).unwrap();
        assert_eq!(c.to_ratfunc(), RatFunc::one());
    }

    #[test]
    fn interpolation_errors() {
        assert_eq!(
            poly_interpolate(&pts(&[(1, 1), (1, 2)]), None),
            Err(Error::DuplicateAbscissa(1))
        );
        assert_eq!(
            poly_interpolate(&pts(&[(3, 6), (4, 12), (5, 20)]), Some(1)),
            Err(Error::DegreeCapExceeded { degree: 2, cap: 1 })
        );
        assert_eq!(poly_interpolate(&[], None), Err(Error::Empty("interpolation points")));
    }

    #[test]
    fn reconstructs_rational_weight() {
        let f: RatFunc = "1/(8*n^3-32*n^2+32*n)".parse().unwrap();
        let points: Vec<_> = (3..=8).map(|n| (n, f.eval(n).unwrap())).collect();
        assert_eq!(rational_reconstruct(&points, 4).unwrap(), Some(f));
    }

    #[test]
    fn reconstruction_needs_redundancy() {
        let f: RatFunc = "(n^3+1)/(n^2+n+7)".parse().unwrap();
        let points: Vec<_> = (3..=8).map(|n| (n, f.eval(n).unwrap())).collect();
        // 6 samples cannot confirm a function with 6 degrees of freedom.
        assert_eq!(rational_reconstruct(&points, 6).unwrap(), None);
        let more: Vec<_> = (3..=10).map(|n| (n, f.eval(n).unwrap())).collect();
        assert_eq!(rational_reconstruct(&more, 6).unwrap(), Some(f));
    }
}
