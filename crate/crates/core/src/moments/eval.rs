use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::Rational;

use super::poly::MomentPolynomial;

/// Power sums `p_0..=p_max` of `values`, with `p_0 = len`.
pub fn power_sums(values: &[Rational], max: u32) -> Vec<Rational> {
    let mut sums = vec![Rational::zero(); max as usize + 1];
    for v in values {
        let mut x = Rational::from_integer(1.into());
        for s in sums.iter_mut() {
            *s += &x;
            x *= v;
        }
    }
    sums
}

/// `values` shifted to mean zero.
pub fn centered(values: &[Rational]) -> Vec<Rational> {
    if values.is_empty() {
        return Vec::new();
    }
    let mean: Rational = values.iter().sum::<Rational>() / Rational::from_integer(values.len().into());
    values.iter().map(|v| v - &mean).collect()
}

fn max_part(f: &MomentPolynomial) -> u32 {
    f.terms()
        .keys()
        .filter_map(|p| p.parts().first().copied())
        .max()
        .unwrap_or(0)
}

/// Evaluates `f` on a root list with `n = n0`: centered power sums when
/// `f` is centered, raw power sums otherwise.
pub fn moment_eval(f: &MomentPolynomial, roots: &[Rational], n0: i64) -> Result<Rational> {
    if roots.len() as i64 != n0 {
        return Err(Error::DimensionMismatch(format!(
            "{} roots supplied for n = {n0}",
            roots.len()
        )));
    }
    let data = if f.is_centered() {
        centered(roots)
    } else {
        roots.to_vec()
    };
    let sums = power_sums(&data, max_part(f));
    f.eval_with(n0, |r| sums[r as usize].clone())
}

/// A centered configuration taking the value `a (n - rmult)` with
/// multiplicity `rmult` and `-a rmult` elsewhere.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoLevelConfig {
    pub roots: Vec<Rational>,
    pub p2: Rational,
    pub p3: Rational,
}

pub fn two_level_config(n: i64, rmult: i64, a: &Rational) -> Result<TwoLevelConfig> {
    if n < 2 || rmult < 1 || rmult > n - 1 {
        return Err(Error::OutOfRange(format!("rmult = {rmult} must lie in 1..={}", n - 1)));
    }
    if a.is_zero() {
        return Err(Error::OutOfRange("a must be nonzero".into()));
    }
    let u = a * Rational::from_integer((n - rmult).into());
    let v = -(a * Rational::from_integer(rmult.into()));
    let roots: Vec<Rational> = (0..n).map(|i| if i < rmult { u.clone() } else { v.clone() }).collect();
    let sums = power_sums(&roots, 3);
    Ok(TwoLevelConfig {
        p2: sums[2].clone(),
        p3: sums[3].clone(),
        roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rational};

    #[test]
    fn centered_sums() {
        let roots = [int(0), int(1), int(2)];
        assert_eq!(moment_eval(&MomentPolynomial::p(true, 2), &roots, 3).unwrap(), int(2));
        assert_eq!(moment_eval(&MomentPolynomial::p(true, 3), &roots, 3).unwrap(), int(0));
        assert_eq!(moment_eval(&MomentPolynomial::p(false, 2), &roots, 3).unwrap(), int(5));
        assert!(moment_eval(&MomentPolynomial::p(true, 2), &roots, 4).is_err());
    }

    #[test]
    fn two_level_identity() {
        let c = two_level_config(4, 2, &rational(3, 2)).unwrap();
        assert_eq!(c.p3, int(0));
        let c = two_level_config(4, 1, &int(1)).unwrap();
        assert_eq!(&c.p3 * &c.p3 * int(12), int(4) * &c.p2 * &c.p2 * &c.p2);
        for n in 2..9i64 {
            for r in 1..n {
                let c = two_level_config(n, r, &rational(-5, 3)).unwrap();
                let lhs = &c.p3 * &c.p3 * int(r * (n - r) * n);
                let rhs = int((n - 2 * r).pow(2)) * &c.p2 * &c.p2 * &c.p2;
                assert_eq!(lhs, rhs);
                assert_eq!(c.roots.iter().sum::<Rational>(), int(0));
            }
        }
        assert!(two_level_config(4, 0, &int(1)).is_err());
        assert!(two_level_config(4, 4, &int(1)).is_err());
        assert!(two_level_config(4, 1, &int(0)).is_err());
    }
}
