use crate::error::{Error, Result};
use crate::exact::{RatFunc, Rational};
use crate::moments::{MomentPartition, MomentPolynomial};

/// Partitions of `d` into parts `>= 2`, in ascending `MomentPartition`
/// order; for `d = 6`: `(2,2,2), (3,3), (4,2), (6)`.
pub fn moment_basis(d: u32) -> Vec<MomentPartition> {
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<MomentPartition>) {
        if left == 0 {
            out.push(MomentPartition::new(cur.clone()));
            return;
        }
        for part in (2..=max.min(left)).rev() {
            cur.push(part);
            rec(left - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn check_support(f: &MomentPolynomial, basis: &[MomentPartition]) -> Result<()> {
    match f.terms().keys().find(|p| basis.binary_search(p).is_err()) {
        Some(p) => Err(Error::DimensionMismatch(format!(
            "term {p} is outside the basis of degree {}",
            basis.first().map_or(0, MomentPartition::degree)
        ))),
        None => Ok(()),
    }
}

/// Coefficients of `f` on `basis`, with `n` symbolic.
pub fn to_symbolic_vector(f: &MomentPolynomial, basis: &[MomentPartition]) -> Result<Vec<RatFunc>> {
    check_support(f, basis)?;
    Ok(basis.iter().map(|p| f.coeff(p.parts())).collect())
}

/// Coefficients of `f` on `basis`, evaluated at `n = n0`.
pub fn to_vector(f: &MomentPolynomial, n0: i64, basis: &[MomentPartition]) -> Result<Vec<Rational>> {
    to_symbolic_vector(f, basis)?.iter().map(|c| c.eval(n0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::graphs::degree_six_reference;

    #[test]
    fn bases() {
        let b6: Vec<Vec<u32>> = moment_basis(6).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(b6, vec![vec![2, 2, 2], vec![3, 3], vec![4, 2], vec![6]]);
        assert_eq!(moment_basis(12).len(), 21);
        assert_eq!(moment_basis(20).len(), 137);
    }

    #[test]
    fn vectors() {
        let b = moment_basis(6);
        let e = to_vector(&MomentPolynomial::p(true, 2).pow(3), 4, &b).unwrap();
        assert_eq!(e, vec![int(1), int(0), int(0), int(0)]);
        let t = to_vector(&degree_six_reference("T").unwrap(), 3, &b).unwrap();
        assert_eq!(t, vec![int(-1), int(-3), int(3), int(0)]);
        assert_eq!(
            to_vector(&MomentPolynomial::zero(true), 3, &b).unwrap(),
            vec![int(0); 4]
        );
        assert!(to_vector(&MomentPolynomial::p(true, 4), 3, &b).is_err());
        let pole = MomentPolynomial::p(true, 6).scale(&"1/(n-2)".parse().unwrap());
        assert!(to_vector(&pole, 2, &b).is_err());
    }
}
