use crate::error::{Error, Result};
use crate::exact::{PolyInN, RatFunc};
use crate::multipoly::{discriminant, UniPoly};

use super::newton::newton_e_table;
use super::poly::MomentPolynomial;

/// Largest terminal order accepted by [`terminal_disc`] by default.
pub const DEFAULT_TERMINAL_R_CAP: u32 = 5;

/// The normalized terminal polynomial `J_{n,r}(t) = (r!/n!) P^{(n-r)}(t)`
/// for centered roots: monic, depressed, with the coefficient of `t^{r-j}`
/// homogeneous of moment degree `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct TerminalPolynomial {
    r: u32,
    /// Coefficient of `t^i` at index `i`; index `r` is `1`.
    coeffs: Vec<MomentPolynomial>,
}

impl TerminalPolynomial {
    pub fn order(&self) -> u32 {
        self.r
    }

    pub fn coeffs(&self) -> &[MomentPolynomial] {
        &self.coeffs
    }

    /// Coefficient of `t^i`.
    pub fn coeff(&self, i: u32) -> &MomentPolynomial {
        &self.coeffs[i as usize]
    }

    pub fn to_unipoly(&self) -> UniPoly<MomentPolynomial> {
        UniPoly::new(self.coeffs.clone())
    }

    /// `J_{n,r}` evaluated as a polynomial in `t` at a concrete `n` and
    /// concrete power sums.
    pub fn specialize(
        &self,
        n0: i64,
        mut power_sum: impl FnMut(u32) -> crate::exact::Rational,
    ) -> Result<UniPoly<crate::exact::Rational>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval_with(n0, &mut power_sum))
            .collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(coeffs))
    }
}

fn check_order(r: u32, cap: u32) -> Result<()> {
    if r < 2 {
        return Err(Error::OutOfRange(format!("terminal order r = {r} must be at least 2")));
    }
    if r > cap {
        return Err(Error::OutOfRange(format!(
            "terminal order r = {r} exceeds the cap {cap}"
        )));
    }
    Ok(())
}

/// `J_{n,r}` with `t^{r-j}` coefficient `(-1)^j (r)_j / (n)_j * e_j`.
pub fn terminal_polynomial(r: u32) -> Result<TerminalPolynomial> {
    check_order(r, u32::MAX)?;
    let e = newton_e_table(r, true);
    let coeffs = (0..=r)
        .map(|i| {
            let j = r - i;
            let ratio = RatFunc::new(
                PolyInN::constant(crate::exact::falling_factorial(&r.into(), j)),
                PolyInN::falling_factorial(j),
            )
            .expect("falling factorial is nonzero");
            let sign = if j.is_multiple_of(2) { ratio } else { -ratio };
            e[j as usize].scale(&sign)
        })
        .collect();
    Ok(TerminalPolynomial { r, coeffs })
}

/// `disc(J_{n,r})` as a moment polynomial, for `2 <= r <= cap`.
///
/// The resultant runs on `(n)_r J_{n,r}`, whose coefficients are
/// polynomial in `n`; the factor `(n)_r^{2r-2}` is removed afterwards.
pub fn terminal_disc_with_cap(r: u32, cap: u32) -> Result<MomentPolynomial> {
    check_order(r, cap)?;
    let j = terminal_polynomial(r)?;
    let scale = RatFunc::from_poly(PolyInN::falling_factorial(r));
    let scaled = UniPoly::new(j.coeffs.iter().map(|c| c.scale(&scale)).collect());
    let d = discriminant(&scaled)?;
    Ok(d.scale(&scale.pow(2 * r - 2).recip()?))
}

pub fn terminal_disc(r: u32) -> Result<MomentPolynomial> {
    terminal_disc_with_cap(r, DEFAULT_TERMINAL_R_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeff(j: &TerminalPolynomial, i: u32, parts: &[u32]) -> String {
        j.coeff(i).coeff(parts).to_string()
    }

    #[test]
    fn low_orders() {
        let j2 = terminal_polynomial(2).unwrap();
        assert!(j2.coeff(2).coeff(&[]).is_one());
        assert!(j2.coeff(1).is_zero());
        assert_eq!(coeff(&j2, 0, &[2]), "-1/(n^2-n)");

        let j3 = terminal_polynomial(3).unwrap();
        assert_eq!(coeff(&j3, 1, &[2]), "-3/(n^2-n)");
        assert_eq!(coeff(&j3, 0, &[3]), "-2/(n^3-3*n^2+2*n)");
        assert!(j3.coeff(2).is_zero());
    }

    #[test]
    fn quintic() {
        let j5 = terminal_polynomial(5).unwrap();
        let n4: RatFunc = RatFunc::from_poly(PolyInN::falling_factorial(4));
        let n5: RatFunc = RatFunc::from_poly(PolyInN::falling_factorial(5));
        assert!(j5.coeff(4).is_zero());
        assert_eq!(
            j5.coeff(3).coeff(&[2]),
            RatFunc::from_int(-10)
                .checked_div(&RatFunc::from_poly(PolyInN::falling_factorial(2)))
                .unwrap()
        );
        assert_eq!(
            j5.coeff(1).coeff(&[2, 2]),
            RatFunc::from_int(15).checked_div(&n4).unwrap()
        );
        assert_eq!(
            j5.coeff(1).coeff(&[4]),
            RatFunc::from_int(-30).checked_div(&n4).unwrap()
        );
        assert_eq!(
            j5.coeff(0).coeff(&[3, 2]),
            RatFunc::from_int(20).checked_div(&n5).unwrap()
        );
        assert_eq!(
            j5.coeff(0).coeff(&[5]),
            RatFunc::from_int(-24).checked_div(&n5).unwrap()
        );
        for i in 0..4 {
            assert_eq!(j5.coeff(i).homogeneous_degree(), Some(5 - i));
        }
    }

    #[test]
    fn quadratic_disc_and_range() {
        let d = terminal_disc(2).unwrap();
        assert_eq!(d.terms().len(), 1);
        assert_eq!(d.coeff(&[2]).to_string(), "4/(n^2-n)");
        assert!(terminal_disc(1).is_err());
        assert!(terminal_disc(6).is_err());
        assert!(terminal_polynomial(1).is_err());
    }
}
