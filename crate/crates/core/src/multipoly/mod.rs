//! Polynomials in the roots, polynomials in `t` over a pluggable ring,
//! Sylvester resultants and discriminants.

mod multi;
mod resultant;
mod univariate;

pub use multi::MultiPoly;
pub use resultant::{determinant, discriminant, quartic_disc_formula, sylvester_matrix, sylvester_resultant};
pub use univariate::{Derivative, UniPoly};

use crate::error::{Error, Result};

/// Default largest `n` accepted by [`disc_derivative_symbolic`].
pub const DEFAULT_SYMBOLIC_N_CAP: usize = 7;

/// `disc(P^{(k)})` for `P = prod (t - x_i)`, as a polynomial in `x_1..x_n`.
///
/// Term counts grow quickly with `(n-k)(n-k-1)`; the cap keeps accidental
/// requests such as `n = 7, k = 0` from running for hours.
pub fn disc_derivative_symbolic(n: usize, k: usize, n_cap: usize) -> Result<MultiPoly> {
    if n < 2 || n > n_cap {
        return Err(Error::OutOfRange(format!("n = {n} must lie in 2..={n_cap}")));
    }
    if k + 2 > n {
        return Err(Error::OutOfRange(format!("k = {k} must lie in 0..={}", n - 2)));
    }
    let p = UniPoly::from_roots(&MultiPoly::vars(n))?;
    discriminant(&p.derivative(k).poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rational, Rational};

    #[test]
    fn two_roots_is_squared_difference() {
        let d = disc_derivative_symbolic(2, 0, DEFAULT_SYMBOLIC_N_CAP).unwrap();
        let x = MultiPoly::vars(2);
        assert_eq!(d, (&x[0] - &x[1]).pow(2));
    }

    #[test]
    fn first_derivative_of_cubic_matches_quadratic_closed_form() {
        // n = 3, k = 1: (n-1)((n-2)!)^2 sum_{i<j} (x_i - x_j)^2 = 2 * sum.
        let d = disc_derivative_symbolic(3, 1, DEFAULT_SYMBOLIC_N_CAP).unwrap();
        let x = MultiPoly::vars(3);
        let sum = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| (&x[i] - &x[j]).pow(2))
            .fold(MultiPoly::zero(3), |acc, t| &acc + &t);
        assert_eq!(d, sum.scale(&int(2)));
    }

    #[test]
    fn symmetric_homogeneous_and_translation_invariant() {
        for (n, k) in [(3, 0), (4, 1), (4, 2), (5, 3)] {
            let d = disc_derivative_symbolic(n, k, DEFAULT_SYMBOLIC_N_CAP).unwrap();
            let r = (n - k) as u32;
            assert_eq!(d.homogeneous_degree(), Some(r * (r - 1)));
            for i in 0..n - 1 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(i, i + 1);
                assert_eq!(d.permute(&perm), d);
            }
            let pt: Vec<Rational> = (0..n).map(|i| rational(i as i64 * 3 - 2, 2)).collect();
            let shifted: Vec<Rational> = pt.iter().map(|v| v + rational(7, 3)).collect();
            assert_eq!(d.eval(&pt), d.eval(&shifted));
            assert_eq!(d.eval(&vec![rational(5, 7); n]), int(0));
        }
    }

    #[test]
    fn range_errors() {
        assert!(disc_derivative_symbolic(1, 0, 7).is_err());
        assert!(disc_derivative_symbolic(8, 6, 7).is_err());
        assert!(disc_derivative_symbolic(4, 3, 7).is_err());
    }
}
