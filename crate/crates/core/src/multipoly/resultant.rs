//! Sylvester resultants and discriminants over any [`Ring`].

use num_bigint::BigInt;

use super::univariate::UniPoly;
use crate::error::{Error, Result};
use crate::ring::Ring;

/// The `(deg f + deg g)`-square Sylvester matrix. The first `deg g` rows
/// hold shifted copies of `f` (leading coefficient first), the remaining
/// `deg f` rows shifted copies of `g`.
pub fn sylvester_matrix<R: Ring>(f: &UniPoly<R>, g: &UniPoly<R>) -> Result<Vec<Vec<R>>> {
    let df = f.degree().ok_or(Error::ZeroPolynomial("sylvester_matrix"))?;
    let dg = g.degree().ok_or(Error::ZeroPolynomial("sylvester_matrix"))?;
    let zero = f.coeffs()[0].zero_like();
    let size = df + dg;
    let mut m = vec![vec![zero; size]; size];
    for row in 0..dg {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            m[row][row + j] = c.clone();
        }
    }
    for row in 0..df {
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            m[dg + row][row + j] = c.clone();
        }
    }
    Ok(m)
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every division is exact in an integral domain; a failed division means
/// the ring implementation is broken and is reported as such.
// Rows `i` and `k` are read together, so index loops are clearer here.
#[allow(clippy::needless_range_loop)]
pub fn determinant<R: Ring>(mut m: Vec<Vec<R>>) -> Result<R> {
    let size = m.len();
    if size == 0 {
        return Err(Error::Empty("matrix"));
    }
    if m.iter().any(|row| row.len() != size) {
        return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
    }
    let mut negate = false;
    let mut prev = m[0][0].one_like();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&i| !m[i][k].is_zero()) else {
                return Ok(m[0][0].zero_like());
            };
            m.swap(k, swap);
            negate = !negate;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..size {
            let lead = m[i][k].clone();
            for j in k + 1..size {
                let cross = if lead.is_zero() || m[k][j].is_zero() {
                    m[i][j].times(&pivot)
                } else {
                    m[i][j].times(&pivot).minus(&lead.times(&m[k][j]))
                };
                m[i][j] = cross
                    .exact_div(&prev)
                    .ok_or(Error::InexactDivision("Bareiss elimination"))?;
            }
            m[i][k] = pivot.zero_like();
        }
        prev = pivot;
    }
    let det = m[size - 1][size - 1].clone();
    Ok(if negate { det.negated() } else { det })
}

/// `Res(f, g)` as the Sylvester determinant. Both inputs need degree >= 1.
pub fn sylvester_resultant<R: Ring>(f: &UniPoly<R>, g: &UniPoly<R>) -> Result<R> {
    for p in [f, g] {
        match p.degree() {
            None => return Err(Error::ZeroPolynomial("sylvester_resultant")),
            Some(0) => return Err(Error::DegreeTooSmall { degree: 0, min: 1 }),
            Some(_) => {}
        }
    }
    determinant(sylvester_matrix(f, g)?)
}

/// `(-1)^{m(m-1)/2} Res(f, f') / c` for `f` of degree `m >= 2` with leading
/// coefficient `c`. The division is checked by multiplying back.
pub fn discriminant<R: Ring>(f: &UniPoly<R>) -> Result<R> {
    let m = f.degree().ok_or(Error::ZeroPolynomial("discriminant"))?;
    if m < 2 {
        return Err(Error::DegreeTooSmall { degree: m, min: 2 });
    }
    let df = f.derivative(1).poly;
    let res = sylvester_resultant(f, &df)?;
    let c = f.leading().expect("nonzero polynomial");
    let q = res
        .exact_div(c)
        .ok_or(Error::InexactDivision("discriminant leading coefficient"))?;
    if q.times(c) != res {
        return Err(Error::InexactDivision("discriminant multiply-back"));
    }
    Ok(if (m * (m - 1) / 2) % 2 == 1 { q.negated() } else { q })
}

/// Discriminant of the generic depressed quartic `A t^4 + B t^2 + C t + D`.
pub fn quartic_disc_formula<R: Ring>(a: &R, b: &R, c: &R, d: &R) -> R {
    let k = |x: i64| BigInt::from(x);
    let pw = |x: &R, e: u32| (0..e).fold(x.one_like(), |acc, _| acc.times(x));
    let terms = [
        pw(a, 3).times(&pw(d, 3)).scaled(&k(256)),
        pw(a, 2).times(&pw(b, 2)).times(&pw(d, 2)).scaled(&k(-128)),
        pw(a, 2).times(b).times(&pw(c, 2)).times(d).scaled(&k(144)),
        pw(a, 2).times(&pw(c, 4)).scaled(&k(-27)),
        a.times(&pw(b, 4)).times(d).scaled(&k(16)),
        a.times(&pw(b, 3)).times(&pw(c, 2)).scaled(&k(-4)),
    ];
    terms.iter().skip(1).fold(terms[0].clone(), |acc, t| acc.plus(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Rational};
    use crate::multipoly::MultiPoly;

    fn upoly(c: &[MultiPoly]) -> UniPoly<MultiPoly> {
        UniPoly::new(c.to_vec())
    }

    #[test]
    fn resultant_shared_root_vanishes() {
        let f = UniPoly::new(vec![int(-1), int(0), int(1)]);
        let g = UniPoly::new(vec![int(-1), int(1)]);
        assert_eq!(sylvester_resultant(&f, &g).unwrap(), int(0));
    }

    #[test]
    fn resultant_linear_case() {
        let x = MultiPoly::vars(2);
        let one = MultiPoly::constant(2, Rational::from_integer(1.into()));
        let f = upoly(&[-&x[0], one.clone()]);
        let g = upoly(&[-&x[1], one]);
        let r = sylvester_resultant(&f, &g).unwrap();
        assert_eq!(r, &x[0] - &x[1]);
    }

    #[test]
    fn resultant_quadratic_and_derivative() {
        // Hand expansion of the 3x3 Sylvester determinant
        // | 1 b c | 2 b 0 | 0 2 b | = b^2 - 2b^2 + 4c.
        let x = MultiPoly::vars(2);
        let (b, c) = (&x[0], &x[1]);
        let one = MultiPoly::constant(2, int(1));
        let two = MultiPoly::constant(2, int(2));
        let f = upoly(&[c.clone(), b.clone(), one]);
        let g = upoly(&[b.clone(), two]);
        let expected = &c.scale(&int(4)) - &b.pow(2);
        assert_eq!(sylvester_resultant(&f, &g).unwrap(), expected);
    }

    #[test]
    fn discriminant_examples() {
        let x = MultiPoly::vars(4);
        let one = MultiPoly::constant(4, int(1));
        let zero = MultiPoly::zero(4);
        let quad = upoly(&[x[1].clone(), x[0].clone(), one]);
        assert_eq!(discriminant(&quad).unwrap(), &x[0].pow(2) - &x[1].scale(&int(4)));

        let (a, b, c, d) = (&x[0], &x[1], &x[2], &x[3]);
        let cubic = upoly(&[c.clone(), b.clone(), zero.clone(), a.clone()]);
        let expected = &(a * &b.pow(3)).scale(&int(-4)) - &(&a.pow(2) * &c.pow(2)).scale(&int(27));
        assert_eq!(discriminant(&cubic).unwrap(), expected);

        let quartic = upoly(&[d.clone(), c.clone(), b.clone(), zero, a.clone()]);
        assert_eq!(discriminant(&quartic).unwrap(), quartic_disc_formula(a, b, c, d));
    }

    #[test]
    fn discriminant_errors() {
        let lin = UniPoly::new(vec![int(1), int(1)]);
        assert_eq!(discriminant(&lin), Err(Error::DegreeTooSmall { degree: 1, min: 2 }));
        assert_eq!(
            discriminant(&UniPoly::<Rational>::zero()),
            Err(Error::ZeroPolynomial("discriminant"))
        );
        assert_eq!(
            sylvester_resultant(&UniPoly::<Rational>::zero(), &lin),
            Err(Error::ZeroPolynomial("sylvester_resultant"))
        );
    }

    #[test]
    fn determinant_needs_pivoting() {
        let m = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(determinant(m).unwrap(), int(-1));
        let singular = vec![vec![int(0), int(1)], vec![int(0), int(2)]];
        assert_eq!(determinant(singular).unwrap(), int(0));
    }
}
