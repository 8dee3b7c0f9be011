use crate::error::{Error, Result};
use crate::exact::{PolyInN, RatFunc};
use crate::graphs::degree_six_reference;
use crate::moments::{closed_cubic, MomentPolynomial};

use super::certificate::{Certificate, CertificateEntry, CertificateScope, GeneratorSet};

/// Weights on the triangle (per 6), path, double-edge-plus-edge and
/// matching generators, in that order.
pub fn cubic_weights() -> Vec<RatFunc> {
    let n = PolyInN::n();
    let n2 = PolyInN::linear(2);
    let base = &n * &n2;
    [
        (6, base.clone()),
        (1, base.scale(&2.into())),
        (1, base.scale(&4.into())),
        (1, (&base * &n2).scale(&8.into())),
    ]
    .into_iter()
    .map(|(c, d)| RatFunc::new(PolyInN::constant(c.into()), d).expect("nonzero denominator"))
    .collect()
}

/// The symbolic certificate, valid for every `n >= 3`.
pub fn cubic_certificate_uniform() -> Certificate {
    let set = GeneratorSet::degree_six_named();
    Certificate {
        target_name: "terminal-cubic".into(),
        scope: CertificateScope::Uniform,
        floor_n: 3,
        target: closed_cubic().moment,
        entries: set
            .generators
            .into_iter()
            .zip(cubic_weights())
            .map(|(generator, weight)| CertificateEntry { generator, weight })
            .collect(),
    }
}

/// The certificate with weights evaluated at `n0 >= 3`.
pub fn cubic_certificate(n0: i64) -> Result<Certificate> {
    if n0 < 3 {
        return Err(Error::OutOfRange(format!("n = {n0} must be at least 3")));
    }
    let mut cert = cubic_certificate_uniform();
    for e in &mut cert.entries {
        e.weight = RatFunc::from_rational(&e.weight.eval(n0)?);
    }
    cert.scope = CertificateScope::Fixed(n0);
    cert.floor_n = n0;
    Ok(cert)
}

/// The identity re-derived from the reference degree-six expansions.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicIdentityReport {
    /// Both sides times `8n(n-2)^2` agree as polynomials in `n` on every
    /// basis coordinate.
    pub cleared_identity: bool,
    pub p2_cubed: RatFunc,
    pub p3_squared: RatFunc,
    pub p2_p4: RatFunc,
    pub p6: RatFunc,
}

impl CubicIdentityReport {
    pub fn expected_p3_squared() -> RatFunc {
        -RatFunc::new(PolyInN::falling_factorial(2), PolyInN::linear(2).pow(2)).expect("nonzero denominator")
    }

    pub fn passed(&self) -> bool {
        self.cleared_identity
            && self.p2_cubed.is_one()
            && self.p3_squared == Self::expected_p3_squared()
            && self.p2_p4.is_zero()
            && self.p6.is_zero()
    }
}

pub fn verify_cubic_identity_symbolic() -> CubicIdentityReport {
    let refs: Vec<MomentPolynomial> = ["T", "P", "Q", "R"]
        .iter()
        .map(|name| degree_six_reference(name).expect("known generator"))
        .collect();
    let weights = cubic_weights();
    let rhs = refs
        .iter()
        .zip(&weights)
        .fold(MomentPolynomial::zero(true), |acc, (r, w)| &acc + &r.scale(w));
    let clear = RatFunc::from_poly(&(&PolyInN::n() * &PolyInN::linear(2).pow(2)) * &PolyInN::constant(8.into()));
    let lhs = closed_cubic().moment.scale(&clear);
    let rhs_cleared = rhs.scale(&clear);
    let cleared_identity = crate::certify::moment_basis(6).iter().all(|p| {
        let (a, b) = (lhs.coeff(p.parts()), rhs_cleared.coeff(p.parts()));
        a.is_polynomial() && b.is_polynomial() && a.num() == b.num()
    });
    CubicIdentityReport {
        cleared_identity,
        p2_cubed: rhs.coeff(&[2, 2, 2]),
        p3_squared: rhs.coeff(&[3, 3]),
        p2_p4: rhs.coeff(&[4, 2]),
        p6: rhs.coeff(&[6]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    #[test]
    fn weights_at_fixed_n() {
        let w5 = cubic_certificate(5).unwrap().weights_at(5).unwrap();
        assert_eq!(
            w5,
            vec![rational(2, 5), rational(1, 30), rational(1, 60), rational(1, 360)]
        );
        let w3 = cubic_certificate(3).unwrap().weights_at(3).unwrap();
        assert_eq!(
            w3,
            vec![rational(2, 1), rational(1, 6), rational(1, 12), rational(1, 24)]
        );
        assert!(cubic_certificate(2).is_err());
    }

    #[test]
    fn certificates_check() {
        assert!(cubic_certificate_uniform().check().unwrap().passed());
        for n in [3, 5, 8] {
            assert!(cubic_certificate(n).unwrap().check().unwrap().passed());
        }
    }

    #[test]
    fn symbolic_identity() {
        let r = verify_cubic_identity_symbolic();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.p3_squared.to_string(), "(-n^2+n)/(n^2-4*n+4)");
    }

    #[test]
    fn text_round_trip() {
        let c = cubic_certificate(5).unwrap();
        let text = c.to_text();
        assert!(text.contains(" 2/5 per=6\n"));
        assert!(text.contains(" 1/360\n"));
        assert_eq!(Certificate::from_text(&text).unwrap(), c);
        let u = cubic_certificate_uniform();
        assert_eq!(Certificate::from_text(&u.to_text()).unwrap(), u);
        let tampered = text.replace(" 1/360", " 1/361");
        assert!(matches!(
            Certificate::from_text(&tampered),
            Err(Error::InvalidCertificate(_))
        ));
        let negative = u.to_text().replace("6/(n^2-2*n)", "-6/(n^2-2*n)");
        assert!(Certificate::from_text(&negative).is_err());
    }
}
