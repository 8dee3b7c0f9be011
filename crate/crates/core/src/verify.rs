//! Named verification suites: each identity is recomputed from scratch and
//! reported as pass or fail, never as an error.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::certify::{cubic_certificate, random_roots, verify_cubic_identity_symbolic, CubicIdentityReport};
use crate::error::{Error, Result};
use crate::exact::{int, PolyInN, RatFunc, Rational};
use crate::graphs::{verify_lemma_degree_six, verify_polarization_identity};
use crate::moments::{
    closed_cubic, closed_quadratic, closed_quartic, newton_e_from_p, rescaled_terminal, terminal_disc,
    terminal_polynomial, ClosedFormula, MomentPartition, MomentPolynomial,
};
use crate::multipoly::{discriminant, quartic_disc_formula, UniPoly};

/// Seed of the root lists used by the oracle comparisons.
pub const SUITE_SEED: u64 = 0x7e4d_15c0;
/// Root lists per `n` in oracle comparisons.
pub const ORACLE_TRIALS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Newton,
    Quadratic,
    Cubic,
    Quartic,
    Quintic,
    DegreeSixExpansions,
    CubicCertificate,
    Polarization,
    All,
}

impl Suite {
    /// Every concrete suite, in report order.
    pub const CONCRETE: [Suite; 8] = [
        Suite::Newton,
        Suite::Quadratic,
        Suite::Cubic,
        Suite::Quartic,
        Suite::Quintic,
        Suite::DegreeSixExpansions,
        Suite::CubicCertificate,
        Suite::Polarization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Newton => "newton",
            Suite::Quadratic => "quadratic",
            Suite::Cubic => "cubic",
            Suite::Quartic => "quartic",
            Suite::Quintic => "quintic",
            Suite::DegreeSixExpansions => "degree-six-expansions",
            Suite::CubicCertificate => "cubic-certificate",
            Suite::Polarization => "polarization",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(Suite::All);
        }
        Suite::CONCRETE
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown suite {s:?}")))
    }
}

/// One verified identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub suite: &'static str,
    /// Short statement of what was compared.
    pub identity: String,
    /// The result this identity reproduces.
    pub anchor: &'static str,
    pub passed: bool,
    /// Mismatch description when failed.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<IdentityCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

struct Collector {
    suite: &'static str,
    checks: Vec<IdentityCheck>,
}

impl Collector {
    fn new(suite: Suite) -> Self {
        Collector {
            suite: suite.name(),
            checks: Vec::new(),
        }
    }

    fn check(&mut self, identity: impl Into<String>, anchor: &'static str, outcome: std::result::Result<(), String>) {
        self.checks.push(IdentityCheck {
            suite: self.suite,
            identity: identity.into(),
            anchor,
            passed: outcome.is_ok(),
            detail: outcome.err(),
        });
    }
}

fn equal<T: PartialEq + fmt::Display>(got: &T, want: &T) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got}, expected {want}"))
    }
}

/// `disc(P^{(n-r)})` for `P = prod (t - x_i)`, by Sylvester resultant.
pub fn resultant_oracle(roots: &[Rational], r: usize) -> Result<Rational> {
    if roots.len() < r {
        return Err(Error::OutOfRange(format!("{} roots for order {r}", roots.len())));
    }
    let p = UniPoly::from_roots(roots)?;
    discriminant(&p.derivative(roots.len() - r).poly)
}

/// Compares a closed formula with the resultant oracle on seeded random
/// rational root lists for each `n` in `ns`.
pub fn oracle_agreement(
    formula: &ClosedFormula,
    r: usize,
    ns: impl IntoIterator<Item = i64>,
    trials: usize,
) -> Result<std::result::Result<(), String>> {
    let mut rng = StdRng::seed_from_u64(SUITE_SEED ^ r as u64);
    for n in ns {
        for _ in 0..trials {
            let roots = random_roots(&mut rng, n as usize);
            let (got, want) = (formula.eval(&roots)?, resultant_oracle(&roots, r)?);
            if got != want {
                let list: Vec<String> = roots.iter().map(ToString::to_string).collect();
                return Ok(Err(format!(
                    "n = {n}, roots [{}]: formula {got}, resultant {want}",
                    list.join(", ")
                )));
            }
        }
    }
    Ok(Ok(()))
}

/// `c p_parts / (n)_j`.
fn term(c: i64, parts: &[u32], j: u32) -> MomentPolynomial {
    let coeff = RatFunc::new(PolyInN::constant(c.into()), PolyInN::falling_factorial(j)).expect("nonzero denominator");
    MomentPolynomial::monomial(true, MomentPartition::new(parts.to_vec()), coeff)
}

fn sum(terms: impl IntoIterator<Item = MomentPolynomial>) -> MomentPolynomial {
    terms.into_iter().fold(MomentPolynomial::zero(true), |acc, t| &acc + &t)
}

fn newton(c: &mut Collector) {
    const ANCHOR: &str = "centered Newton identities";
    let expected = [
        (2, sum([term(-1, &[2], 0).scale(&RatFunc::frac(1, 2))])),
        (3, sum([term(1, &[3], 0).scale(&RatFunc::frac(1, 3))])),
        (
            4,
            sum([
                term(1, &[2, 2], 0).scale(&RatFunc::frac(1, 8)),
                term(-1, &[4], 0).scale(&RatFunc::frac(1, 4)),
            ]),
        ),
        (
            5,
            sum([
                term(-1, &[3, 2], 0).scale(&RatFunc::frac(1, 6)),
                term(1, &[5], 0).scale(&RatFunc::frac(1, 5)),
            ]),
        ),
    ];
    for (j, want) in expected {
        c.check(
            format!("e_{j} = {want}"),
            ANCHOR,
            equal(&newton_e_from_p(j, true), &want),
        );
    }
}

fn symbolic(c: &mut Collector, what: &str, anchor: &'static str, closed: &ClosedFormula, r: u32) -> Result<()> {
    let rescaled = rescaled_terminal(r)?;
    let outcome = if closed.symbolically_equal(&rescaled) {
        Ok(())
    } else {
        Err(format!(
            "closed moment part {} differs from the rescaled disc(J_(n,{r}))",
            closed.moment
        ))
    };
    c.check(
        format!(
            "{what} closed form = (n!/{r}!)^{} disc(J_(n,{r})) symbolically",
            2 * r - 2
        ),
        anchor,
        outcome,
    );
    Ok(())
}

fn oracle(
    c: &mut Collector,
    what: &str,
    anchor: &'static str,
    closed: &ClosedFormula,
    r: usize,
    hi: i64,
) -> Result<()> {
    let outcome = oracle_agreement(closed, r, r as i64..=hi, ORACLE_TRIALS)?;
    c.check(
        format!(
            "{what} closed form = Sylvester discriminant of P^(n-{r}), n = {r}..{hi}, {ORACLE_TRIALS} root lists each"
        ),
        anchor,
        outcome,
    );
    Ok(())
}

fn quadratic(c: &mut Collector) -> Result<()> {
    const ANCHOR: &str = "quadratic terminal discriminant (n-1)((n-2)!)^2 n p_2";
    let f = closed_quadratic();
    symbolic(c, "quadratic", ANCHOR, &f, 2)?;
    oracle(c, "quadratic", ANCHOR, &f, 2, 8)
}

fn cubic(c: &mut Collector) -> Result<()> {
    const ANCHOR: &str = "cubic terminal discriminant n!((n-2)!)^3/12 (p_2^3 - n(n-1)/(n-2)^2 p_3^2)";
    let f = closed_cubic();
    symbolic(c, "cubic", ANCHOR, &f, 3)?;
    oracle(c, "cubic", ANCHOR, &f, 3, 8)?;
    let got = f.eval(&[int(0), int(1), int(2)])?;
    c.check("cubic closed form at roots (0, 1, 2) = 4", ANCHOR, equal(&got, &int(4)));
    Ok(())
}

fn quartic(c: &mut Collector) -> Result<()> {
    const ANCHOR: &str = "quartic terminal discriminant and its normalized form q_(n,4)";
    let f = closed_quartic();
    symbolic(c, "quartic", ANCHOR, &f, 4)?;
    oracle(c, "quartic", ANCHOR, &f, 4, 8)?;

    let j4 = terminal_polynomial(4)?;
    let alpha = term(-6, &[2], 2);
    let beta = term(-8, &[3], 3);
    let gamma = &term(3, &[2, 2], 4) - &term(6, &[4], 4);
    for (name, i, want) in [("alpha", 2, &alpha), ("beta", 1, &beta), ("gamma", 0, &gamma)] {
        c.check(format!("J_(n,4) {name} = {want}"), ANCHOR, equal(j4.coeff(i), want));
    }
    let one = MomentPolynomial::one(true);
    let disc = terminal_disc(4)?;
    c.check(
        "disc(J_(n,4)) = six-term quartic discriminant in alpha, beta, gamma",
        ANCHOR,
        equal(&disc, &quartic_disc_formula(&one, &alpha, &beta, &gamma)),
    );
    let four = MomentPolynomial::constant(true, RatFunc::from_int(4));
    let sixteen = MomentPolynomial::constant(true, RatFunc::from_int(16));
    let slice = &(&sixteen * &gamma) * &(&alpha.pow(2) - &(&four * &gamma)).pow(2);
    c.check(
        "p_3 = 0 slice: disc(q_(n,4)) = 16 gamma (alpha^2 - 4 gamma)^2",
        ANCHOR,
        equal(&disc.drop_part(3), &slice),
    );
    Ok(())
}

fn quintic(c: &mut Collector) -> Result<()> {
    const ANCHOR: &str = "quintic terminal polynomial J_(n,5)";
    let j5 = terminal_polynomial(5)?;
    let expected = [
        (5, MomentPolynomial::one(true)),
        (4, MomentPolynomial::zero(true)),
        (3, term(-10, &[2], 2)),
        (2, term(-20, &[3], 3)),
        (1, &term(15, &[2, 2], 4) - &term(30, &[4], 4)),
        (0, &term(20, &[3, 2], 5) - &term(24, &[5], 5)),
    ];
    for (i, want) in expected {
        c.check(
            format!("J_(n,5) coefficient of t^{i} = {want}"),
            ANCHOR,
            equal(j5.coeff(i), &want),
        );
    }
    let f = rescaled_terminal(5)?;
    let outcome = oracle_agreement(&f, 5, 5..=8, ORACLE_TRIALS)?;
    c.check(
        format!(
            "(n!/5!)^8 disc(J_(n,5)) = Sylvester discriminant of P^(n-5), n = 5..8, {ORACLE_TRIALS} root lists each"
        ),
        ANCHOR,
        outcome,
    );
    Ok(())
}

fn degree_six(c: &mut Collector) {
    const ANCHOR: &str = "degree-six square-graph expansions T, P, Q, R";
    for check in verify_lemma_degree_six() {
        let outcome = if check.passed() {
            Ok(())
        } else {
            let diffs: Vec<String> = check
                .mismatches()
                .iter()
                .map(|(p, want, got)| format!("{p}: expected {want}, got {got}"))
                .collect();
            Err(diffs.join("; "))
        };
        c.check(
            format!("{} = {} expansion", check.generator.name, check.generator.graph),
            ANCHOR,
            outcome,
        );
    }
}

fn cubic_certificate_suite(c: &mut Collector) -> Result<()> {
    const ANCHOR: &str = "positive square-graph expansion of the cubic terminal discriminant";
    let report = verify_cubic_identity_symbolic();
    let flag = |ok: bool, msg: &str| if ok { Ok(()) } else { Err(msg.to_string()) };
    c.check(
        "identity times 8n(n-2)^2 holds on every degree-six coordinate",
        ANCHOR,
        flag(report.cleared_identity, "cleared coefficients differ"),
    );
    c.check(
        "p_2^3 coefficient sum = 1",
        ANCHOR,
        equal(&report.p2_cubed, &RatFunc::one()),
    );
    c.check(
        "p_3^2 coefficient sum = -n(n-1)/(n-2)^2",
        ANCHOR,
        equal(&report.p3_squared, &CubicIdentityReport::expected_p3_squared()),
    );
    c.check(
        "p_2 p_4 coefficient sum = 0",
        ANCHOR,
        equal(&report.p2_p4, &RatFunc::zero()),
    );
    c.check("p_6 coefficient sum = 0", ANCHOR, equal(&report.p6, &RatFunc::zero()));
    for n0 in [3, 5, 8] {
        let check = cubic_certificate(n0)?.check()?;
        c.check(
            format!("certificate at n = {n0} recombines to the cubic moment part"),
            ANCHOR,
            flag(check.passed(), "recombination or weight sign failed"),
        );
    }
    let weights = cubic_certificate(5)?.weights_at(5)?;
    let want: Vec<Rational> = [(2, 5), (1, 30), (1, 60), (1, 360)]
        .iter()
        .map(|&(a, b)| Rational::new(a.into(), b.into()))
        .collect();
    let show = |w: &[Rational]| w.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    c.check(
        "certificate weights at n = 5 are 2/5, 1/30, 1/60, 1/360",
        ANCHOR,
        if weights == want {
            Ok(())
        } else {
            Err(format!("got {}", show(&weights)))
        },
    );
    Ok(())
}

fn polarization(c: &mut Collector) {
    c.check(
        "(x_i-x_j)(x_j-x_k) = ((x_i-x_k)^2 - (x_i-x_j)^2 - (x_j-x_k)^2)/2",
        "polarization of odd edge pairs into square edges",
        if verify_polarization_identity() {
            Ok(())
        } else {
            Err("polynomials differ".into())
        },
    );
}

/// Runs one suite; `Suite::All` concatenates the others in fixed order.
pub fn run_suite(suite: Suite) -> Result<SuiteReport> {
    if suite == Suite::All {
        let mut checks = Vec::new();
        for s in Suite::CONCRETE {
            checks.extend(run_suite(s)?.checks);
        }
        return Ok(SuiteReport { suite, checks });
    }
    let mut c = Collector::new(suite);
    match suite {
        Suite::Newton => newton(&mut c),
        Suite::Quadratic => quadratic(&mut c)?,
        Suite::Cubic => cubic(&mut c)?,
        Suite::Quartic => quartic(&mut c)?,
        Suite::Quintic => quintic(&mut c)?,
        Suite::DegreeSixExpansions => degree_six(&mut c),
        Suite::CubicCertificate => cubic_certificate_suite(&mut c)?,
        Suite::Polarization => polarization(&mut c),
        Suite::All => unreachable!("handled above"),
    }
    debug_assert!(c.checks.iter().all(|x| x.passed == x.detail.is_none()));
    Ok(SuiteReport {
        suite,
        checks: c.checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for s in Suite::CONCRETE {
            let report = run_suite(s).unwrap();
            assert!(!report.checks.is_empty(), "{s}");
            for check in &report.checks {
                assert!(check.passed, "{s}: {} ({:?})", check.identity, check.detail);
            }
        }
    }

    #[test]
    fn counts_and_names() {
        assert_eq!(run_suite(Suite::DegreeSixExpansions).unwrap().checks.len(), 4);
        assert_eq!(run_suite(Suite::Polarization).unwrap().checks.len(), 1);
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("lemma".parse::<Suite>().is_err());
        for s in Suite::CONCRETE {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }

    #[test]
    fn oracle_is_not_vacuous() {
        let wrong = ClosedFormula {
            moment: closed_cubic().moment.scale(&RatFunc::from_int(2)),
            ..closed_cubic()
        };
        assert!(oracle_agreement(&wrong, 3, 3..=4, 2).unwrap().is_err());
    }

    #[test]
    fn all_is_the_concatenation() {
        let all = run_suite(Suite::All).unwrap();
        let parts: usize = Suite::CONCRETE
            .iter()
            .map(|&s| run_suite(s).unwrap().checks.len())
            .sum();
        assert_eq!(all.checks.len(), parts);
        assert!(all.passed());
        assert_eq!(all, run_suite(Suite::All).unwrap());
    }
}
