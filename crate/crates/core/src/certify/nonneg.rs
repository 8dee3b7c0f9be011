use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::exact::{RatFunc, Rational};

/// Largest integer range scanned explicitly by [`prove_nonnegative`].
pub const MAX_SCAN: i64 = 1_000_000;

/// Outcome of a nonnegativity proof for a rational function on the
/// integers `n >= floor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonnegVerdict {
    /// Nonnegative at every integer in `floor..=scanned_to`, and the sign
    /// is constant and nonnegative beyond every real root.
    Proven {
        scanned_to: i64,
    },
    Negative {
        n: i64,
        value: Rational,
    },
    Pole {
        n: i64,
    },
    /// Negative leading coefficient: negative for all large `n`.
    EventuallyNegative,
    /// The root bound exceeds [`MAX_SCAN`].
    BoundTooLarge {
        bound: BigInt,
    },
}

impl NonnegVerdict {
    pub fn is_proven(&self) -> bool {
        matches!(self, NonnegVerdict::Proven { .. })
    }
}

/// Decides `f(n) >= 0` for all integers `n >= floor`. Above the Cauchy
/// bound of numerator and denominator neither changes sign, so a finite
/// scan plus the leading-coefficient sign is a proof.
pub fn prove_nonnegative(f: &RatFunc, floor: i64) -> NonnegVerdict {
    let bound = f.num().root_bound().max(f.den().root_bound());
    let Some(b) = bound.to_i64().filter(|&b| b <= MAX_SCAN) else {
        return NonnegVerdict::BoundTooLarge { bound };
    };
    let top = b.max(floor);
    for n in floor..=top {
        match f.eval(n) {
            Err(_) => return NonnegVerdict::Pole { n },
            Ok(v) if v.is_negative() => return NonnegVerdict::Negative { n, value: v },
            Ok(_) => {}
        }
    }
    // den has positive leading coefficient in canonical form
    if !f.num().is_zero() && f.num().leading().is_negative() {
        return NonnegVerdict::EventuallyNegative;
    }
    NonnegVerdict::Proven { scanned_to: top }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn verdicts() {
        assert!(prove_nonnegative(&rf("6/(n^2-2*n)"), 3).is_proven());
        assert_eq!(prove_nonnegative(&rf("6/(n^2-2*n)"), 2), NonnegVerdict::Pole { n: 2 });
        // (n-3)(n-4) vanishes at both integers bracketing its negative range
        assert!(prove_nonnegative(&rf("n^2-7*n+12"), 0).is_proven());
        assert_eq!(
            prove_nonnegative(&rf("n^2-7*n+11"), 0),
            NonnegVerdict::Negative {
                n: 3,
                value: Rational::from_integer((-1).into())
            }
        );
        assert!(prove_nonnegative(&rf("n^2-7*n+11"), 5).is_proven());
        assert_eq!(
            prove_nonnegative(&rf("-1/(n+1)"), 10),
            NonnegVerdict::Negative {
                n: 10,
                value: Rational::new((-1).into(), 11.into())
            }
        );
        assert!(prove_nonnegative(&RatFunc::zero(), 0).is_proven());
        assert!(matches!(
            prove_nonnegative(&rf("2000000-n"), 0),
            NonnegVerdict::BoundTooLarge { .. }
        ));
    }
}
