use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Dense polynomial in `t` over a ring `R`, lowest degree first.
///
/// The leading stored coefficient is always nonzero; the zero polynomial
/// has no coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

/// Result of repeated differentiation. `degenerate` is set when the order
/// exceeded the degree and the result collapsed to zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivative<R> {
    pub poly: UniPoly<R>,
    pub degenerate: bool,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&R> {
        self.coeffs.get(i)
    }

    /// `prod (t - root)`, with coefficients the signed elementary symmetric
    /// functions of the roots.
    pub fn from_roots(roots: &[R]) -> Result<Self> {
        let first = roots.first().ok_or(Error::Empty("root list"))?;
        let mut coeffs = vec![first.one_like()];
        for root in roots {
            // multiply by (t - root)
            let mut next = vec![root.zero_like(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] = next[i + 1].plus(c);
                next[i] = next[i].minus(&c.times(root));
            }
            coeffs = next;
        }
        Ok(Self::new(coeffs))
    }

    /// The `k`-th derivative in `t`.
    pub fn derivative(&self, k: usize) -> Derivative<R> {
        let Some(deg) = self.degree() else {
            return Derivative {
                poly: Self::zero(),
                degenerate: k > 0,
            };
        };
        if k > deg {
            return Derivative {
                poly: Self::zero(),
                degenerate: true,
            };
        }
        let coeffs = (k..=deg)
            .map(|i| {
                let factor: BigInt = ((i - k + 1)..=i).map(BigInt::from).product();
                self.coeffs[i].scaled(&factor)
            })
            .collect();
        Derivative {
            poly: Self::new(coeffs),
            degenerate: false,
        }
    }

    pub fn eval(&self, x: &R) -> Option<R> {
        let top = self.coeffs.last()?;
        Some(
            self.coeffs
                .iter()
                .rev()
                .skip(1)
                .fold(top.clone(), |acc, c| acc.times(x).plus(c)),
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.times(c)).collect())
    }
}
