use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::RatFunc;
use crate::graphs::{
    degree_six_generators, enumerate_square_graphs_with_cap, ordered_graph_sum_cached, DistinctSumCache, Multigraph,
};
use crate::moments::{closed_cubic, terminal_disc, MomentPartition, MomentPolynomial};

use super::basis::{moment_basis, to_vector};
use super::nonneg::{prove_nonnegative, NonnegVerdict};

/// A cone-membership target.
#[derive(Clone, Debug, PartialEq)]
pub enum Target {
    /// `p_2^3 - n(n-1)/(n-2)^2 p_3^2`.
    TerminalCubic,
    /// `disc(J_{n,4})`.
    TerminalQuartic,
    /// `disc(J_{n,5})`.
    TerminalQuintic,
    Custom(MomentPolynomial),
}

impl Target {
    pub fn name(&self) -> &'static str {
        match self {
            Target::TerminalCubic => "terminal-cubic",
            Target::TerminalQuartic => "terminal-quartic",
            Target::TerminalQuintic => "terminal-quintic",
            Target::Custom(_) => "custom",
        }
    }

    /// Terminal order `r`, if any.
    pub fn order(&self) -> Option<u32> {
        match self {
            Target::TerminalCubic => Some(3),
            Target::TerminalQuartic => Some(4),
            Target::TerminalQuintic => Some(5),
            Target::Custom(_) => None,
        }
    }

    pub fn polynomial(&self) -> Result<MomentPolynomial> {
        match self {
            Target::TerminalCubic => Ok(closed_cubic().moment),
            Target::TerminalQuartic => terminal_disc(4),
            Target::TerminalQuintic => terminal_disc(5),
            Target::Custom(f) => Ok(f.clone()),
        }
    }

    /// Smallest meaningful `n`.
    pub fn min_n(&self) -> i64 {
        self.order().map_or(1, i64::from)
    }

    /// Named targets from their CLI spelling.
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "terminal-cubic" => Ok(Target::TerminalCubic),
            "terminal-quartic" => Ok(Target::TerminalQuartic),
            "terminal-quintic" => Ok(Target::TerminalQuintic),
            other => Err(Error::OutOfRange(format!("unknown target {other:?}"))),
        }
    }
}

/// A cone generator: the ordered-distinct sum of `graph`, divided by `per`.
#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    pub graph: Multigraph,
    pub per: u32,
    pub expansion: MomentPolynomial,
}

impl Generator {
    pub fn new(graph: Multigraph, per: u32, cache: &mut DistinctSumCache) -> Self {
        let graph = graph.canonical();
        let expansion = ordered_graph_sum_cached(&graph, cache).scale(&RatFunc::frac(1, per as i64));
        Generator { graph, per, expansion }
    }

    /// `graph` in canonical form, with ` per=k` when `per > 1`.
    pub fn label(&self) -> String {
        match self.per {
            1 => self.graph.canonical_form(),
            k => format!("{} per={k}", self.graph.canonical_form()),
        }
    }
}

/// Generators of one homogeneous degree, expanded once.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub degree: u32,
    pub generators: Vec<Generator>,
}

impl GeneratorSet {
    /// All square graphs of total multiplicity `d`.
    pub fn square_graphs(d: u32, cap: u32) -> Result<Self> {
        let graphs = enumerate_square_graphs_with_cap(d, cap)?;
        let mut cache = DistinctSumCache::new(true);
        Ok(GeneratorSet {
            degree: d,
            generators: graphs.into_iter().map(|g| Generator::new(g, 1, &mut cache)).collect(),
        })
    }

    /// The triangle (per 6), path, double-edge-plus-edge and matching.
    pub fn degree_six_named() -> Self {
        let mut cache = DistinctSumCache::new(true);
        GeneratorSet {
            degree: 6,
            generators: degree_six_generators()
                .into_iter()
                .map(|g| Generator::new(g.graph, g.divisor, &mut cache))
                .collect(),
        }
    }

    pub fn basis(&self) -> Vec<MomentPartition> {
        moment_basis(self.degree)
    }

    /// Column vectors at `n = n0`.
    pub fn columns(&self, n0: i64, basis: &[MomentPartition]) -> Result<Vec<Vec<crate::exact::Rational>>> {
        self.generators
            .iter()
            .map(|g| to_vector(&g.expansion, n0, basis))
            .collect()
    }
}

/// Where a certificate's weights live.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateScope {
    Fixed(i64),
    Uniform,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CertificateEntry {
    pub generator: Generator,
    pub weight: RatFunc,
}

/// `target = sum weight * generator`, with every weight nonnegative.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub target_name: String,
    pub scope: CertificateScope,
    pub floor_n: i64,
    pub target: MomentPolynomial,
    pub entries: Vec<CertificateEntry>,
}

/// Outcome of re-checking a certificate from scratch.
#[derive(Clone, Debug, PartialEq)]
pub struct CertificateCheck {
    pub recombination: bool,
    /// Per entry, in order.
    pub weights: Vec<NonnegVerdict>,
}

impl CertificateCheck {
    pub fn passed(&self) -> bool {
        self.recombination && self.weights.iter().all(NonnegVerdict::is_proven)
    }
}

impl Certificate {
    /// `sum weight * expansion`, symbolic in `n`.
    pub fn recombination(&self) -> MomentPolynomial {
        self.entries.iter().fold(MomentPolynomial::zero(true), |acc, e| {
            &acc + &e.generator.expansion.scale(&e.weight)
        })
    }

    /// Exact recombination (symbolically, or at the fixed `n`) and weight
    /// nonnegativity (at the fixed `n`, or for all `n >= floor_n`).
    pub fn check(&self) -> Result<CertificateCheck> {
        let sum = self.recombination();
        let recombination = match self.scope {
            CertificateScope::Uniform => sum == self.target,
            CertificateScope::Fixed(n0) => {
                let d = self.target.homogeneous_degree().unwrap_or(0);
                let basis = moment_basis(d);
                to_vector(&sum, n0, &basis)? == to_vector(&self.target, n0, &basis)?
            }
        };
        let weights = self
            .entries
            .iter()
            .map(|e| match self.scope {
                CertificateScope::Uniform => prove_nonnegative(&e.weight, self.floor_n),
                CertificateScope::Fixed(n0) => match e.weight.eval(n0) {
                    Err(_) => NonnegVerdict::Pole { n: n0 },
                    Ok(v) if v.is_negative() => NonnegVerdict::Negative { n: n0, value: v },
                    Ok(_) => NonnegVerdict::Proven { scanned_to: n0 },
                },
            })
            .collect();
        Ok(CertificateCheck { recombination, weights })
    }

    /// Weights evaluated at `n0`.
    pub fn weights_at(&self, n0: i64) -> Result<Vec<crate::exact::Rational>> {
        self.entries.iter().map(|e| e.weight.eval(n0)).collect()
    }

    /// The line-oriented text form; see the crate README for the grammar.
    pub fn to_text(&self) -> String {
        let mut out = String::from("termdisc-certificate 1\n");
        out.push_str(&format!("target {}\n", self.target_name));
        match self.scope {
            CertificateScope::Fixed(n) => out.push_str(&format!("n {n}\n")),
            CertificateScope::Uniform => out.push_str("n uniform\n"),
        }
        out.push_str(&format!("floor_n {}\n", self.floor_n));
        out.push_str(&format!("target_poly {}\n", self.target));
        for e in &self.entries {
            out.push_str(&format!("{} {}", e.generator.graph.canonical_form(), e.weight));
            if e.generator.per != 1 {
                out.push_str(&format!(" per={}", e.generator.per));
            }
            out.push('\n');
        }
        out
    }

    /// Parses [`Certificate::to_text`] output and re-verifies it exactly:
    /// generators are re-expanded, named targets are recomputed, and the
    /// recombination and weight signs are checked.
    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |line: usize, msg: String| Error::InvalidCertificate(format!("line {line}: {msg}"));
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let mut header = |key: &str| -> Result<(usize, String)> {
            let (no, line) = lines
                .next()
                .ok_or_else(|| Error::InvalidCertificate(format!("missing {key:?} line")))?;
            let value = line
                .strip_prefix(key)
                .filter(|r| r.starts_with(' '))
                .ok_or_else(|| bad(no, format!("expected {key:?}")))?;
            Ok((no, value.trim().to_string()))
        };
        let (no, version) = header("termdisc-certificate")?;
        if version != "1" {
            return Err(bad(no, format!("unsupported version {version}")));
        }
        let (_, target_name) = header("target")?;
        let (no, n) = header("n")?;
        let scope = match n.as_str() {
            "uniform" => CertificateScope::Uniform,
            v => CertificateScope::Fixed(v.parse().map_err(|_| bad(no, format!("bad n {v:?}")))?),
        };
        let (no, floor) = header("floor_n")?;
        let floor_n = floor.parse().map_err(|_| bad(no, format!("bad floor_n {floor:?}")))?;
        let (no, poly) = header("target_poly")?;
        let target = MomentPolynomial::parse(&poly, true).map_err(|e| bad(no, e.to_string()))?;
        if target_name != "custom" {
            let named = Target::from_name(&target_name).map_err(|e| bad(2, e.to_string()))?;
            if named.polynomial()? != target {
                return Err(bad(no, format!("target_poly differs from {target_name}")));
            }
        }
        let mut cache = DistinctSumCache::new(true);
        let mut entries = Vec::new();
        for (no, line) in lines {
            let mut fields = line.split_whitespace();
            let graph: Multigraph = fields
                .next()
                .expect("line is nonempty")
                .parse()
                .map_err(|e: Error| bad(no, e.to_string()))?;
            let weight: RatFunc = fields
                .next()
                .ok_or_else(|| bad(no, "missing weight".into()))?
                .parse()
                .map_err(|e: Error| bad(no, e.to_string()))?;
            let per = match fields.next() {
                None => 1,
                Some(f) => f
                    .strip_prefix("per=")
                    .and_then(|k| k.parse().ok())
                    .filter(|&k: &u32| k > 0)
                    .ok_or_else(|| bad(no, format!("bad field {f:?}")))?,
            };
            if let Some(extra) = fields.next() {
                return Err(bad(no, format!("unexpected field {extra:?}")));
            }
            entries.push(CertificateEntry {
                generator: Generator::new(graph, per, &mut cache),
                weight,
            });
        }
        let cert = Certificate {
            target_name,
            scope,
            floor_n,
            target,
            entries,
        };
        let check = cert.check()?;
        if !check.recombination {
            return Err(Error::InvalidCertificate(
                "recombination does not equal the target".into(),
            ));
        }
        if let Some((i, v)) = check.weights.iter().enumerate().find(|(_, v)| !v.is_proven()) {
            return Err(Error::InvalidCertificate(format!(
                "weight of {} is not provably nonnegative: {v:?}",
                cert.entries[i].generator.graph
            )));
        }
        Ok(cert)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Certificate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Certificate::from_text(s)
    }
}
