use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{rational_reconstruct, RatFunc, Rational};
use crate::graphs::DEFAULT_ENUMERATION_CAP;
use crate::moments::{moment_eval, MomentPartition, MomentPolynomial};

use super::basis::{to_symbolic_vector, to_vector};
use super::certificate::{Certificate, CertificateEntry, CertificateScope, GeneratorSet, Target};
use super::lp::{feasible_vertices, lp_feasible, LpOutcome, VertexEnumeration};
use super::nonneg::{prove_nonnegative, NonnegVerdict};

/// Seed for the random data used to look for negative evaluations.
pub const WITNESS_SEED: u64 = 0x5eed_0d15c;
/// Random root lists tried per witness search.
pub const WITNESS_TRIALS: usize = 2000;

/// Real data on which the target is negative, so no certificate can exist.
#[derive(Clone, Debug, PartialEq)]
pub struct NegativeWitness {
    pub roots: Vec<Rational>,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InfeasibilityReport {
    pub target_name: String,
    pub n: i64,
    pub generator_count: usize,
    /// `z` on the basis with `z . generator >= 0` for every generator and
    /// `z . target < 0`.
    pub farkas: Vec<(MomentPartition, Rational)>,
    pub witness: Option<NegativeWitness>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ConeOutcome {
    Feasible(Certificate),
    Infeasible(InfeasibilityReport),
}

/// Random rational roots: numerators in `[-20, 20]`, denominators in `[1, 6]`.
pub fn random_roots(rng: &mut StdRng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| Rational::new(rng.gen_range(-20..=20).into(), rng.gen_range(1..=6).into()))
        .collect()
}

/// Searches seeded random data for a negative value of `target` at `n0`.
pub fn find_negative_witness(target: &MomentPolynomial, n0: i64, trials: usize) -> Result<Option<NegativeWitness>> {
    let mut rng = StdRng::seed_from_u64(WITNESS_SEED);
    for _ in 0..trials {
        let roots = random_roots(&mut rng, n0 as usize);
        let value = moment_eval(target, &roots, n0)?;
        if value.is_negative() {
            return Ok(Some(NegativeWitness { roots, value }));
        }
    }
    Ok(None)
}

fn target_degree(target: &MomentPolynomial) -> Result<u32> {
    match target.homogeneous_degree() {
        Some(d) if !target.is_zero() => Ok(d),
        _ => Err(Error::DimensionMismatch(
            "target must be a nonzero homogeneous polynomial".into(),
        )),
    }
}

/// Membership of `target` at `n = n0` in the cone of all square graphs of
/// the target's degree, which must not exceed `generator_cap`.
pub fn cone_membership(target: &Target, n0: i64, generator_cap: u32) -> Result<ConeOutcome> {
    if n0 < target.min_n() {
        return Err(Error::OutOfRange(format!(
            "n = {n0} is below {} for {}",
            target.min_n(),
            target.name()
        )));
    }
    let poly = target.polynomial()?;
    let d = target_degree(&poly)?;
    if d > generator_cap {
        return Err(Error::OutOfRange(format!(
            "target degree {d} exceeds the generator cap {generator_cap}"
        )));
    }
    let set = GeneratorSet::square_graphs(d, generator_cap)?;
    cone_membership_with(target.name(), &poly, n0, &set)
}

/// As [`cone_membership`] over an explicit generator set.
pub fn cone_membership_with(
    target_name: &str,
    target: &MomentPolynomial,
    n0: i64,
    set: &GeneratorSet,
) -> Result<ConeOutcome> {
    let d = target_degree(target)?;
    if d != set.degree {
        return Err(Error::DimensionMismatch(format!(
            "target degree {d} but generators of degree {}",
            set.degree
        )));
    }
    let basis = set.basis();
    let columns = set.columns(n0, &basis)?;
    let b = to_vector(target, n0, &basis)?;
    match lp_feasible(&columns, &b)? {
        LpOutcome::Feasible { weights } => {
            let entries = set
                .generators
                .iter()
                .zip(weights)
                .filter(|(_, w)| !w.is_zero())
                .map(|(g, w)| CertificateEntry {
                    generator: g.clone(),
                    weight: RatFunc::from_rational(&w),
                })
                .collect();
            let cert = Certificate {
                target_name: target_name.into(),
                scope: CertificateScope::Fixed(n0),
                floor_n: n0,
                target: target.clone(),
                entries,
            };
            if !cert.check()?.passed() {
                return Err(Error::Internal("LP certificate failed re-verification"));
            }
            Ok(ConeOutcome::Feasible(cert))
        }
        LpOutcome::Infeasible { farkas } => Ok(ConeOutcome::Infeasible(InfeasibilityReport {
            target_name: target_name.into(),
            n: n0,
            generator_count: set.generators.len(),
            farkas: basis.into_iter().zip(farkas).collect(),
            witness: find_negative_witness(target, n0, WITNESS_TRIALS)?,
        })),
    }
}

/// Parameters of a uniform-in-`n` search.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub samples: Vec<i64>,
    /// Bound on numerator and denominator degree of each weight.
    pub degree_cap: usize,
    /// Bases visited by the vertex walk at the smallest sample.
    pub vertex_budget: usize,
}

impl SearchConfig {
    pub fn new(samples: Vec<i64>, degree_cap: usize) -> Self {
        SearchConfig {
            samples,
            degree_cap,
            vertex_budget: 64,
        }
    }
}

/// Default degree cap `2 r (r - 1)`.
pub fn default_degree_cap(r: u32) -> usize {
    2 * (r * (r - 1)) as usize
}

/// Per-sample LP result.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleResult {
    pub n: i64,
    /// Nonzero weights by generator label; empty when infeasible.
    pub weights: Vec<(String, Rational)>,
    pub feasible: bool,
}

/// The furthest stage reached by any candidate support.
#[derive(Clone, Debug, PartialEq)]
pub enum FailureStage {
    SampleInfeasible {
        n: i64,
        farkas: Vec<(MomentPartition, Rational)>,
    },
    NoCommonSupport,
    Interpolation {
        generator: String,
        points: Vec<(i64, Rational)>,
    },
    Recombination {
        coordinate: MomentPartition,
        difference: RatFunc,
    },
    Nonnegativity {
        generator: String,
        verdict: NonnegVerdict,
    },
}

impl FailureStage {
    fn rank(&self) -> u8 {
        match self {
            FailureStage::SampleInfeasible { .. } => 0,
            FailureStage::NoCommonSupport => 1,
            FailureStage::Interpolation { .. } => 2,
            FailureStage::Recombination { .. } => 3,
            FailureStage::Nonnegativity { .. } => 4,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FailureStage::SampleInfeasible { .. } => "sample-infeasible",
            FailureStage::NoCommonSupport => "no-common-support",
            FailureStage::Interpolation { .. } => "interpolation",
            FailureStage::Recombination { .. } => "recombination",
            FailureStage::Nonnegativity { .. } => "nonnegativity",
        }
    }
}

/// A search that ended without a certificate. Failure at a given degree
/// cap or generator set is inconclusive, not a disproof.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchReport {
    pub target_name: String,
    pub samples: Vec<i64>,
    pub degree_cap: usize,
    pub per_sample: Vec<SampleResult>,
    pub candidates_tried: usize,
    pub stage: FailureStage,
}

impl SearchReport {
    pub fn summary(&self) -> String {
        format!(
            "inconclusive: no uniform certificate for {} at degree cap {} after {} candidate supports (stage: {})",
            self.target_name,
            self.degree_cap,
            self.candidates_tried,
            self.stage.name()
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum UniformOutcome {
    Certificate(Certificate),
    Inconclusive(SearchReport),
}

/// Uniform search for `disc(J_{n,r})` over all square graphs of degree
/// `r(r-1)`.
pub fn uniform_search(r: u32, samples: &[i64], degree_cap: usize) -> Result<UniformOutcome> {
    let target = match r {
        3 => Target::TerminalCubic,
        4 => Target::TerminalQuartic,
        5 => Target::TerminalQuintic,
        _ => return Err(Error::OutOfRange(format!("terminal order r = {r} must lie in 3..=5"))),
    };
    let d = r * (r - 1);
    let set = GeneratorSet::square_graphs(d, DEFAULT_ENUMERATION_CAP.max(6))?;
    uniform_search_with(&target, &set, &SearchConfig::new(samples.to_vec(), degree_cap))
}

fn validate_samples(target: &Target, config: &SearchConfig) -> Result<()> {
    let s = &config.samples;
    if s.len() < config.degree_cap + 2 {
        return Err(Error::InsufficientSamples(format!(
            "{} samples given, degree cap {} needs at least {}",
            s.len(),
            config.degree_cap,
            config.degree_cap + 2
        )));
    }
    let distinct: BTreeSet<i64> = s.iter().copied().collect();
    if distinct.len() != s.len() {
        return Err(Error::InsufficientSamples(
            "sample points must be pairwise distinct".into(),
        ));
    }
    if let Some(bad) = s.iter().find(|&&n| n < target.min_n()) {
        return Err(Error::OutOfRange(format!(
            "sample n = {bad} is below {} for {}",
            target.min_n(),
            target.name()
        )));
    }
    Ok(())
}

/// Solves `columns * x = target` when the columns are independent and the
/// system is consistent.
fn solve_unique(columns: &[&Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let (m, c) = (target.len(), columns.len());
    let mut a: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|col| col[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut row = 0;
    for col in 0..c {
        let p = (row..m).find(|&i| !a[i][col].is_zero())?;
        a.swap(row, p);
        let pivot = a[row][col].clone();
        for x in a[row].iter_mut() {
            *x /= &pivot;
        }
        let pr = a[row].clone();
        for (i, r) in a.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, y) in r.iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        row += 1;
    }
    if a[row..].iter().any(|r| !r[c].is_zero()) {
        return None;
    }
    Some(a[..c].iter().map(|r| r[c].clone()).collect())
}

struct Sample {
    n: i64,
    columns: Vec<Vec<Rational>>,
    target: Vec<Rational>,
}

fn support(weights: &[Rational]) -> Vec<usize> {
    weights
        .iter()
        .enumerate()
        .filter(|(_, w)| !w.is_zero())
        .map(|(i, _)| i)
        .collect()
}

fn restricted(sample: &Sample, cols: &[usize]) -> Vec<Vec<Rational>> {
    cols.iter().map(|&j| sample.columns[j].clone()).collect()
}

/// Solves at every sample, chooses candidate supports shared by all
/// samples, interpolates each weight in `n`, and verifies the result
/// symbolically and for sign.
pub fn uniform_search_with(target: &Target, set: &GeneratorSet, config: &SearchConfig) -> Result<UniformOutcome> {
    validate_samples(target, config)?;
    let poly = target.polynomial()?;
    let d = target_degree(&poly)?;
    if d != set.degree {
        return Err(Error::DimensionMismatch(format!(
            "target degree {d} but generators of degree {}",
            set.degree
        )));
    }
    let basis = set.basis();
    let mut sorted = config.samples.clone();
    sorted.sort_unstable();
    let samples: Vec<Sample> = sorted
        .iter()
        .map(|&n| {
            Ok(Sample {
                n,
                columns: set.columns(n, &basis)?,
                target: to_vector(&poly, n, &basis)?,
            })
        })
        .collect::<Result<_>>()?;
    let solutions: Vec<LpOutcome> = samples
        .par_iter()
        .map(|s| lp_feasible(&s.columns, &s.target))
        .collect::<Result<_>>()?;

    let labels: Vec<String> = set.generators.iter().map(|g| g.label()).collect();
    let per_sample: Vec<SampleResult> = samples
        .iter()
        .zip(&solutions)
        .map(|(s, sol)| match sol {
            LpOutcome::Feasible { weights } => SampleResult {
                n: s.n,
                feasible: true,
                weights: support(weights)
                    .into_iter()
                    .map(|j| (labels[j].clone(), weights[j].clone()))
                    .collect(),
            },
            LpOutcome::Infeasible { .. } => SampleResult {
                n: s.n,
                feasible: false,
                weights: Vec::new(),
            },
        })
        .collect();
    let report = |candidates_tried, stage| SearchReport {
        target_name: target.name().into(),
        samples: sorted.clone(),
        degree_cap: config.degree_cap,
        per_sample: per_sample.clone(),
        candidates_tried,
        stage,
    };

    let mut supports = Vec::new();
    for (s, sol) in samples.iter().zip(&solutions) {
        match sol {
            LpOutcome::Feasible { weights } => supports.push(support(weights)),
            LpOutcome::Infeasible { farkas } => {
                let farkas = basis.iter().cloned().zip(farkas.iter().cloned()).collect();
                return Ok(UniformOutcome::Inconclusive(report(
                    0,
                    FailureStage::SampleInfeasible { n: s.n, farkas },
                )));
            }
        }
    }

    // Candidates: the vertex barycenter, intersection re-solves,
    // per-sample supports, then vertices of the smallest sample's polytope.
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    let push = |c: Vec<usize>, list: &mut Vec<Vec<usize>>| {
        if !c.is_empty() && !list.contains(&c) {
            list.push(c);
        }
    };
    let common: Vec<usize> = supports[0]
        .iter()
        .copied()
        .filter(|j| supports.iter().all(|s| s.contains(j)))
        .collect();
    if !common.is_empty() {
        for s in &samples {
            if let LpOutcome::Feasible { weights } = lp_feasible(&restricted(s, &common), &s.target)? {
                push(support(&weights).iter().map(|&i| common[i]).collect(), &mut candidates);
            }
        }
    }
    for s in &supports {
        push(s.clone(), &mut candidates);
    }
    let first = feasible_vertices(&samples[0].columns, &samples[0].target, config.vertex_budget)?;
    for v in &first.vertices {
        push(support(v), &mut candidates);
    }

    let ctx = Context {
        target,
        set,
        config,
        poly: &poly,
        target_sym: to_symbolic_vector(&poly, &basis)?,
        basis: &basis,
        labels: &labels,
    };
    let mut best: Option<FailureStage> = None;
    let record = |stage: FailureStage, best: &mut Option<FailureStage>| {
        if best.as_ref().is_none_or(|b| stage.rank() > b.rank()) {
            *best = Some(stage);
        }
    };
    let mut tried = 0;
    if let Some((cand, values)) = vertex_barycenters(&samples, first, config.vertex_budget)? {
        tried += 1;
        match ctx.finish(&cand, values)? {
            Ok(cert) => return Ok(UniformOutcome::Certificate(cert)),
            Err(stage) => record(stage, &mut best),
        }
    }
    for cand in &candidates {
        tried += 1;
        let attempt = match solve_on_support(&samples, cand) {
            Some(values) => ctx.finish(cand, values)?,
            None => Err(FailureStage::NoCommonSupport),
        };
        match attempt {
            Ok(cert) => return Ok(UniformOutcome::Certificate(cert)),
            Err(stage) => record(stage, &mut best),
        }
    }
    Ok(UniformOutcome::Inconclusive(report(
        tried,
        best.unwrap_or(FailureStage::NoCommonSupport),
    )))
}

/// Sampled values `(n, weight)` of each candidate weight.
type WeightSamples = Vec<Vec<(i64, Rational)>>;

/// Per-sample weights on `cand`, when the restricted system has a unique
/// nonnegative solution at every sample.
fn solve_on_support(samples: &[Sample], cand: &[usize]) -> Option<WeightSamples> {
    let mut values: WeightSamples = vec![Vec::new(); cand.len()];
    for s in samples {
        let cols: Vec<&Vec<Rational>> = cand.iter().map(|&j| &s.columns[j]).collect();
        let w = solve_unique(&cols, &s.target).filter(|w| !w.iter().any(Signed::is_negative))?;
        for (v, x) in values.iter_mut().zip(w) {
            v.push((s.n, x));
        }
    }
    Some(values)
}

/// The average of all vertices of each sample's feasible polytope, on the
/// union of their supports. This point lies in the relative interior, so
/// its support is the largest possible and does not depend on which
/// optimal basis the simplex happens to reach. `None` when any sample's
/// vertex walk exhausts its budget.
fn vertex_barycenters(
    samples: &[Sample],
    first: VertexEnumeration,
    budget: usize,
) -> Result<Option<(Vec<usize>, WeightSamples)>> {
    if !first.complete || first.vertices.is_empty() {
        return Ok(None);
    }
    let rest = samples[1..]
        .par_iter()
        .map(|s| feasible_vertices(&s.columns, &s.target, budget))
        .collect::<Result<Vec<_>>>()?;
    if rest.iter().any(|e| !e.complete || e.vertices.is_empty()) {
        return Ok(None);
    }
    let enums: Vec<VertexEnumeration> = std::iter::once(first).chain(rest).collect();
    let centers: Vec<Vec<Rational>> = enums
        .iter()
        .map(|e| {
            let count = Rational::from_integer(e.vertices.len().into());
            let mut sum = vec![Rational::zero(); e.vertices[0].len()];
            for v in &e.vertices {
                for (a, b) in sum.iter_mut().zip(v) {
                    *a += b;
                }
            }
            sum.into_iter().map(|x| x / &count).collect()
        })
        .collect();
    let cand: Vec<usize> = (0..centers[0].len())
        .filter(|&j| centers.iter().any(|c| !c[j].is_zero()))
        .collect();
    let values = cand
        .iter()
        .map(|&j| samples.iter().zip(&centers).map(|(s, c)| (s.n, c[j].clone())).collect())
        .collect();
    Ok(Some((cand, values)))
}

struct Context<'a> {
    target: &'a Target,
    set: &'a GeneratorSet,
    config: &'a SearchConfig,
    poly: &'a MomentPolynomial,
    target_sym: Vec<RatFunc>,
    basis: &'a [MomentPartition],
    labels: &'a [String],
}

impl Context<'_> {
    /// Interpolates per-sample weights on `cand` and verifies the result
    /// symbolically and for sign.
    fn finish(&self, cand: &[usize], values: WeightSamples) -> Result<std::result::Result<Certificate, FailureStage>> {
        let mut weights = Vec::with_capacity(cand.len());
        for (k, points) in values.into_iter().enumerate() {
            match rational_reconstruct(&points, self.config.degree_cap)? {
                Some(w) => weights.push(w),
                None => {
                    return Ok(Err(FailureStage::Interpolation {
                        generator: self.labels[cand[k]].clone(),
                        points,
                    }))
                }
            }
        }
        let entries: Vec<CertificateEntry> = cand
            .iter()
            .zip(weights)
            .filter(|(_, w)| !w.is_zero())
            .map(|(&j, weight)| CertificateEntry {
                generator: self.set.generators[j].clone(),
                weight,
            })
            .collect();
        let cert = Certificate {
            target_name: self.target.name().into(),
            scope: CertificateScope::Uniform,
            floor_n: self.target.min_n(),
            target: self.poly.clone(),
            entries,
        };
        let sum = to_symbolic_vector(&cert.recombination(), self.basis)?;
        if let Some(i) = (0..self.basis.len()).find(|&i| sum[i] != self.target_sym[i]) {
            return Ok(Err(FailureStage::Recombination {
                coordinate: self.basis[i].clone(),
                difference: &sum[i] - &self.target_sym[i],
            }));
        }
        for e in &cert.entries {
            let verdict = prove_nonnegative(&e.weight, cert.floor_n);
            if !verdict.is_proven() {
                return Ok(Err(FailureStage::Nonnegativity {
                    generator: e.generator.label(),
                    verdict,
                }));
            }
        }
        Ok(Ok(cert))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{cubic_weights, Generator};
    use crate::exact::PolyInN;
    use crate::graphs::DistinctSumCache;

    #[test]
    fn cubic_cone_membership_at_six() {
        match cone_membership(&Target::TerminalCubic, 6, 6).unwrap() {
            ConeOutcome::Feasible(cert) => assert!(cert.check().unwrap().passed()),
            other => panic!("{other:?}"),
        }
        assert!(cone_membership(&Target::TerminalCubic, 2, 6).is_err());
        assert!(cone_membership(&Target::TerminalQuartic, 5, 6).is_err());
    }

    #[test]
    fn negative_target_is_infeasible_with_witness() {
        let neg = -&MomentPolynomial::p(true, 2).pow(3);
        let set = GeneratorSet::square_graphs(6, 12).unwrap();
        match cone_membership_with("custom", &neg, 4, &set).unwrap() {
            ConeOutcome::Infeasible(r) => assert!(r.witness.is_some()),
            other => panic!("{other:?}"),
        }
        let pos = MomentPolynomial::p(true, 2).pow(3);
        assert!(matches!(
            cone_membership_with("custom", &pos, 4, &set).unwrap(),
            ConeOutcome::Feasible(_)
        ));
    }

    #[test]
    fn uniform_search_recovers_named_weights() {
        let set = GeneratorSet::degree_six_named();
        let config = SearchConfig::new((3..=8).collect(), 4);
        match uniform_search_with(&Target::TerminalCubic, &set, &config).unwrap() {
            UniformOutcome::Certificate(cert) => {
                let w: Vec<RatFunc> = cert.entries.iter().map(|e| e.weight.clone()).collect();
                assert_eq!(w, cubic_weights());
            }
            UniformOutcome::Inconclusive(r) => panic!("{}", r.summary()),
        }
    }

    #[test]
    fn named_generators_satisfy_a_linear_relation() {
        // E_P = 2(n-3) E_T + E_Q / 2, so the named weights are one point of
        // a segment and the simplex alone reaches an endpoint.
        let set = GeneratorSet::degree_six_named();
        let e: Vec<&MomentPolynomial> = set.generators.iter().map(|g| &g.expansion).collect();
        let two_n3 = RatFunc::from_poly(PolyInN::linear(3).scale(&2.into()));
        let rhs = &e[0].scale(&two_n3) + &e[2].scale(&RatFunc::frac(1, 2));
        assert_eq!(*e[1], rhs);

        let mut cache = DistinctSumCache::new(true);
        let w = cubic_weights();
        let n = PolyInN::n();
        let base = RatFunc::new(PolyInN::constant(1.into()), &n * &PolyInN::linear(2)).unwrap();
        let vertex = Certificate {
            target_name: "terminal-cubic".into(),
            scope: CertificateScope::Uniform,
            floor_n: 3,
            target: Target::TerminalCubic.polynomial().unwrap(),
            entries: [
                (0, &w[0] + &(&base * &RatFunc::from_poly(PolyInN::linear(3)))),
                (2, &w[2] + &w[2]),
                (3, w[3].clone()),
            ]
            .into_iter()
            .map(|(j, weight)| CertificateEntry {
                generator: Generator::new(set.generators[j].graph.clone(), set.generators[j].per, &mut cache),
                weight,
            })
            .collect(),
        };
        assert!(vertex.check().unwrap().passed());
    }

    #[test]
    fn sample_validation() {
        let set = GeneratorSet::degree_six_named();
        let few = SearchConfig::new(vec![3, 4, 5], 4);
        assert!(matches!(
            uniform_search_with(&Target::TerminalCubic, &set, &few),
            Err(Error::InsufficientSamples(_))
        ));
        let dup = SearchConfig::new(vec![3, 4, 5, 6, 7, 7], 4);
        assert!(uniform_search_with(&Target::TerminalCubic, &set, &dup).is_err());
        let low = SearchConfig::new(vec![2, 4, 5, 6, 7, 8], 4);
        assert!(uniform_search_with(&Target::TerminalCubic, &set, &low).is_err());
    }

    #[test]
    fn failure_report_names_stage() {
        let set = GeneratorSet::degree_six_named();
        // Cap 0 forces constant weights, which cannot fit.
        let config = SearchConfig::new((3..=8).collect(), 0);
        match uniform_search_with(&Target::TerminalCubic, &set, &config).unwrap() {
            UniformOutcome::Inconclusive(r) => {
                assert_eq!(r.stage.name(), "interpolation");
                assert!(r.summary().starts_with("inconclusive"));
            }
            other => panic!("{other:?}"),
        }
    }
}
