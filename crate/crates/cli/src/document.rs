//! The JSON result document. Every number is an exact string: rationals as
//! `a/b`, rational functions of `n` as `num/den` in expanded form.

use serde::{Deserialize, Serialize};
use termdisc_core::certify::{
    Certificate, CertificateCheck, CertificateScope, ConeOutcome, FailureStage, InfeasibilityReport, NonnegVerdict,
    SearchReport,
};
use termdisc_core::exact::RatFunc;
use termdisc_core::graphs::Multigraph;
use termdisc_core::moments::{MomentPartition, MomentPolynomial, TerminalPolynomial};
use termdisc_core::verify::SuiteReport;

/// Bumped on any incompatible change to the document layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema_version: u32,
    #[serde(flatten)]
    pub body: Payload,
    /// What each verified statement reproduces, in report order.
    pub provenance: Vec<String>,
}

impl ResultDocument {
    pub fn new(body: Payload, provenance: Vec<String>) -> Self {
        ResultDocument {
            schema_version: SCHEMA_VERSION,
            body,
            provenance,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.body {
            Payload::MomentPolynomial(_) => "moment-polynomial",
            Payload::TerminalPolynomial(_) => "terminal-polynomial",
            Payload::Certificate(_) => "certificate",
            Payload::SuiteReport(_) => "suite-report",
            Payload::GraphList(_) => "graph-list",
            Payload::SearchReport(_) => "search-report",
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        let doc: ResultDocument = serde_json::from_str(s)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(serde::de::Error::custom(format!(
                "unsupported schema_version {}",
                doc.schema_version
            )));
        }
        Ok(doc)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "kebab-case")]
pub enum Payload {
    MomentPolynomial(MomentDoc),
    TerminalPolynomial(TerminalDoc),
    Certificate(CertificateDoc),
    SuiteReport(SuiteDoc),
    GraphList(GraphListDoc),
    SearchReport(SearchDoc),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    /// Power-sum indices, descending; empty for the constant term.
    pub partition: Vec<u32>,
    pub coefficient: RatFunc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentDoc {
    /// What the polynomial is, e.g. `disc(J_(n,3))`.
    pub label: String,
    pub centered: bool,
    /// Common total degree in the roots; `null` for zero or mixed degrees.
    pub degree: Option<u32>,
    /// Largest numerator or denominator degree in `n` over all coefficients.
    pub n_degree: usize,
    pub terms: Vec<TermDoc>,
}

impl MomentDoc {
    pub fn new(label: impl Into<String>, f: &MomentPolynomial) -> Self {
        MomentDoc {
            label: label.into(),
            centered: f.is_centered(),
            degree: if f.is_zero() { None } else { f.homogeneous_degree() },
            n_degree: f.max_n_degree(),
            terms: f
                .terms()
                .iter()
                .map(|(p, c)| TermDoc {
                    partition: p.parts().to_vec(),
                    coefficient: c.clone(),
                })
                .collect(),
        }
    }

    pub fn to_polynomial(&self) -> MomentPolynomial {
        MomentPolynomial::from_terms(
            self.centered,
            self.terms
                .iter()
                .map(|t| (MomentPartition::new(t.partition.clone()), t.coefficient.clone())),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TerminalDoc {
    pub r: u32,
    /// Coefficient of `t^i` at index `i`.
    pub coefficients: Vec<MomentDoc>,
    pub discriminant: Option<MomentDoc>,
}

impl TerminalDoc {
    pub fn new(j: &TerminalPolynomial, disc: Option<&MomentPolynomial>) -> Self {
        let r = j.order();
        TerminalDoc {
            r,
            coefficients: (0..=r)
                .map(|i| MomentDoc::new(format!("[t^{i}] J_(n,{r})"), j.coeff(i)))
                .collect(),
            discriminant: disc.map(|d| MomentDoc::new(format!("disc(J_(n,{r}))"), d)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryDoc {
    /// Canonical graph string.
    pub graph: String,
    /// The generator is the ordered sum divided by `per`.
    pub per: u32,
    pub weight: RatFunc,
    /// Sign verdict for the weight.
    pub weight_check: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub target: String,
    /// `null` for a uniform certificate.
    pub n: Option<i64>,
    pub floor_n: i64,
    pub target_polynomial: MomentDoc,
    pub entries: Vec<EntryDoc>,
    pub recombination_verified: bool,
    pub weights_verified: bool,
}

pub fn verdict_text(v: &NonnegVerdict) -> String {
    match v {
        NonnegVerdict::Proven { scanned_to } => format!("nonnegative (scanned to n = {scanned_to})"),
        NonnegVerdict::Negative { n, value } => format!("negative at n = {n}: {value}"),
        NonnegVerdict::Pole { n } => format!("pole at n = {n}"),
        NonnegVerdict::EventuallyNegative => "negative for all large n".into(),
        NonnegVerdict::BoundTooLarge { bound } => format!("root bound {bound} too large to scan"),
    }
}

impl CertificateDoc {
    pub fn new(cert: &Certificate, check: &CertificateCheck) -> Self {
        CertificateDoc {
            target: cert.target_name.clone(),
            n: match cert.scope {
                CertificateScope::Fixed(n) => Some(n),
                CertificateScope::Uniform => None,
            },
            floor_n: cert.floor_n,
            target_polynomial: MomentDoc::new(cert.target_name.clone(), &cert.target),
            entries: cert
                .entries
                .iter()
                .zip(&check.weights)
                .map(|(e, v)| EntryDoc {
                    graph: e.generator.graph.canonical_form(),
                    per: e.generator.per,
                    weight: e.weight.clone(),
                    weight_check: verdict_text(v),
                })
                .collect(),
            recombination_verified: check.recombination,
            weights_verified: check.weights.iter().all(NonnegVerdict::is_proven),
        }
    }

    /// The line-oriented certificate format, identical to
    /// [`Certificate::to_text`].
    pub fn to_text(&self) -> String {
        let mut out = format!("termdisc-certificate 1\ntarget {}\n", self.target);
        match self.n {
            Some(n) => out.push_str(&format!("n {n}\n")),
            None => out.push_str("n uniform\n"),
        }
        out.push_str(&format!("floor_n {}\n", self.floor_n));
        out.push_str(&format!("target_poly {}\n", self.target_polynomial.to_polynomial()));
        for e in &self.entries {
            out.push_str(&format!("{} {}", e.graph, e.weight));
            if e.per != 1 {
                out.push_str(&format!(" per={}", e.per));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub suite: String,
    pub identity: String,
    pub anchor: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteDoc {
    pub suite: String,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    pub checks: Vec<CheckDoc>,
}

impl SuiteDoc {
    pub fn new(report: &SuiteReport) -> Self {
        SuiteDoc {
            suite: report.suite.name().into(),
            passed: report.passed(),
            total: report.checks.len(),
            failed: report.failures(),
            checks: report
                .checks
                .iter()
                .map(|c| CheckDoc {
                    suite: c.suite.into(),
                    identity: c.identity.clone(),
                    anchor: c.anchor.into(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphListDoc {
    pub degree: u32,
    pub count: usize,
    pub graphs: Vec<GraphDoc>,
}

impl GraphListDoc {
    pub fn new(degree: u32, graphs: &[Multigraph]) -> Self {
        GraphListDoc {
            degree,
            count: graphs.len(),
            graphs: graphs
                .iter()
                .map(|g| GraphDoc {
                    graph: g.canonical_form(),
                    vertices: g.vertex_count(),
                    edges: g.edges().len(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightDoc {
    pub graph: String,
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleDoc {
    pub n: i64,
    pub feasible: bool,
    pub weights: Vec<WeightDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoordinateDoc {
    pub partition: Vec<u32>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub roots: Vec<String>,
    pub value: String,
}

/// A run that produced no certificate: an infeasible fixed-`n` cone
/// problem, or an inconclusive uniform search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchDoc {
    pub target: String,
    /// `infeasible` or `inconclusive`.
    pub outcome: String,
    pub summary: String,
    /// Failing stage of an inconclusive search.
    pub stage: Option<String>,
    pub stage_detail: Option<String>,
    pub samples: Vec<i64>,
    pub degree_cap: Option<usize>,
    pub candidates_tried: usize,
    pub per_sample: Vec<SampleDoc>,
    /// Separating functional on the moment basis, when infeasible.
    pub farkas: Vec<CoordinateDoc>,
    pub witness: Option<WitnessDoc>,
}

fn coordinates(farkas: &[(MomentPartition, termdisc_core::exact::Rational)]) -> Vec<CoordinateDoc> {
    farkas
        .iter()
        .map(|(p, v)| CoordinateDoc {
            partition: p.parts().to_vec(),
            value: v.to_string(),
        })
        .collect()
}

fn stage_detail(stage: &FailureStage) -> String {
    match stage {
        FailureStage::SampleInfeasible { n, .. } => format!("cone problem infeasible at n = {n}"),
        FailureStage::NoCommonSupport => "no support yields a unique nonnegative solution at every sample".into(),
        FailureStage::Interpolation { generator, points } => {
            let pts: Vec<String> = points.iter().map(|(n, v)| format!("{n}:{v}")).collect();
            format!(
                "weight of {generator} does not fit the degree cap; samples {}",
                pts.join(", ")
            )
        }
        FailureStage::Recombination { coordinate, difference } => {
            format!("interpolated identity fails on {coordinate} by {difference}")
        }
        FailureStage::Nonnegativity { generator, verdict } => {
            format!("weight of {generator}: {}", verdict_text(verdict))
        }
    }
}

impl SearchDoc {
    pub fn inconclusive(report: &SearchReport) -> Self {
        let farkas = match &report.stage {
            FailureStage::SampleInfeasible { farkas, .. } => coordinates(farkas),
            _ => Vec::new(),
        };
        SearchDoc {
            target: report.target_name.clone(),
            outcome: "inconclusive".into(),
            summary: report.summary(),
            stage: Some(report.stage.name().into()),
            stage_detail: Some(stage_detail(&report.stage)),
            samples: report.samples.clone(),
            degree_cap: Some(report.degree_cap),
            candidates_tried: report.candidates_tried,
            per_sample: report
                .per_sample
                .iter()
                .map(|s| SampleDoc {
                    n: s.n,
                    feasible: s.feasible,
                    weights: s
                        .weights
                        .iter()
                        .map(|(g, w)| WeightDoc {
                            graph: g.clone(),
                            weight: w.to_string(),
                        })
                        .collect(),
                })
                .collect(),
            farkas,
            witness: None,
        }
    }

    pub fn infeasible(report: &InfeasibilityReport) -> Self {
        SearchDoc {
            target: report.target_name.clone(),
            outcome: "infeasible".into(),
            summary: format!(
                "{} is not in the cone of {} square-graph generators at n = {}",
                report.target_name, report.generator_count, report.n
            ),
            stage: None,
            stage_detail: None,
            samples: vec![report.n],
            degree_cap: None,
            candidates_tried: 0,
            per_sample: Vec::new(),
            farkas: coordinates(&report.farkas),
            witness: report.witness.as_ref().map(|w| WitnessDoc {
                roots: w.roots.iter().map(ToString::to_string).collect(),
                value: w.value.to_string(),
            }),
        }
    }
}

/// Document for a fixed-`n` cone outcome.
pub fn cone_payload(outcome: &ConeOutcome) -> termdisc_core::Result<Payload> {
    Ok(match outcome {
        ConeOutcome::Feasible(cert) => Payload::Certificate(CertificateDoc::new(cert, &cert.check()?)),
        ConeOutcome::Infeasible(r) => Payload::SearchReport(SearchDoc::infeasible(r)),
    })
}
