//! Argument parsing and command dispatch. Flags take precedence over
//! `TERMDISC_*` environment variables, which take precedence over defaults.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use termdisc_core::certify::{
    cone_membership, cone_membership_with, cubic_certificate, cubic_certificate_uniform, default_degree_cap,
    uniform_search_with, Certificate, ConeOutcome, GeneratorSet, SearchConfig, Target, UniformOutcome,
};
use termdisc_core::graphs::{
    enumerate_square_graphs_with_cap, ordered_graph_sum, parse_graph_spec, DEFAULT_ENUMERATION_CAP,
};
use termdisc_core::moments::{terminal_disc_with_cap, terminal_polynomial, MomentPolynomial, DEFAULT_TERMINAL_R_CAP};
use termdisc_core::verify::{run_suite, Suite};
use termdisc_core::Error;

use crate::document::{
    cone_payload, CertificateDoc, GraphListDoc, MomentDoc, Payload, ResultDocument, SearchDoc, SuiteDoc, TerminalDoc,
};
use crate::render;

#[derive(Parser, Debug)]
#[command(
    name = "termdisc",
    version,
    about = "Exact terminal discriminants and square-graph certificates"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "TERMDISC_FORMAT", default_value_t = Format::Text)]
    pub format: Format,
    /// Write the document here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// The explicit four-generator cubic weights.
    Explicit,
    /// Exact LP over all square graphs of the target degree.
    Lp,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite; exits with status 1 if any identity fails.
    Verify {
        /// newton, quadratic, cubic, quartic, quintic, degree-six-expansions,
        /// cubic-certificate, polarization or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Emit the normalized terminal polynomial J_(n,r), optionally with its discriminant.
    Terminal {
        #[arg(long)]
        r: u32,
        /// Also emit disc(J_(n,r)).
        #[arg(long)]
        disc: bool,
        /// Largest order accepted.
        #[arg(long, env = "TERMDISC_TERMINAL_R_CAP", default_value_t = DEFAULT_TERMINAL_R_CAP)]
        r_cap: u32,
    },
    /// Expand the ordered-distinct sum of a graph into power sums.
    Expand {
        /// Graph in `i-j:mult` comma form, e.g. 1-2:2,2-3:2,3-1:2.
        #[arg(long)]
        graph: String,
        /// Use centered power sums (p_1 = 0).
        #[arg(long)]
        centered: bool,
    },
    /// Produce, or re-verify, a cone certificate.
    Certificate {
        /// terminal-cubic, terminal-quartic, terminal-quintic or custom.
        #[arg(long, default_value = "terminal-cubic")]
        target: String,
        /// Target polynomial for `custom`, in the `[coeff]*p_2^3 + ...` form.
        #[arg(long)]
        poly: Option<String>,
        /// Fixed n; omitted means uniform in n (explicit method only).
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, value_enum, default_value_t = Method::Explicit)]
        method: Method,
        /// Load a certificate file, re-verify it and emit it; exits with status 1 if rejected.
        #[arg(long, conflicts_with_all = ["poly", "n"])]
        check: Option<PathBuf>,
        /// Largest square-graph degree enumerated by the LP method.
        #[arg(long, env = "TERMDISC_ENUMERATION_CAP", default_value_t = DEFAULT_ENUMERATION_CAP)]
        generator_cap: u32,
    },
    /// Search for a certificate uniform in n for disc(J_(n,r)).
    Search {
        #[arg(long)]
        r: u32,
        /// Comma-separated integers and inclusive ranges `a..=b`;
        /// defaults to the degree cap + 2 integers starting at r.
        #[arg(long, value_parser = parse_samples)]
        samples: Option<Samples>,
        /// Numerator and denominator degree bound for each weight [default: 2r(r-1)].
        #[arg(long, env = "TERMDISC_DEGREE_CAP")]
        degree_cap: Option<usize>,
        /// Bases visited per sample by the vertex walk.
        #[arg(long, default_value_t = 64)]
        vertex_budget: usize,
        #[arg(long, env = "TERMDISC_ENUMERATION_CAP", default_value_t = DEFAULT_ENUMERATION_CAP)]
        generator_cap: u32,
    },
    /// List the square multigraphs of an even total multiplicity.
    Enumerate {
        #[arg(long)]
        degree: u32,
        #[arg(long, env = "TERMDISC_ENUMERATION_CAP", default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Samples(pub Vec<i64>);

/// `4,5,9..=12` style lists.
pub fn parse_samples(s: &str) -> std::result::Result<Samples, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        let int = |x: &str| x.trim().parse::<i64>().map_err(|_| format!("bad sample {x:?}"));
        if let Some((a, b)) = item.split_once("..=") {
            let (a, b) = (int(a)?, int(b)?);
            if a > b {
                return Err(format!("empty range {item:?}"));
            }
            out.extend(a..=b);
        } else if item.contains("..") {
            return Err(format!("use an inclusive range a..=b, not {item:?}"));
        } else {
            out.push(int(item)?);
        }
    }
    Ok(Samples(out))
}

/// A finished command: the document and the process exit status.
#[derive(Debug)]
pub struct Outcome {
    pub document: ResultDocument,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(document: ResultDocument) -> Self {
        Outcome { document, exit_code: 0 }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.document.to_json(),
            Format::Latex => render::latex(&self.document),
            Format::Text => render::text(&self.document),
        }
    }
}

fn certificate_document(cert: &Certificate, provenance: Vec<String>) -> Result<Outcome> {
    let check = cert.check()?;
    let code = if check.passed() { 0 } else { 1 };
    Ok(Outcome {
        document: ResultDocument::new(Payload::Certificate(CertificateDoc::new(cert, &check)), provenance),
        exit_code: code,
    })
}

fn target_of(name: &str, poly: Option<&str>) -> Result<Target> {
    match (name, poly) {
        ("custom", Some(p)) => Ok(Target::Custom(MomentPolynomial::parse(p, true)?)),
        ("custom", None) => bail!("--target custom needs --poly"),
        (_, Some(_)) => bail!("--poly applies only to --target custom"),
        (other, None) => Ok(Target::from_name(other)?),
    }
}

/// Runs one command without touching stdout or the file system, except
/// that `certificate --check` reads its input file.
pub fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let report = run_suite(suite)?;
            let mut anchors: Vec<String> = report.checks.iter().map(|c| c.anchor.to_string()).collect();
            anchors.dedup();
            Ok(Outcome {
                exit_code: if report.passed() { 0 } else { 1 },
                document: ResultDocument::new(Payload::SuiteReport(SuiteDoc::new(&report)), anchors),
            })
        }
        Command::Terminal { r, disc, r_cap } => {
            if *r < 2 || r > r_cap {
                bail!(Error::OutOfRange(format!("r = {r} must lie in 2..={r_cap}")));
            }
            let j = terminal_polynomial(*r)?;
            let d = if *disc {
                Some(terminal_disc_with_cap(*r, *r_cap)?)
            } else {
                None
            };
            Ok(Outcome::ok(ResultDocument::new(
                Payload::TerminalPolynomial(TerminalDoc::new(&j, d.as_ref())),
                vec![format!(
                    "normalized terminal polynomial of order {r} via centered Newton identities"
                )],
            )))
        }
        Command::Expand { graph, centered } => {
            let g = parse_graph_spec(graph)?;
            let f = ordered_graph_sum(&g, *centered);
            let label = format!("ordered sum over {}", g.canonical_form());
            Ok(Outcome::ok(ResultDocument::new(
                Payload::MomentPolynomial(MomentDoc::new(label, &f)),
                vec!["Moebius inversion over set partitions of the vertex set".into()],
            )))
        }
        Command::Certificate {
            target,
            poly,
            n,
            method,
            check,
            generator_cap,
        } => {
            if let Some(path) = check {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let cert = Certificate::from_text(&text)?;
                return certificate_document(&cert, vec!["re-verified from file".into()]);
            }
            let target = target_of(target, poly.as_deref())?;
            match method {
                Method::Explicit => {
                    if target != Target::TerminalCubic {
                        bail!("the explicit method exists only for terminal-cubic; use --method lp");
                    }
                    let cert = match n {
                        Some(n0) => cubic_certificate(*n0)?,
                        None => cubic_certificate_uniform(),
                    };
                    certificate_document(
                        &cert,
                        vec!["explicit four-generator weights for the cubic terminal discriminant".into()],
                    )
                }
                Method::Lp => {
                    let Some(n0) = *n else {
                        bail!("--method lp needs --n; use `search` for certificates uniform in n");
                    };
                    let outcome = match &target {
                        Target::Custom(f) => {
                            let d = f.homogeneous_degree().filter(|_| !f.is_zero()).ok_or_else(|| {
                                anyhow::anyhow!("custom target must be a nonzero homogeneous polynomial")
                            })?;
                            let set = GeneratorSet::square_graphs(d, *generator_cap)?;
                            cone_membership_with("custom", f, n0, &set)?
                        }
                        t => cone_membership(t, n0, *generator_cap)?,
                    };
                    let provenance = vec!["exact phase-one simplex with Bland's rule".into()];
                    let code = match &outcome {
                        ConeOutcome::Feasible(c) if !c.check()?.passed() => 1,
                        _ => 0,
                    };
                    Ok(Outcome {
                        document: ResultDocument::new(cone_payload(&outcome)?, provenance),
                        exit_code: code,
                    })
                }
            }
        }
        Command::Search {
            r,
            samples,
            degree_cap,
            vertex_budget,
            generator_cap,
        } => {
            let target = match r {
                3 => Target::TerminalCubic,
                4 => Target::TerminalQuartic,
                5 => Target::TerminalQuintic,
                _ => bail!(Error::OutOfRange(format!("terminal order r = {r} must lie in 3..=5"))),
            };
            let cap = degree_cap.unwrap_or_else(|| default_degree_cap(*r));
            let samples = match samples {
                Some(Samples(s)) => s.clone(),
                None => (*r as i64..).take(cap + 2).collect(),
            };
            let set = GeneratorSet::square_graphs(r * (r - 1), *generator_cap)?;
            let mut config = SearchConfig::new(samples, cap);
            config.vertex_budget = *vertex_budget;
            let provenance = vec![format!(
                "uniform search over {} square graphs of degree {}",
                set.generators.len(),
                set.degree
            )];
            match uniform_search_with(&target, &set, &config)? {
                UniformOutcome::Certificate(cert) => certificate_document(&cert, provenance),
                UniformOutcome::Inconclusive(report) => Ok(Outcome::ok(ResultDocument::new(
                    Payload::SearchReport(SearchDoc::inconclusive(&report)),
                    provenance,
                ))),
            }
        }
        Command::Enumerate { degree, cap } => {
            let graphs = enumerate_square_graphs_with_cap(*degree, *cap)?;
            Ok(Outcome::ok(ResultDocument::new(
                Payload::GraphList(GraphListDoc::new(*degree, &graphs)),
                vec!["square multigraphs up to isomorphism by canonical form".into()],
            )))
        }
    }
}

/// Exit status for an error: 1 when the input was understood but failed
/// verification, 2 otherwise.
pub fn error_exit_code(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<Error>() {
        Some(Error::InvalidCertificate(_)) => 1,
        _ => 2,
    }
}

/// Parses, executes and renders; returns the rendered document and exit
/// status. Writes to `--out` when given.
pub fn run(cli: &Cli) -> Result<(String, i32)> {
    let outcome = execute(&cli.command)?;
    let rendered = outcome.render(cli.format);
    if let Some(path) = &cli.out {
        std::fs::write(path, &rendered).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok((rendered, outcome.exit_code))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_lists() {
        assert_eq!(parse_samples("4,5,9..=11").unwrap(), Samples(vec![4, 5, 9, 10, 11]));
        assert!(parse_samples("4..8").is_err());
        assert!(parse_samples("8..=4").is_err());
        assert!(parse_samples("x").is_err());
    }

    #[test]
    fn parses_documented_invocations() {
        for args in [
            "termdisc verify --suite all",
            "termdisc terminal --r 5 --format latex",
            "termdisc expand --graph 1-2:2,2-3:2,3-1:2 --centered",
            "termdisc certificate --target terminal-cubic --n 8",
            "termdisc search --r 4 --samples 4..=11 --degree-cap 6",
            "termdisc enumerate --degree 6",
        ] {
            Cli::try_parse_from(args.split_whitespace()).unwrap_or_else(|e| panic!("{args}: {e}"));
        }
        assert!(Cli::try_parse_from(["termdisc", "verify", "--format", "yaml"]).is_err());
    }
}
