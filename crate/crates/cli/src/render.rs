//! Text and LaTeX renderings of result documents. Both are deterministic
//! functions of the document alone.

use std::fmt::Write;

use termdisc_core::exact::RatFunc;
use termdisc_core::moments::MomentPolynomial;

use crate::document::{CertificateDoc, MomentDoc, Payload, ResultDocument, SearchDoc, SuiteDoc, TerminalDoc};

pub fn text(doc: &ResultDocument) -> String {
    match &doc.body {
        Payload::MomentPolynomial(m) => format!("{} = {}\n", m.label, m.to_polynomial()),
        Payload::TerminalPolynomial(t) => terminal_text(t),
        Payload::Certificate(c) => c.to_text(),
        Payload::SuiteReport(s) => suite_text(s),
        Payload::GraphList(g) => {
            let mut out = format!("# {} square graphs of degree {}\n", g.count, g.degree);
            for graph in &g.graphs {
                out.push_str(&graph.graph);
                out.push('\n');
            }
            out
        }
        Payload::SearchReport(s) => search_text(s),
    }
}

pub fn latex(doc: &ResultDocument) -> String {
    let mut out = match &doc.body {
        Payload::MomentPolynomial(m) => m.to_polynomial().to_latex(),
        Payload::TerminalPolynomial(t) => terminal_latex(t),
        Payload::Certificate(c) => certificate_latex(c),
        Payload::SuiteReport(s) => suite_latex(s),
        Payload::GraphList(g) => {
            let items: Vec<String> = g
                .graphs
                .iter()
                .map(|x| format!("  \\item \\texttt{{{}}}", x.graph))
                .collect();
            format!("\\begin{{itemize}}\n{}\n\\end{{itemize}}", items.join("\n"))
        }
        Payload::SearchReport(s) => format!("\\text{{{}}}", escape(&s.summary)),
    };
    out.push('\n');
    out
}

fn escape(s: &str) -> String {
    s.chars()
        .flat_map(|c| match c {
            '_' | '%' | '&' | '#' | '$' | '{' | '}' => vec!['\\', c],
            '^' => "\\^{}".chars().collect(),
            _ => vec![c],
        })
        .collect()
}

fn terminal_text(t: &TerminalDoc) -> String {
    let mut out = String::new();
    for (i, c) in t.coefficients.iter().enumerate().rev() {
        let f = c.to_polynomial();
        if !f.is_zero() {
            let _ = writeln!(out, "t^{i}: {f}");
        }
    }
    if let Some(d) = &t.discriminant {
        let _ = writeln!(out, "{} = {}", d.label, d.to_polynomial());
    }
    out
}

/// Wraps a coefficient that is a bare sum so it can multiply `t^i`.
fn factor_latex(f: &MomentPolynomial) -> String {
    let s = f.to_latex();
    let body = s.strip_prefix('-').unwrap_or(&s);
    if !body.starts_with("\\frac") && body.contains(['+', '-']) {
        format!("\\left({s}\\right)")
    } else {
        s
    }
}

/// `J_{n,r}(t)=t^r+...`, highest power first.
pub fn terminal_polynomial_latex(t: &TerminalDoc) -> String {
    let mut out = format!("J_{{n,{}}}(t)=", t.r);
    let mut first = true;
    for (i, c) in t.coefficients.iter().enumerate().rev() {
        let f = c.to_polynomial();
        if f.is_zero() {
            continue;
        }
        let power = match i {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{i}"),
        };
        let coeff = if f == MomentPolynomial::one(f.is_centered()) && i > 0 {
            String::new()
        } else {
            factor_latex(&f)
        };
        if !first && !coeff.starts_with('-') {
            out.push('+');
        }
        out.push_str(&coeff);
        out.push_str(&power);
        first = false;
    }
    if first {
        out.push('0');
    }
    out
}

fn terminal_latex(t: &TerminalDoc) -> String {
    let mut out = terminal_polynomial_latex(t);
    if let Some(d) = &t.discriminant {
        let _ = write!(
            out,
            "\n\\operatorname{{disc}}(J_{{n,{}}})={}",
            t.r,
            d.to_polynomial().to_latex()
        );
    }
    out
}

fn weight_latex(w: &RatFunc) -> String {
    w.to_latex()
}

fn certificate_latex(c: &CertificateDoc) -> String {
    let scope = match c.n {
        Some(n) => format!("n={n}"),
        None => format!("n\\ge {}", c.floor_n),
    };
    let mut out = format!(
        "% {} ({scope})\n{}=\\sum_G w_G\\,\\Sigma^*_G,\\qquad\n\\begin{{aligned}}\n",
        c.target,
        MomentDoc::to_polynomial(&c.target_polynomial).to_latex()
    );
    for e in &c.entries {
        let per = if e.per == 1 {
            String::new()
        } else {
            format!("/{}", e.per)
        };
        let _ = writeln!(
            out,
            "  w_{{\\texttt{{{}}}{per}}}&={}\\\\",
            e.graph,
            weight_latex(&e.weight)
        );
    }
    out.push_str("\\end{aligned}");
    out
}

fn suite_text(s: &SuiteDoc) -> String {
    let mut out = String::new();
    for c in &s.checks {
        let _ = writeln!(
            out,
            "{} [{}] {} ({})",
            if c.passed { "PASS" } else { "FAIL" },
            c.suite,
            c.identity,
            c.anchor
        );
        if let Some(d) = &c.detail {
            let _ = writeln!(out, "    {d}");
        }
    }
    let _ = writeln!(out, "{}: {}/{} passed", s.suite, s.total - s.failed, s.total);
    out
}

fn suite_latex(s: &SuiteDoc) -> String {
    let mut out = String::from("\\begin{tabular}{lll}\n");
    for c in &s.checks {
        let _ = writeln!(
            out,
            "  {} & {} & {}\\\\",
            escape(&c.suite),
            escape(&c.identity),
            if c.passed { "pass" } else { "FAIL" }
        );
    }
    out.push_str("\\end{tabular}");
    out
}

fn search_text(s: &SearchDoc) -> String {
    let mut out = format!("{}\n", s.summary);
    if let Some(d) = &s.stage_detail {
        let _ = writeln!(out, "stage detail: {d}");
    }
    for sample in &s.per_sample {
        if !sample.feasible {
            let _ = writeln!(out, "n = {}: infeasible", sample.n);
            continue;
        }
        let ws: Vec<String> = sample
            .weights
            .iter()
            .map(|w| format!("{} -> {}", w.graph, w.weight))
            .collect();
        let _ = writeln!(out, "n = {}: {}", sample.n, ws.join("; "));
    }
    if !s.farkas.is_empty() {
        let zs: Vec<String> = s
            .farkas
            .iter()
            .map(|c| format!("{:?}: {}", c.partition, c.value))
            .collect();
        let _ = writeln!(out, "separating functional: {}", zs.join(", "));
    }
    if let Some(w) = &s.witness {
        let _ = writeln!(out, "negative at roots [{}]: {}", w.roots.join(", "), w.value);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use termdisc_core::moments::terminal_polynomial;

    #[test]
    fn quadratic_terminal_latex() {
        let doc = TerminalDoc::new(&terminal_polynomial(2).unwrap(), None);
        assert_eq!(terminal_polynomial_latex(&doc), "J_{n,2}(t)=t^2-\\frac{p_2}{n(n-1)}");
        let cubic = TerminalDoc::new(&terminal_polynomial(3).unwrap(), None);
        assert_eq!(
            terminal_polynomial_latex(&cubic),
            "J_{n,3}(t)=t^3-\\frac{3p_2}{n(n-1)}t-\\frac{2p_3}{n(n-1)(n-2)}"
        );
    }

    #[test]
    fn escaping() {
        assert_eq!(escape("p_2 ^ 3 & 50%"), "p\\_2 \\^{} 3 \\& 50\\%");
    }
}
