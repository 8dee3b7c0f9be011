use crate::exact::{PolyInN, RatFunc, Rational};
use crate::moments::{MomentPartition, MomentPolynomial};
use crate::multipoly::MultiPoly;

use super::expand::ordered_graph_sum;
use super::multigraph::Multigraph;

/// One named generator of degree six with the divisor applied to its
/// ordered sum (6 for the triangle, whose named sum is over unordered
/// triples).
#[derive(Clone, Debug)]
pub struct NamedGenerator {
    pub name: &'static str,
    pub graph: Multigraph,
    pub divisor: u32,
}

/// The triangle, path, double-edge-plus-edge and matching square graphs.
pub fn degree_six_generators() -> Vec<NamedGenerator> {
    [
        ("T", "1-2:2,2-3:2,3-1:2", 6),
        ("P", "1-2:2,2-3:2,3-4:2", 1),
        ("Q", "1-2:4,3-4:2", 1),
        ("R", "1-2:2,3-4:2,5-6:2", 1),
    ]
    .into_iter()
    .map(|(name, spec, divisor)| NamedGenerator {
        name,
        graph: spec.parse().expect("valid graph spec"),
        divisor,
    })
    .collect()
}

fn poly(c: &[i64]) -> PolyInN {
    PolyInN::from_i64s(c)
}

/// Reference expansions, with factored coefficients kept factored.
pub fn degree_six_reference(name: &str) -> Option<MomentPolynomial> {
    let lin = PolyInN::linear;
    let k = |c: i64| PolyInN::constant(c.into());
    let n = PolyInN::n;
    let rows: Vec<(&[u32], PolyInN)> = match name {
        "T" => vec![(&[2, 2, 2], k(-1)), (&[3, 3], -&n()), (&[4, 2], n())],
        "P" => vec![
            (&[2, 2, 2], poly(&[-6, 4])),
            (&[3, 3], &(&k(-2) * &lin(5)) * &lin(2)),
            (&[4, 2], poly(&[30, -24, 4])),
            (&[6], &(&k(-2) * &n()) * &lin(1)),
        ],
        "Q" => vec![
            (&[2, 2, 2], &k(12) * &lin(2)),
            (&[3, 3], &k(8) * &poly(&[-5, 2])),
            (&[4, 2], poly(&[60, -36, 4])),
            (&[6], &(&k(-4) * &n()) * &lin(1)),
        ],
        "R" => vec![
            (&[2, 2, 2], &(&k(8) * &lin(2)) * &poly(&[15, -7, 1])),
            (&[3, 3], &k(-16) * &poly(&[20, -15, 3])),
            (&[4, 2], &(&k(-24) * &lin(2)) * &poly(&[10, -5, 1])),
            (&[6], &(&(&k(16) * &n()) * &lin(1)) * &lin(2)),
        ],
        _ => return None,
    };
    Some(MomentPolynomial::from_terms(
        true,
        rows.into_iter()
            .map(|(p, c)| (MomentPartition::new(p.to_vec()), RatFunc::from_poly(c))),
    ))
}

/// Comparison of one computed expansion against its reference.
#[derive(Clone, Debug)]
pub struct GeneratorCheck {
    pub generator: NamedGenerator,
    pub expected: MomentPolynomial,
    pub computed: MomentPolynomial,
}

impl GeneratorCheck {
    /// `(partition, expected, computed)` for each disagreeing coefficient.
    pub fn mismatches(&self) -> Vec<(MomentPartition, RatFunc, RatFunc)> {
        let keys: std::collections::BTreeSet<&MomentPartition> = self
            .expected
            .terms()
            .keys()
            .chain(self.computed.terms().keys())
            .collect();
        keys.into_iter()
            .filter_map(|p| {
                let e = self.expected.coeff(p.parts());
                let c = self.computed.coeff(p.parts());
                (e != c).then(|| (p.clone(), e, c))
            })
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

/// Expands the four degree-six generators and compares each with its
/// reference coefficient by coefficient.
pub fn verify_lemma_degree_six() -> Vec<GeneratorCheck> {
    degree_six_generators()
        .into_iter()
        .map(|g| {
            let computed = ordered_graph_sum(&g.graph, true).scale(&RatFunc::frac(1, g.divisor as i64));
            let expected = degree_six_reference(g.name).expect("known generator");
            GeneratorCheck {
                generator: g,
                expected,
                computed,
            }
        })
        .collect()
}

/// `(x_i - x_j)(x_j - x_k) = ((x_i - x_k)^2 - (x_i - x_j)^2 - (x_j - x_k)^2) / 2`
/// as an identity in three variables.
pub fn verify_polarization_identity() -> bool {
    let x = MultiPoly::vars(3);
    let (xi, xj, xk) = (&x[0], &x[1], &x[2]);
    let lhs = &(xi - xj) * &(xj - xk);
    let rhs = &(&(xi - xk).pow(2) - &(xi - xj).pow(2)) - &(xj - xk).pow(2);
    let half = Rational::new(1.into(), 2.into());
    lhs == rhs.scale(&half)
}
