use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, RatFunc, Rational};
use crate::moments::MomentPolynomial;
use crate::multipoly::MultiPoly;

use super::multigraph::Multigraph;
use super::partitions::DistinctSumCache;

/// `M_G = prod_{(i,j)} (z_i - z_j)^{mult}` in the `m` vertex variables.
pub fn graph_monomial(g: &Multigraph) -> MultiPoly {
    let m = g.vertex_count();
    let vars = MultiPoly::vars(m);
    g.edges()
        .iter()
        .fold(MultiPoly::constant(m, Rational::one()), |acc, (&(i, j), &k)| {
            &acc * &(&vars[i] - &vars[j]).pow(k)
        })
}

/// Sum of `M_G(z_{i_1}, ..., z_{i_m})` over ordered pairwise distinct
/// index tuples, in power sums.
pub fn ordered_graph_sum(g: &Multigraph, centered: bool) -> MomentPolynomial {
    ordered_graph_sum_cached(g, &mut DistinctSumCache::new(centered))
}

/// As [`ordered_graph_sum`], reusing `cache` across graphs.
pub fn ordered_graph_sum_cached(g: &Multigraph, cache: &mut DistinctSumCache) -> MomentPolynomial {
    // S depends only on the multiset of exponents, so group terms first.
    let mut grouped: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for (e, c) in graph_monomial(g).terms() {
        let mut key = e.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        *grouped.entry(key).or_insert_with(Rational::zero) += c;
    }
    let mut out: Option<MomentPolynomial> = None;
    for (alpha, c) in grouped {
        if c.is_zero() {
            continue;
        }
        let term = cache.get(&alpha).scale(&RatFunc::from_rational(&c));
        out = Some(match out {
            None => term,
            Some(acc) => &acc + &term,
        });
    }
    out.unwrap_or_else(|| MomentPolynomial::zero(cache.is_centered()))
}

/// `(n0 - m)!`: ordered-distinct sum times this is the full `S_{n0}`
/// symmetrization.
pub fn symmetrization_factor(g: &Multigraph, n0: i64) -> Result<Rational> {
    let m = g.vertex_count() as i64;
    if n0 < m {
        return Err(Error::OutOfRange(format!(
            "n = {n0} is smaller than the vertex count {m}"
        )));
    }
    Ok(Rational::from_integer(factorial((n0 - m) as u64)))
}

/// The ordered-distinct sum evaluated by literally visiting every index
/// tuple. Exponential; intended as an oracle for small `values.len()`.
pub fn brute_force_ordered_sum(g: &Multigraph, values: &[Rational]) -> Rational {
    let m = g.vertex_count();
    let n = values.len();
    let mut total = Rational::zero();
    if m > n {
        return total;
    }
    let mut idx = vec![0usize; m];
    let mut used = vec![false; n];
    fn rec(
        g: &Multigraph,
        values: &[Rational],
        depth: usize,
        idx: &mut Vec<usize>,
        used: &mut Vec<bool>,
        total: &mut Rational,
    ) {
        if depth == idx.len() {
            let mut v = Rational::one();
            for (&(i, j), &k) in g.edges() {
                let d = &values[idx[i]] - &values[idx[j]];
                v *= num_traits::pow(d, k as usize);
            }
            *total += v;
            return;
        }
        for t in 0..values.len() {
            if !used[t] {
                used[t] = true;
                idx[depth] = t;
                rec(g, values, depth + 1, idx, used, total);
                used[t] = false;
            }
        }
    }
    rec(g, values, 0, &mut idx, &mut used, &mut total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rational};
    use crate::moments::{centered, moment_eval};

    fn g(s: &str) -> Multigraph {
        s.parse().unwrap()
    }

    #[test]
    fn doubled_edge() {
        let s = ordered_graph_sum(&g("1-2:2"), true);
        assert_eq!(s, MomentPolynomial::p(true, 2).scale(&"2*n".parse().unwrap()));
    }

    #[test]
    fn matches_brute_force_on_centered_data() {
        let data = [
            rational(3, 2),
            int(-2),
            rational(1, 3),
            int(5),
            rational(-7, 4),
            int(0),
            int(1),
        ];
        for spec in ["1-2:2,2-3:2,3-1:2", "1-2:4,3-4:2", "1-2:1,2-3:3", "1-2:2,3-4:2,5-6:2"] {
            let gr = g(spec);
            let sum = ordered_graph_sum(&gr, true);
            for n0 in gr.vertex_count()..=7 {
                let z = centered(&data[..n0]);
                let want = brute_force_ordered_sum(&gr, &z);
                assert_eq!(moment_eval(&sum, &z, n0 as i64).unwrap(), want, "{spec} n={n0}");
            }
        }
    }

    #[test]
    fn uncentered_matches_brute_force() {
        let data = [int(2), int(-1), rational(5, 2), int(3)];
        let gr = g("1-2:1,2-3:1");
        let sum = ordered_graph_sum(&gr, false);
        assert_eq!(
            moment_eval(&sum, &data, 4).unwrap(),
            brute_force_ordered_sum(&gr, &data)
        );
    }

    #[test]
    fn factor_values() {
        let t = g("1-2:2,2-3:2,3-1:2");
        assert_eq!(symmetrization_factor(&t, 3).unwrap(), int(1));
        assert_eq!(symmetrization_factor(&t, 5).unwrap(), int(2));
        assert!(symmetrization_factor(&t, 2).is_err());
    }
}
