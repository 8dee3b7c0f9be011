use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Result of an exact feasibility test for `A x = b, x >= 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    /// A basic feasible solution, one weight per column.
    Feasible { weights: Vec<Rational> },
    /// `z` with `z^T A >= 0` columnwise and `z^T b < 0`.
    Infeasible { farkas: Vec<Rational> },
}

/// Fraction-free simplex tableau. Every entry is an integer numerator over
/// the shared positive denominator `den` (the previous pivot), so pivots are
/// exact integer divisions with no gcd normalization. Columns `0..k` are the
/// structural variables, `k..k+m` the phase-one artificials (while present),
/// and the last column holds the right-hand side.
#[derive(Clone)]
struct Tableau {
    rows: Vec<Vec<BigInt>>,
    cost: Vec<BigInt>,
    den: BigInt,
    basis: Vec<usize>,
    k: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigInt {
        self.rows[i].last().expect("tableau rows are nonempty")
    }

    fn value(&self, x: &BigInt) -> Rational {
        Rational::new(x.clone(), self.den.clone())
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        let pivot_row = self.rows[r].clone();
        let den = &self.den;
        let eliminate = |row: &mut Vec<BigInt>| {
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = (&*x * &p - &f * y) / den;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        if !self.cost.is_empty() {
            eliminate(&mut self.cost);
        }
        self.den = p;
        if self.den.is_negative() {
            for x in self.rows.iter_mut().flatten().chain(self.cost.iter_mut()) {
                *x = -&*x;
            }
            self.den = -&self.den;
        }
        self.basis[r] = c;
    }

    /// Rows where column `c` attains the minimum ratio, Bland order first.
    fn ratio_rows(&self, c: usize) -> Vec<usize> {
        let mut best: Option<Rational> = None;
        let mut rows: Vec<usize> = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            if row[c].is_positive() {
                let ratio = Rational::new(self.rhs(i).clone(), row[c].clone());
                match &best {
                    Some(b) if ratio > *b => {}
                    Some(b) if ratio == *b => rows.push(i),
                    _ => {
                        best = Some(ratio);
                        rows = vec![i];
                    }
                }
            }
        }
        rows.sort_by_key(|&i| self.basis[i]);
        rows
    }

    /// Bland's rule: lowest-index improving column, lowest-index leaving
    /// basic variable among ratio ties.
    fn run(&mut self) {
        // The last cost entry is the objective value, not a column.
        while let Some(c) = self.cost[..self.cost.len() - 1].iter().position(Signed::is_negative) {
            let rows = self.ratio_rows(c);
            let r = *rows.first().expect("phase one is bounded below");
            self.pivot(r, c);
        }
    }

    fn structural_solution(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.k];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.k {
                x[b] = self.value(self.rhs(i));
            }
        }
        x
    }
}

fn check_dimensions(columns: &[Vec<Rational>], target: &[Rational]) -> Result<()> {
    if let Some((j, c)) = columns.iter().enumerate().find(|(_, c)| c.len() != target.len()) {
        return Err(Error::DimensionMismatch(format!(
            "column {j} has length {} but the target has length {}",
            c.len(),
            target.len()
        )));
    }
    Ok(())
}

/// Positive `s` making `v * s` a primitive integer vector; 1 for zero.
fn primitive_scale(v: &[Rational]) -> Rational {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let num = v
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(&(x.numer() * &den / x.denom())));
    if num.is_zero() {
        Rational::one()
    } else {
        Rational::new(den, num)
    }
}

/// The problem with every column and the target rescaled to primitive
/// integer vectors. Positive column scalings leave feasibility and Farkas
/// vectors unchanged and keep tableau entries small.
struct Scaled {
    columns: Vec<Vec<BigInt>>,
    target: Vec<BigInt>,
    column_scale: Vec<Rational>,
    target_scale: Rational,
}

impl Scaled {
    fn new(columns: &[Vec<Rational>], target: &[Rational]) -> Self {
        let scale = |v: &[Rational]| {
            let s = primitive_scale(v);
            let ints = v.iter().map(|x| (x * &s).to_integer()).collect::<Vec<_>>();
            (ints, s)
        };
        let (columns, column_scale): (Vec<_>, Vec<_>) = columns.iter().map(|c| scale(c)).unzip();
        let (target, target_scale) = scale(target);
        Scaled {
            columns,
            target,
            column_scale,
            target_scale,
        }
    }

    /// Maps a solution of the scaled problem back to the original one.
    fn unscale(&self, x: Vec<Rational>) -> Vec<Rational> {
        x.into_iter()
            .zip(&self.column_scale)
            .map(|(w, s)| w * s / &self.target_scale)
            .collect()
    }
}

/// Runs phase one; returns the tableau and the row sign flips.
fn phase_one(columns: &[Vec<BigInt>], target: &[BigInt]) -> (Tableau, Vec<bool>) {
    let (m, k) = (target.len(), columns.len());
    let flipped: Vec<bool> = target.iter().map(Signed::is_negative).collect();
    let rows: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            let sign = |x: &BigInt| if flipped[i] { -x } else { x.clone() };
            let mut row: Vec<BigInt> = columns.iter().map(|c| sign(&c[i])).collect();
            row.extend((0..m).map(|a| if a == i { BigInt::one() } else { BigInt::zero() }));
            row.push(sign(&target[i]));
            row
        })
        .collect();
    let mut cost = vec![BigInt::zero(); k + m + 1];
    for row in &rows {
        for (c, x) in cost[..k].iter_mut().zip(row) {
            *c -= x;
        }
    }
    let mut t = Tableau {
        rows,
        cost,
        den: BigInt::one(),
        basis: (k..k + m).collect(),
        k,
    };
    t.run();
    (t, flipped)
}

/// Whether phase one reached zero infeasibility.
fn phase_one_feasible(t: &Tableau) -> bool {
    t.basis.iter().enumerate().all(|(i, &b)| b < t.k || t.rhs(i).is_zero())
}

/// Decides `columns * x = target, x >= 0` exactly. Both outcomes are
/// verified before returning.
pub fn lp_feasible(columns: &[Vec<Rational>], target: &[Rational]) -> Result<LpOutcome> {
    check_dimensions(columns, target)?;
    let scaled = Scaled::new(columns, target);
    let (t, flipped) = phase_one(&scaled.columns, &scaled.target);
    if phase_one_feasible(&t) {
        let weights = scaled.unscale(t.structural_solution());
        if !is_solution(columns, target, &weights) {
            return Err(Error::Internal("simplex solution failed verification"));
        }
        return Ok(LpOutcome::Feasible { weights });
    }
    // Artificial reduced cost is 1 - y_i for the phase-one dual y.
    let farkas: Vec<Rational> = (0..target.len())
        .map(|i| {
            let y = Rational::one() - t.value(&t.cost[t.k + i]);
            if flipped[i] {
                y
            } else {
                -y
            }
        })
        .collect();
    if !is_farkas(columns, target, &farkas) {
        return Err(Error::Internal("Farkas vector failed verification"));
    }
    Ok(LpOutcome::Infeasible { farkas })
}

pub fn is_solution(columns: &[Vec<Rational>], target: &[Rational], x: &[Rational]) -> bool {
    if x.len() != columns.len() || x.iter().any(Signed::is_negative) {
        return false;
    }
    (0..target.len()).all(|i| {
        let s: Rational = columns.iter().zip(x).map(|(c, w)| &c[i] * w).sum();
        s == target[i]
    })
}

pub fn is_farkas(columns: &[Vec<Rational>], target: &[Rational], z: &[Rational]) -> bool {
    let dot = |v: &[Rational]| -> Rational { v.iter().zip(z).map(|(a, b)| a * b).sum() };
    columns.iter().all(|c| !dot(c).is_negative()) && dot(target).is_negative()
}

/// Distinct basic feasible solutions, and whether the walk visited every
/// reachable basis within its budget.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexEnumeration {
    pub vertices: Vec<Vec<Rational>>,
    pub complete: bool,
}

/// Basic feasible solutions of `columns * x = target, x >= 0`, found by a
/// breadth-first walk over adjacent bases (degenerate pivots included),
/// visiting at most `budget` bases. Empty and complete when infeasible.
pub fn feasible_vertices(columns: &[Vec<Rational>], target: &[Rational], budget: usize) -> Result<VertexEnumeration> {
    check_dimensions(columns, target)?;
    let scaled = Scaled::new(columns, target);
    let (mut t, _) = phase_one(&scaled.columns, &scaled.target);
    if !phase_one_feasible(&t) {
        return Ok(VertexEnumeration {
            vertices: Vec::new(),
            complete: true,
        });
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    let k = t.k;
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= k {
            match (0..k).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    for row in &mut t.rows {
        let rhs = row.pop().expect("rhs present");
        row.truncate(k);
        row.push(rhs);
    }
    t.cost.clear();

    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut points: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut complete = true;
    let key = |t: &Tableau| {
        let mut b = t.basis.clone();
        b.sort_unstable();
        b
    };
    seen.insert(key(&t));
    queue.push_back(t);
    while let Some(t) = queue.pop_front() {
        points.insert(scaled.unscale(t.structural_solution()));
        for c in (0..k).filter(|c| !t.basis.contains(c)) {
            for r in t.ratio_rows(c) {
                // The neighbor's basis is known before pivoting; only new
                // bases within budget pay for a pivot.
                let mut k = t.basis.clone();
                k[r] = c;
                k.sort_unstable();
                if seen.contains(&k) {
                    continue;
                }
                if seen.len() >= budget {
                    complete = false;
                    continue;
                }
                seen.insert(k);
                let mut next = t.clone();
                next.pivot(r, c);
                queue.push_back(next);
            }
        }
    }
    Ok(VertexEnumeration {
        vertices: points.into_iter().collect(),
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rational};

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&a| int(a)).collect()
    }

    #[test]
    fn single_column_and_identity() {
        let cols = vec![v(&[1, 2]), v(&[3, 1])];
        assert_eq!(
            lp_feasible(&cols, &v(&[3, 1])).unwrap(),
            LpOutcome::Feasible { weights: v(&[0, 1]) }
        );
        let eye = vec![v(&[1, 0]), v(&[0, 1])];
        assert_eq!(
            lp_feasible(&eye, &v(&[2, 3])).unwrap(),
            LpOutcome::Feasible { weights: v(&[2, 3]) }
        );
    }

    #[test]
    fn negated_column_is_infeasible() {
        let cols = vec![v(&[1, 2, 0]), v(&[0, 1, 1])];
        match lp_feasible(&cols, &v(&[-1, -2, 0])).unwrap() {
            LpOutcome::Infeasible { farkas } => assert!(is_farkas(&cols, &v(&[-1, -2, 0]), &farkas)),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn mixed_signs_and_degeneracy() {
        let cols = vec![v(&[1, -1, 0]), v(&[0, 1, -1]), v(&[1, 0, -1]), v(&[0, 0, 0])];
        let target = v(&[2, 0, -2]);
        match lp_feasible(&cols, &target).unwrap() {
            LpOutcome::Feasible { weights } => assert!(is_solution(&cols, &target, &weights)),
            other => panic!("{other:?}"),
        }
        let e = feasible_vertices(&cols, &target, 100).unwrap();
        assert!(e.complete);
        assert_eq!(e.vertices, vec![v(&[0, 0, 2, 0]), v(&[2, 2, 0, 0])]);
        assert!(e.vertices.iter().all(|x| is_solution(&cols, &target, x)));
        assert!(feasible_vertices(&cols, &v(&[-1, 0, 0]), 100)
            .unwrap()
            .vertices
            .is_empty());
        assert!(!feasible_vertices(&cols, &target, 1).unwrap().complete);
    }

    #[test]
    fn fractional_weights() {
        let cols = vec![v(&[2, 0]), v(&[0, 3])];
        assert_eq!(
            lp_feasible(&cols, &v(&[1, 1])).unwrap(),
            LpOutcome::Feasible {
                weights: vec![rational(1, 2), rational(1, 3)]
            }
        );
        assert!(lp_feasible(&cols, &v(&[1])).is_err());
    }
}
