use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::multigraph::Multigraph;

/// Default largest total multiplicity accepted by [`enumerate_square_graphs`].
pub const DEFAULT_ENUMERATION_CAP: u32 = 12;

/// All loopless multigraphs without isolated vertices and with exactly
/// `units` edges counted with multiplicity, one canonical representative
/// per isomorphism class, keyed by canonical form.
pub fn enumerate_multigraphs(units: u32) -> BTreeMap<String, Multigraph> {
    let mut level = BTreeMap::new();
    level.insert(String::new(), Multigraph::empty());
    for _ in 0..units {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for h in augmentations(g) {
                let c = h.canonical();
                next.entry(c.to_string()).or_insert(c);
            }
        }
        level = next;
    }
    level
}

/// Every graph obtained from `g` by adding one edge unit, possibly on new
/// vertices.
fn augmentations(g: &Multigraph) -> Vec<Multigraph> {
    let m = g.vertex_count();
    let base: Vec<(usize, usize, u32)> = g.edges().iter().map(|(&(i, j), &k)| (i, j, k)).collect();
    let mut out = Vec::new();
    let mut with = |u: usize, v: usize| {
        let mut e = base.clone();
        e.push((u, v, 1));
        out.push(Multigraph::new(e).expect("valid augmentation"));
    };
    for i in 0..m {
        for j in i + 1..m {
            with(i, j);
        }
        with(i, m);
    }
    with(m, m + 1);
    out
}

/// Isomorphism classes of square multigraphs with total multiplicity `d`,
/// sorted by canonical string.
pub fn enumerate_square_graphs(d: u32) -> Result<Vec<Multigraph>> {
    enumerate_square_graphs_with_cap(d, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_square_graphs_with_cap(d: u32, cap: u32) -> Result<Vec<Multigraph>> {
    if d == 0 || d % 2 == 1 {
        return Err(Error::OutOfRange(format!("degree {d} must be a positive even integer")));
    }
    if d > cap {
        return Err(Error::OutOfRange(format!(
            "degree {d} exceeds the enumeration cap {cap}"
        )));
    }
    let mut out: Vec<(String, Multigraph)> = enumerate_multigraphs(d / 2)
        .into_values()
        .map(|g| {
            let c = g.scaled(2).canonical();
            (c.to_string(), c)
        })
        .collect();
    out.sort();
    Ok(out.into_iter().map(|(_, g)| g).collect())
}
