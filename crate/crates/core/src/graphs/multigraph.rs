use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Sorted `(i, j, mult)` triples of one relabeled component.
type EdgeCode = Vec<(usize, usize, u32)>;

/// A loopless multigraph on vertices `0..m` (printed as `1..m`) in which
/// every vertex has at least one incident edge.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multigraph {
    m: usize,
    /// `(i, j)` with `i < j` -> multiplicity `>= 1`.
    edges: BTreeMap<(usize, usize), u32>,
}

impl Multigraph {
    /// Builds a graph from `(u, v, mult)` triples with arbitrary vertex
    /// labels. Parallel entries add up; labels are renumbered to `0..m` in
    /// ascending order.
    pub fn new(edges: impl IntoIterator<Item = (usize, usize, u32)>) -> Result<Self> {
        let edges: Vec<_> = edges.into_iter().collect();
        for &(u, v, k) in &edges {
            if u == v {
                return Err(Error::OutOfRange(format!("self-loop at vertex {u}")));
            }
            if k == 0 {
                return Err(Error::OutOfRange(format!("edge {u}-{v} has zero multiplicity")));
            }
        }
        let labels: BTreeSet<usize> = edges.iter().flat_map(|&(u, v, _)| [u, v]).collect();
        let index: BTreeMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut map = BTreeMap::new();
        for (u, v, k) in edges {
            let (a, b) = (index[&u], index[&v]);
            *map.entry((a.min(b), a.max(b))).or_insert(0) += k;
        }
        Ok(Multigraph {
            m: labels.len(),
            edges: map,
        })
    }

    /// The graph with no edges (and hence no vertices).
    pub fn empty() -> Self {
        Multigraph {
            m: 0,
            edges: BTreeMap::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.edges
    }

    /// Sum of edge multiplicities: the degree of `M_G` in the roots.
    pub fn total_multiplicity(&self) -> u32 {
        self.edges.values().sum()
    }

    /// Every multiplicity is even.
    pub fn is_square(&self) -> bool {
        self.edges.values().all(|k| k % 2 == 0)
    }

    /// Every multiplicity multiplied by `k`.
    pub fn scaled(&self, k: u32) -> Self {
        Multigraph {
            m: self.m,
            edges: self.edges.iter().map(|(&e, &v)| (e, v * k)).collect(),
        }
    }

    /// Vertex `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.m);
        let edges = self.edges.iter().map(|(&(i, j), &k)| (perm[i], perm[j], k));
        Multigraph::new(edges).expect("relabeling preserves validity")
    }

    /// Sorted incident multiplicities of each vertex.
    fn vertex_invariants(&self) -> Vec<Vec<u32>> {
        let mut inv = vec![Vec::new(); self.m];
        for (&(i, j), &k) in &self.edges {
            inv[i].push(k);
            inv[j].push(k);
        }
        for v in &mut inv {
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
        inv
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.m).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(i, j) in self.edges.keys() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a.max(b)] = a.min(b);
        }
        let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.m {
            let r = find(&mut parent, v);
            comps.entry(r).or_default().push(v);
        }
        comps.into_values().collect()
    }

    /// A canonical relabeling: equal for two graphs iff they are isomorphic.
    ///
    /// Each connected component is labeled by the lexicographically least
    /// sorted edge code among orderings that list vertices by descending
    /// invariant; components are then placed in order of (size, code).
    pub fn canonical(&self) -> Self {
        let inv = self.vertex_invariants();
        let mut codes: Vec<(usize, EdgeCode)> = self
            .components()
            .into_iter()
            .map(|comp| (comp.len(), self.component_code(&comp, &inv)))
            .collect();
        codes.sort();
        let mut edges = Vec::new();
        let mut offset = 0;
        for (size, code) in codes {
            edges.extend(code.into_iter().map(|(i, j, k)| (i + offset, j + offset, k)));
            offset += size;
        }
        Multigraph::new(edges).expect("canonical code is a valid graph")
    }

    fn component_code(&self, comp: &[usize], inv: &[Vec<u32>]) -> EdgeCode {
        // cells: vertices grouped by invariant, largest invariant first
        let mut cells: BTreeMap<std::cmp::Reverse<&Vec<u32>>, Vec<usize>> = BTreeMap::new();
        for &v in comp {
            cells.entry(std::cmp::Reverse(&inv[v])).or_default().push(v);
        }
        let cells: Vec<Vec<usize>> = cells.into_values().collect();
        let mut best: Option<Vec<(usize, usize, u32)>> = None;
        let mut order = Vec::with_capacity(comp.len());
        self.search_orders(&cells, 0, &mut order, &mut best);
        best.expect("component is nonempty")
    }

    fn search_orders(
        &self,
        cells: &[Vec<usize>],
        cell: usize,
        order: &mut Vec<usize>,
        best: &mut Option<Vec<(usize, usize, u32)>>,
    ) {
        if cell == cells.len() {
            let mut label = BTreeMap::new();
            for (pos, &v) in order.iter().enumerate() {
                label.insert(v, pos);
            }
            let mut code: Vec<(usize, usize, u32)> = self
                .edges
                .iter()
                .filter(|((i, _), _)| label.contains_key(i))
                .map(|(&(i, j), &k)| {
                    let (a, b) = (label[&i], label[&j]);
                    (a.min(b), a.max(b), k)
                })
                .collect();
            code.sort_unstable();
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
            return;
        }
        let mut members = cells[cell].clone();
        permute_all(&mut members, 0, &mut |perm| {
            let len = order.len();
            order.extend_from_slice(perm);
            self.search_orders(cells, cell + 1, order, best);
            order.truncate(len);
        });
    }

    /// The graph text form of the canonical relabeling.
    pub fn canonical_form(&self) -> String {
        self.canonical().to_string()
    }
}

/// Calls `f` on every permutation of `items[k..]` (Heap-style swaps).
pub(crate) fn permute_all(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, f);
        items.swap(k, i);
    }
}

impl fmt::Display for Multigraph {
    /// `1-2:2,1-3:2,2-3:2`; edges in ascending order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (&(i, j), &k)) in self.edges.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}-{}:{k}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph({self})")
    }
}

impl FromStr for Multigraph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_graph_spec(s)
    }
}

/// Parses comma-separated `i-j:mult` tokens. Whitespace is ignored and
/// error positions are byte offsets into `s`.
pub fn parse_graph_spec(s: &str) -> Result<Multigraph> {
    let mut edges = Vec::new();
    let mut start = 0;
    for token in s.split(',') {
        let pos = start + (token.len() - token.trim_start().len());
        start += token.len() + 1;
        let t: String = token.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::parse(pos, "empty edge token"));
        }
        let (pair, mult) = t
            .split_once(':')
            .ok_or_else(|| Error::parse(pos, format!("missing ':mult' in {t:?}")))?;
        let (u, v) = pair
            .split_once('-')
            .ok_or_else(|| Error::parse(pos, format!("missing '-' in {t:?}")))?;
        let num = |x: &str, what: &str| -> Result<usize> {
            x.parse::<usize>()
                .map_err(|_| Error::parse(pos, format!("bad {what} {x:?}")))
        };
        let (u, v, k) = (num(u, "vertex")?, num(v, "vertex")?, num(mult, "multiplicity")?);
        if u == 0 || v == 0 {
            return Err(Error::parse(pos, "vertices are positive integers"));
        }
        if u == v {
            return Err(Error::parse(pos, format!("self-loop at vertex {u}")));
        }
        if k == 0 {
            return Err(Error::parse(pos, "zero multiplicity"));
        }
        let k = u32::try_from(k).map_err(|_| Error::parse(pos, "multiplicity too large"))?;
        edges.push((u, v, k));
    }
    Multigraph::new(edges)
}
