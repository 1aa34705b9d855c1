//! Small labeled graphs over point configurations, plus the handful of
//! graph-theoretic predicates the verifiers and searches lean on.
//!
//! Everything is bitmask-based and sized for at most 64 vertices; the
//! heavier predicates carry tighter bounds and refuse larger inputs rather
//! than silently crawl.

use crate::antipodal::antipodal_edges;
use crate::error::{Error, Result};
use crate::norm::Norm;
use crate::point::PointConfiguration;
use crate::scalar::{Scalar, ScalarValue};

pub const MAX_GRAPH_VERTICES: usize = 64;
pub const MAX_SUBGRAPH_VERTICES: usize = 16;
pub const MAX_ISO_VERTICES: usize = 12;
pub const MAX_ODD_CYCLE_VERTICES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Diameter,
    Antipodal,
    UnitDistance,
    Abstract,
}

impl GraphKind {
    pub fn name(&self) -> &'static str {
        match self {
            GraphKind::Diameter => "diameter",
            GraphKind::Antipodal => "antipodal",
            GraphKind::UnitDistance => "unit-distance",
            GraphKind::Abstract => "abstract",
        }
    }
}

#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub n: usize,
    /// Sorted list of (i, j) with i < j.
    pub edges: Vec<(usize, usize)>,
    pub kind: GraphKind,
    /// Key of the realized diameter for diameter graphs, absent otherwise.
    pub diameter_key: Option<ScalarValue>,
    adj: Vec<u64>,
}

impl LabeledGraph {
    pub fn new(
        n: usize,
        edges: Vec<(usize, usize)>,
        kind: GraphKind,
        diameter_key: Option<ScalarValue>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("graph needs at least one vertex".into()));
        }
        if n > MAX_GRAPH_VERTICES {
            return Err(Error::TooLarge(format!(
                "graph on {} vertices exceeds the {}-vertex limit",
                n, MAX_GRAPH_VERTICES
            )));
        }
        let mut adj = vec![0u64; n];
        let mut norm_edges = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= n {
                return Err(Error::IndexOutOfRange { index: a, len: n });
            }
            if b >= n {
                return Err(Error::IndexOutOfRange { index: b, len: n });
            }
            if a == b {
                return Err(Error::InvalidSpec(format!("loop edge at vertex {}", a)));
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            if adj[lo] & (1 << hi) == 0 {
                adj[lo] |= 1 << hi;
                adj[hi] |= 1 << lo;
                norm_edges.push((lo, hi));
            }
        }
        norm_edges.sort_unstable();
        Ok(LabeledGraph {
            n,
            edges: norm_edges,
            kind,
            diameter_key,
            adj,
        })
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.adj[i] & (1 << j) != 0
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn neighbors_mask(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|i| self.degree(i)).collect();
        d.sort_unstable();
        d
    }

    pub fn independence_number(&self) -> usize {
        find_independent_set(self).len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "edges": self.edges.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>(),
            "kind": self.kind.name(),
            "diameter_key": match &self.diameter_key {
                Some(k) => k.to_json(),
                None => serde_json::Value::Null,
            },
        })
    }
}

/// Builds the diameter, antipodal, or unit-distance graph of a configuration.
///
/// Distance comparisons go through the norm's keys; on floats `rel_tol`
/// widens key equality, on rationals comparisons are exact and `rel_tol` is
/// ignored. Antipodal graphs are computed on the exact rationalization of
/// the input and take no norm into account.
pub fn build_graph<S: Scalar>(
    cfg: &PointConfiguration<S>,
    norm: &Norm<S>,
    kind: GraphKind,
    rel_tol: f64,
) -> Result<LabeledGraph> {
    let n = cfg.len();
    if n > MAX_GRAPH_VERTICES {
        return Err(Error::TooLarge(format!(
            "configuration of {} points exceeds the {}-vertex graph limit",
            n, MAX_GRAPH_VERTICES
        )));
    }
    match kind {
        GraphKind::Abstract => Err(Error::InvalidSpec(
            "abstract graphs are built from explicit edge lists, not configurations".into(),
        )),
        GraphKind::Antipodal => {
            let exact = cfg.to_exact();
            let analysis = antipodal_edges(&exact)?;
            LabeledGraph::new(n, analysis.edges, GraphKind::Antipodal, None)
        }
        GraphKind::Diameter | GraphKind::UnitDistance => {
            let mut keys = Vec::with_capacity(n * (n - 1) / 2);
            for i in 0..n {
                for j in (i + 1)..n {
                    let k = norm.distance_key(&cfg.points()[i], &cfg.points()[j])?;
                    keys.push(((i, j), k));
                }
            }
            if kind == GraphKind::Diameter {
                let max = keys
                    .iter()
                    .map(|(_, k)| k)
                    .max_by(|a, b| a.total_cmp(b))
                    .ok_or_else(|| {
                        Error::DegenerateConfiguration(
                            "diameter graph needs at least two points".into(),
                        )
                    })?
                    .clone();
                if max.0.is_zero() {
                    return Err(Error::DegenerateConfiguration(
                        "all points coincide; diameter is zero".into(),
                    ));
                }
                let edges = keys
                    .iter()
                    .filter(|(_, k)| k.approx_eq(&max, rel_tol))
                    .map(|(e, _)| *e)
                    .collect();
                LabeledGraph::new(n, edges, kind, Some(max.0.erase()))
            } else {
                let unit = norm.unit_key();
                let edges = keys
                    .iter()
                    .filter(|(_, k)| k.approx_eq(&unit, rel_tol))
                    .map(|(e, _)| *e)
                    .collect();
                LabeledGraph::new(n, edges, kind, None)
            }
        }
    }
}

/// A maximum independent set, found by include/exclude branch and bound on
/// the lowest-index candidate. The first maximum encountered is kept, so
/// ties resolve toward low indices.
pub fn find_independent_set(g: &LabeledGraph) -> Vec<usize> {
    let full: u64 = if g.n == 64 { !0 } else { (1u64 << g.n) - 1 };
    let mut best = 0u64;
    branch(g, full, 0, &mut best);
    let mut out = Vec::with_capacity(best.count_ones() as usize);
    let mut m = best;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

fn branch(g: &LabeledGraph, cand: u64, cur: u64, best: &mut u64) {
    if cur.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    if cand == 0 {
        *best = cur;
        return;
    }
    let v = cand.trailing_zeros() as usize;
    branch(g, cand & !(1 << v) & !g.adj[v], cur | (1 << v), best);
    branch(g, cand & !(1 << v), cur, best);
}

/// Looks for an injective map of `pattern` into `host` sending edges to
/// edges (a not necessarily induced embedding). Returns, for each pattern
/// vertex, its host image. Pattern vertices are matched in order of
/// decreasing degree so dense cores fail fast.
pub fn contains_subgraph(
    host: &LabeledGraph,
    pattern: &LabeledGraph,
) -> Result<Option<Vec<usize>>> {
    if host.n > MAX_SUBGRAPH_VERTICES || pattern.n > MAX_SUBGRAPH_VERTICES {
        return Err(Error::TooLarge(format!(
            "subgraph test limited to {} vertices",
            MAX_SUBGRAPH_VERTICES
        )));
    }
    if pattern.n > host.n || pattern.edges.len() > host.edges.len() {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..pattern.n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
    let mut map = vec![usize::MAX; pattern.n];
    if embed(host, pattern, &order, 0, &mut map, 0) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn embed(
    host: &LabeledGraph,
    pattern: &LabeledGraph,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    'hosts: for h in 0..host.n {
        if used & (1 << h) != 0 || host.degree(h) < pattern.degree(p) {
            continue;
        }
        for &q in &order[..depth] {
            if pattern.has_edge(p, q) && !host.has_edge(h, map[q]) {
                continue 'hosts;
            }
        }
        map[p] = h;
        if embed(host, pattern, order, depth + 1, map, used | (1 << h)) {
            return true;
        }
        map[p] = usize::MAX;
    }
    false
}

/// Graph isomorphism for small graphs: color refinement to narrow candidate
/// images, then backtracking. Returns a vertex map from `a` to `b`.
pub fn are_isomorphic(a: &LabeledGraph, b: &LabeledGraph) -> Result<Option<Vec<usize>>> {
    if a.n > MAX_ISO_VERTICES || b.n > MAX_ISO_VERTICES {
        return Err(Error::TooLarge(format!(
            "isomorphism test limited to {} vertices",
            MAX_ISO_VERTICES
        )));
    }
    if a.n != b.n || a.edges.len() != b.edges.len() || a.degree_sequence() != b.degree_sequence() {
        return Ok(None);
    }
    let n = a.n;
    let mut col_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut col_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    loop {
        let sig = |g: &LabeledGraph, col: &[usize], v: usize| {
            let mut nb: Vec<usize> = (0..n)
                .filter(|&w| g.has_edge(v, w))
                .map(|w| col[w])
                .collect();
            nb.sort_unstable();
            (col[v], nb)
        };
        let sigs_a: Vec<_> = (0..n).map(|v| sig(a, &col_a, v)).collect();
        let sigs_b: Vec<_> = (0..n).map(|v| sig(b, &col_b, v)).collect();
        let mut all: Vec<_> = sigs_a.iter().chain(sigs_b.iter()).cloned().collect();
        all.sort();
        all.dedup();
        let next_a: Vec<usize> = sigs_a
            .iter()
            .map(|s| all.binary_search(s).unwrap())
            .collect();
        let next_b: Vec<usize> = sigs_b
            .iter()
            .map(|s| all.binary_search(s).unwrap())
            .collect();
        let stable = distinct_count(&next_a) == distinct_count(&col_a)
            && distinct_count(&next_b) == distinct_count(&col_b);
        col_a = next_a;
        col_b = next_b;
        if stable {
            break;
        }
    }
    let mut hist_a = col_a.clone();
    let mut hist_b = col_b.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; n];
    if iso_backtrack(a, b, &col_a, &col_b, 0, &mut map, 0) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn distinct_count(col: &[usize]) -> usize {
    let mut c = col.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn iso_backtrack(
    a: &LabeledGraph,
    b: &LabeledGraph,
    col_a: &[usize],
    col_b: &[usize],
    v: usize,
    map: &mut Vec<usize>,
    used: u64,
) -> bool {
    if v == a.n {
        return true;
    }
    'images: for w in 0..b.n {
        if used & (1 << w) != 0 || col_a[v] != col_b[w] {
            continue;
        }
        for u in 0..v {
            if a.has_edge(v, u) != b.has_edge(w, map[u]) {
                continue 'images;
            }
        }
        map[v] = w;
        if iso_backtrack(a, b, col_a, col_b, v + 1, map, used | (1 << w)) {
            return true;
        }
        map[v] = usize::MAX;
    }
    false
}

/// True iff the graph has no two vertex-disjoint odd cycles. Equivalent
/// formulation actually tested: no vertex split (S, V minus S) leaves both
/// sides non-bipartite. Vacuously true for graphs without odd cycles.
pub fn odd_cycles_pairwise_intersect(g: &LabeledGraph) -> Result<bool> {
    if g.n > MAX_ODD_CYCLE_VERTICES {
        return Err(Error::TooLarge(format!(
            "odd cycle analysis limited to {} vertices",
            MAX_ODD_CYCLE_VERTICES
        )));
    }
    let full: u64 = (1u64 << g.n) - 1;
    // Splits come in complementary pairs; pin vertex 0 to S.
    for m in 0..(1u64 << (g.n - 1)) {
        let s = (m << 1) | 1;
        let t = full & !s;
        if !is_bipartite_on(g, s) && !is_bipartite_on(g, t) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_bipartite_on(g: &LabeledGraph, mask: u64) -> bool {
    let mut color = [0u8; 64]; // 0 unvisited, 1/2 the two sides
    for start in 0..g.n {
        if mask & (1 << start) == 0 || color[start] != 0 {
            continue;
        }
        color[start] = 1;
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            let mut nb = g.adj[v] & mask;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if color[w] == 0 {
                    color[w] = 3 - color[v];
                    queue.push(w);
                } else if color[w] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}
