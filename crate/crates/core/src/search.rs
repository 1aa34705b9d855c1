//! Exhaustive and branch-and-bound search for maximum k-diametral and
//! k-antipodal subsets of small candidate families, plus the six-vertex
//! enumeration behind the 3-diametral graph catalog.

use std::time::Instant;

use itertools::Itertools;

use crate::antipodal::{antipodal_edges_lp_only, separating_direction};
use crate::error::{Error, Result};
use crate::graph::{GraphKind, LabeledGraph};
use crate::norm::{DistanceKey, Norm};
use crate::point::PointConfiguration;
use crate::scalar::{Scalar, DEFAULT_REL_TOL};
use crate::verify;
use crate::Rational;

pub const MAX_DIAMETRAL_FAMILY: usize = 24;
pub const MAX_ANTIPODAL_FAMILY: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchProperty {
    Diametral,
    Antipodal,
}

impl SearchProperty {
    pub fn name(&self) -> &'static str {
        match self {
            SearchProperty::Diametral => "diametral",
            SearchProperty::Antipodal => "antipodal",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchLimits {
    pub max_nodes: u64,
    pub time_budget_ms: Option<u64>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: 10_000_000,
            time_budget_ms: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchProblem<S> {
    pub family: PointConfiguration<S>,
    pub norm: Norm<S>,
    pub k: usize,
    pub property: SearchProperty,
    pub limits: SearchLimits,
    /// Reserved for randomized restarts; the exhaustive searches are
    /// deterministic and ignore it.
    pub seed: u64,
}

impl<S: Scalar> SearchProblem<S> {
    pub fn new(
        family: PointConfiguration<S>,
        norm: Norm<S>,
        k: usize,
        property: SearchProperty,
    ) -> Self {
        SearchProblem {
            family,
            norm,
            k,
            property,
            limits: SearchLimits::default(),
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub best_size: usize,
    pub best_subset: Vec<usize>,
    /// Set only when the whole family was enumerated within budget, so no
    /// larger subset passes.
    pub exhaustive: bool,
    pub nodes_visited: u64,
}

impl SearchResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "best_size": self.best_size,
            "best_subset": self.best_subset,
            "exhaustive": self.exhaustive,
            "nodes_visited": self.nodes_visited,
        })
    }
}

struct Budget {
    max_nodes: u64,
    deadline: Option<Instant>,
    nodes: u64,
    exceeded: bool,
}

impl Budget {
    fn new(limits: &SearchLimits) -> Self {
        Budget {
            max_nodes: limits.max_nodes,
            deadline: limits
                .time_budget_ms
                .map(|ms| Instant::now() + std::time::Duration::from_millis(ms)),
            nodes: 0,
            exceeded: false,
        }
    }

    /// Counts one node; false once the budget is gone.
    fn tick(&mut self) -> bool {
        if self.exceeded {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.exceeded = true;
        } else if self.nodes % 1024 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    self.exceeded = true;
                }
            }
        }
        !self.exceeded
    }
}

fn validate_family<S: Scalar>(
    p: &SearchProblem<S>,
    want: SearchProperty,
    cap: usize,
) -> Result<()> {
    if p.property != want {
        return Err(Error::InvalidSpec(format!(
            "problem declares the {} property",
            p.property.name()
        )));
    }
    if p.k < 2 {
        return Err(Error::InvalidInstance(format!(
            "k must be >= 2, got {}",
            p.k
        )));
    }
    if p.limits.max_nodes == 0 {
        return Err(Error::InvalidInstance(
            "node budget must be positive".into(),
        ));
    }
    if p.family.is_empty() {
        return Err(Error::InvalidInstance("empty candidate family".into()));
    }
    let n = p.family.len();
    if n > cap {
        return Err(Error::TooLarge(format!(
            "exhaustive search limited to {} candidates, got {}",
            cap, n
        )));
    }
    if p.family.distinct_points().len() != n {
        return Err(Error::InvalidInstance(
            "candidate family must not repeat points".into(),
        ));
    }
    Ok(())
}

/// An independent set of `k` vertices in `adj` restricted to `mask`, as a
/// bitmask, or `None`. Branch and bound on the lowest live vertex.
fn find_independent_k(adj: &[u64], mask: u64, k: usize) -> Option<u64> {
    fn rec(adj: &[u64], cand: u64, need: usize) -> Option<u64> {
        if need == 0 {
            return Some(0);
        }
        if (cand.count_ones() as usize) < need {
            return None;
        }
        let v = cand.trailing_zeros() as usize;
        if let Some(rest) = rec(adj, cand & !(1 << v) & !adj[v], need - 1) {
            return Some(rest | 1 << v);
        }
        rec(adj, cand & !(1 << v), need)
    }
    rec(adj, mask, k)
}

fn has_independent_k(adj: &[u64], mask: u64, k: usize) -> bool {
    find_independent_k(adj, mask, k).is_some()
}

/// Maximum subset of the family whose diameter graph has independence number
/// below k. Decomposes by candidate diameter value: fixing the diameter t
/// turns the subset-dependent diameter graph into one fixed conflict graph
/// (pairs longer than t) and one fixed equality graph (pairs at t), and the
/// subset tree is pruned against both.
pub fn max_k_diametral_subset<S: Scalar>(p: &SearchProblem<S>) -> Result<SearchResult> {
    validate_family(p, SearchProperty::Diametral, MAX_DIAMETRAL_FAMILY)?;
    let n = p.family.len();
    let k = p.k;
    let rel_tol = if S::EXACT { 0.0 } else { DEFAULT_REL_TOL };

    let mut keys: Vec<Vec<Option<DistanceKey<S>>>> = vec![vec![None; n]; n];
    let mut layer_reps: Vec<DistanceKey<S>> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let key = p
                .norm
                .distance_key(&p.family.points()[i], &p.family.points()[j])?;
            if !layer_reps.iter().any(|r| r.approx_eq(&key, rel_tol)) {
                layer_reps.push(key.clone());
            }
            keys[i][j] = Some(key.clone());
            keys[j][i] = Some(key);
        }
    }
    layer_reps.sort_by(|a, b| b.total_cmp(a));

    // Vacuous floor: below k points there is no k-tuple to check.
    let mut best_size = n.min(k - 1);
    let mut best_subset: Vec<usize> = (0..best_size).collect();
    let mut budget = Budget::new(&p.limits);

    for rep in &layer_reps {
        if best_size == n || budget.exceeded {
            break;
        }
        // conflict: strictly longer than this layer's diameter.
        // eq: realizes it.
        let mut conflict = vec![0u64; n];
        let mut eq = vec![0u64; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let key = keys[i][j].as_ref().unwrap();
                if key.approx_eq(rep, rel_tol) {
                    eq[i] |= 1 << j;
                    eq[j] |= 1 << i;
                } else if key.total_cmp(rep) == std::cmp::Ordering::Greater {
                    conflict[i] |= 1 << j;
                    conflict[j] |= 1 << i;
                }
            }
        }

        // Depth-first over vertices in index order: chosen set so far plus
        // the tail of still-eligible candidates.
        struct Frame {
            idx: usize,
            chosen: u64,
        }
        let mut stack = vec![Frame { idx: 0, chosen: 0 }];
        while let Some(Frame { idx, chosen }) = stack.pop() {
            if !budget.tick() {
                break;
            }
            let size = chosen.count_ones() as usize;
            if size + (n - idx) <= best_size {
                continue;
            }
            if idx == n {
                // Independence was maintained on every insertion.
                best_size = size;
                best_subset = (0..n).filter(|v| chosen >> v & 1 == 1).collect();
                continue;
            }
            // Exclude branch first so the include branch is explored first
            // off the stack; greedy growth reaches good bounds sooner.
            stack.push(Frame {
                idx: idx + 1,
                chosen,
            });
            let with = chosen | 1 << idx;
            if conflict[idx] & chosen == 0 && !has_independent_k(&eq, with, k) {
                stack.push(Frame {
                    idx: idx + 1,
                    chosen: with,
                });
            }
        }
    }

    // Vacuous witnesses (fewer than k points) hold by the quantifier alone
    // and may be too small to even build a diameter graph for.
    if best_size >= k {
        let witness = p.family.subset(&best_subset)?;
        let report = verify::is_k_diametral(&witness, &p.norm, k, rel_tol)?;
        if !report.verdict {
            return Err(Error::Internal(
                "diametral search accepted a subset its verifier rejects".into(),
            ));
        }
    }
    Ok(SearchResult {
        best_size,
        best_subset,
        exhaustive: !budget.exceeded,
        nodes_visited: budget.nodes,
    })
}

/// Maximum subset whose own antipodal graph has independence number below k.
/// The hull changes with the subset, so candidates are re-examined size by
/// size, largest first; the only sound shortcut is that edges of the full
/// family survive restriction (dropping points only frees support
/// directions), which accepts many subsets without touching the LP.
pub fn max_k_antipodal_subset<S: Scalar>(p: &SearchProblem<S>) -> Result<SearchResult> {
    validate_family(p, SearchProperty::Antipodal, MAX_ANTIPODAL_FAMILY)?;
    let exact = p.family.to_exact();
    let n = exact.len();
    let k = p.k;

    let full_edges = antipodal_edges_lp_only(&exact)?;
    let mut full_adj = vec![0u64; n];
    for (i, j) in full_edges {
        full_adj[i] |= 1 << j;
        full_adj[j] |= 1 << i;
    }

    let mut budget = Budget::new(&p.limits);
    let mut accepted: Option<Vec<usize>> = None;
    'sizes: for m in (k..=n).rev() {
        for subset in (0..n).combinations(m) {
            if !budget.tick() {
                break 'sizes;
            }
            if subset_is_k_antipodal(&exact, &full_adj, &subset, k)? {
                accepted = Some(subset);
                break 'sizes;
            }
        }
    }

    let (best_subset, best_size) = match accepted {
        Some(s) => {
            let m = s.len();
            (s, m)
        }
        None => {
            let m = n.min(k - 1);
            ((0..m).collect(), m)
        }
    };
    if best_size >= k {
        let witness = exact.subset(&best_subset)?;
        let report = verify::is_k_antipodal(&witness, k)?;
        if !report.verdict {
            return Err(Error::Internal(
                "antipodal search accepted a subset its verifier rejects".into(),
            ));
        }
    }
    Ok(SearchResult {
        best_size,
        best_subset,
        exhaustive: !budget.exceeded,
        nodes_visited: budget.nodes,
    })
}

/// Decides whether the subset's own antipodal graph has independence number
/// below k without computing the whole edge set. Edges inherited from the
/// full family are sound (dropping points only frees support directions), so
/// only pairs inside candidate independent k-sets of the known graph ever
/// reach the LP; every discovered edge shrinks the candidate pool.
fn subset_is_k_antipodal(
    exact: &PointConfiguration<Rational>,
    full_adj: &[u64],
    subset: &[usize],
    k: usize,
) -> Result<bool> {
    let m = subset.len();
    let mut adj = vec![0u64; m];
    for (a, &va) in subset.iter().enumerate() {
        for (b, &vb) in subset.iter().enumerate().skip(a + 1) {
            if full_adj[va] >> vb & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
    }
    let sub_cfg = exact.subset(subset)?;
    let mut known_non_edge = vec![0u64; m];
    let all = (1u64 << m) - 1;
    'outer: loop {
        let Some(ind) = find_independent_k(&adj, all, k) else {
            return Ok(true);
        };
        let verts: Vec<usize> = (0..m).filter(|v| ind >> v & 1 == 1).collect();
        for (x, &a) in verts.iter().enumerate() {
            for &b in &verts[x + 1..] {
                if known_non_edge[a] >> b & 1 == 1 {
                    continue;
                }
                if separating_direction(&sub_cfg, a, b)?.is_some() {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                    continue 'outer;
                }
                known_non_edge[a] |= 1 << b;
                known_non_edge[b] |= 1 << a;
            }
        }
        // Every pair inside the candidate is a confirmed non-edge, so the
        // candidate is independent in the true graph.
        return Ok(false);
    }
}

/// Outcome of the six-vertex enumeration, with one rejection count per
/// constraint so a surprising class count can be traced.
#[derive(Clone, Debug)]
pub struct GraphEnumeration {
    pub classes: Vec<LabeledGraph>,
    pub total_graphs: u64,
    pub independence_rejected: u64,
    pub pyramid_rejected: u64,
    pub odd_cycle_rejected: u64,
    pub surviving_labeled: u64,
}

impl GraphEnumeration {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "classes": self.classes.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
            "class_count": self.classes.len(),
            "total_graphs": self.total_graphs,
            "independence_rejected": self.independence_rejected,
            "pyramid_rejected": self.pyramid_rejected,
            "odd_cycle_rejected": self.odd_cycle_rejected,
            "surviving_labeled": self.surviving_labeled,
        })
    }
}

/// Enumerates all graphs on six labeled vertices and keeps those that could
/// be the diameter graph of a 3-diametral six-point set in Euclidean
/// 3-space: no independent 3-set, no quadrangle-based pyramid subgraph, and
/// every two odd cycles sharing a vertex. Survivors are reduced up to
/// isomorphism.
pub fn enumerate_candidate_diameter_graphs() -> Result<GraphEnumeration> {
    const N: usize = 6;
    let pairs: Vec<(usize, usize)> = (0..N)
        .flat_map(|i| ((i + 1)..N).map(move |j| (i, j)))
        .collect();
    let pyramid = crate::catalog::pyramid_graph();

    let mut out = GraphEnumeration {
        classes: Vec::new(),
        total_graphs: 1 << pairs.len(),
        independence_rejected: 0,
        pyramid_rejected: 0,
        odd_cycle_rejected: 0,
        surviving_labeled: 0,
    };

    for mask in 0u32..1 << pairs.len() {
        let mut adj = [0u64; N];
        for (b, (i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                adj[*i] |= 1 << j;
                adj[*j] |= 1 << i;
            }
        }
        if has_independent_k(&adj, (1 << N) - 1, 3) {
            out.independence_rejected += 1;
            continue;
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        let g = LabeledGraph::new(N, edges, GraphKind::Abstract, None)?;
        if crate::graph::contains_subgraph(&g, &pyramid)?.is_some() {
            out.pyramid_rejected += 1;
            continue;
        }
        if !crate::graph::odd_cycles_pairwise_intersect(&g)? {
            out.odd_cycle_rejected += 1;
            continue;
        }
        out.surviving_labeled += 1;
        let mut known = false;
        for rep in &out.classes {
            if crate::graph::are_isomorphic(&g, rep)?.is_some() {
                known = true;
                break;
            }
        }
        if !known {
            out.classes.push(g);
        }
    }
    out.classes
        .sort_by_key(|g| (g.edges.len(), g.degree_sequence()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::CatalogMember;
    use crate::construct;
    use crate::point::PointConfiguration;
    use crate::Rational;

    fn diametral_problem<S: Scalar>(
        family: PointConfiguration<S>,
        norm: Norm<S>,
        k: usize,
    ) -> SearchProblem<S> {
        SearchProblem::new(family, norm, k, SearchProperty::Diametral)
    }

    fn antipodal_problem<S: Scalar>(family: PointConfiguration<S>, k: usize) -> SearchProblem<S> {
        SearchProblem::new(family, Norm::Euclidean, k, SearchProperty::Antipodal)
    }

    #[test]
    fn square_corners_are_a_maximum_linf_diametral_set() {
        let family = construct::cube_config(2, 2).unwrap();
        let result = max_k_diametral_subset(&diametral_problem(family, Norm::Linf, 2)).unwrap();
        assert_eq!(result.best_size, 4);
        assert!(result.exhaustive);
    }

    #[test]
    fn nine_gon_three_diametral_maximum_is_four() {
        // The 9-gon's longest chords close a single 9-cycle, and no five
        // vertices of a 9-cycle induce independence number 2 or less; two
        // disjoint long chords are the best that remains.
        let family = construct::regular_polygon(9).unwrap();
        let result =
            max_k_diametral_subset(&diametral_problem(family, Norm::Euclidean, 3)).unwrap();
        assert_eq!(result.best_size, 4);
        assert!(result.exhaustive);
    }

    #[test]
    fn pentagon_family_attains_five_for_k_three() {
        let family = construct::regular_polygon(5).unwrap();
        let result =
            max_k_diametral_subset(&diametral_problem(family, Norm::Euclidean, 3)).unwrap();
        assert_eq!(result.best_size, 5);
        assert!(result.exhaustive);
    }

    #[test]
    fn thirteen_gon_never_exceeds_seven_for_k_four() {
        let family = construct::regular_polygon(13).unwrap();
        let result =
            max_k_diametral_subset(&diametral_problem(family, Norm::Euclidean, 4)).unwrap();
        assert!(result.exhaustive);
        assert!(result.best_size <= 7, "got {}", result.best_size);
        assert_eq!(result.best_size, 6);
    }

    #[test]
    fn vacuous_floor_when_nothing_larger_works() {
        // Three collinear rational points, k=2: any two points with unequal
        // gaps leave singletons as the only nonvacuous sets; a diameter pair
        // works, so the best is that pair.
        let family = PointConfiguration::<Rational>::from_ints(1, &[&[0], &[1], &[5]]);
        let result =
            max_k_diametral_subset(&diametral_problem(family, Norm::Euclidean, 2)).unwrap();
        assert_eq!(result.best_size, 2);
        assert!(result.exhaustive);
    }

    #[test]
    fn node_budget_reports_nonexhaustive() {
        let family = construct::regular_polygon(12).unwrap();
        let mut p = diametral_problem(family, Norm::Euclidean, 3);
        p.limits.max_nodes = 5;
        let result = max_k_diametral_subset(&p).unwrap();
        assert!(!result.exhaustive);
        assert!(result.best_size >= 2);
    }

    #[test]
    fn rejects_duplicated_family_points() {
        let family = PointConfiguration::<Rational>::from_ints(1, &[&[0], &[0], &[1]]);
        assert!(matches!(
            max_k_diametral_subset(&diametral_problem(family, Norm::Euclidean, 2)),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn property_mismatch_is_refused() {
        let family = construct::cube_config(2, 2).unwrap();
        let p = antipodal_problem(family, 2);
        assert!(matches!(
            max_k_diametral_subset(&p),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn hexagon_two_antipodal_maximum_is_a_parallelogram() {
        let family = construct::sided_polygon(&[2; 6]).unwrap();
        let result = max_k_antipodal_subset(&antipodal_problem(family, 2)).unwrap();
        assert_eq!(result.best_size, 4);
        assert!(result.exhaustive);
    }

    #[test]
    fn hexagon_three_antipodal_takes_all_six() {
        let family = construct::sided_polygon(&[2; 6]).unwrap();
        let result = max_k_antipodal_subset(&antipodal_problem(family, 3)).unwrap();
        assert_eq!(result.best_size, 6);
        assert!(result.exhaustive);
    }

    #[test]
    fn cube_corners_three_antipodal_take_all_eight() {
        let family = construct::cube_config(3, 2).unwrap();
        let result = max_k_antipodal_subset(&antipodal_problem(family, 3)).unwrap();
        assert_eq!(result.best_size, 8);
        assert!(result.exhaustive);
    }

    #[test]
    fn twelve_gon_antipodal_maxima_match_the_planar_bound() {
        let family = construct::sided_polygon(&[2; 12]).unwrap();
        for (k, want) in [(2usize, 4usize), (3, 6)] {
            let result = max_k_antipodal_subset(&antipodal_problem(family.clone(), k)).unwrap();
            assert_eq!(result.best_size, want, "k={}", k);
            assert!(result.exhaustive);
        }
    }

    #[test]
    fn enumeration_reproduces_the_catalog() {
        let out = enumerate_candidate_diameter_graphs().unwrap();
        assert_eq!(
            out.classes.len(),
            8,
            "independence {} pyramid {} odd-cycle {} survivors {}",
            out.independence_rejected,
            out.pyramid_rejected,
            out.odd_cycle_rejected,
            out.surviving_labeled
        );
        for member in CatalogMember::ALL {
            let target = member.graph();
            let hit = out
                .classes
                .iter()
                .any(|g| crate::graph::are_isomorphic(g, &target).unwrap().is_some());
            assert!(hit, "missing catalog member {}", member.name());
        }
        let without_k4 = out
            .classes
            .iter()
            .filter(|g| {
                crate::graph::contains_subgraph(
                    g,
                    &LabeledGraph::new(
                        4,
                        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
                        GraphKind::Abstract,
                        None,
                    )
                    .unwrap(),
                )
                .unwrap()
                .is_none()
            })
            .count();
        assert_eq!(without_k4, 3);
    }
}
