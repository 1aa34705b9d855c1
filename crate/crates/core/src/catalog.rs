//! The catalog of six-vertex diameter-graph candidates.
//!
//! These are the eight graphs, up to isomorphism, on six vertices that pass
//! all three structural filters a Euclidean 3-space diameter graph of a
//! 3-diametral set must pass: independence number at most two, no pyramid
//! subgraph, and pairwise intersecting odd cycles. The enumeration in the
//! search module re-derives the list from scratch; this module pins it.
//!
//! Naming: members 1-a, 1-b, 1-c are the 5-wheel with zero, one, or two
//! spokes removed (hub is vertex 5); members 2-a through 2-e grow from a
//! 4-clique on {0,1,2,3} plus the edge (4,5).

use crate::error::Result;
use crate::graph::{GraphKind, LabeledGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogMember {
    M1a,
    M1b,
    M1c,
    M2a,
    M2b,
    M2c,
    M2d,
    M2e,
}

impl CatalogMember {
    pub const ALL: [CatalogMember; 8] = [
        CatalogMember::M1a,
        CatalogMember::M1b,
        CatalogMember::M1c,
        CatalogMember::M2a,
        CatalogMember::M2b,
        CatalogMember::M2c,
        CatalogMember::M2d,
        CatalogMember::M2e,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CatalogMember::M1a => "1-a",
            CatalogMember::M1b => "1-b",
            CatalogMember::M1c => "1-c",
            CatalogMember::M2a => "2-a",
            CatalogMember::M2b => "2-b",
            CatalogMember::M2c => "2-c",
            CatalogMember::M2d => "2-d",
            CatalogMember::M2e => "2-e",
        }
    }

    pub fn from_name(s: &str) -> Option<CatalogMember> {
        CatalogMember::ALL.iter().copied().find(|m| m.name() == s)
    }

    pub fn graph(&self) -> LabeledGraph {
        let edges: Vec<(usize, usize)> = match self {
            CatalogMember::M1a => wheel_edges(5),
            CatalogMember::M1b => wheel_edges(5)
                .into_iter()
                .filter(|e| *e != (0, 5))
                .collect(),
            CatalogMember::M1c => wheel_edges(5)
                .into_iter()
                .filter(|e| *e != (0, 5) && *e != (1, 5))
                .collect(),
            CatalogMember::M2a => clique_plus(&[]),
            CatalogMember::M2b => clique_plus(&[(0, 4)]),
            CatalogMember::M2c => clique_plus(&[(0, 4), (1, 4)]),
            CatalogMember::M2d => clique_plus(&[(0, 4), (1, 5)]),
            CatalogMember::M2e => clique_plus(&[(0, 4), (1, 4), (2, 5)]),
        };
        LabeledGraph::new(6, edges, GraphKind::Abstract, None)
            .expect("catalog graphs are well formed")
    }

    /// Sorted degree sequence, pinned for quick sanity checks.
    pub fn degree_sequence(&self) -> [usize; 6] {
        match self {
            CatalogMember::M1a => [3, 3, 3, 3, 3, 5],
            CatalogMember::M1b => [2, 3, 3, 3, 3, 4],
            CatalogMember::M1c => [2, 2, 3, 3, 3, 3],
            CatalogMember::M2a => [1, 1, 3, 3, 3, 3],
            CatalogMember::M2b => [1, 2, 3, 3, 3, 4],
            CatalogMember::M2c => [1, 3, 3, 3, 4, 4],
            CatalogMember::M2d => [2, 2, 3, 3, 4, 4],
            CatalogMember::M2e => [2, 3, 3, 4, 4, 4],
        }
    }
}

fn wheel_edges(m: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    edges.extend((0..m).map(|i| (i, m)));
    edges
}

/// 4-clique on {0,1,2,3} plus the edge (4,5) plus `extra`.
fn clique_plus(extra: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| ((i + 1)..4).map(move |j| (i, j)))
        .collect();
    edges.push((4, 5));
    edges.extend_from_slice(extra);
    edges
}

/// Wheel on `m + 1` vertices: rim cycle 0..m plus hub `m` joined to all.
pub fn wheel_graph(m: usize) -> Result<LabeledGraph> {
    if m < 3 {
        return Err(crate::error::Error::InvalidSpec(
            "wheel rim needs at least three vertices".into(),
        ));
    }
    LabeledGraph::new(m + 1, wheel_edges(m), GraphKind::Abstract, None)
}

/// The pyramid: 4-cycle 0-1-2-3 with apex 4 joined to all four. Its absence
/// as a subgraph is one of the three catalog filters.
pub fn pyramid_graph() -> LabeledGraph {
    wheel_graph(4).expect("pyramid is a valid wheel")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        are_isomorphic, contains_subgraph, find_independent_set, odd_cycles_pairwise_intersect,
    };

    #[test]
    fn members_have_pinned_degree_sequences() {
        for m in CatalogMember::ALL {
            assert_eq!(
                m.graph().degree_sequence(),
                m.degree_sequence().to_vec(),
                "degree sequence mismatch for {}",
                m.name()
            );
        }
    }

    #[test]
    fn members_are_pairwise_non_isomorphic() {
        for (i, a) in CatalogMember::ALL.iter().enumerate() {
            for b in &CatalogMember::ALL[(i + 1)..] {
                assert!(
                    are_isomorphic(&a.graph(), &b.graph()).unwrap().is_none(),
                    "{} and {} should differ",
                    a.name(),
                    b.name()
                );
            }
        }
    }

    #[test]
    fn members_pass_all_three_filters() {
        let pyramid = pyramid_graph();
        for m in CatalogMember::ALL {
            let g = m.graph();
            assert!(
                find_independent_set(&g).len() <= 2,
                "{} has three pairwise non-adjacent vertices",
                m.name()
            );
            assert!(
                contains_subgraph(&g, &pyramid).unwrap().is_none(),
                "{} contains a pyramid",
                m.name()
            );
            assert!(
                odd_cycles_pairwise_intersect(&g).unwrap(),
                "{} has disjoint odd cycles",
                m.name()
            );
        }
    }

    #[test]
    fn name_round_trip() {
        for m in CatalogMember::ALL {
            assert_eq!(CatalogMember::from_name(m.name()), Some(m));
        }
        assert_eq!(CatalogMember::from_name("3-z"), None);
    }

    #[test]
    fn wheel_and_pyramid_shapes() {
        let p = pyramid_graph();
        assert_eq!(p.n, 5);
        assert_eq!(p.edges.len(), 8);
        assert_eq!(p.degree(4), 4);

        let w = wheel_graph(5).unwrap();
        assert_eq!(w.n, 6);
        assert_eq!(w.edges.len(), 10);
        assert!(wheel_graph(2).is_err());
    }
}
