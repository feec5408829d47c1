//! The fixed pattern graphs: K5, K3,3 and the Petersen family.
//!
//! The Petersen family is the orbit of K6 under ΔY and YΔ exchanges. Every
//! member has 15 edges; the eight-vertex members are Γ8 and K4,4 minus one
//! edge.

use serde::{Serialize, Serializer};

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternGraph {
    K5,
    K33,
    K6,
    /// K6 after one ΔY exchange.
    Gamma7,
    K331,
    /// The eight-vertex member with three degree-3 vertices.
    Gamma8,
    K44MinusEdge,
    /// The nine-vertex member, one YΔ step away from the Petersen graph.
    Gamma9,
    Petersen,
}

const K5_EDGES: &[(u8, u8)] = &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

const K33_EDGES: &[(u8, u8)] = &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)];

const K6_EDGES: &[(u8, u8)] = &[
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (1, 3), (1, 4), (1, 5),
    (2, 3), (2, 4), (2, 5),
    (3, 4), (3, 5),
    (4, 5),
];

const GAMMA7_EDGES: &[(u8, u8)] = &[
    (0, 3), (0, 4), (0, 5), (0, 6),
    (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 3), (2, 4), (2, 5), (2, 6),
    (3, 4), (3, 5), (4, 5),
];

const K331_EDGES: &[(u8, u8)] = &[
    (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
    (0, 6), (1, 6), (2, 6), (3, 6), (4, 6), (5, 6),
];

const GAMMA8_EDGES: &[(u8, u8)] = &[
    (0, 5), (0, 6), (0, 7),
    (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 3), (2, 4), (2, 5), (2, 6),
    (3, 5), (3, 7), (4, 5), (4, 7),
];

const K44_MINUS_EDGE_EDGES: &[(u8, u8)] = &[
    (0, 5), (0, 6), (0, 7),
    (1, 4), (1, 5), (1, 6), (1, 7),
    (2, 4), (2, 5), (2, 6), (2, 7),
    (3, 4), (3, 5), (3, 6), (3, 7),
];

const GAMMA9_EDGES: &[(u8, u8)] = &[
    (0, 5), (0, 6), (0, 7),
    (1, 4), (1, 6), (1, 8),
    (2, 3), (2, 4), (2, 5), (2, 6),
    (3, 7), (3, 8),
    (4, 5), (4, 7),
    (5, 8),
];

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
const PETERSEN_EDGES: &[(u8, u8)] = &[
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
];

impl PatternGraph {
    pub const ALL: [PatternGraph; 9] = [
        PatternGraph::K5,
        PatternGraph::K33,
        PatternGraph::K6,
        PatternGraph::Gamma7,
        PatternGraph::K331,
        PatternGraph::Gamma8,
        PatternGraph::K44MinusEdge,
        PatternGraph::Gamma9,
        PatternGraph::Petersen,
    ];

    pub const PETERSEN_FAMILY: [PatternGraph; 7] = [
        PatternGraph::K6,
        PatternGraph::Gamma7,
        PatternGraph::K331,
        PatternGraph::Gamma8,
        PatternGraph::K44MinusEdge,
        PatternGraph::Gamma9,
        PatternGraph::Petersen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternGraph::K5 => "K5",
            PatternGraph::K33 => "K3,3",
            PatternGraph::K6 => "K6",
            PatternGraph::Gamma7 => "Gamma7",
            PatternGraph::K331 => "K3,3,1",
            PatternGraph::Gamma8 => "Gamma8",
            PatternGraph::K44MinusEdge => "K4,4-e",
            PatternGraph::Gamma9 => "Gamma9",
            PatternGraph::Petersen => "Petersen",
        }
    }

    /// Accepts the canonical name case-insensitively, with or without commas.
    pub fn from_name(name: &str) -> Option<Self> {
        let key: String = name.chars().filter(|c| *c != ',' && *c != ' ').collect::<String>().to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|p| p.name().chars().filter(|c| *c != ',').collect::<String>().to_ascii_lowercase() == key)
    }

    pub fn order(self) -> usize {
        match self {
            PatternGraph::K5 => 5,
            PatternGraph::K33 | PatternGraph::K6 => 6,
            PatternGraph::Gamma7 | PatternGraph::K331 => 7,
            PatternGraph::Gamma8 | PatternGraph::K44MinusEdge => 8,
            PatternGraph::Gamma9 => 9,
            PatternGraph::Petersen => 10,
        }
    }

    pub fn edges(self) -> &'static [(u8, u8)] {
        match self {
            PatternGraph::K5 => K5_EDGES,
            PatternGraph::K33 => K33_EDGES,
            PatternGraph::K6 => K6_EDGES,
            PatternGraph::Gamma7 => GAMMA7_EDGES,
            PatternGraph::K331 => K331_EDGES,
            PatternGraph::Gamma8 => GAMMA8_EDGES,
            PatternGraph::K44MinusEdge => K44_MINUS_EDGE_EDGES,
            PatternGraph::Gamma9 => GAMMA9_EDGES,
            PatternGraph::Petersen => PETERSEN_EDGES,
        }
    }

    pub fn graph(self) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges().iter().map(|&(a, b)| (a as usize, b as usize)).collect();
        Graph::from_index_edges(self.order(), &edges)
    }

    pub fn is_petersen_family(self) -> bool {
        !matches!(self, PatternGraph::K5 | PatternGraph::K33)
    }

    /// Groups of interchangeable pattern vertices used for symmetry breaking
    /// in the subdivision search, plus whether the first two groups may be
    /// swapped wholesale.
    pub(crate) fn symmetry(self) -> (Vec<Vec<usize>>, bool) {
        match self {
            PatternGraph::K5 => (vec![(0..5).collect()], false),
            PatternGraph::K6 => (vec![(0..6).collect()], false),
            PatternGraph::K33 => (vec![vec![0, 1, 2], vec![3, 4, 5]], true),
            PatternGraph::K331 => (vec![vec![0, 1, 2], vec![3, 4, 5]], true),
            _ => (Vec::new(), false),
        }
    }
}

impl std::fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for PatternGraph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// The graphs reachable from `g` by one ΔY or YΔ exchange. YΔ is only
/// applied where it keeps the graph simple.
pub fn delta_wye_neighbours(g: &Graph) -> Vec<Graph> {
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b).iter().filter(|&&c| c > b) {
                if !g.has_edge(a, c) {
                    continue;
                }
                let mut edges: Vec<(usize, usize)> = g
                    .edges()
                    .into_iter()
                    .filter(|e| ![(a, b), (b, c), (a, c)].contains(e))
                    .collect();
                edges.extend([(a, n), (b, n), (c, n)]);
                out.push(Graph::from_index_edges(n + 1, &edges));
            }
        }
    }
    for v in 0..n {
        let nb = g.neighbors(v);
        if nb.len() != 3 {
            continue;
        }
        let (x, y, z) = (nb[0], nb[1], nb[2]);
        if g.has_edge(x, y) || g.has_edge(y, z) || g.has_edge(x, z) {
            continue;
        }
        let shift = |i: usize| if i > v { i - 1 } else { i };
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .filter(|&(i, j)| i != v && j != v)
            .map(|(i, j)| (shift(i), shift(j)))
            .collect();
        edges.extend([(shift(x), shift(y)), (shift(y), shift(z)), (shift(x), shift(z))]);
        out.push(Graph::from_index_edges(n - 1, &edges));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn orders_and_sizes() {
        for p in PatternGraph::ALL {
            let g = p.graph();
            assert_eq!(g.order(), p.order(), "{p}");
            assert_eq!(g.size(), p.edges().len(), "{p}");
            assert!((0..g.order()).all(|i| g.degree(i) >= 3), "{p}");
        }
        for p in PatternGraph::PETERSEN_FAMILY {
            assert_eq!(p.graph().size(), 15, "{p}");
        }
    }

    #[test]
    fn named_members_match_definitions() {
        let petersen = PatternGraph::Petersen.graph();
        assert!((0..10).all(|i| petersen.degree(i) == 3));
        let k44 = PatternGraph::K44MinusEdge.graph();
        let mut full: Vec<(usize, usize)> = (0..4).flat_map(|i| (4..8).map(move |j| (i, j))).collect();
        full.retain(|&e| e != (0, 4));
        assert_eq!(k44, Graph::from_index_edges(8, &full));
        assert_eq!(PatternGraph::K6.graph(), Graph::complete(6));
    }

    #[test]
    fn family_is_delta_wye_orbit_of_k6() {
        let mut orbit = vec![Graph::complete(6)];
        let mut frontier = orbit.clone();
        while let Some(g) = frontier.pop() {
            for h in delta_wye_neighbours(&g) {
                if !orbit.iter().any(|o| is_isomorphic(o, &h)) {
                    orbit.push(h.clone());
                    frontier.push(h);
                }
            }
        }
        assert_eq!(orbit.len(), 7);
        for p in PatternGraph::PETERSEN_FAMILY {
            assert!(orbit.iter().any(|o| is_isomorphic(o, &p.graph())), "{p} not in orbit");
        }
        for (i, a) in PatternGraph::PETERSEN_FAMILY.iter().enumerate() {
            for b in &PatternGraph::PETERSEN_FAMILY[i + 1..] {
                assert!(!is_isomorphic(&a.graph(), &b.graph()), "{a} ~ {b}");
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for p in PatternGraph::ALL {
            assert_eq!(PatternGraph::from_name(p.name()), Some(p));
        }
        assert_eq!(PatternGraph::from_name("k33"), Some(PatternGraph::K33));
        assert_eq!(PatternGraph::from_name("nope"), None);
    }
}
