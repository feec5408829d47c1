//! Generators for the standard complexes and graphs: complete complexes,
//! Grünbaum joins, cyclic 4-polytope boundaries, double cones, staircase
//! complexes, apex graphs and random maximal planar graphs.
//!
//! All generators are deterministic; random ones take an explicit seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::graph::{is_planar_bool, Graph, PatternGraph};

/// All `(d+1)`-subsets of `0..m` as facets.
pub fn complete_complex(d: usize, m: usize) -> Result<SimplicialComplex> {
    if m < d + 1 {
        return Err(Error::InvalidParams(format!("complete {d}-complex needs at least {} vertices, got {m}", d + 1)));
    }
    let full = Simplex::new((0..m as VertexId).collect())?;
    SimplicialComplex::closure(full.subsets_of_size(d + 1))
}

/// `K^{d_1}_{2d_1+3} * ... * K^{d_p}_{2d_p+3}`. Later factors get labels past
/// the earlier ones. The result has dimension `Σd_i + p - 1`.
pub fn grunbaum_join(dims: &[usize]) -> Result<SimplicialComplex> {
    let (&first, rest) = dims.split_first().ok_or_else(|| Error::InvalidParams("at least one factor is needed".into()))?;
    let mut k = complete_complex(first, 2 * first + 3)?;
    for &d in rest {
        k = k.join(&complete_complex(d, 2 * d + 3)?).0;
    }
    Ok(k)
}

/// Facets of the boundary of the cyclic 4-polytope on vertices `0..n`: the
/// 4-subsets satisfying Gale's evenness condition.
pub fn cyclic_polytope_facets(n: usize) -> Result<Vec<Simplex>> {
    if n < 6 {
        return Err(Error::InvalidParams(format!("cyclic 4-polytope boundary needs n >= 6, got {n}")));
    }
    let n = n as VertexId;
    let mut facets = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s = [a, b, c, d];
                    if gale_even(&s, n) {
                        facets.push(Simplex::new(s.to_vec())?);
                    }
                }
            }
        }
    }
    Ok(facets)
}

/// Every two non-members of `0..n` are separated by an even number of
/// members.
fn gale_even(s: &[VertexId], n: VertexId) -> bool {
    let outside: Vec<VertexId> = (0..n).filter(|v| !s.contains(v)).collect();
    outside.windows(2).all(|w| s.iter().filter(|&&x| w[0] < x && x < w[1]).count() % 2 == 0)
}

pub fn cyclic_polytope_boundary(n: usize) -> Result<SimplicialComplex> {
    SimplicialComplex::closure(cyclic_polytope_facets(n)?)
}

/// The boundary with facet number `index` (in lexicographic order) removed.
/// Its remaining faces are unchanged.
pub fn cyclic_polytope_drop_facet(n: usize, index: usize) -> Result<SimplicialComplex> {
    let mut facets = cyclic_polytope_facets(n)?;
    if index >= facets.len() {
        return Err(Error::InvalidParams(format!("facet index {index} out of range 0..{}", facets.len())));
    }
    facets.remove(index);
    SimplicialComplex::closure(facets)
}

/// Cones `g` from two new vertices: labels `max + 1` and `max + 2`. Returns
/// the complex and the two apexes.
pub fn double_cone(g: &Graph) -> Result<(SimplicialComplex, [VertexId; 2])> {
    let top = g.labels().last().map_or(0, |&m| m + 1);
    let apexes = [top, top + 1];
    let mut simplices = Vec::new();
    for &apex in &apexes {
        simplices.push(Simplex::vertex(apex));
        for &v in g.labels() {
            simplices.push(Simplex::new(vec![v, apex])?);
        }
        for (a, b) in g.edge_labels() {
            simplices.push(Simplex::new(vec![a, b, apex])?);
        }
    }
    Ok((SimplicialComplex::from_simplices(simplices), apexes))
}

/// The join of a path on `a` vertices with a path on `b` vertices: the
/// triangulation of the convex hull of points on two skew lines. Vertices
/// `0..a` lie on the first line and `a..a+b` on the second; the
/// `(a-1)(b-1)` tetrahedra are `{u_i, u_{i+1}, w_j, w_{j+1}}`.
pub fn staircase_complex(a: usize, b: usize) -> Result<SimplicialComplex> {
    if a < 2 || b < 2 {
        return Err(Error::InvalidParams(format!("staircase needs a, b >= 2, got ({a}, {b})")));
    }
    let (a, b) = (a as VertexId, b as VertexId);
    let mut facets = Vec::new();
    for i in 0..a - 1 {
        for j in 0..b - 1 {
            facets.push(Simplex::new(vec![i, i + 1, a + j, a + j + 1])?);
        }
    }
    SimplicialComplex::closure(facets)
}

/// `g` plus one vertex adjacent to all others. `g` must be planar.
pub fn apex_graph(g: &Graph) -> Result<Graph> {
    if !is_planar_bool(g) {
        return Err(Error::Precondition("apex graphs are built over planar graphs".into()));
    }
    Ok(g.add_apex().0)
}

/// The seven graphs obtained from K6 by ΔY and YΔ exchanges.
pub fn petersen_family() -> Vec<(PatternGraph, Graph)> {
    PatternGraph::PETERSEN_FAMILY.iter().map(|&p| (p, p.graph())).collect()
}

/// A random stacked triangulation of the sphere on `0..n` (`n >= 3`): each
/// new vertex is placed in a uniformly chosen face. It is maximal planar, so
/// it has `3n - 6` edges.
pub fn maximal_planar_graph(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("maximal planar graphs need n >= 3, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 2]];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for v in 3..n {
        let i = rng.random_range(0..faces.len());
        let [x, y, z] = faces.swap_remove(i);
        edges.extend([(x, v), (y, v), (z, v)]);
        faces.extend([[x, y, v], [y, z, v], [x, z, v]]);
    }
    Ok(Graph::from_index_edges(n, &edges))
}

/// A random planar graph: a maximal planar graph with each edge kept with
/// probability `keep`.
pub fn random_planar_graph(n: usize, keep: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&keep) {
        return Err(Error::InvalidParams(format!("probability {keep} outside [0, 1]")));
    }
    let full = maximal_planar_graph(n, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let edges: Vec<(usize, usize)> = full.edges().into_iter().filter(|_| rng.random_bool(keep)).collect();
    Ok(Graph::from_index_edges(n, &edges))
}

/// The `rows × cols` grid graph.
pub fn grid_graph(rows: usize, cols: usize) -> Graph {
    let at = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((at(r, c), at(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((at(r, c), at(r + 1, c)));
            }
        }
    }
    Graph::from_index_edges(rows * cols, &edges)
}

/// A named construction with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum ConstructionSpec {
    Complete { d: usize, m: usize },
    Grunbaum { dims: Vec<usize> },
    CyclicPolytope { n: usize, drop_facet: Option<usize> },
    DoubleCone { base: Graph },
    Staircase { a: usize, b: usize },
    /// Apex over a random maximal planar graph.
    Apex { n: usize, seed: u64 },
    MaximalPlanar { n: usize, seed: u64 },
    Pattern(PatternGraph),
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<SimplicialComplex> {
        match self {
            ConstructionSpec::Complete { d, m } => complete_complex(*d, *m),
            ConstructionSpec::Grunbaum { dims } => grunbaum_join(dims),
            ConstructionSpec::CyclicPolytope { n, drop_facet: None } => cyclic_polytope_boundary(*n),
            ConstructionSpec::CyclicPolytope { n, drop_facet: Some(i) } => cyclic_polytope_drop_facet(*n, *i),
            ConstructionSpec::DoubleCone { base } => double_cone(base).map(|(k, _)| k),
            ConstructionSpec::Staircase { a, b } => staircase_complex(*a, *b),
            ConstructionSpec::Apex { n, seed } => Ok(apex_graph(&maximal_planar_graph(*n, *seed)?)?.to_complex()),
            ConstructionSpec::MaximalPlanar { n, seed } => Ok(maximal_planar_graph(*n, *seed)?.to_complex()),
            ConstructionSpec::Pattern(p) => Ok(p.graph().to_complex()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_planar;

    #[test]
    fn complete_complexes() {
        assert_eq!(complete_complex(1, 5).unwrap().f_vector().0, vec![5, 10]);
        assert_eq!(complete_complex(0, 3).unwrap().f_vector().0, vec![3]);
        assert_eq!(complete_complex(2, 5).unwrap().f_vector().0, vec![5, 10, 10]);
        assert!(complete_complex(3, 3).is_err());
    }

    #[test]
    fn grunbaum_dimensions() {
        for dims in [vec![1, 0], vec![0, 0, 0], vec![1, 0, 0], vec![2], vec![1, 1]] {
            let k = grunbaum_join(&dims).unwrap();
            assert_eq!(k.dim(), Some(dims.iter().sum::<usize>() + dims.len() - 1));
        }
        assert_eq!(grunbaum_join(&[1, 0]).unwrap().f_vector().0, vec![8, 25, 30]);
        assert!(grunbaum_join(&[]).is_err());
    }

    #[test]
    fn cyclic_polytope_counts() {
        for n in 6..=12 {
            let k = cyclic_polytope_boundary(n).unwrap();
            let f = k.f_vector();
            assert_eq!(f.get(3) as usize, n * (n - 3) / 2);
            assert_eq!(f.get(2) as usize, n * (n - 3));
            let dropped = cyclic_polytope_drop_facet(n, 0).unwrap();
            assert_eq!(dropped.f_vector().get(2), f.get(2));
            assert_eq!(dropped.f_vector().get(3) + 1, f.get(3));
        }
        assert!(cyclic_polytope_boundary(5).is_err());
    }

    #[test]
    fn cyclic_vertex_links_are_planar() {
        let k = cyclic_polytope_boundary(10).unwrap();
        for &v in k.vertices() {
            assert!(is_planar(&Graph::one_skeleton(&k.link(v).unwrap())).planar);
        }
    }

    #[test]
    fn double_cone_links() {
        let g = PatternGraph::K5.graph();
        let (k, [p, q]) = double_cone(&g).unwrap();
        assert_eq!(k.f_vector().get(2), 20);
        for apex in [p, q] {
            assert_eq!(Graph::from_complex(&k.link(apex).unwrap()).unwrap(), g);
        }
    }

    #[test]
    fn staircase_counts() {
        assert_eq!(staircase_complex(2, 2).unwrap().facets().len(), 1);
        let k = staircase_complex(6, 6).unwrap();
        assert_eq!(k.f_vector().0, vec![12, 10 + 36, 60, 25]);
        assert!(staircase_complex(1, 4).is_err());
    }

    #[test]
    fn planar_generators() {
        for n in [3, 4, 10, 50] {
            let g = maximal_planar_graph(n, n as u64).unwrap();
            assert_eq!(g.size(), 3 * n - 6);
            assert!(is_planar_bool(&g));
        }
        let a = apex_graph(&maximal_planar_graph(10, 1).unwrap()).unwrap();
        assert_eq!((a.order(), a.size()), (11, 34));
        assert!(apex_graph(&PatternGraph::K5.graph()).is_err());
        assert_eq!(grid_graph(3, 4).size(), 17);
        assert!(random_planar_graph(12, 0.5, 3).unwrap().size() <= 30);
    }

    #[test]
    fn family_has_k6_and_petersen() {
        let fam = petersen_family();
        assert_eq!(fam.len(), 7);
        assert!(fam.iter().all(|(_, g)| g.size() == 15));
        assert!(fam.iter().any(|(p, _)| *p == PatternGraph::K6));
        assert!(fam.iter().any(|(p, _)| *p == PatternGraph::Petersen));
    }
}
