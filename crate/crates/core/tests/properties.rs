use proptest::prelude::*;
use trilink::constructions::{double_cone, grunbaum_join};
use trilink::graph::{has_subdivision, is_planar};
use trilink::linking::{linking_number_auto, SegmentChain};
use trilink::scan::triple_link_intersection;
use trilink::{scan, Budget, Error, Graph, PatternGraph, Point3, ScanMode, ScanOptions, SearchOptions, SearchOutcome, Simplex, SimplicialComplex, Verdict};

fn complex(facets: &[Vec<u32>]) -> SimplicialComplex {
    SimplicialComplex::closure(facets.iter().map(|f| Simplex::new(f.clone()).unwrap())).unwrap()
}

/// Random 2-complexes: triangles on up to `n` vertices.
fn two_complex(n: u32) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::btree_set(prop::collection::btree_set(0..n, 3), 1..24)
        .prop_map(|tris| complex(&tris.into_iter().map(|t| t.into_iter().collect()).collect::<Vec<_>>()))
}

fn graph(n: usize) -> impl Strategy<Value = Graph> {
    prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let edges: Vec<_> = pairs.into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
        Graph::from_index_edges(n, &edges)
    })
}

fn opts() -> ScanOptions {
    ScanOptions { budget: Budget::unlimited(), parallel: false }
}

fn polygon(pts: &[(i64, i64, i64)]) -> SegmentChain {
    try_polygon(pts).unwrap()
}

/// `None` when two consecutive points coincide.
fn try_polygon(pts: &[(i64, i64, i64)]) -> Option<SegmentChain> {
    let n = pts.len();
    let p = |i: usize| Point3::from_ints(pts[i].0, pts[i].1, pts[i].2);
    SegmentChain::from_terms((0..n).map(|i| (1, [p(i), p((i + 1) % n)]))).ok()
}

fn points(len: std::ops::Range<usize>, range: std::ops::Range<i64>) -> impl Strategy<Value = Vec<(i64, i64, i64)>> {
    prop::collection::vec((range.clone(), range.clone(), range), len)
}

/// Linking number, or `None` when the curves touch or are not simple
/// polygons in general position.
fn lk(a: &SegmentChain, b: &SegmentChain) -> Option<i64> {
    match linking_number_auto(a, b) {
        Ok(r) => Some(r.linking_number),
        Err(Error::Precondition(_) | Error::Degenerate(_) | Error::NotACycle(_)) => None,
        Err(e) => panic!("unexpected error {e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scan_verdict_survives_relabeling(k in two_complex(8), perm in Just((0u32..8).collect::<Vec<_>>()).prop_shuffle()) {
        let relabeled = k.relabel(|v| perm[v as usize] + 100);
        for mode in [ScanMode::Embed2d, ScanMode::Linkless, ScanMode::Embed3] {
            if k.dim() != Some(2) {
                continue;
            }
            let a = scan(&k, mode, &opts()).unwrap();
            let b = scan(&relabeled, mode, &opts()).unwrap();
            prop_assert_eq!(a.verdict, b.verdict);
            prop_assert_eq!(a.terminal_pattern, b.terminal_pattern);
        }
    }

    #[test]
    fn double_cones_pass(g in (3usize..9).prop_flat_map(graph)) {
        prop_assume!(g.size() > 0);
        let (k, _) = double_cone(&g).unwrap();
        prop_assert_eq!(scan(&k, ScanMode::Embed2d, &opts()).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn adding_faces_keeps_an_obstruction(extra in prop::collection::vec(prop::collection::btree_set(0u32..12, 3), 0..12)) {
        let base = grunbaum_join(&[1, 0]).unwrap();
        let k = base.with_simplices(extra.into_iter().map(|t| Simplex::new(t.into_iter().collect()).unwrap()));
        let report = scan(&k, ScanMode::Embed2d, &opts()).unwrap();
        prop_assert_eq!(report.verdict, Verdict::Obstruction);
        trilink::scan::replay(&k, &report).unwrap();
    }

    #[test]
    fn passing_scans_have_sparse_triple_intersections(k in two_complex(9)) {
        prop_assume!(k.dim() == Some(2));
        if scan(&k, ScanMode::Embed2d, &opts()).unwrap().verdict == Verdict::Pass {
            let vs: Vec<u32> = k.vertices().iter().copied().collect();
            for (i, &u) in vs.iter().enumerate() {
                for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                    for &w in &vs[j + 1..] {
                        let l = triple_link_intersection(&k, u, v, w).unwrap();
                        let n = l.num_vertices() as i64;
                        let e = l.faces_of_dim(1).len() as i64;
                        prop_assert!(n < 3 || e <= 3 * n - 6, "triple {:?}: {} edges on {} vertices", (u, v, w), e, n);
                    }
                }
            }
        }
    }

    #[test]
    fn planarity_matches_kuratowski_search(g in (5usize..=9).prop_flat_map(graph)) {
        let search = SearchOptions::exhaustive(Budget::unlimited());
        let k5 = has_subdivision(&g, PatternGraph::K5, &search);
        let k33 = has_subdivision(&g, PatternGraph::K33, &search);
        let decided = |o: &SearchOutcome| !matches!(o, SearchOutcome::Inconclusive { .. });
        prop_assert!(decided(&k5));
        prop_assert!(decided(&k33));
        let p = is_planar(&g);
        prop_assert_eq!(p.planar, !(k5.found() || k33.found()));
        if let Some(w) = p.witness {
            prop_assert!(w.validate(&g).is_ok());
        }
    }

    #[test]
    fn linking_is_symmetric_and_reverses_with_orientation(a in points(3..6, -5..6), b in points(3..6, -5..6)) {
        let (Some(za), Some(zb)) = (try_polygon(&a), try_polygon(&b)) else { return Ok(()) };
        if let (Some(ab), Some(ba)) = (lk(&za, &zb), lk(&zb, &za)) {
            prop_assert_eq!(ab, ba);
            prop_assert_eq!(lk(&za.negate(), &zb), Some(-ab));
        }
    }

    #[test]
    fn linking_is_additive(a in points(3..5, -4..5), b in points(3..5, -4..5), c in points(3..5, -4..5)) {
        let (Some(za), Some(zb), Some(zc)) = (try_polygon(&a), try_polygon(&b), try_polygon(&c)) else { return Ok(()) };
        if let (Some(ab), Some(ac), Some(sum)) = (lk(&za, &zb), lk(&za, &zc), lk(&za, &zb.plus(&zc))) {
            prop_assert_eq!(sum, ab + ac);
        }
    }
}

#[test]
fn linking_scales_with_multiplicity() {
    let a = polygon(&[(-2, -2, 0), (2, -2, 0), (2, 2, 0), (-2, 2, 0)]);
    let b = polygon(&[(0, 1, -1), (0, 5, -1), (0, 5, 1), (0, 1, 1)]);
    let one = lk(&a, &b).unwrap();
    assert_eq!(one.abs(), 1);
    assert_eq!(lk(&a, &b.scale(3)), Some(3 * one));
}
