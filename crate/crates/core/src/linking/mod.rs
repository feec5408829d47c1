//! Exact PL intersection and linking numbers in R^3.
//!
//! The linking number of disjoint 1-cycles `z1`, `z2` is computed as the
//! intersection number of `z2` with the cone over `z1` from an apex point.
//! All predicates are exact, so a nonzero answer is never a rounding
//! artifact. Configurations that are not in general position are reported as
//! errors; [`linking_number_auto`] retries with other apexes.

mod chains;
mod predicates;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

pub use chains::{
    intersection_number, intersection_trace, point_intersection_number, verify_boundary_identity,
    BoundaryIdentity, CrossingRecord, GeneralPositionCertificate, GeoChain, IntersectionTrace, PointChain,
    SegmentChain, TetraChain, TriangleChain,
};
pub use predicates::{
    collinear, orient3d, parse_rational, point_in_triangle, point_on_segment, point_tetrahedron_intersection,
    segment_triangle_intersection, segments_meet, Point3, Predicate,
};

use crate::chain::{Chain, OrientedSimplex};
use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// A 1-complex with a straight-line realization in R^3 that is checked to be
/// an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedCurves {
    complex: SimplicialComplex,
    coords: BTreeMap<VertexId, Point3>,
}

impl EmbeddedCurves {
    pub fn new(complex: SimplicialComplex, coords: BTreeMap<VertexId, Point3>) -> Result<Self> {
        if complex.dim().is_some_and(|d| d > 1) {
            return Err(Error::NotAGraph(format!("complex has dimension {}", complex.dim().unwrap())));
        }
        for v in complex.vertices() {
            if !coords.contains_key(v) {
                return Err(Error::NotAnEmbedding(format!("vertex {v} has no coordinates")));
            }
        }
        let used: Vec<(VertexId, &Point3)> =
            complex.vertices().iter().map(|v| (*v, &coords[v])).collect();
        for (i, (u, pu)) in used.iter().enumerate() {
            for (w, pw) in &used[i + 1..] {
                if pu == pw {
                    return Err(Error::NotAnEmbedding(format!("vertices {u} and {w} share the point {pu}")));
                }
            }
        }

        let edges: Vec<[VertexId; 2]> =
            complex.faces_of_dim(1).iter().map(|s| [s.vertices()[0], s.vertices()[1]]).collect();
        for (i, e) in edges.iter().enumerate() {
            for f in &edges[i + 1..] {
                let [a, b] = e.map(|v| &coords[&v]);
                let [c, d] = f.map(|v| &coords[&v]);
                let shared: Vec<VertexId> = e.iter().filter(|v| f.contains(v)).copied().collect();
                let bad = match shared.as_slice() {
                    [] => segments_meet(a, b, c, d),
                    [s] => {
                        // Edges sharing a vertex overlap only when collinear
                        // and leaving it in the same direction.
                        let s = &coords[s];
                        let x = if a == s { b } else { a };
                        let y = if c == s { d } else { c };
                        point_on_segment(x, s, y) || point_on_segment(y, s, x)
                    }
                    _ => false,
                };
                if bad {
                    return Err(Error::NotAnEmbedding(format!("edges {e:?} and {f:?} meet outside a common vertex")));
                }
            }
        }
        let incident: std::collections::BTreeSet<VertexId> = edges.iter().flatten().copied().collect();
        for (v, pv) in &used {
            if incident.contains(v) {
                continue;
            }
            if let Some(e) = edges.iter().find(|e| point_on_segment(pv, &coords[&e[0]], &coords[&e[1]])) {
                return Err(Error::NotAnEmbedding(format!("isolated vertex {v} lies on edge {e:?}")));
            }
        }
        Ok(EmbeddedCurves { complex, coords })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn coords(&self) -> &BTreeMap<VertexId, Point3> {
        &self.coords
    }

    pub fn point(&self, v: VertexId) -> Result<&Point3> {
        self.coords.get(&v).ok_or(Error::UnknownVertex(v))
    }

    /// The straight realization of a simplicial 1-chain on this complex.
    pub fn realize(&self, chain: &Chain) -> Result<SegmentChain> {
        if chain.degree() != 1 && !chain.is_zero() {
            return Err(Error::DimensionMismatch(format!("expected a 1-chain, got degree {}", chain.degree())));
        }
        let mut out = SegmentChain::new();
        for (s, &c) in chain.terms() {
            if !self.complex.contains(s) {
                return Err(Error::NotAFace(s.vertices().to_vec()));
            }
            let [a, b] = [s.vertices()[0], s.vertices()[1]];
            out.add(c, [self.coords[&a].clone(), self.coords[&b].clone()])?;
        }
        Ok(out)
    }
}

/// Parses the `.geom` format: `v <id> <x> <y> <z>` lines with integer or
/// `p/q` coordinates, then `e <id1> <id2>` edge lines. `#` starts a comment.
pub fn parse_geom(text: &str) -> Result<EmbeddedCurves> {
    let mut coords = BTreeMap::new();
    let mut simplices = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| Error::Parse { line, message };
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let id = |t: &str| t.parse::<VertexId>().map_err(|_| err(format!("invalid vertex id {t:?}")));
        match tokens.as_slice() {
            [] => {}
            ["v", v, x, y, z] => {
                let v = id(v)?;
                let coord = |t: &str| parse_rational(t).map_err(|e| err(e.to_string()));
                let p = Point3::new(coord(x)?, coord(y)?, coord(z)?);
                if coords.insert(v, p).is_some() {
                    return Err(err(format!("vertex {v} defined twice")));
                }
                simplices.push(Simplex::vertex(v));
            }
            ["e", a, b] => {
                let (a, b) = (id(a)?, id(b)?);
                for v in [a, b] {
                    if !coords.contains_key(&v) {
                        return Err(err(format!("edge uses undefined vertex {v}")));
                    }
                }
                let s = Simplex::new(vec![a, b]).map_err(|e| err(e.to_string()))?;
                simplices.push(s);
            }
            _ => return Err(err(format!("expected `v <id> <x> <y> <z>` or `e <id> <id>`, got {:?}", content.trim()))),
        }
    }
    if simplices.is_empty() {
        return Err(Error::EmptyComplex);
    }
    EmbeddedCurves::new(SimplicialComplex::from_simplices(simplices), coords)
}

/// Parses a cycle given as comma-separated oriented edges `a:b` (from `a`
/// to `b`); a leading `-` gives the edge coefficient -1.
pub fn parse_cycle_spec(spec: &str) -> Result<Chain> {
    let mut chain = Chain::zero(1);
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (coef, body) = match token.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, token.strip_prefix('+').unwrap_or(token)),
        };
        let bad = || Error::InvalidParams(format!("invalid edge {token:?}; expected `a:b` or `-a:b`"));
        let (a, b) = body.split_once(':').ok_or_else(bad)?;
        let a: VertexId = a.trim().parse().map_err(|_| bad())?;
        let b: VertexId = b.trim().parse().map_err(|_| bad())?;
        chain.add_term(OrientedSimplex::from_sequence(&[a, b])?, coef)?;
    }
    if chain.is_zero() {
        return Err(Error::InvalidParams(format!("cycle {spec:?} has no edges")));
    }
    Ok(chain)
}

/// Apex number `k` of the retry sequence: `(3 + k, 1 + k^2/7, 7 + k^3/11)`.
/// The points lie on a twisted cubic, which meets any plane in at most three
/// of them, so only finitely many apexes can be degenerate for a given pair
/// of cycles.
pub fn apex_candidate(k: u64) -> Point3 {
    let k = BigInt::from(k);
    let r = |n: BigInt, d: i64| BigRational::new(n, BigInt::from(d));
    Point3::new(
        r(BigInt::from(3) + &k, 1),
        r(BigInt::from(7) + &k * &k, 7),
        r(BigInt::from(77) + &k * &k * &k, 11),
    )
}

fn check_cycles(z1: &SegmentChain, z2: &SegmentChain) -> Result<()> {
    for (name, z) in [("first", z1), ("second", z2)] {
        if z.is_empty() {
            return Err(Error::NotACycle(format!("{name} cycle is empty")));
        }
        if !z.is_cycle() {
            return Err(Error::NotACycle(format!("{name} chain has nonzero boundary")));
        }
    }
    for ([a, b], _) in z1.terms() {
        for ([c, d], _) in z2.terms() {
            if segments_meet(a, b, c, d) {
                return Err(Error::Precondition(format!("cycles meet: segments {a} {b} and {c} {d}")));
            }
        }
    }
    Ok(())
}

/// `I(z2, apex * z1)`: the signed crossings of `z2` with the cone over `z1`.
pub fn linking_trace(z1: &SegmentChain, z2: &SegmentChain, apex: &Point3) -> Result<IntersectionTrace> {
    check_cycles(z1, z2)?;
    let cone = z1.cone(apex)?;
    intersection_trace(z2, &cone).map_err(|e| match e {
        Error::Degenerate(msg) => Error::Degenerate(format!("{msg}; perturb the apex {apex}")),
        other => other,
    })
}

pub fn linking_number(z1: &SegmentChain, z2: &SegmentChain, apex: &Point3) -> Result<i64> {
    linking_trace(z1, z2, apex).map(|t| t.value)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkingResult {
    pub linking_number: i64,
    pub apex: Point3,
    /// Index of the successful apex in the retry sequence.
    pub apex_index: u64,
    pub trace: IntersectionTrace,
}

/// Linking number using the first apex of [`apex_candidate`] that puts the
/// cone in general position with `z2`.
pub fn linking_number_auto(z1: &SegmentChain, z2: &SegmentChain) -> Result<LinkingResult> {
    check_cycles(z1, z2)?;
    // Each degenerate apex lies on a plane spanned by a vertex or segment of
    // z1 together with a vertex or segment of z2.
    let v1 = z1.boundary_vertices();
    let v2 = z2.boundary_vertices();
    let planes = (v1 + z1.len()) as u64 * (v2 + z2.len()) as u64;
    let attempts = 3 * planes + 1;
    for k in 0..attempts {
        let apex = apex_candidate(k);
        match linking_trace(z1, z2, &apex) {
            Ok(trace) => return Ok(LinkingResult { linking_number: trace.value, apex, apex_index: k, trace }),
            Err(Error::Degenerate(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Degenerate(format!("no apex among the first {attempts} candidates is in general position")))
}

impl SegmentChain {
    /// Number of distinct endpoints of the segments.
    fn boundary_vertices(&self) -> usize {
        let pts: std::collections::BTreeSet<&Point3> = self.terms().flat_map(|(s, _)| s.iter()).collect();
        pts.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64, z: i64) -> Point3 {
        Point3::from_ints(x, y, z)
    }

    fn polygon(pts: &[Point3]) -> SegmentChain {
        let n = pts.len();
        SegmentChain::from_terms((0..n).map(|i| (1, [pts[i].clone(), pts[(i + 1) % n].clone()]))).unwrap()
    }

    fn hopf() -> (SegmentChain, SegmentChain) {
        let a = polygon(&[p(-2, -2, 0), p(2, -2, 0), p(2, 2, 0), p(-2, 2, 0)]);
        let b = polygon(&[p(0, 1, -1), p(0, 5, -1), p(0, 5, 1), p(0, 1, 1)]);
        (a, b)
    }

    #[test]
    fn hopf_link() {
        let (a, b) = hopf();
        let lk = linking_number_auto(&a, &b).unwrap();
        assert_eq!(lk.linking_number.abs(), 1);
        for k in 0..10 {
            assert_eq!(linking_number(&a, &b, &apex_candidate(k)).unwrap(), lk.linking_number);
        }
        assert_eq!(linking_number_auto(&a, &b.negate()).unwrap().linking_number, -lk.linking_number);
        assert_eq!(linking_number_auto(&b, &a).unwrap().linking_number.abs(), 1);
    }

    #[test]
    fn degenerate_apex_is_reported() {
        let (a, b) = hopf();
        // On the line of one of A's sides.
        assert!(matches!(linking_number(&a, &b, &p(0, -2, 0)), Err(Error::Degenerate(_))));
        // At a vertex of B, so B touches the cone.
        assert!(matches!(linking_number(&a, &b, &p(0, 1, 1)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn non_cycles_and_touching_cycles_are_rejected() {
        let (a, _) = hopf();
        let open = SegmentChain::from_terms([(1, [p(0, 0, 5), p(1, 0, 5)])]).unwrap();
        assert!(matches!(linking_number_auto(&a, &open), Err(Error::NotACycle(_))));
        let touching = polygon(&[p(2, 0, 0), p(5, 0, 1), p(5, 0, -1)]);
        assert!(matches!(linking_number_auto(&a, &touching), Err(Error::Precondition(_))));
    }

    #[test]
    fn geom_files_and_cycle_specs() {
        let text = "# hopf\nv 1 -2 -2 0\nv 2 2 -2 0\nv 3 2 2 0\nv 4 -2 2 0\n\
                    v 5 0 1 -1\nv 6 0 5 -1\nv 7 0 5 1\nv 8 0 1 1\n\
                    e 1 2\ne 2 3\ne 3 4\ne 4 1\ne 5 6\ne 6 7\ne 7 8\ne 8 5\n";
        let g = parse_geom(text).unwrap();
        let z1 = g.realize(&parse_cycle_spec("1:2,2:3,3:4,4:1").unwrap()).unwrap();
        let z2 = g.realize(&parse_cycle_spec("5:6, 6:7, 7:8, -5:8").unwrap()).unwrap();
        assert_eq!(linking_number_auto(&z1, &z2).unwrap().linking_number.abs(), 1);
        assert!(g.realize(&parse_cycle_spec("1:3").unwrap()).is_err());
        assert!(matches!(parse_geom("v 1 0 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_geom("v 1 0 0 0\ne 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_geom("v 1 0 0 0\nv 2 1/2 0 0\nv 3 1 0 0\ne 1 3\n").is_err());
        assert!(parse_cycle_spec("1-2").is_err());
    }
}
