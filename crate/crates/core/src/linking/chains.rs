//! Integer chains of straight simplices in R^3 and their intersection
//! numbers.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::predicates::{
    classify_crossing, point_in_triangle, point_tetrahedron_intersection, segments_meet, Point3, Predicate,
};
use crate::error::{Error, Result};

/// Parity of the permutation that sorts `pts`.
fn sort_with_sign<const N: usize>(mut pts: [Point3; N]) -> ([Point3; N], i64) {
    let mut sign = 1;
    for i in 0..N {
        for j in 0..N - 1 - i {
            if pts[j] > pts[j + 1] {
                pts.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    (pts, sign)
}

/// A formal integer combination of oriented straight `(N-1)`-simplices. Each
/// simplex is stored with its vertices in increasing order; the orientation
/// of the given vertex order is folded into the coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeoChain<const N: usize> {
    terms: BTreeMap<[Point3; N], i64>,
}

pub type PointChain = GeoChain<1>;
pub type SegmentChain = GeoChain<2>;
pub type TriangleChain = GeoChain<3>;
pub type TetraChain = GeoChain<4>;

impl<const N: usize> GeoChain<N> {
    pub fn new() -> Self {
        GeoChain { terms: BTreeMap::new() }
    }

    /// Adds `coef` times the simplex oriented by the order of `pts`.
    /// Repeated vertices are rejected.
    pub fn add(&mut self, coef: i64, pts: [Point3; N]) -> Result<()> {
        let (sorted, sign) = sort_with_sign(pts);
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Degenerate(format!("simplex with repeated vertex {}", sorted[0])));
        }
        match self.terms.entry(sorted) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += sign * coef;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if coef != 0 {
                    e.insert(sign * coef);
                }
            }
        }
        Ok(())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, [Point3; N])>>(terms: I) -> Result<Self> {
        let mut c = Self::new();
        for (coef, pts) in terms {
            c.add(coef, pts)?;
        }
        Ok(c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Point3; N], i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::new();
        }
        GeoChain { terms: self.terms.iter().map(|(s, &c)| (s.clone(), c * k)).collect() }
    }

    pub fn negate(&self) -> Self {
        self.scale(-1)
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, &c) in &other.terms {
            out.add(c, s.clone()).expect("terms are nondegenerate");
        }
        out
    }

    /// `∂[p_0 ... p_k] = Σ_i (-1)^i [p_0 ... p̂_i ... p_k]`. `M` must be `N - 1`.
    fn boundary_into<const M: usize>(&self) -> GeoChain<M> {
        assert_eq!(M + 1, N);
        let mut out = GeoChain::<M>::new();
        for (s, &c) in &self.terms {
            for i in 0..N {
                let face: Vec<Point3> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
                let face: [Point3; M] = face.try_into().expect("face size");
                let sign = if i % 2 == 0 { 1 } else { -1 };
                out.add(sign * c, face).expect("faces of nondegenerate simplices");
            }
        }
        out
    }
}

impl SegmentChain {
    pub fn boundary(&self) -> PointChain {
        self.boundary_into()
    }

    pub fn is_cycle(&self) -> bool {
        self.boundary().is_empty()
    }

    /// The cone from `apex`: `Σ c [apex, a, b]` over terms `c [a, b]`. Its
    /// boundary is the chain itself when the chain is a cycle.
    pub fn cone(&self, apex: &Point3) -> Result<TriangleChain> {
        let mut out = TriangleChain::new();
        for ([a, b], c) in self.terms() {
            if super::predicates::collinear(apex, a, b) {
                return Err(Error::Degenerate(format!(
                    "apex {apex} is collinear with segment {a} {b}; perturb the apex"
                )));
            }
            out.add(c, [apex.clone(), a.clone(), b.clone()])?;
        }
        Ok(out)
    }
}

impl TriangleChain {
    pub fn boundary(&self) -> SegmentChain {
        self.boundary_into()
    }
}

impl TetraChain {
    pub fn boundary(&self) -> TriangleChain {
        self.boundary_into()
    }
}

/// One signed crossing counted by an intersection number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingRecord {
    pub segment: [Point3; 2],
    pub triangle: [Point3; 3],
    /// Product of the two chain coefficients.
    pub coefficient: i64,
    pub sign: i8,
}

/// The determinants that decided each crossing; all are nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GeneralPositionCertificate {
    pub checked: Vec<Predicate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionTrace {
    pub value: i64,
    pub crossings: Vec<CrossingRecord>,
    pub certificate: GeneralPositionCertificate,
}

/// Intersection number of a 1-chain with a 2-chain, with every crossing.
pub fn intersection_trace(c1: &SegmentChain, c2: &TriangleChain) -> Result<IntersectionTrace> {
    for ([x], _) in c1.boundary().terms() {
        for ([a, b, c], _) in c2.terms() {
            if point_in_triangle(x, a, b, c)? {
                return Err(Error::Precondition(format!("boundary point {x} of the 1-chain lies on the 2-chain")));
            }
        }
    }
    let boundary2 = c2.boundary();
    for ([p, q], _) in boundary2.terms() {
        for ([r, s], _) in c1.terms() {
            if segments_meet(p, q, r, s) {
                return Err(Error::Precondition(format!(
                    "boundary segment {p} {q} of the 2-chain meets segment {r} {s} of the 1-chain"
                )));
            }
        }
    }

    let segments: Vec<(&[Point3; 2], i64)> = c1.terms().collect();
    let triangles: Vec<(&[Point3; 3], i64)> = c2.terms().collect();
    type Partial = Result<(Vec<CrossingRecord>, Vec<Predicate>)>;
    let per_segment: Vec<Partial> = segments
        .par_iter()
        .map(|&([p, q], c)| {
            let mut records = Vec::new();
            let mut checked = Vec::new();
            for &([a, b, t], d) in &triangles {
                let sign = classify_crossing(p, q, a, b, t, &mut checked)?;
                if sign != 0 {
                    records.push(CrossingRecord {
                        segment: [p.clone(), q.clone()],
                        triangle: [a.clone(), b.clone(), t.clone()],
                        coefficient: c * d,
                        sign,
                    });
                }
            }
            Ok((records, checked))
        })
        .collect();

    let mut crossings = Vec::new();
    let mut certificate = GeneralPositionCertificate::default();
    for part in per_segment {
        let (records, checked) = part?;
        crossings.extend(records);
        certificate.checked.extend(checked);
    }
    let value = crossings.iter().map(|r| r.coefficient * r.sign as i64).sum();
    Ok(IntersectionTrace { value, crossings, certificate })
}

/// Signed count of transverse crossings of a 1-chain with a 2-chain.
/// Requires the boundary of each chain to avoid the other chain.
pub fn intersection_number(c1: &SegmentChain, c2: &TriangleChain) -> Result<i64> {
    intersection_trace(c1, c2).map(|t| t.value)
}

/// Intersection number of a 0-chain with a 3-chain.
pub fn point_intersection_number(c0: &PointChain, c3: &TetraChain) -> Result<i64> {
    let mut total = 0;
    for ([x], c) in c0.terms() {
        for ([a, b, p, q], d) in c3.terms() {
            total += c * d * point_tetrahedron_intersection(x, a, b, p, q)? as i64;
        }
    }
    Ok(total)
}

/// Both sides of `I(c, ∂T) = (-1)^p I(∂c, T)` for a 1-chain `c` (so `p = 1`)
/// and a 3-chain `T` in R^3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryIdentity {
    pub lhs: i64,
    pub rhs: i64,
    pub equal: bool,
}

pub fn verify_boundary_identity(c1: &SegmentChain, c3: &TetraChain) -> Result<BoundaryIdentity> {
    let lhs = intersection_number(c1, &c3.boundary())?;
    let rhs = -point_intersection_number(&c1.boundary(), c3)?;
    Ok(BoundaryIdentity { lhs, rhs, equal: lhs == rhs })
}
