//! Exact geometric predicates on rational points in R^3.
//!
//! Sign conventions, used everywhere in this module:
//!
//! | quantity | positive when |
//! |---|---|
//! | `orient3d(a, b, c, d)` | `d` lies on the side of plane `abc` that `(b - a) × (c - a)` points to |
//! | normal of triangle `(a, b, c)` | `(b - a) × (c - a)` (right-hand rule) |
//! | crossing of segment `p → q` with triangle `(a, b, c)` | the segment passes from the negative to the positive side of the normal |
//! | point in tetrahedron `(a, b, c, d)` | the point is interior and `orient3d(a, b, c, d) > 0` |
//!
//! The ambient orientation is the standard one of R^3. With these choices the
//! boundary of a positive tetrahedron carries outward normals.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point3 {
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

impl Point3 {
    pub fn new(x: BigRational, y: BigRational, z: BigRational) -> Self {
        Point3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        Point3 { x: r(x), y: r(y), z: r(z) }
    }

    /// `(xn/xd, yn/yd, zn/zd)`.
    pub fn from_fractions(x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> Self {
        let r = |(n, d): (i64, i64)| BigRational::new(BigInt::from(n), BigInt::from(d));
        Point3 { x: r(x), y: r(y), z: r(z) }
    }

    pub fn coords(&self) -> [&BigRational; 3] {
        [&self.x, &self.y, &self.z]
    }

    fn minus(&self, o: &Point3) -> [BigRational; 3] {
        [&self.x - &o.x, &self.y - &o.y, &self.z - &o.z]
    }
}

/// Parses an integer or a `p/q` fraction.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidParams(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n).map_err(|_| bad())?;
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl Serialize for Point3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y.to_string(), self.z.to_string()].serialize(s)
    }
}

fn sign(v: &BigRational) -> i8 {
    match v.cmp(&BigRational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

fn det3(u: &[BigRational; 3], v: &[BigRational; 3], w: &[BigRational; 3]) -> BigRational {
    &u[0] * (&v[1] * &w[2] - &v[2] * &w[1]) - &u[1] * (&v[0] * &w[2] - &v[2] * &w[0])
        + &u[2] * (&v[0] * &w[1] - &v[1] * &w[0])
}

fn cross(u: &[BigRational; 3], v: &[BigRational; 3]) -> [BigRational; 3] {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

/// Sign of `det[b - a, c - a, d - a]`.
pub fn orient3d(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> i8 {
    sign(&det3(&b.minus(a), &c.minus(a), &d.minus(a)))
}

pub fn collinear(a: &Point3, b: &Point3, c: &Point3) -> bool {
    cross(&b.minus(a), &c.minus(a)).iter().all(Zero::is_zero)
}

/// Coordinates of `p` with axis `drop` removed.
fn project(p: &Point3, drop: usize) -> [&BigRational; 2] {
    let c = p.coords();
    [c[(drop + 1) % 3], c[(drop + 2) % 3]]
}

fn orient2d(a: [&BigRational; 2], b: [&BigRational; 2], c: [&BigRational; 2]) -> i8 {
    let d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    sign(&d)
}

fn within_box(a: [&BigRational; 2], b: [&BigRational; 2], p: [&BigRational; 2]) -> bool {
    (0..2).all(|i| p[i] >= a[i].min(b[i]) && p[i] <= a[i].max(b[i]))
}

fn segments_meet_2d(p: [&BigRational; 2], q: [&BigRational; 2], r: [&BigRational; 2], s: [&BigRational; 2]) -> bool {
    let o1 = orient2d(p, q, r);
    let o2 = orient2d(p, q, s);
    let o3 = orient2d(r, s, p);
    let o4 = orient2d(r, s, q);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && within_box(p, q, r))
        || (o2 == 0 && within_box(p, q, s))
        || (o3 == 0 && within_box(r, s, p))
        || (o4 == 0 && within_box(r, s, q))
}

/// An axis whose removal is injective on the affine span of the points,
/// which must be coplanar and not all equal.
fn injective_axis(points: &[&Point3]) -> usize {
    let base = points[0];
    let diffs: Vec<[BigRational; 3]> = points[1..].iter().map(|p| p.minus(base)).collect();
    for i in 0..diffs.len() {
        for j in i + 1..diffs.len() {
            let n = cross(&diffs[i], &diffs[j]);
            if let Some(axis) = (0..3).find(|&k| !n[k].is_zero()) {
                return axis;
            }
        }
    }
    let d = diffs.iter().find(|d| d.iter().any(|c| !c.is_zero())).expect("points are not all equal");
    (0..3).find(|&k| !d[(k + 1) % 3].is_zero() || !d[(k + 2) % 3].is_zero()).unwrap()
}

/// Whether closed segments `pq` and `rs` share a point.
pub fn segments_meet(p: &Point3, q: &Point3, r: &Point3, s: &Point3) -> bool {
    if orient3d(p, q, r, s) != 0 {
        return false;
    }
    if p == q && r == s {
        return p == r;
    }
    let axis = injective_axis(&[p, q, r, s]);
    segments_meet_2d(project(p, axis), project(q, axis), project(r, axis), project(s, axis))
}

/// Whether `x` lies on the closed segment `pq`.
pub fn point_on_segment(x: &Point3, p: &Point3, q: &Point3) -> bool {
    if p == q {
        return x == p;
    }
    collinear(p, q, x) && {
        let axis = injective_axis(&[p, q]);
        within_box(project(p, axis), project(q, axis), project(x, axis))
    }
}

fn check_triangle(a: &Point3, b: &Point3, c: &Point3) -> Result<()> {
    if collinear(a, b, c) {
        return Err(Error::Degenerate(format!("triangle {a} {b} {c} has collinear vertices")));
    }
    Ok(())
}

/// Whether `x` lies in the closed triangle `abc` (which must be nondegenerate).
pub fn point_in_triangle(x: &Point3, a: &Point3, b: &Point3, c: &Point3) -> Result<bool> {
    check_triangle(a, b, c)?;
    if orient3d(a, b, c, x) != 0 {
        return Ok(false);
    }
    let axis = injective_axis(&[a, b, c]);
    let [pa, pb, pc, px] = [a, b, c, x].map(|p| project(p, axis));
    let s = [orient2d(pa, pb, px), orient2d(pb, pc, px), orient2d(pc, pa, px)];
    Ok(!(s.contains(&1) && s.contains(&-1)))
}

/// One evaluated predicate: which determinant and its sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Predicate {
    pub id: String,
    pub sign: i8,
}

/// Signed crossing of segment `p → q` with triangle `(a, b, c)`: `+1` or `-1`
/// for a transverse crossing of the open segment through the open triangle,
/// `0` when they are disjoint. Any other contact violates general position.
pub fn segment_triangle_intersection(p: &Point3, q: &Point3, a: &Point3, b: &Point3, c: &Point3) -> Result<i8> {
    classify_crossing(p, q, a, b, c, &mut Vec::new())
}

/// As [`segment_triangle_intersection`], appending the determinants that
/// decided a crossing to `checked`.
pub(crate) fn classify_crossing(
    p: &Point3,
    q: &Point3,
    a: &Point3,
    b: &Point3,
    c: &Point3,
    checked: &mut Vec<Predicate>,
) -> Result<i8> {
    check_triangle(a, b, c)?;
    let sp = orient3d(a, b, c, p);
    let sq = orient3d(a, b, c, q);
    if sp == sq && sp != 0 {
        return Ok(0);
    }
    if sp == 0 && sq == 0 {
        let axis = injective_axis(&[a, b, c]);
        let [pa, pb, pc, pp, pq] = [a, b, c, p, q].map(|x| project(x, axis));
        let touches = point_in_triangle(p, a, b, c)?
            || point_in_triangle(q, a, b, c)?
            || segments_meet_2d(pp, pq, pa, pb)
            || segments_meet_2d(pp, pq, pb, pc)
            || segments_meet_2d(pp, pq, pc, pa);
        if touches {
            return Err(Error::Degenerate(format!(
                "orient3d(a,b,c,p) = orient3d(a,b,c,q) = 0: segment {p} {q} lies in the plane of triangle {a} {b} {c} and meets it"
            )));
        }
        return Ok(0);
    }
    let t = [orient3d(p, q, a, b), orient3d(p, q, b, c), orient3d(p, q, c, a)];
    if t.contains(&1) && t.contains(&-1) {
        return Ok(0);
    }
    if sp == 0 || sq == 0 {
        let which = if sp == 0 { "p" } else { "q" };
        return Err(Error::Degenerate(format!(
            "orient3d(a,b,c,{which}) = 0: segment {p} {q} ends on triangle {a} {b} {c}"
        )));
    }
    if let Some(i) = t.iter().position(|&s| s == 0) {
        let edge = ["a,b", "b,c", "c,a"][i];
        return Err(Error::Degenerate(format!(
            "orient3d(p,q,{edge}) = 0: segment {p} {q} passes through the boundary of triangle {a} {b} {c}"
        )));
    }
    checked.push(Predicate { id: "orient3d(a,b,c,p)".into(), sign: sp });
    checked.push(Predicate { id: "orient3d(a,b,c,q)".into(), sign: sq });
    for (edge, &s) in ["a,b", "b,c", "c,a"].iter().zip(&t) {
        checked.push(Predicate { id: format!("orient3d(p,q,{edge})"), sign: s });
    }
    Ok(sq)
}

/// Intersection number of point `x` with the oriented tetrahedron
/// `(a, b, c, d)`: its orientation sign if `x` is interior, `0` if outside.
/// A point on the boundary violates general position.
pub fn point_tetrahedron_intersection(x: &Point3, a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> Result<i8> {
    let o = orient3d(a, b, c, d);
    if o == 0 {
        return Err(Error::Degenerate(format!("tetrahedron {a} {b} {c} {d} is flat")));
    }
    // Replace each vertex by x in turn; x is interior when every sign agrees.
    let s = [orient3d(x, b, c, d), orient3d(a, x, c, d), orient3d(a, b, x, d), orient3d(a, b, c, x)];
    if s.iter().any(|&v| v == -o) {
        return Ok(0);
    }
    if s.contains(&0) {
        return Err(Error::Degenerate(format!("point {x} lies on the boundary of tetrahedron {a} {b} {c} {d}")));
    }
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64, z: i64) -> Point3 {
        Point3::from_ints(x, y, z)
    }

    #[test]
    fn upward_segment_through_counterclockwise_triangle() {
        let tri = (p(1, 0, 0), p(-1, 1, 0), p(-1, -1, 0));
        assert_eq!(segment_triangle_intersection(&p(0, 0, -1), &p(0, 0, 1), &tri.0, &tri.1, &tri.2).unwrap(), 1);
        assert_eq!(segment_triangle_intersection(&p(0, 0, 1), &p(0, 0, -1), &tri.0, &tri.1, &tri.2).unwrap(), -1);
        assert_eq!(segment_triangle_intersection(&p(0, 0, 1), &p(0, 0, 2), &tri.0, &tri.1, &tri.2).unwrap(), 0);
        assert_eq!(segment_triangle_intersection(&p(5, 5, -1), &p(5, 5, 1), &tri.0, &tri.1, &tri.2).unwrap(), 0);
    }

    #[test]
    fn contact_is_degenerate() {
        let tri = (p(1, 0, 0), p(-1, 1, 0), p(-1, -1, 0));
        let end_inside = segment_triangle_intersection(&p(0, 0, 0), &p(0, 0, 1), &tri.0, &tri.1, &tri.2);
        assert!(matches!(end_inside, Err(Error::Degenerate(_))));
        let through_vertex = segment_triangle_intersection(&p(1, 0, -1), &p(1, 0, 1), &tri.0, &tri.1, &tri.2);
        assert!(matches!(through_vertex, Err(Error::Degenerate(_))));
        let coplanar = segment_triangle_intersection(&p(-2, 0, 0), &p(2, 0, 0), &tri.0, &tri.1, &tri.2);
        assert!(matches!(coplanar, Err(Error::Degenerate(_))));
        // Endpoint in the plane but away from the triangle is harmless.
        assert_eq!(segment_triangle_intersection(&p(9, 9, 0), &p(9, 9, 1), &tri.0, &tri.1, &tri.2).unwrap(), 0);
        assert_eq!(segment_triangle_intersection(&p(5, 0, 0), &p(6, 0, 0), &tri.0, &tri.1, &tri.2).unwrap(), 0);
    }

    #[test]
    fn segment_contacts() {
        assert!(segments_meet(&p(0, 0, 0), &p(2, 2, 2), &p(2, 0, 0), &p(0, 2, 2)));
        assert!(!segments_meet(&p(0, 0, 0), &p(2, 0, 0), &p(0, 1, 0), &p(2, 1, 1)));
        assert!(segments_meet(&p(0, 0, 0), &p(2, 0, 0), &p(1, 0, 0), &p(3, 0, 0)));
        assert!(!segments_meet(&p(0, 0, 0), &p(1, 0, 0), &p(2, 0, 0), &p(3, 0, 0)));
        assert!(point_on_segment(&p(1, 1, 1), &p(0, 0, 0), &p(2, 2, 2)));
        assert!(!point_on_segment(&p(3, 3, 3), &p(0, 0, 0), &p(2, 2, 2)));
    }

    #[test]
    fn tetrahedron_orientation() {
        let t = [p(0, 0, 0), p(4, 0, 0), p(0, 4, 0), p(0, 0, 4)];
        let inside = Point3::from_fractions((1, 1), (1, 1), (1, 1));
        assert_eq!(point_tetrahedron_intersection(&inside, &t[0], &t[1], &t[2], &t[3]).unwrap(), 1);
        assert_eq!(point_tetrahedron_intersection(&inside, &t[1], &t[0], &t[2], &t[3]).unwrap(), -1);
        assert_eq!(point_tetrahedron_intersection(&p(5, 5, 5), &t[0], &t[1], &t[2], &t[3]).unwrap(), 0);
        assert!(point_tetrahedron_intersection(&p(1, 1, 0), &t[0], &t[1], &t[2], &t[3]).is_err());
    }

    #[test]
    fn rationals_parse() {
        assert_eq!(parse_rational("-3/6").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
