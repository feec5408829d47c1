//! Abstract simplicial complexes stored by their facets.
//!
//! A [`SimplicialComplex`] keeps only its inclusion-maximal faces. Every other
//! face is implied by downward closure and is enumerated on demand, so the
//! extremal constructions (whose closures are large) stay cheap to hold.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Vertex label. Ordering is the integer ordering.
pub type VertexId = u32;

/// A nonempty set of vertices, stored as a strictly increasing sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Builds a simplex from vertices in any order. Rejects empty input and
    /// repeated vertices.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidSimplex("no vertices".into()));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSimplex(format!("repeated vertex in {vertices:?}")));
        }
        Ok(Simplex(vertices))
    }

    /// Caller guarantees the input is sorted, deduplicated and nonempty.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertex(v: VertexId) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    /// The vertices of `self` not in `other`, or `None` if that is empty.
    pub fn difference(&self, other: &Simplex) -> Option<Simplex> {
        let rest: Vec<_> = self.0.iter().copied().filter(|v| !other.contains(*v)).collect();
        (!rest.is_empty()).then_some(Simplex(rest))
    }

    pub fn intersection(&self, other: &Simplex) -> Option<Simplex> {
        let common: Vec<_> = self.0.iter().copied().filter(|v| other.contains(*v)).collect();
        (!common.is_empty()).then_some(Simplex(common))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut all: Vec<_> = self.0.iter().chain(other.0.iter()).copied().collect();
        all.sort_unstable();
        all.dedup();
        Simplex(all)
    }

    pub fn without(&self, v: VertexId) -> Option<Simplex> {
        let rest: Vec<_> = self.0.iter().copied().filter(|&w| w != v).collect();
        (!rest.is_empty()).then_some(Simplex(rest))
    }

    /// All nonempty subsets with exactly `size` vertices.
    pub fn subsets_of_size(&self, size: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        if size == 0 || size > self.0.len() {
            return out;
        }
        let mut idx: Vec<usize> = (0..size).collect();
        let n = self.0.len();
        loop {
            out.push(Simplex(idx.iter().map(|&i| self.0[i]).collect()));
            let mut i = size;
            while i > 0 && idx[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// Every nonempty subset (the simplex's own closure).
    pub fn faces(&self) -> Vec<Simplex> {
        (1..=self.0.len()).flat_map(|s| self.subsets_of_size(s)).collect()
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Face counts `f_0, ..., f_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `f_k`, zero above the dimension.
    pub fn get(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }
}

/// A finite simplicial complex, possibly empty, stored by facets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    facets: Vec<Simplex>,
    vertices: BTreeSet<VertexId>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex { facets: Vec::new(), vertices: BTreeSet::new() }
    }

    /// Downward closure of a nonempty family of simplices.
    pub fn closure<I: IntoIterator<Item = Simplex>>(facets: I) -> Result<Self> {
        let k = Self::from_simplices(facets);
        if k.is_empty() {
            return Err(Error::EmptyComplex);
        }
        Ok(k)
    }

    /// Like [`closure`](Self::closure) but an empty family yields the empty complex.
    pub fn from_simplices<I: IntoIterator<Item = Simplex>>(simplices: I) -> Self {
        let mut candidates: Vec<Simplex> = simplices.into_iter().collect();
        // Larger first so every simplex is compared only against potential supersets.
        candidates.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        candidates.dedup();

        let mut kept: Vec<Simplex> = Vec::new();
        let mut by_vertex: HashMap<VertexId, Vec<usize>> = HashMap::new();
        for s in candidates {
            let first = s.vertices()[0];
            let absorbed = by_vertex
                .get(&first)
                .is_some_and(|ids| ids.iter().any(|&i| kept[i].len() > s.len() && s.is_subset_of(&kept[i])));
            if absorbed {
                continue;
            }
            let id = kept.len();
            for &v in s.vertices() {
                by_vertex.entry(v).or_default().push(id);
            }
            kept.push(s);
        }
        kept.sort_unstable();
        let vertices = kept.iter().flat_map(|s| s.vertices().iter().copied()).collect();
        SimplicialComplex { facets: kept, vertices }
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Maximum facet dimension; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.facets.iter().map(Simplex::dim).max()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_subset_of(f))
    }

    fn require_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// All faces of dimension `k`.
    pub fn faces_of_dim(&self, k: usize) -> BTreeSet<Simplex> {
        self.facets.iter().flat_map(|f| f.subsets_of_size(k + 1)).collect()
    }

    /// Every face, in dimension-then-lexicographic order.
    pub fn all_faces(&self) -> Vec<Simplex> {
        match self.dim() {
            None => Vec::new(),
            Some(d) => (0..=d).flat_map(|k| self.faces_of_dim(k)).collect(),
        }
    }

    pub fn f_vector(&self) -> FVector {
        match self.dim() {
            None => FVector(Vec::new()),
            Some(d) => FVector((0..=d).map(|k| self.faces_of_dim(k).len() as u64).collect()),
        }
    }

    /// Faces containing `v` (the open star).
    pub fn star(&self, v: VertexId) -> Result<BTreeSet<Simplex>> {
        self.require_vertex(v)?;
        let apex = Simplex::vertex(v);
        let mut out = BTreeSet::new();
        for f in self.facets.iter().filter(|f| f.contains(v)) {
            out.insert(apex.clone());
            if let Some(rest) = f.without(v) {
                for tau in rest.faces() {
                    out.insert(tau.union(&apex));
                }
            }
        }
        Ok(out)
    }

    /// The link-complex of `v`. An isolated vertex has the empty complex as
    /// its link.
    pub fn link(&self, v: VertexId) -> Result<SimplicialComplex> {
        self.require_vertex(v)?;
        Ok(Self::from_simplices(
            self.facets.iter().filter(|f| f.contains(v)).filter_map(|f| f.without(v)),
        ))
    }

    /// Link of an arbitrary face.
    pub fn link_of(&self, sigma: &Simplex) -> Result<SimplicialComplex> {
        if !self.contains(sigma) {
            return Err(Error::NotAFace(sigma.vertices().to_vec()));
        }
        Ok(Self::from_simplices(
            self.facets.iter().filter(|f| sigma.is_subset_of(f)).filter_map(|f| f.difference(sigma)),
        ))
    }

    /// Number of faces of dimension `dim σ + 1` containing `σ`.
    pub fn degree(&self, sigma: &Simplex) -> Result<usize> {
        if !self.contains(sigma) {
            return Err(Error::NotAFace(sigma.vertices().to_vec()));
        }
        let cofaces: BTreeSet<Simplex> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset_of(f))
            .flat_map(|f| {
                f.vertices()
                    .iter()
                    .filter(|v| !sigma.contains(**v))
                    .map(|&v| sigma.union(&Simplex::vertex(v)))
                    .collect::<Vec<_>>()
            })
            .collect();
        Ok(cofaces.len())
    }

    /// The `k`-skeleton.
    pub fn skeleton(&self, k: usize) -> Result<SimplicialComplex> {
        let d = self.dim().ok_or(Error::EmptyComplex)?;
        if k > d {
            return Err(Error::OutOfRange { k: k as isize, min: 0, max: d as isize });
        }
        Ok(self.skeleton_unchecked(k))
    }

    /// The `k`-skeleton without a range check; `k` above the dimension returns `self`.
    pub fn skeleton_unchecked(&self, k: usize) -> SimplicialComplex {
        Self::from_simplices(self.facets.iter().flat_map(|f| {
            if f.dim() <= k {
                vec![f.clone()]
            } else {
                f.subsets_of_size(k + 1)
            }
        }))
    }

    /// Simplices present in both complexes.
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut candidates = Vec::new();
        for a in &self.facets {
            for b in &other.facets {
                if let Some(c) = a.intersection(b) {
                    candidates.push(c);
                }
            }
        }
        Self::from_simplices(candidates)
    }

    /// Join with `other`. The second operand's labels are shifted past this
    /// complex's maximum label; the returned map sends each original label of
    /// `other` to its new label.
    pub fn join(&self, other: &SimplicialComplex) -> (SimplicialComplex, BTreeMap<VertexId, VertexId>) {
        let offset = self.vertices.iter().next_back().map_or(0, |&m| m + 1);
        let relabel: BTreeMap<VertexId, VertexId> = other.vertices.iter().map(|&v| (v, v + offset)).collect();
        let shifted: Vec<Simplex> = other
            .facets
            .iter()
            .map(|f| Simplex::from_sorted(f.vertices().iter().map(|v| relabel[v]).collect()))
            .collect();
        let facets: Vec<Simplex> = if self.is_empty() {
            shifted
        } else if shifted.is_empty() {
            self.facets.clone()
        } else {
            self.facets
                .iter()
                .flat_map(|a| shifted.iter().map(move |b| a.union(b)))
                .collect()
        };
        (Self::from_simplices(facets), relabel)
    }

    /// Join with `other` when the vertex sets are already disjoint.
    pub fn join_disjoint(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if !self.vertices.is_disjoint(&other.vertices) {
            return Err(Error::InvalidParams("join operands share vertices".into()));
        }
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        Ok(Self::from_simplices(
            self.facets.iter().flat_map(|a| other.facets.iter().map(move |b| a.union(b))),
        ))
    }

    /// Applies an injective relabeling to every vertex.
    pub fn relabel(&self, map: impl Fn(VertexId) -> VertexId) -> SimplicialComplex {
        Self::from_simplices(self.facets.iter().map(|f| {
            let mut vs: Vec<_> = f.vertices().iter().map(|&v| map(v)).collect();
            vs.sort_unstable();
            Simplex::from_sorted(vs)
        }))
    }

    /// Adds the given simplices, keeping the facet representation reduced.
    pub fn with_simplices<I: IntoIterator<Item = Simplex>>(&self, extra: I) -> SimplicialComplex {
        Self::from_simplices(self.facets.iter().cloned().chain(extra))
    }
}

/// Both sides of the vertex-link counting identity `(k+1) f_k = Σ_v f_{k-1}(lk v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkCountCheck {
    pub k: usize,
    pub lhs: u64,
    pub rhs: u64,
    pub equal: bool,
}

/// Counts each `k`-face once per vertex: `(k+1)·f_k` against the sum of the
/// `(k-1)`-face counts of all vertex links.
pub fn verify_link_count_identity(k_complex: &SimplicialComplex, k: usize) -> Result<LinkCountCheck> {
    let d = k_complex.dim().ok_or(Error::EmptyComplex)?;
    if k < 1 || k > d {
        return Err(Error::OutOfRange { k: k as isize, min: 1, max: d as isize });
    }
    let lhs = (k as u64 + 1) * k_complex.faces_of_dim(k).len() as u64;
    let mut rhs = 0u64;
    for &v in k_complex.vertices() {
        let link = k_complex.link(v)?;
        rhs += link.faces_of_dim(k - 1).len() as u64;
    }
    Ok(LinkCountCheck { k, lhs, rhs, equal: lhs == rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[VertexId]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn cx(facets: &[&[VertexId]]) -> SimplicialComplex {
        SimplicialComplex::closure(facets.iter().map(|f| s(f))).unwrap()
    }

    #[test]
    fn simplex_rejects_bad_input() {
        assert!(Simplex::new(vec![]).is_err());
        assert!(Simplex::new(vec![1, 2, 1]).is_err());
        assert_eq!(s(&[3, 1, 2]).vertices(), &[1, 2, 3]);
    }

    #[test]
    fn closure_examples() {
        assert_eq!(cx(&[&[1, 2, 3]]).f_vector(), FVector(vec![3, 3, 1]));
        let tri = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(tri.f_vector(), FVector(vec![3, 3]));
        assert_eq!(tri.facets().len(), 3);
        assert_eq!(cx(&[&[1, 2, 3], &[1, 2]]).facets(), &[s(&[1, 2, 3])]);
        assert_eq!(SimplicialComplex::closure(Vec::new()), Err(Error::EmptyComplex));
    }

    #[test]
    fn star_examples() {
        let k = cx(&[&[1, 2, 3]]);
        let st: Vec<_> = k.star(1).unwrap().into_iter().collect();
        assert_eq!(st, vec![s(&[1]), s(&[1, 2]), s(&[1, 2, 3]), s(&[1, 3])]);
        let k = cx(&[&[1, 2], &[3, 4]]);
        assert_eq!(k.star(1).unwrap().into_iter().collect::<Vec<_>>(), vec![s(&[1]), s(&[1, 2])]);
        let path = cx(&[&[1, 2], &[2, 3]]);
        assert_eq!(path.star(2).unwrap().len(), 3);
        assert_eq!(path.star(9), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn link_examples() {
        assert_eq!(cx(&[&[1, 2, 3]]).link(1).unwrap(), cx(&[&[2, 3]]));
        let cone = cx(&[&[0, 1, 2], &[0, 2, 3], &[0, 1, 3]]);
        assert_eq!(cone.link(0).unwrap(), cx(&[&[1, 2], &[2, 3], &[1, 3]]));
        assert_eq!(cx(&[&[1, 2, 3, 4]]).link(4).unwrap(), cx(&[&[1, 2, 3]]));
        let isolated = cx(&[&[1, 2], &[5]]);
        assert!(isolated.link(5).unwrap().is_empty());
        assert!(isolated.link(7).is_err());
    }

    #[test]
    fn join_examples() {
        let (e, _) = cx(&[&[0]]).join(&cx(&[&[0]]));
        assert_eq!(e, cx(&[&[0, 1]]));
        let three = cx(&[&[0], &[1], &[2]]);
        let (k33, map) = three.join(&three);
        assert_eq!(k33.f_vector(), FVector(vec![6, 9]));
        assert_eq!(map[&0], 3);
        let (k333, _) = k33.join(&three);
        assert_eq!(k333.f_vector(), FVector(vec![9, 27, 27]));
        assert_eq!(k333.dim(), Some(2));
    }

    #[test]
    fn f_vector_degree_intersection() {
        assert_eq!(cx(&[&[1, 2, 3, 4]]).f_vector(), FVector(vec![4, 6, 4, 1]));
        let bd = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(bd.degree(&s(&[1, 2])).unwrap(), 2);
        assert_eq!(bd.degree(&s(&[1])).unwrap(), 3);
        assert!(bd.degree(&s(&[1, 2, 3, 4])).is_err());
        assert_eq!(cx(&[&[1, 2, 3]]).intersection(&cx(&[&[1, 2, 4]])), cx(&[&[1, 2]]));
        assert!(cx(&[&[1]]).intersection(&cx(&[&[2]])).is_empty());
    }

    #[test]
    fn skeleton_ranges() {
        let t = cx(&[&[1, 2, 3, 4]]);
        assert_eq!(t.skeleton(1).unwrap().f_vector(), FVector(vec![4, 6]));
        assert!(t.skeleton(4).is_err());
        let mixed = cx(&[&[1, 2, 3], &[4]]);
        assert_eq!(mixed.skeleton(0).unwrap().facets().len(), 4);
    }

    #[test]
    fn link_count_identity_examples() {
        let bd = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        let c = verify_link_count_identity(&bd, 2).unwrap();
        assert_eq!((c.lhs, c.rhs, c.equal), (12, 12, true));
        let c = verify_link_count_identity(&cx(&[&[1, 2, 3]]), 1).unwrap();
        assert_eq!((c.lhs, c.rhs), (6, 6));
        let three = cx(&[&[0], &[1], &[2]]);
        let (k33, _) = three.join(&three);
        let c = verify_link_count_identity(&k33, 1).unwrap();
        assert_eq!((c.lhs, c.rhs), (18, 18));
        assert!(verify_link_count_identity(&k33, 0).is_err());
        assert!(verify_link_count_identity(&k33, 2).is_err());
    }
}
