//! Exact counting for set systems with bounded triple intersections, and the
//! face-count exponents that follow from it.
//!
//! For sets `S_1..S_m` over `n` elements, with `κ_l` the number of sets
//! containing element `l` and `t(S) = Σ|S_i| = Σκ_l`, double counting gives
//!
//! ```text
//! Σ_l C(κ_l, 3) = Σ_{i<j<k} |S_i ∩ S_j ∩ S_k|.
//! ```
//!
//! If every triple intersection has at most `f` elements the right side is at
//! most `C(m,3) f`, and Hölder turns the left side into a lower bound on
//! `t(S)^3 / n^2`. [`verify_lemma_chain`] evaluates every step exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Serializes a big integer as a JSON number of any size.
pub fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    let n = serde_json::Number::from_str(&v.to_string()).map_err(serde::ser::Error::custom)?;
    n.serialize(s)
}

/// Serializes a rational as `"p/q"` (or `"p"` when integral).
pub fn serialize_rational<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// A multiset of subsets of `{0, ..., n-1}`. Each set is kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetSystem {
    ground_size: usize,
    sets: Vec<Vec<usize>>,
}

impl SetSystem {
    pub fn new(ground_size: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut clean = Vec::with_capacity(sets.len());
        for (i, mut s) in sets.into_iter().enumerate() {
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParams(format!("set {i} repeats an element")));
            }
            if let Some(&x) = s.last() {
                if x >= ground_size {
                    return Err(Error::InvalidParams(format!("set {i} has element {x} outside 0..{ground_size}")));
                }
            }
            clean.push(s);
        }
        Ok(SetSystem { ground_size, sets: clean })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `κ_l` for every element `l`.
    pub fn degrees(&self) -> Vec<u64> {
        let mut kappa = vec![0u64; self.ground_size];
        for s in &self.sets {
            for &x in s {
                kappa[x] += 1;
            }
        }
        kappa
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let kappa = self.degrees();
        let total: u64 = kappa.iter().sum();
        let mean = if self.ground_size == 0 {
            BigRational::zero()
        } else {
            BigRational::new(total.into(), (self.ground_size as u64).into())
        };
        DegreeProfile { kappa, mean }
    }

    fn membership(&self) -> Vec<Vec<u64>> {
        let words = self.ground_size.div_ceil(64);
        self.sets
            .iter()
            .map(|s| {
                let mut bits = vec![0u64; words];
                for &x in s {
                    bits[x / 64] |= 1 << (x % 64);
                }
                bits
            })
            .collect()
    }

    /// Sets sorted, for comparisons that ignore the order of the sets.
    pub fn canonical(&self) -> SetSystem {
        let mut sets = self.sets.clone();
        sets.sort();
        SetSystem { ground_size: self.ground_size, sets }
    }
}

impl fmt::Display for SetSystem {
    /// The text format: `n m`, then one line per set.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.ground_size, self.sets.len())?;
        for s in &self.sets {
            let line: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Parses the text format: a header line `n m`, then exactly `m` lines of
/// space-separated elements (a blank line is the empty set).
pub fn parse_set_system(text: &str) -> Result<SetSystem> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing `n m` header".into() })?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let parse_count = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse { line: 1, message: format!("invalid count {t:?}") });
    let (n, m) = match nums.as_slice() {
        [n, m] => (parse_count(n)?, parse_count(m)?),
        _ => return Err(Error::Parse { line: 1, message: "header must be `n m`".into() }),
    };
    let mut sets = Vec::with_capacity(m);
    for _ in 0..m {
        let (idx, line) = lines
            .next()
            .ok_or(Error::Parse { line: sets.len() + 2, message: format!("expected {m} sets, found {}", sets.len()) })?;
        let err = |message: String| Error::Parse { line: idx + 1, message };
        let mut set = Vec::new();
        for t in line.split_whitespace() {
            let x: usize = t.parse().map_err(|_| err(format!("invalid element {t:?}")))?;
            if x >= n {
                return Err(err(format!("element {x} outside 0..{n}")));
            }
            if set.contains(&x) {
                return Err(err(format!("element {x} repeated")));
            }
            set.push(x);
        }
        sets.push(set);
    }
    for (idx, line) in lines {
        if !line.trim().is_empty() {
            return Err(Error::Parse { line: idx + 1, message: format!("more than {m} sets") });
        }
    }
    SetSystem::new(n, sets)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub kappa: Vec<u64>,
    #[serde(serialize_with = "serialize_rational")]
    pub mean: BigRational,
}

/// `t(S) = Σ|S_i|`.
pub fn t_of(s: &SetSystem) -> u64 {
    s.sets.iter().map(|x| x.len() as u64).sum()
}

fn binom3(k: u64) -> BigInt {
    let k = BigInt::from(k);
    if k < BigInt::from(3) {
        return BigInt::zero();
    }
    &k * (&k - 1u32) * (&k - 2u32) / 6u32
}

/// `Σ_{i<j<k} |S_i ∩ S_j ∩ S_k|` by brute force, and the largest single term.
fn triple_sums(s: &SetSystem) -> (BigInt, Option<([usize; 3], usize)>) {
    let bits = s.membership();
    let m = bits.len();
    let per_first: Vec<(u64, Option<([usize; 3], usize)>)> = (0..m)
        .into_par_iter()
        .map(|i| {
            let mut total = 0u64;
            let mut best: Option<([usize; 3], usize)> = None;
            for j in i + 1..m {
                let ij: Vec<u64> = bits[i].iter().zip(&bits[j]).map(|(a, b)| a & b).collect();
                for k in j + 1..m {
                    let size = ij.iter().zip(&bits[k]).map(|(a, b)| (a & b).count_ones() as usize).sum::<usize>();
                    total += size as u64;
                    if best.is_none_or(|(_, b)| size > b) {
                        best = Some(([i, j, k], size));
                    }
                }
            }
            (total, best)
        })
        .collect();
    let mut total = BigInt::zero();
    let mut best: Option<([usize; 3], usize)> = None;
    for (t, b) in per_first {
        total += t;
        if let Some((triple, size)) = b {
            if best.is_none_or(|(_, bs)| size > bs) {
                best = Some((triple, size));
            }
        }
    }
    (total, best)
}

/// Largest `|S_i ∩ S_j ∩ S_k|` over `i < j < k` with the first triple attaining
/// it, or `None` when there are fewer than three sets.
pub fn max_triple_intersection(s: &SetSystem) -> Option<([usize; 3], usize)> {
    triple_sums(s).1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleIdentity {
    /// `Σ_l C(κ_l, 3)`.
    #[serde(serialize_with = "serialize_bigint")]
    pub lhs: BigInt,
    /// `Σ_{i<j<k} |S_i ∩ S_j ∩ S_k|`.
    #[serde(serialize_with = "serialize_bigint")]
    pub rhs: BigInt,
    pub equal: bool,
}

pub fn verify_triple_identity(s: &SetSystem) -> TripleIdentity {
    let lhs: BigInt = s.degrees().into_iter().map(binom3).sum();
    let rhs = triple_sums(s).0;
    let equal = lhs == rhs;
    TripleIdentity { lhs, rhs, equal }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityStep {
    pub name: &'static str,
    pub statement: &'static str,
    #[serde(serialize_with = "serialize_rational")]
    pub left: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub right: BigRational,
    pub holds: bool,
}

impl InequalityStep {
    fn le(name: &'static str, statement: &'static str, left: BigRational, right: BigRational) -> Self {
        let holds = left <= right;
        InequalityStep { name, statement, left, right, holds }
    }

    fn eq(name: &'static str, statement: &'static str, left: BigRational, right: BigRational) -> Self {
        let holds = left == right;
        InequalityStep { name, statement, left, right, holds }
    }
}

/// Every quantity in the counting argument, and each step checked exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaChainReport {
    pub ground_size: usize,
    pub sets: usize,
    pub f: u64,
    pub t: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub mean_degree: BigRational,
    #[serde(serialize_with = "serialize_bigint")]
    pub sum_kappa_squared: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub sum_kappa_cubed: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub sum_binom_kappa_3: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub triple_intersection_sum: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub binom_m_3_times_f: BigInt,
    pub steps: Vec<InequalityStep>,
    pub holds: bool,
}

/// Checks the chain
///
/// - (a) `Σ_{i<j<k} |S_i ∩ S_j ∩ S_k| <= C(m,3) f`
/// - (b) `n κ̄^3 <= Σκ^3` (Hölder, equivalently `t^3 <= n^2 Σκ^3`)
/// - (c) `Σ C(κ,3) = (Σκ^3 - 3Σκ^2 + 2Σκ) / 6 >= (n κ̄^3 - 3Σκ^2) / 6`
/// - (d) `n κ̄^3 <= 6 C(m,3) f + 3Σκ^2`, the resulting bound on `t`
///
/// after confirming that no triple of distinct sets shares more than `f`
/// elements.
pub fn verify_lemma_chain(s: &SetSystem, f: u64) -> Result<LemmaChainReport> {
    let (triple_sum, worst) = triple_sums(s);
    if let Some((triple, size)) = worst {
        if size as u64 > f {
            return Err(Error::TripleBoundViolated { triple, size, bound: f });
        }
    }
    let kappa = s.degrees();
    let n = s.ground_size;
    let m = s.sets.len() as u64;
    let t: u64 = kappa.iter().sum();
    let sum2: BigInt = kappa.iter().map(|&k| BigInt::from(k).pow(2u32)).sum();
    let sum3: BigInt = kappa.iter().map(|&k| BigInt::from(k).pow(3u32)).sum();
    let binom_sum: BigInt = kappa.iter().map(|&k| binom3(k)).sum();
    let cap = binom3(m) * f;
    let mean = if n == 0 { BigRational::zero() } else { BigRational::new(t.into(), (n as u64).into()) };
    let n_mean_cubed = BigRational::from_integer(BigInt::from(n)) * mean.clone().pow(3i32);
    let r = |v: &BigInt| BigRational::from_integer(v.clone());
    let six = BigRational::from_integer(6.into());
    let three = BigRational::from_integer(3.into());

    let steps = vec![
        InequalityStep::eq(
            "identity",
            "sum C(kappa,3) = sum over triples of |S_i & S_j & S_k|",
            r(&binom_sum),
            r(&triple_sum),
        ),
        InequalityStep::le("a", "sum over triples of |S_i & S_j & S_k| <= C(m,3) f", r(&triple_sum), r(&cap)),
        InequalityStep::le("b", "n mean^3 <= sum kappa^3", n_mean_cubed.clone(), r(&sum3)),
        InequalityStep::eq(
            "c-expansion",
            "6 sum C(kappa,3) = sum kappa^3 - 3 sum kappa^2 + 2 sum kappa",
            r(&(&binom_sum * 6u32)),
            r(&(&sum3 - &sum2 * 3u32 + BigInt::from(t) * 2u32)),
        ),
        InequalityStep::le(
            "c",
            "(n mean^3 - 3 sum kappa^2) / 6 <= sum C(kappa,3)",
            (&n_mean_cubed - &three * r(&sum2)) / &six,
            r(&binom_sum),
        ),
        InequalityStep::le(
            "d",
            "n mean^3 <= 6 C(m,3) f + 3 sum kappa^2",
            n_mean_cubed,
            &six * r(&cap) + &three * r(&sum2),
        ),
    ];
    let holds = steps.iter().all(|st| st.holds);
    Ok(LemmaChainReport {
        ground_size: n,
        sets: m as usize,
        f,
        t,
        mean_degree: mean,
        sum_kappa_squared: sum2,
        sum_kappa_cubed: sum3,
        sum_binom_kappa_3: binom_sum,
        triple_intersection_sum: triple_sum,
        binom_m_3_times_f: cap,
        steps,
        holds,
    })
}

/// The dual system: element `l` becomes the set of indices of sets
/// containing it. The dual has `m` elements and `n` sets.
pub fn dual(s: &SetSystem) -> SetSystem {
    let mut t = vec![Vec::new(); s.ground_size];
    for (j, set) in s.sets.iter().enumerate() {
        for &x in set {
            t[x].push(j);
        }
    }
    SetSystem { ground_size: s.sets.len(), sets: t }
}

/// The seven lines of the Fano plane on points `0..7`.
pub fn fano() -> SetSystem {
    let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
    SetSystem::new(7, lines.iter().map(|l| l.to_vec()).collect()).unwrap()
}

#[derive(Clone, Debug, PartialEq)]
pub enum SystemKind {
    /// Each element joins each set independently with probability `p`.
    RandomUniform { n: usize, m: usize, p: f64, seed: u64 },
    /// The sets of `base` listed `r` times in turn.
    BlockRepeated { base: SetSystem, r: usize },
    Dual(SetSystem),
}

pub fn generate_system(kind: &SystemKind) -> Result<SetSystem> {
    match kind {
        SystemKind::RandomUniform { n, m, p, seed } => {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::InvalidParams(format!("probability {p} outside [0, 1]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let sets = (0..*m).map(|_| (0..*n).filter(|_| rng.random_bool(*p)).collect()).collect();
            SetSystem::new(*n, sets)
        }
        SystemKind::BlockRepeated { base, r } => {
            let sets = (0..*r).flat_map(|_| base.sets.iter().cloned()).collect();
            SetSystem::new(base.ground_size, sets)
        }
        SystemKind::Dual(s) => Ok(dual(s)),
    }
}

/// A 2-complex realizing a set system: a base graph whose edges are the
/// ground elements, and for each set a new apex coned over its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightnessComplex {
    pub complex: SimplicialComplex,
    /// `edges[l]` is the base edge identified with element `l`.
    pub edges: Vec<(VertexId, VertexId)>,
    /// `apexes[i]` is the vertex coned over set `i`.
    pub apexes: Vec<VertexId>,
}

/// Number of vertices `v` with `C(v, 2) = edges`, if any.
pub fn complete_graph_order(edges: usize) -> Option<usize> {
    let v = ((8 * edges + 1).sqrt() + 1) / 2;
    (v * (v - 1) / 2 == edges).then_some(v)
}

/// Builds the complex. Without an explicit identification the ground set
/// must have `C(v, 2)` elements, matched with the edges of `K_v` in
/// lexicographic order.
pub fn build_tightness_complex(
    s: &SetSystem,
    identification: Option<&[(VertexId, VertexId)]>,
) -> Result<TightnessComplex> {
    let edges: Vec<(VertexId, VertexId)> = match identification {
        Some(edges) => {
            if edges.len() != s.ground_size {
                return Err(Error::InvalidParams(format!(
                    "identification has {} edges for {} elements",
                    edges.len(),
                    s.ground_size
                )));
            }
            let mut seen = std::collections::BTreeSet::new();
            for &(a, b) in edges {
                if a == b || !seen.insert((a.min(b), a.max(b))) {
                    return Err(Error::InvalidParams(format!("identification is not injective at edge ({a}, {b})")));
                }
            }
            edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
        }
        None => {
            let v = complete_graph_order(s.ground_size).ok_or_else(|| {
                Error::InvalidParams(format!("{} elements is not the edge count of a complete graph", s.ground_size))
            })?;
            let v = v as VertexId;
            (0..v).flat_map(|i| (i + 1..v).map(move |j| (i, j))).collect()
        }
    };
    let first_apex = edges.iter().map(|&(_, b)| b + 1).max().unwrap_or(0);
    let apexes: Vec<VertexId> = (0..s.sets.len() as VertexId).map(|i| first_apex + i).collect();
    let mut simplices: Vec<Simplex> = edges.iter().map(|&(a, b)| Simplex::from_sorted(vec![a, b])).collect();
    for (set, &apex) in s.sets.iter().zip(&apexes) {
        simplices.push(Simplex::vertex(apex));
        for &l in set {
            let (a, b) = edges[l];
            simplices.push(Simplex::from_sorted(vec![a, b, apex]));
        }
    }
    Ok(TightnessComplex { complex: SimplicialComplex::from_simplices(simplices), edges, apexes })
}

/// Exponent `e(d) = d + 1 - 3^{-(d-1)}` in the face-count bound
/// `f_d(n) = O(n^{e(d)})` for d-complexes embeddable in `R^{2d}`.
pub fn fd_exponent(d: u32) -> Result<BigRational> {
    if d == 0 {
        return Err(Error::InvalidParams("dimension must be at least 1".into()));
    }
    let three_pow = BigInt::from(3).pow(d - 1);
    Ok(BigRational::from_integer(BigInt::from(d + 1)) - BigRational::new(BigInt::one(), three_pow))
}

/// Largest dimension for which [`bound_fd`] evaluates `n^{e(d)}`; beyond it
/// the integer root becomes unreasonably large.
pub const MAX_EVALUATED_DIMENSION: u32 = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FdBound {
    pub d: u32,
    pub n: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub exponent: BigRational,
    /// `⌈n^{e(d)}⌉`.
    #[serde(serialize_with = "serialize_bigint")]
    pub ceiling: BigInt,
}

pub fn bound_fd(n: u64, d: u32) -> Result<FdBound> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be at least 1".into()));
    }
    if d > MAX_EVALUATED_DIMENSION {
        return Err(Error::InvalidParams(format!("d = {d} exceeds {MAX_EVALUATED_DIMENSION}")));
    }
    let exponent = fd_exponent(d)?;
    let p = exponent.numer().to_string().parse::<u32>().expect("small numerator");
    let q = exponent.denom().to_string().parse::<u32>().expect("small denominator");
    let target = BigInt::from(n).pow(p);
    let mut root = target.nth_root(q);
    if root.clone().pow(q) < target {
        root += 1;
    }
    Ok(FdBound { d, n, exponent, ceiling: root })
}

/// A term `c^a n^b` of the unrolled recursion
/// `φ_d(n) <= c n^{1 + 2d/3} φ_{d-1}(n)^{1/3}` with `φ_1(n) <= c n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursionTerm {
    pub d: u32,
    #[serde(serialize_with = "serialize_rational")]
    pub c_exponent: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub n_exponent: BigRational,
}

impl RecursionTerm {
    /// Numeric value for a concrete constant `c`.
    pub fn evaluate(&self, c: f64, n: f64) -> f64 {
        let to_f64 = |r: &BigRational| r.numer().to_string().parse::<f64>().unwrap() / r.denom().to_string().parse::<f64>().unwrap();
        c.powf(to_f64(&self.c_exponent)) * n.powf(to_f64(&self.n_exponent))
    }
}

/// Unrolls the recursion symbolically from dimension 1 up to `d`.
pub fn unroll_recursion(d: u32) -> Result<Vec<RecursionTerm>> {
    if d == 0 {
        return Err(Error::InvalidParams("dimension must be at least 1".into()));
    }
    let one = BigRational::one();
    let third = BigRational::new(1.into(), 3.into());
    let mut terms = vec![RecursionTerm { d: 1, c_exponent: one.clone(), n_exponent: one.clone() }];
    for k in 2..=d {
        let prev = terms.last().unwrap();
        let step = &one + BigRational::new((2 * k).into(), 3.into());
        terms.push(RecursionTerm {
            d: k,
            c_exponent: &one + &prev.c_exponent * &third,
            n_exponent: step + &prev.n_exponent * &third,
        });
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(n: usize, sets: &[&[usize]]) -> SetSystem {
        SetSystem::new(n, sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    #[test]
    fn sizes_and_degrees() {
        assert_eq!(t_of(&sys(3, &[&[], &[]])), 0);
        let tri = sys(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(t_of(&tri), 6);
        assert_eq!(tri.degrees().iter().sum::<u64>(), 6);
        assert_eq!(tri.degree_profile().mean, BigRational::from_integer(2.into()));
        assert!(SetSystem::new(2, vec![vec![2]]).is_err());
    }

    #[test]
    fn triple_identity_examples() {
        let same = sys(4, &[&[0, 1, 2, 3][..]; 3]);
        let id = verify_triple_identity(&same);
        assert_eq!((id.lhs.clone(), id.rhs.clone()), (4.into(), 4.into()));
        let disjoint = sys(6, &[&[0, 1], &[2, 3], &[4, 5]]);
        assert!(verify_triple_identity(&disjoint).lhs.is_zero());
    }

    #[test]
    fn fano_chain_holds() {
        let r = verify_lemma_chain(&fano(), 1).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.t, 21);
        assert_eq!(r.triple_intersection_sum, BigInt::from(7));
        let err = verify_lemma_chain(&generate_system(&SystemKind::BlockRepeated { base: fano(), r: 3 }).unwrap(), 1);
        assert!(matches!(err, Err(Error::TripleBoundViolated { .. })));
    }

    #[test]
    fn identical_sets_make_step_a_tight() {
        let same = sys(5, &[&[0, 1, 2, 3][..]; 3]);
        let r = verify_lemma_chain(&same, 4).unwrap();
        assert!(r.holds);
        let a = r.steps.iter().find(|s| s.name == "a").unwrap();
        assert_eq!(a.left, a.right);
        assert!(verify_lemma_chain(&sys(3, &[&[0, 1]]), 0).unwrap().holds);
    }

    #[test]
    fn duality() {
        let s = sys(2, &[&[0, 1], &[1]]);
        assert_eq!(dual(&s).sets(), &[vec![0], vec![0, 1]]);
        assert_eq!(dual(&dual(&s)), s);
        let r = generate_system(&SystemKind::RandomUniform { n: 20, m: 9, p: 0.3, seed: 5 }).unwrap();
        assert_eq!(t_of(&dual(&r)), t_of(&r));
    }

    #[test]
    fn repeated_fano_triples() {
        let s = generate_system(&SystemKind::BlockRepeated { base: fano(), r: 3 }).unwrap();
        let d = dual(&s);
        // Every triple of points lies in at most three of the sets.
        assert_eq!(max_triple_intersection(&d).unwrap().1, 3);
    }

    #[test]
    fn exponents() {
        let e = |d| fd_exponent(d).unwrap();
        assert_eq!(e(1), BigRational::from_integer(1.into()));
        assert_eq!(e(2), BigRational::new(8.into(), 3.into()));
        assert_eq!(e(3), BigRational::new(35.into(), 9.into()));
        assert!(fd_exponent(0).is_err());
        assert_eq!(bound_fd(8, 2).unwrap().ceiling, BigInt::from(256));
        assert_eq!(bound_fd(10, 2).unwrap().ceiling, BigInt::from(465));
        for (term, d) in unroll_recursion(5).unwrap().iter().zip(1..) {
            assert_eq!(term.n_exponent, e(d));
        }
    }

    #[test]
    fn tightness_complex_links() {
        let single = build_tightness_complex(&sys(1, &[&[0]]), None).unwrap();
        assert_eq!(single.complex.facets().len(), 1);
        assert_eq!(single.complex.f_vector().get(2), 1);

        // Three copies of the K5 edges inside K6.
        let k5: Vec<usize> = (0..15).filter(|&l| single_edge(l).1 < 5).collect();
        let s = SetSystem::new(15, vec![k5.clone(), k5.clone(), k5]).unwrap();
        let t = build_tightness_complex(&s, None).unwrap();
        let [a, b, c] = [t.apexes[0], t.apexes[1], t.apexes[2]];
        let l = crate::scan::triple_link_intersection(&t.complex, a, b, c).unwrap();
        assert_eq!(l.f_vector().0, vec![5, 10]);
        assert_eq!(t.complex.f_vector().get(2), t_of(&s));
        assert!(build_tightness_complex(&sys(2, &[&[0]]), Some(&[(0, 1), (1, 0)])).is_err());
        assert!(build_tightness_complex(&sys(2, &[&[0]]), None).is_err());
    }

    fn single_edge(l: usize) -> (usize, usize) {
        let mut i = 0;
        for a in 0..6 {
            for b in a + 1..6 {
                if i == l {
                    return (a, b);
                }
                i += 1;
            }
        }
        unreachable!()
    }

    #[test]
    fn text_format_round_trips() {
        let s = sys(4, &[&[0, 3], &[], &[1]]);
        assert_eq!(parse_set_system(&s.to_string()).unwrap(), s);
        assert!(matches!(parse_set_system("3 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_set_system("3 2\n0\n").is_err());
    }
}
