//! Simplicial chains with integer coefficients.
//!
//! Orientation convention: an ordered vertex sequence `p_0 p_1 ... p_k` has
//! sign `+1` relative to the increasing order when it is an even permutation
//! of it. The boundary is `∂[p_0 ... p_k] = Σ_i (-1)^i [p_0 ... p̂_i ... p_k]`,
//! so dropping the first vertex of `v p_0 ... p_k` gives a positively oriented
//! face. With this convention the cone `v·c` over a cycle `c` satisfies
//! `∂(v·c) = c`, and in general `∂(v·c) = c - v·∂c`.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{Simplex, VertexId};
use crate::error::{Error, Result};

/// A simplex with a chosen orientation relative to its increasing vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedSimplex {
    pub base: Simplex,
    pub sign: i8,
}

impl OrientedSimplex {
    /// Orients the simplex by the given vertex sequence.
    pub fn from_sequence(seq: &[VertexId]) -> Result<Self> {
        let base = Simplex::new(seq.to_vec())?;
        Ok(OrientedSimplex { base, sign: permutation_sign(seq) })
    }

    pub fn positive(base: Simplex) -> Self {
        OrientedSimplex { base, sign: 1 }
    }
}

/// Parity of the permutation sorting `seq` (which must have distinct entries).
pub fn permutation_sign(seq: &[VertexId]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A formal integer combination of equal-dimensional oriented simplices.
///
/// Degree `-1` is used for the zero chain produced by taking the boundary of
/// a 0-chain.
#[derive(Clone, PartialEq, Eq)]
pub struct Chain {
    degree: isize,
    terms: BTreeMap<Simplex, i64>,
}

impl Chain {
    pub fn zero(degree: isize) -> Self {
        Chain { degree, terms: BTreeMap::new() }
    }

    /// Sums the given (oriented simplex, coefficient) pairs.
    pub fn from_terms<I>(degree: isize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (OrientedSimplex, i64)>,
    {
        let mut c = Chain::zero(degree);
        for (s, coef) in terms {
            c.add_term(s, coef)?;
        }
        Ok(c)
    }

    /// Chain of a single oriented simplex given by a vertex sequence.
    pub fn simplex(seq: &[VertexId]) -> Result<Self> {
        let s = OrientedSimplex::from_sequence(seq)?;
        let degree = s.base.dim() as isize;
        Chain::from_terms(degree, [(s, 1)])
    }

    pub fn add_term(&mut self, s: OrientedSimplex, coef: i64) -> Result<()> {
        let found = s.base.dim() as isize;
        if found != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found });
        }
        let value = coef * s.sign as i64;
        let entry = self.terms.entry(s.base).or_insert(0);
        *entry += value;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficients keyed by the increasingly ordered simplex.
    pub fn terms(&self) -> &BTreeMap<Simplex, i64> {
        &self.terms
    }

    pub fn coefficient(&self, s: &Simplex) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    pub fn scale(&self, k: i64) -> Chain {
        if k == 0 {
            return Chain::zero(self.degree);
        }
        Chain { degree: self.degree, terms: self.terms.iter().map(|(s, c)| (s.clone(), c * k)).collect() }
    }

    pub fn add(&self, other: &Chain) -> Result<Chain> {
        if self.degree != other.degree && !(self.is_zero() || other.is_zero()) {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut terms = self.terms.clone();
        for (s, c) in &other.terms {
            *terms.entry(s.clone()).or_insert(0) += c;
        }
        terms.retain(|_, c| *c != 0);
        Ok(Chain { degree, terms })
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.terms.keys().flat_map(|s| s.vertices().iter().copied())
    }

    /// Alternating-sign boundary. The boundary of a 0-chain is the zero chain
    /// of degree −1.
    pub fn boundary(&self) -> Chain {
        let mut out = Chain::zero(self.degree - 1);
        if self.degree <= 0 {
            return out;
        }
        for (s, &coef) in &self.terms {
            let vs = s.vertices();
            for i in 0..vs.len() {
                let face: Vec<VertexId> = vs.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                let sign = if i % 2 == 0 { 1 } else { -1 };
                *out.terms.entry(Simplex::from_sorted(face)).or_insert(0) += sign * coef;
            }
        }
        out.terms.retain(|_, c| *c != 0);
        out
    }

    pub fn is_cycle(&self) -> bool {
        self.boundary().is_zero()
    }

    /// The cone `v·c`: each `σ = p_0 ... p_k` becomes `v p_0 ... p_k`.
    pub fn cone(&self, v: VertexId) -> Result<Chain> {
        if self.vertices().any(|w| w == v) {
            return Err(Error::ApexInChain(v));
        }
        let mut out = Chain::zero(self.degree + 1);
        for (s, &coef) in &self.terms {
            // Moving v from the front to its sorted position passes over the
            // vertices smaller than it.
            let pos = s.vertices().iter().take_while(|&&w| w < v).count();
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            let mut vs = s.vertices().to_vec();
            vs.insert(pos, v);
            out.terms.insert(Simplex::from_sorted(vs), sign * coef);
        }
        Ok(out)
    }
}

/// Free-function form of [`Chain::cone`].
pub fn cone_chain(v: VertexId, c: &Chain) -> Result<Chain> {
    c.cone(v)
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| format!("{c}·{s:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
