//! Obstruction scans over triple intersections of vertex links.
//!
//! If three vertices `u, v, w` of a complex `K` have a subcomplex `X` in the
//! intersection of their links, then `X * {u, v, w}` lies in `K`. Descending
//! through triple intersections therefore turns a small forbidden graph at
//! the bottom into a forbidden join at the top:
//!
//! - `embed-2d`: `K5 * [3] * ... * [3]` (`d - 1` factors of `[3]`) does not
//!   embed in `R^{2d}`, so the descent ends in graphs that must not contain a
//!   subdivided `K5`. For 2-complexes the test is full planarity, which also
//!   catches `[3] * [3] * [3]`. In higher dimensions `[3] * ... * [3]` is left
//!   to `linkless-2d+1`.
//! - `linkless-2d+1`: `[3] * ... * [3]` (`d + 1` factors) has no linkless
//!   embedding in `R^{2d+1}`, so the bottom graphs must not contain a
//!   subdivided `K3,3`. A subdivided `K6` contains one, so it is caught too.
//! - `embed-3`: every vertex link of a 2-complex in `R^3` is planar.
//!
//! All of these are necessary conditions. A passing scan means only that no
//! obstruction was found.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::complex::{SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::graph::{has_subdivision, is_planar, Graph, MinorWitness, PatternGraph, SearchOptions, SearchOutcome};

/// Wording used for a passing scan.
pub const PASS_SUMMARY: &str = "no obstruction found (necessary conditions hold)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ScanMode {
    /// Embedding a d-complex in `R^{2d}`.
    #[serde(rename = "embed-2d")]
    Embed2d,
    /// Linkless embedding of a d-complex in `R^{2d+1}`.
    #[serde(rename = "linkless-2d+1")]
    Linkless,
    /// Embedding a 2-complex in `R^3`.
    #[serde(rename = "embed-3")]
    Embed3,
}

impl ScanMode {
    pub fn name(self) -> &'static str {
        match self {
            ScanMode::Embed2d => "embed-2d",
            ScanMode::Linkless => "linkless-2d+1",
            ScanMode::Embed3 => "embed-3",
        }
    }
}

impl std::str::FromStr for ScanMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "embed-2d" => Ok(ScanMode::Embed2d),
            "linkless-2d+1" | "linkless" => Ok(ScanMode::Linkless),
            "embed-3" => Ok(ScanMode::Embed3),
            other => Err(Error::InvalidParams(format!("unknown scan mode {other:?}"))),
        }
    }
}

impl std::fmt::Display for ScanMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Obstruction,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanStatistics {
    /// Triples (or single vertices in `embed-3`) whose intersection was
    /// computed, over all recursion levels.
    pub triples_scanned: u64,
    /// Deepest recursion level reached; the top-level triples are level 1.
    pub max_depth: usize,
    pub max_intersection_vertices: usize,
    pub max_intersection_facets: usize,
    pub elapsed_ms: u64,
}

impl ScanStatistics {
    fn absorb(&mut self, other: &ScanStatistics) {
        self.triples_scanned += other.triples_scanned;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.max_intersection_vertices = self.max_intersection_vertices.max(other.max_intersection_vertices);
        self.max_intersection_facets = self.max_intersection_facets.max(other.max_intersection_facets);
    }

    fn record(&mut self, depth: usize, l: &SimplicialComplex) {
        self.triples_scanned += 1;
        self.max_depth = self.max_depth.max(depth);
        self.max_intersection_vertices = self.max_intersection_vertices.max(l.num_vertices());
        self.max_intersection_facets = self.max_intersection_facets.max(l.facets().len());
    }
}

/// Result of a scan. When the verdict is an obstruction, replaying
/// `witness_chain` from the input complex (see [`replay`]) reproduces
/// `terminal_witness` in the final graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub mode: ScanMode,
    pub dimension: usize,
    pub verdict: Verdict,
    pub summary: String,
    /// Vertex triples descended through, outermost first. In `embed-3` the
    /// chain is the single vertex whose link failed.
    pub witness_chain: Vec<Vec<VertexId>>,
    pub terminal_pattern: Option<PatternGraph>,
    pub terminal_witness: Option<MinorWitness>,
    pub statistics: ScanStatistics,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ScanOptions {
    /// Budget for each graph-level subdivision search.
    pub budget: Budget,
    /// Scan triples on the rayon pool. Results do not depend on this.
    pub parallel: bool,
}

impl ScanOptions {
    pub fn sequential() -> Self {
        ScanOptions { budget: Budget::default(), parallel: false }
    }
}

/// Intersection of the links of three distinct vertices.
pub fn triple_link_intersection(k: &SimplicialComplex, u: VertexId, v: VertexId, w: VertexId) -> Result<SimplicialComplex> {
    if u == v || v == w || u == w {
        return Err(Error::NonDistinctVertices(vec![u, v, w]));
    }
    let lu = k.link(u)?;
    let lv = k.link(v)?;
    let lw = k.link(w)?;
    Ok(lu.intersection(&lv).intersection(&lw))
}

enum Level {
    Pass,
    Obstruction { chain: Vec<Vec<VertexId>>, pattern: PatternGraph, witness: MinorWitness },
    Inconclusive(String),
}

struct Outcome {
    level: Level,
    stats: ScanStatistics,
}

/// Runs the obstruction scan for `mode`.
pub fn scan(k: &SimplicialComplex, mode: ScanMode, opts: &ScanOptions) -> Result<ObstructionReport> {
    let start = Instant::now();
    let d = k.dim().ok_or(Error::EmptyComplex)?;
    match mode {
        ScanMode::Embed3 if d != 2 => {
            return Err(Error::DimensionMismatch(format!("embed-3 scans 2-complexes, got dimension {d}")));
        }
        ScanMode::Embed2d | ScanMode::Linkless if d < 2 => {
            return Err(Error::DimensionMismatch(format!("{mode} scans need dimension at least 2, got {d}")));
        }
        _ => {}
    }
    let outcome = match mode {
        ScanMode::Embed3 => scan_vertex_links(k, opts),
        _ => scan_triples(k, d, d, mode, 1, opts),
    };
    let mut statistics = outcome.stats;
    statistics.elapsed_ms = start.elapsed().as_millis() as u64;
    let report = match outcome.level {
        Level::Pass => ObstructionReport {
            mode,
            dimension: d,
            verdict: Verdict::Pass,
            summary: PASS_SUMMARY.to_string(),
            witness_chain: Vec::new(),
            terminal_pattern: None,
            terminal_witness: None,
            statistics,
        },
        Level::Obstruction { chain, pattern, witness } => ObstructionReport {
            mode,
            dimension: d,
            verdict: Verdict::Obstruction,
            summary: format!("obstruction: subdivided {pattern} after {} level(s)", chain.len()),
            witness_chain: chain,
            terminal_pattern: Some(pattern),
            terminal_witness: Some(witness),
            statistics,
        },
        Level::Inconclusive(reason) => ObstructionReport {
            mode,
            dimension: d,
            verdict: Verdict::Inconclusive,
            summary: format!("inconclusive: {reason}"),
            witness_chain: Vec::new(),
            terminal_pattern: None,
            terminal_witness: None,
            statistics,
        },
    };
    Ok(report)
}

/// Evaluates `f` on each item and returns the outcome of the first item (in
/// order) that is an obstruction, or else a pass/inconclusive summary.
/// Statistics cover exactly the items up to that first obstruction, so they
/// are the same as for a sequential run.
fn first_obstruction<T, F>(items: &[T], parallel: bool, f: F) -> Outcome
where
    T: Sync,
    F: Fn(&T) -> Outcome + Sync,
{
    let best = AtomicUsize::new(usize::MAX);
    let eval = |(i, item): (usize, &T)| -> Option<Outcome> {
        if i > best.load(Ordering::Relaxed) {
            return None;
        }
        let out = f(item);
        if matches!(out.level, Level::Obstruction { .. }) {
            best.fetch_min(i, Ordering::Relaxed);
        }
        Some(out)
    };
    let results: Vec<Option<Outcome>> = if parallel {
        items.par_iter().enumerate().map(eval).collect()
    } else {
        let mut out = Vec::with_capacity(items.len());
        for pair in items.iter().enumerate() {
            let r = eval(pair);
            let stop = matches!(r, Some(Outcome { level: Level::Obstruction { .. }, .. }));
            out.push(r);
            if stop {
                break;
            }
        }
        out
    };

    let mut stats = ScanStatistics::default();
    let mut inconclusive = None;
    for r in results.into_iter().flatten() {
        stats.absorb(&r.stats);
        match r.level {
            Level::Obstruction { .. } => return Outcome { level: r.level, stats },
            Level::Inconclusive(reason) => {
                inconclusive.get_or_insert(reason);
            }
            Level::Pass => {}
        }
    }
    let level = match inconclusive {
        Some(reason) => Level::Inconclusive(reason),
        None => Level::Pass,
    };
    Outcome { level, stats }
}

fn scan_vertex_links(k: &SimplicialComplex, opts: &ScanOptions) -> Outcome {
    let vertices: Vec<VertexId> = k.vertices().iter().copied().collect();
    first_obstruction(&vertices, opts.parallel, |&v| {
        let link = k.link(v).expect("vertex of the complex");
        let mut stats = ScanStatistics::default();
        stats.record(1, &link);
        let graph = Graph::one_skeleton(&link);
        let planarity = is_planar(&graph);
        let level = match planarity.witness {
            Some(witness) if !planarity.planar => {
                Level::Obstruction { chain: vec![vec![v]], pattern: witness.pattern(), witness }
            }
            _ => Level::Pass,
        };
        Outcome { level, stats }
    })
}

/// Triples `u < v < w` whose links pairwise share a vertex.
fn candidate_triples(k: &SimplicialComplex) -> (Vec<[VertexId; 3]>, Vec<SimplicialComplex>, Vec<VertexId>) {
    let vertices: Vec<VertexId> = k.vertices().iter().copied().collect();
    let links: Vec<SimplicialComplex> = vertices.iter().map(|&v| k.link(v).expect("vertex of the complex")).collect();
    let n = vertices.len();
    let meets = |a: usize, b: usize| !links[a].vertices().is_disjoint(links[b].vertices());
    let mut triples = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !meets(a, b) {
                continue;
            }
            for c in b + 1..n {
                if meets(a, c) && meets(b, c) {
                    triples.push([a as VertexId, b as VertexId, c as VertexId]);
                }
            }
        }
    }
    (triples, links, vertices)
}

/// Graph-level test at the bottom of the descent.
fn terminal_test(mode: ScanMode, top_dim: usize, graph: &Graph, opts: &ScanOptions) -> std::result::Result<Option<MinorWitness>, String> {
    let search = SearchOptions::with_budget(opts.budget);
    let pattern = match mode {
        ScanMode::Embed2d if top_dim == 2 => {
            let p = is_planar(graph);
            return Ok(if p.planar { None } else { p.witness });
        }
        ScanMode::Embed2d => PatternGraph::K5,
        _ => PatternGraph::K33,
    };
    match has_subdivision(graph, pattern, &search) {
        SearchOutcome::Found { witness } => Ok(Some(witness)),
        SearchOutcome::NotFound => Ok(None),
        SearchOutcome::Inconclusive { reason } => Err(reason),
    }
}

/// Scans a complex whose dimension is `d` at recursion level `depth`.
/// Triple intersections have dimension at most `d - 1`; those of lower
/// dimension cannot carry the forbidden join and are passed.
fn scan_triples(k: &SimplicialComplex, d: usize, top_dim: usize, mode: ScanMode, depth: usize, opts: &ScanOptions) -> Outcome {
    let (triples, links, vertices) = candidate_triples(k);
    first_obstruction(&triples, opts.parallel, |t| {
        let [a, b, c] = t.map(|i| i as usize);
        let l = links[a].intersection(&links[b]).intersection(&links[c]);
        let chain_head = vec![vertices[a], vertices[b], vertices[c]];
        let mut stats = ScanStatistics::default();
        stats.record(depth, &l);
        if l.dim() != Some(d - 1) {
            return Outcome { level: Level::Pass, stats };
        }
        let level = if d - 1 == 1 {
            let graph = Graph::one_skeleton(&l);
            match terminal_test(mode, top_dim, &graph, opts) {
                Ok(Some(witness)) => Level::Obstruction { chain: vec![chain_head], pattern: witness.pattern(), witness },
                Ok(None) => Level::Pass,
                Err(reason) => Level::Inconclusive(format!("triple {chain_head:?}: {reason}")),
            }
        } else {
            let inner = scan_triples(&l, d - 1, top_dim, mode, depth + 1, opts);
            stats.absorb(&inner.stats);
            match inner.level {
                Level::Obstruction { mut chain, pattern, witness } => {
                    chain.insert(0, chain_head);
                    Level::Obstruction { chain, pattern, witness }
                }
                other => other,
            }
        };
        Outcome { level, stats }
    })
}

/// Re-derives the terminal graph of an obstruction report from `k` and
/// checks the recorded witness against it.
pub fn replay(k: &SimplicialComplex, report: &ObstructionReport) -> Result<()> {
    if report.verdict != Verdict::Obstruction {
        return Err(Error::Precondition("only obstruction reports can be replayed".into()));
    }
    let witness = report
        .terminal_witness
        .as_ref()
        .ok_or_else(|| Error::Precondition("report has no terminal witness".into()))?;
    let mut current = k.clone();
    for step in &report.witness_chain {
        current = match step.as_slice() {
            [v] if report.mode == ScanMode::Embed3 => current.link(*v)?,
            [u, v, w] if report.mode != ScanMode::Embed3 => triple_link_intersection(&current, *u, *v, *w)?,
            other => return Err(Error::Precondition(format!("malformed witness chain step {other:?}"))),
        };
    }
    let expected: &[PatternGraph] = match report.mode {
        ScanMode::Embed3 => &[PatternGraph::K5, PatternGraph::K33],
        ScanMode::Embed2d if report.dimension == 2 => &[PatternGraph::K5, PatternGraph::K33],
        ScanMode::Embed2d => &[PatternGraph::K5],
        ScanMode::Linkless => &[PatternGraph::K33],
    };
    if !expected.contains(&witness.pattern()) {
        return Err(Error::Precondition(format!("pattern {} does not fit mode {}", witness.pattern(), report.mode)));
    }
    let graph = Graph::one_skeleton(&current);
    witness.validate(&graph).map_err(Error::Precondition)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleBoundCheck {
    pub vertices: u64,
    pub triangles: u64,
    /// `n^2 - 3n`; negative for `n < 3`.
    pub bound: i64,
    pub within: bool,
}

/// Compares the triangle count of a 2-complex with `n^2 - 3n`. The bound is
/// asymptotic in spirit and fails for tiny complexes; that is reported, not
/// treated as an error.
pub fn max_triangles_bound_check(k: &SimplicialComplex) -> Result<TriangleBoundCheck> {
    let d = k.dim().ok_or(Error::EmptyComplex)?;
    if d != 2 {
        return Err(Error::DimensionMismatch(format!("triangle bound applies to 2-complexes, got dimension {d}")));
    }
    let n = k.num_vertices() as i64;
    let triangles = k.faces_of_dim(2).len() as u64;
    let bound = n * n - 3 * n;
    Ok(TriangleBoundCheck { vertices: n as u64, triangles, bound, within: (triangles as i64) <= bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Simplex;

    fn complete(n: VertexId, dim: usize) -> SimplicialComplex {
        let full = Simplex::new((0..n).collect()).unwrap();
        SimplicialComplex::closure(full.subsets_of_size(dim + 1)).unwrap()
    }

    fn points(n: VertexId) -> SimplicialComplex {
        SimplicialComplex::closure((0..n).map(Simplex::vertex)).unwrap()
    }

    #[test]
    fn triple_intersection_of_grunbaum_join() {
        let (k, map) = complete(5, 1).join(&points(3));
        let apexes: Vec<VertexId> = map.values().copied().collect();
        let l = triple_link_intersection(&k, apexes[0], apexes[1], apexes[2]).unwrap();
        assert_eq!(l, complete(5, 1));
        assert!(triple_link_intersection(&k, 0, 0, 1).is_err());
    }

    #[test]
    fn grunbaum_join_is_obstructed() {
        let (k, _) = complete(5, 1).join(&points(3));
        let report = scan(&k, ScanMode::Embed2d, &ScanOptions::sequential()).unwrap();
        assert_eq!(report.verdict, Verdict::Obstruction);
        assert_eq!(report.witness_chain, vec![vec![5, 6, 7]]);
        replay(&k, &report).unwrap();
    }

    #[test]
    fn wrong_dimension_is_an_error() {
        assert!(scan(&complete(4, 1), ScanMode::Embed2d, &ScanOptions::sequential()).is_err());
        assert!(scan(&complete(5, 3), ScanMode::Embed3, &ScanOptions::sequential()).is_err());
        assert!(max_triangles_bound_check(&complete(4, 1)).is_err());
    }

    #[test]
    fn single_triangle_fails_the_asymptotic_bound() {
        let c = max_triangles_bound_check(&complete(3, 2)).unwrap();
        assert_eq!((c.triangles, c.bound, c.within), (1, 0, false));
    }

    #[test]
    fn staircase_skeleton_is_within_the_triangle_bound() {
        let k = crate::constructions::staircase_complex(6, 6).unwrap().skeleton(2).unwrap();
        let c = max_triangles_bound_check(&k).unwrap();
        assert_eq!((c.vertices, c.triangles, c.bound, c.within), (12, 60, 108, true));
        assert_eq!(scan(&k, ScanMode::Embed3, &ScanOptions::sequential()).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let (k, _) = complete(5, 1).join(&points(3));
        let (k, _) = k.join(&points(3));
        for mode in [ScanMode::Embed2d, ScanMode::Linkless] {
            let mut a = scan(&k, mode, &ScanOptions::sequential()).unwrap();
            let mut b = scan(&k, mode, &ScanOptions { parallel: true, ..Default::default() }).unwrap();
            a.statistics.elapsed_ms = 0;
            b.statistics.elapsed_ms = 0;
            assert_eq!(a, b);
        }
    }
}
