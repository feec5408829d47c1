//! Exact branch-and-bound searches for fixed patterns as topological minors
//! (subdivisions) and as minors.
//!
//! Both searches work on hosts of at most [`SEARCH_VERTEX_LIMIT`] vertices
//! (after reduction) using `u128` vertex masks, and both give up with
//! [`SearchOutcome::Inconclusive`] when the budget runs out.
//!
//! Host reductions used here are exact for patterns of minimum degree three,
//! which covers every [`PatternGraph`]:
//! - vertices of degree at most one never help (either search);
//! - a degree-two vertex can be contracted into a neighbour without losing a
//!   minor model (minor search only).

use std::collections::BTreeSet;

use rustc_hash::{FxHashMap, FxHashSet};

use serde::Serialize;

use super::{is_planar_bool, Graph, MinorWitness, PatternGraph, SEARCH_VERTEX_LIMIT};
use crate::budget::{Budget, Exhausted, Meter};
use crate::complex::VertexId;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: Budget,
    /// Enables shortcuts that rely on planarity and edge counts. Disabling
    /// them leaves a pure exhaustive search, used to cross-check the filters.
    pub prefilter: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: Budget::default(), prefilter: true }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: Budget) -> Self {
        SearchOptions { budget, prefilter: true }
    }

    pub fn exhaustive(budget: Budget) -> Self {
        SearchOptions { budget, prefilter: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found { witness: MinorWitness },
    NotFound,
    Inconclusive { reason: String },
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        matches!(self, SearchOutcome::Found { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, SearchOutcome::Inconclusive { .. })
    }

    pub fn witness(&self) -> Option<&MinorWitness> {
        match self {
            SearchOutcome::Found { witness } => Some(witness),
            _ => None,
        }
    }
}

const BUDGET_EXHAUSTED: &str = "search budget exhausted";

fn too_large(n: usize) -> SearchOutcome {
    SearchOutcome::Inconclusive {
        reason: format!("host has {n} vertices after reduction; exhaustive limit is {SEARCH_VERTEX_LIMIT}"),
    }
}

#[inline]
fn bit(i: usize) -> u128 {
    1u128 << i
}

fn iter_bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Host indices surviving iterated deletion of vertices of degree ≤ 1.
fn two_core(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&i| deg[i] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 {
                    stack.push(w);
                }
            }
        }
    }
    (0..n).filter(|&i| alive[i]).collect()
}

fn degree_dominates(host_degrees: &mut [usize], pattern: &Graph) -> bool {
    let mut pd: Vec<usize> = (0..pattern.order()).map(|i| pattern.degree(i)).collect();
    pd.sort_unstable_by(|a, b| b.cmp(a));
    host_degrees.sort_unstable_by(|a, b| b.cmp(a));
    host_degrees.len() >= pd.len() && pd.iter().zip(host_degrees.iter()).all(|(p, h)| h >= p)
}

/// Order for placing pattern vertices: highest degree first, then the vertex
/// with most already-placed neighbours.
fn pattern_order(p: &Graph) -> Vec<usize> {
    let n = p.order();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (p.neighbors(v).iter().filter(|&&w| placed[w]).count(), p.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

// ---------------------------------------------------------------------------
// Subdivisions
// ---------------------------------------------------------------------------

/// Whether `g` contains a subdivision of `pattern` as a subgraph.
pub fn has_subdivision(g: &Graph, pattern: PatternGraph, opts: &SearchOptions) -> SearchOutcome {
    let core = two_core(g);
    let host = g.induced(&core);
    let pg = pattern.graph();
    let mut degrees: Vec<usize> = (0..host.order()).map(|i| host.degree(i)).collect();
    if !degree_dominates(&mut degrees, &pg) {
        return SearchOutcome::NotFound;
    }
    if opts.prefilter && (host.size() < pg.size() || is_planar_bool(&host)) {
        return SearchOutcome::NotFound;
    }
    if host.order() > SEARCH_VERTEX_LIMIT {
        return too_large(host.order());
    }
    let mut search = SubdivisionSearch::new(&host, pattern, opts.budget.meter());
    match search.place(0) {
        Ok(true) => {
            let branch: Vec<VertexId> = search.image.iter().map(|&i| host.label(i)).collect();
            let paths = search
                .paths
                .iter()
                .map(|p| p.as_ref().expect("all edges routed").iter().map(|&i| host.label(i)).collect())
                .collect();
            SearchOutcome::Found { witness: MinorWitness::Subdivision { pattern, branch, paths } }
        }
        Ok(false) => SearchOutcome::NotFound,
        Err(Exhausted) => SearchOutcome::Inconclusive { reason: BUDGET_EXHAUSTED.into() },
    }
}

struct SubdivisionSearch {
    adj: Vec<u128>,
    degree: Vec<usize>,
    pattern: Graph,
    pattern_edges: Vec<(usize, usize)>,
    order: Vec<usize>,
    groups: Vec<Vec<usize>>,
    swap_groups: bool,
    image: Vec<usize>,
    used: u128,
    paths: Vec<Option<Vec<usize>>>,
    meter: Meter,
}

impl SubdivisionSearch {
    fn new(host: &Graph, pattern: PatternGraph, meter: Meter) -> Self {
        let n = host.order();
        let adj = (0..n).map(|i| host.neighbors(i).iter().fold(0u128, |m, &j| m | bit(j))).collect();
        let pg = pattern.graph();
        let (groups, swap_groups) = pattern.symmetry();
        SubdivisionSearch {
            adj,
            degree: (0..n).map(|i| host.degree(i)).collect(),
            pattern_edges: pattern.edges().iter().map(|&(a, b)| (a as usize, b as usize)).collect(),
            order: pattern_order(&pg),
            image: vec![usize::MAX; pg.order()],
            paths: vec![None; pattern.edges().len()],
            pattern: pg,
            groups,
            swap_groups,
            used: 0,
            meter,
        }
    }

    fn symmetry_ok(&self, p: usize, cand: usize) -> bool {
        for g in &self.groups {
            if !g.contains(&p) {
                continue;
            }
            for &q in g {
                let iq = self.image[q];
                if q == p || iq == usize::MAX {
                    continue;
                }
                if (q < p && iq > cand) || (q > p && iq < cand) {
                    return false;
                }
            }
        }
        if self.swap_groups && self.groups.len() >= 2 {
            let (a, b) = (self.groups[0][0], self.groups[1][0]);
            let ia = if p == a { cand } else { self.image[a] };
            let ib = if p == b { cand } else { self.image[b] };
            if ia != usize::MAX && ib != usize::MAX && ia > ib {
                return false;
            }
        }
        true
    }

    fn place(&mut self, depth: usize) -> Result<bool, Exhausted> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let p = self.order[depth];
        let need = self.pattern.degree(p);
        let edges: Vec<usize> = (0..self.pattern_edges.len())
            .filter(|&e| {
                let (a, b) = self.pattern_edges[e];
                (a == p && self.image[b] != usize::MAX) || (b == p && self.image[a] != usize::MAX)
            })
            .collect();
        for cand in 0..self.adj.len() {
            if self.used & bit(cand) != 0 || self.degree[cand] < need || !self.symmetry_ok(p, cand) {
                continue;
            }
            self.meter.tick()?;
            self.image[p] = cand;
            self.used |= bit(cand);
            if self.route(&edges, 0, depth)? {
                return Ok(true);
            }
            self.used &= !bit(cand);
            self.image[p] = usize::MAX;
        }
        Ok(false)
    }

    fn route(&mut self, edges: &[usize], i: usize, depth: usize) -> Result<bool, Exhausted> {
        if i == edges.len() {
            if !self.capacity_ok() {
                return Ok(false);
            }
            return self.place(depth + 1);
        }
        let e = edges[i];
        let (a, b) = self.pattern_edges[e];
        let (s, t) = (self.image[a], self.image[b]);
        let mut path = vec![s];
        self.extend_path(&mut path, t, edges, i, e, depth)
    }

    /// Depth-first enumeration of simple paths `s -> t` through free vertices.
    fn extend_path(
        &mut self,
        path: &mut Vec<usize>,
        t: usize,
        edges: &[usize],
        i: usize,
        e: usize,
        depth: usize,
    ) -> Result<bool, Exhausted> {
        self.meter.tick()?;
        let last = *path.last().unwrap();
        if self.adj[last] & bit(t) != 0 {
            path.push(t);
            self.paths[e] = Some(path.clone());
            if self.route(edges, i + 1, depth)? {
                return Ok(true);
            }
            self.paths[e] = None;
            path.pop();
        }
        let free = self.adj[last] & !self.used;
        for w in iter_bits(free) {
            path.push(w);
            self.used |= bit(w);
            if self.extend_path(path, t, edges, i, e, depth)? {
                return Ok(true);
            }
            self.used &= !bit(w);
            path.pop();
        }
        Ok(false)
    }

    /// Each placed branch vertex must keep enough free neighbours for its
    /// unrouted pattern edges.
    fn capacity_ok(&self) -> bool {
        for (p, &img) in self.image.iter().enumerate() {
            if img == usize::MAX {
                continue;
            }
            let pending = self.pattern.neighbors(p).iter().filter(|&&q| self.image[q] == usize::MAX).count();
            if pending > 0 && ((self.adj[img] & !self.used).count_ones() as usize) < pending {
                return false;
            }
        }
        true
    }
}

// ---------------------------------------------------------------------------
// Minors
// ---------------------------------------------------------------------------

/// Whether `pattern` is a minor of `g`.
pub fn has_minor(g: &Graph, pattern: PatternGraph, opts: &SearchOptions) -> SearchOutcome {
    let pg = pattern.graph();
    let reduced = Reduced::new(g);
    let mut inconclusive: Option<String> = None;
    let mut meter = opts.budget.meter();
    for comp in reduced.components() {
        if comp.len() < pg.order() {
            continue;
        }
        let local = reduced.component_graph(&comp);
        if opts.prefilter && (local.size() < pg.size() || is_planar_bool(&local)) {
            continue;
        }
        if comp.len() > SEARCH_VERTEX_LIMIT {
            if let SearchOutcome::Inconclusive { reason } = too_large(comp.len()) {
                inconclusive = Some(reason);
            }
            continue;
        }
        let mut search = ContractionSearch::new(&local, &pg, &mut meter);
        match search.run() {
            Ok(Some((blocks, map))) => {
                let sets = map
                    .iter()
                    .map(|&b| {
                        let mut set: Vec<VertexId> = iter_bits(blocks[b])
                            .flat_map(|lv| reduced.members[comp[lv]].iter().map(|&hv| g.label(hv)))
                            .collect();
                        set.sort_unstable();
                        set
                    })
                    .collect();
                return SearchOutcome::Found { witness: MinorWitness::BranchSets { pattern, sets } };
            }
            Ok(None) => {}
            Err(Exhausted) => inconclusive = Some(BUDGET_EXHAUSTED.into()),
        }
    }
    match inconclusive {
        Some(reason) => SearchOutcome::Inconclusive { reason },
        None => SearchOutcome::NotFound,
    }
}

/// Host after deleting degree ≤ 1 vertices and contracting degree-2 vertices.
/// `members[v]` lists the original host vertices merged into `v`.
struct Reduced {
    alive: Vec<bool>,
    adj: Vec<BTreeSet<usize>>,
    members: Vec<Vec<usize>>,
}

impl Reduced {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|i| g.neighbors(i).iter().copied().collect()).collect();
        let mut alive = vec![true; n];
        let mut members: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        let mut stack: Vec<usize> = (0..n).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            match adj[v].len() {
                0 | 1 => {
                    alive[v] = false;
                    let nb: Vec<usize> = adj[v].iter().copied().collect();
                    for w in nb {
                        adj[w].remove(&v);
                        stack.push(w);
                    }
                    adj[v].clear();
                }
                2 => {
                    let mut it = adj[v].iter().copied();
                    let (u, w) = (it.next().unwrap(), it.next().unwrap());
                    alive[v] = false;
                    adj[v].clear();
                    adj[u].remove(&v);
                    adj[w].remove(&v);
                    adj[u].insert(w);
                    adj[w].insert(u);
                    let moved = std::mem::take(&mut members[v]);
                    members[u].extend(moved);
                    stack.push(u);
                    stack.push(w);
                }
                _ => {}
            }
        }
        Reduced { alive, adj, members }
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if !self.alive[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn component_graph(&self, comp: &[usize]) -> Graph {
        let pos = |v: usize| comp.binary_search(&v).unwrap();
        let mut edges = Vec::new();
        for (i, &v) in comp.iter().enumerate() {
            for &w in &self.adj[v] {
                if w > v {
                    edges.push((i, pos(w)));
                }
            }
        }
        Graph::from_index_edges(comp.len(), &edges)
    }
}

/// Explores the graphs obtained from a connected host by edge contractions
/// down to `k` vertices and tests whether the quotient contains the pattern.
/// For a connected host this decides minor containment: unused vertices of
/// any model can be absorbed into an adjacent branch set, so some partition
/// of all host vertices into `k` connected blocks has a quotient containing
/// the pattern.
///
/// Each step picks an undecided block of least degree and branches on its
/// fate: it is final ("frozen") or it merges with an undecided neighbour.
/// Frozen blocks give the bounds used for pruning:
/// - a frozen block keeps at most its current degree;
/// - the undecided blocks end up as `k - frozen` blocks, so the quotient has
///   at most `e(frozen) + Σ min(undecided degree, k - frozen) + C(k - frozen, 2)`
///   edges;
/// - every contraction loses at least one edge.
struct ContractionSearch<'a> {
    adj: Vec<u128>,
    n: usize,
    k: usize,
    pattern: &'a Graph,
    pattern_edges: usize,
    pattern_degrees: Vec<usize>,
    pattern_rows: Vec<u16>,
    seen: FxHashSet<Box<[u8]>>,
    quotient_cache: FxHashMap<Vec<u128>, Option<Vec<usize>>>,
    meter: &'a mut Meter,
}

const FROZEN_TAG: u8 = 0x80;
const MAX_PATTERN_ORDER: usize = 10;

impl<'a> ContractionSearch<'a> {
    fn new(host: &Graph, pattern: &'a Graph, meter: &'a mut Meter) -> Self {
        let n = host.order();
        let mut pattern_degrees: Vec<usize> = (0..pattern.order()).map(|i| pattern.degree(i)).collect();
        pattern_degrees.sort_unstable_by(|a, b| b.cmp(a));
        ContractionSearch {
            adj: (0..n).map(|i| host.neighbors(i).iter().fold(0u128, |m, &j| m | bit(j))).collect(),
            n,
            k: pattern.order(),
            pattern_edges: pattern.size(),
            pattern_degrees,
            pattern_rows: (0..pattern.order()).map(|v| pattern.neighbors(v).iter().fold(0u16, |m, &w| m | (1 << w))).collect(),
            pattern,
            seen: FxHashSet::default(),
            quotient_cache: FxHashMap::default(),
            meter,
        }
    }

    fn run(&mut self) -> Result<Option<(Vec<u128>, Vec<usize>)>, Exhausted> {
        if self.n < self.k {
            return Ok(None);
        }
        let blocks: Vec<u128> = (0..self.n).map(bit).collect();
        let rows = self.adj.clone();
        self.explore(&blocks, &rows, 0)
    }

    /// `rows[a]` has bit `b` set when blocks `a` and `b` are joined by a host
    /// edge; `frozen` is the set of host vertices lying in frozen blocks.
    fn explore(
        &mut self,
        blocks: &[u128],
        rows: &[u128],
        frozen: u128,
    ) -> Result<Option<(Vec<u128>, Vec<usize>)>, Exhausted> {
        self.meter.tick()?;
        let q = blocks.len();
        if q == self.k {
            return Ok(self.check_quotient(rows).map(|map| (blocks.to_vec(), map)));
        }
        let frozen_blocks = (0..q).filter(|&i| blocks[i] & frozen != 0).fold(0u128, |m, i| m | bit(i));
        let f = frozen_blocks.count_ones() as usize;
        if f >= self.k {
            return Ok(None);
        }
        let m = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        if m < self.pattern_edges + (q - self.k) || !self.bounds_ok(rows, frozen_blocks) {
            return Ok(None);
        }

        let pivot = (0..q)
            .filter(|&i| frozen_blocks & bit(i) == 0)
            .min_by_key(|&i| (rows[i].count_ones(), i))
            .expect("some block is undecided");
        let pivot_degree = rows[pivot].count_ones() as usize;

        if pivot_degree >= *self.pattern_degrees.last().unwrap() && f + 1 < self.k {
            let child_frozen = frozen | blocks[pivot];
            if self.seen.insert(self.partition_key(blocks, child_frozen)) {
                if let Some(found) = self.explore(blocks, rows, child_frozen)? {
                    return Ok(Some(found));
                }
            }
        }
        for u in iter_bits(rows[pivot] & !frozen_blocks) {
            let lost = 1 + (rows[pivot] & rows[u]).count_ones() as usize;
            if m - lost < self.pattern_edges + (q - 1 - self.k) {
                continue;
            }
            let (a, b) = if pivot < u { (pivot, u) } else { (u, pivot) };
            let merged = merge_blocks(blocks, a, b);
            if !self.seen.insert(self.partition_key(&merged, frozen)) {
                continue;
            }
            let merged_rows = merge_rows(rows, a, b);
            if let Some(found) = self.explore(&merged, &merged_rows, frozen)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    /// Necessary conditions on the final quotient given the frozen blocks.
    fn bounds_ok(&self, rows: &[u128], frozen_blocks: u128) -> bool {
        let q = rows.len();
        let f = frozen_blocks.count_ones() as usize;
        let open = self.k - f;
        let undecided = !frozen_blocks & if q == 128 { u128::MAX } else { (1u128 << q) - 1 };

        // Undecided blocks end up in `open` connected final blocks.
        let mut components = 0;
        let mut rest = undecided;
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let grown = iter_bits(frontier).fold(0u128, |acc, v| acc | rows[v]) & undecided & !comp;
                comp |= grown;
                frontier = grown;
            }
            rest &= !comp;
            components += 1;
        }
        if components > open {
            return false;
        }
        let undecided_edges = iter_bits(undecided).map(|i| (rows[i] & undecided).count_ones() as usize).sum::<usize>() / 2;
        let contractions_left = (q - f) - open;

        let mut frozen_edges = 0usize;
        let mut cross = 0usize;
        let mut degrees = Vec::with_capacity(self.k);
        for i in iter_bits(frozen_blocks) {
            let inner = (rows[i] & frozen_blocks).count_ones() as usize;
            let outer = ((rows[i] & undecided).count_ones() as usize).min(open);
            frozen_edges += inner;
            cross += outer;
            degrees.push(inner + outer);
        }
        let open_edges = (open * (open - 1) / 2).min(undecided_edges.saturating_sub(contractions_left));
        if frozen_edges / 2 + cross + open_edges < self.pattern_edges {
            return false;
        }
        // The final degree sequence must dominate the pattern's. Undecided
        // blocks can reach degree k - 1 at best.
        degrees.resize(self.k, self.k - 1);
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees.iter().zip(&self.pattern_degrees).all(|(d, p)| d >= p)
    }

    fn partition_key(&self, blocks: &[u128], frozen: u128) -> Box<[u8]> {
        let mut key = vec![0u8; self.n];
        for (i, &m) in blocks.iter().enumerate() {
            let tag = if m & frozen != 0 { FROZEN_TAG } else { 0 };
            for v in iter_bits(m) {
                key[v] = i as u8 | tag;
            }
        }
        key.into_boxed_slice()
    }

    /// Maps pattern vertices to blocks if the quotient contains the pattern.
    /// The quotient has exactly `k` vertices, so the map is a bijection.
    fn check_quotient(&mut self, rows: &[u128]) -> Option<Vec<usize>> {
        if let Some(hit) = self.quotient_cache.get(rows) {
            return hit.clone();
        }
        let mut domains = [0u128; MAX_PATTERN_ORDER];
        for (v, d) in domains.iter_mut().enumerate().take(self.k) {
            let need = self.pattern.degree(v) as u32;
            *d = (0..rows.len()).filter(|&c| rows[c].count_ones() >= need).fold(0u128, |m, c| m | bit(c));
        }
        let mut map = vec![usize::MAX; self.k];
        let result = if self.embed(rows, domains, 0, &mut map) { Some(map) } else { None };
        self.quotient_cache.insert(rows.to_vec(), result.clone());
        result
    }

    /// Backtracking with forward checking, most constrained pattern vertex
    /// first. `domains[w]` holds the quotient vertices still available to
    /// pattern vertex `w`; `mapped` is the set of placed pattern vertices.
    fn embed(&self, rows: &[u128], domains: [u128; MAX_PATTERN_ORDER], mapped: u16, map: &mut [usize]) -> bool {
        let k = self.k;
        if mapped.count_ones() as usize == k {
            return true;
        }
        let v = (0..k)
            .filter(|&w| mapped & (1 << w) == 0)
            .min_by_key(|&w| domains[w].count_ones())
            .unwrap();
        for c in iter_bits(domains[v]) {
            let mut next = domains;
            let mut ok = true;
            let mut cover = 0u128;
            let mut used = bit(c);
            for w in 0..k {
                if w == v {
                    continue;
                }
                if mapped & (1 << w) != 0 {
                    used |= bit(map[w]);
                    continue;
                }
                next[w] &= !bit(c);
                if self.pattern_rows[v] & (1 << w) != 0 {
                    next[w] &= rows[c];
                }
                if next[w] == 0 {
                    ok = false;
                    break;
                }
                cover |= next[w];
            }
            // Every unused quotient vertex still needs a preimage.
            let all = if rows.len() == 128 { u128::MAX } else { (1u128 << rows.len()) - 1 };
            if !ok || cover | used != all {
                continue;
            }
            map[v] = c;
            if self.embed(rows, next, mapped | (1 << v), map) {
                return true;
            }
            map[v] = usize::MAX;
        }
        false
    }
}

/// Merges block `b` into block `a < b`. Blocks stay sorted by their smallest
/// vertex, so equal partitions get equal block lists.
fn merge_blocks(blocks: &[u128], a: usize, b: usize) -> Vec<u128> {
    let mut out = blocks.to_vec();
    out[a] |= out.remove(b);
    out
}

/// Quotient adjacency after merging block `b` into block `a < b`.
fn merge_rows(rows: &[u128], a: usize, b: usize) -> Vec<u128> {
    let drop_b = |x: u128| {
        let low = x & (bit(b) - 1);
        let high = if b == 127 { 0 } else { (x >> (b + 1)) << b };
        low | high
    };
    let mut out = Vec::with_capacity(rows.len() - 1);
    for (i, &r) in rows.iter().enumerate() {
        if i != b {
            out.push(drop_b(if r & bit(b) != 0 { r | bit(a) } else { r }));
        }
    }
    out[a] = drop_b((rows[a] | rows[b]) & !bit(a) & !bit(b));
    out
}

/// Necessary test for linkless embeddability: no Petersen-family minor.
/// `NotFound` means the test passes; `Found` carries the first family member
/// (in [`PatternGraph::PETERSEN_FAMILY`] order) that occurs as a minor.
pub fn linkless_necessary(g: &Graph, opts: &SearchOptions) -> SearchOutcome {
    let mut inconclusive = None;
    for pattern in PatternGraph::PETERSEN_FAMILY {
        match has_minor(g, pattern, opts) {
            found @ SearchOutcome::Found { .. } => return found,
            SearchOutcome::Inconclusive { reason } => inconclusive = Some(format!("{pattern}: {reason}")),
            SearchOutcome::NotFound => {}
        }
    }
    match inconclusive {
        Some(reason) => SearchOutcome::Inconclusive { reason },
        None => SearchOutcome::NotFound,
    }
}

/// Outcome of [`linkless_necessary`].
pub type LinklessCheck = SearchOutcome;

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(w: usize, h: usize) -> Graph {
        let mut edges = Vec::new();
        for y in 0..h {
            for x in 0..w {
                let v = y * w + x;
                if x + 1 < w {
                    edges.push((v, v + 1));
                }
                if y + 1 < h {
                    edges.push((v, v + w));
                }
            }
        }
        Graph::from_index_edges(w * h, &edges)
    }

    fn exhaustive() -> SearchOptions {
        SearchOptions::exhaustive(Budget::unlimited())
    }

    #[test]
    fn subdivision_examples() {
        let k6 = Graph::complete(6);
        let r = has_subdivision(&k6, PatternGraph::K6, &exhaustive());
        r.witness().unwrap().validate(&k6).unwrap();
        let petersen = PatternGraph::Petersen.graph();
        assert_eq!(has_subdivision(&petersen, PatternGraph::K5, &exhaustive()), SearchOutcome::NotFound);
        let k7 = Graph::complete(7);
        let r = has_subdivision(&k7, PatternGraph::K6, &exhaustive());
        r.witness().unwrap().validate(&k7).unwrap();
    }

    #[test]
    fn subdivision_through_long_paths() {
        // K3,3 with every edge subdivided twice.
        let mut edges = Vec::new();
        let mut next = 6;
        for a in 0..3 {
            for b in 3..6 {
                edges.extend([(a, next), (next, next + 1), (next + 1, b)]);
                next += 2;
            }
        }
        let g = Graph::from_index_edges(next, &edges);
        let r = has_subdivision(&g, PatternGraph::K33, &exhaustive());
        r.witness().unwrap().validate(&g).unwrap();
        assert_eq!(has_subdivision(&g, PatternGraph::K5, &exhaustive()), SearchOutcome::NotFound);
    }

    #[test]
    fn minor_examples() {
        let petersen = PatternGraph::Petersen.graph();
        let r = has_minor(&petersen, PatternGraph::K5, &exhaustive());
        r.witness().unwrap().validate(&petersen).unwrap();
        assert_eq!(has_minor(&grid(4, 4), PatternGraph::K5, &exhaustive()), SearchOutcome::NotFound);
        let k6 = Graph::complete(6);
        assert!(has_minor(&k6, PatternGraph::K6, &exhaustive()).found());
    }

    #[test]
    fn minor_through_degree_two_chains() {
        // K6 with every edge subdivided: the witness must map back to the
        // unreduced host.
        let mut edges = Vec::new();
        let mut next = 6;
        for a in 0..6 {
            for b in a + 1..6 {
                edges.extend([(a, next), (next, b)]);
                next += 1;
            }
        }
        edges.push((0, next));
        let g = Graph::from_index_edges(next + 1, &edges);
        let r = has_minor(&g, PatternGraph::K6, &SearchOptions::default());
        r.witness().unwrap().validate(&g).unwrap();
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = Graph::complete(11);
        let r = has_minor(&g, PatternGraph::Petersen, &SearchOptions::exhaustive(Budget::steps(5)));
        assert!(r.is_inconclusive());
        let r = has_subdivision(&g, PatternGraph::Petersen, &SearchOptions::exhaustive(Budget::steps(5)));
        assert!(r.is_inconclusive());
    }

    #[test]
    fn linkless_examples() {
        let k6 = Graph::complete(6);
        let r = linkless_necessary(&k6, &SearchOptions::default());
        assert_eq!(r.witness().unwrap().pattern(), PatternGraph::K6);
        assert_eq!(linkless_necessary(&grid(4, 4), &SearchOptions::default()), SearchOutcome::NotFound);
    }

    #[test]
    fn oversized_hosts_are_inconclusive() {
        // A 2-connected planar host beyond the mask width.
        let g = grid(12, 12);
        assert!(has_subdivision(&g, PatternGraph::K5, &exhaustive()).is_inconclusive());
        assert!(has_minor(&g, PatternGraph::K6, &exhaustive()).is_inconclusive());
        // Planarity settles it without any search.
        assert_eq!(has_subdivision(&g, PatternGraph::K5, &SearchOptions::default()), SearchOutcome::NotFound);
        assert_eq!(has_minor(&g, PatternGraph::K6, &SearchOptions::default()), SearchOutcome::NotFound);
    }
}
