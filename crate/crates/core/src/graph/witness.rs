use std::collections::BTreeSet;

use serde::Serialize;

use super::{Graph, PatternGraph};
use crate::complex::VertexId;

/// Certificate that a pattern graph occurs in a host graph, in host labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinorWitness {
    /// `sets[i]` is the connected branch set of pattern vertex `i`.
    BranchSets { pattern: PatternGraph, sets: Vec<Vec<VertexId>> },
    /// `branch[i]` is the image of pattern vertex `i`; `paths[e]` realizes the
    /// `e`-th pattern edge (in [`PatternGraph::edges`] order) and runs from the
    /// image of its first endpoint to the image of its second.
    Subdivision { pattern: PatternGraph, branch: Vec<VertexId>, paths: Vec<Vec<VertexId>> },
}

impl MinorWitness {
    pub fn pattern(&self) -> PatternGraph {
        match self {
            MinorWitness::BranchSets { pattern, .. } | MinorWitness::Subdivision { pattern, .. } => *pattern,
        }
    }

    /// Checks the certificate against `host`.
    pub fn validate(&self, host: &Graph) -> Result<(), String> {
        match self {
            MinorWitness::BranchSets { pattern, sets } => validate_branch_sets(host, *pattern, sets),
            MinorWitness::Subdivision { pattern, branch, paths } => validate_subdivision(host, *pattern, branch, paths),
        }
    }

    /// Branch sets implied by the witness. A subdivision is also a minor: each
    /// branch vertex absorbs the interior of the paths it starts.
    pub fn as_branch_sets(&self) -> Vec<Vec<VertexId>> {
        match self {
            MinorWitness::BranchSets { sets, .. } => sets.clone(),
            MinorWitness::Subdivision { pattern, branch, paths } => {
                let mut sets: Vec<Vec<VertexId>> = branch.iter().map(|&b| vec![b]).collect();
                for (&(a, _), path) in pattern.edges().iter().zip(paths) {
                    if path.len() > 2 {
                        sets[a as usize].extend_from_slice(&path[1..path.len() - 1]);
                    }
                }
                for s in &mut sets {
                    s.sort_unstable();
                }
                sets
            }
        }
    }
}

fn index_all(host: &Graph, labels: &[VertexId]) -> Result<Vec<usize>, String> {
    labels
        .iter()
        .map(|&l| host.index_of(l).ok_or_else(|| format!("vertex {l} not in host")))
        .collect()
}

fn validate_branch_sets(host: &Graph, pattern: PatternGraph, sets: &[Vec<VertexId>]) -> Result<(), String> {
    if sets.len() != pattern.order() {
        return Err(format!("expected {} branch sets, found {}", pattern.order(), sets.len()));
    }
    let mut seen = BTreeSet::new();
    let mut idx_sets = Vec::with_capacity(sets.len());
    for (i, set) in sets.iter().enumerate() {
        if set.is_empty() {
            return Err(format!("branch set {i} is empty"));
        }
        let idx = index_all(host, set)?;
        for &v in &idx {
            if !seen.insert(v) {
                return Err(format!("vertex {} used twice", host.label(v)));
            }
        }
        if !host.is_connected_set(&idx) {
            return Err(format!("branch set {i} is not connected"));
        }
        idx_sets.push(idx);
    }
    for &(a, b) in pattern.edges() {
        let (sa, sb) = (&idx_sets[a as usize], &idx_sets[b as usize]);
        if !sa.iter().any(|&u| sb.iter().any(|&v| host.has_edge(u, v))) {
            return Err(format!("pattern edge {a}-{b} has no host edge between its branch sets"));
        }
    }
    Ok(())
}

fn validate_subdivision(
    host: &Graph,
    pattern: PatternGraph,
    branch: &[VertexId],
    paths: &[Vec<VertexId>],
) -> Result<(), String> {
    if branch.len() != pattern.order() {
        return Err(format!("expected {} branch vertices, found {}", pattern.order(), branch.len()));
    }
    if paths.len() != pattern.edges().len() {
        return Err(format!("expected {} paths, found {}", pattern.edges().len(), paths.len()));
    }
    let branch_idx = index_all(host, branch)?;
    let branch_set: BTreeSet<usize> = branch_idx.iter().copied().collect();
    if branch_set.len() != branch_idx.len() {
        return Err("branch vertices are not distinct".into());
    }
    let mut interior_used = BTreeSet::new();
    for (e, (&(a, b), path)) in pattern.edges().iter().zip(paths).enumerate() {
        let p = index_all(host, path)?;
        if p.len() < 2 || p[0] != branch_idx[a as usize] || p[p.len() - 1] != branch_idx[b as usize] {
            return Err(format!("path {e} does not join the images of {a} and {b}"));
        }
        for w in p.windows(2) {
            if !host.has_edge(w[0], w[1]) {
                return Err(format!("path {e} uses non-edge {}-{}", host.label(w[0]), host.label(w[1])));
            }
        }
        for &v in &p[1..p.len() - 1] {
            if branch_set.contains(&v) {
                return Err(format!("path {e} passes through branch vertex {}", host.label(v)));
            }
            if !interior_used.insert(v) {
                return Err(format!("paths share interior vertex {}", host.label(v)));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_broken_certificates() {
        let k5 = Graph::complete(5);
        let good = MinorWitness::BranchSets { pattern: PatternGraph::K5, sets: (0..5).map(|i| vec![i]).collect() };
        assert!(good.validate(&k5).is_ok());
        let dup = MinorWitness::BranchSets { pattern: PatternGraph::K5, sets: vec![vec![0], vec![0], vec![2], vec![3], vec![4]] };
        assert!(dup.validate(&k5).is_err());
        let c5 = Graph::from_index_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert!(good.validate(&c5).is_err());

        let paths: Vec<Vec<VertexId>> = PatternGraph::K5.edges().iter().map(|&(a, b)| vec![a as u32, b as u32]).collect();
        let sub = MinorWitness::Subdivision { pattern: PatternGraph::K5, branch: (0..5).collect(), paths: paths.clone() };
        assert!(sub.validate(&k5).is_ok());
        assert_eq!(sub.as_branch_sets().len(), 5);
        let mut bad_paths = paths;
        bad_paths[0] = vec![0, 2, 1];
        let bad = MinorWitness::Subdivision { pattern: PatternGraph::K5, branch: (0..5).collect(), paths: bad_paths };
        assert!(bad.validate(&k5).is_err());
    }
}
