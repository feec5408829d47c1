//! Planarity testing by path addition (Demoucron–Malgrange–Pertuiset) on
//! biconnected blocks, with Kuratowski subgraph extraction by edge deletion.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::{Graph, MinorWitness, PatternGraph};
use crate::complex::VertexId;

/// Result of a planarity test. A nonplanar verdict always carries a K5 or
/// K3,3 subdivision witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Planarity {
    pub planar: bool,
    pub witness: Option<MinorWitness>,
}

pub fn is_planar(g: &Graph) -> Planarity {
    if is_planar_bool(g) {
        return Planarity { planar: true, witness: None };
    }
    Planarity { planar: false, witness: Some(kuratowski_subgraph(g)) }
}

/// Planarity decision without witness extraction.
pub fn is_planar_bool(g: &Graph) -> bool {
    edges_planar(g.order(), &g.edges())
}

fn edges_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    if edges.len() < 9 {
        return true;
    }
    if n >= 3 && edges.len() > 3 * n - 6 {
        return false;
    }
    let adj = adjacency(n, edges);
    biconnected_blocks(&adj).iter().all(|block| block_planar(block))
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// Edge sets of the biconnected blocks (Hopcroft–Tarjan, iterative).
fn biconnected_blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < adj[v].len() {
                let w = adj[v][top.2];
                top.2 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

enum Fragment {
    Chord(usize, usize),
    Component { vertices: Vec<usize>, attachments: Vec<usize> },
}

impl Fragment {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Fragment::Chord(a, b) => vec![*a, *b],
            Fragment::Component { attachments, .. } => attachments.clone(),
        }
    }
}

/// Path addition on one biconnected block.
fn block_planar(block: &[(usize, usize)]) -> bool {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let k = verts.len();
    let m = block.len();
    if k < 5 || m < 9 {
        return true;
    }
    if m > 3 * k - 6 {
        return false;
    }
    let local = |v: usize| verts.binary_search(&v).unwrap();
    let edges: Vec<(usize, usize)> = block.iter().map(|&(a, b)| (local(a), local(b))).collect();
    let adj = adjacency(k, &edges);

    let cycle = initial_cycle(&adj);
    let mut in_h = vec![false; k];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[a] = true;
        h_edges.insert((a.min(b), a.max(b)));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    while h_edges.len() < m {
        let fragments = fragments(&adj, &in_h, &h_edges);
        let mut face_members: Vec<Vec<bool>> = Vec::with_capacity(faces.len());
        for f in &faces {
            let mut mark = vec![false; k];
            for &v in f {
                mark[v] = true;
            }
            face_members.push(mark);
        }
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let admissible: Vec<usize> =
                (0..faces.len()).filter(|&f| att.iter().all(|&a| face_members[f][a])).collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("a fragment exists while edges remain");
        let path = fragment_path(&adj, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            h_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let (f1, f2) = split_face(&faces[face_idx], &path);
        faces[face_idx] = f1;
        faces.push(f2);
    }
    true
}

fn initial_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    // In a biconnected block every edge lies on a cycle: close edge (0, x)
    // with a shortest x -> 0 path avoiding it.
    let x = adj[0][0];
    let mut parent = vec![usize::MAX; adj.len()];
    parent[x] = x;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        if u == 0 {
            break;
        }
        for &w in &adj[u] {
            if u == x && w == 0 {
                continue;
            }
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut cycle = vec![0];
    let mut cur = parent[0];
    while cur != x {
        cycle.push(cur);
        cur = parent[cur];
    }
    cycle.push(x);
    cycle
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let k = adj.len();
    let mut out = Vec::new();
    for a in 0..k {
        if !in_h[a] {
            continue;
        }
        for &b in &adj[a] {
            if b > a && in_h[b] && !h_edges.contains(&(a, b)) {
                out.push(Fragment::Chord(a, b));
            }
        }
    }
    let mut seen = vec![false; k];
    for s in 0..k {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut vertices = Vec::new();
        let mut attachments = Vec::new();
        while let Some(u) = stack.pop() {
            vertices.push(u);
            for &w in &adj[u] {
                if in_h[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment::Component { vertices, attachments });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    match frag {
        Fragment::Chord(a, b) => vec![*a, *b],
        Fragment::Component { vertices, attachments } => {
            let a = attachments[0];
            let mut member = vec![false; adj.len()];
            for &v in vertices {
                member[v] = true;
            }
            let mut parent = vec![usize::MAX; adj.len()];
            let mut queue = VecDeque::new();
            for &v in &adj[a] {
                if member[v] && parent[v] == usize::MAX {
                    parent[v] = a;
                    queue.push_back(v);
                }
            }
            while let Some(u) = queue.pop_front() {
                if let Some(&b) = adj[u].iter().find(|&&w| in_h[w] && w != a) {
                    let mut path = vec![b, u];
                    let mut cur = u;
                    while parent[cur] != a {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
                for &w in &adj[u] {
                    if member[w] && parent[w] == usize::MAX {
                        parent[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            unreachable!("fragments of a biconnected block have two attachments")
        }
    }
}

/// Splits the cyclic face along `path` (whose endpoints lie on the face).
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let len = face.len();
    let a = path[0];
    let b = path[path.len() - 1];
    let i = face.iter().position(|&v| v == a).unwrap();
    let j = face.iter().position(|&v| v == b).unwrap();
    let arc = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut p = from;
        while p != to {
            p = (p + 1) % len;
            out.push(face[p]);
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    let mut f1 = arc(i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = arc(j, i);
    f2.extend(interior.iter());
    (f1, f2)
}

/// Shrinks a nonplanar graph to an edge-minimal nonplanar subgraph, which is
/// a subdivision of K5 or K3,3, and reads off the certificate.
fn kuratowski_subgraph(g: &Graph) -> MinorWitness {
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|i| g.neighbors(i).to_vec()).collect();
    let mut edges = biconnected_blocks(&adj)
        .into_iter()
        .find(|b| !block_planar(b))
        .expect("nonplanar graph has a nonplanar block");
    edges.sort_unstable_by_key(|&(a, b)| (a.min(b), a.max(b)));
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        if edges_planar(n, &trial) {
            i += 1;
        } else {
            edges = trial;
        }
    }
    let sub = adjacency(n, &edges);
    let branch: Vec<usize> = (0..n).filter(|&v| sub[v].len() >= 3).collect();

    // Walk from each branch vertex along each incident edge to the next branch vertex.
    let mut branch_paths: Vec<Vec<usize>> = Vec::new();
    for &b in &branch {
        for &first in &sub[b] {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while sub[cur].len() == 2 {
                let next = if sub[cur][0] == prev { sub[cur][1] } else { sub[cur][0] };
                prev = cur;
                cur = next;
                path.push(cur);
            }
            if b < cur {
                branch_paths.push(path);
            }
        }
    }
    let labels = |p: &[usize]| -> Vec<VertexId> { p.iter().map(|&v| g.label(v)).collect() };

    let (pattern, order): (PatternGraph, Vec<usize>) = if branch.len() == 5 {
        (PatternGraph::K5, branch.clone())
    } else {
        assert_eq!(branch.len(), 6, "minimal nonplanar graph must be a Kuratowski subdivision");
        let b0 = branch[0];
        let mut side_b: Vec<usize> =
            branch_paths.iter().filter(|p| p[0] == b0).map(|p| p[p.len() - 1]).collect();
        side_b.sort_unstable();
        let side_a: Vec<usize> = branch.iter().copied().filter(|v| !side_b.contains(v)).collect();
        (PatternGraph::K33, side_a.into_iter().chain(side_b).collect())
    };
    let paths = pattern
        .edges()
        .iter()
        .map(|&(pa, pb)| {
            let (u, v) = (order[pa as usize], order[pb as usize]);
            let p = branch_paths
                .iter()
                .find(|p| (p[0] == u && p[p.len() - 1] == v) || (p[0] == v && p[p.len() - 1] == u))
                .expect("every pattern edge is realized by a branch path");
            if p[0] == u {
                labels(p)
            } else {
                let mut r = labels(p);
                r.reverse();
                r
            }
        })
        .collect();
    MinorWitness::Subdivision { pattern, branch: labels(&order), paths }
}

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

    #[test]
    fn small_examples() {
        assert!(is_planar(&Graph::complete(4)).planar);
        let k5 = is_planar(&Graph::complete(5));
        assert!(!k5.planar);
        let w = k5.witness.unwrap();
        assert_eq!(w.pattern(), PatternGraph::K5);
        w.validate(&Graph::complete(5)).unwrap();

        let k33 = PatternGraph::K33.graph();
        let r = is_planar(&k33);
        assert!(!r.planar);
        let w = r.witness.unwrap();
        assert_eq!(w.pattern(), PatternGraph::K33);
        w.validate(&k33).unwrap();
    }

    #[test]
    fn planar_families() {
        assert!(is_planar(&grid(5, 5)).planar);
        // Octahedron and icosahedron-sized triangulations.
        let octa = Graph::from_index_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (5, 3), (5, 4), (1, 2), (2, 3), (3, 4), (4, 1)],
        );
        assert!(is_planar(&octa).planar);
        // Wheel graphs.
        for n in 4..12 {
            let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
            edges.extend((1..n).map(|i| (i, if i + 1 < n { i + 1 } else { 1 })));
            assert!(is_planar(&Graph::from_index_edges(n, &edges)).planar);
        }
    }

    #[test]
    fn petersen_is_nonplanar_with_k33_witness() {
        let p = PatternGraph::Petersen.graph();
        let r = is_planar(&p);
        assert!(!r.planar);
        let w = r.witness.unwrap();
        assert_eq!(w.pattern(), PatternGraph::K33);
        w.validate(&p).unwrap();
    }

    #[test]
    fn subdivided_k5_with_pendant_parts() {
        // K5 with every edge subdivided, plus a pendant tree and a planar block.
        let mut edges = Vec::new();
        let mut next = 5;
        for a in 0..5 {
            for b in a + 1..5 {
                edges.push((a, next));
                edges.push((next, b));
                next += 1;
            }
        }
        edges.extend([(0, next), (next, next + 1), (next + 1, next + 2), (next + 2, next)]);
        let g = Graph::from_index_edges(next + 3, &edges);
        let r = is_planar(&g);
        assert!(!r.planar);
        let w = r.witness.unwrap();
        assert_eq!(w.pattern(), PatternGraph::K5);
        w.validate(&g).unwrap();
    }

    #[test]
    fn disconnected_graphs() {
        let k5 = Graph::complete(5);
        let mut edges = k5.edge_labels();
        edges.extend([(10, 11), (11, 12)]);
        let g = Graph::from_edges(edges).unwrap();
        assert!(!is_planar(&g).planar);
        let two_k4 = Graph::from_edges(
            Graph::complete(4).edge_labels().into_iter().chain(Graph::complete(4).edge_labels().into_iter().map(|(a, b)| (a + 4, b + 4))),
        )
        .unwrap();
        assert!(is_planar(&two_k4).planar);
    }
}
