//! Backtracking subgraph monomorphism for small graphs.

use super::Graph;

/// Finds an injective map from pattern vertices to host vertices sending
/// every pattern edge to a host edge (not necessarily induced).
pub fn find_monomorphism(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return None;
    }
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; pattern.order()];
    let mut used = vec![false; host.order()];
    if extend(pattern, host, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.order()).map(|i| a.degree(i)).collect();
    let mut db: Vec<usize> = (0..b.order()).map(|i| b.degree(i)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && find_monomorphism(a, b).is_some()
}

/// Highest degree first, then greedily the vertex with most already-placed
/// neighbours.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let conn = g.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (conn, g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

fn extend(p: &Graph, h: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for cand in 0..h.order() {
        if used[cand] || h.degree(cand) < p.degree(v) {
            continue;
        }
        let ok = p.neighbors(v).iter().all(|&w| map[w] == usize::MAX || h.has_edge(cand, map[w]));
        if !ok {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        if extend(p, h, order, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[cand] = false;
    }
    false
}
