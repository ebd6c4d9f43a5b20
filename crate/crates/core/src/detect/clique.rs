use crate::graph::{Graph, VertexSet};

/// Lexicographically smallest `k`-clique, if any.
pub fn find_clique(g: &Graph, k: usize) -> Option<VertexSet> {
    if k == 0 {
        return Some(VertexSet::new());
    }
    let mut current = Vec::with_capacity(k);
    extend(g, k, &mut current, g.vertex_set()).then(|| current.into_iter().collect())
}

fn extend(g: &Graph, k: usize, current: &mut Vec<usize>, candidates: VertexSet) -> bool {
    if current.len() == k {
        return true;
    }
    if current.len() + candidates.len() < k {
        return false;
    }
    for v in &candidates {
        let mut next = candidates.intersection(g.neighbors(v));
        // only later vertices, so each clique is visited in ascending order
        next = next.iter().filter(|&u| u > v).collect();
        current.push(v);
        if extend(g, k, current, next) {
            return true;
        }
        current.pop();
    }
    false
}

/// Every `k`-clique, in lexicographic order.
pub fn all_cliques(g: &Graph, k: usize) -> Vec<VertexSet> {
    fn walk(g: &Graph, k: usize, current: &mut Vec<usize>, candidates: VertexSet, out: &mut Vec<VertexSet>) {
        if current.len() == k {
            out.push(current.iter().copied().collect());
            return;
        }
        if current.len() + candidates.len() < k {
            return;
        }
        for v in &candidates {
            let next: VertexSet = g.neighbors(v).intersection(&candidates).iter().filter(|&u| u > v).collect();
            current.push(v);
            walk(g, k, current, next, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        return vec![VertexSet::new()];
    }
    walk(g, k, &mut Vec::new(), g.vertex_set(), &mut out);
    out
}

/// Size of a maximum clique (0 for the empty graph).
pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, size: usize, candidates: VertexSet, best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        if size + candidates.len() <= *best {
            return;
        }
        let mut rest = candidates;
        while let Some(v) = rest.first() {
            if size + rest.len() <= *best {
                return;
            }
            let next = rest.intersection(g.neighbors(v));
            grow(g, size + 1, next, best);
            rest.remove(v);
        }
    }
    let mut best = 0;
    grow(g, 0, g.vertex_set(), &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedGraph};

    #[test]
    fn clique_examples() {
        let k4 = build_named(NamedGraph::Complete(4)).unwrap();
        assert_eq!(find_clique(&k4, 4).unwrap().to_vec(), vec![0, 1, 2, 3]);
        let c5 = build_named(NamedGraph::Cycle(5)).unwrap();
        assert!(find_clique(&c5, 3).is_none());
        assert_eq!(find_clique(&c5, 2).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(clique_number(&c5), 2);
        assert_eq!(clique_number(&k4), 4);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        assert_eq!(all_cliques(&k4, 3).len(), 4);
    }

    #[test]
    fn lexicographically_smallest() {
        // triangles {1,2,3} and {0,4,5}
        let g = Graph::from_edges(6, [(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(find_clique(&g, 3).unwrap().to_vec(), vec![0, 4, 5]);
        assert_eq!(all_cliques(&g, 3).len(), 2);
    }
}
