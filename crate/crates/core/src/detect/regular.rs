//! Detection of (not necessarily induced) regular subgraphs of degree at
//! least `d`.
//!
//! Any such subgraph has a connected regular component of the same degree,
//! and that component lies inside one component of the `d`-core. Within each
//! core component we enumerate connected vertex sets by increasing size and
//! look for an `r`-factor of the induced subgraph, `r >= d`.

use super::cycle::find_cycle;
use crate::graph::{Graph, VertexSet};

/// A regular subgraph: its vertex set, edge set and common degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSubgraph {
    pub vertices: VertexSet,
    pub edges: Vec<(usize, usize)>,
    pub degree: usize,
}

/// The `d`-core: the largest vertex set inducing minimum degree `>= d`.
pub fn core(g: &Graph, d: usize) -> VertexSet {
    let mut alive = g.vertex_set();
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| deg[v] < d).collect();
    for &v in &stack {
        alive.remove(v);
    }
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v).intersection(&alive).iter() {
            deg[u] -= 1;
            if deg[u] < d {
                alive.remove(u);
                stack.push(u);
            }
        }
    }
    alive
}

pub fn find_regular_subgraph(g: &Graph, d: usize) -> Option<RegularSubgraph> {
    match d {
        0 => (g.n() > 0).then(|| RegularSubgraph { vertices: VertexSet::singleton(0), edges: Vec::new(), degree: 0 }),
        1 => g.edges().next().map(|(u, v)| RegularSubgraph {
            vertices: [u, v].into_iter().collect(),
            edges: vec![(u, v)],
            degree: 1,
        }),
        2 => find_cycle(g).map(|cycle| {
            let len = cycle.len();
            let edges = (0..len)
                .map(|i| {
                    let (a, b) = (cycle[i], cycle[(i + 1) % len]);
                    (a.min(b), a.max(b))
                })
                .collect();
            RegularSubgraph { vertices: cycle.into_iter().collect(), edges, degree: 2 }
        }),
        _ => find_by_enumeration(g, d),
    }
}

fn find_by_enumeration(g: &Graph, d: usize) -> Option<RegularSubgraph> {
    let core_set = core(g, d);
    if core_set.is_empty() {
        return None;
    }
    let core_graph = g.induced(&core_set);
    let components: Vec<_> = core_graph.graph.connected_components();
    let largest = components.iter().map(|c| c.graph.n()).max().unwrap_or(0);
    for size in d + 1..=largest {
        for comp in components.iter().filter(|c| c.graph.n() >= size) {
            let mut found = None;
            for_each_connected_subset(
                &comp.graph,
                size,
                &mut |subset| match regular_factor_of(&comp.graph, subset, d) {
                    Some((edges, degree)) => {
                        found = Some((subset.clone(), edges, degree));
                        false
                    }
                    None => true,
                },
            );
            if let Some((subset, edges, degree)) = found {
                let lift = |v: usize| core_graph.map[comp.map[v]];
                let mut edges: Vec<(usize, usize)> = edges
                    .into_iter()
                    .map(|(a, b)| {
                        let (a, b) = (lift(a), lift(b));
                        (a.min(b), a.max(b))
                    })
                    .collect();
                edges.sort_unstable();
                return Some(RegularSubgraph { vertices: subset.iter().map(lift).collect(), edges, degree });
            }
        }
    }
    None
}

/// Calls `visit` once for every connected vertex set of exactly `size`
/// vertices (ESU enumeration), stopping early when `visit` returns false.
pub fn for_each_connected_subset(g: &Graph, size: usize, visit: &mut dyn FnMut(&VertexSet) -> bool) {
    fn extend(
        g: &Graph,
        size: usize,
        root: usize,
        subset: &mut VertexSet,
        closed: &VertexSet,
        mut extension: VertexSet,
        visit: &mut dyn FnMut(&VertexSet) -> bool,
    ) -> bool {
        if subset.len() == size {
            return visit(subset);
        }
        while let Some(w) = extension.first() {
            extension.remove(w);
            // exclusive neighbours of w: not in the subset, not adjacent to it
            let fresh: VertexSet = g.neighbors(w).difference(closed).iter().filter(|&u| u > root).collect();
            let next_ext = extension.union(&fresh);
            subset.insert(w);
            let next_closed = closed.union(&g.closed_neighborhood_of(w));
            let keep_going = extend(g, size, root, subset, &next_closed, next_ext, visit);
            subset.remove(w);
            if !keep_going {
                return false;
            }
        }
        true
    }
    if size == 0 {
        return;
    }
    for root in 0..g.n() {
        let extension: VertexSet = g.neighbors(root).iter().filter(|&u| u > root).collect();
        let mut subset = VertexSet::singleton(root);
        if !extend(g, size, root, &mut subset, &g.closed_neighborhood_of(root), extension, visit) {
            return;
        }
    }
}

/// An `r`-regular spanning subgraph of `g[subset]` for some `r >= d`.
fn regular_factor_of(g: &Graph, subset: &VertexSet, d: usize) -> Option<(Vec<(usize, usize)>, usize)> {
    let sub = g.induced(subset);
    let h = &sub.graph;
    let s = h.n();
    if h.min_degree() < d {
        return None;
    }
    (d..s).filter(|r| (r * s).is_multiple_of(2)).find_map(|r| {
        find_factor(h, r).map(|edges| {
            let edges = edges.into_iter().map(|(a, b)| (sub.map[a], sub.map[b])).collect();
            (edges, r)
        })
    })
}

/// Searches for an `r`-factor by deciding, vertex by vertex, which edges to
/// later vertices complete the current vertex's degree.
pub fn find_factor(h: &Graph, r: usize) -> Option<Vec<(usize, usize)>> {
    fn go(h: &Graph, v: usize, need: &mut [usize], chosen: &mut Vec<(usize, usize)>) -> bool {
        let n = h.n();
        if v == n {
            return true;
        }
        let later: Vec<usize> = h.neighbors(v).iter().filter(|&u| u > v && need[u] > 0).collect();
        let k = need[v];
        if later.len() < k {
            return false;
        }
        pick(h, v, &later, 0, k, need, chosen)
    }
    fn pick(
        h: &Graph,
        v: usize,
        later: &[usize],
        from: usize,
        k: usize,
        need: &mut [usize],
        chosen: &mut Vec<(usize, usize)>,
    ) -> bool {
        if k == 0 {
            let saved = need[v];
            need[v] = 0;
            let ok = go(h, v + 1, need, chosen);
            need[v] = saved;
            return ok;
        }
        for i in from..later.len() {
            if later.len() - i < k {
                break;
            }
            let u = later[i];
            need[u] -= 1;
            chosen.push((v, u));
            if pick(h, v, later, i + 1, k - 1, need, chosen) {
                return true;
            }
            chosen.pop();
            need[u] += 1;
        }
        false
    }
    let mut need = vec![r; h.n()];
    let mut chosen = Vec::new();
    go(h, 0, &mut need, &mut chosen).then_some(chosen)
}
