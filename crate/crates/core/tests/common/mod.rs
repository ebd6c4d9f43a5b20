//! Brute-force oracles shared by the integration tests. None of them calls
//! the library's detectors or solver.

#![allow(dead_code)]

use isolation_core::{FamilySpec, Graph, VertexSet};
use rand::Rng;

/// Every regular subgraph of `g` with at least one edge, as (vertex mask,
/// degree), from all edge subsets. Needs `m <= 20`.
pub fn regular_edge_subgraphs(g: &Graph) -> Vec<(u32, usize)> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() <= 20);
    let mut out = Vec::new();
    for mask in 1u32..(1 << edges.len()) {
        let mut deg = [0usize; 32];
        let mut touched = 0u32;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                deg[u] += 1;
                deg[v] += 1;
                touched |= (1 << u) | (1 << v);
            }
        }
        let d = deg[touched.trailing_zeros() as usize];
        if (0..g.n()).all(|v| touched & (1 << v) == 0 || deg[v] == d) {
            out.push((touched, d));
        }
    }
    out
}

fn mask_of(set: &VertexSet) -> u32 {
    set.iter().fold(0, |m, v| m | (1 << v))
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|v| mask & (1 << v) != 0).collect()
}

pub fn naive_has_clique(g: &Graph, within: u32, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let vs = members(within);
    (0u32..(1 << vs.len())).filter(|s| s.count_ones() as usize == k).any(|s| {
        let chosen: Vec<usize> = (0..vs.len()).filter(|i| s & (1 << i) != 0).map(|i| vs[i]).collect();
        chosen.iter().all(|&a| chosen.iter().all(|&b| a == b || g.has_edge(a, b)))
    })
}

/// Whether `g[within]` has a proper colouring with `colors` colours, by
/// trying every assignment.
pub fn naive_colorable(g: &Graph, within: u32, colors: usize) -> bool {
    let vs = members(within);
    if vs.is_empty() {
        return true;
    }
    if colors == 0 {
        return false;
    }
    let total = colors.pow(vs.len() as u32);
    (0..total).any(|mut code| {
        let mut color = vec![0; vs.len()];
        for c in color.iter_mut() {
            *c = code % colors;
            code /= colors;
        }
        (0..vs.len()).all(|i| (0..i).all(|j| !g.has_edge(vs[i], vs[j]) || color[i] != color[j]))
    })
}

pub fn naive_chromatic_number(g: &Graph) -> usize {
    let all = (1u32 << g.n()) - 1;
    (0..=g.n()).find(|&c| naive_colorable(g, all, c)).unwrap()
}

/// A graph is a forest iff `m = n - components`.
pub fn naive_has_cycle(g: &Graph, within: u32) -> bool {
    let mut parent: Vec<usize> = (0..32).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (u, v) in g.edges() {
        if within & (1 << u) != 0 && within & (1 << v) != 0 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return true;
            }
            parent[a] = b;
        }
    }
    false
}

/// Containment oracle for one host graph, reusing its regular subgraphs.
pub struct Naive<'a> {
    pub g: &'a Graph,
    regular: Vec<(u32, usize)>,
}

impl<'a> Naive<'a> {
    pub fn new(g: &'a Graph) -> Self {
        Naive { g, regular: regular_edge_subgraphs(g) }
    }

    /// A regular subgraph of degree at least `d` inside `within`.
    pub fn has_regular(&self, within: u32, d: usize) -> bool {
        if d == 0 && within != 0 {
            return true;
        }
        self.regular.iter().any(|&(s, deg)| deg >= d && s & !within == 0)
    }

    pub fn contains(&self, within: u32, family: FamilySpec) -> bool {
        match family {
            FamilySpec::Clique(k) => naive_has_clique(self.g, within, k),
            FamilySpec::MinRegular(k) => self.has_regular(within, k.saturating_sub(1)),
            FamilySpec::ChromaticAtLeast(k) => !naive_colorable(self.g, within, k - 1),
            FamilySpec::RegularOrChromatic(k) => {
                self.has_regular(within, k.saturating_sub(1)) || !naive_colorable(self.g, within, k - 1)
            }
            FamilySpec::Cycles => naive_has_cycle(self.g, within),
        }
    }

    /// Minimum isolating set size over all `2^n` subsets.
    pub fn isolation_number(&self, family: FamilySpec) -> usize {
        let n = self.g.n();
        let all = (1u32 << n) - 1;
        let closed: Vec<u32> = (0..n).map(|v| mask_of(&self.g.closed_neighborhood_of(v))).collect();
        let mut best = n;
        for d in 0u32..(1 << n) {
            if d.count_ones() as usize >= best {
                continue;
            }
            let covered = members(d).iter().fold(0, |m, &v| m | closed[v]);
            if !self.contains(all & !covered, family) {
                best = d.count_ones() as usize;
            }
        }
        best
    }
}

/// Minimum dominating set size over all subsets.
pub fn naive_domination_number(g: &Graph) -> usize {
    let n = g.n();
    let all = (1u32 << n) - 1;
    let closed: Vec<u32> = (0..n).map(|v| mask_of(&g.closed_neighborhood_of(v))).collect();
    (0u32..(1 << n))
        .filter(|d| members(*d).iter().fold(0, |m, &v| m | closed[v]) == all)
        .map(|d| d.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Random graph with independent edges of probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Every family variant with `k` in `1..=max_k`, plus cycles.
pub fn all_families(max_k: usize) -> Vec<FamilySpec> {
    let mut out = vec![FamilySpec::Cycles];
    for k in 1..=max_k {
        out.extend([
            FamilySpec::Clique(k),
            FamilySpec::MinRegular(k),
            FamilySpec::ChromaticAtLeast(k),
            FamilySpec::RegularOrChromatic(k),
        ]);
    }
    out
}
