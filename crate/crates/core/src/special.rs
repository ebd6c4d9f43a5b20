//! The extremal `(m, k)`-special graphs: `q` copies of `K_k`, each with one
//! pendant edge to its connection vertex, the connection vertices joined by a
//! tree, and an `r`-edge remainder tree hanging at the last connection
//! vertex, where `m + 1 = q * t_k + r` and `t_k = C(k, 2) + 2`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::detect::all_cliques;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// `C(k, 2) + 2`.
pub fn t_k(k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok(tk(k))
}

pub(crate) fn tk(k: usize) -> usize {
    k * k.saturating_sub(1) / 2 + 2
}

/// `floor((m + 1) / t_k)` for `k >= 1`.
pub fn bound_value(m: usize, k: usize) -> usize {
    (m + 1) / tk(k)
}

/// True when an isolating set of size `iota` meets the bound
/// `(m + 1) / t_k` exactly (as a rational number).
pub fn attains_bound(iota: usize, m: usize, k: usize) -> bool {
    iota * tk(k) == m + 1
}

/// One `K_k` constituent with its pendant connection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constituent {
    /// The `k` clique vertices, ascending.
    pub clique: Vec<usize>,
    /// The clique vertex adjacent to the connection vertex.
    pub attachment: usize,
    /// The connection vertex, on the quotient tree.
    pub connection: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialGraphDescriptor {
    pub k: usize,
    pub m: usize,
    pub q: usize,
    pub r: usize,
    pub quotient_tree: Vec<(usize, usize)>,
    pub remainder_tree: Vec<(usize, usize)>,
    pub constituents: Vec<Constituent>,
}

impl SpecialGraphDescriptor {
    pub fn is_pure(&self) -> bool {
        self.r == 0
    }

    pub fn connections(&self) -> VertexSet {
        self.constituents.iter().map(|c| c.connection).collect()
    }
}

/// `k=5 m=71 q=6 r=0 quotient=0-1,1-2 remainder= constituents=6:6,7,8,9,10@0;...`
///
/// Constituents are written as `attachment:clique@connection`.
impl fmt::Display for SpecialGraphDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges = |es: &[(usize, usize)]| es.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(",");
        let constituents = self
            .constituents
            .iter()
            .map(|c| {
                let clique = c.clique.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
                format!("{}:{}@{}", c.attachment, clique, c.connection)
            })
            .collect::<Vec<_>>()
            .join(";");
        write!(
            f,
            "k={} m={} q={} r={} quotient={} remainder={} constituents={}",
            self.k,
            self.m,
            self.q,
            self.r,
            edges(&self.quotient_tree),
            edges(&self.remainder_tree),
            constituents
        )
    }
}

/// Edges of a labelled tree on `0..order`: the path for seed 0, otherwise a
/// uniform random tree decoded from a Prüfer sequence.
fn random_tree(order: usize, seed: u64, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if order < 2 {
        return Vec::new();
    }
    if seed == 0 {
        return (1..order).map(|v| (v - 1, v)).collect();
    }
    if order == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..order - 2).map(|_| rng.gen_range(0..order)).collect();
    let mut degree = vec![1usize; order];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(order - 1);
    for &c in &code {
        let leaf = (0..order).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(c), leaf.max(c)));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..order).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Builds an `(m, k)`-special graph.
///
/// Labels: connection vertices `v_1..v_q` are `0..q`; constituent `i` holds
/// `q + i*k .. q + (i+1)*k` with its first vertex as the attachment; the
/// remainder tree's new vertices follow. With `q = 0` the graph is an
/// `m`-edge tree.
pub fn build_special(m: usize, k: usize, seed: u64) -> Result<(Graph, SpecialGraphDescriptor)> {
    let t = t_k(k)?;
    let (q, r) = ((m + 1) / t, (m + 1) % t);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    if q == 0 {
        let tree = random_tree(m + 1, seed, &mut rng);
        let g = Graph::from_edges(m + 1, tree.iter().copied())?;
        let descriptor = SpecialGraphDescriptor {
            k,
            m,
            q,
            r,
            quotient_tree: Vec::new(),
            remainder_tree: tree,
            constituents: Vec::new(),
        };
        return Ok((g, descriptor));
    }

    let n = q * (k + 1) + r;
    let mut edges = Vec::with_capacity(m);
    let quotient_tree = random_tree(q, seed, &mut rng);
    edges.extend(quotient_tree.iter().copied());

    let mut constituents = Vec::with_capacity(q);
    for i in 0..q {
        let clique: Vec<usize> = (q + i * k..q + (i + 1) * k).collect();
        for (a, &u) in clique.iter().enumerate() {
            for &w in &clique[a + 1..] {
                edges.push((u, w));
            }
        }
        edges.push((i, clique[0]));
        constituents.push(Constituent { attachment: clique[0], clique, connection: i });
    }

    let last = q - 1;
    let label = |node: usize| if node == 0 { last } else { q * (k + 1) + node - 1 };
    let remainder_tree: Vec<(usize, usize)> = random_tree(r + 1, seed, &mut rng)
        .into_iter()
        .map(|(a, b)| {
            let (a, b) = (label(a), label(b));
            (a.min(b), a.max(b))
        })
        .collect();
    edges.extend(remainder_tree.iter().copied());

    let g = Graph::from_edges(n, edges)?;
    debug_assert_eq!(g.m(), m);
    Ok((g, SpecialGraphDescriptor { k, m, q, r, quotient_tree, remainder_tree, constituents }))
}

/// `floor((m + 1) / t_k)`, which equals `q` for every descriptor.
pub fn predicted_isolation(d: &SpecialGraphDescriptor) -> usize {
    bound_value(d.m, d.k)
}

/// Decomposes `g` as a pure `(m, k)`-special graph, if it is one.
///
/// Candidate constituents are `k`-cliques in which every vertex but one has
/// no outside neighbour and the remaining one has exactly one. A disjoint
/// choice of `q = n / (k + 1)` candidates whose connection vertices are
/// distinct and make up the rest of the graph, joined by a tree, is a
/// decomposition. The lexicographically first choice is returned.
pub fn recognize_pure_special(g: &Graph, k: usize) -> Option<SpecialGraphDescriptor> {
    let t = t_k(k).ok()?;
    let n = g.n();
    if n == 0 || !n.is_multiple_of(k + 1) {
        return None;
    }
    let q = n / (k + 1);
    if g.m() + 1 != q * t || !g.is_connected() {
        return None;
    }

    let mut candidates = Vec::new();
    for clique in all_cliques(g, k) {
        for a in &clique {
            let inner_ok = clique.iter().all(|w| w == a || g.degree(w) == k - 1);
            if inner_ok && g.degree(a) == k {
                let outside = g.neighbors(a).difference(&clique);
                if let Some(v) = outside.first() {
                    candidates.push(Constituent { clique: clique.to_vec(), attachment: a, connection: v });
                }
            }
        }
    }

    let mut chosen: Vec<usize> = Vec::new();
    let found = choose(&candidates, q, 0, &mut chosen, &mut VertexSet::new(), &mut VertexSet::new());
    if !found {
        return None;
    }
    let constituents: Vec<Constituent> = chosen.iter().map(|&i| candidates[i].clone()).collect();
    let covered: VertexSet = constituents.iter().flat_map(|c| c.clique.iter().copied()).collect();
    let connections: VertexSet = constituents.iter().map(|c| c.connection).collect();
    if covered.union(&connections) != g.vertex_set() {
        return None;
    }
    let tree = g.induced(&connections);
    if tree.graph.m() + 1 != q || !tree.graph.is_connected() {
        return None;
    }
    let quotient_tree = tree.graph.edges().map(|(a, b)| (tree.map[a], tree.map[b])).collect();
    Some(SpecialGraphDescriptor { k, m: g.m(), q, r: 0, quotient_tree, remainder_tree: Vec::new(), constituents })
}

fn choose(
    candidates: &[Constituent],
    q: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    covered: &mut VertexSet,
    connections: &mut VertexSet,
) -> bool {
    if chosen.len() == q {
        return covered.is_disjoint(connections);
    }
    for i in from..candidates.len() {
        let c = &candidates[i];
        let clique: VertexSet = c.clique.iter().copied().collect();
        if !clique.is_disjoint(covered) || connections.contains(c.connection) || covered.contains(c.connection) {
            continue;
        }
        if !clique.is_disjoint(connections) {
            continue;
        }
        chosen.push(i);
        covered.union_with(&clique);
        connections.insert(c.connection);
        if choose(candidates, q, i + 1, chosen, covered, connections) {
            return true;
        }
        chosen.pop();
        covered.difference_with(&clique);
        connections.remove(c.connection);
    }
    false
}
