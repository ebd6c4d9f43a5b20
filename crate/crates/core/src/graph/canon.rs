//! Exact canonical labelling for small graphs and isomorph-free enumeration.
//!
//! The canonical code is the maximum, over all leaves of an
//! individualisation-refinement search tree, of the upper-triangle adjacency
//! bits packed into a `u128`. Refinement splits cells by the number of
//! neighbours in every cell, which never separates vertices an automorphism
//! could exchange, so the maximum is an isomorphism invariant.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`canonical_form`] (120 bits of adjacency).
pub const CANON_MAX_ORDER: usize = 16;

/// Largest order of the built-in connected enumeration.
pub const ENUMERATION_MAX_ORDER: usize = 8;

/// Largest order of the enumeration of all graphs.
pub const ALL_GRAPHS_MAX_ORDER: usize = 7;

/// Canonical code of `g` and a labelling realising it (`labels[v]` is the new
/// label of `v`).
pub fn canonical_form(g: &Graph) -> Result<(u128, Vec<usize>)> {
    let n = g.n();
    if n > CANON_MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "canonical form supports at most {CANON_MAX_ORDER} vertices, got {n}"
        )));
    }
    let mut best: Option<(u128, Vec<usize>)> = None;
    let start = refine(g, vec![(0..n).collect()]);
    search(g, start, &mut best);
    Ok(best.unwrap_or((0, Vec::new())))
}

pub fn canonical_code(g: &Graph) -> Result<u128> {
    canonical_form(g).map(|(code, _)| code)
}

/// `g` relabelled into canonical form.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, labels) = canonical_form(g)?;
    Ok(g.permuted(&labels))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.n() == b.n() && a.m() == b.m() && canonical_code(a)? == canonical_code(b)?)
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) =
        cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(_, c)| c.len()).map(|(i, _)| i)
    else {
        let mut labels = vec![0; g.n()];
        for (pos, cell) in cells.iter().enumerate() {
            labels[cell[0]] = pos;
        }
        let code = code_of(g, &labels);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, labels));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = cells.clone();
        let rest: Vec<usize> = next[target].iter().copied().filter(|&u| u != v).collect();
        next[target] = vec![v];
        next.insert(target + 1, rest);
        search(g, refine(g, next), best);
    }
}

/// Splits cells until every vertex in a cell has the same number of
/// neighbours in every cell. Sub-cells are ordered by their count vectors.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let sets: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut parts: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let counts = sets.iter().map(|s| g.neighbors(v).intersection_len(s)).collect();
                parts.entry(counts).or_default().push(v);
            }
            next.extend(parts.into_values());
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// Bit `pair_index(i, j)` for `i < j`, most significant first, so larger
/// codes favour edges among low labels.
fn code_of(g: &Graph, labels: &[usize]) -> u128 {
    let mut code = 0u128;
    for (u, v) in g.edges() {
        let (a, b) = (labels[u].min(labels[v]), labels[u].max(labels[v]));
        code |= 1u128 << (127 - (b * (b - 1) / 2 + a));
    }
    code
}

fn from_code(n: usize, code: u128) -> Graph {
    let mut edges = Vec::new();
    for b in 1..n {
        for a in 0..b {
            if code & (1u128 << (127 - (b * (b - 1) / 2 + a))) != 0 {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid code")
}

/// One representative per isomorphism class, in canonical form, ordered by
/// descending canonical code.
fn extend_classes(base: &[Graph], n: usize, connected: bool) -> Vec<Graph> {
    let mut seen = HashSet::new();
    for g in base {
        for mask in 0u32..(1 << (n - 1)) {
            if connected && mask == 0 && n > 1 {
                continue;
            }
            let new = (0..n - 1).filter(|i| mask & (1 << i) != 0).map(|i| (i, n - 1));
            let edges = g.edges().chain(new);
            let h = Graph::from_edges(n, edges).expect("valid edges");
            seen.insert(canonical_code(&h).expect("small order"));
        }
    }
    let mut codes: Vec<u128> = seen.into_iter().collect();
    codes.sort_unstable_by(|a, b| b.cmp(a));
    codes.into_iter().map(|c| from_code(n, c)).collect()
}

fn enumerate(n: usize, connected: bool) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    for order in 2..=n {
        level = extend_classes(&level, order, connected);
    }
    level
}

/// All connected graphs on `n` vertices up to isomorphism. Every connected
/// graph has a vertex whose deletion leaves it connected, so extending each
/// class on `n - 1` vertices by one vertex reaches every class.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if !(1..=ENUMERATION_MAX_ORDER).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "connected enumeration needs 1 <= n <= {ENUMERATION_MAX_ORDER}, got {n}"
        )));
    }
    Ok(enumerate(n, true))
}

/// All graphs on `n` vertices up to isomorphism.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    if !(1..=ALL_GRAPHS_MAX_ORDER).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "enumeration of all graphs needs 1 <= n <= {ALL_GRAPHS_MAX_ORDER}, got {n}"
        )));
    }
    Ok(enumerate(n, false))
}

/// Connected classes for every order `1..=max_n`, smallest order first.
pub fn enumerate_connected_up_to(max_n: usize) -> Result<Vec<Graph>> {
    if max_n > ENUMERATION_MAX_ORDER {
        return enumerate_connected(max_n);
    }
    let mut out = Vec::new();
    let mut level = Vec::new();
    for n in 1..=max_n {
        level = if n == 1 { vec![Graph::empty(1)] } else { extend_classes(&level, n, true) };
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedGraph};

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert_eq!(enumerate_connected_up_to(5).unwrap().len(), 31);
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(9).is_err());
    }

    #[test]
    fn all_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_all(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn relabelling_keeps_code() {
        let c5 = build_named(NamedGraph::Cycle(5)).unwrap();
        let shuffled = c5.permuted(&[3, 0, 4, 1, 2]);
        assert!(are_isomorphic(&c5, &shuffled).unwrap());
        let p5 = build_named(NamedGraph::Path(5)).unwrap();
        assert!(!are_isomorphic(&c5, &p5).unwrap());
        assert_eq!(canonical_graph(&shuffled).unwrap(), canonical_graph(&c5).unwrap());
    }

    #[test]
    fn rejects_large_graphs() {
        assert!(canonical_form(&Graph::empty(17)).is_err());
    }
}
