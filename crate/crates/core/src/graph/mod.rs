//! Simple undirected graphs on dense vertex labels `0..n`.

mod canon;
mod edge_list;
mod graph6;
mod named;
mod vertex_set;

pub use canon::{
    are_isomorphic, canonical_code, canonical_form, canonical_graph, enumerate_all, enumerate_connected,
    enumerate_connected_up_to, ALL_GRAPHS_MAX_ORDER, CANON_MAX_ORDER, ENUMERATION_MAX_ORDER,
};
pub use edge_list::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_MAX_ORDER};
pub use named::{build_named, NamedGraph};
pub use vertex_set::{Iter as VertexSetIter, VertexSet};

use crate::error::{Error, Result};

/// Immutable simple graph. Adjacency rows are bit sets, so closed
/// neighbourhoods of vertex sets are word-parallel unions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

/// An induced subgraph together with the labels its vertices carried in the
/// parent graph: `map[local] = parent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub map: Vec<usize>,
}

impl Subgraph {
    /// Translate a set of local labels back to parent labels.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.map[v]).collect()
    }

    pub fn parent_vertices(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![VertexSet::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::InvalidVertex { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.m += 1;
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn closed_neighborhood_of(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.last() {
            Some(v) if v >= self.n() => Err(Error::InvalidVertex { vertex: v, n: self.n() }),
            _ => Ok(()),
        }
    }

    /// `N[X]`, the union of the closed neighbourhoods of the members of `X`.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        self.check_set(set)?;
        Ok(self.closed_neighborhood_unchecked(set))
    }

    pub(crate) fn closed_neighborhood_unchecked(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// The subgraph induced by `keep`, relabelled to `0..|keep|` in ascending
    /// order of the original labels.
    pub fn induced(&self, keep: &VertexSet) -> Subgraph {
        let map: Vec<usize> = keep.iter().filter(|&v| v < self.n()).collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![VertexSet::new(); map.len()];
        let mut twice_m = 0;
        for (i, &v) in map.iter().enumerate() {
            for u in self.adj[v].intersection(keep).iter() {
                adj[i].insert(index[u]);
                twice_m += 1;
            }
        }
        Subgraph { graph: Graph { adj, m: twice_m / 2 }, map }
    }

    pub fn remove_vertices(&self, removed: &VertexSet) -> Subgraph {
        self.induced(&self.vertex_set().difference(removed))
    }

    /// `G - N[D]`, relabelled, with the map back to the labels of `self`.
    pub fn remove_closed_neighborhood(&self, set: &VertexSet) -> Result<Subgraph> {
        let closed = self.closed_neighborhood(set)?;
        Ok(self.remove_vertices(&closed))
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in &frontier {
                    next.union_with(&self.adj[v]);
                }
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<Subgraph> {
        self.component_sets().iter().map(|c| self.induced(c)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() <= 1
    }

    /// True when every pair of distinct vertices is adjacent (includes `n = 0`).
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m * 2 == n * n.saturating_sub(1)
    }

    pub fn is_k_clique(&self, k: usize) -> bool {
        self.n() == k && self.is_complete()
    }

    /// True when the graph is a single cycle on all of its `n >= 3` vertices.
    pub fn is_cycle(&self) -> bool {
        self.n() >= 3 && self.m == self.n() && (0..self.n()).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        for row in &other.adj {
            adj.push(row.iter().map(|v| v + shift).collect());
        }
        Graph { adj, m: self.m + other.m }
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n());
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        g.m = self.m;
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        build_named(NamedGraph::Cycle(4)).unwrap()
    }

    #[test]
    fn closed_neighborhood_examples() {
        let g = c4();
        assert!(g.closed_neighborhood(&VertexSet::new()).unwrap().is_empty());
        assert_eq!(g.closed_neighborhood(&VertexSet::singleton(0)).unwrap().to_vec(), vec![0, 1, 3]);
        let k4 = build_named(NamedGraph::Complete(4)).unwrap();
        assert_eq!(k4.closed_neighborhood(&VertexSet::singleton(2)).unwrap().to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(g.closed_neighborhood(&VertexSet::singleton(4)), Err(Error::InvalidVertex { vertex: 4, n: 4 }));
    }

    #[test]
    fn removing_closed_neighborhoods() {
        let c5 = build_named(NamedGraph::Cycle(5)).unwrap();
        let rest = c5.remove_closed_neighborhood(&VertexSet::singleton(0)).unwrap();
        assert_eq!(rest.graph.n(), 2);
        assert_eq!(rest.graph.m(), 1);
        assert_eq!(rest.map, vec![2, 3]);

        let k4 = build_named(NamedGraph::Complete(4)).unwrap();
        let rest = k4.remove_closed_neighborhood(&VertexSet::singleton(0)).unwrap();
        assert_eq!(rest.graph.n(), 0);
    }

    #[test]
    fn components() {
        let k3 = build_named(NamedGraph::Complete(3)).unwrap();
        let p2 = build_named(NamedGraph::Path(2)).unwrap();
        let g = k3.disjoint_union(&p2);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!((comps[0].graph.n(), comps[0].graph.m()), (3, 3));
        assert_eq!((comps[1].graph.n(), comps[1].graph.m()), (2, 1));
        assert_eq!(comps[1].map, vec![3, 4]);

        assert_eq!(c4().connected_components().len(), 1);
        assert!(Graph::empty(0).connected_components().is_empty());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(Error::InvalidVertex { vertex: 3, n: 3 }));
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }
}
