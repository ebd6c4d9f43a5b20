//! Exact isolation numbers by iterative deepening over the size of the
//! isolating set.
//!
//! Every isolating set must contain a vertex of `N[V(W)]` for each F-graph
//! `W` still present after the deletions made so far, so each search node
//! branches only on that neighbourhood (hitting-set branching). Components
//! are solved independently, since the isolation number is additive over
//! them.

use serde::{Deserialize, Serialize};

use crate::detect::{contains_family, FamilySpec, Witness};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certification {
    /// No smaller isolating set exists.
    ExactMinimum,
    /// The node budget ran out; the set isolates but may not be minimum.
    UpperBoundOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolationResult {
    pub size: usize,
    pub set: VertexSet,
    pub family: FamilySpec,
    pub certified: Certification,
}

#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    /// Maximum number of search nodes across all components.
    pub node_budget: u64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// True iff `G - N[D]` contains no F-graph.
pub fn is_isolating(g: &Graph, family: FamilySpec, set: &VertexSet) -> Result<bool> {
    let rest = g.remove_closed_neighborhood(set)?;
    Ok(contains_family(&rest.graph, family).is_none())
}

pub fn isolation_number(g: &Graph, family: FamilySpec) -> IsolationResult {
    isolation_number_with(g, family, &SolverOptions::default())
}

pub fn isolation_number_with(g: &Graph, family: FamilySpec, options: &SolverOptions) -> IsolationResult {
    let mut nodes = 0u64;
    let mut set = VertexSet::new();
    let mut certified = Certification::ExactMinimum;
    for comp in g.connected_components() {
        let mut search = Search { g: &comp.graph, family, nodes: &mut nodes, budget: options.node_budget };
        let (local, cert) = search.solve();
        if cert == Certification::UpperBoundOnly {
            certified = cert;
        }
        set.union_with(&comp.lift(&local));
    }
    IsolationResult { size: set.len(), set, family, certified }
}

enum Outcome {
    Found(VertexSet),
    NotFound,
    Aborted,
}

struct Search<'a> {
    g: &'a Graph,
    family: FamilySpec,
    nodes: &'a mut u64,
    budget: u64,
}

impl Search<'_> {
    fn solve(&mut self) -> (VertexSet, Certification) {
        for size in 0..=self.g.n() {
            match self.search(&VertexSet::new(), &VertexSet::new(), size) {
                Outcome::Found(set) => return (set, Certification::ExactMinimum),
                Outcome::NotFound => {}
                Outcome::Aborted => return (self.greedy(), Certification::UpperBoundOnly),
            }
        }
        unreachable!("the whole vertex set isolates every family")
    }

    /// A witness in `G - N[chosen]`, in the labels of `G`.
    fn residual_witness(&self, removed: &VertexSet) -> Option<Witness> {
        let rest = self.g.remove_vertices(removed);
        contains_family(&rest.graph, self.family).map(|mut w| {
            w.vertices = rest.lift(&w.vertices);
            w
        })
    }

    /// Greedy packing of witnesses whose closed neighbourhoods are pairwise
    /// disjoint: a lower bound on the number of vertices still needed.
    fn packing_bound(&self, removed: &VertexSet, first: &Witness, cap: usize) -> usize {
        let g = self.g;
        let mut blocked =
            removed.union(&g.closed_neighborhood_unchecked(&g.closed_neighborhood_unchecked(&first.vertices)));
        let mut count = 1;
        while count <= cap {
            match self.residual_witness(&blocked) {
                Some(w) => {
                    count += 1;
                    blocked.union_with(&g.closed_neighborhood_unchecked(&g.closed_neighborhood_unchecked(&w.vertices)));
                }
                None => break,
            }
        }
        count
    }

    fn search(&mut self, chosen: &VertexSet, forbidden: &VertexSet, budget_left: usize) -> Outcome {
        *self.nodes += 1;
        if *self.nodes > self.budget {
            return Outcome::Aborted;
        }
        let removed = self.g.closed_neighborhood_unchecked(chosen);
        let Some(witness) = self.residual_witness(&removed) else {
            return Outcome::Found(chosen.clone());
        };
        if budget_left == 0 {
            return Outcome::NotFound;
        }
        if self.packing_bound(&removed, &witness, budget_left) > budget_left {
            return Outcome::NotFound;
        }
        let candidates = self.g.closed_neighborhood_unchecked(&witness.vertices).difference(forbidden);
        let mut forbidden = forbidden.clone();
        for c in &candidates {
            let mut next = chosen.clone();
            next.insert(c);
            match self.search(&next, &forbidden, budget_left - 1) {
                Outcome::NotFound => {}
                other => return other,
            }
            // every set containing c has now been ruled out
            forbidden.insert(c);
        }
        Outcome::NotFound
    }

    /// Repeatedly take the vertex of `N[W]` covering most of the current
    /// witness `W`.
    fn greedy(&self) -> VertexSet {
        let mut chosen = VertexSet::new();
        loop {
            let removed = self.g.closed_neighborhood_unchecked(&chosen);
            let Some(w) = self.residual_witness(&removed) else {
                return chosen;
            };
            let best = self
                .g
                .closed_neighborhood_unchecked(&w.vertices)
                .iter()
                .max_by_key(|&c| (self.g.closed_neighborhood_of(c).intersection_len(&w.vertices), std::cmp::Reverse(c)))
                .expect("witness is non-empty");
            chosen.insert(best);
        }
    }
}

/// A minimum dominating set by plain subset enumeration, independent of the
/// isolation machinery.
pub fn minimum_dominating_set(g: &Graph) -> VertexSet {
    fn pick(
        g: &Graph,
        from: usize,
        left: usize,
        chosen: &mut Vec<usize>,
        covered: &VertexSet,
        all: &VertexSet,
    ) -> bool {
        if covered == all {
            return true;
        }
        if left == 0 {
            return false;
        }
        for v in from..g.n() {
            chosen.push(v);
            if pick(g, v + 1, left - 1, chosen, &covered.union(&g.closed_neighborhood_of(v)), all) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let all = g.vertex_set();
    for size in 0..=g.n() {
        let mut chosen = Vec::new();
        if pick(g, 0, size, &mut chosen, &VertexSet::new(), &all) {
            return chosen.into_iter().collect();
        }
    }
    unreachable!()
}

pub fn domination_number(g: &Graph) -> usize {
    minimum_dominating_set(g).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedGraph};

    fn named(kind: NamedGraph) -> Graph {
        build_named(kind).unwrap()
    }

    #[test]
    fn is_isolating_examples() {
        let c5 = named(NamedGraph::Cycle(5));
        assert!(is_isolating(&c5, FamilySpec::Clique(2), &[0, 2].into_iter().collect()).unwrap());
        let k4 = named(NamedGraph::Complete(4));
        assert!(!is_isolating(&k4, FamilySpec::Clique(4), &VertexSet::new()).unwrap());
        let c4 = named(NamedGraph::Cycle(4));
        assert!(is_isolating(&c4, FamilySpec::ChromaticAtLeast(3), &VertexSet::new()).unwrap());
        assert!(is_isolating(&c4, FamilySpec::Cycles, &VertexSet::singleton(9)).is_err());
    }

    #[test]
    fn isolation_examples() {
        let c5 = named(NamedGraph::Cycle(5));
        let r = isolation_number(&c5, FamilySpec::RegularOrChromatic(2));
        assert_eq!(r.size, 2);
        assert_eq!(r.certified, Certification::ExactMinimum);
        let c4 = named(NamedGraph::Cycle(4));
        assert_eq!(isolation_number(&c4, FamilySpec::RegularOrChromatic(3)).size, 1);
        let p4 = named(NamedGraph::Path(4));
        assert_eq!(isolation_number(&p4, FamilySpec::Clique(2)).size, 1);
        assert_eq!(isolation_number(&Graph::empty(0), FamilySpec::Clique(1)).size, 0);
    }

    #[test]
    fn p4_edge_isolation_by_brute_force() {
        // the oracle: every subset of V(P4), smallest isolating size
        let p4 = named(NamedGraph::Path(4));
        let best = (0u32..16)
            .filter(|mask| {
                let set: VertexSet = (0..4).filter(|v| mask & (1 << v) != 0).collect();
                let rest = p4.remove_closed_neighborhood(&set).unwrap();
                rest.graph.m() == 0
            })
            .map(|mask| mask.count_ones())
            .min()
            .unwrap();
        assert_eq!(best, 1);
    }

    #[test]
    fn domination_examples() {
        assert_eq!(domination_number(&named(NamedGraph::Complete(4))), 1);
        assert_eq!(domination_number(&named(NamedGraph::Cycle(5))), 2);
        assert_eq!(domination_number(&named(NamedGraph::Path(7))), 3);
        assert_eq!(domination_number(&Graph::empty(0)), 0);
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let g = named(NamedGraph::Cycle(9));
        let r = isolation_number_with(&g, FamilySpec::Clique(1), &SolverOptions { node_budget: 2 });
        assert_eq!(r.certified, Certification::UpperBoundOnly);
        assert!(is_isolating(&g, FamilySpec::Clique(1), &r.set).unwrap());
        assert!(r.size >= 3);
    }
}
