//! Containment oracles for the graph families used by isolation.
//!
//! Containment is subgraph containment: a graph contains an F-graph when
//! some (not necessarily induced) subgraph is a copy of a member of F.

mod clique;
mod coloring;
mod cycle;
mod regular;

use std::fmt;
use std::str::FromStr;

pub use clique::{all_cliques, clique_number, find_clique};
pub use coloring::{chromatic_number, color_with, dsatur_greedy, is_colorable};
pub use cycle::find_cycle;
pub use regular::{core, find_factor, find_regular_subgraph, for_each_connected_subset, RegularSubgraph};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A family of forbidden graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    /// `{K_k}`.
    Clique(usize),
    /// Regular graphs of degree at least `k - 1`.
    MinRegular(usize),
    /// Graphs of chromatic number at least `k`.
    ChromaticAtLeast(usize),
    /// Union of `MinRegular(k)` and `ChromaticAtLeast(k)`.
    RegularOrChromatic(usize),
    /// All cycles.
    Cycles,
}

impl FamilySpec {
    /// The family indexed by `ell` in `{1, 2, 3}`: regular, chromatic, union.
    pub fn indexed(ell: usize, k: usize) -> Result<FamilySpec> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        match ell {
            1 => Ok(FamilySpec::MinRegular(k)),
            2 => Ok(FamilySpec::ChromaticAtLeast(k)),
            3 => Ok(FamilySpec::RegularOrChromatic(k)),
            _ => Err(Error::InvalidParameter(format!("family index must be 1, 2 or 3, got {ell}"))),
        }
    }

    pub fn k(&self) -> Option<usize> {
        match *self {
            FamilySpec::Clique(k)
            | FamilySpec::MinRegular(k)
            | FamilySpec::ChromaticAtLeast(k)
            | FamilySpec::RegularOrChromatic(k) => Some(k),
            FamilySpec::Cycles => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.k() {
            Some(0) => Err(Error::InvalidParameter(format!("{self}: k must be at least 1"))),
            _ => Ok(()),
        }
    }

    /// Builds a family from its CLI name (`clique`, `minreg`, `chrom`,
    /// `union`, `cycles`).
    pub fn from_name(name: &str, k: Option<usize>) -> Result<FamilySpec> {
        let need_k = || k.ok_or_else(|| Error::InvalidParameter(format!("family {name} needs k")));
        let f = match name {
            "clique" => FamilySpec::Clique(need_k()?),
            "minreg" => FamilySpec::MinRegular(need_k()?),
            "chrom" => FamilySpec::ChromaticAtLeast(need_k()?),
            "union" => FamilySpec::RegularOrChromatic(need_k()?),
            "cycles" => FamilySpec::Cycles,
            _ => return Err(Error::InvalidParameter(format!("unknown family {name:?}"))),
        };
        f.validate()?;
        Ok(f)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Clique(k) => write!(f, "clique({k})"),
            FamilySpec::MinRegular(k) => write!(f, "minreg({k})"),
            FamilySpec::ChromaticAtLeast(k) => write!(f, "chrom({k})"),
            FamilySpec::RegularOrChromatic(k) => write!(f, "union({k})"),
            FamilySpec::Cycles => write!(f, "cycles"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the `Display` form, e.g. `union(3)` or `cycles`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('(') {
            Some((name, rest)) => {
                let k = rest
                    .strip_suffix(')')
                    .and_then(|k| k.trim().parse().ok())
                    .ok_or_else(|| Error::InvalidParameter(format!("bad family {s:?}")))?;
                FamilySpec::from_name(name, Some(k))
            }
            None => FamilySpec::from_name(s, None),
        }
    }
}

/// What a witness certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Clique(usize),
    Regular { degree: usize },
    Chromatic { at_least: usize },
    Cycle,
}

/// An explicit F-graph inside a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub vertices: VertexSet,
    /// Edge set of the certified subgraph, for regular subgraphs and cycles.
    pub edges: Option<Vec<(usize, usize)>>,
    pub kind: WitnessKind,
}

impl Witness {
    /// Re-checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        if g.check_set(&self.vertices).is_err() || self.vertices.is_empty() {
            return false;
        }
        let edges_in_host = |edges: &[(usize, usize)]| {
            edges.iter().all(|&(u, v)| self.vertices.contains(u) && self.vertices.contains(v) && g.has_edge(u, v))
        };
        match self.kind {
            WitnessKind::Clique(k) => {
                let vs = self.vertices.to_vec();
                vs.len() == k && vs.iter().all(|&u| vs.iter().all(|&v| u == v || g.has_edge(u, v)))
            }
            WitnessKind::Regular { degree } => {
                let Some(edges) = &self.edges else { return false };
                let mut deg = vec![0usize; g.n()];
                let mut seen = std::collections::BTreeSet::new();
                for &(u, v) in edges {
                    if !seen.insert((u.min(v), u.max(v))) {
                        return false;
                    }
                    deg[u] += 1;
                    deg[v] += 1;
                }
                edges_in_host(edges) && self.vertices.iter().all(|v| deg[v] == degree)
            }
            WitnessKind::Chromatic { at_least } => chromatic_number(&g.induced(&self.vertices).graph) >= at_least,
            WitnessKind::Cycle => {
                let Some(edges) = &self.edges else { return false };
                let sub = Graph::from_edges(g.n(), edges.iter().copied());
                matches!(sub, Ok(ref h) if h.m() == edges.len()
                    && edges_in_host(edges)
                    && h.induced(&self.vertices).graph.is_cycle())
            }
        }
    }
}

pub fn contains_clique(g: &Graph, k: usize) -> Option<Witness> {
    find_clique(g, k).map(|vertices| Witness { vertices, edges: None, kind: WitnessKind::Clique(k) })
}

/// A regular subgraph of degree at least `d`.
pub fn has_regular_subgraph_min_degree(g: &Graph, d: usize) -> Option<Witness> {
    find_regular_subgraph(g, d).map(|r| Witness {
        vertices: r.vertices,
        edges: Some(r.edges),
        kind: WitnessKind::Regular { degree: r.degree },
    })
}

pub fn has_cycle(g: &Graph) -> Option<Witness> {
    find_cycle(g).map(|cycle| {
        let len = cycle.len();
        let edges = (0..len)
            .map(|i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % len]);
                (a.min(b), a.max(b))
            })
            .collect();
        Witness { vertices: cycle.into_iter().collect(), edges: Some(edges), kind: WitnessKind::Cycle }
    })
}

/// A vertex-critical induced subgraph of chromatic number at least `k`.
///
/// Prefers a `k`-clique; otherwise takes the first component (by smallest
/// vertex) that is not `(k-1)`-colourable and deletes vertices while the
/// remainder stays non-`(k-1)`-colourable.
pub fn chromatic_witness(g: &Graph, k: usize) -> Option<Witness> {
    let wrap = |vertices| Some(Witness { vertices, edges: None, kind: WitnessKind::Chromatic { at_least: k } });
    if k <= 2 {
        return find_clique(g, k.max(1)).and_then(wrap);
    }
    if let Some(clique) = find_clique(g, k) {
        return wrap(clique);
    }
    for comp in g.component_sets() {
        if comp.len() < k {
            continue;
        }
        if is_colorable(&g.induced(&comp).graph, k - 1) {
            continue;
        }
        let mut keep = comp.clone();
        for v in &comp {
            let mut trial = keep.clone();
            trial.remove(v);
            if !is_colorable(&g.induced(&trial).graph, k - 1) {
                keep = trial;
            }
        }
        return wrap(keep);
    }
    None
}

/// Whether `g` contains an F-graph, with a certificate.
pub fn contains_family(g: &Graph, family: FamilySpec) -> Option<Witness> {
    match family {
        FamilySpec::Clique(k) => contains_clique(g, k),
        FamilySpec::Cycles => has_cycle(g),
        FamilySpec::MinRegular(k) => has_regular_subgraph_min_degree(g, k.saturating_sub(1)),
        FamilySpec::ChromaticAtLeast(k) => chromatic_witness(g, k),
        FamilySpec::RegularOrChromatic(k) => {
            has_regular_subgraph_min_degree(g, k.saturating_sub(1)).or_else(|| chromatic_witness(g, k))
        }
    }
}

pub fn contains(g: &Graph, family: FamilySpec) -> bool {
    contains_family(g, family).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedGraph};

    #[test]
    fn dispatch_examples() {
        let c4 = build_named(NamedGraph::Cycle(4)).unwrap();
        let w = contains_family(&c4, FamilySpec::MinRegular(3)).unwrap();
        assert!(w.verify(&c4));
        assert!(contains_family(&c4, FamilySpec::ChromaticAtLeast(3)).is_none());
        assert!(contains_family(&Graph::empty(1), FamilySpec::ChromaticAtLeast(1)).is_some());
        assert!(contains_family(&Graph::empty(0), FamilySpec::ChromaticAtLeast(1)).is_none());
        let c5 = build_named(NamedGraph::Cycle(5)).unwrap();
        let w = contains_family(&c5, FamilySpec::RegularOrChromatic(4)).map(|w| w.kind);
        assert_eq!(w, None);
        let w = contains_family(&c5, FamilySpec::ChromaticAtLeast(3)).unwrap();
        assert_eq!(w.vertices.len(), 5);
        assert!(w.verify(&c5));
    }

    #[test]
    fn family_names_round_trip() {
        for f in [
            FamilySpec::Clique(3),
            FamilySpec::MinRegular(2),
            FamilySpec::ChromaticAtLeast(4),
            FamilySpec::RegularOrChromatic(5),
            FamilySpec::Cycles,
        ] {
            assert_eq!(f.to_string().parse::<FamilySpec>().unwrap(), f);
        }
        assert!(FamilySpec::from_name("clique", Some(0)).is_err());
        assert!(FamilySpec::from_name("nope", Some(2)).is_err());
        assert!(FamilySpec::indexed(4, 2).is_err());
    }

    #[test]
    fn witnesses_are_rejected_when_wrong() {
        let p3 = build_named(NamedGraph::Path(3)).unwrap();
        let fake = Witness { vertices: [0, 1, 2].into_iter().collect(), edges: None, kind: WitnessKind::Clique(3) };
        assert!(!fake.verify(&p3));
        let fake = Witness {
            vertices: [0, 1, 2].into_iter().collect(),
            edges: Some(vec![(0, 1), (1, 2), (0, 2)]),
            kind: WitnessKind::Cycle,
        };
        assert!(!fake.verify(&p3));
    }
}
