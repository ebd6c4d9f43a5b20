//! Polynomial-time construction of an isolating set of size at most
//! `floor((m + 1) / t_k)` for the union family "regular of degree >= k-1 or
//! chromatic number >= k" (which also isolates each of the two families on
//! its own), by induction on the number of edges.
//!
//! Every recursive call works on a connected graph and returns a set
//! satisfying the bound unless the graph is itself a `k`-clique (which costs
//! one vertex). Each return is re-verified with the detectors; a set that
//! fails to isolate, or exceeds the bound outside the flagged fallback, is
//! reported as an error.

use std::fmt;

use serde::Serialize;

use crate::detect::{contains_family, find_clique, FamilySpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solver::{is_isolating, isolation_number, Certification};
use crate::special::bound_value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    /// The graph is a `k`-clique; any one vertex isolates it.
    Clique,
    /// `k = 1`: the smaller parity class of a BFS tree dominates.
    K1Bipartition,
    /// No `k`-clique and a vertex of degree at most `k - 2`: delete it.
    Case1_1,
    /// No `k`-clique and `(k-1)`-regular: one maximum-degree vertex.
    Case1_2Regular,
    /// No `k`-clique and a dominating maximum-degree vertex.
    Case1_2Dominating,
    /// No `k`-clique: maximum-degree vertex plus the components it leaves.
    Case1_2Recurse,
    /// `k = 3` and a 4-cycle component is left: cut it through `y_1`.
    Case1_2C4Fix,
    /// A `k`-clique vertex dominating the graph.
    Case2Dominating,
    /// A `k`-clique vertex and no `K_k` components left behind.
    Case2_1,
    /// `K_k` component linked to two neighbours: take `y`, recurse on `G - X`.
    Case2_2_1,
    /// As above, remaining part is a clique and `G[Y]` is free: take `x`.
    Case2_2_1X,
    /// As above, `G[Y]` holds an F-graph: take `z`, recurse on `G - Z`.
    Case2_2_1Z,
    /// As above with nothing else attached: a single vertex isolates.
    Case2_2_1Single,
    /// `K_k` component linked to one neighbour only: local assembly.
    Case2_2_2Fallback,
    /// Local assembly exceeded the bound: exact solver on this graph.
    Case2_2_2Exact,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::Clique => "Clique",
            CaseTag::K1Bipartition => "K1-bipartition",
            CaseTag::Case1_1 => "Case1.1",
            CaseTag::Case1_2Regular => "Case1.2-regular",
            CaseTag::Case1_2Dominating => "Case1.2-dominating",
            CaseTag::Case1_2Recurse => "Case1.2-recurse",
            CaseTag::Case1_2C4Fix => "Case1.2-C4fix",
            CaseTag::Case2Dominating => "Case2-dominating",
            CaseTag::Case2_1 => "Case2.1",
            CaseTag::Case2_2_1 => "Case2.2.1",
            CaseTag::Case2_2_1X => "Case2.2.1-x",
            CaseTag::Case2_2_1Z => "Case2.2.1-z",
            CaseTag::Case2_2_1Single => "Case2.2.1-single",
            CaseTag::Case2_2_2Fallback => "Case2.2.2-fallback",
            CaseTag::Case2_2_2Exact => "Case2.2.2-exact",
        };
        f.write_str(s)
    }
}

/// One step of the recursion, in the labels of the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub tag: CaseTag,
    pub depth: usize,
    /// Vertices of the (connected) graph handled at this step.
    pub graph: Vec<usize>,
    /// Vertices added to the isolating set by this step itself.
    pub chosen: Vec<usize>,
    /// Vertex sets of the subgraphs recursed into.
    pub recursed: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
}

impl ConstructionTrace {
    /// The union of the vertices chosen by every step.
    pub fn replay(&self) -> VertexSet {
        self.steps.iter().flat_map(|s| s.chosen.iter().copied()).collect()
    }

    /// Number of steps that fell back to exact search.
    pub fn exact_fallbacks(&self) -> usize {
        self.steps.iter().filter(|s| s.tag == CaseTag::Case2_2_2Exact).count()
    }

    pub fn count(&self, tag: CaseTag) -> usize {
        self.steps.iter().filter(|s| s.tag == tag).count()
    }

    /// One line per step: indentation, tag, chosen vertices, recursed
    /// subgraphs.
    pub fn to_log(&self) -> String {
        let list = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        let mut out = String::new();
        for s in &self.steps {
            let recursed = s.recursed.iter().map(|r| format!("[{}]", list(r))).collect::<Vec<_>>().join(" ");
            out.push_str(&format!(
                "{}{} on [{}] chose [{}] recurse {}\n",
                "  ".repeat(s.depth),
                s.tag,
                list(&s.graph),
                list(&s.chosen),
                if recursed.is_empty() { "-".to_string() } else { recursed }
            ));
        }
        out
    }
}

/// Constructs an isolating set for the family indexed by `ell` (1: regular,
/// 2: chromatic, 3: union) with parameter `k`, of size at most
/// `floor((m + 1) / t_k)`.
pub fn construct_isolating(g: &Graph, k: usize, ell: usize) -> Result<(VertexSet, ConstructionTrace)> {
    let target = FamilySpec::indexed(ell, k)?;
    if g.n() == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_k_clique(k) {
        return Err(Error::IsClique(k));
    }
    let builder = Builder { k, family: FamilySpec::RegularOrChromatic(k) };
    let identity: Vec<usize> = (0..g.n()).collect();
    let (set, steps) = builder.iso(g, &identity, 0)?;
    if !is_isolating(g, target, &set)? {
        return Err(Error::ConstructionFailed(format!("set {set} does not isolate {target}")));
    }
    Ok((set, ConstructionTrace { steps }))
}

type Assembly = (VertexSet, Vec<TraceStep>);

struct Builder {
    k: usize,
    family: FamilySpec,
}

/// A connected graph being handled, with labels back to the input graph.
struct Frame<'a> {
    g: &'a Graph,
    map: &'a [usize],
    depth: usize,
}

impl Frame<'_> {
    fn lift(&self, set: &VertexSet) -> Vec<usize> {
        set.iter().map(|v| self.map[v]).collect()
    }
}

impl Builder {
    fn iso(&self, g: &Graph, map: &[usize], depth: usize) -> Result<Assembly> {
        if contains_family(g, self.family).is_none() {
            return Ok((VertexSet::new(), Vec::new()));
        }
        let frame = Frame { g, map, depth };
        if g.is_k_clique(self.k) {
            return Ok(self.leaf(&frame, CaseTag::Clique, VertexSet::singleton(0)));
        }
        let (set, steps) = if self.k == 1 {
            self.leaf(&frame, CaseTag::K1Bipartition, bfs_parity_class(g))
        } else if find_clique(g, self.k).is_none() {
            self.case1(&frame)?
        } else {
            self.case2(&frame)?
        };
        if contains_family(&g.remove_closed_neighborhood(&set)?.graph, self.family).is_some() {
            return Err(Error::ConstructionFailed(format!(
                "{} step on {:?} produced a non-isolating set",
                steps[0].tag,
                frame.lift(&g.vertex_set())
            )));
        }
        let bound = bound_value(g.m(), self.k);
        if set.len() > bound {
            return Err(Error::ConstructionFailed(format!(
                "{} step on {:?} produced {} vertices, bound {}",
                steps[0].tag,
                frame.lift(&g.vertex_set()),
                set.len(),
                bound
            )));
        }
        Ok((set, steps))
    }

    fn leaf(&self, frame: &Frame<'_>, tag: CaseTag, set: VertexSet) -> Assembly {
        let step = TraceStep {
            tag,
            depth: frame.depth,
            graph: frame.lift(&frame.g.vertex_set()),
            chosen: frame.lift(&set),
            recursed: Vec::new(),
        };
        (set, vec![step])
    }

    /// `chosen` plus recursive solutions on the components of `G - removed`.
    fn assemble(&self, frame: &Frame<'_>, tag: CaseTag, chosen: VertexSet, removed: &VertexSet) -> Result<Assembly> {
        let g = frame.g;
        let rest = g.remove_vertices(removed);
        let mut set = chosen.clone();
        let mut child_steps = Vec::new();
        let mut recursed = Vec::new();
        for comp in rest.graph.connected_components() {
            let labels: Vec<usize> = comp.map.iter().map(|&i| rest.map[i]).collect();
            let top: Vec<usize> = labels.iter().map(|&i| frame.map[i]).collect();
            let (sub, steps) = self.iso(&comp.graph, &top, frame.depth + 1)?;
            set.extend(sub.iter().map(|v| labels[v]));
            recursed.push(top);
            child_steps.extend(steps);
        }
        let mut steps = vec![TraceStep {
            tag,
            depth: frame.depth,
            graph: frame.lift(&g.vertex_set()),
            chosen: frame.lift(&chosen),
            recursed,
        }];
        steps.extend(child_steps);
        Ok((set, steps))
    }

    /// No `k`-clique.
    fn case1(&self, frame: &Frame<'_>) -> Result<Assembly> {
        let (g, k) = (frame.g, self.k);
        if let Some(v) = (0..g.n()).find(|&v| g.degree(v) + 2 <= k) {
            return self.assemble(frame, CaseTag::Case1_1, VertexSet::new(), &VertexSet::singleton(v));
        }
        let top = g.max_degree();
        let v = (0..g.n()).find(|&v| g.degree(v) == top).unwrap();
        if top == k - 1 {
            return Ok(self.leaf(frame, CaseTag::Case1_2Regular, VertexSet::singleton(v)));
        }
        let closed = g.closed_neighborhood_of(v);
        if closed.len() == g.n() {
            return Ok(self.leaf(frame, CaseTag::Case1_2Dominating, VertexSet::singleton(v)));
        }
        if k == 3 {
            let rest = g.vertex_set().difference(&closed);
            let square = g
                .induced(&rest)
                .graph
                .component_sets()
                .into_iter()
                .map(|c| g.induced(&rest).lift(&c))
                .find(|c| c.len() == 4 && g.induced(c).graph.is_cycle());
            if let Some(square) = square {
                let reach = g.neighbors(v).clone();
                let y1 =
                    square.iter().find(|&y| !g.neighbors(y).is_disjoint(&reach)).expect("component is linked to N(v)");
                let mut cut = g.neighbors(y1).intersection(&square);
                cut.insert(y1);
                return self.assemble(frame, CaseTag::Case1_2C4Fix, VertexSet::singleton(y1), &cut);
            }
        }
        self.assemble(frame, CaseTag::Case1_2Recurse, VertexSet::singleton(v), &closed)
    }

    /// At least one `k`-clique.
    fn case2(&self, frame: &Frame<'_>) -> Result<Assembly> {
        let (g, k) = (frame.g, self.k);
        let clique = find_clique(g, k).expect("case 2 has a clique");
        let v = clique
            .iter()
            .find(|&v| !g.closed_neighborhood_of(v).is_subset(&clique))
            .expect("connected graph larger than the clique");
        let closed_v = g.closed_neighborhood_of(v);
        if closed_v.len() == g.n() {
            return Ok(self.leaf(frame, CaseTag::Case2Dominating, VertexSet::singleton(v)));
        }

        let outside = g.induced(&g.vertex_set().difference(&closed_v));
        let components: Vec<VertexSet> = outside.graph.component_sets().iter().map(|c| outside.lift(c)).collect();
        let links = |h: &VertexSet| g.neighbors(v).intersection(&g.closed_neighborhood_unchecked(h));
        let is_clique = |h: &VertexSet| h.len() == k && g.induced(h).graph.is_complete();
        let cliques: Vec<&VertexSet> = components.iter().filter(|h| is_clique(h)).collect();

        if cliques.is_empty() {
            return self.assemble(frame, CaseTag::Case2_1, VertexSet::singleton(v), &closed_v);
        }

        if let Some(&h_prime) = cliques.iter().find(|h| links(h).len() == 1) {
            return self.case2_2_2(frame, v, h_prime, links(h_prime).first().unwrap());
        }

        // every clique component is linked to at least two neighbours of v
        let h_prime = cliques[0];
        let x = links(h_prime).first().unwrap();
        let y = h_prime.intersection(g.neighbors(x)).first().unwrap();
        let mut big_x = h_prime.clone();
        big_x.insert(x);
        let without_x = g.induced(&g.vertex_set().difference(&big_x));
        let v_part =
            without_x.graph.component_sets().into_iter().map(|c| without_x.lift(&c)).find(|c| c.contains(v)).unwrap();
        if !is_clique(&v_part) {
            return self.assemble(frame, CaseTag::Case2_2_1, VertexSet::singleton(y), &big_x);
        }

        let vxy: VertexSet = [v, x, y].into_iter().collect();
        let y_set = big_x.union(&v_part).difference(&vxy);
        let y_graph = g.induced(&y_set);
        let Some(witness) = contains_family(&y_graph.graph, self.family) else {
            return self.assemble(frame, CaseTag::Case2_2_1X, VertexSet::singleton(x), &vxy);
        };

        let witness = y_graph.lift(&witness.vertices);
        let z = witness
            .iter()
            .find(|&z| g.neighbors(z).intersection(&y_set).len() + 1 >= k)
            .expect("an F-graph has a vertex of degree at least k - 1");
        let mut w: VertexSet = g.neighbors(z).intersection(&y_set).iter().take(k - 1).collect();
        w.insert(z);
        let home = if v_part.contains(z) { &v_part } else { h_prime };
        let big_z = home.union(&w);

        let only_x = components.iter().any(|h| !is_clique(h) && links(h) == VertexSet::singleton(x));
        if only_x {
            return self.assemble(frame, CaseTag::Case2_2_1Z, VertexSet::singleton(z), &big_z);
        }
        if let Some(single) = (0..g.n()).find(|&u| {
            let rest = g.remove_closed_neighborhood(&VertexSet::singleton(u)).expect("valid vertex");
            contains_family(&rest.graph, self.family).is_none()
        }) {
            return Ok(self.leaf(frame, CaseTag::Case2_2_1Single, VertexSet::singleton(single)));
        }
        self.assemble(frame, CaseTag::Case2_2_1, VertexSet::singleton(y), &big_x)
    }

    /// A clique component `h_prime` linked to `x` only. Tries, in order, the
    /// attachment vertex of `h_prime`, then `x`, then `v`, each followed by
    /// recursion on what its closed neighbourhood leaves; the first assembly
    /// within the bound wins. Otherwise the exact solver settles this graph.
    fn case2_2_2(&self, frame: &Frame<'_>, v: usize, h_prime: &VertexSet, x: usize) -> Result<Assembly> {
        let g = frame.g;
        let bound = bound_value(g.m(), self.k);
        let y = h_prime.intersection(g.neighbors(x)).first().unwrap();
        for pivot in [y, x, v] {
            let closed = g.closed_neighborhood_of(pivot);
            let attempt = self.assemble(frame, CaseTag::Case2_2_2Fallback, VertexSet::singleton(pivot), &closed)?;
            if attempt.0.len() <= bound {
                return Ok(attempt);
            }
        }
        let exact = isolation_number(g, self.family);
        if exact.certified != Certification::ExactMinimum && exact.size > bound {
            return Err(Error::ConstructionFailed("exact fallback ran out of budget".into()));
        }
        Ok(self.leaf(frame, CaseTag::Case2_2_2Exact, exact.set))
    }
}

/// The smaller parity class of a BFS tree from vertex 0 (ties: the class of
/// vertex 0). Dominates any connected graph with at least two vertices.
fn bfs_parity_class(g: &Graph) -> VertexSet {
    let mut depth = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::from([0]);
    depth[0] = 0;
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let even: VertexSet = (0..g.n()).filter(|&v| depth[v] % 2 == 0).collect();
    let odd = g.vertex_set().difference(&even);
    if odd.len() < even.len() {
        odd
    } else {
        even
    }
}
