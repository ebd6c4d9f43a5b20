use super::Graph;
use crate::error::{Error, Result};

/// The labelled standard graphs `K_n`, `P_n` and `C_n` on vertices `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    Path(usize),
    Cycle(usize),
}

pub fn build_named(kind: NamedGraph) -> Result<Graph> {
    match kind {
        NamedGraph::Complete(0) | NamedGraph::Path(0) | NamedGraph::Cycle(0) => {
            Err(Error::InvalidNamedGraph("order must be at least 1".into()))
        }
        NamedGraph::Cycle(n) if n < 3 => Err(Error::InvalidNamedGraph(format!("cycle of order {n} (need n >= 3)"))),
        NamedGraph::Complete(n) => Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))),
        NamedGraph::Path(n) => Graph::from_edges(n, (1..n).map(|v| (v - 1, v))),
        NamedGraph::Cycle(n) => Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_examples() {
        let k4 = build_named(NamedGraph::Complete(4)).unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        assert!((0..4).all(|v| k4.degree(v) == 3));

        let p1 = build_named(NamedGraph::Path(1)).unwrap();
        assert_eq!((p1.n(), p1.m()), (1, 0));

        let c5 = build_named(NamedGraph::Cycle(5)).unwrap();
        assert_eq!((c5.n(), c5.m()), (5, 5));
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(c5.is_cycle());
    }

    #[test]
    fn named_errors() {
        assert!(build_named(NamedGraph::Cycle(2)).is_err());
        assert!(build_named(NamedGraph::Complete(0)).is_err());
        assert!(build_named(NamedGraph::Path(0)).is_err());
    }

    #[test]
    fn regular_degrees() {
        for k in 1..9 {
            let g = build_named(NamedGraph::Complete(k)).unwrap();
            assert!((0..k).all(|v| g.degree(v) == k - 1));
        }
        for n in 3..12 {
            let g = build_named(NamedGraph::Cycle(n)).unwrap();
            assert!((0..n).all(|v| g.degree(v) == 2));
        }
    }
}
