//! Exact vertex colouring: DSATUR greedy for an upper bound, clique number
//! for a lower bound, DSATUR backtracking to close the gap.

use super::clique::clique_number;
use crate::graph::Graph;

const NO_COLOR: usize = usize::MAX;

/// Greedy DSATUR colouring; returns the colour of each vertex.
pub fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![NO_COLOR; n];
    let mut used: Vec<Vec<bool>> = vec![Vec::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == NO_COLOR)
            .max_by_key(|&v| (used[v].iter().filter(|&&b| b).count(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..).find(|&c| !used[v].get(c).copied().unwrap_or(false)).unwrap();
        color[v] = c;
        for u in g.neighbors(v) {
            if used[u].len() <= c {
                used[u].resize(c + 1, false);
            }
            used[u][c] = true;
        }
    }
    color
}

/// A proper colouring with at most `colors` colours, if one exists.
pub fn color_with(g: &Graph, colors: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if colors == 0 {
        return None;
    }
    let greedy = dsatur_greedy(g);
    if greedy.iter().max().map_or(0, |c| c + 1) <= colors {
        return Some(greedy);
    }
    // greedy needed more than `colors`, so colors < n here
    assert!(colors <= 64, "exact colouring supports at most 64 colours");
    let mut state = Search {
        g,
        colors,
        color: vec![NO_COLOR; n],
        // count of neighbours holding each colour
        counts: vec![[0u16; 64]; n],
        forbidden: vec![0u64; n],
    };
    state.solve(0).then_some(state.color)
}

pub fn is_colorable(g: &Graph, colors: usize) -> bool {
    color_with(g, colors).is_some()
}

/// The chromatic number; 0 for the graph with no vertices.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.m() == 0 {
        return 1;
    }
    let upper = dsatur_greedy(g).into_iter().max().unwrap() + 1;
    let lower = clique_number(g);
    (lower..upper).find(|&c| is_colorable(g, c)).unwrap_or(upper)
}

struct Search<'a> {
    g: &'a Graph,
    colors: usize,
    color: Vec<usize>,
    counts: Vec<[u16; 64]>,
    forbidden: Vec<u64>,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for u in self.g.neighbors(v) {
            self.counts[u][c] += 1;
            self.forbidden[u] |= 1 << c;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = NO_COLOR;
        for u in self.g.neighbors(v) {
            self.counts[u][c] -= 1;
            if self.counts[u][c] == 0 {
                self.forbidden[u] &= !(1 << c);
            }
        }
    }

    fn solve(&mut self, colored: usize) -> bool {
        let n = self.g.n();
        if colored == n {
            return true;
        }
        let v = (0..n)
            .filter(|&v| self.color[v] == NO_COLOR)
            .max_by_key(|&v| (self.forbidden[v].count_ones(), self.g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let max_used = self.color.iter().filter(|&&c| c != NO_COLOR).max().map_or(0, |&c| c + 1);
        // colours beyond the first unused one are symmetric
        let limit = self.colors.min(max_used + 1);
        for c in 0..limit {
            if self.forbidden[v] & (1 << c) != 0 {
                continue;
            }
            self.assign(v, c);
            if self.solve(colored + 1) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}
