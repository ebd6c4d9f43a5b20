use crate::graph::Graph;

/// Vertices of some cycle, in cyclic order, or `None` for a forest.
///
/// Depth-first search from the lowest unvisited vertex, scanning neighbours
/// in ascending order; the first back edge closes the cycle.
pub fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut on_stack = vec![false; n];
    let mut visited = vec![false; n];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        // explicit stack of (vertex, remaining neighbours)
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(root, g.neighbors(root).to_vec())];
        visited[root] = true;
        on_stack[root] = true;
        while let Some((v, pending)) = stack.last_mut() {
            let v = *v;
            if pending.is_empty() {
                on_stack[v] = false;
                stack.pop();
                continue;
            }
            let w = pending.remove(0);
            if w == parent[v] {
                continue;
            }
            if on_stack[w] {
                let mut cycle = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                cycle.reverse();
                return Some(cycle);
            }
            if !visited[w] {
                visited[w] = true;
                on_stack[w] = true;
                parent[w] = v;
                stack.push((w, g.neighbors(w).to_vec()));
            }
        }
    }
    None
}
