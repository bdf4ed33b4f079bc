//! Strongly connected components (Kosaraju), used to decompose reducible
//! nonnegative matrices before Collatz-Wielandt bounds.

use alloc::vec;
use alloc::vec::Vec;

pub fn strongly_connected_components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }

    // First pass: finish order on the original graph, iterative DFS.
    let mut visited = vec![false; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        visited[start] = true;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < adj[v].len() {
                let u = adj[v][*next];
                *next += 1;
                if !visited[u] {
                    visited[u] = true;
                    stack.push((u, 0));
                }
            } else {
                order.push(v);
                stack.pop();
            }
        }
    }

    let mut rev = vec![Vec::new(); n];
    for (v, edges) in adj.iter().enumerate() {
        for &u in edges {
            rev[u].push(v);
        }
    }

    // Second pass on the reversed graph in decreasing finish order.
    visited.fill(false);
    let mut components = Vec::new();
    for &start in order.iter().rev() {
        if visited[start] {
            continue;
        }
        let mut component = Vec::new();
        let mut stack = vec![start];
        visited[start] = true;
        while let Some(v) = stack.pop() {
            component.push(v);
            for &u in &rev[v] {
                if !visited[u] {
                    visited[u] = true;
                    stack.push(u);
                }
            }
        }
        component.sort();
        components.push(component);
    }
    components
}
