//! Independent brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use spexlab::Graph;

/// Whether the vertices in `ring` (at most 16) span a Hamiltonian cycle of `g`.
fn has_hamiltonian_cycle(g: &Graph, ring: &[usize]) -> bool {
    let m = ring.len();
    if m < 3 {
        return false;
    }
    // reach[mask][j]: a path from ring[0] through exactly `mask` ends at ring[j].
    let mut reach = vec![vec![false; m]; 1 << m];
    reach[1][0] = true;
    for mask in 1usize..1 << m {
        if mask & 1 == 0 {
            continue;
        }
        for j in 0..m {
            if !reach[mask][j] {
                continue;
            }
            for next in 1..m {
                if mask >> next & 1 == 0 && g.has_edge(ring[j], ring[next]) {
                    reach[mask | 1 << next][next] = true;
                }
            }
        }
    }
    let full = (1 << m) - 1;
    (1..m).any(|j| reach[full][j] && g.has_edge(ring[j], ring[0]))
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Odd wheel `W_{2k+1}` oracle: some `(2k+1)`-subset has a hub adjacent to the
/// other `2k` vertices, and those `2k` vertices carry a Hamiltonian cycle.
pub fn oracle_odd_wheel(g: &Graph, k: usize) -> bool {
    let size = 2 * k + 1;
    if g.order() < size {
        return false;
    }
    subsets(g.order(), size).iter().any(|set| {
        set.iter().any(|&hub| {
            let ring: Vec<usize> = set.iter().copied().filter(|&v| v != hub).collect();
            ring.iter().all(|&v| g.has_edge(hub, v)) && has_hamiltonian_cycle(g, &ring)
        })
    })
}

/// Longest path order by exhaustive DFS.
pub fn oracle_longest_path(g: &Graph) -> usize {
    fn dfs(g: &Graph, v: usize, seen: &mut Vec<bool>, depth: usize, best: &mut usize) {
        *best = (*best).max(depth);
        for u in 0..g.order() {
            if !seen[u] && g.has_edge(v, u) {
                seen[u] = true;
                dfs(g, u, seen, depth + 1, best);
                seen[u] = false;
            }
        }
    }
    let mut best = 0;
    for s in 0..g.order() {
        let mut seen = vec![false; g.order()];
        seen[s] = true;
        dfs(g, s, &mut seen, 1, &mut best);
    }
    best
}
