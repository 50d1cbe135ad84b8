//! Forbidden-subgraph queries: cycles of a given length, odd wheels, longest
//! paths and stars.
//!
//! Cycle and path searches are exact backtracking. Two vertices with the same
//! neighbourhood (open or closed) are twins; swapping them is an automorphism
//! of the graph, so a search only ever branches into the smallest unused twin
//! of each class and tries one start vertex per class. That keeps the
//! near-complete-bipartite neighbourhoods of the extremal candidates cheap.
//!
//! Every search carries a node-expansion budget. Running out yields
//! [`Error::BudgetExhausted`], never a guessed answer.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{words_for, Graph};

pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Debug)]
struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExhausted { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(n: usize) -> Self {
        Bits(vec![0; words_for(n)])
    }
    fn ones(n: usize) -> Self {
        let mut b = Bits::zeros(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }
    #[inline]
    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }
    #[inline]
    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }
    #[inline]
    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    /// Smallest element of `self ∩ a ∩ !b`.
    fn first_in(&self, a: &Bits, b: &Bits) -> Option<usize> {
        for (i, ((x, y), z)) in self.0.iter().zip(&a.0).zip(&b.0).enumerate() {
            let w = x & y & !z;
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// Twin classes: vertices with equal open neighbourhoods, or failing that,
/// equal closed neighbourhoods. Returns `class[v]` and the member mask of
/// each class.
fn twin_classes(g: &Graph) -> (Vec<usize>, Vec<Bits>) {
    let n = g.order();
    let mut class = vec![usize::MAX; n];
    let mut masks: Vec<Bits> = Vec::new();
    let mut open: HashMap<&[u64], Vec<usize>> = HashMap::new();
    for v in 0..n {
        open.entry(g.row(v)).or_default().push(v);
    }
    let mut closed: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for v in 0..n {
        if open[g.row(v)].len() == 1 {
            let mut row = g.row(v).to_vec();
            row[v / 64] |= 1 << (v % 64);
            closed.entry(row).or_default().push(v);
        }
    }
    let mut groups: Vec<Vec<usize>> = open.into_values().filter(|m| m.len() > 1).collect();
    groups.extend(closed.into_values());
    groups.sort();
    for members in groups {
        let mut mask = Bits::zeros(n);
        for &v in &members {
            class[v] = masks.len();
            mask.insert(v);
        }
        masks.push(mask);
    }
    (class, masks)
}

/// Repeatedly strips vertices with fewer than two alive neighbours.
fn peel_to_two_core(g: &Graph, alive: &mut Bits) {
    let n = g.order();
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if alive.contains(v) {
                let deg = g
                    .row(v)
                    .iter()
                    .zip(&alive.0)
                    .map(|(a, b)| (a & b).count_ones())
                    .sum::<u32>();
                if deg < 2 {
                    alive.remove(v);
                    changed = true;
                }
            }
        }
    }
}

fn bfs_within(g: &Graph, alive: &Bits, source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[source] = 0;
    let mut queue = std::collections::VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if alive.contains(v) && dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

struct CycleSearch<'a> {
    g: &'a Graph,
    len: usize,
    start: usize,
    alive: &'a Bits,
    class: &'a [usize],
    masks: &'a [Bits],
    dist: Vec<usize>,
    visited: Bits,
}

impl CycleSearch<'_> {
    fn extend(&mut self, v: usize, placed: usize, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        if placed == self.len {
            return Ok(self.g.has_edge(v, self.start));
        }
        let remaining_edges = self.len - placed;
        let candidates: Vec<usize> = self
            .g
            .neighbors(v)
            .filter(|&w| self.alive.contains(w) && !self.visited.contains(w))
            .collect();
        for w in candidates {
            if self.dist[w] > remaining_edges {
                continue;
            }
            let c = self.class[w];
            if c != usize::MAX && self.masks[c].first_in(self.alive, &self.visited) != Some(w) {
                continue;
            }
            self.visited.insert(w);
            let found = self.extend(w, placed + 1, budget)?;
            self.visited.remove(w);
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn cycle_search(g: &Graph, len: usize, budget: &mut Budget) -> Result<bool> {
    let n = g.order();
    if len < 3 || len > n {
        return Ok(false);
    }
    let (class, masks) = twin_classes(g);
    let mut alive = Bits::ones(n);
    peel_to_two_core(g, &mut alive);
    for s in 0..n {
        if !alive.contains(s) {
            continue;
        }
        if alive.count() < len {
            return Ok(false);
        }
        let dist = bfs_within(g, &alive, s);
        let reach = dist.iter().filter(|&&d| d != usize::MAX).count();
        if reach >= len {
            let mut visited = Bits::zeros(n);
            visited.insert(s);
            let mut search = CycleSearch {
                g,
                len,
                start: s,
                alive: &alive,
                class: &class,
                masks: &masks,
                dist,
                visited,
            };
            if search.extend(s, 1, budget)? {
                return Ok(true);
            }
        }
        // no cycle through s, hence none through any twin of s
        match class[s] {
            usize::MAX => alive.remove(s),
            c => {
                for v in 0..n {
                    if masks[c].contains(v) {
                        alive.remove(v);
                    }
                }
            }
        }
        peel_to_two_core(g, &mut alive);
    }
    Ok(false)
}

/// Whether `g` has a (not necessarily induced) cycle on exactly `len`
/// vertices. `len < 3` is never a cycle.
pub fn contains_cycle_of_length(g: &Graph, len: usize) -> Result<bool> {
    contains_cycle_of_length_with_budget(g, len, DEFAULT_BUDGET)
}

pub fn contains_cycle_of_length_with_budget(g: &Graph, len: usize, budget: u64) -> Result<bool> {
    cycle_search(g, len, &mut Budget::new(budget))
}

/// Whether `g` contains the odd wheel on `2k + 1` vertices, i.e. whether some
/// vertex's neighbourhood spans a cycle of length `2k`.
pub fn contains_odd_wheel(g: &Graph, k: usize) -> Result<bool> {
    contains_odd_wheel_with(g, k, DEFAULT_BUDGET, Exec::default())
}

/// Hub scan with an explicit per-hub budget and execution mode.
///
/// `true` if any hub succeeds; otherwise a budget error if any hub ran out;
/// otherwise `false`. The outcome is the same in every mode.
pub fn contains_odd_wheel_with(g: &Graph, k: usize, budget: u64, exec: Exec) -> Result<bool> {
    if k < 2 {
        return Err(Error::Infeasible(format!("odd wheels need k >= 2, got {k}")));
    }
    let rim = 2 * k;
    let (class, _) = twin_classes(g);
    let mut seen = vec![false; g.order()];
    let mut hubs: Vec<usize> = Vec::new();
    for (v, &c) in class.iter().enumerate() {
        if g.degree(v) < rim {
            continue;
        }
        match c {
            usize::MAX => hubs.push(v),
            c if !seen[c] => {
                seen[c] = true;
                hubs.push(v);
            }
            _ => {}
        }
    }
    hubs.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let probe = |&hub: &usize| -> Result<bool> {
        let nbrs: Vec<usize> = g.neighbors(hub).collect();
        cycle_search(&g.induced(&nbrs), rim, &mut Budget::new(budget))
    };
    match exec {
        Exec::Serial => {
            let mut exhausted = None;
            for hub in &hubs {
                match probe(hub) {
                    Ok(true) => return Ok(true),
                    Ok(false) => {}
                    Err(e) => exhausted = exhausted.or(Some(e)),
                }
            }
            exhausted.map_or(Ok(false), Err)
        }
        Exec::Parallel => {
            let results = exec.map(&hubs, probe);
            if results.iter().any(|r| matches!(r, Ok(true))) {
                return Ok(true);
            }
            results.into_iter().find(Result::is_err).unwrap_or(Ok(false))
        }
    }
}

struct PathSearch<'a> {
    g: &'a Graph,
    class: &'a [usize],
    masks: &'a [Bits],
    all: Bits,
    visited: Bits,
    best: usize,
    target: usize,
}

impl PathSearch<'_> {
    fn reachable_unvisited(&self, from: usize) -> usize {
        let mut seen = Bits::zeros(self.g.order());
        let mut stack = vec![from];
        let mut count = 0;
        while let Some(u) = stack.pop() {
            for w in self.g.neighbors(u) {
                if !self.visited.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    }

    fn extend(&mut self, v: usize, placed: usize, budget: &mut Budget) -> Result<()> {
        budget.tick()?;
        self.best = self.best.max(placed);
        if self.best == self.target || placed + self.reachable_unvisited(v) <= self.best {
            return Ok(());
        }
        let candidates: Vec<usize> = self.g.neighbors(v).filter(|&w| !self.visited.contains(w)).collect();
        for w in candidates {
            let c = self.class[w];
            if c != usize::MAX && self.masks[c].first_in(&self.all, &self.visited) != Some(w) {
                continue;
            }
            self.visited.insert(w);
            self.extend(w, placed + 1, budget)?;
            self.visited.remove(w);
            if self.best == self.target {
                break;
            }
        }
        Ok(())
    }
}

/// Number of vertices on a longest simple path.
pub fn longest_path_order(g: &Graph) -> Result<usize> {
    longest_path_order_with_budget(g, DEFAULT_BUDGET)
}

pub fn longest_path_order_with_budget(g: &Graph, budget: u64) -> Result<usize> {
    let mut budget = Budget::new(budget);
    let mut best = usize::from(g.order() > 0);
    let mut components = g.components();
    components.sort_by_key(|c| std::cmp::Reverse(c.graph.order()));
    for comp in components {
        let h = &comp.graph;
        if h.order() <= best {
            continue;
        }
        let (class, masks) = twin_classes(h);
        let mut search = PathSearch {
            g: h,
            class: &class,
            masks: &masks,
            all: Bits::ones(h.order()),
            visited: Bits::zeros(h.order()),
            best,
            target: h.order(),
        };
        let mut tried = vec![false; masks.len()];
        for s in 0..h.order() {
            if class[s] != usize::MAX {
                if tried[class[s]] {
                    continue;
                }
                tried[class[s]] = true;
            }
            search.visited.insert(s);
            search.extend(s, 1, &mut budget)?;
            search.visited.remove(s);
            if search.best == search.target {
                break;
            }
        }
        best = search.best;
    }
    Ok(best)
}

/// `K_{1,k}`-freeness, which is just `Δ(g) <= k - 1`.
pub fn is_star_free(g: &Graph, k: usize) -> bool {
    k >= 1 && g.max_degree() < k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, complete_bipartite, core_component, odd_wheel, primitive, Primitive};

    fn cycle(n: usize) -> Graph {
        primitive(Primitive::Cycle, n).unwrap()
    }

    #[test]
    fn cycles() {
        assert!(contains_cycle_of_length(&cycle(6), 6).unwrap());
        assert!(!contains_cycle_of_length(&cycle(6), 4).unwrap());
        for len in 3..=5 {
            assert!(contains_cycle_of_length(&complete(5), len).unwrap());
        }
        assert!(!contains_cycle_of_length(&complete(5), 6).unwrap());
        assert!(!contains_cycle_of_length(&complete_bipartite(3, 3), 5).unwrap());
        assert!(contains_cycle_of_length(&complete_bipartite(3, 3), 6).unwrap());
        assert!(!contains_cycle_of_length(&complete(5), 2).unwrap());
    }

    #[test]
    fn wheels() {
        assert!(contains_odd_wheel(&odd_wheel(2).unwrap(), 2).unwrap());
        assert!(contains_odd_wheel(&complete(6), 2).unwrap());
        assert!(!contains_odd_wheel(&complete(5), 3).unwrap());
        assert!(!contains_odd_wheel(&complete_bipartite(10, 10), 2).unwrap());
        assert!(contains_odd_wheel(&odd_wheel(4).unwrap(), 4).unwrap());
        assert!(!contains_odd_wheel(&odd_wheel(4).unwrap(), 3).unwrap());
        assert!(contains_odd_wheel(&complete(1), 1).is_err());
    }

    #[test]
    fn paths() {
        assert_eq!(longest_path_order(&cycle(7)).unwrap(), 7);
        let two_k4 = Graph::disjoint_union(&[complete(4), complete(4)]).unwrap();
        assert_eq!(longest_path_order(&two_k4).unwrap(), 4);
        assert_eq!(longest_path_order(&core_component(4).unwrap()).unwrap(), 5);
        assert_eq!(longest_path_order(&Graph::empty(3)).unwrap(), 1);
        assert_eq!(longest_path_order(&complete_bipartite(2, 5)).unwrap(), 5);
        assert_eq!(longest_path_order(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn stars() {
        assert!(is_star_free(&cycle(9), 3));
        assert!(!is_star_free(&complete_bipartite(1, 4), 4));
        assert!(is_star_free(&core_component(4).unwrap(), 4));
    }

    #[test]
    fn budget_is_reported() {
        let g = complete_bipartite(12, 12);
        assert_eq!(
            contains_cycle_of_length_with_budget(&g, 23, 5),
            Err(Error::BudgetExhausted { budget: 5 })
        );
        assert!(matches!(
            longest_path_order_with_budget(&cycle(30), 3),
            Err(Error::BudgetExhausted { .. })
        ));
    }
}
