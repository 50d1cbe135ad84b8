//! Simple undirected graphs on dense labels `0..order`, stored as bitset rows.
//!
//! A [`Graph`] is immutable once built. Every operation that "changes" a
//! graph returns a new value, so variants can be compared side by side.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(order: usize) -> usize {
    order.div_ceil(WORD)
}

/// Iterator over the set bits of a bitset row.
pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: usize,
    words: usize,
    adj: Vec<u64>,
}

/// Degree summary of a graph.
///
/// `is_nearly_regular` holds when exactly one vertex has degree
/// `max_degree - 1` and every other vertex has degree `max_degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeClassification {
    pub max_degree: usize,
    pub is_regular: bool,
    pub is_nearly_regular: bool,
    pub deficient_vertex: Option<usize>,
}

/// A connected piece of a larger graph together with the original label of
/// each of its vertices (`labels[i]` is the parent label of local vertex `i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl Graph {
    /// Graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> Self {
        let words = words_for(order);
        Graph {
            order,
            words,
            adj: vec![0; order * words],
        }
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// Swapped or repeated pairs are rejected rather than merged.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::EndpointOutOfRange { u, v, order });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a predicate over unordered pairs `u < v`.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(order);
        for v in 1..order {
            for u in 0..v {
                if adjacent(u, v) {
                    g.set(u, v);
                }
            }
        }
        g
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.adj[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Bitset row of `u`: bit `v` is set iff `u ~ v`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> Ones<'_> {
        Ones::new(self.row(u))
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|u| self.degree(u)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    /// Edges as pairs `(u, v)` with `u < v`, ascending lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.order, |u, v| !self.has_edge(u, v))
    }

    /// Disjoint union; part `i` is relabeled by the cumulative order of the
    /// parts before it.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        if parts.is_empty() {
            return Err(Error::EmptyList);
        }
        let total = parts.iter().map(Graph::order).sum();
        let mut g = Graph::empty(total);
        let mut offset = 0;
        for part in parts {
            for (u, v) in part.edges() {
                g.set(u + offset, v + offset);
            }
            offset += part.order;
        }
        Ok(g)
    }

    /// Chain join: the disjoint union plus every edge between part `i` and
    /// part `i + 1`. Non-consecutive parts stay non-adjacent, so an all-pairs
    /// join of three or more parts has to be built by nesting.
    pub fn join(parts: &[Graph]) -> Result<Graph> {
        let mut g = Graph::disjoint_union(parts)?;
        let mut offset = 0;
        for pair in parts.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let next = offset + a.order;
            for u in offset..next {
                for v in next..next + b.order {
                    g.set(u, v);
                }
            }
            offset = next;
        }
        Ok(g)
    }

    /// Copy of the graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.order || v >= self.order {
            return Err(Error::EndpointOutOfRange { u, v, order: self.order });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.set(u, v);
        Ok(g)
    }

    /// Copy of the graph with extra edges; duplicates are rejected.
    pub fn with_edges(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g = g.with_edge(u, v)?;
        }
        Ok(g)
    }

    /// Subgraph induced by `vertices`; local label `i` is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// Applies a relabeling: vertex `u` of `self` becomes `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order, "permutation length must equal order");
        let mut g = Graph::empty(self.order);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
        }
        g
    }

    /// Connected components ordered by their minimum original label.
    pub fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            let mut labels = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        labels.push(v);
                        queue.push_back(v);
                    }
                }
            }
            labels.sort_unstable();
            out.push(Component {
                graph: self.induced(&labels),
                labels,
            });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.components().len() == 1
    }

    pub fn classify_degrees(&self) -> DegreeClassification {
        let degrees = self.degrees();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let is_regular = degrees.iter().all(|&d| d == max_degree);
        let short: Vec<usize> = (0..self.order).filter(|&u| degrees[u] != max_degree).collect();
        let nearly = max_degree > 0 && short.len() == 1 && degrees[short[0]] + 1 == max_degree;
        DegreeClassification {
            max_degree,
            is_regular,
            is_nearly_regular: nearly,
            deficient_vertex: if nearly { Some(short[0]) } else { None },
        }
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, E={:?})", self.order, self.edges())
    }
}
