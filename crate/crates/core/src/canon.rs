//! Canonical forms for isomorph rejection.
//!
//! The canonical form of a graph on at most 64 vertices is the
//! lexicographically minimal upper-triangular adjacency bit string over all
//! vertex permutations, read column by column (`(0,1), (0,2), (1,2), (0,3),
//! ...`, the same order graph6 uses). The search places one vertex per
//! position and only follows candidates whose new column is minimal, so it is
//! exact while visiting far fewer than `n!` permutations.
//!
//! [`GraphKey`] extends this to graphs of any order whose components are
//! small: it is the sorted multiset of component forms.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

pub const MAX_CANON_ORDER: usize = 64;

/// Column `p` holds `p` bits: adjacency of position `p` to positions
/// `0..p`, with position 0 in the most significant place.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    order: usize,
    cols: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        Graph::from_fn(self.order, |i, j| (self.cols[j] >> (j - 1 - i)) & 1 == 1)
    }
}

struct Search<'a> {
    n: usize,
    rows: &'a [u64],
    best: Vec<u64>,
    best_perm: Vec<usize>,
    perm: Vec<usize>,
}

impl Search<'_> {
    fn dfs(&mut self, p: usize, remaining: u64, cols: &[u64; 64], mut equal: bool, improved: bool) {
        if p == self.n {
            if improved || self.best_perm.is_empty() {
                self.best_perm.clone_from(&self.perm);
            }
            return;
        }
        let mut min = u64::MAX;
        let mut rest = remaining;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            min = min.min(cols[v]);
        }
        let mut improved = improved;
        if equal {
            if min > self.best[p] {
                return;
            }
            if min < self.best[p] {
                equal = false;
            }
        }
        if !equal {
            self.best[p] = min;
            improved = true;
        }
        let mut rest = remaining;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if cols[v] != min {
                continue;
            }
            let left = remaining & !(1u64 << v);
            let mut next = [0u64; 64];
            let mut it = left;
            while it != 0 {
                let w = it.trailing_zeros() as usize;
                it &= it - 1;
                next[w] = (cols[w] << 1) | ((self.rows[w] >> v) & 1);
            }
            self.perm.push(v);
            self.dfs(p + 1, left, &next, equal, improved);
            self.perm.pop();
            // the first child (re)wrote `best`; siblings must match it
            equal = true;
            improved = false;
        }
    }
}

/// Canonical form together with a labeling `order[pos] = original vertex`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    assert!(
        n <= MAX_CANON_ORDER,
        "canonical form supports at most {MAX_CANON_ORDER} vertices, got {n}"
    );
    if n == 0 {
        return (CanonicalForm { order: 0, cols: Vec::new() }, Vec::new());
    }
    let rows: Vec<u64> = (0..n).map(|u| g.row(u)[0]).collect();
    let mut search = Search {
        n,
        rows: &rows,
        best: vec![0; n],
        best_perm: Vec::new(),
        perm: Vec::with_capacity(n),
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    search.dfs(0, all, &[0u64; 64], false, false);
    (
        CanonicalForm {
            order: n,
            cols: search.best,
        },
        search.best_perm,
    )
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Relabels `g` into its canonical labeling.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

/// Isomorphism-invariant key: sorted canonical forms of the components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphKey(Vec<CanonicalForm>);

impl GraphKey {
    pub fn of(g: &Graph) -> Self {
        let mut parts: Vec<CanonicalForm> = g
            .components()
            .iter()
            .map(|c| canonical_form(&c.graph))
            .collect();
        parts.sort();
        GraphKey(parts)
    }

    pub fn components(&self) -> &[CanonicalForm] {
        &self.0
    }

    /// Disjoint union of the canonical components in key order.
    pub fn to_graph(&self) -> Graph {
        let parts: Vec<Graph> = self.0.iter().map(CanonicalForm::to_graph).collect();
        Graph::disjoint_union(&parts).unwrap_or_else(|_| Graph::empty(0))
    }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && GraphKey::of(a) == GraphKey::of(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Independent oracle: minimum over every permutation.
    fn brute_min(g: &Graph) -> Vec<u64> {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<u64>> = None;
        loop {
            let cols: Vec<u64> = (0..n)
                .map(|j| (0..j).fold(0u64, |acc, i| (acc << 1) | g.has_edge(perm[i], perm[j]) as u64))
                .collect();
            if best.as_ref().is_none_or(|b| cols < *b) {
                best = Some(cols);
            }
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        best.unwrap_or_default()
    }

    fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_fn(n, |_, _| it.next().unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn matches_permutation_oracle(g in graph_strategy(7)) {
            prop_assert_eq!(canonical_form(&g).cols, brute_min(&g));
        }

        #[test]
        fn invariant_under_relabeling(g in graph_strategy(12), seed in any::<u64>()) {
            let n = g.order();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.relabel(&perm);
            prop_assert_eq!(canonical_form(&g), canonical_form(&h));
            prop_assert_eq!(GraphKey::of(&g), GraphKey::of(&h));
        }

        #[test]
        fn labeling_reproduces_form(g in graph_strategy(10)) {
            let (form, order) = canonical_labeling(&g);
            let mut inv = vec![0; g.order()];
            for (pos, &v) in order.iter().enumerate() {
                inv[v] = pos;
            }
            prop_assert_eq!(g.relabel(&inv), form.to_graph());
        }
    }

    #[test]
    fn distinguishes_cubic_six() {
        let k33 = Graph::from_fn(6, |u, v| (u < 3) != (v < 3));
        let prism = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_ne!(canonical_form(&k33), canonical_form(&prism));
        assert!(!is_isomorphic(&k33, &prism));
    }
}
