//! Exact walk counts and the lexicographic walk order.
//!
//! `w^ℓ(u)` counts walks of length `ℓ` starting at `u`; `W^ℓ` sums them over
//! all vertices. Graphs are ordered by comparing `(W^1, W^2, ...)`
//! lexicographically. Since `W^ℓ` satisfies a linear recurrence of order at
//! most the number of vertices, two graphs of order at most `n` that agree
//! through level `2n` agree at every level; `2n` is the default horizon.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::Graph;

/// `table[ℓ][u] = w^ℓ(u)` for `0 ≤ ℓ ≤ max_len`; row 0 is all ones.
pub fn vertex_walks(g: &Graph, max_len: usize) -> Vec<Vec<BigUint>> {
    let adj: Vec<Vec<usize>> = (0..g.order()).map(|u| g.neighbors(u).collect()).collect();
    let mut table = Vec::with_capacity(max_len + 1);
    table.push(vec![BigUint::one(); g.order()]);
    for l in 1..=max_len {
        let prev: &Vec<BigUint> = &table[l - 1];
        let row = adj
            .iter()
            .map(|nbrs| nbrs.iter().fold(BigUint::zero(), |acc, &v| acc + &prev[v]))
            .collect();
        table.push(row);
    }
    table
}

/// `W^1, ..., W^L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WalkProfile {
    #[serde(serialize_with = "as_strings")]
    pub counts: Vec<BigUint>,
}

fn as_strings<S: serde::Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

impl WalkProfile {
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `W^ℓ` for `1 ≤ ℓ ≤ len`.
    pub fn level(&self, l: usize) -> &BigUint {
        &self.counts[l - 1]
    }
}

/// Profile through `max_len`, each level computed as `Σ w^ℓ(u)` and checked
/// against `Σ w^i(u) w^{ℓ−i}(u)` with `i = ⌊ℓ/2⌋`.
pub fn walk_profile(g: &Graph, max_len: usize) -> WalkProfile {
    let table = vertex_walks(g, max_len);
    let counts = (1..=max_len)
        .map(|l| {
            let direct: BigUint = table[l].iter().sum();
            let i = l / 2;
            let split: BigUint = table[i].iter().zip(&table[l - i]).map(|(a, b)| a * b).sum();
            assert_eq!(direct, split, "walk counts disagree at level {l}");
            direct
        })
        .collect();
    WalkProfile { counts }
}

/// `Σ_u w^i(u) w^{ℓ−i}(u)` for an explicit split point.
pub fn split_count(table: &[Vec<BigUint>], l: usize, i: usize) -> BigUint {
    table[i].iter().zip(&table[l - i]).map(|(a, b)| a * b).sum()
}

pub fn default_horizon(g1: &Graph, g2: &Graph) -> usize {
    (2 * g1.order().max(g2.order())).max(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Relation {
    Succ,
    Equiv,
    Prec,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Relation::Succ => "SUCC",
            Relation::Equiv => "EQUIV",
            Relation::Prec => "PREC",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderResult {
    pub relation: Relation,
    /// First level where the counts differ.
    pub witness_level: Option<usize>,
    pub horizon: usize,
}

pub fn compare_profiles(a: &WalkProfile, b: &WalkProfile) -> OrderResult {
    let horizon = a.len().min(b.len());
    for l in 1..=horizon {
        match a.level(l).cmp(b.level(l)) {
            Ordering::Equal => continue,
            Ordering::Greater => {
                return OrderResult {
                    relation: Relation::Succ,
                    witness_level: Some(l),
                    horizon,
                }
            }
            Ordering::Less => {
                return OrderResult {
                    relation: Relation::Prec,
                    witness_level: Some(l),
                    horizon,
                }
            }
        }
    }
    OrderResult {
        relation: Relation::Equiv,
        witness_level: None,
        horizon,
    }
}

/// Compares through `horizon`, or through `2·max order` when `None`.
pub fn walk_compare(g1: &Graph, g2: &Graph, horizon: Option<usize>) -> OrderResult {
    let l = horizon.unwrap_or_else(|| default_horizon(g1, g2));
    compare_profiles(&walk_profile(g1, l), &walk_profile(g2, l))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExInfinity {
    /// Indices into the input family, ascending.
    pub indices: Vec<usize>,
    pub survivors: Vec<Graph>,
    /// Last level at which the surviving set shrank; 0 if it never did.
    pub stabilization_level: usize,
    pub horizon: usize,
}

/// Keeps the members maximizing `W^1`, then among those `W^2`, and so on
/// through the horizon (default `2·max order`).
pub fn ex_infinity(family: &[Graph], horizon: Option<usize>, exec: Exec) -> Result<ExInfinity> {
    if family.is_empty() {
        return Err(Error::Infeasible("EX of an empty family".into()));
    }
    let horizon = horizon.unwrap_or_else(|| (2 * family.iter().map(Graph::order).max().unwrap_or(0)).max(1));
    let profiles = exec.map(family, |g| walk_profile(g, horizon));
    let mut alive: Vec<usize> = (0..family.len()).collect();
    let mut stabilization_level = 0;
    for l in 1..=horizon {
        let best = alive.iter().map(|&i| profiles[i].level(l)).max().expect("non-empty").clone();
        let before = alive.len();
        alive.retain(|&i| *profiles[i].level(l) == best);
        if alive.len() < before {
            stabilization_level = l;
        }
    }
    Ok(ExInfinity {
        survivors: alive.iter().map(|&i| family[i].clone()).collect(),
        indices: alive,
        stabilization_level,
        horizon,
    })
}

/// Structure of the component holding the deficient vertex `u` of a nearly
/// `Δ`-regular graph: `N₁`, `N₂` are the vertices at distance 1 and 2 from
/// `u`, `d_i(v)` counts neighbors of `v` in `N_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaParams {
    pub delta: u64,
    pub n: u64,
    pub q: u64,
    /// `e(N₁, N₂)`.
    pub e12: u64,
    /// `Σ_{v∈N₁} d₂(v)²`.
    pub sum_d2sq: u64,
    /// `Σ_{v∈N₂} d₁(v)²`.
    pub sum_d1sq: u64,
}

impl LemmaParams {
    pub fn n2(&self) -> u64 {
        self.q.saturating_sub(self.delta)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Infeasible(msg));
        let (d, q) = (self.delta, self.q);
        if d < 3 {
            return bad(format!("Δ must be at least 3, got {d}"));
        }
        if q < d + 2 || q > 2 * d - 1 || q % 2 == 0 {
            return bad(format!("component order q = {q} must be odd in [Δ+2, 2Δ−1]"));
        }
        if self.n < q {
            return bad(format!("n = {} is smaller than q = {q}", self.n));
        }
        let n2 = self.n2();
        let lower = (n2 * (d + 1 - n2)).max(2 * (d - 1));
        let upper = (d - 1) * (d - 1);
        if self.e12 < lower || self.e12 > upper {
            return bad(format!("e(N1,N2) = {} outside [{lower}, {upper}]", self.e12));
        }
        // Cauchy–Schwarz and per-vertex caps on the squared sums
        let e = self.e12;
        if self.sum_d2sq * (d - 1) < e * e || self.sum_d2sq > n2 * e {
            return bad(format!("Σ d2² = {} inconsistent with e(N1,N2) = {e}", self.sum_d2sq));
        }
        if self.sum_d1sq * n2 < e * e || self.sum_d1sq > (d - 1) * e {
            return bad(format!("Σ d1² = {} inconsistent with e(N1,N2) = {e}", self.sum_d1sq));
        }
        Ok(())
    }
}

/// `W^1..W^6` in closed form from the structural parameters.
pub fn closed_form_profile(p: &LemmaParams) -> Result<Vec<BigUint>> {
    p.validate()?;
    let d = BigInt::from(p.delta);
    let n = BigInt::from(p.n);
    let e12 = BigInt::from(p.e12);
    let one = BigInt::one();
    let pw = |k: u32| d.pow(k);
    let dm1 = &d - &one;
    let dsq_m1 = pw(2) - &one;
    let cubic = pw(3) - BigInt::from(2) * &d + &one;
    let w1 = &n * &d - &one;
    let w2 = (&n - &one) * pw(2) + &dm1 * &dm1;
    let w3 = &n * pw(3) - BigInt::from(3) * pw(2) + BigInt::from(2) * &d;
    let w4 = &n * pw(4) - BigInt::from(4) * pw(3) + BigInt::from(3) * pw(2) + &d - &one;
    let w5 = (&n - &d) * pw(5) + &d * (&d + &one) * dm1.pow(3) + &dsq_m1 * &dm1 * &cubic - &e12;
    let w6 = (&n - &d) * pw(6) + dm1.pow(2) * dsq_m1.pow(2) + &dm1 * cubic.pow(2)
        - (BigInt::from(4) * &d - BigInt::from(2)) * &e12
        + BigInt::from(p.sum_d2sq)
        + BigInt::from(p.sum_d1sq);
    [w1, w2, w3, w4, w5, w6]
        .into_iter()
        .map(|w| {
            w.to_biguint()
                .ok_or_else(|| Error::Infeasible("closed form evaluated to a negative count".into()))
        })
        .collect()
}

/// Reads the parameters off a graph with one vertex of degree `Δ−1` and all
/// others of degree `Δ`, whose deficient component has radius 2 around the
/// deficient vertex.
pub fn extract_lemma_params(g: &Graph) -> Result<LemmaParams> {
    let dc = g.classify_degrees();
    let u = dc
        .deficient_vertex
        .filter(|_| dc.is_nearly_regular)
        .ok_or_else(|| Error::Infeasible("graph is not nearly regular".into()))?;
    let dist = &g.distances_from(u);
    let reached: Vec<usize> = (0..g.order()).filter(|&v| dist[v].is_some()).collect();
    if reached.iter().any(|&v| dist[v] > Some(2)) {
        return Err(Error::Infeasible("deficient component has a vertex at distance 3".into()));
    }
    let layer = |i: usize| (0..g.order()).filter(move |&v| dist[v] == Some(i));
    let d_into = |v: usize, i: usize| g.neighbors(v).filter(|&w| dist[w] == Some(i)).count() as u64;
    let e12: u64 = layer(1).map(|v| d_into(v, 2)).sum();
    Ok(LemmaParams {
        delta: dc.max_degree as u64,
        n: g.order() as u64,
        q: reached.len() as u64,
        e12,
        sum_d2sq: layer(1).map(|v| d_into(v, 2).pow(2)).sum(),
        sum_d1sq: layer(2).map(|v| d_into(v, 1).pow(2)).sum(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, core_component, enumerate_family, path, primitive, FamilyKind, FamilySpec, Primitive};

    fn counts(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn small_profiles() {
        assert_eq!(walk_profile(&complete(3), 3).counts, counts(&[6, 12, 24]));
        assert_eq!(walk_profile(&path(4), 2).counts, counts(&[6, 10]));
        assert!(walk_profile(&Graph::empty(3), 0).is_empty());
    }

    #[test]
    fn compare_examples() {
        let c3 = primitive(Primitive::Cycle, 3).unwrap();
        let two_c3 = Graph::disjoint_union(&[c3.clone(), c3]).unwrap();
        let c6 = primitive(Primitive::Cycle, 6).unwrap();
        assert_eq!(walk_compare(&two_c3, &c6, None).relation, Relation::Equiv);
        let k3k1 = Graph::disjoint_union(&[complete(3), Graph::empty(1)]).unwrap();
        let r = walk_compare(&k3k1, &path(4), None);
        assert_eq!((r.relation, r.witness_level, r.horizon), (Relation::Succ, Some(2), 8));
        let r = walk_compare(&path(4), &k3k1, Some(5));
        assert_eq!((r.relation, r.witness_level), (Relation::Prec, Some(2)));
        assert_eq!(walk_compare(&c6, &c6, None).relation, Relation::Equiv);
    }

    #[test]
    fn deficient_vertex_walks() {
        for delta in [3u64, 5, 7] {
            let core = core_component(delta as usize + 1).unwrap();
            let t = vertex_walks(&core, 3);
            assert_eq!(t[2][0], BigUint::from(delta * delta - delta));
            assert_eq!(t[3][0], BigUint::from((delta * delta - 1) * (delta - 1)));
        }
        let cube = crate::constructors::circulant_regular(8, 3).unwrap();
        let t = vertex_walks(&cube, 6);
        assert!(t[6].iter().all(|w| *w == BigUint::from(3u64.pow(6))));
    }

    #[test]
    fn closed_forms_match_core_members() {
        let fam = enumerate_family(&FamilySpec::new(FamilyKind::V, 4, 13).unwrap()).unwrap();
        assert!(!fam.is_empty());
        for g in &fam {
            let p = extract_lemma_params(g).unwrap();
            assert_eq!(p.e12, 2 * (p.delta - 1));
            assert_eq!(closed_form_profile(&p).unwrap(), walk_profile(g, 6).counts);
        }
    }

    #[test]
    fn closed_form_rejects_inconsistent_parameters() {
        let good = LemmaParams {
            delta: 3,
            n: 13,
            q: 5,
            e12: 4,
            sum_d2sq: 8,
            sum_d1sq: 8,
        };
        assert!(closed_form_profile(&good).is_ok());
        assert!(closed_form_profile(&LemmaParams { e12: 3, ..good }).is_err());
        assert!(closed_form_profile(&LemmaParams { q: 6, ..good }).is_err());
        assert!(closed_form_profile(&LemmaParams { delta: 2, ..good }).is_err());
        assert!(closed_form_profile(&LemmaParams { sum_d2sq: 100, ..good }).is_err());
    }

    #[test]
    fn ex_infinity_trivial_cases() {
        let c6 = primitive(Primitive::Cycle, 6).unwrap();
        let single = ex_infinity(std::slice::from_ref(&c6), None, Exec::Serial).unwrap();
        assert_eq!(single.survivors, vec![c6.clone()]);
        let c3 = primitive(Primitive::Cycle, 3).unwrap();
        let two_c3 = Graph::disjoint_union(&[c3.clone(), c3]).unwrap();
        let all = ex_infinity(&[c6.clone(), two_c3.clone()], None, Exec::Serial).unwrap();
        assert_eq!(all.indices, vec![0, 1]);
        assert_eq!(all.stabilization_level, 0);
        let k3k1 = Graph::disjoint_union(&[complete(3), Graph::empty(1)]).unwrap();
        let r = ex_infinity(&[path(4), k3k1.clone()], None, Exec::Parallel).unwrap();
        assert_eq!((r.indices.clone(), r.stabilization_level), (vec![1], 2));
        assert!(ex_infinity(&[], None, Exec::Serial).is_err());
    }
}
