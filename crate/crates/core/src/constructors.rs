//! Named graphs, the near-regular families and the bipartite candidates for
//! odd-wheel-free extremal graphs.
//!
//! Families are assembled from connected components: a member is a multiset
//! of allowed components whose orders sum to the target. Components come from
//! [`crate::generate`], so every enumeration is exact up to isomorphism.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::GraphKey;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::generate::connected_near_regular;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Primitive {
    Complete,
    Cycle,
    Matching,
    Empty,
}

pub fn primitive(kind: Primitive, m: usize) -> Result<Graph> {
    match kind {
        Primitive::Complete => Ok(Graph::from_fn(m, |_, _| true)),
        Primitive::Empty => Ok(Graph::empty(m)),
        Primitive::Cycle => {
            if m < 3 {
                return Err(Error::Infeasible(format!("a cycle needs at least 3 vertices, got {m}")));
            }
            Ok(Graph::from_fn(m, |u, v| v == u + 1 || (u == 0 && v == m - 1)))
        }
        Primitive::Matching => {
            if !m.is_multiple_of(2) {
                return Err(Error::Infeasible(format!("a perfect matching needs an even order, got {m}")));
            }
            Ok(Graph::from_fn(m, |u, v| u % 2 == 0 && v == u + 1))
        }
    }
}

pub fn complete(m: usize) -> Graph {
    Graph::from_fn(m, |_, _| true)
}

/// Largest matching on `m` vertices: pairs `(0,1), (2,3), ...`.
pub fn maximum_matching(m: usize) -> Graph {
    Graph::from_fn(m, |u, v| u % 2 == 0 && v == u + 1)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_fn(a + b, |u, v| (u < a) != (v < a))
}

/// Path on `m` vertices.
pub fn path(m: usize) -> Graph {
    Graph::from_fn(m, |u, v| v == u + 1)
}

/// The odd wheel: a hub (vertex 0) joined to a cycle on `2k` vertices.
pub fn odd_wheel(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::Infeasible(format!("odd wheels need k >= 2, got {k}")));
    }
    Graph::join(&[complete(1), primitive(Primitive::Cycle, 2 * k)?])
}

/// `K1 ∨ co-M_{k-2} ∨ K2` (chain join): vertex 0 is the hub of degree
/// `k - 2`, vertices `1..k-1` carry the complement of a perfect matching and
/// the last two vertices form the `K2`. Every vertex but the hub has degree
/// `k - 1`.
pub fn core_component(k: usize) -> Result<Graph> {
    if k < 4 || !k.is_multiple_of(2) {
        return Err(Error::Infeasible(format!("the core component needs an even k >= 4, got {k}")));
    }
    let middle = primitive(Primitive::Matching, k - 2)?.complement();
    Graph::join(&[complete(1), middle, complete(2)])
}

/// Connected `degree`-regular circulant on `m` vertices: jumps
/// `1..=degree/2`, plus the antipodal jump `m/2` when `degree` is odd.
pub fn circulant_regular(m: usize, degree: usize) -> Result<Graph> {
    if degree >= m || !(degree * m).is_multiple_of(2) {
        return Err(Error::Infeasible(format!("no {degree}-regular graph on {m} vertices")));
    }
    let half = degree / 2;
    Ok(Graph::from_fn(m, |u, v| {
        let jump = (v - u).min(m - (v - u));
        jump <= half || (degree % 2 == 1 && 2 * jump == m)
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    /// Regular or nearly regular of degree `k - 1`, components of order at
    /// most `2k - 2`.
    U,
    /// Nearly `(k - 1)`-regular with the core component holding the deficient
    /// vertex and the other components of order at most `2k - 2`.
    V,
    /// Nearly `Δ`-regular, components of order at most `2Δ`.
    GFam,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::U => "U",
            FamilyKind::V => "V",
            FamilyKind::GFam => "G",
        })
    }
}

/// `degree_param` is `k` for U and V, and `Δ` for the G family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub degree_param: usize,
    pub order: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, degree_param: usize, order: usize) -> Result<Self> {
        let spec = FamilySpec { kind, degree_param, order };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let (p, n) = (self.degree_param, self.order);
        let ok = match self.kind {
            FamilyKind::U => p >= 3,
            FamilyKind::V => p >= 4 && p % 2 == 0 && n % 2 == 1 && n > p,
            FamilyKind::GFam => p >= 3 && p % 2 == 1 && n % 2 == 1 && n >= 3 * p + 4,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Infeasible(format!(
                "family {}(param={p}, order={n}) violates its parameter constraints",
                self.kind
            )))
        }
    }

    /// Common degree of the non-deficient vertices.
    pub fn degree(&self) -> usize {
        match self.kind {
            FamilyKind::U | FamilyKind::V => self.degree_param - 1,
            FamilyKind::GFam => self.degree_param,
        }
    }

    pub fn max_component_order(&self) -> usize {
        2 * self.degree()
    }

    /// Whether members carry a vertex of degree `degree() - 1`.
    pub fn is_deficient(&self) -> bool {
        match self.kind {
            FamilyKind::U => (self.degree() * self.order) % 2 == 1,
            FamilyKind::V | FamilyKind::GFam => true,
        }
    }
}

/// Orders available to regular components of the family.
fn regular_orders(spec: &FamilySpec) -> Vec<usize> {
    let d = spec.degree();
    (d + 1..=spec.max_component_order())
        .filter(|m| (d * m).is_multiple_of(2))
        .collect()
}

/// Candidate components holding the deficient vertex.
fn deficient_components(spec: &FamilySpec, exec: Exec) -> Result<Vec<Graph>> {
    let d = spec.degree();
    Ok(match spec.kind {
        FamilyKind::V => vec![core_component(spec.degree_param)?],
        _ => (d + 1..=spec.max_component_order())
            .flat_map(|m| connected_near_regular(m, d, true, exec))
            .collect(),
    })
}

/// Nondecreasing index sequences into `parts` whose orders sum to `target`.
fn multisets(parts: &[Graph], target: usize, limit: usize, out: &mut Vec<Vec<usize>>) -> Result<()> {
    fn rec(
        parts: &[Graph],
        start: usize,
        remaining: usize,
        current: &mut Vec<usize>,
        limit: usize,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        if remaining == 0 {
            if out.len() >= limit {
                return Err(Error::BudgetExhausted { budget: limit as u64 });
            }
            out.push(current.clone());
            return Ok(());
        }
        for i in start..parts.len() {
            let m = parts[i].order();
            if m <= remaining {
                current.push(i);
                rec(parts, i, remaining - m, current, limit, out)?;
                current.pop();
            }
        }
        Ok(())
    }
    rec(parts, 0, target, &mut Vec::new(), limit, out)
}

/// All members up to isomorphism, sorted by [`GraphKey`].
///
/// An empty list means the family has no member at this order.
pub fn enumerate_family(spec: &FamilySpec) -> Result<Vec<Graph>> {
    enumerate_family_bounded(spec, usize::MAX, Exec::default())
}

/// As [`enumerate_family`], failing with [`Error::BudgetExhausted`] once more
/// than `max_members` members would be produced.
pub fn enumerate_family_bounded(spec: &FamilySpec, max_members: usize, exec: Exec) -> Result<Vec<Graph>> {
    spec.validate()?;
    let d = spec.degree();
    let regular: Vec<Graph> = regular_orders(spec)
        .into_iter()
        .flat_map(|m| connected_near_regular(m, d, false, exec))
        .collect();

    let heads: Vec<Option<Graph>> = if spec.is_deficient() {
        deficient_components(spec, exec)?.into_iter().map(Some).collect()
    } else {
        vec![None]
    };

    let mut members = Vec::new();
    for head in heads {
        let head_order = head.as_ref().map_or(0, Graph::order);
        if head_order > spec.order {
            continue;
        }
        let mut combos = Vec::new();
        multisets(&regular, spec.order - head_order, max_members.saturating_sub(members.len()), &mut combos)?;
        for combo in combos {
            let mut parts: Vec<Graph> = head.iter().cloned().collect();
            parts.extend(combo.iter().map(|&i| regular[i].clone()));
            if parts.is_empty() {
                continue;
            }
            members.push(Graph::disjoint_union(&parts)?);
        }
    }
    let mut keyed: Vec<(GraphKey, Graph)> = exec
        .map(&members, |g| (GraphKey::of(g), g.clone()));
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

/// One member of the family, built without enumeration, or `None` when the
/// family is empty. Regular components are circulants; the deficient
/// component is the core component. Usable at orders far beyond enumeration.
pub fn family_representative(spec: &FamilySpec) -> Result<Option<Graph>> {
    spec.validate()?;
    let d = spec.degree();
    let head = if spec.is_deficient() {
        if d.is_multiple_of(2) {
            return Ok(None);
        }
        Some(core_component(d + 1)?)
    } else {
        None
    };
    let head_order = head.as_ref().map_or(0, Graph::order);
    if head_order > spec.order {
        return Ok(None);
    }
    let sizes = regular_orders(spec);
    let rest = spec.order - head_order;
    // reachable[r]: some multiset of `sizes` sums to r
    let mut reachable = vec![false; rest + 1];
    reachable[0] = true;
    for r in 1..=rest {
        reachable[r] = sizes.iter().any(|&m| m <= r && reachable[r - m]);
    }
    if !reachable[rest] {
        return Ok(None);
    }
    let mut parts: Vec<Graph> = head.into_iter().collect();
    let mut r = rest;
    while r > 0 {
        let m = *sizes
            .iter()
            .find(|&&m| m <= r && reachable[r - m])
            .expect("reachable remainder has a part");
        parts.push(circulant_regular(m, d)?);
        r -= m;
    }
    if parts.is_empty() {
        return Ok(Some(Graph::empty(0)));
    }
    Graph::disjoint_union(&parts).map(Some)
}

/// What to embed inside the smaller side `R` of the bipartite host.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum REmbedding {
    None,
    SingleEdge,
    MaximumMatching,
}

/// Complete bipartite host on `L ∪ R` with `inner` embedded in `L`.
///
/// `|L| = floor(n/2) + s`; for even `n` this is `n/2 + s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSpec {
    pub n: usize,
    pub k: usize,
    pub s: i64,
    pub inner: Graph,
    pub r_embedding: REmbedding,
}

impl CandidateSpec {
    pub fn left_size(&self) -> Option<usize> {
        let left = (self.n / 2) as i64 + self.s;
        (left >= 0).then_some(left as usize)
    }
}

/// Labels: `L = 0..|L|` (the inner graph keeps its labels), `R = |L|..n`.
/// The single `R` edge joins the first two vertices of `R`.
pub fn spex_candidate(spec: &CandidateSpec) -> Result<Graph> {
    if spec.s.abs() > 1 {
        return Err(Error::Infeasible(format!("side imbalance |s| must be at most 1, got {}", spec.s)));
    }
    let left = spec
        .left_size()
        .filter(|&l| l >= 1 && l < spec.n)
        .ok_or_else(|| Error::Infeasible(format!("both sides must be non-empty (n={}, s={})", spec.n, spec.s)))?;
    let right = spec.n - left;
    if spec.inner.order() != left {
        return Err(Error::SizeMismatch {
            expected: left,
            found: spec.inner.order(),
        });
    }
    let r_part = match spec.r_embedding {
        REmbedding::None => Graph::empty(right),
        REmbedding::SingleEdge => {
            if right < 2 {
                return Err(Error::Infeasible("R needs two vertices to hold an edge".into()));
            }
            Graph::from_fn(right, |u, v| u == 0 && v == 1)
        }
        REmbedding::MaximumMatching => maximum_matching(right),
    };
    Graph::join(&[spec.inner.clone(), r_part])
}

/// Sizes of `L` that the extremal structure predicts for `(n, k)`.
///
/// For `k = 2`: `n/2 + 1` when `n ≡ 2 (mod 4)`, otherwise `ceil(n/2)`.
/// For odd `k`: `ceil(n/2)`. For even `k` the size depends on `n mod 4`;
/// `n ≡ 2 (mod 4)` allows both `n/2` and `n/2 + 1`.
pub fn predicted_left_sizes(n: usize, k: usize) -> Vec<usize> {
    let ceil = n.div_ceil(2);
    if k == 2 {
        return vec![if n % 4 == 2 { n / 2 + 1 } else { ceil }];
    }
    if k % 2 == 1 {
        return vec![ceil];
    }
    match n % 4 {
        0 => vec![n / 2],
        1 => vec![n / 2],
        2 => vec![n / 2, n / 2 + 1],
        _ => vec![ceil],
    }
}

/// The candidate the extremal characterization singles out, built from a
/// family representative: matchings on both sides for `k = 2`; for even `k`
/// and `n ≡ 2 (mod 4)` a member of the V family on `|L| = n/2`; otherwise a
/// member of the U family on the predicted `|L|`, with one edge in `R`.
pub fn predicted_candidate(n: usize, k: usize) -> Result<Graph> {
    if k < 2 || n < 4 {
        return Err(Error::Infeasible(format!("need k >= 2 and n >= 4, got k={k}, n={n}")));
    }
    let left = predicted_left_sizes(n, k)[0];
    let s = left as i64 - (n / 2) as i64;
    if k == 2 {
        return spex_candidate(&CandidateSpec {
            n,
            k,
            s,
            inner: maximum_matching(left),
            r_embedding: REmbedding::MaximumMatching,
        });
    }
    let family = if k.is_multiple_of(2) && n % 4 == 2 {
        FamilySpec::new(FamilyKind::V, k, left)?
    } else {
        FamilySpec::new(FamilyKind::U, k, left)?
    };
    let inner = family_representative(&family)?
        .ok_or_else(|| Error::Infeasible(format!("family {family:?} is empty")))?;
    spex_candidate(&CandidateSpec {
        n,
        k,
        s,
        inner,
        r_embedding: REmbedding::SingleEdge,
    })
}
