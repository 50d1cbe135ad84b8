//! Perron roots of graphs and small non-negative matrices, quotient matrices
//! of vertex partitions, and the exact sign test comparing two candidates.
//!
//! Power iteration runs on `A + cI` with `c = max(1, Δ/2)`: the shift keeps
//! the iteration from oscillating on (near-)bipartite inputs, whose smallest
//! eigenvalue is close to `-λ₁`. The reported radius is the Rayleigh quotient
//! of the unshifted operator and the residual is `‖Ax − ρx‖∞` with `x`
//! normalized to maximum entry 1.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::constructors::{family_representative, spex_candidate, CandidateSpec, FamilyKind, FamilySpec, REmbedding};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{char_poly, rat_frac, Poly, Rational, RationalMatrix, RootBracket};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITERATIONS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerOptions {
    pub tol: f64,
    pub max_iterations: u64,
}

impl Default for PowerOptions {
    fn default() -> Self {
        PowerOptions {
            tol: DEFAULT_TOL,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

impl PowerOptions {
    pub fn with_tol(tol: f64) -> Self {
        PowerOptions { tol, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult {
    pub radius: f64,
    /// Zero outside `component`; maximum entry 1.
    pub perron: Vec<f64>,
    pub residual: f64,
    pub iterations: u64,
    /// Vertices (or matrix indices) of the part achieving the radius.
    pub component: Vec<usize>,
    pub irreducible: bool,
}

struct Converged {
    radius: f64,
    x: Vec<f64>,
    residual: f64,
    iterations: u64,
}

fn power_iterate(
    dim: usize,
    shift: f64,
    opts: &PowerOptions,
    apply: impl Fn(&[f64], &mut [f64]),
) -> Result<Converged> {
    let mut x = vec![1.0; dim];
    let mut y = vec![0.0; dim];
    let mut residual = f64::INFINITY;
    for it in 0..=opts.max_iterations {
        apply(&x, &mut y);
        let xy: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let xx: f64 = x.iter().map(|a| a * a).sum();
        let rho = xy / xx;
        residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - rho * a).abs())
            .fold(0.0, f64::max);
        if residual <= opts.tol {
            return Ok(Converged {
                radius: rho,
                x,
                residual,
                iterations: it,
            });
        }
        let mut max = 0.0f64;
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi + shift * *xi;
            max = max.max(*xi);
        }
        for xi in &mut x {
            *xi /= max;
        }
    }
    Err(Error::NoConvergence {
        iterations: opts.max_iterations,
        residual,
    })
}

/// Spectral radius of the adjacency matrix with the default options.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    spectral_radius_with(g, &PowerOptions::with_tol(tol))
}

/// Per-component power iteration; the first component of maximum radius is
/// reported.
pub fn spectral_radius_with(g: &Graph, opts: &PowerOptions) -> Result<SpectralResult> {
    if g.order() == 0 {
        return Err(Error::Infeasible("spectral radius of the empty graph".into()));
    }
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::Infeasible(format!("tolerance must be positive, got {}", opts.tol)));
    }
    let mut best: Option<(Converged, Vec<usize>)> = None;
    let mut total_iterations = 0;
    for comp in g.components() {
        let h = &comp.graph;
        let adj: Vec<Vec<usize>> = (0..h.order()).map(|u| h.neighbors(u).collect()).collect();
        let shift = (h.max_degree() as f64 / 2.0).max(1.0);
        let c = power_iterate(h.order(), shift, opts, |x, y| {
            for (yu, nbrs) in y.iter_mut().zip(&adj) {
                *yu = nbrs.iter().map(|&v| x[v]).sum();
            }
        })?;
        total_iterations += c.iterations;
        if best.as_ref().is_none_or(|(b, _)| c.radius > b.radius) {
            best = Some((c, comp.labels));
        }
    }
    let (c, labels) = best.expect("non-empty graph has a component");
    let mut perron = vec![0.0; g.order()];
    for (i, &u) in labels.iter().enumerate() {
        perron[u] = c.x[i];
    }
    Ok(SpectralResult {
        radius: c.radius,
        perron,
        residual: c.residual,
        iterations: total_iterations,
        irreducible: labels.len() == g.order(),
        component: labels,
    })
}

fn strongly_connected(rows: &[Vec<f64>]) -> bool {
    let n = rows.len();
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                let w = if forward { rows[i][j] } else { rows[j][i] };
                if w > 0.0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    n == 0 || (reach(true) && reach(false))
}

/// Perron root of a square non-negative matrix.
///
/// For reducible input the iteration still runs; `irreducible` is false and
/// `component` lists the support of the limiting vector.
pub fn matrix_radius(rows: &[Vec<f64>], opts: &PowerOptions) -> Result<SpectralResult> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::InvalidMatrix("empty matrix".into()));
    }
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidMatrix("matrix is not square".into()));
    }
    if rows.iter().flatten().any(|&v| !v.is_finite() || v < 0.0) {
        return Err(Error::InvalidMatrix("entries must be finite and non-negative".into()));
    }
    let max_row: f64 = rows.iter().map(|r| r.iter().sum::<f64>()).fold(0.0, f64::max);
    let c = power_iterate(n, (max_row / 2.0).max(1.0), opts, |x, y| {
        for (yi, r) in y.iter_mut().zip(rows) {
            *yi = r.iter().zip(x).map(|(a, b)| a * b).sum();
        }
    })?;
    let component = (0..n).filter(|&i| c.x[i] > opts.tol).collect();
    Ok(SpectralResult {
        radius: c.radius,
        perron: c.x,
        residual: c.residual,
        iterations: c.iterations,
        component,
        irreducible: strongly_connected(rows),
    })
}

/// `λ₁` of `[[a, b], [c, d]]` with non-negative entries, in closed form.
pub fn closed_form_2x2(rows: &[Vec<f64>]) -> f64 {
    let (a, b, c, d) = (rows[0][0], rows[0][1], rows[1][0], rows[1][1]);
    ((a + d) + ((a - d) * (a - d) + 4.0 * b * c).sqrt()) / 2.0
}

/// Partition with its quotient matrix. Entry `(i, j)` is the average number
/// of neighbors in class `j` over the vertices of class `i`; it is the common
/// count exactly when the partition is equitable.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientSystem {
    pub partition: Vec<Vec<usize>>,
    pub matrix: RationalMatrix,
    pub equitable: bool,
}

impl QuotientSystem {
    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        self.matrix.to_f64_rows()
    }

    /// Integer entries, available when equitable.
    pub fn integer_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.matrix
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.is_integer().then(|| v.to_integer().to_i64()).flatten())
                    .collect()
            })
            .collect()
    }

    pub fn char_poly(&self) -> Result<Poly> {
        char_poly(&self.matrix)
    }
}

pub fn quotient(g: &Graph, partition: &[Vec<usize>]) -> Result<QuotientSystem> {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    for (i, class) in partition.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::MalformedPartition(format!("class {i} is empty")));
        }
        for &u in class {
            if u >= n {
                return Err(Error::MalformedPartition(format!("vertex {u} out of range for order {n}")));
            }
            if class_of[u] != usize::MAX {
                return Err(Error::MalformedPartition(format!("vertex {u} appears twice")));
            }
            class_of[u] = i;
        }
    }
    if let Some(u) = class_of.iter().position(|&c| c == usize::MAX) {
        return Err(Error::MalformedPartition(format!("vertex {u} is in no class")));
    }
    let p = partition.len();
    let mut equitable = true;
    let mut rows = Vec::with_capacity(p);
    for class in partition {
        let mut sums = vec![0i64; p];
        let mut first: Option<Vec<i64>> = None;
        for &u in class {
            let mut counts = vec![0i64; p];
            for v in g.neighbors(u) {
                counts[class_of[v]] += 1;
            }
            for (s, c) in sums.iter_mut().zip(&counts) {
                *s += c;
            }
            match &first {
                None => first = Some(counts),
                Some(f) => equitable &= *f == counts,
            }
        }
        let size = class.len() as i64;
        rows.push(sums.into_iter().map(|s| rat_frac(s, size)).collect());
    }
    Ok(QuotientSystem {
        partition: partition.to_vec(),
        matrix: RationalMatrix::from_rows(rows)?,
        equitable,
    })
}

fn split_right(g: &Graph, left: usize) -> (Vec<usize>, Vec<usize>) {
    (left..g.order()).partition(|&u| g.neighbors(u).any(|v| v >= left))
}

/// Six classes of a candidate whose `L = 0..left` holds a member of the V
/// family: the deficient vertex, its neighbors in `L`, the vertices at
/// distance two from it in `L`, the rest of `L`, the vertices of `R` with a
/// neighbor in `R`, and the rest of `R`. Derived from the graph itself.
pub fn v_candidate_partition(g: &Graph, left: usize) -> Result<Vec<Vec<usize>>> {
    if left == 0 || left >= g.order() {
        return Err(Error::MalformedPartition(format!("left side {left} out of range")));
    }
    let l_part = g.induced(&(0..left).collect::<Vec<_>>());
    let dc = l_part.classify_degrees();
    let hub = dc
        .deficient_vertex
        .filter(|_| dc.is_nearly_regular)
        .ok_or_else(|| Error::MalformedPartition("G[L] is not nearly regular".into()))?;
    let dist = l_part.distances_from(hub);
    let at = |d: usize| (0..left).filter(|&u| dist[u] == Some(d)).collect::<Vec<_>>();
    let n1 = at(1);
    let n2 = at(2);
    let rest_l: Vec<usize> = (0..left).filter(|&u| !matches!(dist[u], Some(0..=2))).collect();
    let (edge_r, rest_r) = split_right(g, left);
    let classes = vec![vec![hub], n1, n2, rest_l, edge_r, rest_r];
    if classes.iter().any(Vec::is_empty) {
        return Err(Error::MalformedPartition("candidate lacks one of the six classes".into()));
    }
    Ok(classes)
}

/// Three classes of a candidate: `L = 0..left`, the vertices of `R` with a
/// neighbor in `R`, and the rest of `R`.
pub fn u_candidate_partition(g: &Graph, left: usize) -> Result<Vec<Vec<usize>>> {
    if left == 0 || left >= g.order() {
        return Err(Error::MalformedPartition(format!("left side {left} out of range")));
    }
    let (edge_r, rest_r) = split_right(g, left);
    let classes = vec![(0..left).collect(), edge_r, rest_r];
    if classes.iter().any(Vec::is_empty) {
        return Err(Error::MalformedPartition("candidate lacks one of the three classes".into()));
    }
    Ok(classes)
}

/// The six-class quotient matrix as printed in the source derivation, kept
/// only to report where it disagrees with the graph-derived one.
pub fn printed_b1(k: usize, n: usize) -> Vec<Vec<i64>> {
    let (k, h) = (k as i64, (n / 2) as i64);
    vec![
        vec![0, k - 2, 0, 0, 2, h - 2],
        vec![1, k - 3, 2, 0, 2, h - 2],
        vec![0, k - 2, 1, 0, 2, h - 2],
        vec![0, 0, 0, k - 1, 2, h - 2],
        vec![1, k - 2, 2, h - k - 1, 1, 0],
        vec![1, k - 2, 2, h - k - 1, 0, 0],
    ]
}

/// `x³ + (2−k)x² + (2−2k)x + (3−k)n/2 + k − 1`, the printed quotient of
/// `f(B₁, x)` by `f(B₂, x)`.
pub fn printed_claim1_quotient(k: usize, n: usize) -> Poly {
    let (k, n) = (k as i64, n as i64);
    Poly::new(vec![
        rat_frac((3 - k) * n + 2 * (k - 1), 2),
        rat_frac(2 - 2 * k, 1),
        rat_frac(2 - k, 1),
        rat_frac(1, 1),
    ])
}

pub fn printed_b2(k: usize, n: usize) -> Vec<Vec<i64>> {
    let (k, h) = (k as i64, (n / 2) as i64);
    vec![vec![k - 1, 2, h - 3], vec![h + 1, 1, 0], vec![h + 1, 0, 0]]
}

/// Width to which the largest root of `f(B₂, x)` is bracketed.
pub fn claim1_bracket_width() -> Rational {
    Rational::new(1.into(), 1_000_000_000_000u64.into())
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    pub derived: i64,
    pub printed: i64,
}

#[derive(Debug, Clone)]
pub struct Claim1Record {
    pub k: usize,
    pub n: usize,
    /// `λ₁(B₁)`, the balanced candidate with a V-family member in `L`.
    pub radius1: f64,
    /// `λ₁(B₂)`, the `|L| = n/2 + 1` candidate with a U-family member.
    pub radius2: f64,
    pub residual1: f64,
    pub residual2: f64,
    /// Certified sign of `f(B₁, ·)` on the bracket of `λ₁(B₂)`; 0 if the
    /// bracket could not separate it from a root of `f(B₁, ·)`.
    pub sign_at_root: i8,
    pub bracket: RootBracket,
    pub b1: Vec<Vec<i64>>,
    pub b2: Vec<Vec<i64>>,
    pub f1: Poly,
    pub f2: Poly,
    pub b1_mismatches: Vec<EntryMismatch>,
    pub b2_mismatches: Vec<EntryMismatch>,
    /// Same sign test with the printed `B₁` in place of the derived one.
    pub printed_b1_sign_at_root: i8,
    /// Whether `f(printed B₁) div f(B₂)` is exactly the printed cubic.
    pub printed_quotient_reproduced: bool,
}

fn mismatches(derived: &[Vec<i64>], printed: &[Vec<i64>]) -> Vec<EntryMismatch> {
    let mut out = Vec::new();
    for (row, (d, p)) in derived.iter().zip(printed).enumerate() {
        for (col, (&a, &b)) in d.iter().zip(p).enumerate() {
            if a != b {
                out.push(EntryMismatch {
                    row,
                    col,
                    derived: a,
                    printed: b,
                });
            }
        }
    }
    out
}

/// The two candidates compared in the balance argument for even `k` and
/// `n ≡ 2 (mod 4)`: `H` with `|L| = n/2` and `H'` with `|L| = n/2 + 1`.
pub fn claim1_candidates(k: usize, n: usize) -> Result<(Graph, Graph)> {
    if k < 4 || k % 2 == 1 || n % 4 != 2 || n < 4 * k {
        return Err(Error::Infeasible(format!(
            "need even k >= 4, n = 2 (mod 4) and n >= 4k; got k={k}, n={n}"
        )));
    }
    let build = |kind, left: usize, s| -> Result<Graph> {
        let family = FamilySpec::new(kind, k, left)?;
        let inner = family_representative(&family)?
            .ok_or_else(|| Error::Infeasible(format!("family {family:?} is empty")))?;
        spex_candidate(&CandidateSpec {
            n,
            k,
            s,
            inner,
            r_embedding: REmbedding::SingleEdge,
        })
    };
    Ok((build(FamilyKind::V, n / 2, 0)?, build(FamilyKind::U, n / 2 + 1, 1)?))
}

pub fn claim1_comparison(k: usize, n: usize, opts: &PowerOptions) -> Result<Claim1Record> {
    let (h1, h2) = claim1_candidates(k, n)?;
    let q1 = quotient(&h1, &v_candidate_partition(&h1, n / 2)?)?;
    let q2 = quotient(&h2, &u_candidate_partition(&h2, n / 2 + 1)?)?;
    let (b1, b2) = match (q1.equitable, q2.equitable, q1.integer_rows(), q2.integer_rows()) {
        (true, true, Some(b1), Some(b2)) => (b1, b2),
        _ => return Err(Error::Infeasible("candidate partitions are not equitable".into())),
    };
    let r1 = matrix_radius(&q1.to_f64_rows(), opts)?;
    let r2 = matrix_radius(&q2.to_f64_rows(), opts)?;
    let f1 = q1.char_poly()?;
    let f2 = q2.char_poly()?;
    let bracket = f2
        .largest_real_root(&claim1_bracket_width())
        .ok_or_else(|| Error::Infeasible("f(B2, x) has no real root".into()))?;
    let sign_at_root = f1.certified_sign_on(&bracket.lo, &bracket.hi).unwrap_or(0);
    let printed_f1 = char_poly(&RationalMatrix::from_integers(&printed_b1(k, n))?)?;
    let printed_b1_sign_at_root = printed_f1.certified_sign_on(&bracket.lo, &bracket.hi).unwrap_or(0);
    let printed_quotient_reproduced = printed_f1.div_rem(&f2).0 == printed_claim1_quotient(k, n);
    Ok(Claim1Record {
        k,
        n,
        radius1: r1.radius,
        radius2: r2.radius,
        residual1: r1.residual,
        residual2: r2.residual,
        sign_at_root,
        bracket,
        printed_b1_sign_at_root,
        printed_quotient_reproduced,
        b1_mismatches: mismatches(&b1, &printed_b1(k, n)),
        b2_mismatches: mismatches(&b2, &printed_b2(k, n)),
        b1,
        b2,
        f1,
        f2,
    })
}

/// Lower bound `((k−1) + √((k−1)² + n² − 1))/2 + 1/(2n)` on the spectral
/// radius of an extremal graph.
pub fn fact1_bound(k: usize, n: usize) -> f64 {
    let (k, n) = (k as f64, n as f64);
    ((k - 1.0) + ((k - 1.0) * (k - 1.0) + n * n - 1.0).sqrt()) / 2.0 + 1.0 / (2.0 * n)
}

/// `[[d, n−n₀], [n₀, d′]]`, whose Perron root bounds the radius of the join
/// of a graph of order `n₀` and maximum degree `d` with one of order `n−n₀`
/// and maximum degree `d′`.
pub fn join_bound_matrix(d: usize, n0: usize, d_prime: usize, n: usize) -> Vec<Vec<f64>> {
    vec![vec![d as f64, (n - n0) as f64], vec![n0 as f64, d_prime as f64]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, complete_bipartite, primitive, Primitive};

    fn radius(g: &Graph) -> f64 {
        spectral_radius(g, DEFAULT_TOL).unwrap().radius
    }

    #[test]
    fn trivial_radii() {
        assert!((radius(&complete(5)) - 4.0).abs() < 1e-9);
        assert!((radius(&primitive(Primitive::Cycle, 8).unwrap()) - 2.0).abs() < 1e-9);
        assert!((radius(&complete_bipartite(3, 4)) - 12f64.sqrt()).abs() < 1e-9);
        assert_eq!(radius(&Graph::empty(3)), 0.0);
        assert!(spectral_radius(&Graph::empty(0), 1e-10).is_err());
    }

    #[test]
    fn certificate_contract() {
        let g = Graph::disjoint_union(&[primitive(Primitive::Cycle, 5).unwrap(), complete(4)]).unwrap();
        let r = spectral_radius(&g, 1e-10).unwrap();
        assert!((r.radius - 3.0).abs() < 1e-9);
        assert_eq!(r.component, vec![5, 6, 7, 8]);
        assert!(!r.irreducible);
        assert!(r.residual <= 1e-10);
        assert!(r.perron[..5].iter().all(|&x| x == 0.0));
        assert!((r.perron.iter().cloned().fold(0.0, f64::max) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn budget_exhaustion() {
        let opts = PowerOptions {
            tol: 1e-12,
            max_iterations: 2,
        };
        assert!(matches!(
            spectral_radius_with(&crate::constructors::path(30), &opts),
            Err(Error::NoConvergence { .. })
        ));
    }

    #[test]
    fn matrix_radius_examples() {
        let (l, r) = (7.0, 5.0);
        let b = vec![vec![3.0, r], vec![l, 1.0]];
        let res = matrix_radius(&b, &PowerOptions::default()).unwrap();
        assert!((res.radius - (2.0 + (1.0 + l * r).sqrt())).abs() < 1e-9);
        assert!((closed_form_2x2(&b) - res.radius).abs() < 1e-9);
        assert!(res.irreducible);
        let id = vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]];
        let res = matrix_radius(&id, &PowerOptions::default()).unwrap();
        assert!((res.radius - 1.0).abs() < 1e-12);
        assert!(!res.irreducible);
        assert!(matrix_radius(&[vec![-1.0]], &PowerOptions::default()).is_err());
        assert!(matrix_radius(&[vec![1.0, 2.0]], &PowerOptions::default()).is_err());
    }

    #[test]
    fn quotient_examples() {
        let c5 = primitive(Primitive::Cycle, 5).unwrap();
        let q = quotient(&c5, &[vec![0], vec![1, 2, 3, 4]]).unwrap();
        assert!(!q.equitable);
        assert!(q.integer_rows().is_none());
        let q = quotient(&c5, &[(0..5).collect()]).unwrap();
        assert!(q.equitable);
        assert_eq!(q.integer_rows().unwrap(), vec![vec![2]]);
        assert!(quotient(&c5, &[vec![0, 1], vec![1, 2, 3, 4]]).is_err());
        assert!(quotient(&c5, &[vec![0, 1], vec![2, 3]]).is_err());
        assert!(quotient(&c5, &[vec![0, 1, 2, 3, 4], vec![]]).is_err());
    }

    #[test]
    fn candidate_quotients_are_equitable() {
        let (h1, h2) = claim1_candidates(4, 22).unwrap();
        let q1 = quotient(&h1, &v_candidate_partition(&h1, 11).unwrap()).unwrap();
        assert!(q1.equitable);
        let b1 = q1.integer_rows().unwrap();
        let printed = printed_b1(4, 22);
        // graph-derived B₁ differs from the printed one in a single entry
        let diff = mismatches(&b1, &printed);
        assert_eq!(diff.len(), 1);
        assert_eq!((diff[0].row, diff[0].col, diff[0].derived, diff[0].printed), (1, 1, 0, 1));
        let q2 = quotient(&h2, &u_candidate_partition(&h2, 12).unwrap()).unwrap();
        assert!(q2.equitable);
        assert_eq!(q2.integer_rows().unwrap(), printed_b2(4, 22));
        let g = spectral_radius(&h1, 1e-11).unwrap().radius;
        let m = matrix_radius(&q1.to_f64_rows(), &PowerOptions::with_tol(1e-11)).unwrap().radius;
        assert!((g - m).abs() < 1e-9);
    }

    #[test]
    fn claim1_small_cases() {
        // frozen from direct computation; the graph-derived B₁ puts λ₁(B₁)
        // below λ₁(B₂) at every tested size
        let frozen = [(4, 22, 12.638854456814, 12.649447677348), (4, 102, 52.531544846230, 52.532030748046)];
        for (k, n, r1, r2) in frozen {
            let rec = claim1_comparison(k, n, &PowerOptions::default()).unwrap();
            assert!((rec.radius1 - r1).abs() < 1e-9 && (rec.radius2 - r2).abs() < 1e-9, "k={k} n={n}");
            assert_eq!(rec.sign_at_root, 1, "k={k} n={n}");
            assert_eq!(rec.printed_b1_sign_at_root, -1, "k={k} n={n}");
            assert!(rec.printed_quotient_reproduced, "k={k} n={n}");
            assert!(rec.bracket.width() <= claim1_bracket_width());
            assert!((rec.bracket.midpoint_f64() - rec.radius2).abs() < 1e-8);
            let (h1, h2) = claim1_candidates(k, n).unwrap();
            assert!((spectral_radius(&h1, 1e-10).unwrap().radius - r1).abs() < 1e-8);
            assert!((spectral_radius(&h2, 1e-10).unwrap().radius - r2).abs() < 1e-8);
        }
        let rec = claim1_comparison(6, 50, &PowerOptions::default()).unwrap();
        assert_eq!(rec.sign_at_root, 1);
        assert!(rec.radius1 < rec.radius2);
        assert!(claim1_comparison(5, 22, &PowerOptions::default()).is_err());
        assert!(claim1_comparison(4, 24, &PowerOptions::default()).is_err());
    }

    #[test]
    fn regular_graphs_have_radius_degree() {
        for (m, d) in [(9, 4), (10, 3), (12, 5), (7, 6)] {
            let g = crate::constructors::circulant_regular(m, d).unwrap();
            assert!((radius(&g) - d as f64).abs() < 1e-9);
        }
    }
}
