//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Graphs are grown one vertex at a time. A graph on `j` vertices is kept only
//! if it could still be an induced subgraph of a target on `m` vertices: every
//! degree is at most `max_degree` and at least `min_degree - (m - j)`. Every
//! induced subgraph of a target satisfies that window, so the pruning never
//! loses a target. Each level is deduplicated by canonical form.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::canon::{canonical_form, CanonicalForm};
use crate::exec::Exec;
use crate::graph::Graph;

/// Degree window for the final graph on `order` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegreeWindow {
    pub order: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

fn lower_bound(w: &DegreeWindow, level: usize) -> usize {
    w.min_degree.saturating_sub(w.order - level)
}

fn extend(g: &Graph, w: &DegreeWindow, out: &mut Vec<CanonicalForm>) {
    let j = g.order();
    let next_lower = lower_bound(w, j + 1);
    let degrees = g.degrees();
    let mut forced = Vec::new();
    let mut optional = Vec::new();
    for (u, &d) in degrees.iter().enumerate() {
        if d + 1 == next_lower {
            forced.push(u);
        } else if d < next_lower {
            return;
        } else if d < w.max_degree {
            optional.push(u);
        }
    }
    if forced.len() > w.max_degree {
        return;
    }
    let edges = g.edges();
    for mask in 0u64..(1u64 << optional.len()) {
        let size = forced.len() + mask.count_ones() as usize;
        if size < next_lower || size > w.max_degree {
            continue;
        }
        let mut all = edges.clone();
        all.extend(forced.iter().map(|&u| (u, j)));
        all.extend(
            optional
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &u)| (u, j)),
        );
        let h = Graph::new(j + 1, &all).expect("generated edges are distinct");
        out.push(canonical_form(&h));
    }
}

/// All graphs on `w.order` vertices whose degrees lie in the window, up to
/// isomorphism, sorted by canonical form.
pub fn graphs_in_window(w: DegreeWindow, exec: Exec) -> Vec<Graph> {
    if w.order == 0 {
        return vec![Graph::empty(0)];
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    if lower_bound(&w, 1) > 0 {
        return Vec::new();
    }
    for _ in 1..w.order {
        let batches = exec.map(&level, |g| {
            let mut out = Vec::new();
            extend(g, &w, &mut out);
            out
        });
        let forms: BTreeSet<CanonicalForm> = batches.into_iter().flatten().collect();
        level = forms.iter().map(CanonicalForm::to_graph).collect();
    }
    level
}

/// Every graph on `n` vertices up to isomorphism.
pub fn all_graphs(n: usize, exec: Exec) -> Vec<Graph> {
    graphs_in_window(
        DegreeWindow {
            order: n,
            min_degree: 0,
            max_degree: n.saturating_sub(1),
        },
        exec,
    )
}

/// Erdős–Rényi sample: each pair independently an edge with probability `p`.
pub fn random_graph<R: rand::Rng + ?Sized>(order: usize, p: f64, rng: &mut R) -> Graph {
    Graph::from_fn(order, |_, _| rng.random_bool(p))
}

type CacheKey = (usize, usize, bool);

fn cache() -> &'static Mutex<HashMap<CacheKey, Vec<Graph>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Vec<Graph>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Connected graphs on `order` vertices that are `degree`-regular, or, with
/// `deficient`, have exactly one vertex of degree `degree - 1` and the rest
/// `degree`. Sorted by canonical form; results are memoized.
pub fn connected_near_regular(order: usize, degree: usize, deficient: bool, exec: Exec) -> Vec<Graph> {
    let key = (order, degree, deficient);
    if let Some(hit) = cache().lock().expect("cache lock").get(&key) {
        return hit.clone();
    }
    // Degree sum parity rules out regular odd-degree graphs on odd orders.
    let impossible = order == 0 || degree >= order || (deficient && degree == 0);
    let result = if impossible || (degree * order) % 2 != usize::from(deficient) {
        Vec::new()
    } else {
        let window = DegreeWindow {
            order,
            min_degree: if deficient { degree - 1 } else { degree },
            max_degree: degree,
        };
        graphs_in_window(window, exec)
            .into_iter()
            .filter(|g| {
                let dc = g.classify_degrees();
                let shape = if deficient {
                    dc.is_nearly_regular && dc.max_degree == degree
                } else {
                    dc.is_regular && dc.max_degree == degree
                };
                shape && g.is_connected()
            })
            .collect()
    };
    cache().lock().expect("cache lock").insert(key, result.clone());
    result
}
