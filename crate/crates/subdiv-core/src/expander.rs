//! Sublinear expansion: the eps(x) profile, expansion verification (exact by
//! subset enumeration on small graphs, sampled above), extraction of a dense
//! expanding subgraph, and short-path routing that stays robust under vertex
//! deletions.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Path, Subgraph, VertexSet};
use crate::math;

/// Default vertex-count ceiling for exact (exponential) expansion checks.
pub const DEFAULT_EXACT_THRESHOLD: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpanderParams {
    pub eps1: f64,
    pub k: f64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpanderError {
    BadParams(String),
    TooLargeForExact { n: usize, limit: usize },
}

impl fmt::Display for ExpanderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpanderError::BadParams(msg) => write!(f, "bad expander params: {msg}"),
            ExpanderError::TooLargeForExact { n, limit } => write!(
                f,
                "graph on {n} vertices exceeds exact-mode limit {limit}; use sampled verification"
            ),
        }
    }
}

impl ExpanderParams {
    pub fn new(eps1: f64, k: f64) -> Result<Self, ExpanderError> {
        if !eps1.is_finite() || eps1 <= 0.0 || eps1 >= 1.0 {
            return Err(ExpanderError::BadParams(format!(
                "eps1 must lie in (0,1), got {eps1}"
            )));
        }
        if !k.is_finite() || k <= 0.0 {
            return Err(ExpanderError::BadParams(format!("k must be positive, got {k}")));
        }
        Ok(ExpanderParams { eps1, k })
    }

    /// The expansion profile: 0 below k/5, eps1/ln^2(15x/k) from k/5 on.
    /// Natural logarithm throughout.
    pub fn epsilon(&self, x: f64) -> f64 {
        assert!(x > 0.0, "epsilon needs x > 0");
        if x < self.k / 5.0 {
            0.0
        } else {
            self.eps1 / math::ln_pow(15.0 * x / self.k, 2)
        }
    }

    /// Distance guarantee (2/eps1) * ln^3(15n/k) between large sets.
    pub fn diam_bound(&self, n: usize) -> f64 {
        assert!(n >= 1);
        (2.0 / self.eps1) * math::ln_pow(15.0 * n as f64 / self.k, 3)
    }

    /// Integral of eps(x)/x over [1, inf), which closed-forms to
    /// eps1/ln(15*x0/k) with x0 = max(1, k/5). The extraction guarantee in
    /// the literature wants this below 1/8; practical profiles ignore it.
    pub fn epsilon_integral(&self) -> f64 {
        let x0 = if self.k / 5.0 > 1.0 { self.k / 5.0 } else { 1.0 };
        self.eps1 / math::ln(15.0 * x0 / self.k)
    }

    /// Smallest qualifying set size, ceil(k/2).
    pub fn min_set_size(&self) -> usize {
        libm::ceil(self.k / 2.0) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    Exact,
    Sampled,
}

/// Outcome of an expansion check. A `witness` is a set X with
/// k/2 <= |X| <= n/2 whose external neighbourhood is below eps(|X|)*|X|.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub is_expander: bool,
    pub witness: Option<VertexSet>,
    pub mode: VerifyMode,
    pub params: ExpanderParams,
    /// True when no set size qualifies (n < k), making the condition vacuous.
    pub vacuous: bool,
}

fn violates(g: &Graph, params: &ExpanderParams, xs: &VertexSet) -> bool {
    let nbhd = g
        .external_neighborhood(xs)
        .expect("witness candidates use in-range ids");
    (nbhd.len() as f64) < params.epsilon(xs.len() as f64) * xs.len() as f64
}

/// Exhaustive expansion check over every X with ceil(k/2) <= |X| <= n/2,
/// enumerated in lexicographic order so the first violator is deterministic.
pub fn verify_expander_exact(g: &Graph, params: &ExpanderParams) -> Result<ExpansionReport, ExpanderError> {
    verify_expander_exact_with_limit(g, params, DEFAULT_EXACT_THRESHOLD)
}

pub fn verify_expander_exact_with_limit(
    g: &Graph,
    params: &ExpanderParams,
    limit: usize,
) -> Result<ExpansionReport, ExpanderError> {
    let n = g.vertex_count();
    if n > limit {
        return Err(ExpanderError::TooLargeForExact { n, limit });
    }
    let lo = params.min_set_size().max(1);
    let hi = n / 2;
    if lo > hi {
        return Ok(ExpansionReport {
            is_expander: true,
            witness: None,
            mode: VerifyMode::Exact,
            params: *params,
            vacuous: true,
        });
    }

    // DFS in lexicographic order over vertex-id sequences; a prefix is
    // visited before its extensions, so the first hit is the lex-least.
    fn dfs(
        g: &Graph,
        params: &ExpanderParams,
        lo: usize,
        hi: usize,
        start: usize,
        current: &mut VertexSet,
    ) -> Option<VertexSet> {
        if current.len() >= lo && violates(g, params, current) {
            return Some(current.clone());
        }
        if current.len() == hi {
            return None;
        }
        for v in start..g.vertex_count() {
            current.insert(v);
            if let Some(w) = dfs(g, params, lo, hi, v + 1, current) {
                return Some(w);
            }
            current.remove(&v);
        }
        None
    }

    let mut current = VertexSet::new();
    let witness = dfs(g, params, lo, hi, 0, &mut current);
    Ok(ExpansionReport {
        is_expander: witness.is_none(),
        witness,
        mode: VerifyMode::Exact,
        params: *params,
        vacuous: false,
    })
}

/// Randomised expansion check: alternates BFS-grown connected sets (which
/// reliably find component-style violations) with uniform random sets across
/// the admissible size range. "true" only means no violation was found.
pub fn verify_expander_sampled(
    g: &Graph,
    params: &ExpanderParams,
    trials: usize,
    rng_seed: u64,
) -> Result<ExpansionReport, ExpanderError> {
    if trials == 0 {
        return Err(ExpanderError::BadParams("trials must be >= 1".into()));
    }
    let n = g.vertex_count();
    let lo = params.min_set_size().max(1);
    let hi = n / 2;
    if lo > hi {
        return Ok(ExpansionReport {
            is_expander: true,
            witness: None,
            mode: VerifyMode::Sampled,
            params: *params,
            vacuous: true,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    for trial in 0..trials {
        let size = rng.random_range(lo..=hi);
        let xs = if trial % 2 == 0 {
            bfs_grown_set(g, rng.random_range(0..n), size)
        } else {
            random_subset(n, size, &mut rng)
        };
        if xs.len() >= lo && xs.len() <= hi && violates(g, params, &xs) {
            return Ok(ExpansionReport {
                is_expander: false,
                witness: Some(xs),
                mode: VerifyMode::Sampled,
                params: *params,
                vacuous: false,
            });
        }
    }
    Ok(ExpansionReport {
        is_expander: true,
        witness: None,
        mode: VerifyMode::Sampled,
        params: *params,
        vacuous: false,
    })
}

fn bfs_grown_set(g: &Graph, seed: usize, target: usize) -> VertexSet {
    let mut seen = VertexSet::new();
    let mut queue = VecDeque::from([seed]);
    seen.insert(seed);
    while let Some(v) = queue.pop_front() {
        if seen.len() >= target {
            break;
        }
        for &u in g.neighbors(v) {
            if seen.len() >= target {
                break;
            }
            if seen.insert(u) {
                queue.push_back(u);
            }
        }
    }
    seen
}

fn random_subset(n: usize, size: usize, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    ids.truncate(size);
    ids.into_iter().collect()
}

/// How expansion is checked inside [`extract_expander`].
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ExtractionConfig {
    pub exact_threshold: usize,
    pub sample_trials: usize,
    pub rng_seed: u64,
}

impl Default for ExtractionConfig {
    fn default() -> Self {
        ExtractionConfig {
            exact_threshold: DEFAULT_EXACT_THRESHOLD,
            sample_trials: 200,
            rng_seed: 0,
        }
    }
}

/// Removes vertices of degree < d(H)/2 one at a time (lowest id first).
/// Average degree never decreases, so the result satisfies both
/// delta(H) >= d(H)/2 and d(H) >= d(input).
fn strip_low_degree(g: &Graph) -> Subgraph {
    let mut alive: Vec<bool> = vec![true; g.vertex_count()];
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut n_alive = g.vertex_count();
    let mut twice_edges: i128 = 2 * g.edge_count() as i128;
    loop {
        // deg < d/2  <=>  2*deg*n < 2m  (exact integer comparison)
        let victim = (0..g.vertex_count())
            .find(|&v| alive[v] && 2 * (deg[v] as i128) * (n_alive as i128) < twice_edges);
        match victim {
            Some(v) if n_alive > 1 => {
                alive[v] = false;
                n_alive -= 1;
                twice_edges -= 2 * deg[v] as i128;
                for &u in g.neighbors(v) {
                    if alive[u] {
                        deg[u] -= 1;
                    }
                }
            }
            _ => break,
        }
    }
    let keep: VertexSet = g.vertices().filter(|&v| alive[v]).collect();
    g.induced_subgraph(&keep).expect("keep set is in range")
}

/// Extracts a subgraph H with d(H) >= d(G)/2 and delta(H) >= d(H)/2 (both
/// certified in exact rational arithmetic), which additionally passed an
/// expansion check at the params recorded in the report. The check is exact
/// below `cfg.exact_threshold` and sampled above it; if certification keeps
/// failing without a density-preserving violator to recurse into, eps1 is
/// halved and the final certified value is recorded in the report.
///
/// The procedure alternates stripping low-degree vertices with searching for
/// a violating set X; on a violation it recurses into the denser of
/// G[X u N(X)] and G - X. Every step strictly shrinks the graph, so it
/// terminates.
pub fn extract_expander(g: &Graph, params: &ExpanderParams, cfg: &ExtractionConfig) -> (Subgraph, ExpansionReport) {
    assert!(g.vertex_count() > 0, "extract_expander needs a nonempty graph");
    let d_target = g.average_degree() / 2;
    let mut eps1 = params.eps1;
    let mut current = strip_low_degree(g);
    let mut seed = cfg.rng_seed;
    loop {
        let p = ExpanderParams { eps1, k: params.k };
        let report = if current.graph.vertex_count() <= cfg.exact_threshold {
            verify_expander_exact_with_limit(&current.graph, &p, cfg.exact_threshold)
                .expect("size checked against threshold")
        } else {
            seed = seed.wrapping_add(1);
            verify_expander_sampled(&current.graph, &p, cfg.sample_trials, seed)
                .expect("trials > 0")
        };
        let witness = match report.witness.clone() {
            None => return (current, report),
            Some(w) => w,
        };

        // Candidate shrink targets: the violator with its neighbourhood, and
        // the complement of the violator. At least one keeps most of the
        // edges; only adopt one if it still meets the original density bar.
        let side_a: VertexSet = {
            let mut s = witness.clone();
            s.extend(
                current
                    .graph
                    .external_neighborhood(&witness)
                    .expect("witness ids are in range"),
            );
            s
        };
        let side_b: VertexSet = current
            .graph
            .vertices()
            .filter(|v| !witness.contains(v))
            .collect();
        let mut best: Option<Subgraph> = None;
        for keep in [side_a, side_b] {
            if keep.is_empty() || keep.len() == current.graph.vertex_count() {
                continue;
            }
            let cand = current
                .graph
                .induced_subgraph(&keep)
                .expect("keep sets are in range");
            let cand = Subgraph::compose(&current, cand);
            let stripped = strip_low_degree(&cand.graph);
            let cand = Subgraph::compose(&cand, stripped);
            if cand.graph.average_degree() >= d_target {
                let better = match &best {
                    None => true,
                    Some(b) => cand.graph.average_degree() > b.graph.average_degree(),
                };
                if better {
                    best = Some(cand);
                }
            }
        }
        match best {
            Some(next) => current = next,
            None => {
                // No density-preserving recursion available: certify what we
                // have at a weaker eps1 instead of giving the density back.
                eps1 /= 2.0;
                if eps1 < 1e-12 {
                    // Only reachable while a positive-eps violation persists;
                    // with eps this small any violator has an empty external
                    // neighbourhood, and then one side above always keeps the
                    // full density. Defensive return.
                    return (current, report);
                }
            }
        }
    }
}

/// Shortest path between the sets A and B in G - W, as long as its length is
/// at most `max_len`. The interior of the returned path avoids A, B and W;
/// endpoints are one vertex of each set (a shared vertex if the sets meet).
/// W must be disjoint from A and B.
pub fn short_path_avoiding(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    w: &VertexSet,
    max_len: usize,
) -> Option<Path> {
    assert!(!a.is_empty() && !b.is_empty(), "endpoint sets must be nonempty");
    debug_assert!(a.iter().all(|v| !w.contains(v)), "W must avoid A");
    debug_assert!(b.iter().all(|v| !w.contains(v)), "W must avoid B");
    if let Some(&v) = a.intersection(b).next() {
        return Some(vec![v]);
    }
    let n = g.vertex_count();
    let mut parent: Vec<usize> = vec![usize::MAX; n];
    let mut dist: Vec<Option<usize>> = vec![None; n];
    let mut queue = VecDeque::new();
    for &s in a {
        dist[s] = Some(0);
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v].expect("queued vertices have distances");
        if d >= max_len {
            continue;
        }
        for &u in g.neighbors(v) {
            if dist[u].is_some() || w.contains(&u) || a.contains(&u) {
                continue;
            }
            dist[u] = Some(d + 1);
            parent[u] = v;
            if b.contains(&u) {
                let mut path = vec![u];
                let mut cur = u;
                while parent[cur] != usize::MAX {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(u);
        }
    }
    None
}
