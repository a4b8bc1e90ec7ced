//! The high-degree dichotomy: either few vertices exceed the degree
//! threshold and deleting them leaves a bounded-degree expander, or many do
//! and a greedy star-routing process (Algorithm P) connects a subset of them
//! into a clique subdivision directly.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::expander::{self, ExpanderParams, ExpansionReport};
use crate::graph::{Graph, Rational, Subgraph, VertexSet};
use crate::math;
use crate::util;
use crate::verify::{CertMeta, Route, SubdivisionCertificate};

/// Constants and practical overrides for the high-degree construction. The
/// derived quantities (the degree threshold, the core-count scale, the log
/// scale m) are recomputed from (n, d) on every call, never cached.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HighDegConfig {
    pub s: usize,
    pub t: usize,
    pub c0: f64,
    pub eps1: f64,
    pub eps2: f64,
    /// Overrides for the process quantities; `None` means the formula
    /// value (which is unreachable on desk-scale graphs, so the pipeline's
    /// practical profile sets all of these).
    /// When set, the degree threshold becomes max(d/8, multiplier * d)
    /// instead of the m^{10s} formula.
    pub delta_multiplier: Option<f64>,
    pub star_size: Option<usize>,
    pub lprime_deg_cap: Option<usize>,
    pub path_cap: Option<usize>,
    pub discard_cap: Option<usize>,
    pub target_cores: Option<usize>,
}

impl HighDegConfig {
    pub fn paper(s: usize, t: usize, c0: f64, eps1: f64, eps2: f64) -> Self {
        HighDegConfig {
            s,
            t,
            c0,
            eps1,
            eps2,
            delta_multiplier: None,
            star_size: None,
            lprime_deg_cap: None,
            path_cap: None,
            discard_cap: None,
            target_cores: None,
        }
    }

    fn s_ratio(&self) -> f64 {
        self.s as f64 / (self.s as f64 - 1.0)
    }

    /// Core-count scale: c0 * d^{(1/2) s/(s-1)}.
    pub fn ell(&self, d: f64) -> f64 {
        self.c0 * math::powf(d, 0.5 * self.s_ratio())
    }

    /// Log scale m = ln(15n / (eps2 d^{s/(s-1)})).
    pub fn m(&self, n: usize, d: f64) -> f64 {
        math::ln(15.0 * n as f64 / (self.eps2 * math::powf(d, self.s_ratio())))
    }

    /// Degree threshold max(d/8, c0 * d * m^{10s}), or the practical
    /// max(d/8, multiplier * d) when a multiplier is set.
    pub fn delta_threshold(&self, n: usize, d: f64) -> f64 {
        let formula = match self.delta_multiplier {
            Some(mult) => mult * d,
            None => {
                let m = self.m(n, d);
                self.c0 * d * math::powf(m, 10.0 * self.s as f64)
            }
        };
        if formula > d / 8.0 {
            formula
        } else {
            d / 8.0
        }
    }

    pub fn resolved_star_size(&self, n: usize, d: f64) -> usize {
        self.star_size
            .unwrap_or_else(|| math::round_at_least(self.delta_threshold(n, d) / 2.0, 1))
    }

    pub fn resolved_deg_cap(&self, d: f64) -> usize {
        // c0 d / ell = d^{(1/2)(s-2)/(s-1)}
        self.lprime_deg_cap
            .unwrap_or_else(|| math::round_at_least(self.c0 * d / self.ell(d), 1))
    }

    pub fn resolved_path_cap(&self, n: usize, d: f64) -> usize {
        self.path_cap
            .unwrap_or_else(|| math::round_at_least(2.0 * math::powi(self.m(n, d), 4), 1))
    }

    pub fn resolved_discard_cap(&self, n: usize, d: f64) -> usize {
        self.discard_cap
            .unwrap_or_else(|| math::round_at_least(self.delta_threshold(n, d) / 4.0, 1))
    }

    pub fn resolved_target(&self, d: f64) -> usize {
        self.target_cores
            .unwrap_or_else(|| math::round_at_least(self.ell(d), 1))
    }
}

/// Partition of V(G) into vertices of degree >= threshold and the rest.
pub fn split_by_degree(g: &Graph, threshold: f64) -> (VertexSet, VertexSet) {
    let mut high = VertexSet::new();
    let mut rest = VertexSet::new();
    for v in g.vertices() {
        if g.degree(v) as f64 >= threshold {
            high.insert(v);
        } else {
            rest.insert(v);
        }
    }
    (high, rest)
}

/// What `reduce_max_degree` measured, kept for the run report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReduceReport {
    pub l_size: usize,
    pub delta_threshold: f64,
    pub min_degree_ok: bool,
    pub max_degree_ok: bool,
    /// Exact expansion re-certification, only attempted on small graphs.
    pub expansion: Option<ExpansionReport>,
}

/// Deletes the high-degree set L and checks the conclusions claimed for the
/// remainder: min degree >= d/16 and max degree <= d ln^{10s}(|H|/d^{s/(s-1)}).
/// Expansion at (eps1/2, eps2 d^{s/(s-1)}) is re-certified exactly when the
/// remainder is small enough. Returns None (with the report) if a check
/// fails, which sends the pipeline down a fallback route.
pub fn reduce_max_degree(
    g: &Graph,
    d: Rational,
    cfg: &HighDegConfig,
) -> (Option<Subgraph>, ReduceReport) {
    let df = *d.numer() as f64 / *d.denom() as f64;
    let n = g.vertex_count();
    let threshold = cfg.delta_threshold(n, df);
    let (l, _) = split_by_degree(g, threshold);
    let h = g.delete_vertices(&l).expect("degree split is in range");
    let min_degree_ok = Rational::from_integer(16 * h.graph.min_degree() as i128) >= d;
    let hn = h.graph.vertex_count();
    let max_deg_bound = if hn == 0 {
        0.0
    } else {
        df * math::powf(
            math::ln(hn as f64 / math::powf(df, self_ratio(cfg))).max(1.0),
            10.0 * cfg.s as f64,
        )
    };
    let max_degree_ok = hn > 0 && (h.graph.max_degree() as f64) <= max_deg_bound;
    let expansion = if hn > 0 && hn <= expander::DEFAULT_EXACT_THRESHOLD {
        let k = cfg.eps2 * math::powf(df, self_ratio(cfg));
        ExpanderParams::new(cfg.eps1 / 2.0, k.max(f64::MIN_POSITIVE))
            .ok()
            .and_then(|p| expander::verify_expander_exact(&h.graph, &p).ok())
    } else {
        None
    };
    let report = ReduceReport {
        l_size: l.len(),
        delta_threshold: threshold,
        min_degree_ok,
        max_degree_ok,
        expansion: expansion.clone(),
    };
    let expansion_ok = expansion.as_ref().is_none_or(|r| r.is_expander);
    if min_degree_ok && max_degree_ok && expansion_ok {
        (Some(h), report)
    } else {
        (None, report)
    }
}

fn self_ratio(cfg: &HighDegConfig) -> f64 {
    cfg.s as f64 / (cfg.s as f64 - 1.0)
}

/// Selected cores with their chosen neighbour stars.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarSystem {
    pub cores: Vec<usize>,
    pub stars: BTreeMap<usize, Vec<usize>>,
}

impl StarSystem {
    pub fn core_set(&self) -> VertexSet {
        self.cores.iter().copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarSystemError {
    pub core: usize,
    pub wanted: usize,
    pub available: usize,
}

impl fmt::Display for StarSystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "core {} has only {} qualifying neighbours, needed {}",
            self.core, self.available, self.wanted
        )
    }
}

/// Picks, for each core v, a star S1(v) of `star_size` neighbours each of
/// which touches at most `lprime_deg_cap` cores. Core vertices themselves
/// never enter a star. Selection is lowest-id first.
pub fn build_star_system(
    g: &Graph,
    lprime: &[usize],
    star_size: usize,
    lprime_deg_cap: usize,
) -> Result<StarSystem, StarSystemError> {
    let core_set: VertexSet = lprime.iter().copied().collect();
    let mut stars = BTreeMap::new();
    for &v in lprime {
        let qualifying: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| {
                !core_set.contains(&u)
                    && g.neighbors(u).iter().filter(|w| core_set.contains(w)).count()
                        <= lprime_deg_cap
            })
            .collect();
        if qualifying.len() < star_size {
            return Err(StarSystemError {
                core: v,
                wanted: star_size,
                available: qualifying.len(),
            });
        }
        stars.insert(v, qualifying[..star_size].to_vec());
    }
    Ok(StarSystem {
        cores: lprime.to_vec(),
        stars,
    })
}

/// Shared bookkeeping of the greedy connection process.
#[derive(Debug, Clone, Default)]
pub struct ConnectionState {
    pub paths: BTreeMap<(usize, usize), Vec<usize>>,
    /// Interior vertices of all accepted paths.
    pub used: VertexSet,
    pub discarded: VertexSet,
    pub usage_count: BTreeMap<usize, usize>,
}

impl ConnectionState {
    fn validate(&self, stars: &StarSystem, lprime: &VertexSet) -> Result<(), String> {
        let mut seen = VertexSet::new();
        for ((u, v), p) in &self.paths {
            for &x in &p[1..p.len() - 1] {
                if lprime.contains(&x) {
                    return Err(format!("interior {x} of ({u},{v}) lies in L'"));
                }
                if !seen.insert(x) {
                    return Err(format!("interior {x} shared between paths"));
                }
                if !self.used.contains(&x) {
                    return Err(format!("interior {x} missing from used set"));
                }
            }
        }
        for (&w, star) in &stars.stars {
            let actual = star.iter().filter(|x| self.used.contains(x)).count();
            let recorded = self.usage_count.get(&w).copied().unwrap_or(0);
            if actual != recorded {
                return Err(format!("usage count for {w}: recorded {recorded}, actual {actual}"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HighdegDiagnostics {
    pub pairs_attempted: usize,
    pub pairs_connected: usize,
    pub discarded: Vec<usize>,
    /// Histogram of failure reasons over unsuccessful attempts.
    pub failures: BTreeMap<String, usize>,
    pub target: usize,
    pub achieved: usize,
}

/// Algorithm P: round-robin over unconnected core pairs, connecting each by
/// a short path through the unused parts of their stars, discarding a core
/// once too much of its star is consumed. Runs passes until a full pass
/// makes no progress, then extracts the largest pairwise-connected set of
/// undiscarded cores.
pub fn run_algorithm_p(
    g: &Graph,
    stars: &StarSystem,
    cfg: &HighDegConfig,
    d: f64,
) -> (Option<SubdivisionCertificate>, HighdegDiagnostics) {
    let n = g.vertex_count();
    let path_cap = cfg.resolved_path_cap(n, d);
    let discard_cap = cfg.resolved_discard_cap(n, d);
    let target = cfg.resolved_target(d).max(2);
    let lprime = stars.core_set();

    let mut st = ConnectionState::default();
    let mut failures: BTreeMap<String, usize> = BTreeMap::new();
    let mut attempted = 0;

    let mut sorted_cores: Vec<usize> = stars.cores.clone();
    sorted_cores.sort_unstable();

    loop {
        let mut progress = false;
        for i in 0..sorted_cores.len() {
            for j in (i + 1)..sorted_cores.len() {
                let (u, v) = (sorted_cores[i], sorted_cores[j]);
                if st.discarded.contains(&u) || st.discarded.contains(&v) {
                    continue;
                }
                if st.paths.contains_key(&(u, v)) {
                    continue;
                }
                attempted += 1;
                match connect_pair(g, stars, &lprime, &st, u, v, path_cap) {
                    Ok(path) => {
                        accept_path(&mut st, stars, u, v, path, discard_cap);
                        debug_assert_eq!(st.validate(stars, &lprime), Ok(()));
                        progress = true;
                    }
                    Err(reason) => {
                        *failures.entry(reason).or_insert(0) += 1;
                    }
                }
            }
        }
        if !progress {
            break;
        }
    }

    let survivors: Vec<usize> = sorted_cores
        .iter()
        .copied()
        .filter(|c| !st.discarded.contains(c))
        .collect();
    let best = util::max_pairwise_connected(&survivors, |a, b| {
        st.paths.contains_key(&(a.min(b), a.max(b)))
    });
    let achieved = best.len();
    let diagnostics = HighdegDiagnostics {
        pairs_attempted: attempted,
        pairs_connected: st.paths.len(),
        discarded: st.discarded.iter().copied().collect(),
        failures,
        target,
        achieved,
    };
    if achieved < 2 {
        return (None, diagnostics);
    }
    let mut paths = BTreeMap::new();
    for (i, &u) in best.iter().enumerate() {
        for &v in best.iter().skip(i + 1) {
            let key = (u.min(v), u.max(v));
            paths.insert(key, st.paths[&key].clone());
        }
    }
    let mut meta = CertMeta::new(Route::Highdeg);
    meta.params.insert("path_cap".into(), format!("{path_cap}"));
    meta.params.insert("discard_cap".into(), format!("{discard_cap}"));
    meta.params.insert("target".into(), format!("{target}"));
    let cert = SubdivisionCertificate {
        cores: best,
        paths,
        meta,
    };
    (Some(cert), diagnostics)
}

/// One connection attempt under rule P1: the interior must avoid previous
/// interiors and all of L'. The first and last hops may use unused star
/// vertices, which are then consumed.
fn connect_pair(
    g: &Graph,
    stars: &StarSystem,
    lprime: &VertexSet,
    st: &ConnectionState,
    u: usize,
    v: usize,
    path_cap: usize,
) -> Result<Vec<usize>, String> {
    let avail_u: Vec<usize> = stars.stars[&u]
        .iter()
        .copied()
        .filter(|x| !st.used.contains(x))
        .collect();
    let avail_v: Vec<usize> = stars.stars[&v]
        .iter()
        .copied()
        .filter(|x| !st.used.contains(x))
        .collect();
    if g.has_edge(u, v) {
        return Ok(vec![u, v]);
    }
    if avail_u.is_empty() || avail_v.is_empty() {
        return Err("star exhausted".into());
    }
    // Direct middle vertex: unused in both stars at once.
    let in_v: VertexSet = avail_v.iter().copied().collect();
    if let Some(&x) = avail_u.iter().find(|x| in_v.contains(x)) {
        return Ok(vec![u, x, v]);
    }
    if path_cap < 4 {
        return Err("path cap below hop overhead".into());
    }
    let mut forbidden: VertexSet = st.used.clone();
    forbidden.extend(lprime.iter().copied());
    let sources = neighborhood_of(g, &avail_u, &forbidden);
    let dests = neighborhood_of(g, &avail_v, &forbidden);
    if sources.is_empty() || dests.is_empty() {
        return Err("no available boundary".into());
    }
    let avoid: VertexSet = forbidden
        .iter()
        .copied()
        .filter(|x| !sources.contains(x) && !dests.contains(x))
        .collect();
    let mid = expander::short_path_avoiding(g, &sources, &dests, &avoid, path_cap - 4)
        .ok_or_else(|| String::from("no path within cap"))?;
    let first = *mid.first().expect("paths are nonempty");
    let last = *mid.last().expect("paths are nonempty");
    let hop_u = *avail_u
        .iter()
        .find(|a| g.has_edge(**a, first))
        .expect("sources neighbour the star");
    let hop_v = *avail_v
        .iter()
        .find(|a| g.has_edge(**a, last))
        .expect("dests neighbour the star");
    let mut full = Vec::with_capacity(mid.len() + 4);
    full.push(u);
    full.push(hop_u);
    full.extend(mid);
    full.push(hop_v);
    full.push(v);
    let full = util::splice_repeats(full);
    if full.len() < 2 || full[0] != u || *full.last().expect("nonempty") != v {
        return Err("splice destroyed endpoints".into());
    }
    debug_assert!(g.is_simple_path(&full));
    if full.len() - 1 > path_cap {
        return Err("assembled path exceeds cap".into());
    }
    Ok(full)
}

fn neighborhood_of(g: &Graph, of: &[usize], forbidden: &VertexSet) -> VertexSet {
    let mut out = VertexSet::new();
    for &a in of {
        for &x in g.neighbors(a) {
            if !forbidden.contains(&x) {
                out.insert(x);
            }
        }
    }
    out
}

fn accept_path(
    st: &mut ConnectionState,
    stars: &StarSystem,
    u: usize,
    v: usize,
    path: Vec<usize>,
    discard_cap: usize,
) {
    let interior: Vec<usize> = path[1..path.len() - 1].to_vec();
    st.used.extend(interior.iter().copied());
    st.paths.insert((u.min(v), u.max(v)), path);
    // Rule P2: recount star usage and discard overdrawn cores.
    for (&w, star) in &stars.stars {
        let count = star.iter().filter(|x| st.used.contains(x)).count();
        st.usage_count.insert(w, count);
        if count > discard_cap {
            st.discarded.insert(w);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::verify::verify_subdivision;

    fn practical_cfg() -> HighDegConfig {
        HighDegConfig {
            s: 2,
            t: 2,
            c0: 0.01,
            eps1: 0.25,
            eps2: 0.05,
            delta_multiplier: None,
            star_size: Some(3),
            lprime_deg_cap: Some(3),
            path_cap: Some(50),
            discard_cap: Some(2),
            target_cores: Some(2),
        }
    }

    #[test]
    fn split_by_degree_examples() {
        let k4 = Graph::complete(4);
        let (l, rest) = split_by_degree(&k4, 3.0);
        assert_eq!(l.len(), 4);
        assert!(rest.is_empty());
        let (l, _) = split_by_degree(&k4, 4.0);
        assert!(l.is_empty());
        let star = Graph::complete_bipartite(1, 9);
        let (l, _) = split_by_degree(&star, 5.0);
        assert_eq!(l, [0].into_iter().collect());
    }

    #[test]
    fn delta_threshold_recomputed_not_cached() {
        let cfg = practical_cfg();
        let t1 = cfg.delta_threshold(100, 4.0);
        let t2 = cfg.delta_threshold(1000, 4.0);
        assert!(t2 > t1);
        assert!(t1 >= 4.0 / 8.0);
    }

    #[test]
    fn reduce_with_empty_l_keeps_graph() {
        let g = generate::incidence_graph_pg2(2).unwrap();
        let d = g.average_degree();
        let mut cfg = practical_cfg();
        cfg.delta_multiplier = Some(3.0); // threshold 3d, above every degree
        let (h, report) = reduce_max_degree(&g, d, &cfg);
        assert_eq!(report.l_size, 0);
        let h = h.expect("nothing removed, all conclusions hold");
        assert_eq!(h.graph, g);
    }

    #[test]
    fn reduce_fails_when_everything_is_high_degree() {
        let g = generate::incidence_graph_pg2(2).unwrap();
        let d = g.average_degree();
        let mut cfg = practical_cfg();
        cfg.c0 = 1e-18; // formula part collapses, leaving the d/8 floor
        let (h, report) = reduce_max_degree(&g, d, &cfg);
        // Every vertex has degree 3 >= d/8, so L is all of V and nothing
        // remains to satisfy the conclusions.
        assert_eq!(report.l_size, 14);
        assert!(h.is_none());
    }

    #[test]
    fn reduce_strips_apex_vertex() {
        // Circulant (degree 5 with the apex edge) plus an apex joined to
        // everything. c0 is sized so the threshold lands between the two.
        let n = 40;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((i, (i + 2) % n));
        }
        for v in 0..n {
            edges.push((v, n));
        }
        let g = Graph::from_edges(n + 1, &edges).unwrap();
        let d = g.average_degree(); // 240/41, about 5.85
        let mut cfg = practical_cfg();
        cfg.c0 = 1e-15;
        let df = *d.numer() as f64 / *d.denom() as f64;
        let threshold = cfg.delta_threshold(n + 1, df);
        assert!(threshold > 5.0 && threshold < 40.0, "threshold {threshold}");
        let (h, report) = reduce_max_degree(&g, d, &cfg);
        assert_eq!(report.l_size, 1);
        let h = h.expect("apex removal satisfies the conclusions");
        assert_eq!(h.graph.vertex_count(), n);
        assert_eq!(h.graph.max_degree(), 4);
        assert!(Rational::from_integer(16 * h.graph.min_degree() as i128) >= d);
    }

    #[test]
    fn star_system_respects_cap_and_errors() {
        let star = Graph::complete_bipartite(1, 10);
        let sys = build_star_system(&star, &[0], 5, 1).unwrap();
        assert_eq!(sys.stars[&0].len(), 5);
        assert_eq!(sys.stars[&0], vec![1, 2, 3, 4, 5]);

        // cap 0: every leaf touches the single core, so nothing qualifies.
        let err = build_star_system(&star, &[0], 1, 0).unwrap_err();
        assert_eq!(err.core, 0);
        assert_eq!(err.available, 0);
    }

    #[test]
    fn star_system_on_heawood() {
        let g = generate::incidence_graph_pg2(2).unwrap();
        // Points 0 and 3 share exactly one line; with cap 1 that line is
        // excluded from both stars, leaving two qualifying lines each.
        let sys = build_star_system(&g, &[0, 3], 2, 1).unwrap();
        assert_eq!(sys.stars.len(), 2);
        for star in sys.stars.values() {
            assert_eq!(star.len(), 2);
        }
        let err = build_star_system(&g, &[0, 3], 3, 1).unwrap_err();
        assert_eq!(err.available, 2);
    }

    #[test]
    fn algorithm_p_connects_two_cores() {
        let g = generate::incidence_graph_pg2(2).unwrap();
        let stars = build_star_system(&g, &[0, 2], 3, 2).unwrap();
        let cfg = practical_cfg();
        let (cert, diag) = run_algorithm_p(&g, &stars, &cfg, g.average_degree_f64());
        let cert = cert.expect("two cores connect in the Heawood graph");
        assert_eq!(verify_subdivision(&g, &cert), Ok(cert.order()));
        assert!(cert.order() >= 2);
        assert!(diag.pairs_connected >= 1);
    }

    #[test]
    fn algorithm_p_fails_across_components() {
        let mut edges = Vec::new();
        for base in [0, 7] {
            for u in 0..7 {
                for v in (u + 1)..7 {
                    edges.push((base + u, base + v));
                }
            }
        }
        let g = Graph::from_edges(14, &edges).unwrap();
        let stars = build_star_system(&g, &[0, 7], 3, 1).unwrap();
        let cfg = practical_cfg();
        let (cert, diag) = run_algorithm_p(&g, &stars, &cfg, g.average_degree_f64());
        assert!(cert.is_none());
        assert!(diag.failures.contains_key("no path within cap"));
    }

    #[test]
    fn algorithm_p_four_cores_on_heawood() {
        let g = generate::incidence_graph_pg2(2).unwrap();
        // All four cores on the point side of the bipartition.
        let stars = build_star_system(&g, &[0, 1, 2, 3], 3, 3).unwrap();
        let mut cfg = practical_cfg();
        cfg.target_cores = Some(3);
        cfg.discard_cap = Some(3);
        let (cert, _) = run_algorithm_p(&g, &stars, &cfg, g.average_degree_f64());
        let cert = cert.expect("at least three cores connect");
        assert!(cert.order() >= 3, "got order {}", cert.order());
        assert_eq!(verify_subdivision(&g, &cert), Ok(cert.order()));
    }

    #[test]
    fn determinism_same_inputs_same_certificate() {
        let g = generate::incidence_graph_pg2(3).unwrap();
        let stars = build_star_system(&g, &[0, 1, 2, 3], 4, 4).unwrap();
        let mut cfg = practical_cfg();
        cfg.discard_cap = Some(4);
        let run = || run_algorithm_p(&g, &stars, &cfg, g.average_degree_f64()).0;
        assert_eq!(run(), run());
    }

    #[test]
    fn interior_budget_matches_accounting() {
        let g = generate::incidence_graph_pg2(3).unwrap();
        let stars = build_star_system(&g, &[0, 1, 2, 3, 4], 4, 5).unwrap();
        let mut cfg = practical_cfg();
        cfg.discard_cap = Some(4);
        let path_cap = cfg.resolved_path_cap(g.vertex_count(), g.average_degree_f64());
        let (cert, diag) = run_algorithm_p(&g, &stars, &cfg, g.average_degree_f64());
        if let Some(cert) = cert {
            let total_interior: usize = cert.paths.values().map(|p| p.len() - 2).sum();
            assert!(total_interior <= diag.pairs_connected * path_cap);
        }
    }
}
