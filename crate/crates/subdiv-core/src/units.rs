//! The dense-regime construction: harvest vertex-disjoint two-layer hubs,
//! connect a candidate core to many of them by short disjoint paths
//! (Algorithm Q) to form units, then connect units pairwise through their
//! hubs (Algorithm R) and read off the subdivision.
//!
//! Interiors of produced units are pairwise disjoint; exteriors (the hub
//! leaf layers) may be shared between units, and only between exteriors.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::expander;
use crate::graph::{Graph, Path, VertexSet};
use crate::math;
use crate::util;
use crate::verify::{CertMeta, Route, SubdivisionCertificate};

/// Two-layer star: a center u, chosen neighbours S1(u), and pairwise
/// disjoint leaf sets S1(z) below each z.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hub {
    pub center: usize,
    pub s1: Vec<usize>,
    pub leaves: BTreeMap<usize, Vec<usize>>,
}

impl Hub {
    /// B1(u) = {u} u S1(u).
    pub fn b1(&self) -> VertexSet {
        let mut out = VertexSet::new();
        out.insert(self.center);
        out.extend(self.s1.iter().copied());
        out
    }

    /// S2(u): the union of the leaf sets.
    pub fn s2(&self) -> VertexSet {
        self.leaves.values().flatten().copied().collect()
    }

    pub fn vertices(&self) -> VertexSet {
        let mut out = self.b1();
        out.extend(self.s2());
        out
    }

    /// Independent structural check against the host graph.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let mut seen = VertexSet::new();
        seen.insert(self.center);
        for &z in &self.s1 {
            if !g.has_edge(self.center, z) {
                return Err(format!("{z} is not a neighbour of hub center {}", self.center));
            }
            if !seen.insert(z) {
                return Err(format!("vertex {z} repeated in hub layers"));
            }
        }
        for (&z, leaf_set) in &self.leaves {
            if !self.s1.contains(&z) {
                return Err(format!("leaf set under {z}, which is not in S1"));
            }
            for &w in leaf_set {
                if !g.has_edge(z, w) {
                    return Err(format!("{w} is not a neighbour of {z}"));
                }
                if !seen.insert(w) {
                    return Err(format!("vertex {w} repeated in hub layers"));
                }
            }
        }
        if self.leaves.len() != self.s1.len() {
            return Err("every S1 vertex needs a leaf set".into());
        }
        Ok(())
    }
}

/// A core vertex joined by short disjoint spokes to disjoint hubs. The
/// exterior is the hub leaf layer; everything else is interior.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unit {
    pub core: usize,
    pub hubs: Vec<Hub>,
    /// spokes[i] runs from `core` to `hubs[i].center`.
    pub spokes: Vec<Path>,
}

impl Unit {
    pub fn exterior(&self) -> VertexSet {
        self.hubs.iter().flat_map(|h| h.s2()).collect()
    }

    pub fn vertices(&self) -> VertexSet {
        let mut out = VertexSet::new();
        out.insert(self.core);
        for p in &self.spokes {
            out.extend(p.iter().copied());
        }
        for h in &self.hubs {
            out.extend(h.vertices());
        }
        out
    }

    pub fn interior(&self) -> VertexSet {
        let ext = self.exterior();
        self.vertices().into_iter().filter(|v| !ext.contains(v)).collect()
    }

    pub fn validate(&self, g: &Graph, h3: usize) -> Result<(), String> {
        if self.hubs.len() != self.spokes.len() {
            return Err("one spoke per hub required".into());
        }
        let mut hub_vertices: Vec<VertexSet> = Vec::new();
        for h in &self.hubs {
            h.validate(g)?;
            let vs = h.vertices();
            for earlier in &hub_vertices {
                if earlier.intersection(&vs).next().is_some() {
                    return Err("hubs overlap".into());
                }
            }
            hub_vertices.push(vs);
        }
        let mut spoke_seen = VertexSet::new();
        for (i, spoke) in self.spokes.iter().enumerate() {
            if !g.is_simple_path(spoke) {
                return Err(format!("spoke {i} is not a simple path"));
            }
            if spoke.len() - 1 > h3 {
                return Err(format!("spoke {i} longer than h3 = {h3}"));
            }
            if spoke[0] != self.core || *spoke.last().expect("nonempty") != self.hubs[i].center {
                return Err(format!("spoke {i} endpoints wrong"));
            }
            for &v in &spoke[1..] {
                if !spoke_seen.insert(v) {
                    return Err(format!("spokes share vertex {v}"));
                }
            }
            // The spoke may meet its hub only at the hub center, and other
            // hubs not at all.
            for (j, hv) in hub_vertices.iter().enumerate() {
                for &v in spoke {
                    if v != self.core && hv.contains(&v) && !(j == i && v == self.hubs[i].center) {
                        return Err(format!("spoke {i} crosses hub {j} at {v}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Resolved sizes for one unit-construction run. The paper-formula profile
/// is astronomically out of reach on desk graphs, so the pipeline usually
/// passes the practical profile.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitConfig {
    pub unit_count: usize,
    /// Hubs per unit; full pairwise unit connection needs unit_count - 1.
    pub h0: usize,
    pub w_hub_count: usize,
    pub u_hub_count: usize,
    pub w_h1: usize,
    pub w_h2: usize,
    pub u_h1: usize,
    pub u_h2: usize,
    pub pruned_h1: usize,
    pub pruned_h2: usize,
    /// Cap for Algorithm Q connection paths (also the spoke cap h3).
    pub q_path_cap: usize,
    /// Cap for Algorithm R connection paths.
    pub r_path_cap: usize,
    /// Rule R4: discard a unit once this many interior vertices are used.
    pub r4_interior_cap: usize,
}

impl UnitConfig {
    /// Literal formula profile: c = 1/800t, ell = d^{(1/2)s/(s-1)},
    /// m = ln^{2s}(n/ell^2), candidate hubs (2c*ell, 2c*ell) and
    /// (2m^2, 2c*ell) pruned to (m^2, c*ell), caps 2m and 6m, discard
    /// budget ell*m.
    pub fn paper_formula(n: usize, d: f64, s: usize, t: usize) -> Self {
        let c = 1.0 / (800.0 * t as f64);
        let ell = math::powf(d, 0.5 * s as f64 / (s as f64 - 1.0));
        let base = (n as f64 / (ell * ell)).max(2.0);
        let m = math::powf(math::ln(base), 2.0 * s as f64);
        let cl = math::round_at_least(c * ell, 1);
        let m2 = math::round_at_least(m * m, 1);
        UnitConfig {
            unit_count: math::round_at_least(c * ell / 2.0, 1),
            h0: cl,
            w_hub_count: math::round_at_least(m * m * m, 1),
            u_hub_count: math::round_at_least(ell * m * m * m, 1),
            w_h1: 2 * cl,
            w_h2: 2 * cl,
            u_h1: 2 * m2,
            u_h2: 2 * cl,
            pruned_h1: m2,
            pruned_h2: cl,
            q_path_cap: math::round_at_least(2.0 * m, 1),
            r_path_cap: math::round_at_least(6.0 * m, 1),
            r4_interior_cap: math::round_at_least(ell * m, 1),
        }
    }

    /// Desk-scale profile: tiny hubs, generous caps. Each Q connection
    /// consumes one fresh S1 vertex of the winning w-hub, so w_h1 tracks h0.
    pub fn practical(n: usize, d: f64, unit_count: usize) -> Self {
        let unit_count = unit_count.max(2);
        let h0 = unit_count - 1;
        let reach = math::round_at_least(2.0 * math::ln(n.max(3) as f64), 4);
        UnitConfig {
            unit_count,
            h0,
            w_hub_count: 2,
            u_hub_count: h0 + 2,
            w_h1: h0 + 1,
            w_h2: 1,
            u_h1: 2,
            u_h2: 2,
            pruned_h1: 1,
            pruned_h2: 1,
            q_path_cap: reach,
            r_path_cap: 3 * reach,
            r4_interior_cap: math::round_at_least(d * math::ln(n.max(3) as f64), 4),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct HubDiagnostics {
    pub requested: usize,
    pub found: usize,
    /// Whether |W| stayed within the nd/(128 max-degree) budget the hub
    /// lemma assumes; advisory on practical runs.
    pub w_within_budget: bool,
}

/// Greedy hub harvest in G - W: repeatedly refine to a min-degree subgraph,
/// scan candidate centers in id order, and grow a maximal family of
/// disjoint h2-leaf stars inside the candidate's neighbourhood. Emits up to
/// `count` pairwise disjoint hubs; a short list plus diagnostics is not an
/// error, the caller decides.
pub fn find_disjoint_hubs(
    g: &Graph,
    w: &VertexSet,
    h1: usize,
    h2: usize,
    count: usize,
) -> (Vec<Hub>, HubDiagnostics) {
    find_disjoint_hubs_with(g, w, &VertexSet::new(), h1, h2, count)
}

/// As [`find_disjoint_hubs`], with an extra set of vertices that may serve
/// as hub leaves but not as centers or S1 vertices. Unit construction puts
/// prior unit exteriors there, so exteriors may be shared while interiors
/// stay disjoint.
pub fn find_disjoint_hubs_with(
    g: &Graph,
    w: &VertexSet,
    leaf_only: &VertexSet,
    h1: usize,
    h2: usize,
    count: usize,
) -> (Vec<Hub>, HubDiagnostics) {
    let n = g.vertex_count();
    let budget = n as f64 * g.average_degree_f64() / (128.0 * g.max_degree().max(1) as f64);
    let mut diagnostics = HubDiagnostics {
        requested: count,
        found: 0,
        w_within_budget: (w.len() as f64) <= budget,
    };
    let mut hubs: Vec<Hub> = Vec::new();
    let mut excluded: VertexSet = w.clone();
    'harvest: while hubs.len() < count {
        let sub = match g.delete_vertices(&excluded) {
            Ok(s) if s.graph.vertex_count() > 0 => s,
            _ => break 'harvest,
        };
        let refined = strip_to_min_degree(&sub.graph);
        for v_local in 0..refined.graph.vertex_count() {
            if let Some(hub) = grow_hub(
                &refined.graph,
                v_local,
                h1,
                h2,
                leaf_only,
                &refined.to_parent,
                &sub.to_parent,
            ) {
                excluded.extend(hub.vertices());
                hubs.push(hub);
                continue 'harvest;
            }
        }
        break 'harvest;
    }
    diagnostics.found = hubs.len();
    (hubs, diagnostics)
}

/// Min-degree refinement: delete vertices of degree < d(H)/2 until none
/// remain, so every survivor has degree at least half the average.
fn strip_to_min_degree(g: &Graph) -> crate::graph::Subgraph {
    let mut keep: VertexSet = g.vertices().collect();
    loop {
        let sub = g.induced_subgraph(&keep).expect("keep is in range");
        let d = sub.graph.average_degree();
        let victim = sub
            .graph
            .vertices()
            .find(|&v| crate::graph::Rational::from_integer(2 * sub.graph.degree(v) as i128) < d);
        match victim {
            Some(v) if sub.graph.vertex_count() > 1 => {
                keep.remove(&sub.to_parent[v]);
            }
            _ => return sub,
        }
    }
}

/// Tries to grow an (h1, h2)-hub centered at the local vertex `v`,
/// translating through two levels of subgraph tables back to host ids.
/// Vertices in `leaf_only` (host ids) may appear as leaves only.
fn grow_hub(
    refined: &Graph,
    v: usize,
    h1: usize,
    h2: usize,
    leaf_only: &VertexSet,
    refined_to_sub: &[usize],
    sub_to_host: &[usize],
) -> Option<Hub> {
    let host = |local: usize| sub_to_host[refined_to_sub[local]];
    if leaf_only.contains(&host(v)) {
        return None;
    }
    let mut used = VertexSet::new();
    used.insert(v);
    let mut centers: Vec<usize> = Vec::new();
    let mut leaves: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &a in refined.neighbors(v) {
        if centers.len() == h1 {
            break;
        }
        if used.contains(&a) || leaf_only.contains(&host(a)) {
            continue;
        }
        let leaf_pick: Vec<usize> = refined
            .neighbors(a)
            .iter()
            .copied()
            .filter(|x| !used.contains(x) && *x != v)
            .take(h2)
            .collect();
        if leaf_pick.len() == h2 {
            used.insert(a);
            used.extend(leaf_pick.iter().copied());
            leaves.insert(host(a), leaf_pick.iter().map(|&x| host(x)).collect());
            centers.push(a);
        }
    }
    if centers.len() < h1 {
        return None;
    }
    Some(Hub {
        center: host(v),
        s1: centers.into_iter().map(host).collect(),
        leaves,
    })
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct UnitDiagnostics {
    pub units_requested: usize,
    pub units_built: usize,
    pub hub_rounds: Vec<HubDiagnostics>,
    /// Best per-round connection tally, for rounds where no core qualified.
    pub best_connection_tally: usize,
    pub failure: Option<String>,
}

/// Builds up to `cfg.unit_count` units with pairwise disjoint interiors by
/// repeated hub harvest plus Algorithm Q.
pub fn build_units(g: &Graph, cfg: &UnitConfig) -> (Vec<Unit>, UnitDiagnostics) {
    let mut diagnostics = UnitDiagnostics {
        units_requested: cfg.unit_count,
        ..UnitDiagnostics::default()
    };
    let mut units: Vec<Unit> = Vec::new();
    let mut prior_interiors = VertexSet::new();
    let mut prior_exteriors = VertexSet::new();
    while units.len() < cfg.unit_count {
        match build_one_unit(g, cfg, &prior_interiors, &prior_exteriors, &mut diagnostics) {
            Some(unit) => {
                debug_assert_eq!(unit.validate(g, cfg.q_path_cap), Ok(()));
                prior_interiors.extend(unit.interior());
                prior_exteriors.extend(unit.exterior());
                units.push(unit);
            }
            None => break,
        }
    }
    diagnostics.units_built = units.len();
    (units, diagnostics)
}

fn build_one_unit(
    g: &Graph,
    cfg: &UnitConfig,
    prior_interiors: &VertexSet,
    prior_exteriors: &VertexSet,
    diagnostics: &mut UnitDiagnostics,
) -> Option<Unit> {
    // Hub structure must avoid prior interiors, and may borrow prior
    // exterior vertices as leaves only.
    let mut hard: VertexSet = prior_interiors.clone();
    let (w_hubs, w_diag) =
        find_disjoint_hubs_with(g, &hard, prior_exteriors, cfg.w_h1, cfg.w_h2, cfg.w_hub_count);
    let mut w_block = hard.clone();
    for h in &w_hubs {
        w_block.extend(h.vertices());
    }
    let (u_hubs, u_diag) =
        find_disjoint_hubs_with(g, &w_block, prior_exteriors, cfg.u_h1, cfg.u_h2, cfg.u_hub_count);
    diagnostics.hub_rounds.push(w_diag);
    diagnostics.hub_rounds.push(u_diag);
    if w_hubs.is_empty() || u_hubs.len() < cfg.h0 {
        diagnostics.failure = Some(format!(
            "hub harvest short: {} w-hubs, {} of {} u-hubs",
            w_hubs.len(),
            u_hubs.len(),
            cfg.h0
        ));
        return None;
    }

    // Algorithm Q. Connection interiors avoid every hub's B1 (endpoints
    // enter their own B1 through explicit hops only), previous connections,
    // and prior units entirely.
    hard.extend(prior_exteriors.iter().copied());
    let mut all_b1 = VertexSet::new();
    for h in w_hubs.iter().chain(u_hubs.iter()) {
        all_b1.extend(h.b1());
    }
    let mut used_q = VertexSet::new();
    let mut connected_u: VertexSet = VertexSet::new();
    let mut connections: BTreeMap<usize, Vec<(usize, Path)>> = BTreeMap::new();
    loop {
        let mut progress = false;
        for (wi, wh) in w_hubs.iter().enumerate() {
            if let Some((uj, path)) = connect_hub_pair(
                g,
                wh,
                &u_hubs,
                &connected_u,
                &used_q,
                &hard,
                &all_b1,
                cfg.q_path_cap,
            ) {
                used_q.extend(path.iter().copied());
                connected_u.insert(u_hubs[uj].center);
                connections.entry(wi).or_default().push((uj, path));
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }

    let best_tally = connections.values().map(Vec::len).max().unwrap_or(0);
    diagnostics.best_connection_tally = diagnostics.best_connection_tally.max(best_tally);
    let (wi, conns) = connections
        .iter()
        .find(|(_, c)| c.len() >= cfg.h0)
        .map(|(wi, c)| (*wi, c.clone()))?;

    // Prune each connected u-hub so it avoids every vertex used in the
    // winner's connections, then assemble.
    let conn_vertices: VertexSet = conns.iter().flat_map(|(_, p)| p.iter().copied()).collect();
    let mut hubs = Vec::new();
    let mut spokes = Vec::new();
    for (uj, path) in &conns {
        if hubs.len() == cfg.h0 {
            break;
        }
        if let Some(pruned) = prune_hub(&u_hubs[*uj], &conn_vertices, cfg.pruned_h1, cfg.pruned_h2) {
            hubs.push(pruned);
            spokes.push(path.clone());
        }
    }
    if hubs.len() < cfg.h0 {
        diagnostics.failure = Some(format!(
            "pruning left {} of {} hubs usable",
            hubs.len(),
            cfg.h0
        ));
        return None;
    }
    Some(Unit {
        core: w_hubs[wi].center,
        hubs,
        spokes,
    })
}

/// One Q attempt for a fixed w-hub: scan unconnected u-hubs in index order
/// and return the first that admits a path under Q1/Q2. Short paths are
/// tried in grades (direct edge, one hop, two hops, BFS midsection) since
/// hub balls are excluded from the BFS itself.
#[allow(clippy::too_many_arguments)]
fn connect_hub_pair(
    g: &Graph,
    wh: &Hub,
    u_hubs: &[Hub],
    connected_u: &VertexSet,
    used_q: &VertexSet,
    hard: &VertexSet,
    all_b1: &VertexSet,
    cap: usize,
) -> Option<(usize, Path)> {
    let w = wh.center;
    let avail_z: Vec<usize> = wh
        .s1
        .iter()
        .copied()
        .filter(|z| !used_q.contains(z) && !hard.contains(z))
        .collect();
    'next_u: for (uj, uh) in u_hubs.iter().enumerate() {
        let u = uh.center;
        if connected_u.contains(&u) || used_q.contains(&u) {
            continue;
        }
        if g.has_edge(w, u) {
            return Some((uj, vec![w, u]));
        }
        let avail_zu: Vec<usize> = uh
            .s1
            .iter()
            .copied()
            .filter(|z| !used_q.contains(z) && !hard.contains(z))
            .collect();
        if cap >= 2 {
            if let Some(&z) = avail_z.iter().find(|&&z| g.has_edge(z, u)) {
                return Some((uj, vec![w, z, u]));
            }
            if let Some(&zu) = avail_zu.iter().find(|&&zu| g.has_edge(w, zu)) {
                return Some((uj, vec![w, zu, u]));
            }
        }
        if cap >= 3 {
            for &z in &avail_z {
                if let Some(&zu) = avail_zu.iter().find(|&&zu| g.has_edge(z, zu)) {
                    return Some((uj, vec![w, z, zu, u]));
                }
            }
        }
        if cap < 4 || avail_z.is_empty() || avail_zu.is_empty() {
            continue 'next_u;
        }
        let mut forbidden = hard.clone();
        forbidden.extend(used_q.iter().copied());
        forbidden.extend(all_b1.iter().copied());
        let sources = boundary(g, &avail_z, &forbidden);
        let dests = boundary(g, &avail_zu, &forbidden);
        if sources.is_empty() || dests.is_empty() {
            continue 'next_u;
        }
        let avoid: VertexSet = forbidden
            .iter()
            .copied()
            .filter(|x| !sources.contains(x) && !dests.contains(x))
            .collect();
        if let Some(mid) = expander::short_path_avoiding(g, &sources, &dests, &avoid, cap - 4) {
            let first = *mid.first().expect("nonempty");
            let last = *mid.last().expect("nonempty");
            let z = *avail_z.iter().find(|z| g.has_edge(**z, first)).expect("source hop");
            let zu = *avail_zu.iter().find(|z| g.has_edge(**z, last)).expect("dest hop");
            let mut full = Vec::with_capacity(mid.len() + 4);
            full.push(w);
            full.push(z);
            full.extend(mid);
            full.push(zu);
            full.push(u);
            let full = util::splice_repeats(full);
            if full.len() >= 2
                && full[0] == w
                && *full.last().expect("nonempty") == u
                && full.len() - 1 <= cap
            {
                debug_assert!(g.is_simple_path(&full));
                return Some((uj, full));
            }
        }
    }
    None
}

fn boundary(g: &Graph, of: &[usize], forbidden: &VertexSet) -> VertexSet {
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

/// Shrinks a hub to an (h1, h2)-hub that avoids `avoid` everywhere except
/// its center (the spoke endpoint stays in place).
fn prune_hub(hub: &Hub, avoid: &VertexSet, h1: usize, h2: usize) -> Option<Hub> {
    let mut s1 = Vec::new();
    let mut leaves = BTreeMap::new();
    for &z in &hub.s1 {
        if s1.len() == h1 {
            break;
        }
        if avoid.contains(&z) {
            continue;
        }
        let good: Vec<usize> = hub.leaves[&z]
            .iter()
            .copied()
            .filter(|x| !avoid.contains(x))
            .take(h2)
            .collect();
        if good.len() == h2 {
            s1.push(z);
            leaves.insert(z, good);
        }
    }
    if s1.len() < h1 {
        return None;
    }
    Some(Hub {
        center: hub.center,
        s1,
        leaves,
    })
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ConnectUnitsDiagnostics {
    pub pairs_connected: usize,
    pub discarded_units: Vec<usize>,
    pub failures: BTreeMap<String, usize>,
    pub achieved: usize,
}

/// Algorithm R: connect unit pairs through the S1 layers of hubs not yet in
/// a connection, avoiding all spoke paths and previous connections; each
/// hub joins at most one connection, each unit pair gets at most one, and a
/// unit is discarded once connections have eaten through its interior
/// budget. Surviving pairwise-connected units yield the certificate.
pub fn connect_units(
    g: &Graph,
    units: &[Unit],
    cfg: &UnitConfig,
) -> (Option<SubdivisionCertificate>, ConnectUnitsDiagnostics) {
    let mut diagnostics = ConnectUnitsDiagnostics::default();
    if units.len() < 2 {
        return (None, diagnostics);
    }
    // W: every spoke vertex of every unit, endpoints included.
    let mut w_set = VertexSet::new();
    for unit in units {
        w_set.insert(unit.core);
        for spoke in &unit.spokes {
            w_set.extend(spoke.iter().copied());
        }
    }
    let interiors: Vec<VertexSet> = units.iter().map(Unit::interior).collect();

    let mut used_r = VertexSet::new();
    let mut hub_used: VertexSet = VertexSet::new(); // centers of hubs in a connection
    let mut connections: BTreeMap<(usize, usize), (usize, usize, Path)> = BTreeMap::new();
    let mut interior_eaten = vec![0usize; units.len()];
    let mut discarded: VertexSet = VertexSet::new();

    loop {
        let mut progress = false;
        for i in 0..units.len() {
            for j in (i + 1)..units.len() {
                if discarded.contains(&i)
                    || discarded.contains(&j)
                    || connections.contains_key(&(i, j))
                {
                    continue;
                }
                match connect_unit_pair(g, &units[i], &units[j], &hub_used, &used_r, &w_set, cfg.r_path_cap) {
                    Ok((hi, hj, path)) => {
                        hub_used.insert(units[i].hubs[hi].center);
                        hub_used.insert(units[j].hubs[hj].center);
                        used_r.extend(path.iter().copied());
                        for (p, interior) in interiors.iter().enumerate() {
                            let eaten = path.iter().filter(|v| interior.contains(v)).count();
                            interior_eaten[p] += eaten;
                            if interior_eaten[p] > cfg.r4_interior_cap {
                                discarded.insert(p);
                            }
                        }
                        connections.insert((i, j), (hi, hj, path));
                        progress = true;
                    }
                    Err(reason) => {
                        *diagnostics.failures.entry(reason).or_insert(0) += 1;
                    }
                }
            }
        }
        if !progress {
            break;
        }
    }

    diagnostics.pairs_connected = connections.len();
    diagnostics.discarded_units = discarded.iter().copied().collect();
    let survivors: Vec<usize> = (0..units.len()).filter(|i| !discarded.contains(i)).collect();
    let chosen = util::max_pairwise_connected(&survivors, |a, b| {
        connections.contains_key(&(a.min(b), a.max(b)))
    });
    diagnostics.achieved = chosen.len();
    if chosen.len() < 2 {
        return (None, diagnostics);
    }

    // Composite core-to-core paths: spoke out, hub-center hop into the S1
    // endpoint of the connection, across, and mirrored on the far side.
    let mut paths = BTreeMap::new();
    let cores: Vec<usize> = chosen.iter().map(|&i| units[i].core).collect();
    for (a, &i) in chosen.iter().enumerate() {
        for &j in chosen.iter().skip(a + 1) {
            let (hi, hj, conn) = &connections[&(i.min(j), i.max(j))];
            let (ui, uj, conn_path): (usize, usize, Path) = if i < j {
                (*hi, *hj, conn.clone())
            } else {
                (*hj, *hi, conn.iter().rev().copied().collect())
            };
            let mut full: Path = units[i].spokes[ui].clone();
            full.extend(conn_path.iter().copied());
            let mut back: Path = units[j].spokes[uj].clone();
            back.reverse();
            full.extend(back);
            let full = util::splice_repeats(full);
            let (cu, cv) = (units[i].core, units[j].core);
            debug_assert!(g.is_simple_path(&full), "composite path must be simple");
            debug_assert_eq!(full[0], cu);
            debug_assert_eq!(*full.last().expect("nonempty"), cv);
            paths.insert((cu.min(cv), cu.max(cv)), full);
        }
    }
    let mut meta = CertMeta::new(Route::Units);
    meta.params.insert("unit_count".into(), format!("{}", units.len()));
    meta.params.insert("h0".into(), format!("{}", cfg.h0));
    meta.params.insert("r_path_cap".into(), format!("{}", cfg.r_path_cap));
    let cert = SubdivisionCertificate { cores, paths, meta };
    (Some(cert), diagnostics)
}

/// One R attempt: route between the S1 layers of available hubs of the two
/// units. Returns hub indices and the connection path, which runs from an
/// S1 vertex of one hub to an S1 vertex of the other, so one edge into each
/// hub center completes the composite.
fn connect_unit_pair(
    g: &Graph,
    fi: &Unit,
    fj: &Unit,
    hub_used: &VertexSet,
    used_r: &VertexSet,
    w_set: &VertexSet,
    cap: usize,
) -> Result<(usize, usize, Path), String> {
    let mut src_owner: BTreeMap<usize, usize> = BTreeMap::new();
    let mut dst_owner: BTreeMap<usize, usize> = BTreeMap::new();
    let mut sources = VertexSet::new();
    let mut dests = VertexSet::new();
    for (hi, hub) in fi.hubs.iter().enumerate() {
        if hub_used.contains(&hub.center) {
            continue;
        }
        for &z in &hub.s1 {
            if !used_r.contains(&z) && !w_set.contains(&z) {
                sources.insert(z);
                src_owner.entry(z).or_insert(hi);
            }
        }
    }
    for (hj, hub) in fj.hubs.iter().enumerate() {
        if hub_used.contains(&hub.center) {
            continue;
        }
        for &z in &hub.s1 {
            if !used_r.contains(&z) && !w_set.contains(&z) && !sources.contains(&z) {
                dests.insert(z);
                dst_owner.entry(z).or_insert(hj);
            }
        }
    }
    if sources.is_empty() || dests.is_empty() {
        return Err("no free hubs".into());
    }
    let avoid: VertexSet = used_r
        .iter()
        .chain(w_set.iter())
        .copied()
        .filter(|x| !sources.contains(x) && !dests.contains(x))
        .collect();
    let path = expander::short_path_avoiding(g, &sources, &dests, &avoid, cap)
        .ok_or_else(|| String::from("no path within cap"))?;
    let z0 = *path.first().expect("nonempty");
    let z1 = *path.last().expect("nonempty");
    let hi = src_owner[&z0];
    let hj = *dst_owner
        .get(&z1)
        .ok_or_else(|| String::from("path ended outside the destination layer"))?;
    Ok((hi, hj, path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::verify::verify_subdivision;

    /// Two disjoint complete 3-ary trees of depth 2; roots are 0 and 13.
    fn double_tree() -> Graph {
        let mut edges = Vec::new();
        for base in [0usize, 13] {
            for c in 1..=3 {
                edges.push((base, base + c));
                for l in 1..=3 {
                    edges.push((base + c, base + 3 + (c - 1) * 3 + l));
                }
            }
        }
        Graph::from_edges(26, &edges).unwrap()
    }

    #[test]
    fn star_has_no_second_layer() {
        let g = Graph::complete_bipartite(1, 6);
        let (hubs, diag) = find_disjoint_hubs(&g, &VertexSet::new(), 2, 2, 1);
        assert!(hubs.is_empty());
        assert_eq!(diag.found, 0);
    }

    #[test]
    fn double_tree_yields_two_hubs() {
        let g = double_tree();
        let (hubs, _) = find_disjoint_hubs(&g, &VertexSet::new(), 3, 3, 2);
        assert_eq!(hubs.len(), 2);
        for h in &hubs {
            assert_eq!(h.validate(&g), Ok(()));
            assert_eq!(h.s1.len(), 3);
            assert!(h.leaves.values().all(|l| l.len() == 3));
        }
        assert_eq!(hubs[0].center, 0);
        assert_eq!(hubs[1].center, 13);
        assert!(hubs[0].vertices().is_disjoint(&hubs[1].vertices()));
    }

    #[test]
    fn trivial_hub_on_path() {
        let g = Graph::path_graph(3);
        let (hubs, _) = find_disjoint_hubs(&g, &VertexSet::new(), 1, 1, 1);
        assert_eq!(hubs.len(), 1);
        assert_eq!(hubs[0].vertices().len(), 3);
    }

    #[test]
    fn hub_harvest_respects_w() {
        let g = double_tree();
        let w: VertexSet = (0..13).collect();
        let (hubs, _) = find_disjoint_hubs(&g, &w, 3, 3, 2);
        assert_eq!(hubs.len(), 1);
        assert_eq!(hubs[0].center, 13);
    }

    #[test]
    fn units_on_incidence_graph() {
        let g = generate::incidence_graph_pg2(5).unwrap();
        let cfg = UnitConfig::practical(g.vertex_count(), g.average_degree_f64(), 3);
        let (units, diag) = build_units(&g, &cfg);
        assert!(units.len() >= 2, "built {} units: {:?}", units.len(), diag.failure);
        for u in &units {
            assert_eq!(u.validate(&g, cfg.q_path_cap), Ok(()));
        }
        for (i, a) in units.iter().enumerate() {
            for b in units.iter().skip(i + 1) {
                assert!(a.interior().is_disjoint(&b.interior()));
                assert!(a.interior().is_disjoint(&b.exterior()));
                assert!(a.exterior().is_disjoint(&b.interior()));
            }
        }
    }

    #[test]
    fn connect_units_gives_verified_certificate() {
        let g = generate::incidence_graph_pg2(5).unwrap();
        let cfg = UnitConfig::practical(g.vertex_count(), g.average_degree_f64(), 3);
        let (units, _) = build_units(&g, &cfg);
        assert!(units.len() >= 2);
        let (cert, diag) = connect_units(&g, &units, &cfg);
        let cert = cert.expect("units connect in an incidence graph");
        assert_eq!(cert.order(), 3, "achieved {}", diag.achieved);
        assert_eq!(verify_subdivision(&g, &cert), Ok(cert.order()));
    }

    #[test]
    fn units_in_separate_components_do_not_connect() {
        let g = double_tree();
        let cfg = UnitConfig {
            unit_count: 2,
            h0: 1,
            w_hub_count: 2,
            u_hub_count: 3,
            w_h1: 1,
            w_h2: 1,
            u_h1: 1,
            u_h2: 1,
            pruned_h1: 1,
            pruned_h2: 1,
            q_path_cap: 6,
            r_path_cap: 12,
            r4_interior_cap: 10,
        };
        let (units, _) = build_units(&g, &cfg);
        if units.len() >= 2 && g.distance(units[0].core, units[1].core).is_none() {
            let (cert, diag) = connect_units(&g, &units, &cfg);
            assert!(cert.is_none());
            assert!(!diag.failures.is_empty());
        }
    }

    #[test]
    fn build_units_is_deterministic() {
        let g = generate::incidence_graph_pg2(5).unwrap();
        let cfg = UnitConfig::practical(g.vertex_count(), g.average_degree_f64(), 3);
        let (u1, _) = build_units(&g, &cfg);
        let (u2, _) = build_units(&g, &cfg);
        assert_eq!(u1, u2);
    }

    #[test]
    fn paper_formula_profile_is_finite() {
        let cfg = UnitConfig::paper_formula(1000, 16.0, 2, 2);
        assert!(cfg.unit_count >= 1);
        assert!(cfg.u_h1 >= 1 && cfg.u_h2 >= 1);
        assert!(cfg.q_path_cap >= 1);
    }
}
