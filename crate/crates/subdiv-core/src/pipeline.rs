//! The end-to-end driver: bipartite halving, expander extraction, the
//! high-degree dichotomy, and the dense/sparse constructors, with a
//! fallback ladder that keeps the best verified certificate. Every stage
//! records its contract checks in the run report, and no order is ever
//! reported without re-verifying the certificate against the input graph.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::expander::{self, ExpanderParams, ExpansionReport, ExtractionConfig};
use crate::graph::{Graph, Rational, Subgraph, VertexSet};
use crate::highdeg::{self, HighDegConfig};
use crate::kst;
use crate::math;
use crate::sparse::{self, DowngradeReport, SparseConfig};
use crate::units::{self, UnitConfig};
use crate::verify::{self, SubdivisionCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamMode {
    /// Literal formula parameters (floored where f64 or the graph cannot
    /// express them); useful for assertion experiments only.
    Paper,
    /// Desk-scale profile; the default.
    Practical,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub s: usize,
    pub t: usize,
    pub eps1: f64,
    pub eps2: f64,
    pub c0: f64,
    pub c1: f64,
    /// The density constant K; practical runs only log it.
    pub big_k: f64,
    pub mode: ParamMode,
    pub rng_seed: u64,
    pub exact_threshold: usize,
    pub sample_trials: usize,
    /// Practical stand-in for the d >= log^{20s} n dense/sparse split.
    pub dense_threshold: f64,
    /// Overrides the core-count target (c1 * d by default).
    pub target_cores: Option<usize>,
}

impl PipelineConfig {
    pub fn practical(s: usize, t: usize) -> Self {
        PipelineConfig {
            s,
            t,
            eps1: 0.25,
            eps2: 0.05,
            c0: 0.01,
            c1: 1.0,
            big_k: 2000.0,
            mode: ParamMode::Practical,
            rng_seed: 0,
            exact_threshold: expander::DEFAULT_EXACT_THRESHOLD,
            sample_trials: 200,
            dense_threshold: 8.0,
            target_cores: None,
        }
    }

    /// The constant ladder with literal formulas. The eps2 formula
    /// underflows f64 for every admissible (eps1, t), which is recorded and
    /// floored; this mode exists for assertion experiments, not results.
    pub fn paper(s: usize, t: usize) -> Self {
        let eps0 = 0.137; // largest eps1 with integral eps(x)/x below 1/8
        let eps1 = if eps0 / 2.0 < 0.125 { eps0 / 2.0 } else { 0.125 };
        let tf = t as f64;
        let raw_eps2 = (1.0 / (10.0 * tf))
            * math::exp(-(100.0 * math::E * tf).min(100.0 / eps1))
                .min(math::exp(-100.0 / eps1));
        let eps2 = if raw_eps2 > 1e-9 { raw_eps2 } else { 1e-9 };
        let d0 = math::powf(100.0 / (eps1 * eps2), s as f64);
        let big_k = 100.0 / eps2;
        let c0_raw = 1.0 / (10.0 * math::ln_pow(30.0 * big_k / eps2, 10 * s as i32));
        let c0 = if c0_raw < 1.0 / d0 { c0_raw } else { 1.0 / d0 };
        PipelineConfig {
            s,
            t,
            eps1,
            eps2,
            c0: c0.max(1e-12),
            c1: 1e-3,
            big_k,
            mode: ParamMode::Paper,
            rng_seed: 0,
            exact_threshold: expander::DEFAULT_EXACT_THRESHOLD,
            sample_trials: 200,
            dense_threshold: 8.0,
            target_cores: None,
        }
    }

    fn s_ratio(&self) -> f64 {
        self.s as f64 / (self.s as f64 - 1.0)
    }

    /// Expansion scale k = eps2 * d^{s/(s-1)}.
    pub fn expansion_k(&self, d: f64) -> f64 {
        (self.eps2 * math::powf(d, self.s_ratio())).max(1e-9)
    }

    /// Reference order scale ell = d^{(1/2) s/(s-1)}.
    pub fn ell(&self, d: f64) -> f64 {
        math::powf(d, 0.5 * self.s_ratio())
    }

    pub fn resolved_target(&self, d: f64) -> usize {
        self.target_cores
            .unwrap_or_else(|| math::round_at_least(self.c1 * d, 2))
            .max(2)
    }

    fn highdeg_config(&self) -> HighDegConfig {
        let mut cfg = HighDegConfig::paper(self.s, self.t, self.c0, self.eps1, self.eps2);
        if self.mode == ParamMode::Practical {
            cfg.delta_multiplier = Some(2.0);
        }
        cfg
    }
}

/// Outcome of one constructor attempt, after mapping back to input ids and
/// re-verifying.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[derive(Default)]
pub struct RouteOutcome {
    pub attempted: bool,
    pub order: usize,
    pub note: Option<String>,
}


#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub n: usize,
    pub m: usize,
    /// Average degree of the input, exact.
    pub d: (i128, i128),
    pub mode: ParamMode,
    pub rng_seed: u64,
    pub s: usize,
    pub t: usize,
    /// d(G1) >= d/2, checked exactly.
    pub halving_ok: bool,
    pub d_half: (i128, i128),
    /// Extraction contract d(G2) >= d(G1)/2 and 2*delta(G2) >= d(G2),
    /// both exact.
    pub extraction_ok: bool,
    pub n_expander: usize,
    pub expansion: Option<ExpansionReport>,
    /// Sanity guard: n/d^{s/(s-1)} >= 1/(128 t) per the K_st order bound.
    pub kst_order_guard: bool,
    pub delta_threshold: f64,
    pub l_size: usize,
    /// Which branch the dichotomy picked, and which the literal formula
    /// d >= log^{20s} n would have picked.
    pub branch: String,
    pub paper_branch: String,
    pub reduce: Option<highdeg::ReduceReport>,
    pub downgrade: Option<DowngradeReport>,
    pub highdeg: RouteOutcome,
    pub highdeg_diag: Option<highdeg::HighdegDiagnostics>,
    pub units: RouteOutcome,
    pub units_diag: Option<units::UnitDiagnostics>,
    pub units_connect_diag: Option<units::ConnectUnitsDiagnostics>,
    pub sparse: RouteOutcome,
    pub sparse_diag: Option<sparse::SparseDiagnostics>,
    /// Reference scales: ell = d^{(1/2)s/(s-1)} and c1*d.
    pub target_ell: f64,
    pub target_sparse: f64,
    pub achieved_order: usize,
    pub verified: bool,
    pub certificate: Option<SubdivisionCertificate>,
    /// Constants actually used, for reproducibility.
    pub constants: BTreeMap<String, f64>,
}

fn ratio_pair(r: Rational) -> (i128, i128) {
    (*r.numer(), *r.denom())
}

/// Runs the full pipeline. The fallback ladder attempts the dichotomy's
/// branch first and the remaining constructors after it; the largest
/// verified certificate wins, with the trivial single-core certificate as
/// the floor.
pub fn run(g: &Graph, cfg: &PipelineConfig) -> RunReport {
    let n = g.vertex_count();
    let d = g.average_degree();
    let df = g.average_degree_f64();
    let mut constants = BTreeMap::new();
    for (k, v) in [
        ("eps1", cfg.eps1),
        ("eps2", cfg.eps2),
        ("c0", cfg.c0),
        ("c1", cfg.c1),
        ("K", cfg.big_k),
        ("dense_threshold", cfg.dense_threshold),
    ] {
        constants.insert(String::from(k), v);
    }
    let eps_params = ExpanderParams {
        eps1: cfg.eps1,
        k: cfg.expansion_k(df),
    };
    constants.insert("expansion_k".into(), eps_params.k);
    constants.insert("eps_integral".into(), eps_params.epsilon_integral());

    let mut report = RunReport {
        n,
        m: g.edge_count(),
        d: ratio_pair(d),
        mode: cfg.mode,
        rng_seed: cfg.rng_seed,
        s: cfg.s,
        t: cfg.t,
        halving_ok: false,
        d_half: (0, 1),
        extraction_ok: false,
        n_expander: 0,
        expansion: None,
        kst_order_guard: false,
        delta_threshold: 0.0,
        l_size: 0,
        branch: "trivial".into(),
        paper_branch: "trivial".into(),
        reduce: None,
        downgrade: None,
        highdeg: RouteOutcome::default(),
        highdeg_diag: None,
        units: RouteOutcome::default(),
        units_diag: None,
        units_connect_diag: None,
        sparse: RouteOutcome::default(),
        sparse_diag: None,
        target_ell: cfg.ell(df),
        target_sparse: cfg.c1 * df,
        achieved_order: 0,
        verified: false,
        certificate: None,
        constants,
    };
    if n == 0 {
        return report;
    }
    let mut best: Option<SubdivisionCertificate> = Some(SubdivisionCertificate::trivial(0));
    if g.edge_count() == 0 {
        return finish(g, report, best);
    }

    // Stage 1: bipartite half.
    let (g1, _classes) = g.bipartite_half();
    let d1 = g1.average_degree();
    report.d_half = ratio_pair(d1);
    report.halving_ok = d1 * 2 >= d;
    debug_assert!(report.halving_ok);

    // Stage 2: expander extraction, contracts checked exactly.
    let extraction = ExtractionConfig {
        exact_threshold: cfg.exact_threshold,
        sample_trials: cfg.sample_trials,
        rng_seed: cfg.rng_seed,
    };
    let (g2, expansion) = expander::extract_expander(&g1, &eps_params, &extraction);
    let d2 = g2.graph.average_degree();
    report.n_expander = g2.graph.vertex_count();
    report.extraction_ok = d2 * 2 >= d1
        && Rational::from_integer(2 * g2.graph.min_degree() as i128) >= d2;
    report.expansion = Some(expansion);
    report.kst_order_guard = {
        // 2t|G| >= d^{s/(s-1)} rearranged as in the K_st order bound.
        let bound = kst::kst_min_vertices(df / 8.0, cfg.s, cfg.t);
        (n as f64) >= bound / 64.0
    };

    // Dichotomy on the expander.
    let hd_cfg_full = cfg.highdeg_config();
    let threshold = hd_cfg_full.delta_threshold(g2.graph.vertex_count(), df);
    report.delta_threshold = threshold;
    let (l_set, _) = highdeg::split_by_degree(&g2.graph, threshold);
    report.l_size = l_set.len();
    let few_high = Rational::from_integer(16 * l_set.len() as i128) <= d;

    // G3: the bounded-degree expander after deleting L (trivial when L is
    // empty). Routes fall back to G2 if the reduction fails its checks.
    let mut g3: Option<Subgraph> = None;
    if few_high {
        let (h, reduce_report) = highdeg::reduce_max_degree(&g2.graph, d, &hd_cfg_full);
        report.reduce = Some(reduce_report);
        g3 = h.map(|sub| Subgraph::compose(&g2, sub));
    }
    let n3 = g3.as_ref().map_or(report.n_expander, |s| s.graph.vertex_count());
    let paper_dense = df >= math::ln_pow(n3.max(2) as f64, 20 * cfg.s as i32);
    report.paper_branch = if !few_high {
        "highdeg".into()
    } else if paper_dense {
        "units".into()
    } else {
        "sparse".into()
    };
    let practical_dense = df >= cfg.dense_threshold;
    report.branch = if !few_high {
        "highdeg".into()
    } else if practical_dense {
        "units".into()
    } else {
        "sparse".into()
    };

    // Fallback ladder: primary branch first, then the others in the fixed
    // order highdeg -> units -> sparse.
    let mut order: Vec<&str> = Vec::new();
    order.push(match report.branch.as_str() {
        "highdeg" => "highdeg",
        "units" => "units",
        _ => "sparse",
    });
    for r in ["highdeg", "units", "sparse"] {
        if !order.contains(&r) {
            order.push(r);
        }
    }

    let target = cfg.resolved_target(df);
    for route in order {
        match route {
            "highdeg" => {
                let (cert, outcome, diag) = route_highdeg(g, &g2, &l_set, cfg, df, target);
                report.highdeg = outcome;
                report.highdeg_diag = diag;
                consider(g, &mut best, cert, &mut report.highdeg);
            }
            "units" => {
                let host = g3.as_ref().unwrap_or(&g2);
                let (cert, outcome, bdiag, cdiag) = route_units(host, cfg, df, target);
                report.units = outcome;
                report.units_diag = bdiag;
                report.units_connect_diag = cdiag;
                consider(g, &mut best, cert, &mut report.units);
            }
            "sparse" => {
                let host = g3.as_ref().unwrap_or(&g2);
                // The downgrade check precedes the sparse constructor.
                let down = sparse::downgrade_expansion_check(
                    &host.graph,
                    df,
                    cfg.eps1,
                    cfg.eps2,
                    cfg.s,
                    cfg.t,
                    cfg.sample_trials,
                    cfg.rng_seed,
                );
                report.downgrade = Some(down);
                let (cert, outcome, diag) = route_sparse(host, cfg, df, target);
                report.sparse = outcome;
                report.sparse_diag = diag;
                consider(g, &mut best, cert, &mut report.sparse);
            }
            _ => unreachable!(),
        }
    }
    finish(g, report, best)
}

/// Verifies a candidate (already in input-graph ids) and keeps the larger.
fn consider(
    g: &Graph,
    best: &mut Option<SubdivisionCertificate>,
    cand: Option<SubdivisionCertificate>,
    outcome: &mut RouteOutcome,
) {
    if let Some(cert) = cand {
        match verify::verify_subdivision(g, &cert) {
            Ok(order) => {
                outcome.order = order;
                let better = best.as_ref().is_none_or(|b| order > b.order());
                if better {
                    *best = Some(cert);
                }
            }
            Err(e) => {
                // A constructor emitting an invalid certificate is a bug;
                // record it loudly and keep the previous best.
                outcome.note = Some(format!("certificate rejected: {e}"));
                debug_assert!(false, "constructor produced invalid certificate: {e}");
            }
        }
    }
}

fn finish(g: &Graph, mut report: RunReport, best: Option<SubdivisionCertificate>) -> RunReport {
    if let Some(cert) = best {
        match verify::verify_subdivision(g, &cert) {
            Ok(order) => {
                report.achieved_order = order;
                report.verified = true;
                report.certificate = Some(cert);
            }
            Err(_) => {
                report.achieved_order = 0;
                report.verified = false;
            }
        }
    }
    report
}

/// Algorithm P route. Tries a one-class core set first (as the counting
/// argument wants), then a mixed-class top-degree set as a practical
/// relaxation; returns the better certificate.
fn route_highdeg(
    g: &Graph,
    g2: &Subgraph,
    l_set: &VertexSet,
    cfg: &PipelineConfig,
    df: f64,
    target: usize,
) -> (Option<SubdivisionCertificate>, RouteOutcome, Option<highdeg::HighdegDiagnostics>) {
    let mut outcome = RouteOutcome {
        attempted: true,
        ..RouteOutcome::default()
    };
    let host = &g2.graph;
    let mut sizes = alloc::vec![(target + 1).max(4), (2 * target).max(4)];
    sizes.dedup();
    let classes = host.two_coloring();
    let mut candidate_sets: Vec<Vec<usize>> = Vec::new();
    for &wanted in &sizes {
        for filtered in [true, false] {
            if let Some((a, b)) = &classes {
                // Prefer high-degree vertices from L, topped up by degree.
                for class in [a, b] {
                    let picks = pick_cores(host, class, l_set, wanted, filtered);
                    if picks.len() >= 2 {
                        candidate_sets.push(picks);
                    }
                }
            }
            let everyone: VertexSet = host.vertices().collect();
            let mixed = pick_cores(host, &everyone, l_set, wanted, filtered);
            if mixed.len() >= 2 {
                candidate_sets.push(mixed);
            }
        }
    }
    candidate_sets.sort();
    candidate_sets.dedup();
    if candidate_sets.is_empty() {
        outcome.note = Some("no viable core set".into());
        return (None, outcome, None);
    }

    let mut hd_cfg = cfg.highdeg_config();
    if cfg.mode == ParamMode::Practical {
        hd_cfg.path_cap = Some(math::round_at_least(
            2.0 * math::ln_pow(host.vertex_count().max(3) as f64, 2),
            8,
        ));
        hd_cfg.target_cores = Some(target);
        hd_cfg.lprime_deg_cap = Some((hd_cfg.resolved_deg_cap(df)).max(2));
    }

    let mut best_local: Option<SubdivisionCertificate> = None;
    let mut best_diag: Option<highdeg::HighdegDiagnostics> = None;
    for mut lprime in candidate_sets {
        // Feasible star size for this core set, shrinking the set rather
        // than giving up when a core is too poor.
        let mut star_size = if cfg.mode == ParamMode::Practical {
            df.max(2.0) as usize
        } else {
            hd_cfg.resolved_star_size(host.vertex_count(), df)
        };
        let deg_cap = hd_cfg.resolved_deg_cap(df).max(if cfg.mode == ParamMode::Practical { 2 } else { 1 });
        let stars = loop {
            if lprime.len() < 2 {
                break None;
            }
            match highdeg::build_star_system(host, &lprime, star_size.max(1), deg_cap) {
                Ok(s) => break Some(s),
                Err(e) => {
                    if e.available >= 1 && star_size > e.available {
                        star_size = e.available;
                    } else {
                        lprime.retain(|&v| v != e.core);
                    }
                }
            }
        };
        let Some(stars) = stars else { continue };
        if cfg.mode == ParamMode::Practical {
            // Own-pair hops consume up to the whole star at this scale, so
            // the discard rule only fires on crossings beyond that.
            hd_cfg.discard_cap = Some(star_size.max(1));
        }
        let (cert, diag) = highdeg::run_algorithm_p(host, &stars, &hd_cfg, df);
        let cert = cert.map(|c| c.map_ids(&g2.to_parent));
        if let Some(c) = cert {
            if verify::verify_subdivision(g, &c).is_ok() {
                let better = best_local.as_ref().is_none_or(|b| c.order() > b.order());
                if better {
                    best_local = Some(c);
                    best_diag = Some(diag);
                }
            }
        } else if best_diag.is_none() {
            best_diag = Some(diag);
        }
    }
    (best_local, outcome, best_diag)
}

/// High-degree first, then degree-then-id order, restricted to `class`.
/// A candidate is skipped when it would force two core pairs through the
/// same unique middle vertex (on girth-6 graphs this picks an arc, keeping
/// one private common neighbour per pair); in dense graphs common
/// neighbourhoods are large and the filter never fires.
fn pick_cores(
    g: &Graph,
    class: &VertexSet,
    l_set: &VertexSet,
    wanted: usize,
    filtered: bool,
) -> Vec<usize> {
    let mut pool: Vec<usize> = class.iter().copied().collect();
    pool.sort_by(|&a, &b| {
        let la = l_set.contains(&a);
        let lb = l_set.contains(&b);
        lb.cmp(&la)
            .then_with(|| g.degree(b).cmp(&g.degree(a)))
            .then_with(|| a.cmp(&b))
    });
    let mut chosen: Vec<usize> = Vec::new();
    for &v in &pool {
        if chosen.len() == wanted {
            break;
        }
        if chosen.contains(&v) {
            continue;
        }
        if !filtered {
            chosen.push(v);
            continue;
        }
        let commons: Vec<VertexSet> = chosen
            .iter()
            .map(|&u| {
                g.neighbors(u)
                    .iter()
                    .copied()
                    .filter(|x| g.has_edge(*x, v) && !chosen.contains(x) && *x != v)
                    .collect()
            })
            .collect();
        let collision = (0..commons.len()).any(|a| {
            commons.len() > a + 1
                && commons[a].len() == 1
                && commons[(a + 1)..].iter().any(|c| *c == commons[a])
        });
        if !collision {
            chosen.push(v);
        }
    }
    chosen
}

fn route_units(
    host: &Subgraph,
    cfg: &PipelineConfig,
    df: f64,
    target: usize,
) -> (
    Option<SubdivisionCertificate>,
    RouteOutcome,
    Option<units::UnitDiagnostics>,
    Option<units::ConnectUnitsDiagnostics>,
) {
    let mut outcome = RouteOutcome {
        attempted: true,
        ..RouteOutcome::default()
    };
    let n = host.graph.vertex_count();
    let ucfg = match cfg.mode {
        ParamMode::Paper => UnitConfig::paper_formula(n, df, cfg.s, cfg.t),
        ParamMode::Practical => UnitConfig::practical(n, df, target),
    };
    let (unit_list, bdiag) = units::build_units(&host.graph, &ucfg);
    if unit_list.len() < 2 {
        outcome.note = Some("fewer than two units built".into());
        return (None, outcome, Some(bdiag), None);
    }
    let (cert, cdiag) = units::connect_units(&host.graph, &unit_list, &ucfg);
    let cert = cert.map(|c| c.map_ids(&host.to_parent));
    (cert, outcome, Some(bdiag), Some(cdiag))
}

fn route_sparse(
    host: &Subgraph,
    cfg: &PipelineConfig,
    df: f64,
    target: usize,
) -> (Option<SubdivisionCertificate>, RouteOutcome, Option<sparse::SparseDiagnostics>) {
    let mut outcome = RouteOutcome {
        attempted: true,
        ..RouteOutcome::default()
    };
    let n = host.graph.vertex_count();
    let scfg = match cfg.mode {
        ParamMode::Paper => SparseConfig::paper_formula(n, df, cfg.s, cfg.c1),
        ParamMode::Practical => SparseConfig::practical(n, df, Some(target)),
    };
    let (cert, diag) = sparse::run_sparse_connect(&host.graph, &scfg);
    if cert.is_none() {
        outcome.note = Some("sparse connector found no pair".into());
    }
    let cert = cert.map(|c| c.map_ids(&host.to_parent));
    (cert, outcome, Some(diag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::verify::{oracle_max_subdivision, verify_subdivision};

    #[test]
    fn edgeless_graph_gets_trivial_certificate() {
        let g = Graph::empty(5);
        let report = run(&g, &PipelineConfig::practical(2, 2));
        assert_eq!(report.achieved_order, 1);
        assert!(report.verified);
        let cert = report.certificate.unwrap();
        assert_eq!(verify_subdivision(&g, &cert), Ok(1));
    }

    #[test]
    fn k6_reaches_at_least_four() {
        let g = Graph::complete(6);
        let report = run(&g, &PipelineConfig::practical(2, 2));
        assert!(report.verified);
        assert!(report.achieved_order >= 4, "got {}", report.achieved_order);
        let (oracle, _) = oracle_max_subdivision(&g, 10).unwrap();
        assert!(report.achieved_order <= oracle);
    }

    #[test]
    fn heawood_graph_produces_verified_certificate() {
        let g = generate::incidence_graph_pg2(2).unwrap();
        let report = run(&g, &PipelineConfig::practical(2, 2));
        assert!(report.verified);
        assert!(report.achieved_order >= 3, "got {}", report.achieved_order);
        let cert = report.certificate.unwrap();
        assert_eq!(verify_subdivision(&g, &cert), Ok(report.achieved_order));
    }

    #[test]
    fn stage_contracts_hold_on_random_graph() {
        let g = generate::gnp(60, 0.15, 3).unwrap();
        let report = run(&g, &PipelineConfig::practical(2, 2));
        assert!(report.halving_ok);
        assert!(report.extraction_ok);
        assert!(report.verified);
    }

    #[test]
    fn pipeline_is_deterministic() {
        let g = generate::random_regular(80, 3, 9).unwrap();
        let cfg = PipelineConfig::practical(2, 2);
        let r1 = run(&g, &cfg);
        let r2 = run(&g, &cfg);
        assert_eq!(r1.achieved_order, r2.achieved_order);
        assert_eq!(r1.certificate, r2.certificate);
    }

    #[test]
    fn order_never_exceeds_oracle_on_tiny_graphs() {
        let graphs = [
            Graph::complete(5),
            Graph::cycle(5),
            Graph::complete_bipartite(3, 3),
            Graph::path_graph(7),
            Graph::cycle(8),
        ];
        let cfg = PipelineConfig::practical(2, 2);
        for g in &graphs {
            let report = run(g, &cfg);
            let (oracle, witness) = oracle_max_subdivision(g, 10).unwrap();
            assert!(verify_subdivision(g, &witness).is_ok());
            assert!(
                report.achieved_order <= oracle,
                "pipeline {} > oracle {} on {g:?}",
                report.achieved_order,
                oracle
            );
        }
    }

    #[test]
    fn paper_mode_runs_and_reports_constants() {
        let g = generate::incidence_graph_pg2(2).unwrap();
        let cfg = PipelineConfig::paper(2, 2);
        let report = run(&g, &cfg);
        assert!(report.verified); // at worst the trivial certificate
        assert!(report.constants.contains_key("eps_integral"));
        assert_eq!(report.mode, ParamMode::Paper);
    }
}
