//! Certificates for clique subdivisions, an independent verifier, and an
//! exhaustive oracle for tiny graphs. The verifier deliberately shares no
//! code with the constructors: it re-derives everything from the graph.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Path, VertexSet};

/// Which constructor produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Highdeg,
    Units,
    Sparse,
    /// Degenerate single-core certificate.
    Trivial,
    /// Witness found by the exhaustive oracle.
    Oracle,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Route::Highdeg => "highdeg",
            Route::Units => "units",
            Route::Sparse => "sparse",
            Route::Trivial => "trivial",
            Route::Oracle => "oracle",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertMeta {
    pub route: Route,
    /// Free-form parameter record (mode, seeds, caps) for reproducibility.
    pub params: BTreeMap<String, String>,
}

impl CertMeta {
    pub fn new(route: Route) -> Self {
        CertMeta {
            route,
            params: BTreeMap::new(),
        }
    }
}

/// Core vertices plus one internally disjoint path per unordered core pair.
/// Keys are normalised to (low, high).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CertDto", into = "CertDto")]
pub struct SubdivisionCertificate {
    pub cores: Vec<usize>,
    pub paths: BTreeMap<(usize, usize), Path>,
    pub meta: CertMeta,
}

impl SubdivisionCertificate {
    pub fn trivial(core: usize) -> Self {
        SubdivisionCertificate {
            cores: vec![core],
            paths: BTreeMap::new(),
            meta: CertMeta::new(Route::Trivial),
        }
    }

    pub fn order(&self) -> usize {
        self.cores.len()
    }

    /// Renames every vertex through `map` (new id -> parent id tables).
    pub fn map_ids(&self, map: &[usize]) -> SubdivisionCertificate {
        let remap = |v: usize| map[v];
        let cores: Vec<usize> = self.cores.iter().copied().map(remap).collect();
        let mut paths = BTreeMap::new();
        for (&(u, v), p) in &self.paths {
            let (nu, nv) = (remap(u), remap(v));
            let key = (nu.min(nv), nu.max(nv));
            paths.insert(key, p.iter().copied().map(remap).collect());
        }
        SubdivisionCertificate {
            cores,
            paths,
            meta: self.meta.clone(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PathEntry {
    pair: (usize, usize),
    vertices: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CertDto {
    cores: Vec<usize>,
    paths: Vec<PathEntry>,
    meta: CertMeta,
}

impl From<SubdivisionCertificate> for CertDto {
    fn from(c: SubdivisionCertificate) -> CertDto {
        CertDto {
            cores: c.cores,
            paths: c
                .paths
                .into_iter()
                .map(|(pair, vertices)| PathEntry { pair, vertices })
                .collect(),
            meta: c.meta,
        }
    }
}

impl TryFrom<CertDto> for SubdivisionCertificate {
    type Error = String;

    fn try_from(dto: CertDto) -> Result<Self, String> {
        let mut paths = BTreeMap::new();
        for entry in dto.paths {
            let (u, v) = entry.pair;
            let key = (u.min(v), u.max(v));
            if paths.insert(key, entry.vertices).is_some() {
                return Err(alloc::format!(
                    "only one path allowed per pair, got a second for ({}, {})",
                    key.0,
                    key.1
                ));
            }
        }
        Ok(SubdivisionCertificate {
            cores: dto.cores,
            paths,
            meta: dto.meta,
        })
    }
}

/// First verification failure; the variants name the offending object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyFailure {
    VertexOutOfRange { vertex: usize },
    DuplicateCore { core: usize },
    MissingPair { u: usize, v: usize },
    UnexpectedPair { u: usize, v: usize },
    EmptyPath { u: usize, v: usize },
    EndpointMismatch { u: usize, v: usize },
    NotAPath { u: usize, v: usize },
    CoreInInterior { core: usize, u: usize, v: usize },
    SharedInteriorVertex { vertex: usize },
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::VertexOutOfRange { vertex } => {
                write!(f, "certificate names vertex {vertex} outside the graph")
            }
            VerifyFailure::DuplicateCore { core } => write!(f, "core {core} listed twice"),
            VerifyFailure::MissingPair { u, v } => write!(f, "no path for core pair ({u}, {v})"),
            VerifyFailure::UnexpectedPair { u, v } => {
                write!(f, "path for ({u}, {v}) does not join two listed cores")
            }
            VerifyFailure::EmptyPath { u, v } => write!(f, "empty path for pair ({u}, {v})"),
            VerifyFailure::EndpointMismatch { u, v } => {
                write!(f, "path for pair ({u}, {v}) does not end at its cores")
            }
            VerifyFailure::NotAPath { u, v } => {
                write!(f, "vertex sequence for pair ({u}, {v}) is not a simple path in the graph")
            }
            VerifyFailure::CoreInInterior { core, u, v } => {
                write!(f, "core {core} appears inside the path for pair ({u}, {v})")
            }
            VerifyFailure::SharedInteriorVertex { vertex } => {
                write!(f, "interior vertex {vertex} is shared by two paths")
            }
        }
    }
}

/// Checks a certificate against the graph and returns its order. Checks, in
/// this sequence: vertex ranges, core distinctness, exactly one path per
/// core pair, path validity and endpoints, cores absent from interiors, and
/// pairwise internal disjointness.
pub fn verify_subdivision(g: &Graph, cert: &SubdivisionCertificate) -> Result<usize, VerifyFailure> {
    let n = g.vertex_count();
    let mut core_set = BTreeSet::new();
    for &c in &cert.cores {
        if c >= n {
            return Err(VerifyFailure::VertexOutOfRange { vertex: c });
        }
        if !core_set.insert(c) {
            return Err(VerifyFailure::DuplicateCore { core: c });
        }
    }
    let cores = &core_set;
    for (i, &u) in cert.cores.iter().enumerate() {
        for &v in cert.cores.iter().skip(i + 1) {
            let key = (u.min(v), u.max(v));
            if !cert.paths.contains_key(&key) {
                return Err(VerifyFailure::MissingPair { u: key.0, v: key.1 });
            }
        }
    }
    for &(u, v) in cert.paths.keys() {
        if !(cores.contains(&u) && cores.contains(&v) && u != v) {
            return Err(VerifyFailure::UnexpectedPair { u, v });
        }
    }
    let mut interior_owner: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (&(u, v), path) in &cert.paths {
        if path.is_empty() {
            return Err(VerifyFailure::EmptyPath { u, v });
        }
        if path.iter().any(|&x| x >= n) {
            return Err(VerifyFailure::VertexOutOfRange {
                vertex: *path.iter().find(|&&x| x >= n).expect("checked any"),
            });
        }
        let first = *path.first().expect("nonempty");
        let last = *path.last().expect("nonempty");
        if (first, last) != (u, v) && (first, last) != (v, u) {
            return Err(VerifyFailure::EndpointMismatch { u, v });
        }
        if !g.is_simple_path(path) {
            return Err(VerifyFailure::NotAPath { u, v });
        }
        for &x in &path[1..path.len() - 1] {
            if cores.contains(&x) {
                return Err(VerifyFailure::CoreInInterior { core: x, u, v });
            }
            if interior_owner.insert(x, (u, v)).is_some() {
                return Err(VerifyFailure::SharedInteriorVertex { vertex: x });
            }
        }
    }
    Ok(cert.cores.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    SizeRefused { n: usize, limit: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::SizeRefused { n, limit } => {
                write!(f, "oracle refuses graphs above {limit} vertices (got {n})")
            }
        }
    }
}

/// Default oracle size ceiling.
pub const DEFAULT_ORACLE_LIMIT: usize = 10;

/// Exhaustive maximum clique-subdivision order, with a witness certificate.
/// For t from an upper bound downward, enumerates core t-sets and then
/// backtracks over internally disjoint path systems, routing the pair with
/// the fewest available paths first.
pub fn oracle_max_subdivision(
    g: &Graph,
    limit_n: usize,
) -> Result<(usize, SubdivisionCertificate), OracleError> {
    let n = g.vertex_count();
    if n > limit_n {
        return Err(OracleError::SizeRefused { n, limit: limit_n });
    }
    if n == 0 {
        return Ok((
            0,
            SubdivisionCertificate {
                cores: Vec::new(),
                paths: BTreeMap::new(),
                meta: CertMeta::new(Route::Oracle),
            },
        ));
    }
    let m = g.edge_count();
    let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    // A K_t-subdivision needs t cores of degree >= t-1 and C(t,2) edge-
    // disjoint (in fact internally disjoint) paths, hence C(t,2) <= m.
    let mut upper = n;
    while upper >= 2 && (degrees[upper - 1] < upper - 1 || upper * (upper - 1) / 2 > m) {
        upper -= 1;
    }
    for t in (2..=upper).rev() {
        let candidates: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= t - 1).collect();
        if candidates.len() < t {
            continue;
        }
        let mut chosen = Vec::with_capacity(t);
        if let Some(paths) = pick_cores(g, &candidates, t, 0, &mut chosen) {
            let mut cert = SubdivisionCertificate {
                cores: chosen,
                paths,
                meta: CertMeta::new(Route::Oracle),
            };
            cert.cores.sort_unstable();
            return Ok((t, cert));
        }
    }
    let mut cert = SubdivisionCertificate::trivial(0);
    cert.meta = CertMeta::new(Route::Oracle);
    Ok((1, cert))
}

/// Tries to realise one specific core set as a subdivision by exhaustive
/// backtracking over internally disjoint path systems. No size guard: the
/// caller controls the cost through the core count and graph size.
pub fn route_core_set(g: &Graph, cores: &[usize]) -> Option<SubdivisionCertificate> {
    let distinct: VertexSet = cores.iter().copied().collect();
    if distinct.len() != cores.len() || cores.iter().any(|&c| c >= g.vertex_count()) {
        return None;
    }
    route_all_pairs(g, cores).map(|paths| {
        let mut cores = cores.to_vec();
        cores.sort_unstable();
        SubdivisionCertificate {
            cores,
            paths,
            meta: CertMeta::new(Route::Oracle),
        }
    })
}

fn pick_cores(
    g: &Graph,
    candidates: &[usize],
    t: usize,
    start: usize,
    chosen: &mut Vec<usize>,
) -> Option<BTreeMap<(usize, usize), Path>> {
    if chosen.len() == t {
        return route_all_pairs(g, chosen);
    }
    for idx in start..candidates.len() {
        chosen.push(candidates[idx]);
        if let Some(sol) = pick_cores(g, candidates, t, idx + 1, chosen) {
            return Some(sol);
        }
        chosen.pop();
    }
    None
}

fn route_all_pairs(g: &Graph, cores: &[usize]) -> Option<BTreeMap<(usize, usize), Path>> {
    let core_set: VertexSet = cores.iter().copied().collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (i, &u) in cores.iter().enumerate() {
        for &v in cores.iter().skip(i + 1) {
            pairs.push((u.min(v), u.max(v)));
        }
    }
    let mut used_interior = VertexSet::new();
    let mut solution = BTreeMap::new();
    if backtrack_pairs(g, &core_set, &mut pairs, &mut used_interior, &mut solution) {
        Some(solution)
    } else {
        None
    }
}

fn backtrack_pairs(
    g: &Graph,
    cores: &VertexSet,
    pairs: &mut Vec<(usize, usize)>,
    used_interior: &mut VertexSet,
    solution: &mut BTreeMap<(usize, usize), Path>,
) -> bool {
    if pairs.is_empty() {
        return true;
    }
    // Fail-fast: route the pair with the fewest available paths first.
    let mut best_idx = 0;
    let mut best_paths: Option<Vec<Path>> = None;
    for (idx, &(u, v)) in pairs.iter().enumerate() {
        let avail = enumerate_paths(g, u, v, cores, used_interior);
        if avail.is_empty() {
            return false;
        }
        let better = match &best_paths {
            None => true,
            Some(b) => avail.len() < b.len(),
        };
        if better {
            best_idx = idx;
            best_paths = Some(avail);
        }
    }
    let pair = pairs.remove(best_idx);
    let avail = best_paths.expect("pairs is nonempty");
    for path in avail {
        let interior: Vec<usize> = path[1..path.len() - 1].to_vec();
        for &x in &interior {
            used_interior.insert(x);
        }
        solution.insert(pair, path);
        if backtrack_pairs(g, cores, pairs, used_interior, solution) {
            return true;
        }
        solution.remove(&pair);
        for &x in &interior {
            used_interior.remove(&x);
        }
    }
    pairs.insert(best_idx, pair);
    false
}

/// All simple u-v paths whose interiors avoid cores and used vertices,
/// shortest first, then lexicographic.
fn enumerate_paths(g: &Graph, u: usize, v: usize, cores: &VertexSet, used: &VertexSet) -> Vec<Path> {
    let mut out = Vec::new();
    let mut current = vec![u];
    let mut on_path = VertexSet::new();
    on_path.insert(u);
    dfs_paths(g, v, cores, used, &mut current, &mut on_path, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn dfs_paths(
    g: &Graph,
    target: usize,
    cores: &VertexSet,
    used: &VertexSet,
    current: &mut Vec<usize>,
    on_path: &mut VertexSet,
    out: &mut Vec<Path>,
) {
    let last = *current.last().expect("path starts nonempty");
    for &next in g.neighbors(last) {
        if next == target {
            let mut done = current.clone();
            done.push(next);
            out.push(done);
            continue;
        }
        if on_path.contains(&next) || cores.contains(&next) || used.contains(&next) {
            continue;
        }
        current.push(next);
        on_path.insert(next);
        dfs_paths(g, target, cores, used, current, on_path, out);
        current.pop();
        on_path.remove(&next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_cert(cores: &[usize]) -> SubdivisionCertificate {
        let mut paths = BTreeMap::new();
        for (i, &u) in cores.iter().enumerate() {
            for &v in cores.iter().skip(i + 1) {
                paths.insert((u.min(v), u.max(v)), vec![u.min(v), u.max(v)]);
            }
        }
        SubdivisionCertificate {
            cores: cores.to_vec(),
            paths,
            meta: CertMeta::new(Route::Trivial),
        }
    }

    #[test]
    fn k4_edge_certificate_verifies() {
        let g = Graph::complete(4);
        let cert = edge_cert(&[0, 1, 2, 3]);
        assert_eq!(verify_subdivision(&g, &cert), Ok(4));
    }

    #[test]
    fn shared_interior_vertex_is_named() {
        // Two paths through vertex 4.
        let g = Graph::from_edges(5, &[(0, 4), (4, 1), (2, 4), (4, 3), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let mut cert = edge_cert(&[0, 1, 2, 3]);
        cert.paths.insert((0, 1), vec![0, 4, 1]);
        cert.paths.insert((2, 3), vec![2, 4, 3]);
        assert_eq!(
            verify_subdivision(&g, &cert),
            Err(VerifyFailure::SharedInteriorVertex { vertex: 4 })
        );
    }

    #[test]
    fn missing_pair_is_structural() {
        let g = Graph::cycle(6);
        let cert = SubdivisionCertificate {
            cores: vec![0, 3],
            paths: BTreeMap::new(),
            meta: CertMeta::new(Route::Trivial),
        };
        assert_eq!(
            verify_subdivision(&g, &cert),
            Err(VerifyFailure::MissingPair { u: 0, v: 3 })
        );
    }

    #[test]
    fn core_inside_interior_rejected() {
        let g = Graph::path_graph(3);
        let cert = SubdivisionCertificate {
            cores: vec![0, 1, 2],
            paths: BTreeMap::from([
                ((0, 1), vec![0, 1]),
                ((1, 2), vec![1, 2]),
                ((0, 2), vec![0, 1, 2]),
            ]),
            meta: CertMeta::new(Route::Trivial),
        };
        assert_eq!(
            verify_subdivision(&g, &cert),
            Err(VerifyFailure::CoreInInterior { core: 1, u: 0, v: 2 })
        );
    }

    #[test]
    fn non_adjacent_step_rejected() {
        let g = Graph::cycle(6);
        let cert = SubdivisionCertificate {
            cores: vec![0, 2],
            paths: BTreeMap::from([((0, 2), vec![0, 2])]),
            meta: CertMeta::new(Route::Trivial),
        };
        assert_eq!(
            verify_subdivision(&g, &cert),
            Err(VerifyFailure::NotAPath { u: 0, v: 2 })
        );
    }

    #[test]
    fn oracle_on_k5() {
        let g = Graph::complete(5);
        let (order, cert) = oracle_max_subdivision(&g, 10).unwrap();
        assert_eq!(order, 5);
        assert_eq!(verify_subdivision(&g, &cert), Ok(5));
    }

    #[test]
    fn oracle_on_k33() {
        let g = Graph::complete_bipartite(3, 3);
        let (order, cert) = oracle_max_subdivision(&g, 10).unwrap();
        assert_eq!(order, 4);
        assert_eq!(verify_subdivision(&g, &cert), Ok(4));
    }

    #[test]
    fn oracle_on_c5() {
        let g = Graph::cycle(5);
        let (order, cert) = oracle_max_subdivision(&g, 10).unwrap();
        assert_eq!(order, 3);
        assert_eq!(verify_subdivision(&g, &cert), Ok(3));
    }

    #[test]
    fn oracle_monotone_under_subgraphs() {
        let g = Graph::complete(5);
        let (big, _) = oracle_max_subdivision(&g, 10).unwrap();
        let sub = g.delete_vertices(&[0].into_iter().collect()).unwrap();
        let (small, _) = oracle_max_subdivision(&sub.graph, 10).unwrap();
        assert!(big >= small);
    }

    #[test]
    fn oracle_refuses_large_graphs() {
        let g = Graph::cycle(11);
        assert!(matches!(
            oracle_max_subdivision(&g, 10),
            Err(OracleError::SizeRefused { n: 11, .. })
        ));
    }

    #[test]
    fn oracle_trivial_on_edgeless() {
        let g = Graph::empty(4);
        let (order, cert) = oracle_max_subdivision(&g, 10).unwrap();
        assert_eq!(order, 1);
        assert_eq!(verify_subdivision(&g, &cert), Ok(1));
    }
}
