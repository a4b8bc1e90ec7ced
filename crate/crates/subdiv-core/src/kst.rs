//! K_{s,t}-freeness testing and the counting inequalities that turn freeness
//! into neighbourhood lower bounds.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Rational, VertexSet};
use crate::math;

/// Default ceiling on exhaustive freeness testing for s >= 3.
pub const DEFAULT_FREENESS_LIMIT: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KstParams {
    pub s: usize,
    pub t: usize,
}

impl KstParams {
    pub fn new(s: usize, t: usize) -> Result<Self, KstError> {
        if s < 2 || t < s {
            return Err(KstError::BadParams(format!("need 2 <= s <= t, got s={s}, t={t}")));
        }
        Ok(KstParams { s, t })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KstError {
    BadParams(String),
    TooLargeForExhaustive { n: usize, s: usize },
}

impl fmt::Display for KstError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KstError::BadParams(msg) => write!(f, "bad K_st params: {msg}"),
            KstError::TooLargeForExhaustive { n, s } => write!(
                f,
                "exhaustive K_st search refused for n={n}, s={s}; pass force=true to override"
            ),
        }
    }
}

/// A complete bipartite subgraph witnessing non-freeness: every vertex of
/// `s_side` is adjacent to every vertex of `t_side`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KstWitness {
    pub s_side: Vec<usize>,
    pub t_side: Vec<usize>,
}

/// Searches for a K_{s,t} subgraph; `None` means the graph is K_{s,t}-free.
/// The s-subsets are scanned in lexicographic order with a running common
/// neighbourhood, so the first witness is deterministic. Orientation does
/// not matter: a subgraph with either side in either role is found through
/// its s-side.
pub fn find_kst(g: &Graph, params: &KstParams, force: bool) -> Result<Option<KstWitness>, KstError> {
    let n = g.vertex_count();
    if !force && params.s >= 3 && n > DEFAULT_FREENESS_LIMIT {
        return Err(KstError::TooLargeForExhaustive { n, s: params.s });
    }
    if !force && params.s >= 4 {
        return Err(KstError::TooLargeForExhaustive { n, s: params.s });
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(params.s);
    Ok(search_sside(g, params.s, params.t, 0, &mut chosen, None))
}

fn search_sside(
    g: &Graph,
    s: usize,
    t: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    common: Option<Vec<usize>>,
) -> Option<KstWitness> {
    if chosen.len() == s {
        let common = common.expect("common is set once a vertex is chosen");
        let t_side: Vec<usize> = common
            .iter()
            .copied()
            .filter(|v| !chosen.contains(v))
            .take(t)
            .collect();
        if t_side.len() == t {
            return Some(KstWitness {
                s_side: chosen.clone(),
                t_side,
            });
        }
        return None;
    }
    for v in start..g.vertex_count() {
        let next_common: Vec<usize> = match &common {
            None => g.neighbors(v).to_vec(),
            Some(c) => intersect_sorted(c, g.neighbors(v)),
        };
        // Even after discarding chosen vertices the pool must hold t.
        if next_common.len() >= t {
            chosen.push(v);
            if let Some(w) = search_sside(g, s, t, v + 1, chosen, Some(next_common)) {
                return Some(w);
            }
            chosen.pop();
        }
    }
    None
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub fn is_kst_free(g: &Graph, params: &KstParams, force: bool) -> Result<bool, KstError> {
    Ok(find_kst(g, params, force)?.is_none())
}

/// True iff no t-subset of A and s-subset of B are completely joined; only
/// A-B edges are considered. This is the one-sided pattern the counting
/// lemma needs.
pub fn kst_side_free(g: &Graph, a: &VertexSet, b: &VertexSet, s: usize, t: usize) -> bool {
    debug_assert!(a.is_disjoint(b), "sides must be disjoint");
    // Search over s-subsets of B; their common neighbourhood inside A must
    // stay below t.
    let b_ids: Vec<usize> = b.iter().copied().collect();
    let mut chosen = Vec::with_capacity(s);
    !side_search(g, a, &b_ids, (s, t), 0, &mut chosen, None)
}

fn side_search(
    g: &Graph,
    a: &VertexSet,
    b_ids: &[usize],
    (s, t): (usize, usize),
    start: usize,
    chosen: &mut Vec<usize>,
    common: Option<Vec<usize>>,
) -> bool {
    if chosen.len() == s {
        return common.is_some_and(|c| c.len() >= t);
    }
    for idx in start..b_ids.len() {
        let v = b_ids[idx];
        let nbrs_in_a: Vec<usize> = g.neighbors(v).iter().copied().filter(|u| a.contains(u)).collect();
        let next_common = match &common {
            None => nbrs_in_a,
            Some(c) => intersect_sorted(c, &nbrs_in_a),
        };
        if next_common.len() >= t {
            chosen.push(v);
            if side_search(g, a, b_ids, (s, t), idx + 1, chosen, Some(next_common)) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Binomial coefficient with a rational top argument:
/// C(x, s) = x(x-1)...(x-s+1)/s!, defined as 0 for x < s-1 so it matches the
/// convex usage over average degrees.
pub fn binomial_rational(x: Rational, s: usize) -> Rational {
    if x < Rational::from_integer(s as i128 - 1) {
        return Rational::from_integer(0);
    }
    let mut num = Rational::from_integer(1);
    for i in 0..s {
        num *= x - Rational::from_integer(i as i128);
    }
    let mut fact = 1i128;
    for i in 2..=s {
        fact *= i as i128;
    }
    num / Rational::from_integer(fact)
}

/// Exact audit of |A| * C(d(A), s) <= t * C(|B|, s) for a side-free pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KstAudit {
    pub a_size: usize,
    pub b_size: usize,
    pub s: usize,
    pub t: usize,
    /// Average A-degree into B as an exact fraction (numerator, denominator).
    pub avg_degree_a: (i128, i128),
    pub lhs: (i128, i128),
    pub rhs: (i128, i128),
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRefused {
    /// The K_{s,t} (t vertices in A, s in B) that violates the precondition.
    pub witness_present: bool,
}

impl fmt::Display for AuditRefused {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "audit refused: the pair is not K_st side-free")
    }
}

fn ratio_pair(r: Rational) -> (i128, i128) {
    (*r.numer(), *r.denom())
}

pub fn audit_count_inequality(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    s: usize,
    t: usize,
) -> Result<KstAudit, AuditRefused> {
    if !kst_side_free(g, a, b, s, t) {
        return Err(AuditRefused { witness_present: true });
    }
    let deg_sum: i128 = a
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|u| b.contains(u)).count() as i128)
        .sum();
    let d_a = if a.is_empty() {
        Rational::from_integer(0)
    } else {
        Rational::new(deg_sum, a.len() as i128)
    };
    let lhs = Rational::from_integer(a.len() as i128) * binomial_rational(d_a, s);
    let rhs = Rational::from_integer(t as i128)
        * binomial_rational(Rational::from_integer(b.len() as i128), s);
    Ok(KstAudit {
        a_size: a.len(),
        b_size: b.len(),
        s,
        t,
        avg_degree_a: ratio_pair(d_a),
        lhs: ratio_pair(lhs),
        rhs: ratio_pair(rhs),
        holds: lhs <= rhs,
    })
}

/// Neighbourhood lower bound delta * |A|^{1/s} / (e*t) guaranteed for
/// side-free pairs with minimum A-degree delta.
pub fn cor_kst_lower_bound(delta: f64, a_size: usize, s: usize, t: usize) -> f64 {
    assert!(delta >= 0.0 && a_size >= 1);
    delta * math::powf(a_size as f64, 1.0 / s as f64) / (math::E * t as f64)
}

/// Lower bound d^{s/(s-1)} / (2t) on the order of any K_{s,t}-free graph
/// with average degree d.
pub fn kst_min_vertices(d: f64, s: usize, t: usize) -> f64 {
    assert!(d >= 0.0);
    math::powf(d, s as f64 / (s as f64 - 1.0)) / (2.0 * t as f64)
}

/// Convenience: audit value as f64 for reports.
pub fn rational_to_f64(pair: (i128, i128)) -> f64 {
    pair.0 as f64 / pair.1 as f64
}
