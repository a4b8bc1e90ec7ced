//! Graph families used by the pipeline and the experiment harness:
//! projective-plane incidence graphs (C4-free, girth 6), disjoint unions of
//! balanced complete bipartite graphs, blown-up random regular graphs, and
//! random baselines. All randomised generators are deterministic per seed.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Rational};

const CONFIG_MODEL_RETRIES: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    NotPrime(u64),
    BadParams(String),
    ConfigurationModelFailed { n: usize, r: usize, attempts: u64 },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::NotPrime(q) => write!(f, "q = {q} is not prime"),
            GenError::BadParams(msg) => write!(f, "bad generator params: {msg}"),
            GenError::ConfigurationModelFailed { n, r, attempts } => write!(
                f,
                "configuration model found no simple {r}-regular graph on {n} vertices in {attempts} attempts"
            ),
        }
    }
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Point-line incidence graph of the projective plane PG(2,q), q prime:
/// bipartite on 2(q^2+q+1) vertices, (q+1)-regular, girth 6, K_{2,2}-free.
/// Points get ids 0..N, lines N..2N.
pub fn incidence_graph_pg2(q: u64) -> Result<Graph, GenError> {
    if !is_prime(q) {
        return Err(GenError::NotPrime(q));
    }
    // Canonical representatives of projective points over GF(q): (1,a,b),
    // (0,1,b), (0,0,1). Lines use the same representatives via duality;
    // incidence is a zero dot product mod q.
    let mut reps: Vec<[u64; 3]> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            reps.push([1, a, b]);
        }
    }
    for b in 0..q {
        reps.push([0, 1, b]);
    }
    reps.push([0, 0, 1]);
    let n = reps.len();
    debug_assert_eq!(n as u64, q * q + q + 1);
    let mut edges = Vec::new();
    for (pi, p) in reps.iter().enumerate() {
        for (li, l) in reps.iter().enumerate() {
            let dot = (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q;
            if dot == 0 {
                edges.push((pi, n + li));
            }
        }
    }
    Ok(Graph::from_edges(2 * n, &edges).expect("incidence edges are valid"))
}

/// Disjoint union of `copies` copies of K_{d/2,d/2}; the result is
/// d/2-regular. Returns the graph together with its exact average degree.
pub fn jung_union(d: usize, copies: usize) -> Result<(Graph, Rational), GenError> {
    if d < 2 || !d.is_multiple_of(2) {
        return Err(GenError::BadParams(format!("d must be even and >= 2, got {d}")));
    }
    if copies < 1 {
        return Err(GenError::BadParams("copies must be >= 1".into()));
    }
    let half = d / 2;
    let block = d;
    let mut edges = Vec::new();
    for c in 0..copies {
        let base = c * block;
        for u in 0..half {
            for v in 0..half {
                edges.push((base + u, base + half + v));
            }
        }
    }
    let g = Graph::from_edges(copies * block, &edges).expect("union edges are valid");
    let avg = g.average_degree();
    debug_assert_eq!(avg, Rational::from_integer(half as i128));
    Ok((g, avg))
}

/// Random r-regular graph on n vertices by the configuration model with
/// rejection of loops and multi-edges; the seed advances on each retry so
/// the outcome is still a pure function of (n, r, seed).
pub fn random_regular(n: usize, r: usize, rng_seed: u64) -> Result<Graph, GenError> {
    if !(n * r).is_multiple_of(2) {
        return Err(GenError::BadParams(format!("n*r must be even, got n={n}, r={r}")));
    }
    if r >= n {
        return Err(GenError::BadParams(format!("need r < n, got n={n}, r={r}")));
    }
    if r == 0 {
        return Ok(Graph::empty(n));
    }
    for attempt in 0..CONFIG_MODEL_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed.wrapping_add(attempt));
        if let Some(edges) = pair_stubs(n, r, &mut rng) {
            return Ok(Graph::from_edges(n, &edges).expect("paired stubs were validated"));
        }
    }
    Err(GenError::ConfigurationModelFailed {
        n,
        r,
        attempts: CONFIG_MODEL_RETRIES,
    })
}

/// One configuration-model attempt: draw stubs uniformly but only pair a
/// stub with partners that keep the graph simple; a dead end rejects the
/// attempt. Much higher acceptance than pairing blindly, which matters for
/// dense cases like K_6 where almost all blind pairings collide.
fn pair_stubs(n: usize, r: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| core::iter::repeat_n(v, r)).collect();
    stubs.shuffle(rng);
    let mut seen = alloc::collections::BTreeSet::new();
    let mut edges = Vec::with_capacity(stubs.len() / 2);
    while let Some(u) = stubs.pop() {
        
        let candidates: Vec<usize> = (0..stubs.len())
            .filter(|&j| {
                let v = stubs[j];
                v != u && !seen.contains(&(u.min(v), u.max(v)))
            })
            .collect();
        if candidates.is_empty() {
            return None;
        }
        let j = candidates[rng.random_range(0..candidates.len())];
        let v = stubs.swap_remove(j);
        let key = (u.min(v), u.max(v));
        seen.insert(key);
        edges.push(key);
    }
    Some(edges)
}

/// Blow-up counterexample: sample a random r-regular graph on h vertices,
/// replace each vertex by an independent set of size `blowup` and each edge
/// by a complete bipartite join. The result is (r*blowup)-regular.
pub fn counterexample_blowup(h: usize, r: usize, blowup: usize, rng_seed: u64) -> Result<Graph, GenError> {
    if r >= h {
        return Err(GenError::BadParams(format!("need r < h, got h={h}, r={r}")));
    }
    if !(h * r).is_multiple_of(2) {
        return Err(GenError::BadParams(format!("h*r must be even, got h={h}, r={r}")));
    }
    if blowup < 1 {
        return Err(GenError::BadParams("blowup must be >= 1".into()));
    }
    let base = random_regular(h, r, rng_seed)?;
    let mut edges = Vec::new();
    for (u, v) in base.edges() {
        for i in 0..blowup {
            for j in 0..blowup {
                edges.push((u * blowup + i, v * blowup + j));
            }
        }
    }
    Ok(Graph::from_edges(h * blowup, &edges).expect("blowup edges are valid"))
}

/// Erdos-Renyi G(n,p) with Bernoulli edges, deterministic per seed.
pub fn gnp(n: usize, p: f64, rng_seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::BadParams(format!("p must lie in [0,1], got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("gnp edges are valid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kst::{is_kst_free, KstParams};

    #[test]
    fn pg2_small_cases() {
        let hw = incidence_graph_pg2(2).unwrap();
        assert_eq!(hw.vertex_count(), 14);
        assert!(hw.vertices().all(|v| hw.degree(v) == 3));
        assert!(hw.is_bipartite());

        let g3 = incidence_graph_pg2(3).unwrap();
        assert_eq!(g3.vertex_count(), 26);
        assert!(g3.vertices().all(|v| g3.degree(v) == 4));
        assert!(is_kst_free(&g3, &KstParams::new(2, 2).unwrap(), false).unwrap());

        assert!(matches!(incidence_graph_pg2(4), Err(GenError::NotPrime(4))));
    }

    #[test]
    fn pg2_family_invariants() {
        for q in [2u64, 3, 5, 7, 11, 13] {
            let g = incidence_graph_pg2(q).unwrap();
            assert_eq!(g.vertex_count() as u64, 2 * (q * q + q + 1));
            assert!(g.vertices().all(|v| g.degree(v) as u64 == q + 1));
            assert!(g.is_bipartite());
            assert!(is_kst_free(&g, &KstParams::new(2, 2).unwrap(), false).unwrap());
        }
    }

    #[test]
    fn heawood_girth_is_six() {
        let g = incidence_graph_pg2(2).unwrap();
        // Girth via BFS from every vertex.
        let mut girth = usize::MAX;
        for root in g.vertices() {
            let mut dist = alloc::vec![usize::MAX; g.vertex_count()];
            let mut parent = alloc::vec![usize::MAX; g.vertex_count()];
            let mut queue = alloc::collections::VecDeque::from([root]);
            dist[root] = 0;
            while let Some(v) = queue.pop_front() {
                for &u in g.neighbors(v) {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        girth = girth.min(dist[v] + dist[u] + 1);
                    }
                }
            }
        }
        assert_eq!(girth, 6);
    }

    #[test]
    fn jung_union_shapes() {
        let (g, avg) = jung_union(4, 1).unwrap();
        assert_eq!(g, Graph::complete_bipartite(2, 2));
        assert_eq!(avg, Rational::from_integer(2));

        let (g, avg) = jung_union(6, 3).unwrap();
        assert_eq!(g.vertex_count(), 18);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert_eq!(avg, Rational::from_integer(3));

        assert!(jung_union(5, 1).is_err());
    }

    #[test]
    fn random_regular_is_regular_and_seeded() {
        let g = random_regular(20, 3, 42).unwrap();
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        let g2 = random_regular(20, 3, 42).unwrap();
        assert_eq!(g, g2);
        let g3 = random_regular(20, 3, 43).unwrap();
        assert!(g3.vertices().all(|v| g3.degree(v) == 3));

        assert!(random_regular(5, 3, 0).is_err()); // odd sum
        let k6 = random_regular(6, 5, 0).unwrap();
        assert_eq!(k6, Graph::complete(6));
    }

    #[test]
    fn blowup_structure() {
        let g = counterexample_blowup(4, 2, 3, 7).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert!(g.vertices().all(|v| g.degree(v) == 6));
        // No edges inside a blow-up class.
        for class in 0..4 {
            for i in 0..3 {
                for j in (i + 1)..3 {
                    assert!(!g.has_edge(class * 3 + i, class * 3 + j));
                }
            }
        }
        // blowup = 1 keeps the base graph's degrees.
        let g1 = counterexample_blowup(4, 2, 1, 7).unwrap();
        assert!(g1.vertices().all(|v| g1.degree(v) == 2));
    }

    #[test]
    fn gnp_extremes() {
        assert_eq!(gnp(5, 0.0, 1).unwrap(), Graph::empty(5));
        assert_eq!(gnp(5, 1.0, 1).unwrap(), Graph::complete(5));
        assert!(gnp(5, 1.5, 1).is_err());
        assert_eq!(gnp(30, 0.2, 9).unwrap(), gnp(30, 0.2, 9).unwrap());
    }
}
