//! Property tests over seeded random graphs: the neighbourhood/ball
//! operators, the bipartite half, certificate tampering, and the
//! oracle/pipeline ordering on tiny instances.

use proptest::prelude::*;

use subdiv_core::generate;
use subdiv_core::pipeline::{self, PipelineConfig};
use subdiv_core::verify::{self, VerifyFailure};
use subdiv_core::{Graph, VertexSet};

fn gnp_graph(n: usize, p: f64, seed: u64) -> Graph {
    generate::gnp(n, p, seed).expect("valid gnp params")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn external_neighborhood_disjoint_from_input(
        n in 1usize..30,
        p in 0.0f64..0.6,
        seed in 0u64..1000,
        pick in 0u64..1000,
    ) {
        let g = gnp_graph(n, p, seed);
        let xs: VertexSet = (0..n).filter(|v| (v * 31 + pick as usize).is_multiple_of(3)).collect();
        let nbhd = g.external_neighborhood(&xs).unwrap();
        prop_assert!(nbhd.is_disjoint(&xs));
        for &u in &nbhd {
            prop_assert!(g.neighbors(u).iter().any(|w| xs.contains(w)));
        }
    }

    #[test]
    fn balls_grow_monotonically(
        n in 1usize..25,
        p in 0.0f64..0.5,
        seed in 0u64..1000,
        v in 0usize..25,
        r in 0usize..6,
    ) {
        let g = gnp_graph(n, p, seed);
        let v = v % n;
        let xs: VertexSet = [v].into_iter().collect();
        let smaller = g.ball(&xs, r).unwrap();
        let larger = g.ball(&xs, r + 1).unwrap();
        prop_assert!(smaller.is_subset(&larger));
        prop_assert!(smaller.contains(&v));
    }

    #[test]
    fn bipartite_half_contract(
        n in 2usize..28,
        p in 0.0f64..0.7,
        seed in 0u64..1000,
    ) {
        let g = gnp_graph(n, p, seed);
        let (h, (a, b)) = g.bipartite_half();
        prop_assert!(h.is_bipartite());
        prop_assert!(h.average_degree() * 2 >= g.average_degree());
        prop_assert_eq!(a.len() + b.len(), n);
        // Every kept edge crosses the returned bipartition.
        for (u, v) in h.edges() {
            prop_assert!(a.contains(&u) != a.contains(&v));
        }
    }

    #[test]
    fn iterated_neighborhood_stays_in_bounds(
        n in 1usize..20,
        p in 0.0f64..0.5,
        seed in 0u64..1000,
        i in 1usize..5,
    ) {
        let g = gnp_graph(n, p, seed);
        let xs: VertexSet = [0usize].into_iter().collect();
        let it = g.iterated_neighborhood(&xs, i).unwrap();
        prop_assert!(it.iter().all(|&v| v < n));
        // The iterate sits inside the i-ball.
        let ball = g.ball(&xs, i).unwrap();
        prop_assert!(it.is_subset(&ball));
    }

    #[test]
    fn certificate_tampering_is_caught(
        n in 4usize..9,
        seed in 0u64..500,
    ) {
        let g = gnp_graph(n, 0.7, seed);
        let (order, cert) = verify::oracle_max_subdivision(&g, 10).unwrap();
        prop_assert_eq!(verify::verify_subdivision(&g, &cert), Ok(order));
        if order >= 3 {
            // Drop one path: must be flagged as a missing pair.
            let mut broken = cert.clone();
            let key = *broken.paths.keys().next().unwrap();
            broken.paths.remove(&key);
            let outcome = verify::verify_subdivision(&g, &broken);
            let is_missing_pair = matches!(outcome, Err(VerifyFailure::MissingPair { .. }));
            prop_assert!(is_missing_pair, "got {outcome:?}");
        }
    }

    #[test]
    fn pipeline_at_most_oracle_on_tiny_graphs(
        n in 2usize..9,
        p in 0.2f64..0.9,
        seed in 0u64..200,
    ) {
        let g = gnp_graph(n, p, seed);
        let report = pipeline::run(&g, &PipelineConfig::practical(2, 2));
        let (oracle, witness) = verify::oracle_max_subdivision(&g, 10).unwrap();
        prop_assert!(verify::verify_subdivision(&g, &witness).is_ok());
        prop_assert!(report.verified);
        prop_assert!(report.achieved_order <= oracle);
    }
}

#[test]
fn oracle_value_monotone_under_vertex_deletion() {
    for seed in 0..10u64 {
        let g = gnp_graph(8, 0.6, seed);
        let (big, _) = verify::oracle_max_subdivision(&g, 10).unwrap();
        let keep: VertexSet = (1..8).collect();
        let sub = g.induced_subgraph(&keep).unwrap();
        let (small, _) = verify::oracle_max_subdivision(&sub.graph, 10).unwrap();
        assert!(big >= small, "seed {seed}: {big} < {small}");
    }
}
