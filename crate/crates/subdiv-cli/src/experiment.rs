//! Growth experiment over the incidence-graph family: how the certified
//! subdivision order scales with the degree d = q + 1.

use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use subdiv_core::generate;
use subdiv_core::pipeline::{self, PipelineConfig};

use crate::io::{self, IoError};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GrowthRow {
    pub q: u64,
    pub n: usize,
    pub d: usize,
    pub order: usize,
    pub order_per_d: f64,
    pub order_per_sqrt_d: f64,
    pub route: String,
    pub runtime_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GrowthTable {
    pub qs: Vec<u64>,
    pub seed: u64,
    pub rows: Vec<GrowthRow>,
}

pub fn run_growth(qs: &[u64], cfg: &PipelineConfig) -> Result<GrowthTable, String> {
    let mut rows = Vec::new();
    for &q in qs {
        let g = generate::incidence_graph_pg2(q).map_err(|e| e.to_string())?;
        let d = (q + 1) as usize;
        let start = Instant::now();
        let report = pipeline::run(&g, cfg);
        let runtime_ms = start.elapsed().as_millis();
        let order = report.achieved_order;
        let route = report
            .certificate
            .as_ref()
            .map(|c| c.meta.route.to_string())
            .unwrap_or_else(|| "none".into());
        rows.push(GrowthRow {
            q,
            n: g.vertex_count(),
            d,
            order,
            order_per_d: order as f64 / d as f64,
            order_per_sqrt_d: order as f64 / (d as f64).sqrt(),
            route,
            runtime_ms,
        });
    }
    Ok(GrowthTable {
        qs: qs.to_vec(),
        seed: cfg.rng_seed,
        rows,
    })
}

/// Writes `<prefix>.json` and `<prefix>.csv`.
pub fn write_growth(prefix: &Path, table: &GrowthTable) -> Result<(), IoError> {
    let json_path = prefix.with_extension("json");
    let csv_path = prefix.with_extension("csv");
    io::write_json(&json_path, table)?;
    let mut csv = String::from("q,n,d,order,order_per_d,order_per_sqrt_d,route,runtime_ms\n");
    for r in &table.rows {
        csv.push_str(&format!(
            "{},{},{},{},{:.6},{:.6},{},{}\n",
            r.q, r.n, r.d, r.order, r.order_per_d, r.order_per_sqrt_d, r.route, r.runtime_ms
        ));
    }
    std::fs::write(csv_path, csv)?;
    Ok(())
}
