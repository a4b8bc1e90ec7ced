//! Parameter files: either JSON or simple `key=value` lines. File values
//! overlay the mode's defaults; command-line flags overlay the file.

use std::fs;
use std::path::Path;

use serde::Deserialize;
use subdiv_core::pipeline::{ParamMode, PipelineConfig};

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigOverlay {
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub eps1: Option<f64>,
    pub eps2: Option<f64>,
    pub c0: Option<f64>,
    pub c1: Option<f64>,
    #[serde(rename = "K")]
    pub big_k: Option<f64>,
    pub mode: Option<String>,
    pub seed: Option<u64>,
    pub exact_threshold: Option<usize>,
    pub sample_trials: Option<usize>,
    pub dense_threshold: Option<f64>,
    pub target_cores: Option<usize>,
}

impl ConfigOverlay {
    pub fn from_file(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            return serde_json::from_str(trimmed).map_err(|e| format!("bad JSON config: {e}"));
        }
        let mut overlay = ConfigOverlay::default();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", no + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |e: String| format!("line {}: bad value for {key}: {e}", no + 1);
            match key {
                "s" => overlay.s = Some(value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?),
                "t" => overlay.t = Some(value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?),
                "eps1" => overlay.eps1 = Some(parse_f64(value).map_err(bad)?),
                "eps2" => overlay.eps2 = Some(parse_f64(value).map_err(bad)?),
                "c0" => overlay.c0 = Some(parse_f64(value).map_err(bad)?),
                "c1" => overlay.c1 = Some(parse_f64(value).map_err(bad)?),
                "K" => overlay.big_k = Some(parse_f64(value).map_err(bad)?),
                "mode" => overlay.mode = Some(value.to_string()),
                "seed" => overlay.seed = Some(value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?),
                "exact_threshold" => {
                    overlay.exact_threshold =
                        Some(value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?)
                }
                "sample_trials" => {
                    overlay.sample_trials =
                        Some(value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?)
                }
                "dense_threshold" => overlay.dense_threshold = Some(parse_f64(value).map_err(bad)?),
                "target_cores" => {
                    overlay.target_cores =
                        Some(value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?)
                }
                other => return Err(format!("line {}: unknown key '{other}'", no + 1)),
            }
        }
        Ok(overlay)
    }

    pub fn mode(&self) -> Result<Option<ParamMode>, String> {
        match self.mode.as_deref() {
            None => Ok(None),
            Some("practical") => Ok(Some(ParamMode::Practical)),
            Some("paper") => Ok(Some(ParamMode::Paper)),
            Some(other) => Err(format!("unknown mode '{other}', expected practical|paper")),
        }
    }

    /// Applies the overlay on top of a base config.
    pub fn apply(&self, mut cfg: PipelineConfig) -> PipelineConfig {
        if let Some(v) = self.s {
            cfg.s = v;
        }
        if let Some(v) = self.t {
            cfg.t = v;
        }
        if let Some(v) = self.eps1 {
            cfg.eps1 = v;
        }
        if let Some(v) = self.eps2 {
            cfg.eps2 = v;
        }
        if let Some(v) = self.c0 {
            cfg.c0 = v;
        }
        if let Some(v) = self.c1 {
            cfg.c1 = v;
        }
        if let Some(v) = self.big_k {
            cfg.big_k = v;
        }
        if let Some(v) = self.seed {
            cfg.rng_seed = v;
        }
        if let Some(v) = self.exact_threshold {
            cfg.exact_threshold = v;
        }
        if let Some(v) = self.sample_trials {
            cfg.sample_trials = v;
        }
        if let Some(v) = self.dense_threshold {
            cfg.dense_threshold = v;
        }
        if let Some(v) = self.target_cores {
            cfg.target_cores = Some(v);
        }
        cfg
    }
}

fn parse_f64(value: &str) -> Result<f64, String> {
    value.parse().map_err(|e: std::num::ParseFloatError| e.to_string())
}
