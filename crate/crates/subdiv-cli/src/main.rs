//! Command-line front end: generate graphs, find and verify clique
//! subdivisions, run the exhaustive oracle and the K_{s,t} audit, and run
//! the growth experiment.
//!
//! Exit codes: 0 success, 1 invalid certificate, 2 usage or parse error,
//! 3 size refusal.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use subdiv_cli::config::ConfigOverlay;
use subdiv_cli::{experiment, io};
use subdiv_core::pipeline::{self, ParamMode, PipelineConfig};
use subdiv_core::{generate, kst, verify};

const EXIT_INVALID: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_REFUSED: u8 = 3;

#[derive(Parser)]
#[command(name = "subdiv", about = "Clique subdivisions in K_{s,t}-free graphs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family and write it as an edge list.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Run the construction pipeline and write a certificate.
    Find(FindArgs),
    /// Check a certificate against a graph (exit 0 iff valid).
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        cert: PathBuf,
    },
    /// Exhaustive maximum subdivision order for tiny graphs.
    Oracle {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = verify::DEFAULT_ORACLE_LIMIT)]
        limit: usize,
        /// Optionally write the witness certificate here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Structural audits.
    Audit {
        #[command(subcommand)]
        what: AuditKind,
    },
    /// Experiment harnesses.
    Experiment {
        #[command(subcommand)]
        what: ExperimentKind,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Point-line incidence graph of PG(2,q), q prime.
    Pg2 {
        #[arg(short, long)]
        q: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Disjoint union of K_{d/2,d/2} blocks.
    Jung {
        #[arg(short, long)]
        d: usize,
        #[arg(short, long, default_value_t = 1)]
        copies: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Blown-up random regular graph.
    Blowup {
        #[arg(long)]
        h: usize,
        #[arg(short, long)]
        r: usize,
        #[arg(short, long)]
        blowup: usize,
        #[arg(short, long, env = "TOPO_CLIQUE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Random r-regular graph (configuration model).
    Regular {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        r: usize,
        #[arg(short, long, env = "TOPO_CLIQUE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Erdos-Renyi G(n,p).
    Gnp {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        p: f64,
        #[arg(short, long, env = "TOPO_CLIQUE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct FindArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, long)]
    output: PathBuf,
    /// Also write the full run report as JSON.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value = "practical")]
    mode: String,
    #[arg(long, env = "TOPO_CLIQUE_SEED")]
    seed: Option<u64>,
    /// Parameter file (key=value lines or JSON).
    #[arg(long)]
    params: Option<PathBuf>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    target: Option<usize>,
}

#[derive(Subcommand)]
enum AuditKind {
    /// K_{s,t}-freeness plus the counting inequality on a bipartition.
    Kst {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Run the exhaustive search even above the size guard.
        #[arg(long, default_value_t = false)]
        force: bool,
    },
}

#[derive(Subcommand)]
enum ExperimentKind {
    /// Subdivision order growth over incidence graphs.
    Growth {
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 5, 7, 11, 13])]
        qs: Vec<u64>,
        /// Output prefix; writes <prefix>.json and <prefix>.csv.
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, env = "TOPO_CLIQUE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "practical")]
        mode: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

type Fail = (u8, String);

fn usage<E: std::fmt::Display>(e: E) -> Fail {
    (EXIT_USAGE, e.to_string())
}

fn dispatch(cli: Cli) -> Result<ExitCode, Fail> {
    match cli.command {
        Command::Generate { family } => generate_cmd(family),
        Command::Find(args) => find_cmd(args),
        Command::Verify { input, cert } => verify_cmd(input, cert),
        Command::Oracle { input, limit, output } => oracle_cmd(input, limit, output),
        Command::Audit {
            what: AuditKind::Kst { input, s, t, force },
        } => audit_cmd(input, s, t, force),
        Command::Experiment {
            what: ExperimentKind::Growth { qs, output, seed, mode },
        } => growth_cmd(qs, output, seed, mode),
    }
}

fn generate_cmd(family: Family) -> Result<ExitCode, Fail> {
    let (graph, output) = match family {
        Family::Pg2 { q, output } => (generate::incidence_graph_pg2(q).map_err(usage)?, output),
        Family::Jung { d, copies, output } => {
            let (g, avg) = generate::jung_union(d, copies).map_err(usage)?;
            eprintln!("average degree {}/{}", avg.numer(), avg.denom());
            (g, output)
        }
        Family::Blowup { h, r, blowup, seed, output } => (
            generate::counterexample_blowup(h, r, blowup, seed).map_err(usage)?,
            output,
        ),
        Family::Regular { n, r, seed, output } => {
            (generate::random_regular(n, r, seed).map_err(usage)?, output)
        }
        Family::Gnp { n, p, seed, output } => (generate::gnp(n, p, seed).map_err(usage)?, output),
    };
    io::write_edge_list(&output, &graph).map_err(usage)?;
    println!(
        "wrote {} ({} vertices, {} edges)",
        output.display(),
        graph.vertex_count(),
        graph.edge_count()
    );
    Ok(ExitCode::SUCCESS)
}

fn build_config(args: &FindArgs) -> Result<PipelineConfig, Fail> {
    let overlay = match &args.params {
        Some(path) => ConfigOverlay::from_file(path).map_err(usage)?,
        None => ConfigOverlay::default(),
    };
    let mode = match args.mode.as_str() {
        "practical" => ParamMode::Practical,
        "paper" => ParamMode::Paper,
        other => return Err(usage(format!("unknown mode '{other}'"))),
    };
    let mode = overlay.mode().map_err(usage)?.unwrap_or(mode);
    let s = args.s.or(overlay.s).unwrap_or(2);
    let t = args.t.or(overlay.t).unwrap_or(2);
    if s < 2 || t < s {
        return Err(usage(format!("need 2 <= s <= t, got s={s}, t={t}")));
    }
    let base = match mode {
        ParamMode::Practical => PipelineConfig::practical(s, t),
        ParamMode::Paper => PipelineConfig::paper(s, t),
    };
    let mut cfg = overlay.apply(base);
    cfg.s = s;
    cfg.t = t;
    if let Some(seed) = args.seed {
        cfg.rng_seed = seed;
    }
    if let Some(target) = args.target {
        cfg.target_cores = Some(target);
    }
    Ok(cfg)
}

fn find_cmd(args: FindArgs) -> Result<ExitCode, Fail> {
    let graph = io::read_edge_list(&args.input).map_err(usage)?;
    let cfg = build_config(&args)?;
    let report = pipeline::run(&graph, &cfg);
    match &report.certificate {
        Some(cert) => {
            io::write_certificate(&args.output, cert).map_err(usage)?;
            println!(
                "order {} via {} (n={}, d={:.3})",
                report.achieved_order,
                cert.meta.route,
                report.n,
                report.d.0 as f64 / report.d.1 as f64
            );
        }
        None => {
            eprintln!("no certificate produced (empty graph?)");
        }
    }
    if let Some(path) = &args.report {
        io::write_json(path, &report).map_err(usage)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(input: PathBuf, cert_path: PathBuf) -> Result<ExitCode, Fail> {
    let graph = io::read_edge_list(&input).map_err(usage)?;
    let cert = io::read_certificate(&cert_path).map_err(usage)?;
    match verify::verify_subdivision(&graph, &cert) {
        Ok(order) => {
            println!("valid: K_{order}-subdivision with cores {:?}", cert.cores);
            Ok(ExitCode::SUCCESS)
        }
        Err(failure) => {
            eprintln!("invalid certificate: {failure}");
            Ok(ExitCode::from(EXIT_INVALID))
        }
    }
}

fn oracle_cmd(input: PathBuf, limit: usize, output: Option<PathBuf>) -> Result<ExitCode, Fail> {
    let graph = io::read_edge_list(&input).map_err(usage)?;
    match verify::oracle_max_subdivision(&graph, limit) {
        Ok((order, witness)) => {
            println!("{order}");
            if let Some(path) = output {
                io::write_certificate(&path, &witness).map_err(usage)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => Err((EXIT_REFUSED, e.to_string())),
    }
}

fn audit_cmd(input: PathBuf, s: usize, t: usize, force: bool) -> Result<ExitCode, Fail> {
    let graph = io::read_edge_list(&input).map_err(usage)?;
    let params = kst::KstParams::new(s, t).map_err(usage)?;
    let witness = match kst::find_kst(&graph, &params, force) {
        Ok(w) => w,
        Err(kst::KstError::TooLargeForExhaustive { n, s }) => {
            return Err((
                EXIT_REFUSED,
                format!("freeness search refused for n={n}, s={s}; pass --force"),
            ))
        }
        Err(e) => return Err(usage(e)),
    };
    let mut out = serde_json::Map::new();
    out.insert("s".into(), s.into());
    out.insert("t".into(), t.into());
    out.insert("free".into(), witness.is_none().into());
    if let Some(w) = &witness {
        out.insert("witness".into(), serde_json::to_value(w).map_err(usage)?);
    }
    if witness.is_none() {
        if let Some((a, b)) = graph.two_coloring() {
            match kst::audit_count_inequality(&graph, &a, &b, s, t) {
                Ok(audit) => {
                    out.insert("count_inequality".into(), serde_json::to_value(&audit).map_err(usage)?);
                }
                Err(_) => {
                    out.insert("count_inequality".into(), "refused: sides not K_st side-free".into());
                }
            }
        } else {
            out.insert("count_inequality".into(), "skipped: graph not bipartite".into());
        }
    }
    println!("{}", serde_json::to_string_pretty(&out).map_err(usage)?);
    Ok(ExitCode::SUCCESS)
}

fn growth_cmd(qs: Vec<u64>, output: PathBuf, seed: u64, mode: String) -> Result<ExitCode, Fail> {
    let mut cfg = match mode.as_str() {
        "practical" => PipelineConfig::practical(2, 2),
        "paper" => PipelineConfig::paper(2, 2),
        other => return Err(usage(format!("unknown mode '{other}'"))),
    };
    cfg.rng_seed = seed;
    let table = experiment::run_growth(&qs, &cfg).map_err(usage)?;
    experiment::write_growth(&output, &table).map_err(usage)?;
    for row in &table.rows {
        println!(
            "q={:<3} n={:<5} d={:<3} order={:<3} order/d={:.3} order/sqrt(d)={:.3} [{}]",
            row.q, row.n, row.d, row.order, row.order_per_d, row.order_per_sqrt_d, row.route
        );
    }
    Ok(ExitCode::SUCCESS)
}
