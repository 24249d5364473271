//! `mmw`: widths, certificates, minors and the obstruction catalog from the
//! command line. JSON reports go to stdout, a short summary to stderr.
//!
//! Exit codes: 0 success, 2 usage or input error, 3 size limit, 4 minor
//! search budget exhausted, 5 verification failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mmw_core::minor::{has_minor, DEFAULT_BUDGET};
use mmw_core::obstructions::{assemble_catalog, check_catalog, crosscheck_small, parse_g6_lines};
use mmw_core::tangle::{
    grid_sweep_random, grid_tangle, tangle3_example, verify_tangle, TangleCertificate, VERIFY_LIMIT,
};
use mmw_core::treerep::is_good_pair;
use mmw_core::width::{brw, mmw, rw, FWidthResult};
use mmw_core::{Error, Graph};

#[derive(Parser)]
#[command(name = "mmw", version, about = "Maximum matching width toolkit")]
struct Cli {
    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact mm-width, branch-width or rank-width with a witness decomposition.
    Width {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "mmw")]
        which: Which,
    },
    /// Verify a tangle certificate.
    Tangle {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        cert: CertSource,
        /// Check the family at this order instead of the certificate's.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Test whether the second graph is a minor of the first.
    Minor {
        #[command(flatten)]
        host: Source,
        #[command(flatten)]
        pattern: MinorSource,
    },
    /// Generate, re-verify or cross-check the mm-width ≤ 2 obstruction set.
    Obstructions {
        #[command(subcommand)]
        action: ObstructionAction,
    },
    /// Decide whether (G, {a, b}) has a good tree-representation.
    Goodpair {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
}

#[derive(Subcommand)]
enum ObstructionAction {
    /// Regenerate the catalog and write obstructions.g6 and obstructions.json.
    Generate {
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Re-verify a catalog given as graph6 lines.
    Check {
        #[arg(long)]
        catalog: PathBuf,
    },
    /// Compare mm-width ≤ 2 with catalog-minor-freeness on small graphs.
    Crosscheck {
        /// Largest vertex count; 8 adds random 8-vertex classes.
        #[arg(long = "n", default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 2000)]
        sample: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Catalog as graph6 lines; regenerated when absent.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Mmw,
    Brw,
    Rw,
    All,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
    /// File holding a graph6 line or an edge list (`n m` then `u v` lines).
    #[arg(long)]
    file: Option<PathBuf>,
    /// `grid:k` or `named:<id>` (K5, C4, W5, K33, prism, ...).
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MinorSource {
    #[arg(long)]
    minor_g6: Option<String>,
    #[arg(long)]
    minor_file: Option<PathBuf>,
    #[arg(long)]
    minor_graph: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CertSource {
    /// Built-in certificate; only `grid3` exists.
    #[arg(long)]
    builtin: Option<String>,
    /// The small-set tangle of the k × k grid.
    #[arg(long)]
    grid_small: Option<usize>,
    /// Certificate JSON file.
    #[arg(long)]
    cert: Option<PathBuf>,
}

enum Failure {
    Core(Error),
    Input(String),
    /// The report is still printed.
    Verification(Value, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<(Value, String), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_source(g6: &Option<String>, file: &Option<PathBuf>, described: &Option<String>) -> Result<Graph, Failure> {
    if let Some(text) = g6 {
        return Ok(Graph::from_graph6(text)?);
    }
    if let Some(path) = file {
        let text = read(path)?;
        let trimmed = text.trim();
        return Ok(if trimmed.split_whitespace().count() == 1 {
            Graph::from_graph6(trimmed)?
        } else {
            Graph::from_edge_list(trimmed)?
        });
    }
    let described = described.as_deref().unwrap_or_default();
    match described.split_once(':') {
        Some(("grid", k)) => {
            let k = k.parse().map_err(|_| Failure::Input(format!("bad grid size in {described:?}")))?;
            Ok(Graph::grid(k)?)
        }
        Some(("named", id)) => Ok(Graph::named(id)?),
        _ => Err(Failure::Input(format!("expected grid:k or named:<id>, got {described:?}"))),
    }
}

impl Source {
    fn graph(&self) -> Result<Graph, Failure> {
        parse_source(&self.g6, &self.file, &self.graph)
    }
}

fn describe(g: &Graph) -> Value {
    json!({ "g6": g.to_graph6(), "n": g.n(), "m": g.m() })
}

fn budget() -> Result<u64, Failure> {
    match std::env::var("MMW_BUDGET") {
        Ok(v) => v.parse().map_err(|_| Failure::Input(format!("MMW_BUDGET must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn width_entry(r: &FWidthResult) -> Value {
    json!({
        "width": r.width,
        "decomposition": r.witness,
        "newick": r.witness.to_newick(),
        "per_edge_values": r.per_edge_values,
    })
}

fn cmd_width(source: &Source, which: Which) -> Outcome {
    let g = source.graph()?;
    let mut results = serde_json::Map::new();
    let mut summary = Vec::new();
    let mut values = [None; 3];
    for (slot, (name, w)) in [("mmw", Which::Mmw), ("brw", Which::Brw), ("rw", Which::Rw)].into_iter().enumerate() {
        if which != w && which != Which::All {
            continue;
        }
        let r = match w {
            Which::Mmw => mmw(&g)?,
            Which::Brw => brw(&g)?,
            _ => rw(&g)?,
        };
        summary.push(format!("{name} {}", r.width));
        values[slot] = Some(r.width);
        let mut entry = width_entry(&r);
        if w == Which::Brw {
            entry["ground"] = json!(g.edges());
        }
        results.insert(name.into(), entry);
    }
    if let [Some(m), Some(b), Some(r)] = values {
        let holds = r <= m && m <= b.max(1);
        results.insert("sandwich".into(), json!({ "rw_le_mmw_le_max_brw_1": holds }));
        summary.push(format!("sandwich {}", if holds { "holds" } else { "FAILS" }));
    }
    let report = json!({ "command": "width", "input": describe(&g), "results": results });
    Ok((report, summary.join(", ")))
}

fn cmd_tangle(source: &Source, cert: &CertSource, order: Option<usize>) -> Outcome {
    let g = source.graph()?;
    let mut c = if let Some(name) = &cert.builtin {
        match name.as_str() {
            "grid3" => tangle3_example(),
            other => return Err(Failure::Input(format!("unknown builtin certificate {other:?}"))),
        }
    } else if let Some(k) = cert.grid_small {
        grid_tangle(k)?
    } else {
        let path = cert.cert.as_ref().unwrap();
        serde_json::from_str::<TangleCertificate>(&read(path)?)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    if let Some(o) = order {
        c.order = o;
    }
    let base = json!({ "command": "tangle", "input": describe(&g), "certificate": c });
    if let (Some(k), true) = (cert.grid_small, g.n() > VERIFY_LIMIT) {
        // too large to enumerate: sample the grid small-set properties instead
        if g.n() != k * k {
            return Err(Failure::Input(format!("grid-small {k} needs the {k}x{k} grid")));
        }
        let sweep = grid_sweep_random(k, 100_000, 1_000_000, 1)?;
        let mut report = base;
        report["check"] = json!("lemma-sweep");
        report["results"] = json!({ "ok": sweep.ok(), "sweep": sweep });
        let line = format!("grid {k} small-set sweep: {}", if sweep.ok() { "pass" } else { "FAIL" });
        return if sweep.ok() { Ok((report, line)) } else { Err(Failure::Verification(report, line)) };
    }
    let r = verify_tangle(&g, &c)?;
    let mut report = base;
    report["check"] = json!("exhaustive");
    report["results"] = json!(r);
    if r.ok {
        Ok((report, format!("tangle of order {} verified ({} members)", r.order, r.members)))
    } else {
        let axioms: Vec<&str> = r.violations.iter().map(|v| v.axiom()).collect();
        Err(Failure::Verification(report, format!("tangle rejected: {}", axioms.join(", "))))
    }
}

fn cmd_minor(host: &Source, pattern: &MinorSource) -> Outcome {
    let g = host.graph()?;
    let h = parse_source(&pattern.minor_g6, &pattern.minor_file, &pattern.minor_graph)?;
    let model = has_minor(&g, &h, budget()?)?;
    let line = format!("minor {}", if model.is_some() { "found" } else { "not found" });
    let report = json!({
        "command": "minor",
        "input": { "host": describe(&g), "minor": describe(&h) },
        "results": { "found": model.is_some(), "branch_sets": model.map(|m| m.partition()) },
    });
    Ok((report, line))
}

fn load_catalog(path: &Path) -> Result<Vec<Graph>, Failure> {
    Ok(parse_g6_lines(&read(path)?)?)
}

fn cmd_obstructions(action: &ObstructionAction) -> Outcome {
    match action {
        ObstructionAction::Generate { out } => {
            let c = assemble_catalog()?;
            std::fs::create_dir_all(out).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
            let g6_path = out.join("obstructions.g6");
            let json_path = out.join("obstructions.json");
            let write = |p: &Path, text: String| {
                std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
            };
            write(&g6_path, c.to_g6())?;
            write(&json_path, serde_json::to_string_pretty(&c).unwrap() + "\n")?;
            let s = &c.summary;
            let line = format!(
                "{} obstructions ({}), printed totals 42: {}, 45: {}",
                s.total,
                s.per_family.iter().map(|(f, n)| format!("{f:?} {n}")).collect::<Vec<_>>().join(", "),
                if s.agrees_with_42 { "match" } else { "differ" },
                if s.agrees_with_45 { "match" } else { "differ" },
            );
            let report = json!({
                "command": "obstructions generate",
                "results": { "summary": s, "graphs": c.to_g6().lines().collect::<Vec<_>>() },
                "files": [g6_path.display().to_string(), json_path.display().to_string()],
            });
            Ok((report, line))
        }
        ObstructionAction::Check { catalog } => {
            let graphs = load_catalog(catalog)?;
            let r = check_catalog(&graphs, budget()?)?;
            let line = format!("{} records, {} failures", r.graphs, r.failures.len());
            let report = json!({ "command": "obstructions check", "results": r });
            if r.ok {
                Ok((report, line))
            } else {
                Err(Failure::Verification(report, line))
            }
        }
        ObstructionAction::Crosscheck { n, sample, seed, catalog } => {
            let graphs = match catalog {
                Some(p) => load_catalog(p)?,
                None => assemble_catalog()?.graphs()?,
            };
            let r = crosscheck_small(&graphs, *n, *sample, *seed, budget()?)?;
            let line = format!("{} classes, {} counterexamples", r.classes, r.counterexamples.len());
            let ok = r.counterexamples.is_empty();
            let report = json!({ "command": "obstructions crosscheck", "results": r });
            if ok {
                Ok((report, line))
            } else {
                Err(Failure::Verification(report, line))
            }
        }
    }
}

fn cmd_goodpair(source: &Source, a: usize, b: usize) -> Outcome {
    let g = source.graph()?;
    let v = is_good_pair(&g, a, b)?;
    let line =
        format!("pair ({a}, {b}) is {}, auxiliary mm-width {}", if v.good { "good" } else { "bad" }, v.aux_width);
    let report = json!({ "command": "goodpair", "input": describe(&g), "a": a, "b": b, "results": v });
    Ok((report, line))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::NotFound(_) | Error::Parse { .. } => 2,
        Error::Unsupported(_) => 3,
        Error::Budget { .. } => 4,
        Error::InvariantViolation(_) => 5,
    }
}

fn emit(mut report: Value, started: Instant) {
    report["timing_ms"] = json!(started.elapsed().as_millis() as u64);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        pool = pool.num_threads(t.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let started = Instant::now();
    let outcome = pool.install(|| match &cli.command {
        Command::Width { source, which } => cmd_width(source, *which),
        Command::Tangle { source, cert, order } => cmd_tangle(source, cert, *order),
        Command::Minor { host, pattern } => cmd_minor(host, pattern),
        Command::Obstructions { action } => cmd_obstructions(action),
        Command::Goodpair { source, a, b } => cmd_goodpair(source, *a, *b),
    });
    match outcome {
        Ok((report, line)) => {
            emit(report, started);
            eprintln!("{line}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(report, line)) => {
            emit(report, started);
            eprintln!("{line}");
            ExitCode::from(5)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
