//! Command-line interface: catalog listing and verification, braid-word
//! evaluation as exact operators, relation suites, and the symbolic
//! dual-route oracle. Exit codes: 0 = pass, 1 = a verification failed,
//! 2 = usage or lookup error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use weldbraid::braid_engine::{
    check_forbidden_reverse, eval_colored, relations_pass, underlying_permutation,
    verify_relations, BraidWord, ExactOperator,
};
use weldbraid::catalog::{Catalog, KindReport};
use weldbraid::representation::{export_json, export_text, Representation};
use weldbraid::topology_oracle::{run_random_suite, run_single_generator_sweep};

/// Default RNG seed of the oracle subcommand, fixed for reproducible runs.
const DEFAULT_SEED: u64 = 17;

/// Default search bound for operator orders reported by `eval`.
const DEFAULT_ORDER_BOUND: u64 = 4096;

#[derive(Parser)]
#[command(name = "weldbraid", version, about = "Exact welded/virtual braid operators over finite groupoid algebras")]
struct Cli {
    /// Directory of JSON catalog descriptors loaded on top of the built-ins.
    #[arg(long, global = true, env = "CATALOG_DIR", value_name = "DIR")]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every catalog entry as `kind name` lines.
    List {
        /// Restrict the listing to one kind (group, gr-group, crossed-module,
        /// birack, bikoid, groupoid).
        #[arg(long)]
        kind: Option<String>,
    },
    /// Run the full verification suite of a named catalog entry.
    Verify {
        /// Catalog name to verify.
        target: String,
        /// Write the machine-readable reports to a JSON file.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Evaluate a braid word as an exact operator and report its shape,
    /// strand permutation and multiplicative order.
    Eval {
        /// Catalog name of the bikoid to evaluate over.
        #[arg(long)]
        bikoid: String,
        /// Representation spec: right-regular | object-regular, optionally
        /// qualified as e.g. right-regular:aut:S3.
        #[arg(long, default_value = "right-regular")]
        rep: String,
        /// Number of strands.
        #[arg(long)]
        n: usize,
        /// The braid word, e.g. "S+1 S-2 V1" (an empty word is allowed).
        #[arg(long)]
        word: String,
        /// Comma-separated per-strand representation specs (overrides --rep).
        #[arg(long)]
        colors: Option<String>,
        /// Export the operator matrix (.json gets sparse JSON, anything else
        /// text triplets).
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Cap on the evaluation dimension.
        #[arg(long)]
        max_dim: Option<usize>,
        /// Search bound for the operator order.
        #[arg(long, default_value_t = DEFAULT_ORDER_BOUND)]
        order_bound: u64,
    },
    /// Check the braid, virtual and welded relations under evaluation.
    Relations {
        /// Catalog name of the bikoid.
        #[arg(long)]
        bikoid: String,
        /// Representation spec to evaluate in.
        #[arg(long, default_value = "object-regular")]
        rep: String,
        /// Number of strands.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Also probe the forbidden under-commutation (informational; it is
        /// expected to fail on essential bikoids).
        #[arg(long)]
        forbidden_reverse: bool,
        /// Write the reports to a JSON file.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Compare evaluated actions against the symbolic dual route on random
    /// words, plus an optional exhaustive single-generator sweep.
    Oracle {
        /// Catalog name of the abelian gr-group to compare over.
        #[arg(long, default_value = "gr:Z2-Z3")]
        gr: String,
        /// Number of random trials.
        #[arg(long, default_value_t = 200)]
        trials: u64,
        /// Maximum word length drawn.
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Maximum strand count drawn.
        #[arg(long, default_value_t = 3)]
        max_strands: usize,
        /// RNG seed.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Also run the exhaustive single-generator sweep.
        #[arg(long)]
        sweep: bool,
        /// Write the outcome to a JSON file.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut catalog = Catalog::builtin();
    if let Some(dir) = &cli.catalog {
        let added = catalog
            .load_dir(dir)
            .with_context(|| format!("loading catalog directory {}", dir.display()))?;
        eprintln!("loaded {added} descriptor(s) from {}", dir.display());
    }
    match cli.command {
        Command::List { kind } => cmd_list(&catalog, kind.as_deref()),
        Command::Verify { target, out } => cmd_verify(&catalog, &target, out.as_deref()),
        Command::Eval { bikoid, rep, n, word, colors, out, max_dim, order_bound } => cmd_eval(
            &catalog,
            &bikoid,
            &rep,
            n,
            &word,
            colors.as_deref(),
            out.as_deref(),
            max_dim,
            order_bound,
        ),
        Command::Relations { bikoid, rep, n, forbidden_reverse, out } => {
            cmd_relations(&catalog, &bikoid, &rep, n, forbidden_reverse, out.as_deref())
        }
        Command::Oracle { gr, trials, max_len, max_strands, seed, sweep, out } => {
            cmd_oracle(&catalog, &gr, trials, max_len, max_strands, seed, sweep, out.as_deref())
        }
    }
}

fn cmd_list(catalog: &Catalog, kind: Option<&str>) -> Result<ExitCode> {
    for (k, name) in catalog.entries() {
        if kind.map_or(true, |want| want == k) {
            println!("{k} {name}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(catalog: &Catalog, target: &str, out: Option<&Path>) -> Result<ExitCode> {
    let reports = catalog.verify_target(target)?;
    for report in &reports {
        print_report(report);
    }
    if let Some(path) = out {
        write_json(path, &serde_json::to_value(&reports)?)?;
    }
    let all_pass = reports.iter().all(|r| r.passed);
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn print_report(report: &KindReport) {
    println!(
        "{} `{}`: {}",
        report.kind,
        report.name,
        if report.passed { "PASS" } else { "FAIL" }
    );
    for check in &report.checks {
        let tag = match check.status.as_str() {
            "pass" => "pass",
            "fail" => "FAIL",
            _ => "info",
        };
        if check.detail.is_empty() {
            println!("  [{tag}] {}", check.check);
        } else {
            println!("  [{tag}] {}: {}", check.check, check.detail);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_eval(
    catalog: &Catalog,
    bikoid: &str,
    rep: &str,
    n: usize,
    word_text: &str,
    colors: Option<&str>,
    out: Option<&Path>,
    max_dim: Option<usize>,
    order_bound: u64,
) -> Result<ExitCode> {
    let cb = catalog
        .bikoid(bikoid)
        .ok_or_else(|| anyhow!("unknown bikoid `{bikoid}`"))?;
    let word = BraidWord::parse(word_text, n).map_err(|e| anyhow!("word: {e}"))?;
    let specs: Vec<String> = match colors {
        Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
        None => vec![rep.to_string(); n],
    };
    if specs.len() != n {
        bail!("--colors lists {} specs for {} strands", specs.len(), n);
    }
    let reps: Vec<Representation> = specs
        .iter()
        .map(|s| catalog.representation(bikoid, s))
        .collect::<Result<_, _>>()?;
    let refs: Vec<&Representation> = reps.iter().collect();
    let ev = eval_colored(&cb.bikoid, &refs, &word, max_dim)
        .map_err(|v| anyhow!("evaluation: {v}"))?;

    println!("word: {word}");
    println!("strands: {n}");
    println!("strand permutation: {:?}", underlying_permutation(&word).images());
    println!("domain dims: {:?}", ev.domain_dims);
    println!("codomain dims: {:?}", ev.codomain_dims);
    let shape = match &ev.operator {
        ExactOperator::Permutation(p) => format!("permutation of dimension {}", p.len()),
        ExactOperator::Sparse(m) => {
            format!("sparse {}x{} with {} nonzeros", m.rows(), m.cols(), m.nnz())
        }
    };
    println!("operator: {shape}");
    match ev.operator.order(order_bound) {
        Ok(order) => println!("order: {order}"),
        Err(v) => println!("order: undefined ({v})"),
    }
    if let Some(path) = out {
        let matrix = ev.operator.to_sparse();
        let text = if path.extension().is_some_and(|e| e == "json") {
            export_json(&matrix)
        } else {
            export_text(&matrix)
        };
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        println!("exported: {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_relations(
    catalog: &Catalog,
    bikoid: &str,
    rep_spec: &str,
    n: usize,
    forbidden_reverse: bool,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let cb = catalog
        .bikoid(bikoid)
        .ok_or_else(|| anyhow!("unknown bikoid `{bikoid}`"))?;
    let rep = catalog.representation(bikoid, rep_spec)?;
    let reports = verify_relations(&cb.bikoid, &rep, n).map_err(|v| anyhow!("relations: {v}"))?;
    for r in &reports {
        if r.passed() {
            println!("[pass] {} (n={})", r.relation, r.n);
        } else {
            println!("[FAIL] {} (n={}): differs at {:?}", r.relation, r.n, r.witness);
        }
    }
    let probe = if forbidden_reverse {
        let probe = check_forbidden_reverse(&cb.bikoid, &rep)
            .map_err(|v| anyhow!("forbidden-reverse probe: {v}"))?;
        if probe.holds {
            println!("[info] forbidden under-commutation holds");
        } else {
            println!(
                "[info] forbidden under-commutation fails at {:?} (expected for essential bikoids)",
                probe.witness.clone().unwrap_or_default()
            );
        }
        Some(probe)
    } else {
        None
    };
    if let Some(path) = out {
        let mut value = serde_json::json!({
            "bikoid": bikoid,
            "representation": rep_spec,
            "n": n,
            "relations": serde_json::to_value(&reports)?,
        });
        if let Some(p) = &probe {
            value["forbidden_reverse"] = serde_json::to_value(p)?;
        }
        write_json(path, &value)?;
    }
    Ok(if relations_pass(&reports) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[allow(clippy::too_many_arguments)]
fn cmd_oracle(
    catalog: &Catalog,
    gr_name: &str,
    trials: u64,
    max_len: usize,
    max_strands: usize,
    seed: u64,
    sweep: bool,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let gr = catalog
        .gr(gr_name)
        .ok_or_else(|| anyhow!("unknown gr-group `{gr_name}`"))?;
    match run_random_suite(gr, trials, max_len, max_strands, seed) {
        Ok(outcome) => {
            println!(
                "oracle: {} random trials passed (max len {}, strands <= {}, seed {})",
                outcome.trials, outcome.max_len, outcome.max_strands, outcome.seed
            );
            let mut value = serde_json::json!({
                "gr": gr_name,
                "status": "pass",
                "random": serde_json::to_value(&outcome)?,
            });
            if sweep {
                match run_single_generator_sweep(gr) {
                    Ok(cases) => {
                        println!("oracle: single-generator sweep passed ({cases} cases)");
                        value["sweep_cases"] = serde_json::json!(cases);
                    }
                    Err(v) => {
                        println!("oracle: single-generator sweep FAILED: {v}");
                        value["status"] = serde_json::json!("fail");
                        value["sweep_failure"] = serde_json::json!(v.to_string());
                        if let Some(path) = out {
                            write_json(path, &value)?;
                        }
                        return Ok(ExitCode::from(1));
                    }
                }
            }
            if let Some(path) = out {
                write_json(path, &value)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(v) => {
            println!("oracle: FAILED: {v}");
            if let Some(path) = out {
                let value = serde_json::json!({
                    "gr": gr_name,
                    "status": "fail",
                    "failure": v.to_string(),
                });
                write_json(path, &value)?;
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn write_json(path: &Path, value: &serde_json::Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
