use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use imcg_core::transfer::VERIFY_TOL;
use imcg_core::{
    check_mst, check_pst, eigenvalues_closed_form, Complex64, GraphSpec, PairWitness, RationalTime,
    TransferVerdict,
};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::export::{export_graph, ExportFormat};
use crate::format::{parse_spec, spec_value};
use crate::harness::{crosscheck, search, Mode, SweepReport, DEFAULT_BUDGET};

pub const SCHEMA: u64 = 1;

#[derive(Parser)]
#[command(
    name = "imcg",
    version,
    about = "Spectra and state transfer on integral mixed circulant graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the eigenvalues of a spec.
    Spectrum {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Decide perfect state transfer between a pair (default `0, n/2`).
    CheckPst {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<u64>>,
        #[arg(long, default_value_t = VERIFY_TOL)]
        tol: f64,
    },
    /// Decide transfer among `0, n/4, n/2, 3n/4`.
    CheckMst {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = VERIFY_TOL)]
        tol: f64,
    },
    /// List every spec of order `n` accepted by the classifier.
    Search {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Sweep all specs up to `n-max` through every decision route.
    Crosscheck {
        #[arg(long)]
        n_max: u64,
        #[arg(long)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, default_value_t = VERIFY_TOL)]
        tol: f64,
    },
    /// Render a spec as DOT or canonical JSON.
    Export {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        format: ExportFormat,
    },
}

/// Runs one command line; returns the process exit code (0 ok, 1 classifier
/// mismatch or failed verification, 2 input error).
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let code = if e.kind() == "verification_failed" {
                1
            } else {
                2
            };
            let body = json!({
                "schema": SCHEMA,
                "error": { "kind": e.kind(), "message": e.to_string() },
            });
            let _ = writeln!(err, "{body}");
            code
        }
    }
}

fn load(path: &Path) -> Result<GraphSpec> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_spec(&text)
}

fn emit(out: &mut dyn Write, value: Value) -> Result<()> {
    writeln!(out, "{value}").map_err(|source| Error::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Spectrum { spec } => {
            let spec = load(&spec)?;
            let gamma = eigenvalues_closed_form(&spec).into_values();
            let _ = writeln!(err, "spectrum of order {}: {gamma:?}", spec.n());
            emit(
                out,
                json!({ "schema": SCHEMA, "n": spec.n(), "gamma": gamma }),
            )?;
        }
        Command::CheckPst { spec, pair, tol } => {
            let spec = load(&spec)?;
            let (a, b) = match pair.as_deref() {
                Some(&[a, b]) => (a, b),
                _ => (0, spec.n() / 2),
            };
            let verdict = check_pst(&spec, a, b, tol)?;
            let _ = writeln!(err, "{}", summary(&verdict));
            emit(out, verdict_value(&verdict))?;
        }
        Command::CheckMst { spec, tol } => {
            let spec = load(&spec)?;
            let verdict = check_mst(&spec, tol)?;
            let _ = writeln!(err, "{}", summary(&verdict));
            emit(out, verdict_value(&verdict))?;
        }
        Command::Search { n, mode, budget } => {
            let found = search(n, mode, budget)?;
            let _ = writeln!(
                err,
                "{} specs of order {n} pass the {mode} classifier",
                found.len()
            );
            let specs: Vec<Value> = found.iter().map(spec_value).collect();
            emit(
                out,
                json!({ "schema": SCHEMA, "n": n, "mode": mode.tag(), "count": specs.len(), "specs": specs }),
            )?;
        }
        Command::Crosscheck {
            n_max,
            mode,
            budget,
            tol,
        } => {
            let report = crosscheck(n_max, mode, budget, tol)?;
            let _ = writeln!(
                err,
                "{} specs over n in {:?}: {} mismatches, {} pst, {} mst, {:.2}s",
                report.specs_checked,
                report.n_range,
                report.mismatches.len(),
                report.pst_positive,
                report.mst_positive,
                report.wall_time
            );
            emit(out, report_value(&report))?;
            return Ok(if report.mismatches.is_empty() { 0 } else { 1 });
        }
        Command::Export { spec, format } => {
            let spec = load(&spec)?;
            let text = export_graph(&spec, format);
            write!(
                out,
                "{}{}",
                text,
                if text.ends_with('\n') { "" } else { "\n" }
            )
            .map_err(|source| Error::Io {
                path: "<stdout>".into(),
                source,
            })?;
        }
    }
    Ok(0)
}

/// Rounded to 12 decimal places so output is stable across platforms.
fn round12(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn time_value(t: Option<RationalTime>) -> Value {
    t.map_or(Value::Null, |t| json!({ "p": t.p(), "q": t.q() }))
}

fn phase_value(z: Option<Complex64>) -> Value {
    z.map_or(
        Value::Null,
        |z| json!({ "re": round12(z.re), "im": round12(z.im) }),
    )
}

fn witness_value(w: &PairWitness) -> Value {
    json!({
        "pair": [w.from, w.to],
        "t_prime": time_value(Some(w.time)),
        "phase": phase_value(Some(w.phase)),
        "residual": w.residual,
    })
}

pub fn verdict_value(v: &TransferVerdict) -> Value {
    json!({
        "schema": SCHEMA,
        "kind": v.kind.tag(),
        "pair": v.vertices.iter().take(2).collect::<Vec<_>>(),
        "vertices": v.vertices,
        "m": v.m,
        "case": v.case.map(|c| c.tag()),
        "t_prime": time_value(v.witness_time),
        "phase": phase_value(v.phase),
        "residual": v.residual,
        "witnesses": v.witnesses.iter().map(witness_value).collect::<Vec<_>>(),
    })
}

/// The report without its wall time, which goes to the summary only.
pub fn report_value(r: &SweepReport) -> Value {
    let mismatches: Vec<Value> = r
        .mismatches
        .iter()
        .map(|m| {
            json!({
                "spec": spec_value(&m.spec),
                "classifier": m.classifier,
                "valuation": m.valuation,
                "numeric": m.numeric,
                "solver": m.solver,
            })
        })
        .collect();
    let mut value = json!({
        "schema": SCHEMA,
        "mode": r.mode.tag(),
        "n_range": r.n_range,
        "specs_checked": r.specs_checked,
        "pst_positive": r.pst_positive,
        "mst_positive": r.mst_positive,
        "mismatch_count": mismatches.len(),
        "mismatches": mismatches,
    });
    if let Some(k) = r.amended_mismatches {
        value["amended_mismatches"] = json!(k);
    }
    value
}

fn summary(v: &TransferVerdict) -> String {
    match (v.witness_time, v.residual) {
        (Some(t), Some(res)) => {
            format!(
                "{} on {:?} at t/2pi = {t} (residual {res:.1e})",
                v.kind.tag(),
                v.vertices
            )
        }
        _ => format!("no transfer on {:?}", v.vertices),
    }
}
