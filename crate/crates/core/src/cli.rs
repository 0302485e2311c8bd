//! Command-line driver. All commands funnel into a [`Report`] with verdict
//! accept/reject/unknown; `--json` prints it as a single JSON object.
//! Exit codes: 0 accept/Yes, 1 reject/No, 2 unknown, 3 usage or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

use crate::eval::{eval, EvalOutcome};
use crate::frontend::{
    parse_derivation_named, parse_expr_named, parse_lf_context, parse_lf_term_named,
    parse_lf_type, parse_sequent_at, parse_signature, print_expr, print_lf_type,
    resolve_constants, Diagnostic, ParseError, Report, SourceSpan,
};
use crate::lf::{self, LfContext, Signature};
use crate::oracle::{sem_ver, OracleConfig, UnknownReason, Verdict};
use crate::rules::check_derivation;

const DEFAULT_FUEL: u64 = 10_000;

#[derive(Parser)]
#[command(name = "ttcheck", version, about = "Dual-kernel checker for a small type theory")]
struct Cli {
    /// Emit the result as a single JSON report object.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a closed term to canonical form.
    Eval {
        file: PathBuf,
        /// Beta-contraction budget.
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
    },
    /// Validate a derivation tree against the rule catalog.
    Check { file: PathBuf },
    /// Decide a sequent semantically on the finitary fragment.
    Sem {
        file: PathBuf,
        /// Beta-contraction budget per evaluation.
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
        /// Bound on verification-class counts.
        #[arg(long, default_value_t = 256)]
        max_classes: u64,
    },
    /// Proof-term kernel commands.
    #[command(subcommand)]
    Lf(LfCmd),
    /// Erase a proof term, then check the erasure semantically.
    Bridge {
        file: PathBuf,
        /// Kernel type to check at, e.g. `(Top) Top`.
        #[arg(long = "type")]
        ty: String,
    },
}

#[derive(Subcommand)]
enum LfCmd {
    /// Check a proof term against a type.
    Check {
        file: PathBuf,
        /// Type to check against.
        #[arg(long = "type")]
        ty: String,
        /// Signature file of `atom` and `const` declarations.
        #[arg(long)]
        sig: Option<PathBuf>,
        /// Context, e.g. `x : Top, y : (Top) Bot`.
        #[arg(long)]
        ctx: Option<String>,
    },
    /// Erase a proof term to a computational term.
    Erase { file: PathBuf },
}

/// A failure outside the accept/reject/unknown verdicts: bad usage or
/// unparseable input. Exit code 3.
struct Usage(Diagnostic);

impl Usage {
    fn from_parse(e: ParseError) -> Usage {
        Usage(Diagnostic {
            span: e.span,
            message: e.message,
        })
    }

    fn plain(file: &str, message: impl Into<String>) -> Usage {
        Usage(Diagnostic {
            span: SourceSpan::point(file, 1, 1),
            message: message.into(),
        })
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let _ = write!(out, "{rendered}");
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
        }
    };
    let json = cli.json;
    match dispatch(cli.cmd) {
        Ok(report) => {
            if json {
                let _ = writeln!(out, "{}", report.to_json());
            } else {
                render_human(&report, out);
            }
            report.exit_code()
        }
        Err(Usage(diag)) => {
            if json {
                let report = Report::unknown(vec![diag], serde_json::Value::Null);
                let _ = writeln!(out, "{}", report.to_json());
            } else {
                let _ = writeln!(
                    out,
                    "error: {}:{}:{}: {}",
                    diag.span.file, diag.span.line_start, diag.span.col_start, diag.message
                );
            }
            3
        }
    }
}

fn render_human(report: &Report, out: &mut dyn Write) {
    for d in &report.diagnostics {
        let _ = writeln!(
            out,
            "{}:{}:{}: {}",
            d.span.file, d.span.line_start, d.span.col_start, d.message
        );
    }
    if let Some(line) = report.data.get("print").and_then(|v| v.as_str()) {
        let _ = writeln!(out, "{line}");
    }
}

fn read_input(path: &Path) -> Result<(String, String), Usage> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Usage::plain(&name, format!("cannot read `{name}`: {e}")))?;
    Ok((name, text))
}

fn dispatch(cmd: Cmd) -> Result<Report, Usage> {
    match cmd {
        Cmd::Eval { file, fuel } => cmd_eval(&file, fuel),
        Cmd::Check { file } => cmd_check(&file),
        Cmd::Sem {
            file,
            fuel,
            max_classes,
        } => cmd_sem(&file, fuel, max_classes),
        Cmd::Lf(LfCmd::Check { file, ty, sig, ctx }) => cmd_lf_check(&file, &ty, sig, ctx),
        Cmd::Lf(LfCmd::Erase { file }) => cmd_lf_erase(&file),
        Cmd::Bridge { file, ty } => cmd_bridge(&file, &ty),
    }
}

fn diag(file: &str, message: impl Into<String>) -> Diagnostic {
    Diagnostic {
        span: SourceSpan::point(file, 1, 1),
        message: message.into(),
    }
}

fn cmd_eval(file: &Path, fuel: u64) -> Result<Report, Usage> {
    let (name, text) = read_input(file)?;
    let e = parse_expr_named(text.trim_end(), &name).map_err(Usage::from_parse)?;
    Ok(match eval(&e, fuel) {
        Ok(EvalOutcome::Value(v)) => {
            let printed = print_expr(&v);
            Report::accept(json!({ "outcome": "value", "print": printed }))
        }
        Ok(EvalOutcome::Stuck(s)) => {
            let printed = print_expr(&s);
            Report::reject(
                vec![diag(&name, format!("stuck at `{printed}`"))],
                json!({ "outcome": "stuck", "print": format!("STUCK {printed}") }),
            )
        }
        Ok(EvalOutcome::OutOfFuel) => Report::unknown(
            vec![diag(&name, format!("no canonical form within {fuel} beta steps"))],
            json!({ "outcome": "fuel", "print": "FUEL" }),
        ),
        Err(err) => Report::reject(
            vec![diag(&name, err.to_string())],
            json!({ "outcome": "open" }),
        ),
    })
}

fn cmd_check(file: &Path) -> Result<Report, Usage> {
    let (name, text) = read_input(file)?;
    let d = parse_derivation_named(&text, &name).map_err(Usage::from_parse)?;
    Ok(match check_derivation(&d) {
        Ok(()) => Report::accept(json!({ "print": "accepted" })),
        Err(r) => Report::reject(
            vec![diag(&name, r.to_string())],
            json!({ "path": r.path }),
        ),
    })
}

fn verdict_report(v: Verdict, name: &str, data: serde_json::Value) -> Report {
    match v {
        Verdict::Yes => Report::accept(data),
        Verdict::No(msg) => Report::reject(vec![diag(name, msg)], data),
        Verdict::Unknown(reason) => {
            let why = match reason {
                UnknownReason::Fuel => "evaluation budget exhausted",
                UnknownReason::NonFinitary => "outside the finitary fragment",
            };
            Report::unknown(vec![diag(name, why)], data)
        }
    }
}

fn cmd_sem(file: &Path, fuel: u64, max_classes: u64) -> Result<Report, Usage> {
    let (name, text) = read_input(file)?;
    let s = parse_sequent_at(text.trim_end(), &name, 1, 1).map_err(Usage::from_parse)?;
    let cfg = OracleConfig { fuel, max_classes };
    let v = crate::oracle::sem_sequent(&s, &cfg);
    let data = match &v {
        Verdict::Yes => json!({ "print": "Yes" }),
        Verdict::No(_) => json!({ "print": "No" }),
        Verdict::Unknown(_) => json!({ "print": "Unknown" }),
    };
    Ok(verdict_report(v, &name, data))
}

fn load_signature(path: Option<PathBuf>) -> Result<Signature, Usage> {
    match path {
        None => Ok(Signature::new()),
        Some(p) => {
            let (name, text) = read_input(&p)?;
            parse_signature(&text, &name).map_err(Usage::from_parse)
        }
    }
}

fn cmd_lf_check(
    file: &Path,
    ty: &str,
    sig_path: Option<PathBuf>,
    ctx_text: Option<String>,
) -> Result<Report, Usage> {
    let (name, text) = read_input(file)?;
    let sig = load_signature(sig_path)?;
    let ty = parse_lf_type(ty).map_err(Usage::from_parse)?;
    let ctx = match ctx_text {
        None => LfContext::new(),
        Some(t) => parse_lf_context(&t, "<ctx>").map_err(Usage::from_parse)?,
    };
    let term = parse_lf_term_named(text.trim_end(), &name).map_err(Usage::from_parse)?;
    let term = resolve_constants(&term, &sig);
    if let Err(e) = lf::check_type(&sig, &ty) {
        return Ok(Report::reject(vec![diag(&name, e.to_string())], json!(null)));
    }
    for (_, t) in ctx.entries() {
        if let Err(e) = lf::check_type(&sig, t) {
            return Ok(Report::reject(vec![diag(&name, e.to_string())], json!(null)));
        }
    }
    Ok(match lf::check(&sig, &ctx, &term, &ty) {
        Ok(()) => Report::accept(json!({ "print": "accepted", "type": print_lf_type(&ty) })),
        Err(e) => Report::reject(vec![diag(&name, e.to_string())], json!(null)),
    })
}

fn cmd_lf_erase(file: &Path) -> Result<Report, Usage> {
    let (name, text) = read_input(file)?;
    let term = parse_lf_term_named(text.trim_end(), &name).map_err(Usage::from_parse)?;
    Ok(match lf::erase(&term) {
        Ok(e) => {
            let printed = print_expr(&e);
            Report::accept(json!({ "print": printed }))
        }
        Err(e) => Report::reject(vec![diag(&name, e.to_string())], json!(null)),
    })
}

fn cmd_bridge(file: &Path, ty: &str) -> Result<Report, Usage> {
    let (name, text) = read_input(file)?;
    let lf_ty = parse_lf_type(ty).map_err(Usage::from_parse)?;
    let term = parse_lf_term_named(text.trim_end(), &name).map_err(Usage::from_parse)?;
    if let Err(e) = lf::check(&Signature::new(), &LfContext::new(), &term, &lf_ty) {
        return Ok(Report::reject(vec![diag(&name, e.to_string())], json!(null)));
    }
    let erased = match lf::erase(&term) {
        Ok(e) => e,
        Err(e) => return Ok(Report::reject(vec![diag(&name, e.to_string())], json!(null))),
    };
    let comp_ty = match lf::to_computational_type(&lf_ty) {
        Ok(t) => t,
        Err(e) => return Ok(Report::reject(vec![diag(&name, e.to_string())], json!(null))),
    };
    let v = sem_ver(&erased, &comp_ty, &OracleConfig::default());
    let data = json!({
        "print": match &v {
            Verdict::Yes => "Yes",
            Verdict::No(_) => "No",
            Verdict::Unknown(_) => "Unknown",
        },
        "erased": print_expr(&erased),
        "type": print_expr(&comp_ty),
    });
    Ok(verdict_report(v, &name, data))
}
