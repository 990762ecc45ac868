//! `qautcert run | diff | render`.
//!
//! Exit codes: 0 every selected suite passed, 1 a suite failed (or `diff`
//! found deltas), 2 bad configuration or unreadable input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qautcert::arith::Backend;
use qautcert_cli::certificate::run;
use qautcert_cli::config::{parse_partition, parse_suites, ConfigError, SuiteConfig};
use qautcert_cli::diff::diff;
use qautcert_cli::render::render_markdown;
use serde_json::Value;

#[derive(Parser)]
#[command(
    name = "qautcert",
    version,
    about = "Finite certificates for quantum automorphism constructions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        }
    }
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, env = "QAUTCERT_PARTITION")]
    partition: String,
    #[arg(long, env = "QAUTCERT_BACKEND", value_enum, default_value = "exact")]
    backend: BackendArg,
    #[arg(long, env = "QAUTCERT_TOL", default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, env = "QAUTCERT_SEED", default_value_t = 42)]
    seed: u64,
    /// Comma-separated subset of ueb,twist,conj,tt,pvm,homs,shuffle,cov,haar, or `all`.
    #[arg(long, env = "QAUTCERT_SUITES", default_value = "all")]
    suites: String,
    /// Certificate path; stdout when absent.
    #[arg(long, env = "QAUTCERT_OUT")]
    out: Option<PathBuf>,
    /// Also write the Markdown report here.
    #[arg(long, env = "QAUTCERT_MARKDOWN")]
    markdown: Option<PathBuf>,
    #[arg(long, env = "QAUTCERT_WORKERS", default_value_t = 1)]
    workers: usize,
    /// Lift the N ≤ 16 (exact) / N ≤ 36 (float) guardrail.
    #[arg(long, env = "QAUTCERT_ALLOW_LARGE")]
    allow_large: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run suites on one partition and write a JSON certificate.
    Run(RunArgs),
    /// Compare two certificates, ignoring timings.
    Diff {
        a: PathBuf,
        b: PathBuf,
        /// Relative tolerance for non-residual numbers.
        #[arg(long, default_value_t = 1e-9)]
        numeric_tol: f64,
    },
    /// Render a certificate as Markdown.
    Render { cert: PathBuf },
}

fn config_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("qautcert: {e}");
    ExitCode::from(2)
}

fn read_json(p: &PathBuf) -> Result<Value, String> {
    let s = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
    serde_json::from_str(&s).map_err(|e| format!("{}: {e}", p.display()))
}

fn build_config(a: &RunArgs) -> Result<SuiteConfig, ConfigError> {
    let mut cfg = SuiteConfig::new(parse_partition(&a.partition)?, a.backend.into());
    cfg.tol = a.tol;
    cfg.seed = a.seed;
    cfg.suites = parse_suites(&a.suites)?;
    cfg.out = a.out.clone();
    cfg.workers = a.workers;
    cfg.allow_large = a.allow_large;
    cfg.validate()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.cmd {
        Cmd::Run(args) => {
            let cfg = match build_config(&args) {
                Ok(c) => c,
                Err(e) => return config_error(e),
            };
            let cert = run(&cfg);
            let json = cert.to_json();
            match &cfg.out {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, &json) {
                        return config_error(format!("{}: {e}", p.display()));
                    }
                }
                None => println!("{json}"),
            }
            if let Some(p) = &args.markdown {
                let v: Value = serde_json::from_str(&json).expect("own output parses");
                if let Err(e) = std::fs::write(p, render_markdown(&v)) {
                    return config_error(format!("{}: {e}", p.display()));
                }
            }
            for (name, o) in &cert.suites {
                eprintln!("{name:8} {}", if o.passed { "pass" } else { "FAIL" });
            }
            ExitCode::from(if cert.passed { 0 } else { 1 })
        }
        Cmd::Diff { a, b, numeric_tol } => {
            let (a, b) = match (read_json(&a), read_json(&b)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return config_error(e),
            };
            match diff(&a, &b, numeric_tol) {
                Ok(d) if d.is_empty() => {
                    println!("no differences");
                    ExitCode::SUCCESS
                }
                Ok(d) => {
                    for x in &d {
                        println!("{x}");
                    }
                    ExitCode::from(1)
                }
                Err(e) => config_error(e),
            }
        }
        Cmd::Render { cert } => match read_json(&cert) {
            Ok(v) => {
                print!("{}", render_markdown(&v));
                ExitCode::SUCCESS
            }
            Err(e) => config_error(e),
        },
    }
}
