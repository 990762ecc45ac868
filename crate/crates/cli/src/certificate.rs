//! Certificate assembly. Everything except the `timings` section is a pure
//! function of the configuration.

use std::collections::BTreeMap;
use std::time::Instant;

use qautcert::arith::{Backend, Complex64, Cyclotomic, Tol};
use qautcert::cocycle::{BASE_POINT, IDENTIFICATION};
use qautcert::qaut::LAYOUT;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::{Suite, SuiteConfig};
use crate::suites::{run_suite, SuiteOutcome};

pub const SCHEMA: &str = "qautcert-certificate/1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ConfigEcho {
    pub partition: Vec<usize>,
    pub backend: Backend,
    pub tolerance: f64,
    pub seed: u64,
    pub suites: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timings {
    pub total_ms: f64,
    pub suites_ms: BTreeMap<String, f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub config: ConfigEcho,
    pub conventions: BTreeMap<&'static str, String>,
    pub suites: BTreeMap<String, SuiteOutcome>,
    pub passed: bool,
    pub timings: Timings,
}

pub fn conventions() -> BTreeMap<&'static str, String> {
    BTreeMap::from([
        ("pairing", IDENTIFICATION.to_string()),
        ("square_root_branch", BASE_POINT.to_string()),
        ("layout", LAYOUT.to_string()),
        (
            "weyl",
            "X = diag(ω^j), Z|j> = |j+1>, T_ij = X^i Z^j, XZ = ωZX".to_string(),
        ),
        (
            "beta_table",
            "derived: β1 x+1, β2 y−1 (s = t); β3 v+1, β4 w−1 (r = t)".to_string(),
        ),
    ])
}

fn ms(t: Instant) -> f64 {
    // whole microseconds keep the JSON short
    (t.elapsed().as_micros() as f64) / 1000.0
}

fn run_one(suite: Suite, cfg: &SuiteConfig) -> (SuiteOutcome, f64) {
    let start = Instant::now();
    let tol = Tol(cfg.tol);
    let out = match cfg.backend {
        Backend::Exact => run_suite::<Cyclotomic>(suite, &cfg.partition, tol, cfg.seed),
        Backend::Float => run_suite::<Complex64>(suite, &cfg.partition, tol, cfg.seed),
    };
    (out, ms(start))
}

/// Runs the selected suites on up to `cfg.workers` threads and assembles the
/// certificate in registry order.
pub fn run(cfg: &SuiteConfig) -> Certificate {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .expect("thread pool");
    let results: Vec<(Suite, (SuiteOutcome, f64))> = pool.install(|| {
        cfg.suites
            .par_iter()
            .map(|&s| (s, run_one(s, cfg)))
            .collect()
    });
    let mut suites = BTreeMap::new();
    let mut suites_ms = BTreeMap::new();
    for (s, (out, t)) in results {
        suites_ms.insert(s.name().to_string(), t);
        suites.insert(s.name().to_string(), out);
    }
    let passed = suites.values().all(|o| o.passed);
    Certificate {
        schema: SCHEMA,
        tool_version: TOOL_VERSION,
        config: ConfigEcho {
            partition: cfg.partition.sizes().to_vec(),
            backend: cfg.backend,
            tolerance: cfg.tol,
            seed: cfg.seed,
            suites: cfg.suites.iter().map(|s| s.name().to_string()).collect(),
        },
        conventions: conventions(),
        suites,
        passed,
        timings: Timings {
            total_ms: ms(start),
            suites_ms,
        },
    }
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// The certificate without its timing section, as compared by the
    /// determinism contract.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("certificate serializes");
        strip_timings(&mut v);
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}

pub fn strip_timings(v: &mut Value) {
    if let Value::Object(m) = v {
        m.remove("timings");
    }
}
