//! Structural comparison of two certificates, ignoring timings.

use qautcert::arith::{Complex64, Cyclotomic, Field};
use serde_json::Value;
use thiserror::Error;

use crate::certificate::strip_timings;

#[derive(Debug, Error, PartialEq)]
pub enum DiffError {
    #[error("tool versions differ: {0} vs {1}")]
    VersionMismatch(String, String),
    #[error("not a certificate: {0}")]
    Malformed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaKind {
    /// A `*residual*` field.
    Residual,
    /// A field naming the backend or its algorithm (`backend`, `method`).
    Backend,
    Value,
}

/// One differing leaf, addressed by a JSON-pointer-like path.
#[derive(Clone, Debug, PartialEq)]
pub struct Delta {
    pub path: String,
    pub left: String,
    pub right: String,
}

impl Delta {
    pub fn kind(&self) -> DeltaKind {
        match self.path.rsplit('/').next().unwrap_or("") {
            k if k.contains("residual") => DeltaKind::Residual,
            "backend" | "method" => DeltaKind::Backend,
            _ => DeltaKind::Value,
        }
    }

    pub fn is_residual(&self) -> bool {
        self.kind() == DeltaKind::Residual
    }
}

impl std::fmt::Display for Delta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self.kind() {
            DeltaKind::Residual => "[residual] ",
            DeltaKind::Backend => "[backend] ",
            DeltaKind::Value => "",
        };
        write!(f, "{tag}{}: {} -> {}", self.path, self.left, self.right)
    }
}

/// Scalar literals from either backend (`1/2`, `z4[0,1]`, `(5e-1,0e0)`).
fn scalar(s: &str) -> Option<Complex64> {
    <Cyclotomic as Field>::parse_text(s)
        .map(|c| c.to_c64())
        .or_else(|| <Complex64 as Field>::parse_text(s))
}

fn version(v: &Value) -> Result<String, DiffError> {
    v.get("tool_version")
        .and_then(Value::as_str)
        .map(str::to_string)
        .ok_or_else(|| DiffError::Malformed("missing tool_version".into()))
}

/// Numbers, and scalar literals of either backend, within `numeric_tol`
/// (relative to the larger magnitude, absolute below 1) count as equal,
/// except in residual fields, where any change is reported.
pub fn diff(a: &Value, b: &Value, numeric_tol: f64) -> Result<Vec<Delta>, DiffError> {
    let (va, vb) = (version(a)?, version(b)?);
    if va != vb {
        return Err(DiffError::VersionMismatch(va, vb));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    strip_timings(&mut a);
    strip_timings(&mut b);
    let mut out = Vec::new();
    walk(&a, &b, String::new(), numeric_tol, &mut out);
    Ok(out)
}

fn leaf(v: Option<&Value>) -> String {
    v.map_or_else(|| "(absent)".to_string(), Value::to_string)
}

fn walk(a: &Value, b: &Value, path: String, tol: f64, out: &mut Vec<Delta>) {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            let mut keys: Vec<&String> = x.keys().chain(y.keys()).collect();
            keys.sort();
            keys.dedup();
            for k in keys {
                let p = format!("{path}/{k}");
                match (x.get(k), y.get(k)) {
                    (Some(l), Some(r)) => walk(l, r, p, tol, out),
                    (l, r) => out.push(Delta {
                        path: p,
                        left: leaf(l),
                        right: leaf(r),
                    }),
                }
            }
        }
        (Value::Array(x), Value::Array(y)) if x.len() == y.len() => {
            for (i, (l, r)) in x.iter().zip(y).enumerate() {
                walk(l, r, format!("{path}/{i}"), tol, out);
            }
        }
        (Value::Number(x), Value::Number(y)) => {
            let (p, q) = (
                x.as_f64().unwrap_or(f64::NAN),
                y.as_f64().unwrap_or(f64::NAN),
            );
            let residual = path
                .rsplit('/')
                .next()
                .is_some_and(|k| k.contains("residual"));
            let close = (p - q).abs() <= tol * p.abs().max(q.abs()).max(1.0);
            if x != y && (residual || !close) {
                out.push(Delta {
                    path,
                    left: a.to_string(),
                    right: b.to_string(),
                });
            }
        }
        (Value::String(x), Value::String(y)) if x != y => {
            let close = match (scalar(x), scalar(y)) {
                (Some(p), Some(q)) => (p - q).norm() <= tol * p.norm().max(q.norm()).max(1.0),
                _ => false,
            };
            if !close {
                out.push(Delta {
                    path,
                    left: a.to_string(),
                    right: b.to_string(),
                });
            }
        }
        _ if a != b => out.push(Delta {
            path,
            left: a.to_string(),
            right: b.to_string(),
        }),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn cert(res: f64, c: f64) -> Value {
        json!({
            "tool_version": "0.1.0",
            "suites": { "haar": { "worst_residual": res, "details": { "constant": c } } },
            "timings": { "total_ms": res * 7.0 }
        })
    }

    #[test]
    fn identical_is_empty() {
        assert!(diff(&cert(0.0, 0.2), &cert(0.0, 0.2), 1e-9)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn residuals_always_show_values_within_tolerance_do_not() {
        let d = diff(&cert(0.0, 0.2), &cert(1e-17, 0.2 + 1e-17), 1e-9).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d[0].is_residual());
        assert_eq!(d[0].path, "/suites/haar/worst_residual");
        let d = diff(&cert(0.0, 0.2), &cert(0.0, 0.4), 1e-9).unwrap();
        assert_eq!(
            d[0].to_string(),
            "/suites/haar/details/constant: 0.2 -> 0.4"
        );
    }

    #[test]
    fn scalar_literals_compare_across_backends() {
        let a = json!({ "tool_version": "0", "e": ["1/2", "z4[0,1]", "0"], "backend": "exact" });
        let b = json!({ "tool_version": "0", "e": ["(5e-1,0e0)", "(0e0,1e0)", "(0e0,1e-3)"], "backend": "float" });
        let d = diff(&a, &b, 1e-9).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d[0].kind(), DeltaKind::Backend);
        assert_eq!(d[1].path, "/e/2");
        assert_eq!(d[1].kind(), DeltaKind::Value);
    }

    #[test]
    fn version_mismatch() {
        let mut b = cert(0.0, 0.2);
        b["tool_version"] = json!("9.9.9");
        assert!(matches!(
            diff(&cert(0.0, 0.2), &b, 1e-9),
            Err(DiffError::VersionMismatch(_, _))
        ));
        assert!(matches!(
            diff(&json!({}), &b, 1e-9),
            Err(DiffError::Malformed(_))
        ));
    }
}
