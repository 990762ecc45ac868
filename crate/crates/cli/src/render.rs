//! Markdown report, a pure function of the certificate JSON.

use std::fmt::Write;

use serde_json::Value;

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn residual(v: &Value) -> String {
    v.as_f64().map_or_else(|| text(v), |x| format!("{x:.3e}"))
}

pub fn render_markdown(cert: &Value) -> String {
    let mut s = String::new();
    let cfg = &cert["config"];
    let verdict = if cert["passed"].as_bool() == Some(true) {
        "PASS"
    } else {
        "FAIL"
    };
    let partition = cfg["partition"]
        .as_array()
        .map(|p| p.iter().map(text).collect::<Vec<_>>().join(","))
        .unwrap_or_default();
    let _ = writeln!(s, "# qautcert certificate: ({partition}) {verdict}\n");
    let _ = writeln!(s, "| field | value |\n|---|---|");
    let _ = writeln!(s, "| schema | {} |", text(&cert["schema"]));
    let _ = writeln!(s, "| tool version | {} |", text(&cert["tool_version"]));
    for k in ["backend", "tolerance", "seed"] {
        let _ = writeln!(s, "| {k} | {} |", text(&cfg[k]));
    }

    let _ = writeln!(
        s,
        "\n## Suites\n\n| suite | result | worst residual | note |\n|---|---|---|---|"
    );
    if let Some(suites) = cert["suites"].as_object() {
        for (name, o) in suites {
            let ok = if o["passed"].as_bool() == Some(true) {
                "pass"
            } else {
                "FAIL"
            };
            let note = o.get("error").map(text).unwrap_or_default();
            let _ = writeln!(
                s,
                "| {name} | {ok} | {} | {note} |",
                residual(&o["worst_residual"])
            );
        }
        if let Some(pairs) = suites
            .get("haar")
            .and_then(|h| h["details"]["pairs"].as_array())
        {
            let _ = writeln!(s, "\n## Haar constants\n\n| (s,r) | constant | n_s/N | n_r/N | matches |\n|---|---|---|---|---|");
            for p in pairs {
                let _ = writeln!(
                    s,
                    "| ({},{}) | {} | {} | {} | {} |",
                    text(&p["s"]),
                    text(&p["r"]),
                    text(&p["constant"]),
                    text(&p["n_s_over_n"]),
                    text(&p["n_r_over_n"]),
                    text(&p["matches"])
                );
            }
        }
    }

    let _ = writeln!(s, "\n## Conventions\n");
    if let Some(conv) = cert["conventions"].as_object() {
        for (k, v) in conv {
            let _ = writeln!(s, "- **{k}**: `{}`", text(v));
        }
    }
    s
}
