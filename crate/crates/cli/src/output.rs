//! Rendering: aligned human tables, label-annotated CSV, and the machine
//! JSON envelope (deterministic body, timing kept outside of it).

use std::fmt::Write as _;

use symchar_core::linalg::IntMatrix;
use symchar_core::partitions::Partition;
use symchar_core::report::{CheckStatus, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
    Csv,
}

pub fn labels_to_strings(labels: &[Partition]) -> Vec<String> {
    labels
        .iter()
        .map(|l| {
            let s = l.to_string();
            if s.is_empty() {
                "()".to_string()
            } else {
                s
            }
        })
        .collect()
}

pub fn matrix_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|v| v.to_string()).collect())
        .collect()
}

/// Aligned table with row labels down the first column.
pub fn render_matrix(row_labels: &[String], col_labels: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = col_labels.iter().map(|l| l.len()).collect();
    for row in rows {
        for (c, v) in row.iter().enumerate() {
            widths[c] = widths[c].max(v.len());
        }
    }
    let label_width = row_labels.iter().map(|l| l.len()).max().unwrap_or(0);
    let mut out = String::new();
    let _ = write!(out, "{:label_width$}", "");
    for (c, l) in col_labels.iter().enumerate() {
        let _ = write!(out, "  {:>width$}", l, width = widths[c]);
    }
    out.push('\n');
    for (r, row) in rows.iter().enumerate() {
        let _ = write!(out, "{:label_width$}", row_labels[r]);
        for (c, v) in row.iter().enumerate() {
            let _ = write!(out, "  {:>width$}", v, width = widths[c]);
        }
        out.push('\n');
    }
    out
}

pub fn render_csv(row_labels: &[String], col_labels: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let quote = |s: &str| {
        if s.contains(',') || s.contains('"') {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    };
    let _ = writeln!(
        out,
        ",{}",
        col_labels.iter().map(|l| quote(l)).collect::<Vec<_>>().join(",")
    );
    for (r, row) in rows.iter().enumerate() {
        let _ = writeln!(out, "{},{}", quote(&row_labels[r]), row.join(","));
    }
    out
}

pub fn render_report_human(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", report.subject);
    for check in &report.checks {
        let status = match check.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "n/a ",
        };
        let kind = match check.kind {
            symchar_core::report::CheckKind::Proved => "",
            symchar_core::report::CheckKind::Observed => " (observed)",
        };
        let _ = write!(out, "  [{status}] {}{kind}", check.name);
        if !check.witnesses.is_empty() {
            let ws: Vec<String> = check
                .witnesses
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            let _ = write!(out, "  ({})", ws.join(", "));
        }
        out.push('\n');
    }
    for (k, v) in &report.notes {
        let _ = writeln!(out, "  note: {k} = {v}");
    }
    let _ = writeln!(
        out,
        "  result: {}",
        if report.passed() { "PASS" } else { "FAIL" }
    );
    out
}

/// The machine document: `{"elapsed_ms": ..., <key>: <body>}` with a
/// deterministic body (serde_json sorts object keys).
pub fn machine_envelope(key: &str, body: serde_json::Value, elapsed_ms: u128) -> String {
    let doc = serde_json::json!({
        "elapsed_ms": elapsed_ms,
        key: body,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}
