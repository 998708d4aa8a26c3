//! JSON output. Exact values are `"p/q"` strings; every exact value `x`
//! also gets an `x_f64` rendition with 17 significant digits.

use serde_json::{json, Map, Value};
use trivol_core::mixedvol::ZValueReport;
use trivol_core::scalar::{fmt_exact, fmt_f64, to_f64};
use trivol_core::{BoxDomain3, Scalar, VolumeReport};

pub const SCHEMA_VERSION: &str = "1";

pub fn exact(x: &Scalar) -> Value {
    Value::String(fmt_exact(x))
}

pub fn float(x: f64) -> Value {
    Value::String(fmt_f64(x))
}

/// Inserts `key` and `key_f64`.
pub fn put_exact(map: &mut Map<String, Value>, key: &str, x: &Scalar) {
    map.insert(key.to_string(), exact(x));
    map.insert(format!("{key}_f64"), float(to_f64(x)));
}

pub fn domain(d: &BoxDomain3) -> Value {
    let bounds: Vec<Value> = d
        .bounds()
        .iter()
        .map(|(lo, hi)| json!([fmt_exact(lo), fmt_exact(hi)]))
        .collect();
    let centers: Vec<Value> = (0..3).map(|i| exact(d.center(i))).collect();
    let half_lengths: Vec<Value> = (0..3).map(|i| exact(d.half_length(i))).collect();
    let ratios: Vec<Value> = d.ratios().iter().map(exact).collect();
    json!({
        "bounds": bounds,
        "centers": centers,
        "half_lengths": half_lengths,
        "ratios": ratios,
    })
}

/// Fields shared by every single-domain command.
pub fn base(command: &str, report: &VolumeReport) -> Map<String, Value> {
    let norm = &report.normalization;
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    m.insert(
        "input".into(),
        json!({
            "raw": domain(&report.raw),
            "canonical": domain(report.canonical.domain()),
        }),
    );
    m.insert(
        "normalization".into(),
        json!({
            "signs": norm.signs,
            "permutation": norm.permutation_one_based(),
            "display": norm.to_string(),
        }),
    );
    m.insert("case".into(), json!(report.case.id()));
    put_exact(&mut m, "volume", &report.closed_form);
    m
}

fn z_report(z: &ZValueReport) -> Value {
    let entries: Vec<Value> = z
        .entries
        .iter()
        .map(|e| {
            json!({
                "normal": e.normal,
                "value": fmt_exact(&e.value),
                "chosen_vertex": e.chosen_vertex,
                "predicted_vertex": e.predicted_vertex,
                "branch": e.branch,
            })
        })
        .collect();
    json!({
        "negated": z.negated,
        "sum": fmt_exact(&z.sum()),
        "entries": entries,
    })
}

pub fn breakdown(report: &VolumeReport) -> Value {
    let mut m = Map::new();
    put_exact(&mut m, "vol_q", &report.vol_q);
    put_exact(&mut m, "vol_r", &report.vol_r);
    put_exact(&mut m, "v_qqr", &report.v_qqr);
    put_exact(&mut m, "v_qrr", &report.v_qrr);
    put_exact(&mut m, "closed_form", &report.closed_form);
    put_exact(&mut m, "assembled", &report.assembled);
    let s = report.subcases;
    m.insert(
        "subcases".into(),
        json!({ "qqr": s.qqr, "qrr": s.qrr, "volq": s.volq }),
    );
    m.insert(
        "subcases_match_table".into(),
        json!(report.subcases_match_table()),
    );
    m.insert("indicator".into(), json!(report.indicator.value()));
    m.insert("z_qqr".into(), z_report(&report.z_qqr));
    m.insert("z_qrr".into(), z_report(&report.z_qrr));
    Value::Object(m)
}

pub fn render(value: &Value, compact: bool) -> String {
    let mut s = if compact {
        serde_json::to_string(value)
    } else {
        serde_json::to_string_pretty(value)
    }
    .expect("JSON values always serialize");
    s.push('\n');
    s
}
