//! `trivol sweep`: one CSV row per grid point or listed domain.
//!
//! Grid points are `c_i = r_i * l_i`. Rows report the ratios and
//! half-lengths after normalization, so the case columns can be read off the
//! ratio columns directly.

use serde_json::Value;
use trivol_core::formula::hull_volume_any;
use trivol_core::scalar::{fmt_exact, fmt_f64, parse_scalar, to_f64, Scalar};
use trivol_core::BoxDomain3;

use crate::args::SweepArgs;
use crate::{read_file, InputError};

pub const HEADER: [&str; 12] = [
    "r1",
    "r2",
    "r3",
    "l1",
    "l2",
    "l3",
    "case",
    "qqr_case",
    "qrr_case",
    "volq_case",
    "volume_rat",
    "volume_f64",
];

/// Upper limit on rows per sweep.
pub const MAX_ROWS: usize = 1_000_000;

/// Values of `start:stop:step` (inclusive of `stop` when it is on the grid),
/// or the single value `v`.
pub fn parse_range(spec: &str) -> Result<Vec<Scalar>, InputError> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [v] => Ok(vec![parse_scalar(v.trim())?]),
        [start, stop, step] => {
            let (start, stop, step) = (
                parse_scalar(start.trim())?,
                parse_scalar(stop.trim())?,
                parse_scalar(step.trim())?,
            );
            if step <= Scalar::from_integer(0.into()) {
                return Err(InputError(format!("range {spec:?}: step must be positive")));
            }
            if start > stop {
                return Err(InputError(format!(
                    "range {spec:?}: start must not exceed stop"
                )));
            }
            let mut out = Vec::new();
            let mut x = start;
            while x <= stop {
                if out.len() == MAX_ROWS {
                    return Err(InputError(format!(
                        "range {spec:?} has more than {MAX_ROWS} points"
                    )));
                }
                out.push(x.clone());
                x += &step;
            }
            Ok(out)
        }
        _ => Err(InputError(format!(
            "range {spec:?}: expected start:stop:step or a single value"
        ))),
    }
}

fn parse_half_lengths(spec: &str) -> Result<[Scalar; 3], InputError> {
    let parts = spec
        .split(',')
        .map(|s| parse_scalar(s.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    match parts.as_slice() {
        [l] => Ok([l.clone(), l.clone(), l.clone()]),
        [a, b, c] => Ok([a.clone(), b.clone(), c.clone()]),
        _ => Err(InputError(format!(
            "--l {spec:?}: expected one value or l1,l2,l3"
        ))),
    }
}

fn grid(args: &SweepArgs) -> Result<Vec<BoxDomain3>, InputError> {
    let (r1, r2, r3) = (
        parse_range(&args.r1)?,
        parse_range(&args.r2)?,
        parse_range(&args.r3)?,
    );
    let rows = r1.len().saturating_mul(r2.len()).saturating_mul(r3.len());
    if rows > MAX_ROWS {
        return Err(InputError(format!(
            "sweep has {rows} grid points; the limit is {MAX_ROWS}"
        )));
    }
    let l = parse_half_lengths(&args.l)?;
    let mut out = Vec::with_capacity(rows);
    for a in &r1 {
        for b in &r2 {
            for c in &r3 {
                let r = [a, b, c];
                let iv = std::array::from_fn(|i| (r[i] * &l[i], l[i].clone()));
                out.push(BoxDomain3::from_centers(iv)?);
            }
        }
    }
    Ok(out)
}

fn listed(path: &std::path::Path) -> Result<Vec<BoxDomain3>, InputError> {
    let text = read_file(path)?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let Value::Array(items) = value else {
        return Err(InputError(format!(
            "{}: expected a JSON array of domains",
            path.display()
        )));
    };
    items
        .iter()
        .enumerate()
        .map(|(k, v)| {
            BoxDomain3::from_json_value(v)
                .map_err(|e| InputError(format!("{} entry {k}: {e}", path.display())))
        })
        .collect()
}

pub fn rows(domains: &[BoxDomain3]) -> Vec<[String; 12]> {
    domains
        .iter()
        .map(|d| {
            let rep = hull_volume_any(d);
            let c = rep.canonical.domain();
            let r = c.ratios();
            let s = rep.subcases;
            [
                fmt_exact(&r[0]),
                fmt_exact(&r[1]),
                fmt_exact(&r[2]),
                fmt_exact(c.half_length(0)),
                fmt_exact(c.half_length(1)),
                fmt_exact(c.half_length(2)),
                rep.case.id().to_string(),
                s.qqr.to_string(),
                s.qrr.to_string(),
                s.volq.to_string(),
                fmt_exact(&rep.closed_form),
                fmt_f64(to_f64(&rep.closed_form)),
            ]
        })
        .collect()
}

pub fn to_csv(rows: &[[String; 12]]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER).expect("writing to memory");
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("CSV fields are UTF-8")
}

pub fn run(args: &SweepArgs) -> Result<String, InputError> {
    let domains = match &args.domains {
        Some(path) => listed(path)?,
        None => grid(args)?,
    };
    Ok(to_csv(&rows(&domains)))
}
