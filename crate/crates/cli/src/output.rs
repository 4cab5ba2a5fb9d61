//! Deterministic text, CSV, and JSON rendering.
//!
//! Every number destined for a table is printed with 12 significant decimal
//! digits in exponent notation, locale-free, LF line endings. Identical
//! inputs therefore produce byte-identical files.

use serde::ser::Serializer;
use serde::Serialize;
use std::io::{self, Write};

use biqubit_core::sweep::{SweepRow, COLUMNS};
use biqubit_core::verify::VerifyReport;

/// 12 significant decimal digits; negative zero normalized; infinities
/// printed as `inf` (they occur only for the ratio columns).
pub fn fmt12(value: f64) -> String {
    if value == 0.0 {
        return "0.00000000000e0".to_string();
    }
    format!("{value:.11e}")
}

/// One `name = value` line for the point-evaluation commands.
pub fn print_field(out: &mut impl Write, name: &str, value: f64) -> io::Result<()> {
    writeln!(out, "{name} = {}", fmt12(value))
}

pub fn write_csv(out: &mut impl Write, rows: &[SweepRow]) -> io::Result<()> {
    writeln!(out, "{}", COLUMNS.join(","))?;
    for row in rows {
        let fields: Vec<String> = row.values().iter().copied().map(fmt12).collect();
        writeln!(out, "{}", fields.join(","))?;
    }
    Ok(())
}

/// A float that serializes infinities as the JSON string `"inf"` since JSON
/// numbers cannot carry them.
struct JsonNum(f64);

impl Serialize for JsonNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.is_infinite() {
            serializer.serialize_str("inf")
        } else {
            serializer.serialize_f64(self.0)
        }
    }
}

#[derive(Serialize)]
struct RowJson {
    p2: f64,
    chi: f64,
    alpha: f64,
    theta: f64,
    phi: f64,
    delta: f64,
    epsilon: JsonNum,
    sigma: JsonNum,
    p_ee: f64,
    p_eb: f64,
    p_be: f64,
    p_bb: f64,
    p_plus: f64,
    p_minus: f64,
    p_e_local: f64,
    p_ebar_local: f64,
    v_plus: f64,
    v_minus: f64,
}

impl From<&SweepRow> for RowJson {
    fn from(row: &SweepRow) -> Self {
        RowJson {
            p2: row.p2,
            chi: row.chi,
            alpha: row.alpha,
            theta: row.theta,
            phi: row.phi,
            delta: row.delta,
            epsilon: JsonNum(row.epsilon),
            sigma: JsonNum(row.sigma),
            p_ee: row.p_ee,
            p_eb: row.p_eb,
            p_be: row.p_be,
            p_bb: row.p_bb,
            p_plus: row.p_plus,
            p_minus: row.p_minus,
            p_e_local: row.p_e_local,
            p_ebar_local: row.p_ebar_local,
            v_plus: row.v_plus,
            v_minus: row.v_minus,
        }
    }
}

pub fn write_json(out: &mut impl Write, rows: &[SweepRow]) -> io::Result<()> {
    let rows: Vec<RowJson> = rows.iter().map(RowJson::from).collect();
    serde_json::to_writer(&mut *out, &rows).map_err(io::Error::from)?;
    writeln!(out)
}

pub fn print_report_text(out: &mut impl Write, report: &VerifyReport) -> io::Result<()> {
    writeln!(out, "self-verification report")?;
    writeln!(out, "rng = {}", report.rng_algorithm)?;
    writeln!(out, "seed = {}", report.seed)?;
    writeln!(out, "samples = {}", report.samples)?;
    writeln!(out, "tol = {:e}", report.tol)?;
    for check in &report.checks {
        writeln!(
            out,
            "check {}: {} (samples={}, max_dev={:.3e}, tol={:.1e})",
            check.name,
            if check.pass { "pass" } else { "FAIL" },
            check.samples,
            check.max_deviation,
            check.tolerance,
        )?;
    }
    writeln!(
        out,
        "overall: {}",
        if report.pass { "pass" } else { "FAIL" }
    )
}

#[derive(Serialize)]
struct CheckJson {
    name: &'static str,
    samples: usize,
    max_deviation: f64,
    tolerance: f64,
    pass: bool,
}

#[derive(Serialize)]
struct ReportJson {
    rng: &'static str,
    seed: u64,
    samples: usize,
    tol: f64,
    checks: Vec<CheckJson>,
    pass: bool,
}

pub fn print_report_json(out: &mut impl Write, report: &VerifyReport) -> io::Result<()> {
    let json = ReportJson {
        rng: report.rng_algorithm,
        seed: report.seed,
        samples: report.samples,
        tol: report.tol,
        checks: report
            .checks
            .iter()
            .map(|c| CheckJson {
                name: c.name,
                samples: c.samples,
                max_deviation: c.max_deviation,
                tolerance: c.tolerance,
                pass: c.pass,
            })
            .collect(),
        pass: report.pass,
    };
    serde_json::to_writer_pretty(&mut *out, &json).map_err(io::Error::from)?;
    writeln!(out)
}
