use std::io::Write;

use super::{RunReport, SweepRow};
use crate::dynamics::TrajectoryRow;
use crate::error::Result;

pub const CSV_HEADER: [&str; 11] = [
    "t",
    "cv",
    "c12",
    "c13",
    "c23",
    "cv_closed",
    "c12_closed",
    "c13_closed",
    "c23_closed",
    "phase",
    "cycle",
];

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt(v: Option<f64>) -> String {
    match v {
        Some(x) if !x.is_nan() => format_float(x),
        _ => String::new(),
    }
}

pub fn write_csv<W: Write>(rows: &[TrajectoryRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            format_float(r.t),
            opt(Some(r.cv)),
            opt(Some(r.c12)),
            opt(r.c13),
            opt(r.c23),
            opt(r.cv_closed),
            opt(r.c12_closed),
            opt(r.c13_closed),
            opt(r.c23_closed),
            r.phase.as_str().to_string(),
            r.cycle.map(|c| c.to_string()).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["half_period", "achieved_min", "predicted_min"])?;
    for r in rows {
        w.write_record([
            format_float(r.half_period),
            format_float(r.achieved_min),
            opt(r.predicted_min),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_report_json<W: Write>(report: &RunReport, out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, report)?;
    Ok(())
}
