use std::io::Write;

use serde::Serialize;

use crate::covering::EstimateReport;
use crate::error::{Error, Result};

pub const ESTIMATE_COLUMNS: [&str; 7] = [
    "scale",
    "samples",
    "max_ratio_num",
    "max_ratio_den",
    "worst_cube_corner",
    "worst_cube_side",
    "covered_by_grid",
];

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::input("output", e.to_string())
}

/// One row per scale. Corner coordinates are joined with `;`; empty cells
/// mean every sample at that scale failed.
pub fn write_estimate_csv<W: Write>(report: &EstimateReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(ESTIMATE_COLUMNS).map_err(io_error)?;
    for s in &report.scales {
        let (num, den) = match &s.max_ratio {
            Some(r) => (r.numer().to_string(), r.denom().to_string()),
            None => (String::new(), String::new()),
        };
        let (corner, side) = match &s.worst_cube {
            Some(c) => (
                c.corner
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(";"),
                c.side.to_string(),
            ),
            None => (String::new(), String::new()),
        };
        let by = s.covered_by.map(|i| i.to_string()).unwrap_or_default();
        w.write_record([
            s.scale.to_string(),
            s.samples.to_string(),
            num,
            den,
            corner,
            side,
            by,
        ])
        .map_err(io_error)?;
    }
    w.flush().map_err(io_error)
}

pub fn estimate_csv(report: &EstimateReport) -> Result<String> {
    let mut buf = Vec::new();
    write_estimate_csv(report, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types always serialize") + "\n"
}
