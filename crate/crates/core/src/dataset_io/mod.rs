//! Instance parsers and curve writers.
//!
//! Curve JSON layout (`"schema": 1`):
//!
//! ```json
//! {
//!   "schema": 1,
//!   "instance": "st70",
//!   "m": 70,
//!   "mode": "real",
//!   "records": [
//!     { "p": 1, "z": 45.27692569068709, "facilities": [30], "source": "trivial" }
//!   ]
//! }
//! ```
//!
//! `z` is written with the shortest representation that round-trips; in
//! integer mode it is a JSON integer. `facilities` may be `null`.

mod parse;
mod svg;

pub use parse::{parse_tsplib, parse_tsplib_with, parse_xy_table, parse_xy_table_named, TsplibOptions};
pub use svg::{render_curve_svg, SvgOptions};

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::cpc::TradeoffCurve;
use crate::error::DatasetError;
use crate::geometry::DistanceMode;

/// Which algorithm produced a curve entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Trivial,
    Enumeration,
    Lscp,
    External,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Trivial => "trivial",
            Source::Enumeration => "enumeration",
            Source::Lscp => "lscp",
            Source::External => "external",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveRecord {
    pub p: usize,
    /// Covering radius in coordinate units.
    pub z: f64,
    pub facilities: Option<Vec<usize>>,
    pub source: Source,
}

pub(crate) fn check_complete(curve: &TradeoffCurve) -> Result<(), DatasetError> {
    if curve.records.is_empty() {
        return Err(DatasetError::IncompleteCurve { p: 1 });
    }
    for (idx, r) in curve.records.iter().enumerate() {
        if r.p != idx + 1 {
            return Err(DatasetError::IncompleteCurve { p: idx + 1 });
        }
    }
    Ok(())
}

fn format_z(z: f64, mode: DistanceMode) -> String {
    match mode {
        DistanceMode::Real => format!("{z:.6}"),
        DistanceMode::Integer => format!("{}", z as u64),
    }
}

/// `p,z,facilities,source` with z at six decimals (integers in integer mode).
pub fn write_curve_csv(curve: &TradeoffCurve) -> Result<String, DatasetError> {
    check_complete(curve)?;
    let mut out = String::from("p,z,facilities,source\n");
    for r in &curve.records {
        let fac = r
            .facilities
            .as_ref()
            .map(|f| f.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(";"))
            .unwrap_or_default();
        writeln!(out, "{},{},{},{}", r.p, format_z(r.z, curve.mode), fac, r.source).unwrap();
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveFile {
    schema: u32,
    instance: String,
    m: usize,
    mode: DistanceMode,
    records: Vec<RecordJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RecordJson {
    p: usize,
    z: serde_json::Number,
    facilities: Option<Vec<usize>>,
    source: Source,
}

pub fn write_curve_json(curve: &TradeoffCurve) -> Result<String, DatasetError> {
    check_complete(curve)?;
    let records = curve
        .records
        .iter()
        .map(|r| {
            let z = match curve.mode {
                DistanceMode::Integer => serde_json::Number::from(r.z as u64),
                DistanceMode::Real => serde_json::Number::from_f64(r.z)
                    .ok_or_else(|| DatasetError::SchemaMismatch(format!("non-finite z at p = {}", r.p)))?,
            };
            Ok(RecordJson { p: r.p, z, facilities: r.facilities.clone(), source: r.source })
        })
        .collect::<Result<Vec<_>, DatasetError>>()?;
    let file = CurveFile {
        schema: 1,
        instance: curve.instance.clone(),
        m: curve.records.len(),
        mode: curve.mode,
        records,
    };
    let mut text = serde_json::to_string_pretty(&file).expect("curve serializes");
    text.push('\n');
    Ok(text)
}

pub fn read_curve_json(text: &str) -> Result<TradeoffCurve, DatasetError> {
    let file: CurveFile =
        serde_json::from_str(text).map_err(|e| DatasetError::SchemaMismatch(e.to_string()))?;
    if file.schema != 1 {
        return Err(DatasetError::SchemaMismatch(format!("unsupported schema {}", file.schema)));
    }
    if file.records.len() != file.m {
        return Err(DatasetError::SchemaMismatch(format!(
            "m = {} but {} records",
            file.m,
            file.records.len()
        )));
    }
    let mut records = Vec::with_capacity(file.records.len());
    for r in file.records {
        let z = match file.mode {
            DistanceMode::Integer => r
                .z
                .as_u64()
                .ok_or_else(|| DatasetError::SchemaMismatch(format!("integer-mode z at p = {} is {}", r.p, r.z)))?
                as f64,
            DistanceMode::Real => r.z.as_f64().expect("JSON numbers convert to f64"),
        };
        records.push(CurveRecord { p: r.p, z, facilities: r.facilities, source: r.source });
    }
    let curve = TradeoffCurve { instance: file.instance, mode: file.mode, records };
    check_complete(&curve).map_err(|e| DatasetError::SchemaMismatch(e.to_string()))?;
    Ok(curve)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(mode: DistanceMode, zs: &[f64]) -> TradeoffCurve {
        TradeoffCurve {
            instance: "demo".into(),
            mode,
            records: zs
                .iter()
                .enumerate()
                .map(|(i, &z)| CurveRecord {
                    p: i + 1,
                    z,
                    facilities: if i == 1 { None } else { Some(vec![0, i]) },
                    source: if i == 0 { Source::Trivial } else { Source::Lscp },
                })
                .collect(),
        }
    }

    #[test]
    fn csv_layout() {
        let c = curve(DistanceMode::Real, &[2.0, 18f64.sqrt(), 0.0]);
        let text = write_curve_csv(&c).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "p,z,facilities,source");
        assert_eq!(lines[1], "1,2.000000,0;0,trivial");
        assert_eq!(lines[2], "2,4.242641,,lscp");
        assert_eq!(lines[3], "3,0.000000,0;2,lscp");
        let ci = curve(DistanceMode::Integer, &[5.0, 3.0, 0.0]);
        assert!(write_curve_csv(&ci).unwrap().contains("\n2,3,,lscp\n"));
    }

    #[test]
    fn incomplete_curves_rejected() {
        let mut c = curve(DistanceMode::Real, &[2.0, 1.0, 0.0]);
        c.records.remove(1);
        assert_eq!(write_curve_csv(&c), Err(DatasetError::IncompleteCurve { p: 2 }));
        assert!(write_curve_json(&c).is_err());
    }

    #[test]
    fn json_round_trip_and_integers() {
        let c = curve(DistanceMode::Real, &[0.1 + 0.2, 20f64.sqrt(), 0.0]);
        let back = read_curve_json(&write_curve_json(&c).unwrap()).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.records[1].facilities, None);

        let ci = curve(DistanceMode::Integer, &[5.0, 3.0, 0.0]);
        let text = write_curve_json(&ci).unwrap();
        assert!(text.contains("\"z\": 5,"));
        assert!(text.contains("\"facilities\": null"));
        assert_eq!(read_curve_json(&text).unwrap(), ci);
    }

    #[test]
    fn json_schema_errors() {
        let c = curve(DistanceMode::Real, &[1.0, 0.0]);
        let text = write_curve_json(&c).unwrap();
        let wrong = text.replace("\"schema\": 1", "\"schema\": 2");
        assert!(matches!(read_curve_json(&wrong), Err(DatasetError::SchemaMismatch(_))));
        let wrong_m = text.replace("\"m\": 2", "\"m\": 3");
        assert!(matches!(read_curve_json(&wrong_m), Err(DatasetError::SchemaMismatch(_))));
        assert!(matches!(read_curve_json("{}"), Err(DatasetError::SchemaMismatch(_))));
        let frac = text.replace("\"mode\": \"real\"", "\"mode\": \"integer\"");
        assert!(matches!(read_curve_json(&frac), Err(DatasetError::SchemaMismatch(_))));
    }
}
