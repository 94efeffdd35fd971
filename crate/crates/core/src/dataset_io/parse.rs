use crate::error::DatasetError;
use crate::geometry::PointSet;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TsplibOptions {
    /// Read GEO / ATT coordinates as if they were planar.
    pub geo_as_planar: bool,
}

fn malformed(line: usize, reason: impl Into<String>) -> DatasetError {
    DatasetError::MalformedRow { line, reason: reason.into() }
}

fn parse_num(tok: &str, line: usize) -> Result<f64, DatasetError> {
    tok.parse::<f64>().map_err(|_| malformed(line, format!("not a number: {tok:?}")))
}

/// Parses the `NODE_COORD_SECTION` of a TSPLIB file with EUC_2D weights.
pub fn parse_tsplib(text: &str) -> Result<PointSet, DatasetError> {
    parse_tsplib_with(text, TsplibOptions::default())
}

pub fn parse_tsplib_with(text: &str, opts: TsplibOptions) -> Result<PointSet, DatasetError> {
    let mut name = String::new();
    let mut dimension = None;
    let mut in_coords = false;
    let mut coords = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "EOF" {
            break;
        }
        if in_coords {
            let starts_numeric = line.starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '+' || c == '.');
            if !starts_numeric {
                // another section begins (e.g. DISPLAY_DATA_SECTION)
                in_coords = false;
            } else {
                let toks: Vec<&str> = line.split_whitespace().collect();
                if toks.len() != 3 {
                    return Err(malformed(line_no, format!("expected `id x y`, got {} fields", toks.len())));
                }
                let x = parse_num(toks[1], line_no)?;
                let y = parse_num(toks[2], line_no)?;
                coords.push((x, y));
                continue;
            }
        }
        if line.starts_with("NODE_COORD_SECTION") {
            in_coords = true;
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            if line.ends_with("_SECTION") {
                continue;
            }
            return Err(malformed(line_no, format!("unrecognised header line {line:?}")));
        };
        let value = value.trim();
        match key.trim() {
            "NAME" => name = value.to_string(),
            "DIMENSION" => {
                dimension = Some(value.parse::<usize>().map_err(|_| malformed(line_no, "bad DIMENSION"))?)
            }
            "EDGE_WEIGHT_TYPE" => match value {
                "EUC_2D" => {}
                "GEO" | "ATT" | "CEIL_2D" | "MAN_2D" | "MAX_2D" if opts.geo_as_planar => {}
                other => return Err(DatasetError::UnsupportedEdgeWeightType(other.to_string())),
            },
            _ => {}
        }
    }
    if let Some(d) = dimension {
        if d != coords.len() {
            return Err(DatasetError::DimensionMismatch { declared: d, found: coords.len() });
        }
    }
    Ok(PointSet::new(&coords, name)?)
}

/// Parses whitespace-separated `x y` or `id x y [weight]` rows. Weights are
/// read and discarded.
pub fn parse_xy_table(text: &str) -> Result<PointSet, DatasetError> {
    parse_xy_table_named(text, "")
}

pub fn parse_xy_table_named(text: &str, name: &str) -> Result<PointSet, DatasetError> {
    let mut coords = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let (x, y) = match toks.len() {
            2 => (toks[0], toks[1]),
            3 | 4 => {
                if toks.len() == 4 {
                    parse_num(toks[3], line_no)?;
                }
                (toks[1], toks[2])
            }
            n => return Err(malformed(line_no, format!("expected 2 to 4 fields, got {n}"))),
        };
        coords.push((parse_num(x, line_no)?, parse_num(y, line_no)?));
    }
    Ok(PointSet::new(&coords, name)?)
}
