use std::fmt::Write as _;

use super::check_complete;
use crate::cpc::TradeoffCurve;
use crate::error::DatasetError;

#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    pub width: u32,
    pub height: u32,
    /// Title drawn above the plot; empty uses the instance name.
    pub title: String,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self { width: 640, height: 420, title: String::new() }
    }
}

const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 55.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Frontier plot: one mark per (p, z_p), joined by a step line. The area
/// above the curve is labelled as the set covering region, the area below as
/// the maximal covering region.
pub fn render_curve_svg(curve: &TradeoffCurve, opts: &SvgOptions) -> Result<String, DatasetError> {
    check_complete(curve)?;
    let m = curve.records.len();
    let w = opts.width as f64;
    let h = opts.height as f64;
    let plot_w = w - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = h - MARGIN_TOP - MARGIN_BOTTOM;
    let z_max = curve.records.iter().map(|r| r.z).fold(0.0, f64::max);
    let z_top = if z_max > 0.0 { z_max * 1.05 } else { 1.0 };
    let x_of = |p: f64| {
        if m == 1 {
            MARGIN_LEFT + plot_w / 2.0
        } else {
            MARGIN_LEFT + (p - 1.0) / (m - 1) as f64 * plot_w
        }
    };
    let y_of = |z: f64| MARGIN_TOP + plot_h - z / z_top * plot_h;
    let title = if opts.title.is_empty() { curve.instance.as_str() } else { opts.title.as_str() };

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        opts.width, opts.height, opts.width, opts.height
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(
        s,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
        w / 2.0,
        escape(title)
    )
    .unwrap();

    // axes
    let x0 = MARGIN_LEFT;
    let y0 = MARGIN_TOP + plot_h;
    writeln!(s, r#"<g class="axes" stroke="black" stroke-width="1">"#).unwrap();
    writeln!(s, r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{:.2}" y2="{y0:.2}"/>"#, x0 + plot_w).unwrap();
    writeln!(s, r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{x0:.2}" y2="{MARGIN_TOP:.2}"/>"#).unwrap();
    writeln!(s, "</g>").unwrap();

    let x_step = (m as f64 / 10.0).ceil().max(1.0) as usize;
    writeln!(s, r#"<g class="ticks" font-size="11" text-anchor="middle">"#).unwrap();
    let mut p = 1;
    while p <= m {
        writeln!(s, r#"<text x="{:.2}" y="{:.2}">{p}</text>"#, x_of(p as f64), y0 + 16.0).unwrap();
        p += x_step;
    }
    for t in 0..=4 {
        let z = z_top * t as f64 / 4.0;
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{z:.2}</text>"#,
            x0 - 6.0,
            y_of(z) + 4.0
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();

    writeln!(
        s,
        r#"<text class="xlabel" x="{:.2}" y="{:.2}" text-anchor="middle" font-size="13">number of facilities p</text>"#,
        x0 + plot_w / 2.0,
        h - 12.0
    )
    .unwrap();
    writeln!(
        s,
        r#"<text class="ylabel" x="18" y="{:.2}" text-anchor="middle" font-size="13" transform="rotate(-90 18 {:.2})">covering radius z_p</text>"#,
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0
    )
    .unwrap();

    // step line: horizontal at z_p from p to p + 1, then drop
    let mut path = String::new();
    for (idx, r) in curve.records.iter().enumerate() {
        let x = x_of(r.p as f64);
        let y = y_of(r.z);
        if idx == 0 {
            write!(path, "M{x:.2},{y:.2}").unwrap();
        } else {
            write!(path, " V{y:.2}").unwrap();
        }
        if idx + 1 < m {
            write!(path, " H{:.2}", x_of((r.p + 1) as f64)).unwrap();
        }
    }
    writeln!(s, r#"<path class="frontier" d="{path}" fill="none" stroke="steelblue" stroke-width="1.5"/>"#).unwrap();

    writeln!(s, r#"<g class="marks" fill="steelblue">"#).unwrap();
    for r in &curve.records {
        writeln!(
            s,
            r#"<circle class="mark" cx="{:.2}" cy="{:.2}" r="3"><title>p = {}, z = {:.6}</title></circle>"#,
            x_of(r.p as f64),
            y_of(r.z),
            r.p,
            r.z
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();

    writeln!(
        s,
        r#"<text class="region" x="{:.2}" y="{:.2}" text-anchor="end" font-size="12" fill="gray">set covering region</text>"#,
        x0 + plot_w - 6.0,
        MARGIN_TOP + 16.0
    )
    .unwrap();
    writeln!(
        s,
        r#"<text class="region" x="{:.2}" y="{:.2}" font-size="12" fill="gray">maximal covering region</text>"#,
        x0 + 8.0,
        y0 - 8.0
    )
    .unwrap();
    writeln!(s, "</svg>").unwrap();
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset_io::{CurveRecord, Source};
    use crate::geometry::DistanceMode;

    fn curve(zs: &[f64]) -> TradeoffCurve {
        TradeoffCurve {
            instance: "a<b".into(),
            mode: DistanceMode::Real,
            records: zs
                .iter()
                .enumerate()
                .map(|(i, &z)| CurveRecord { p: i + 1, z, facilities: None, source: Source::Lscp })
                .collect(),
        }
    }

    #[test]
    fn marks_labels_and_regions() {
        let svg = render_curve_svg(&curve(&[2.0, 1.0, 0.0]), &SvgOptions::default()).unwrap();
        assert_eq!(svg.matches(r#"class="mark""#).count(), 3);
        assert!(svg.contains("number of facilities p"));
        assert!(svg.contains("covering radius z_p"));
        assert!(svg.contains("set covering region"));
        assert!(svg.contains("maximal covering region"));
        assert!(svg.contains("a&lt;b"));
        assert_eq!(svg, render_curve_svg(&curve(&[2.0, 1.0, 0.0]), &SvgOptions::default()).unwrap());
    }

    #[test]
    fn single_point() {
        let svg = render_curve_svg(&curve(&[0.0]), &SvgOptions::default()).unwrap();
        assert_eq!(svg.matches(r#"class="mark""#).count(), 1);
        assert!(svg.contains("<title>p = 1, z = 0.000000</title>"));
    }

    #[test]
    fn incomplete_rejected() {
        let mut c = curve(&[2.0, 1.0, 0.0]);
        c.records.pop();
        c.records[1].p = 3;
        assert_eq!(render_curve_svg(&c, &SvgOptions::default()), Err(DatasetError::IncompleteCurve { p: 2 }));
    }
}
