//! LP-format writers for the single-p location-allocation models.
//!
//! Naming: `y_j` opens site j, `x_i_j` assigns demand i to site j, `z` is the
//! covering radius. Constraint labels are `facilities`, `assign_i`,
//! `link_i_j` and `dist_i`. Coefficients are plain (not squared) distances
//! printed with the shortest representation that round-trips.
//!
//! The bounded variant drops every `x_i_j` with `d_ij > ub`. An arbitrary ub
//! below the true optimum yields an infeasible model; nothing here checks
//! that.

use crate::error::EmitError;
use crate::geometry::DistanceMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelSize {
    pub binaries: usize,
    pub continuous: usize,
    pub constraints: usize,
}

/// Variable and constraint counts for n demands and m sites. With
/// `ub_pair_count` the counts are those of the bounded model that keeps only
/// that many assignment variables.
pub fn model_size(n: usize, m: usize, ub_pair_count: Option<usize>) -> Result<ModelSize, EmitError> {
    if n == 0 || m == 0 {
        return Err(EmitError::ArgumentOutOfRange(format!("n = {n}, m = {m}; both must be at least 1")));
    }
    let pairs = match ub_pair_count {
        None => n * m,
        Some(c) if c <= n * m => c,
        Some(c) => {
            return Err(EmitError::ArgumentOutOfRange(format!("{c} pairs exceed n * m = {}", n * m)));
        }
    };
    Ok(ModelSize { binaries: pairs + m, continuous: 1, constraints: pairs + 2 * n + 1 })
}

/// Number of (i, j) with plain distance at most `ub`.
pub fn pairs_within(dm: &DistanceMatrix, ub: f64) -> usize {
    let m = dm.len();
    (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).filter(|&(i, j)| dm.distance(i, j) <= ub).count()
}

const WRAP: usize = 100;

struct Lines {
    out: String,
    line: String,
}

impl Lines {
    fn new() -> Self {
        Self { out: String::new(), line: String::new() }
    }

    fn start(&mut self, head: &str) {
        self.line.clear();
        self.line.push(' ');
        self.line.push_str(head);
    }

    fn term(&mut self, t: &str) {
        if self.line.len() + 1 + t.len() > WRAP {
            self.out.push_str(&self.line);
            self.out.push('\n');
            self.line.clear();
            self.line.push_str("   ");
        } else {
            self.line.push(' ');
        }
        self.line.push_str(t);
    }

    fn end(&mut self) {
        self.out.push_str(&self.line);
        self.out.push('\n');
        self.line.clear();
    }

    fn raw(&mut self, s: &str) {
        self.out.push_str(s);
        self.out.push('\n');
    }
}

fn emit(dm: &DistanceMatrix, p: usize, ub: Option<f64>) -> Result<String, EmitError> {
    let m = dm.len();
    if p == 0 || p > m {
        return Err(EmitError::POutOfRange { p, m });
    }
    let keep = |i: usize, j: usize| ub.is_none_or(|u| dm.distance(i, j) <= u);
    let name = dm.name().replace(['\n', '\r'], " ");

    let mut w = Lines::new();
    match ub {
        None => w.raw(&format!("\\ CPC-MIP instance {name}, p = {p}, {m} demands, {m} sites")),
        Some(u) => w.raw(&format!("\\ CPC-MIPUB instance {name}, p = {p}, {m} demands, {m} sites, ub = {u}")),
    }
    w.raw("Minimize");
    w.raw(" obj: z");
    w.raw("Subject To");

    w.start("facilities:");
    for j in 0..m {
        if j > 0 {
            w.term("+");
        }
        w.term(&format!("y_{j}"));
    }
    w.term("<=");
    w.term(&p.to_string());
    w.end();

    for i in 0..m {
        w.start(&format!("assign_{i}:"));
        let mut first = true;
        for j in (0..m).filter(|&j| keep(i, j)) {
            if !first {
                w.term("+");
            }
            first = false;
            w.term(&format!("x_{i}_{j}"));
        }
        w.term("=");
        w.term("1");
        w.end();
    }

    for i in 0..m {
        for j in (0..m).filter(|&j| keep(i, j)) {
            w.raw(&format!(" link_{i}_{j}: x_{i}_{j} - y_{j} <= 0"));
        }
    }

    for i in 0..m {
        w.start(&format!("dist_{i}:"));
        let mut first = true;
        for j in (0..m).filter(|&j| keep(i, j)) {
            if !first {
                w.term("+");
            }
            first = false;
            w.term(&format!("{} x_{i}_{j}", dm.distance(i, j)));
        }
        w.term("- z");
        w.term("<=");
        w.term("0");
        w.end();
    }

    w.raw("Bounds");
    w.raw(" z >= 0");
    w.raw("Binaries");
    w.line.clear();
    let mut names = Vec::new();
    for i in 0..m {
        for j in (0..m).filter(|&j| keep(i, j)) {
            names.push(format!("x_{i}_{j}"));
        }
    }
    names.extend((0..m).map(|j| format!("y_{j}")));
    for n in &names {
        w.term(n);
    }
    w.end();
    w.raw("End");
    Ok(w.out)
}

/// Full location-allocation model for one p.
pub fn emit_cpc_mip(dm: &DistanceMatrix, p: usize) -> Result<String, EmitError> {
    emit(dm, p, None)
}

/// Model with every assignment variable of distance above `ub` removed.
pub fn emit_cpc_mipub(dm: &DistanceMatrix, p: usize, ub: f64) -> Result<String, EmitError> {
    if ub.is_nan() || ub < 0.0 {
        return Err(EmitError::NonPositiveUB(ub));
    }
    emit(dm, p, Some(ub))
}
