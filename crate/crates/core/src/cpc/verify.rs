//! Independent audit of a curve against its distance matrix.

use std::fmt;

use super::TradeoffCurve;
use crate::geometry::{unique_distance_ladder, DistanceLadder, DistanceMatrix};

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub p: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub violations: Vec<Violation>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "FAIL" };
            writeln!(f, "  {:<12} {}", c.name, status)?;
            for v in c.violations.iter().take(5) {
                writeln!(f, "    p = {}: {}", v.p, v.message)?;
            }
            if c.violations.len() > 5 {
                writeln!(f, "    ... {} more", c.violations.len() - 5)?;
            }
        }
        Ok(())
    }
}

/// Ladder rungs whose radius equals `z`, as an inclusive rank range.
fn rungs_for(dm: &DistanceMatrix, ladder: &DistanceLadder, z: f64) -> Option<(usize, usize)> {
    let vals = ladder.values();
    let lo = vals.partition_point(|&v| dm.to_radius(v) < z);
    let hi = vals.partition_point(|&v| dm.to_radius(v) <= z);
    (lo < hi).then(|| (lo, hi - 1))
}

fn covers_at(dm: &DistanceMatrix, facilities: &[usize], level: f64) -> bool {
    (0..dm.len()).all(|i| facilities.iter().any(|&j| dm.value(i, j) <= level))
}

pub fn verify_curve(curve: &TradeoffCurve, dm: &DistanceMatrix) -> VerificationReport {
    let ladder = unique_distance_ladder(dm);
    let m = dm.len();
    let mut complete = Vec::new();
    if curve.records.len() != m {
        complete.push(Violation { p: curve.records.len(), message: format!("expected {m} records") });
    }
    for (idx, r) in curve.records.iter().enumerate() {
        if r.p != idx + 1 {
            complete.push(Violation { p: r.p, message: format!("record {} carries p = {}", idx + 1, r.p) });
        }
    }
    if curve.mode != dm.mode() {
        complete.push(Violation { p: 0, message: format!("curve mode {} vs matrix mode {}", curve.mode, dm.mode()) });
    }

    let mut monotone = Vec::new();
    for w in curve.records.windows(2) {
        if w[1].z > w[0].z {
            monotone.push(Violation {
                p: w[1].p,
                message: format!("z_{} = {} exceeds z_{} = {}", w[1].p, w[1].z, w[0].p, w[0].z),
            });
        }
    }

    let mut membership = Vec::new();
    let mut rungs = Vec::with_capacity(curve.records.len());
    for r in &curve.records {
        let found = rungs_for(dm, &ladder, r.z);
        if found.is_none() {
            membership.push(Violation { p: r.p, message: format!("z = {} is not a pairwise distance", r.z) });
        }
        rungs.push(found);
    }

    let mut anchors = Vec::new();
    if let Some(last) = curve.records.last() {
        if last.p == m && last.z != 0.0 {
            anchors.push(Violation { p: m, message: format!("z_m = {} (expected 0)", last.z) });
        }
    }
    if m >= 2 && curve.records.len() == m {
        let k = ladder.closest_pair_rank().expect("pair exists");
        let expect = dm.to_radius(ladder.value(k));
        let got = curve.records[m - 2].z;
        if got != expect {
            anchors.push(Violation { p: m - 1, message: format!("z_(m-1) = {got}, closest pair is {expect}") });
        }
    }

    let mut feasible = Vec::new();
    let mut tight = Vec::new();
    for (r, rung) in curve.records.iter().zip(&rungs) {
        let (Some(fac), Some((lo, hi))) = (&r.facilities, rung) else { continue };
        if fac.len() > r.p || fac.iter().any(|&j| j >= m) {
            feasible.push(Violation { p: r.p, message: format!("{} facilities / bad index", fac.len()) });
            continue;
        }
        if !covers_at(dm, fac, ladder.value(*hi)) {
            feasible.push(Violation { p: r.p, message: "facilities leave a demand uncovered".into() });
        }
        if *lo > 0 && covers_at(dm, fac, ladder.value(lo - 1)) {
            tight.push(Violation {
                p: r.p,
                message: format!("facilities already cover at {}", dm.to_radius(ladder.value(lo - 1))),
            });
        }
    }

    VerificationReport {
        checks: vec![
            Check { name: "complete", violations: complete },
            Check { name: "monotone", violations: monotone },
            Check { name: "ladder", violations: membership },
            Check { name: "anchors", violations: anchors },
            Check { name: "feasible", violations: feasible },
            Check { name: "tight", violations: tight },
        ],
    }
}
