#![allow(dead_code)]

use std::path::PathBuf;

use cpcenter::geometry::PointSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("data")
}

/// Looks for an instance file in `$CPCENTER_FIXTURES`, then in tests/data.
pub fn fixture(name: &str) -> Option<PathBuf> {
    let mut dirs = Vec::new();
    if let Some(d) = std::env::var_os("CPCENTER_FIXTURES") {
        dirs.push(PathBuf::from(d));
    }
    dirs.push(data_dir());
    dirs.into_iter().map(|d| d.join(name)).find(|p| p.is_file())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer coordinates on a small grid, so distance ties are common.
pub fn grid_points(rng: &mut ChaCha8Rng, m: usize, side: i64) -> Vec<(f64, f64)> {
    (0..m).map(|_| (rng.random_range(0..=side) as f64, rng.random_range(0..=side) as f64)).collect()
}

pub fn uniform_points(rng: &mut ChaCha8Rng, m: usize) -> Vec<(f64, f64)> {
    (0..m).map(|_| (rng.random_range(0.0..100.0), rng.random_range(0.0..100.0))).collect()
}

pub fn point_set(pts: &[(f64, f64)], name: &str) -> PointSet {
    PointSet::new(pts, name).unwrap()
}

/// Squared distances straight from the coordinates.
pub fn squared(pts: &[(f64, f64)]) -> Vec<Vec<f64>> {
    pts.iter()
        .map(|a| pts.iter().map(|b| (a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).collect())
        .collect()
}

/// Ceiling of the Euclidean distance for integer coordinates, by integer
/// search only.
pub fn ceiling_int(pts: &[(f64, f64)]) -> Vec<Vec<f64>> {
    pts.iter()
        .map(|a| {
            pts.iter()
                .map(|b| {
                    let dx = (a.0 - b.0) as i64;
                    let dy = (a.1 - b.1) as i64;
                    let sq = (dx * dx + dy * dy) as u64;
                    let mut c = 0u64;
                    while c * c < sq {
                        c += 1;
                    }
                    c as f64
                })
                .collect()
        })
        .collect()
}

/// Calls `f` with every ascending k-subset of 0..n.
pub fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for c in start..n {
            if n - c < k - cur.len() {
                break;
            }
            cur.push(c);
            rec(n, k, c + 1, cur, f);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut Vec::new(), f);
}

/// min over p-subsets of max over demands of the nearest chosen site.
pub fn brute_force_z(d: &[Vec<f64>], p: usize) -> f64 {
    let m = d.len();
    let mut best = f64::INFINITY;
    for_each_subset(m, p, &mut |s| {
        let worst = (0..m).map(|i| s.iter().map(|&j| d[i][j]).fold(f64::INFINITY, f64::min)).fold(0.0, f64::max);
        if worst < best {
            best = worst;
        }
    });
    best
}

pub fn brute_force_curve(d: &[Vec<f64>]) -> Vec<f64> {
    (1..=d.len()).map(|p| brute_force_z(d, p)).collect()
}

/// Smallest number of sites covering every demand, by trying subsets in
/// order of size. `sets[j]` lists the demands site j covers.
pub fn brute_force_cover(n: usize, sets: &[Vec<usize>]) -> Option<usize> {
    let m = sets.len();
    let masks: Vec<u32> = sets.iter().map(|s| s.iter().fold(0u32, |a, &i| a | (1 << i))).collect();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best: Option<usize> = None;
    for pick in 0u32..(1u32 << m) {
        let size = pick.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        let cov = (0..m).filter(|&j| pick >> j & 1 == 1).fold(0u32, |a, j| a | masks[j]);
        if cov == all {
            best = Some(size);
        }
    }
    best
}

/// Counts of an LP file recovered from its text: binaries, continuous
/// variables in `Bounds`, and labelled constraints.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct LpCounts {
    pub binaries: usize,
    pub continuous: usize,
    pub constraints: usize,
    pub variables: Vec<String>,
}

pub fn count_lp(text: &str) -> LpCounts {
    let mut section = "";
    let mut c = LpCounts::default();
    for line in text.lines() {
        if line.starts_with('\\') {
            continue;
        }
        match line.trim() {
            "Minimize" | "Subject To" | "Bounds" | "Binaries" | "End" => {
                section = line.trim();
                continue;
            }
            _ => {}
        }
        match section {
            "Subject To" => {
                if line.split_whitespace().next().is_some_and(|t| t.ends_with(':')) {
                    c.constraints += 1;
                }
            }
            "Bounds" => c.continuous += 1,
            "Binaries" => {
                for t in line.split_whitespace() {
                    c.binaries += 1;
                    c.variables.push(t.to_string());
                }
            }
            _ => {}
        }
    }
    c
}
