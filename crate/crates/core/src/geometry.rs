//! Point sets and the distance structures built from them.
//!
//! Real-mode matrices keep squared Euclidean distances; square roots are only
//! taken when a radius leaves the library (see [`DistanceMatrix::to_radius`]).
//! Integer-mode matrices carry the exact integer ceiling of every Euclidean
//! distance and use it as the canonical value.

use std::fmt;

use crate::error::GeometryError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// An ordered set of planar points. Every point is both a demand and a
/// candidate facility site.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    name: String,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(records: &[(f64, f64)], name: impl Into<String>) -> Result<Self, GeometryError> {
        if records.is_empty() {
            return Err(GeometryError::EmptyInstance);
        }
        let mut points = Vec::with_capacity(records.len());
        for (index, &(x, y)) in records.iter().enumerate() {
            if !x.is_finite() || !y.is_finite() {
                return Err(GeometryError::NonFiniteCoordinate { index });
            }
            points.push(Point { x, y });
        }
        Ok(Self { name: name.into(), points })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }
}

/// Shorthand for [`PointSet::new`].
pub fn build_point_set(records: &[(f64, f64)], name: &str) -> Result<PointSet, GeometryError> {
    PointSet::new(records, name)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMode {
    Real,
    Integer,
}

impl fmt::Display for DistanceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceMode::Real => f.write_str("real"),
            DistanceMode::Integer => f.write_str("integer"),
        }
    }
}

/// Symmetric m x m distance matrix, stored row-major.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    m: usize,
    name: String,
    sq: Vec<f64>,
    ceil: Option<Vec<u64>>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn mode(&self) -> DistanceMode {
        if self.ceil.is_some() {
            DistanceMode::Integer
        } else {
            DistanceMode::Real
        }
    }

    /// Squared Euclidean distance, kept in both modes.
    #[inline]
    pub fn squared(&self, i: usize, j: usize) -> f64 {
        self.sq[i * self.m + j]
    }

    /// Integer ceiling of the Euclidean distance (integer mode only).
    #[inline]
    pub fn ceiling(&self, i: usize, j: usize) -> Option<u64> {
        self.ceil.as_ref().map(|c| c[i * self.m + j])
    }

    /// The value every algorithm compares: squared distance in real mode,
    /// integer ceiling in integer mode.
    #[inline]
    pub fn value(&self, i: usize, j: usize) -> f64 {
        match &self.ceil {
            Some(c) => c[i * self.m + j] as f64,
            None => self.sq[i * self.m + j],
        }
    }

    /// Converts a canonical value into a covering radius in coordinate units.
    #[inline]
    pub fn to_radius(&self, value: f64) -> f64 {
        match self.mode() {
            DistanceMode::Real => value.sqrt(),
            DistanceMode::Integer => value,
        }
    }

    /// Converts a radius in coordinate units back into a canonical value.
    /// In real mode this squares, so it is only exact for radii that came
    /// from [`Self::to_radius`] when the square root rounding is invertible.
    pub fn from_radius(&self, radius: f64) -> f64 {
        match self.mode() {
            DistanceMode::Real => radius * radius,
            DistanceMode::Integer => radius,
        }
    }

    /// Plain (non-squared) distance in coordinate units.
    #[inline]
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.to_radius(self.value(i, j))
    }

    pub fn max_value(&self) -> f64 {
        match &self.ceil {
            Some(c) => c.iter().copied().max().unwrap_or(0) as f64,
            None => self.sq.iter().copied().fold(0.0, f64::max),
        }
    }
}

/// Builds the real-mode squared-distance matrix.
pub fn squared_distance_matrix(ps: &PointSet) -> DistanceMatrix {
    let m = ps.len();
    let pts = ps.points();
    let mut sq = vec![0.0; m * m];
    for i in 0..m {
        for j in (i + 1)..m {
            let dx = pts[i].x - pts[j].x;
            let dy = pts[i].y - pts[j].y;
            let d = dx * dx + dy * dy;
            sq[i * m + j] = d;
            sq[j * m + i] = d;
        }
    }
    DistanceMatrix { m, name: ps.name().to_string(), sq, ceil: None }
}

/// Exact integer ceiling of `sqrt(sq)`.
pub fn ceil_sqrt(sq: f64) -> u64 {
    if sq <= 0.0 {
        return 0;
    }
    let mut c = sq.sqrt().ceil() as u64;
    while c > 0 && ((c - 1) as f64) * ((c - 1) as f64) >= sq {
        c -= 1;
    }
    while (c as f64) * (c as f64) < sq {
        c += 1;
    }
    c
}

/// Rounds every distance up to the next integer.
pub fn integer_ceiling_matrix(dm: &DistanceMatrix) -> Result<DistanceMatrix, GeometryError> {
    if dm.mode() != DistanceMode::Real {
        return Err(GeometryError::ModeMismatch { expected: DistanceMode::Real });
    }
    let ceil = dm.sq.iter().map(|&s| ceil_sqrt(s)).collect();
    Ok(DistanceMatrix { m: dm.m, name: dm.name.clone(), sq: dm.sq.clone(), ceil: Some(ceil) })
}

/// Builds the matrix for the requested mode.
pub fn distance_matrix(ps: &PointSet, mode: DistanceMode) -> DistanceMatrix {
    let real = squared_distance_matrix(ps);
    match mode {
        DistanceMode::Real => real,
        DistanceMode::Integer => integer_ceiling_matrix(&real).expect("fresh matrix is real"),
    }
}

/// Sorted unique distances D^0 < D^1 < ... < D^K with a rank for every
/// matrix cell. Cells are also grouped by rank so coverage can be grown one
/// rung at a time.
#[derive(Debug, Clone)]
pub struct DistanceLadder {
    values: Vec<f64>,
    m: usize,
    ranks: Vec<u32>,
    // CSR layout: off-diagonal (i, j) cells with i < j, grouped by rank.
    rank_start: Vec<usize>,
    cells: Vec<(u32, u32)>,
}

impl DistanceLadder {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// K, the index of the largest rung.
    pub fn top(&self) -> usize {
        self.values.len() - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn value(&self, k: usize) -> f64 {
        self.values[k]
    }

    #[inline]
    pub fn rank(&self, i: usize, j: usize) -> usize {
        self.ranks[i * self.m + j] as usize
    }

    /// Rank matrix, row-major.
    pub fn rank_matrix(&self) -> &[u32] {
        &self.ranks
    }

    /// Rank of an exact ladder value.
    pub fn rank_of(&self, value: f64) -> Option<usize> {
        self.values.binary_search_by(|v| v.total_cmp(&value)).ok()
    }

    /// Largest rank whose value is `<= value`, if any.
    pub fn floor_rank(&self, value: f64) -> Option<usize> {
        let n = self.values.partition_point(|&v| v <= value);
        n.checked_sub(1)
    }

    /// Off-diagonal cells `(i, j)`, `i < j`, whose distance sits exactly on rung `k`.
    pub fn cells_at(&self, k: usize) -> &[(u32, u32)] {
        &self.cells[self.rank_start[k]..self.rank_start[k + 1]]
    }

    /// Rank of the smallest off-diagonal distance (1 for distinct points,
    /// 0 if two points coincide). `None` for a single point.
    pub fn closest_pair_rank(&self) -> Option<usize> {
        (0..self.values.len()).find(|&k| !self.cells_at(k).is_empty())
    }
}

pub fn unique_distance_ladder(dm: &DistanceMatrix) -> DistanceLadder {
    let m = dm.len();
    let mut values: Vec<f64> = Vec::with_capacity(m * (m.saturating_sub(1)) / 2 + 1);
    values.push(0.0);
    for i in 0..m {
        for j in (i + 1)..m {
            values.push(dm.value(i, j));
        }
    }
    values.sort_unstable_by(|a, b| a.total_cmp(b));
    values.dedup();

    let mut ranks = vec![0u32; m * m];
    let mut counts = vec![0usize; values.len()];
    for i in 0..m {
        for j in (i + 1)..m {
            let v = dm.value(i, j);
            let r = values.binary_search_by(|x| x.total_cmp(&v)).expect("value is in ladder");
            ranks[i * m + j] = r as u32;
            ranks[j * m + i] = r as u32;
            counts[r] += 1;
        }
    }
    let mut rank_start = Vec::with_capacity(values.len() + 1);
    let mut acc = 0;
    rank_start.push(0);
    for c in &counts {
        acc += c;
        rank_start.push(acc);
    }
    let mut fill = rank_start.clone();
    let mut cells = vec![(0u32, 0u32); acc];
    for i in 0..m {
        for j in (i + 1)..m {
            let r = ranks[i * m + j] as usize;
            cells[fill[r]] = (i as u32, j as u32);
            fill[r] += 1;
        }
    }
    DistanceLadder { values, m, ranks, rank_start, cells }
}
