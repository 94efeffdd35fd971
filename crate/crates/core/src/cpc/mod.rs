//! Complete p-center drivers.
//!
//! A curve assigns every p = 1..m the smallest ladder distance z_p at which p
//! facilities cover every demand. The values for p = 1, m-1 and m have closed
//! forms; small p can be enumerated; everything else comes from sweeping the
//! distance ladder upwards and solving a set-covering problem at each rung.
//! One sweep rung usually settles several p at once because distance ties
//! make the minimum cover size drop by more than one.

mod enumerate;
mod verify;

pub use enumerate::{binomial, enumerate_center, EnumOptions, DEFAULT_BUDGET};
pub use verify::{verify_curve, Check, VerificationReport, Violation};

use crate::dataset_io::{CurveRecord, Source};
use crate::error::CpcError;
use crate::geometry::{unique_distance_ladder, DistanceLadder, DistanceMatrix, DistanceMode};
use crate::setcover::{coverage_matrix, solve_lscp};

/// One optimal p-center solution.
#[derive(Debug, Clone, PartialEq)]
pub struct CenterSolution {
    /// Canonical distance value (squared in real mode).
    pub level: f64,
    /// Covering radius in coordinate units.
    pub radius: f64,
    pub facilities: Vec<usize>,
    /// Number of candidate subsets examined (enumeration only).
    pub evaluated: u128,
}

/// The full p vs. z_p frontier for one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct TradeoffCurve {
    pub instance: String,
    pub mode: DistanceMode,
    /// One record per p, ascending.
    pub records: Vec<CurveRecord>,
}

impl TradeoffCurve {
    pub fn m(&self) -> usize {
        self.records.len()
    }

    pub fn z(&self, p: usize) -> f64 {
        self.records[p - 1].z
    }

    pub fn values(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.z).collect()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepStats {
    /// Number of set-covering solves performed by the ladder sweep.
    pub lscp_iterations: usize,
    /// Number of p-subsets evaluated by enumeration.
    pub enumerated: u128,
}

/// A solved curve together with its canonical values and work counters.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSolution {
    pub curve: TradeoffCurve,
    /// Canonical z_p (squared in real mode), index p - 1.
    pub levels: Vec<f64>,
    pub stats: SweepStats,
}

/// z_1: the site whose farthest demand is nearest.
pub fn solve_p1(dm: &DistanceMatrix) -> CenterSolution {
    let m = dm.len();
    let mut best = (f64::INFINITY, 0);
    for j in 0..m {
        let far = (0..m).map(|i| dm.value(i, j)).fold(0.0, f64::max);
        if far < best.0 {
            best = (far, j);
        }
    }
    CenterSolution { level: best.0, radius: dm.to_radius(best.0), facilities: vec![best.1], evaluated: 0 }
}

/// Closed forms for the top of the curve.
#[derive(Debug, Clone, PartialEq)]
pub struct TrivialTail {
    /// p = m: every site open, radius 0.
    pub full: CenterSolution,
    /// p = m - 1: the closest pair shares the lower-indexed endpoint.
    pub merged: CenterSolution,
}

pub fn trivial_tail(dm: &DistanceMatrix) -> Result<TrivialTail, CpcError> {
    trivial_tail_with(dm, &unique_distance_ladder(dm))
}

fn trivial_tail_with(dm: &DistanceMatrix, ladder: &DistanceLadder) -> Result<TrivialTail, CpcError> {
    let m = dm.len();
    if m < 2 {
        return Err(CpcError::InstanceTooSmall { m, needed: 2 });
    }
    let k = ladder.closest_pair_rank().expect("m >= 2 has a pair");
    let (_, drop) = ladder.cells_at(k)[0];
    let level = ladder.value(k);
    Ok(TrivialTail {
        full: CenterSolution { level: 0.0, radius: 0.0, facilities: (0..m).collect(), evaluated: 0 },
        merged: CenterSolution {
            level,
            radius: dm.to_radius(level),
            facilities: (0..m).filter(|&j| j != drop as usize).collect(),
            evaluated: 0,
        },
    })
}

struct Slot {
    level: f64,
    facilities: Vec<usize>,
    source: Source,
}

struct Builder<'a> {
    dm: &'a DistanceMatrix,
    slots: Vec<Option<Slot>>,
}

impl<'a> Builder<'a> {
    fn new(dm: &'a DistanceMatrix) -> Self {
        Self { dm, slots: (0..dm.len()).map(|_| None).collect() }
    }

    fn set(&mut self, p: usize, level: f64, facilities: Vec<usize>, source: Source) {
        self.slots[p - 1] = Some(Slot { level, facilities, source });
    }

    fn set_solution(&mut self, p: usize, sol: &CenterSolution, source: Source) {
        self.set(p, sol.level, sol.facilities.clone(), source);
    }

    fn finish(self, stats: SweepStats) -> CurveSolution {
        let dm = self.dm;
        let mut levels = Vec::with_capacity(self.slots.len());
        let mut records = Vec::with_capacity(self.slots.len());
        for (idx, slot) in self.slots.into_iter().enumerate() {
            let slot = slot.unwrap_or_else(|| panic!("p = {} left unassigned", idx + 1));
            levels.push(slot.level);
            records.push(CurveRecord {
                p: idx + 1,
                z: dm.to_radius(slot.level),
                facilities: Some(slot.facilities),
                source: slot.source,
            });
        }
        CurveSolution {
            curve: TradeoffCurve { instance: dm.name().to_string(), mode: dm.mode(), records },
            levels,
            stats,
        }
    }
}

/// Fills the trivial entries: p = 1, m - 1 and m.
fn trivial_entries(b: &mut Builder<'_>, ladder: &DistanceLadder) {
    let dm = b.dm;
    let m = dm.len();
    b.set_solution(1, &solve_p1(dm), Source::Trivial);
    if m >= 2 {
        let tail = trivial_tail_with(dm, ladder).expect("m >= 2");
        b.set_solution(m, &tail.full, Source::Trivial);
        if m >= 3 {
            b.set_solution(m - 1, &tail.merged, Source::Trivial);
        }
    }
}

/// Walks the ladder upwards from the closest-pair rung and assigns z_p for
/// p = `top` down to `bottom`. Each rung solves one covering problem; every
/// still-open p at least as large as the optimum cover size gets that rung.
/// `known` short-circuits the walk once it reaches a rung whose cover size is
/// already known to be at most `bottom - 1` (from enumeration).
fn ladder_sweep(
    b: &mut Builder<'_>,
    ladder: &DistanceLadder,
    top: usize,
    bottom: usize,
    known: Option<(usize, &[usize])>,
    stats: &mut SweepStats,
) -> Result<(), CpcError> {
    if top < bottom {
        return Ok(());
    }
    let dm = b.dm;
    let mut k = ladder.closest_pair_rank().expect("sweep needs m >= 2");
    let mut cm = coverage_matrix(dm, ladder.value(k));
    let mut p = top;
    let mut hint = None;
    while p >= bottom {
        if let Some((stop, facilities)) = known {
            if k >= stop {
                let level = ladder.value(stop);
                for q in (bottom..=p).rev() {
                    b.set(q, level, facilities.to_vec(), Source::Enumeration);
                }
                break;
            }
        }
        cm.extend_to_rung(ladder, k)?;
        let sol = solve_lscp(&cm, hint)?;
        stats.lscp_iterations += 1;
        hint = Some(sol.cardinality);
        while p >= bottom && sol.cardinality <= p {
            b.set(p, ladder.value(k), sol.facilities.clone(), Source::Lscp);
            p -= 1;
        }
        k += 1;
        assert!(k <= ladder.len() || p < bottom, "ladder exhausted with p = {p} open");
    }
    Ok(())
}

/// Complete curve by the iterative set-covering sweep.
pub fn solve_cpc_lscp(dm: &DistanceMatrix) -> CurveSolution {
    let ladder = unique_distance_ladder(dm);
    solve_cpc_lscp_with(dm, &ladder)
}

pub fn solve_cpc_lscp_with(dm: &DistanceMatrix, ladder: &DistanceLadder) -> CurveSolution {
    let m = dm.len();
    let mut b = Builder::new(dm);
    let mut stats = SweepStats::default();
    trivial_entries(&mut b, ladder);
    if m >= 4 {
        ladder_sweep(&mut b, ladder, m - 2, 2, None, &mut stats)
            .expect("coverage from a distance matrix is always feasible");
    }
    b.finish(stats)
}

/// Complete curve using enumeration for p = 2..=`enum_max` and the sweep for
/// the rest. The sweep stops at the rung of z_{enum_max}.
pub fn solve_cpc_lscp_e(
    dm: &DistanceMatrix,
    enum_max: usize,
    opts: &EnumOptions,
) -> Result<CurveSolution, CpcError> {
    let ladder = unique_distance_ladder(dm);
    solve_cpc_lscp_e_with(dm, &ladder, enum_max, opts)
}

pub fn solve_cpc_lscp_e_with(
    dm: &DistanceMatrix,
    ladder: &DistanceLadder,
    enum_max: usize,
    opts: &EnumOptions,
) -> Result<CurveSolution, CpcError> {
    if !(2..=4).contains(&enum_max) {
        return Err(CpcError::UnsupportedP(enum_max));
    }
    let m = dm.len();
    let mut b = Builder::new(dm);
    let mut stats = SweepStats::default();
    trivial_entries(&mut b, ladder);
    if m < 4 {
        return Ok(b.finish(stats));
    }
    let enum_top = enum_max.min(m - 2);
    let mut last = None;
    for p in 2..=enum_top {
        let sol = enumerate_center(dm, p, opts)?;
        stats.enumerated += sol.evaluated;
        b.set_solution(p, &sol, Source::Enumeration);
        last = Some(sol);
    }
    let last = last.expect("enum_top >= 2");
    let stop = ladder.rank_of(last.level).expect("enumerated value is a ladder value");
    ladder_sweep(&mut b, ladder, m - 2, enum_top + 1, Some((stop, &last.facilities)), &mut stats)?;
    Ok(b.finish(stats))
}

/// Single-p solve via the cheapest exact route.
pub fn solve_p(
    dm: &DistanceMatrix,
    p: usize,
    enum_max: usize,
    opts: &EnumOptions,
) -> Result<(CurveRecord, f64, SweepStats), CpcError> {
    let m = dm.len();
    if p == 0 || p > m {
        return Err(CpcError::ArgumentOutOfRange(format!("p = {p} is outside 1..={m}")));
    }
    let ladder = unique_distance_ladder(dm);
    let record = |sol: &CenterSolution, source| CurveRecord {
        p,
        z: sol.radius,
        facilities: Some(sol.facilities.clone()),
        source,
    };
    let mut stats = SweepStats::default();
    if p == 1 {
        let sol = solve_p1(dm);
        return Ok((record(&sol, Source::Trivial), sol.level, stats));
    }
    let tail = trivial_tail_with(dm, &ladder)?;
    if p == m {
        return Ok((record(&tail.full, Source::Trivial), 0.0, stats));
    }
    if p == m - 1 {
        return Ok((record(&tail.merged, Source::Trivial), tail.merged.level, stats));
    }
    if p <= enum_max {
        let sol = enumerate_center(dm, p, opts)?;
        stats.enumerated = sol.evaluated;
        return Ok((record(&sol, Source::Enumeration), sol.level, stats));
    }
    let mut b = Builder::new(dm);
    ladder_sweep(&mut b, &ladder, m - 2, p, None, &mut stats)?;
    let slot = b.slots[p - 1].take().expect("sweep reached p");
    let z = dm.to_radius(slot.level);
    Ok((CurveRecord { p, z, facilities: Some(slot.facilities), source: slot.source }, slot.level, stats))
}

/// Integer bracket on the real-distance optimum for one p.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub p: usize,
    pub lower: f64,
    pub upper: f64,
}

/// Rounding every distance up makes each integer z_p an upper bound on the
/// real z_p and z_p - 1 a lower bound.
pub fn integer_sandwich(curve_int: &TradeoffCurve) -> Result<Vec<Bracket>, CpcError> {
    if curve_int.mode != DistanceMode::Integer {
        return Err(CpcError::ModeMismatch { expected: DistanceMode::Integer });
    }
    Ok(curve_int
        .records
        .iter()
        .map(|r| Bracket { p: r.p, lower: (r.z - 1.0).max(0.0), upper: r.z })
        .collect())
}
