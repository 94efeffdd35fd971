//! Location set covering: coverage matrices for a radius and an exact
//! branch-and-bound solver for the minimum number of covering sites.

mod bits;
mod reduce;
mod search;

pub use bits::Bits;
pub use reduce::{reduce, ReducedInstance};

use crate::error::SetCoverError;
use crate::geometry::{DistanceLadder, DistanceMatrix};

/// Binary coverage matrix `a_ij = [d_ij <= radius]`, held both as per-site
/// and per-demand bit vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageMatrix {
    radius: f64,
    cover_by_site: Vec<Bits>,
    cover_of_demand: Vec<Bits>,
}

impl CoverageMatrix {
    /// Builds a matrix from explicit per-site demand sets. The radius is
    /// recorded as 0; such matrices cannot be extended from a distance matrix.
    pub fn from_site_sets(n_demands: usize, sites: &[Vec<usize>]) -> Self {
        let cover_by_site: Vec<Bits> =
            sites.iter().map(|s| Bits::from_indices(n_demands, s.iter().copied())).collect();
        let mut cover_of_demand = vec![Bits::new(sites.len()); n_demands];
        for (j, s) in sites.iter().enumerate() {
            for &i in s {
                cover_of_demand[i].insert(j);
            }
        }
        Self { radius: 0.0, cover_by_site, cover_of_demand }
    }

    pub fn sites(&self) -> usize {
        self.cover_by_site.len()
    }

    pub fn demands(&self) -> usize {
        self.cover_of_demand.len()
    }

    /// Current covering threshold as a canonical value (squared in real mode).
    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn covers(&self, site: usize, demand: usize) -> bool {
        self.cover_by_site[site].contains(demand)
    }

    pub fn cover_by_site(&self) -> &[Bits] {
        &self.cover_by_site
    }

    pub fn cover_of_demand(&self) -> &[Bits] {
        &self.cover_of_demand
    }

    #[inline]
    fn set(&mut self, demand: usize, site: usize) {
        self.cover_by_site[site].insert(demand);
        self.cover_of_demand[demand].insert(site);
    }

    /// Grows the radius in place, flipping only the cells that newly fall
    /// inside it.
    pub fn extend(&mut self, dm: &DistanceMatrix, new_radius: f64) -> Result<(), SetCoverError> {
        if new_radius < self.radius {
            return Err(SetCoverError::RadiusDecrease { current: self.radius, new: new_radius });
        }
        let m = dm.len();
        for i in 0..m {
            for j in 0..m {
                let d = dm.value(i, j);
                if d > self.radius && d <= new_radius {
                    self.set(i, j);
                }
            }
        }
        self.radius = new_radius;
        Ok(())
    }

    /// Grows the radius to ladder rung `k` using the ladder's per-rung cell
    /// lists. The matrix must have been built from the same distances.
    pub fn extend_to_rung(&mut self, ladder: &DistanceLadder, k: usize) -> Result<(), SetCoverError> {
        let target = ladder.value(k);
        if target < self.radius {
            return Err(SetCoverError::RadiusDecrease { current: self.radius, new: target });
        }
        let start = ladder.floor_rank(self.radius).map_or(0, |r| r + 1);
        for rung in start..=k {
            for &(i, j) in ladder.cells_at(rung) {
                self.set(i as usize, j as usize);
                self.set(j as usize, i as usize);
            }
        }
        self.radius = target;
        Ok(())
    }

    /// True when the given sites jointly cover every demand.
    pub fn is_cover(&self, facilities: &[usize]) -> bool {
        let mut covered = Bits::new(self.demands());
        for &j in facilities {
            covered.union_with(&self.cover_by_site[j]);
        }
        covered.count() == self.demands()
    }

    fn instance(&self) -> search::Instance {
        search::Instance { rows: self.cover_of_demand.clone(), cols: self.cover_by_site.clone() }
    }
}

/// Coverage at `radius` (a canonical value: squared distance in real mode).
pub fn coverage_matrix(dm: &DistanceMatrix, radius: f64) -> CoverageMatrix {
    let m = dm.len();
    let mut cm = CoverageMatrix {
        radius,
        cover_by_site: vec![Bits::new(m); m],
        cover_of_demand: vec![Bits::new(m); m],
    };
    for i in 0..m {
        for j in 0..m {
            if dm.value(i, j) <= radius {
                cm.set(i, j);
            }
        }
    }
    cm
}

/// Functional form of [`CoverageMatrix::extend`].
pub fn extend_coverage(
    mut cm: CoverageMatrix,
    dm: &DistanceMatrix,
    new_radius: f64,
) -> Result<CoverageMatrix, SetCoverError> {
    cm.extend(dm, new_radius)?;
    Ok(cm)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    /// Located sites, ascending.
    pub facilities: Vec<usize>,
    pub cardinality: usize,
    /// Lower bound proven at termination; equals `cardinality` for exact solves.
    pub proof: usize,
}

impl CoverSolution {
    fn exact(mut facilities: Vec<usize>) -> Self {
        facilities.sort_unstable();
        let n = facilities.len();
        Self { facilities, cardinality: n, proof: n }
    }
}

/// Greedy cover: repeatedly take the site covering the most uncovered
/// demands, lowest index on ties.
pub fn greedy_cover(cm: &CoverageMatrix) -> CoverSolution {
    let picked = search::greedy(&cm.instance(), &Bits::full(cm.demands()));
    let mut sol = CoverSolution::exact(picked);
    sol.proof = disjoint_rows_bound(cm);
    sol
}

/// Number of demands with pairwise-disjoint covering-site sets, picked
/// greedily by ascending degree. Every cover needs at least that many sites.
pub fn disjoint_rows_bound(cm: &CoverageMatrix) -> usize {
    search::disjoint_rows(&cm.instance().rows, &Bits::full(cm.demands()), &Bits::new(cm.sites())).0
}

/// Exact minimum cover. `ub_hint` is the size of some cover known to be
/// feasible for this matrix; an invalid hint only costs a second search.
pub fn solve_lscp(cm: &CoverageMatrix, ub_hint: Option<usize>) -> Result<CoverSolution, SetCoverError> {
    let red = reduce(cm)?;
    let inst = red.instance();
    let all_rows = Bits::full(inst.rows.len());
    let greedy = search::greedy(inst, &all_rows);
    let forced = red.forced().len();
    let target = match ub_hint {
        Some(h) => greedy.len().min(h.saturating_sub(forced) + 1),
        None => greedy.len(),
    };
    let mut best = search::branch_and_bound(inst, target);
    if best.is_none() && target < greedy.len() {
        best = search::branch_and_bound(inst, greedy.len());
    }
    let local = best.unwrap_or(greedy);
    let mut facilities = red.forced().to_vec();
    facilities.extend(local.into_iter().map(|c| red.site_index(c)));
    Ok(CoverSolution::exact(facilities))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{squared_distance_matrix, unique_distance_ladder, PointSet};

    fn collinear() -> DistanceMatrix {
        squared_distance_matrix(&PointSet::new(&[(0.0, 0.0), (1.0, 0.0), (3.0, 0.0)], "three").unwrap())
    }

    fn site_sets(cm: &CoverageMatrix) -> Vec<Vec<usize>> {
        cm.cover_by_site().iter().map(|b| b.ones().collect()).collect()
    }

    #[test]
    fn collinear_coverage() {
        let dm = collinear();
        let cm = coverage_matrix(&dm, 1.0);
        assert_eq!(site_sets(&cm), vec![vec![0, 1], vec![0, 1], vec![2]]);
        let zero = coverage_matrix(&dm, 0.0);
        assert_eq!(site_sets(&zero), vec![vec![0], vec![1], vec![2]]);
        let top = coverage_matrix(&dm, 9.0);
        assert!(top.cover_by_site().iter().all(|b| b.count() == 3));
        for (i, row) in cm.cover_of_demand().iter().enumerate() {
            for j in 0..3 {
                assert_eq!(row.contains(j), cm.covers(j, i));
            }
        }
    }

    #[test]
    fn extend_examples() {
        let dm = collinear();
        let mut cm = coverage_matrix(&dm, 1.0);
        cm.extend(&dm, 4.0).unwrap();
        assert_eq!(site_sets(&cm), vec![vec![0, 1], vec![0, 1, 2], vec![1, 2]]);
        assert_eq!(cm, coverage_matrix(&dm, 4.0));
        let same = extend_coverage(cm.clone(), &dm, 4.0).unwrap();
        assert_eq!(same, cm);
        assert!(matches!(cm.extend(&dm, 1.0), Err(SetCoverError::RadiusDecrease { .. })));
    }

    #[test]
    fn rung_extension_matches_fresh_build() {
        let dm = collinear();
        let ladder = unique_distance_ladder(&dm);
        let mut cm = coverage_matrix(&dm, 0.0);
        for k in 0..ladder.len() {
            cm.extend_to_rung(&ladder, k).unwrap();
            assert_eq!(cm, coverage_matrix(&dm, ladder.value(k)));
        }
    }

    #[test]
    fn greedy_and_bound_examples() {
        let dm = collinear();
        assert_eq!(greedy_cover(&coverage_matrix(&dm, 9.0)).cardinality, 1);
        assert_eq!(greedy_cover(&coverage_matrix(&dm, 0.0)).cardinality, 3);
        assert_eq!(greedy_cover(&coverage_matrix(&dm, 1.0)).facilities, vec![0, 2]);
        assert_eq!(disjoint_rows_bound(&coverage_matrix(&dm, 0.0)), 3);
        assert_eq!(disjoint_rows_bound(&coverage_matrix(&dm, 9.0)), 1);
    }

    #[test]
    fn lscp_identity_and_hint() {
        let dm = collinear();
        let sol = solve_lscp(&coverage_matrix(&dm, 0.0), None).unwrap();
        assert_eq!(sol.cardinality, 3);
        assert_eq!(sol.facilities, vec![0, 1, 2]);
        let cm = coverage_matrix(&dm, 1.0);
        for hint in [None, Some(0), Some(1), Some(2), Some(3), Some(10)] {
            let sol = solve_lscp(&cm, hint).unwrap();
            assert_eq!(sol.cardinality, 2, "hint {hint:?}");
            assert!(cm.is_cover(&sol.facilities));
        }
    }

    #[test]
    fn uncoverable_demand_is_reported() {
        let cm = CoverageMatrix::from_site_sets(3, &[vec![0], vec![1]]);
        assert_eq!(solve_lscp(&cm, None), Err(SetCoverError::InfeasibleRow { demand: 2 }));
    }
}
