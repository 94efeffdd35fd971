//! Row, column and essential-site reductions, applied to a fixpoint.

use super::bits::Bits;
use super::search::Instance;
use super::CoverageMatrix;
use crate::error::SetCoverError;

/// What is left of a covering instance after reduction, plus the sites the
/// reduction forced into every optimal cover.
#[derive(Debug, Clone)]
pub struct ReducedInstance {
    forced: Vec<usize>,
    demands: Vec<usize>,
    sites: Vec<usize>,
    inst: Instance,
}

impl ReducedInstance {
    /// Original indices of the sites fixed into the solution, in the order
    /// they were forced.
    pub fn forced(&self) -> &[usize] {
        &self.forced
    }

    /// Original indices of the surviving demands.
    pub fn demands(&self) -> &[usize] {
        &self.demands
    }

    /// Original indices of the surviving sites.
    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    pub fn site_index(&self, local: usize) -> usize {
        self.sites[local]
    }

    pub fn is_empty(&self) -> bool {
        self.demands.is_empty()
    }

    /// The reduced matrix as a standalone coverage matrix over local indices.
    pub fn matrix(&self) -> CoverageMatrix {
        let sets: Vec<Vec<usize>> = self.inst.cols.iter().map(|c| c.ones().collect()).collect();
        CoverageMatrix::from_site_sets(self.demands.len(), &sets)
    }

    pub(super) fn instance(&self) -> &Instance {
        &self.inst
    }
}

pub fn reduce(cm: &CoverageMatrix) -> Result<ReducedInstance, SetCoverError> {
    let n = cm.demands();
    let m = cm.sites();
    let rows = cm.cover_of_demand();
    let cols = cm.cover_by_site();
    let mut live_rows = Bits::full(n);
    let mut live_cols = Bits::full(m);
    let mut forced = Vec::new();

    loop {
        let mut changed = false;

        // Essential sites.
        for (r, row) in rows.iter().enumerate() {
            if !live_rows.contains(r) {
                continue;
            }
            let avail = row.and(&live_cols);
            match avail.count() {
                0 => return Err(SetCoverError::InfeasibleRow { demand: r }),
                1 => {
                    let c = avail.first().unwrap();
                    forced.push(c);
                    live_cols.remove(c);
                    live_rows.difference_with(&cols[c]);
                    changed = true;
                }
                _ => {}
            }
        }

        // Row domination: a demand whose site set contains another live
        // demand's site set is covered whenever that demand is.
        let row_sets: Vec<(usize, Bits)> =
            live_rows.ones().map(|r| (r, rows[r].and(&live_cols))).collect();
        let row_sizes: Vec<usize> = row_sets.iter().map(|(_, s)| s.count()).collect();
        let mut dead = vec![false; row_sets.len()];
        for a in 0..row_sets.len() {
            for b in 0..row_sets.len() {
                if a == b || dead[b] || row_sizes[a] < row_sizes[b] {
                    continue;
                }
                if row_sizes[a] == row_sizes[b] && a < b {
                    // equal sets: keep the lower index
                    continue;
                }
                if row_sets[b].1.is_subset(&row_sets[a].1) {
                    dead[a] = true;
                    break;
                }
            }
        }
        for (k, &(r, _)) in row_sets.iter().enumerate() {
            if dead[k] {
                live_rows.remove(r);
                changed = true;
            }
        }

        // Column domination: a site whose live demands are a subset of
        // another live site's is never needed.
        let col_sets: Vec<(usize, Bits)> =
            live_cols.ones().map(|c| (c, cols[c].and(&live_rows))).collect();
        let col_sizes: Vec<usize> = col_sets.iter().map(|(_, s)| s.count()).collect();
        let mut dead = vec![false; col_sets.len()];
        for a in 0..col_sets.len() {
            if col_sizes[a] == 0 {
                dead[a] = true;
                continue;
            }
            for b in 0..col_sets.len() {
                if a == b || dead[b] || col_sizes[a] > col_sizes[b] {
                    continue;
                }
                if col_sizes[a] == col_sizes[b] && a < b {
                    continue;
                }
                if col_sets[a].1.is_subset(&col_sets[b].1) {
                    dead[a] = true;
                    break;
                }
            }
        }
        for (k, &(c, _)) in col_sets.iter().enumerate() {
            if dead[k] {
                live_cols.remove(c);
                changed = true;
            }
        }

        if !changed {
            break;
        }
    }

    let demands: Vec<usize> = live_rows.ones().collect();
    let sites: Vec<usize> = live_cols.ones().collect();
    let mut local_rows = vec![Bits::new(sites.len()); demands.len()];
    let mut local_cols = vec![Bits::new(demands.len()); sites.len()];
    for (ri, &r) in demands.iter().enumerate() {
        for (ci, &c) in sites.iter().enumerate() {
            if rows[r].contains(c) {
                local_rows[ri].insert(ci);
                local_cols[ci].insert(ri);
            }
        }
    }
    Ok(ReducedInstance { forced, demands, sites, inst: Instance { rows: local_rows, cols: local_cols } })
}
