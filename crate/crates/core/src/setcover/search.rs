//! Greedy seed, disjoint-row lower bound and depth-first branch-and-bound.

use super::bits::Bits;

/// Covering instance in both orientations: `rows[r]` holds the columns
/// covering row `r`, `cols[c]` the rows column `c` covers.
#[derive(Debug, Clone)]
pub struct Instance {
    pub rows: Vec<Bits>,
    pub cols: Vec<Bits>,
}

/// Greedy cover of the rows in `uncovered`. Returns column indices in pick order.
pub fn greedy(inst: &Instance, uncovered: &Bits) -> Vec<usize> {
    let mut left = uncovered.clone();
    let mut picked = Vec::new();
    while !left.none() {
        let mut best = (0, usize::MAX);
        for (c, col) in inst.cols.iter().enumerate() {
            let gain = col.and_count(&left);
            if gain > best.0 {
                best = (gain, c);
            }
        }
        let c = best.1;
        if c == usize::MAX {
            // remaining rows are uncoverable; callers reduce first, so this
            // only happens on infeasible input
            break;
        }
        picked.push(c);
        left.difference_with(&inst.cols[c]);
    }
    picked
}

/// Disjoint-row bound over the rows in `uncovered`, ignoring `excluded`
/// columns. Returns the bound and the uncovered row with the fewest available
/// columns (lowest index on ties), or `usize::MAX` as the bound if some row
/// has no available column at all.
pub fn disjoint_rows(rows: &[Bits], uncovered: &Bits, excluded: &Bits) -> (usize, Option<usize>) {
    let mut order: Vec<(usize, usize)> = Vec::new();
    for r in uncovered.ones() {
        let deg = rows[r].count() - rows[r].and_count(excluded);
        if deg == 0 {
            return (usize::MAX, Some(r));
        }
        order.push((deg, r));
    }
    order.sort_unstable();
    let branch = order.first().map(|&(_, r)| r);
    let mut used = Bits::new(excluded.len());
    let mut bound = 0;
    for &(_, r) in &order {
        let avail = rows[r].and_not(excluded);
        if !avail.intersects(&used) {
            used.union_with(&avail);
            bound += 1;
        }
    }
    (bound, branch)
}

struct Search<'a> {
    inst: &'a Instance,
    limit: usize,
    chosen: Vec<usize>,
    best: Option<Vec<usize>>,
}

impl Search<'_> {
    fn dfs(&mut self, uncovered: &Bits, excluded: &Bits) {
        if uncovered.none() {
            if self.chosen.len() < self.limit {
                self.limit = self.chosen.len();
                self.best = Some(self.chosen.clone());
            }
            return;
        }
        if self.chosen.len() + 1 >= self.limit {
            return;
        }
        let (bound, branch) = disjoint_rows(&self.inst.rows, uncovered, excluded);
        if bound == usize::MAX || self.chosen.len() + bound >= self.limit {
            return;
        }
        let r = branch.expect("uncovered is non-empty");
        let mut candidates: Vec<(usize, usize)> = self.inst.rows[r]
            .and_not(excluded)
            .ones()
            .map(|c| (self.inst.cols[c].and_count(uncovered), c))
            .collect();
        candidates.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut excl = excluded.clone();
        for (_, c) in candidates {
            if self.chosen.len() + 1 >= self.limit {
                break;
            }
            self.chosen.push(c);
            let next = uncovered.and_not(&self.inst.cols[c]);
            self.dfs(&next, &excl);
            self.chosen.pop();
            excl.insert(c);
        }
    }
}

/// Searches for a cover with strictly fewer than `limit` columns and returns
/// the smallest one found (which is optimal if any exists).
pub fn branch_and_bound(inst: &Instance, limit: usize) -> Option<Vec<usize>> {
    let n_rows = inst.rows.len();
    let n_cols = inst.cols.len();
    let mut s = Search { inst, limit, chosen: Vec::new(), best: None };
    s.dfs(&Bits::full(n_rows), &Bits::new(n_cols));
    s.best
}
