mod common;

use common::*;
use cpcenter::error::SetCoverError;
use cpcenter::setcover::{disjoint_rows_bound, greedy_cover, reduce, solve_lscp, CoverageMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random site sets with every demand covered by at least one site.
fn random_sets(r: &mut ChaCha8Rng, n: usize, m: usize, density: f64) -> Vec<Vec<usize>> {
    let mut sets: Vec<Vec<usize>> =
        (0..m).map(|_| (0..n).filter(|_| r.random_bool(density)).collect()).collect();
    for i in 0..n {
        if !sets.iter().any(|s| s.contains(&i)) {
            let j = r.random_range(0..m);
            sets[j].push(i);
            sets[j].sort_unstable();
        }
    }
    sets
}

fn covers(n: usize, sets: &[Vec<usize>], pick: &[usize]) -> bool {
    (0..n).all(|i| pick.iter().any(|&j| sets[j].contains(&i)))
}

#[test]
fn exact_on_random_matrices() {
    let mut r = rng(23);
    let mut checked = 0;
    for case in 0..160 {
        let m = 1 + case % 15;
        let n = 1 + (case * 7) % 15;
        let density = [0.1, 0.2, 0.35, 0.5][case % 4];
        let sets = random_sets(&mut r, n, m, density);
        let cm = CoverageMatrix::from_site_sets(n, &sets);
        let opt = brute_force_cover(n, &sets).unwrap();
        let sol = solve_lscp(&cm, None).unwrap();
        assert_eq!(sol.cardinality, opt, "case {case}: {sets:?}");
        assert_eq!(sol.facilities.len(), opt);
        assert!(covers(n, &sets, &sol.facilities));
        let g = greedy_cover(&cm);
        assert!(covers(n, &sets, &g.facilities));
        let lb = disjoint_rows_bound(&cm);
        assert!(g.cardinality >= opt && opt >= lb, "case {case}: greedy {} opt {opt} lb {lb}", g.cardinality);
        checked += 1;
    }
    assert!(checked >= 100);
}

#[test]
fn hints_never_change_the_optimum() {
    let mut r = rng(29);
    for case in 0..80 {
        let m = 2 + case % 14;
        let n = 2 + (case * 5) % 14;
        let sets = random_sets(&mut r, n, m, 0.3);
        let cm = CoverageMatrix::from_site_sets(n, &sets);
        let opt = brute_force_cover(n, &sets).unwrap();
        for hint in [0, 1, opt.saturating_sub(1), opt, opt + 1, m + 3] {
            let sol = solve_lscp(&cm, Some(hint)).unwrap();
            assert_eq!(sol.cardinality, opt, "case {case}, hint {hint}");
            assert!(covers(n, &sets, &sol.facilities));
        }
    }
}

#[test]
fn reductions_preserve_the_optimum() {
    let mut r = rng(31);
    for case in 0..120 {
        let m = 1 + case % 15;
        let n = 1 + (case * 3) % 15;
        let sets = random_sets(&mut r, n, m, 0.25);
        let cm = CoverageMatrix::from_site_sets(n, &sets);
        let opt = brute_force_cover(n, &sets).unwrap();
        let red = reduce(&cm).unwrap();
        let local = red.matrix();
        let mut pick = red.forced().to_vec();
        if !red.is_empty() {
            let local_sets: Vec<Vec<usize>> = local.cover_by_site().iter().map(|b| b.ones().collect()).collect();
            let nd = local.demands();
            let ns = local_sets.len();
            let best = (0u32..1 << ns)
                .filter(|mask| {
                    (0..nd).all(|i| (0..ns).any(|j| mask >> j & 1 == 1 && local_sets[j].contains(&i)))
                })
                .min_by_key(|mask| (mask.count_ones(), *mask))
                .expect("reduced instance stays feasible");
            pick.extend((0..ns).filter(|j| best >> j & 1 == 1).map(|j| red.site_index(j)));
        }
        assert_eq!(pick.len(), opt, "case {case}: {sets:?}");
        assert!(covers(n, &sets, &pick), "case {case}: lifted cover misses a demand");
    }
}

#[test]
fn uncovered_demand_is_infeasible() {
    let cm = CoverageMatrix::from_site_sets(3, &[vec![0], vec![2]]);
    assert_eq!(solve_lscp(&cm, None), Err(SetCoverError::InfeasibleRow { demand: 1 }));
    assert!(reduce(&cm).is_err());
}
