//! Exhaustive p-subset enumeration for small p.

use rayon::prelude::*;

use super::CenterSolution;
use crate::error::CpcError;
use crate::geometry::DistanceMatrix;

pub const DEFAULT_BUDGET: u128 = 10_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    /// Maximum number of p-subsets to evaluate.
    pub budget: u128,
    /// Worker threads; `None` uses rayon's global pool.
    pub threads: Option<usize>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, threads: None }
    }
}

/// `m choose p`, computed multiplicatively.
pub fn binomial(m: usize, p: usize) -> Result<u128, CpcError> {
    if p > m {
        return Err(CpcError::ArgumentOutOfRange(format!("p = {p} exceeds m = {m}")));
    }
    let k = p.min(m - p) as u128;
    let m = m as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (m - i) is divisible by (i + 1) at every step
        acc = acc
            .checked_mul(m - i)
            .ok_or_else(|| CpcError::ArgumentOutOfRange("binomial overflows u128".into()))?
            / (i + 1);
    }
    Ok(acc)
}

/// Best `(value, tuple)` over all p-subsets whose smallest index is `first`.
fn best_from(values: &[f64], m: usize, p: usize, first: usize) -> Option<(f64, Vec<usize>)> {
    let mut best: Option<(f64, Vec<usize>)> = None;
    let mut tuple = vec![first];
    let partial = values[first * m..(first + 1) * m].to_vec();
    descend(values, m, p, &partial, &mut tuple, &mut best);
    best
}

fn descend(
    values: &[f64],
    m: usize,
    p: usize,
    partial: &[f64],
    tuple: &mut Vec<usize>,
    best: &mut Option<(f64, Vec<usize>)>,
) {
    let last = *tuple.last().unwrap();
    let remaining = p - tuple.len();
    if remaining == 1 {
        for c in (last + 1)..m {
            let col = &values[c * m..(c + 1) * m];
            let bound = best.as_ref().map_or(f64::INFINITY, |b| b.0);
            let mut worst = 0.0f64;
            for (a, b) in partial.iter().zip(col) {
                let v = a.min(*b);
                if v > worst {
                    worst = v;
                    if worst >= bound {
                        break;
                    }
                }
            }
            if worst < bound {
                tuple.push(c);
                *best = Some((worst, tuple.clone()));
                tuple.pop();
            }
        }
        return;
    }
    for c in (last + 1)..=(m - remaining) {
        let col = &values[c * m..(c + 1) * m];
        let next: Vec<f64> = partial.iter().zip(col).map(|(a, b)| a.min(*b)).collect();
        tuple.push(c);
        descend(values, m, p, &next, tuple, best);
        tuple.pop();
    }
}

fn better(a: &(f64, Vec<usize>), b: &(f64, Vec<usize>)) -> bool {
    a.0 < b.0 || (a.0 == b.0 && a.1 < b.1)
}

/// Exact z_p by evaluating every p-subset of sites, for p in 2..=4.
/// Ties go to the lexicographically smallest index tuple.
pub fn enumerate_center(
    dm: &DistanceMatrix,
    p: usize,
    opts: &EnumOptions,
) -> Result<CenterSolution, CpcError> {
    if !(2..=4).contains(&p) {
        return Err(CpcError::UnsupportedP(p));
    }
    let m = dm.len();
    if p > m {
        return Err(CpcError::ArgumentOutOfRange(format!("p = {p} exceeds m = {m}")));
    }
    let needed = binomial(m, p)?;
    if needed > opts.budget {
        return Err(CpcError::BudgetExceeded { needed, budget: opts.budget });
    }
    let mut values = vec![0.0; m * m];
    for i in 0..m {
        for j in 0..m {
            values[i * m + j] = dm.value(i, j);
        }
    }
    let firsts = 0..=(m - p);
    let pick = |acc: Option<(f64, Vec<usize>)>, c: Option<(f64, Vec<usize>)>| match (acc, c) {
        (Some(a), Some(c)) => Some(if better(&c, &a) { c } else { a }),
        (a, c) => a.or(c),
    };
    let best = match opts.threads {
        Some(1) => firsts.map(|f| best_from(&values, m, p, f)).fold(None, pick),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CpcError::ArgumentOutOfRange(format!("thread pool: {e}")))?;
            pool.install(|| {
                firsts.into_par_iter().map(|f| best_from(&values, m, p, f)).reduce(|| None, pick)
            })
        }
        None => firsts.into_par_iter().map(|f| best_from(&values, m, p, f)).reduce(|| None, pick),
    };
    let (level, facilities) = best.expect("at least one subset");
    Ok(CenterSolution { level, radius: dm.to_radius(level), facilities, evaluated: needed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{squared_distance_matrix, PointSet};

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(55, 2).unwrap(), 1485);
        assert_eq!(binomial(5, 3).unwrap(), 10);
        assert_eq!(binomial(9, 0).unwrap(), 1);
        assert_eq!(binomial(9, 9).unwrap(), 1);
        assert_eq!(binomial(100, 50).unwrap(), 100891344545564193334812497256);
        assert!(matches!(binomial(3, 4), Err(CpcError::ArgumentOutOfRange(_))));
    }

    #[test]
    fn collinear_pairs() {
        let dm = squared_distance_matrix(&PointSet::new(&[(0.0, 0.0), (1.0, 0.0), (3.0, 0.0)], "t").unwrap());
        let sol = enumerate_center(&dm, 2, &EnumOptions::default()).unwrap();
        assert_eq!(sol.level, 1.0);
        assert_eq!(sol.facilities, vec![0, 2]);
        assert_eq!(sol.evaluated, 3);
    }

    #[test]
    fn errors() {
        let dm = squared_distance_matrix(&PointSet::new(&[(0.0, 0.0), (1.0, 0.0), (3.0, 0.0)], "t").unwrap());
        assert_eq!(enumerate_center(&dm, 5, &EnumOptions::default()), Err(CpcError::UnsupportedP(5)));
        assert_eq!(enumerate_center(&dm, 1, &EnumOptions::default()), Err(CpcError::UnsupportedP(1)));
        let tight = EnumOptions { budget: 2, threads: Some(1) };
        assert_eq!(
            enumerate_center(&dm, 2, &tight),
            Err(CpcError::BudgetExceeded { needed: 3, budget: 2 })
        );
    }
}
