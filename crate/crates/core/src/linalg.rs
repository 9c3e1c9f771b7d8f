//! Dense linear algebra over the rationals and over word-sized prime fields.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::modp;
use crate::poly::Rational;

/// Row-reduce in place; returns the pivot column of each pivot row.
fn row_reduce(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = Rational::one() / &rows[r][col];
        for v in rows[r].iter_mut().skip(col) {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let Some(ncols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut work = rows.to_vec();
    row_reduce(&mut work, ncols).len()
}

/// Solve `M c = b` exactly where `M` is given by rows. The system may be
/// overdetermined but must be consistent with a unique solution.
pub fn solve(rows: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>> {
    if rows.len() != rhs.len() {
        return Err(Error::Dimension { expected: rows.len(), found: rhs.len() });
    }
    let ncols = rows.first().map(Vec::len).unwrap_or(0);
    let mut aug: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return Err(Error::NotInSpan("inconsistent linear system".into()));
    }
    if pivots.len() < ncols {
        return Err(Error::RankDeficient(format!("rank {} < {} unknowns", pivots.len(), ncols)));
    }
    Ok((0..ncols).map(|i| aug[i][ncols].clone()).collect())
}

/// Outcome of a solve over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModSolution {
    Unique(Vec<u64>),
    Inconsistent,
    RankDeficient(usize),
}

/// Solve an (over)determined system modulo the prime `p`.
pub fn solve_mod(rows: &[Vec<u64>], rhs: &[u64], p: u64) -> ModSolution {
    let ncols = rows.first().map(Vec::len).unwrap_or(0);
    let mut aug: Vec<Vec<u64>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            let mut r = row.clone();
            r.push(b);
            r
        })
        .collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for col in 0..=ncols {
        if r == aug.len() {
            break;
        }
        let Some(found) = (r..aug.len()).find(|&i| aug[i][col] != 0) else {
            continue;
        };
        aug.swap(r, found);
        let inv = modp::inv(aug[r][col], p);
        for v in aug[r].iter_mut().skip(col) {
            *v = modp::mul(*v, inv, p);
        }
        let pivot_row = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (v, &pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                if pv != 0 {
                    *v = modp::sub(*v, modp::mul(factor, pv, p), p);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if pivots.last() == Some(&ncols) {
        return ModSolution::Inconsistent;
    }
    if pivots.len() < ncols {
        return ModSolution::RankDeficient(pivots.len());
    }
    ModSolution::Unique((0..ncols).map(|i| aug[i][ncols]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn solves_overdetermined_consistent_system() {
        // x + y = 3, x - y = 1, 2x = 4
        let rows = vec![vec![q(1), q(1)], vec![q(1), q(-1)], vec![q(2), q(0)]];
        let sol = solve(&rows, &[q(3), q(1), q(4)]).unwrap();
        assert_eq!(sol, vec![q(2), q(1)]);
    }

    #[test]
    fn detects_inconsistency_and_rank_loss() {
        let rows = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(matches!(solve(&rows, &[q(1), q(3)]), Err(Error::NotInSpan(_))));
        assert!(matches!(solve(&rows, &[q(1), q(2)]), Err(Error::RankDeficient(_))));
        assert_eq!(rank(&rows), 1);
    }

    #[test]
    fn modular_solver_agrees() {
        let p = 1_000_000_007;
        let rows = vec![vec![1, 1], vec![1, p - 1], vec![2, 0]];
        assert_eq!(solve_mod(&rows, &[3, 1, 4], p), ModSolution::Unique(vec![2, 1]));
        assert_eq!(solve_mod(&rows, &[3, 1, 5], p), ModSolution::Inconsistent);
        let flat = vec![vec![1, 1], vec![2, 2]];
        assert_eq!(solve_mod(&flat, &[1, 2], p), ModSolution::RankDeficient(1));
    }
}
