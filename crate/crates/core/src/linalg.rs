//! Fraction-free Gaussian elimination over the integers.
//!
//! Bareiss' update keeps every intermediate entry equal to a minor of the
//! input matrix, so all divisions are exact and entries grow only as fast as
//! determinants do. Back-substitution happens once, in exact rationals.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Outcome of solving `M x = b` for a possibly overdetermined `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    /// Full column rank and consistent: the single solution.
    Unique(Vec<BigRational>),
    /// Some equation contradicts the others.
    Inconsistent,
    /// Consistent but the columns are dependent, so infinitely many solutions.
    RankDeficient { rank: usize },
}

/// Upper-trapezoidal form of an augmented matrix after Bareiss elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivot_cols: Vec<usize>,
    swaps: usize,
}

fn eliminate(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let m = rows.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivot_cols = Vec::new();
    let mut swaps = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            rows.swap(p, r);
            swaps += 1;
        }
        let (top, bottom) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in bottom.iter_mut() {
            let factor = core::mem::take(&mut row[c]);
            let width = row.len();
            for j in c + 1..width {
                let mut v = pivot * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v -= &factor * &pivot_row[j];
                }
                if !prev.is_one() {
                    debug_assert!(v.is_multiple_of(&prev));
                    v /= &prev;
                }
                row[j] = v;
            }
        }
        prev = rows[r][c].clone();
        pivot_cols.push(c);
        r += 1;
    }
    Echelon {
        rows,
        pivot_cols,
        swaps,
    }
}

/// Solves `matrix · x = rhs` exactly. `matrix` is `m × n` with `m` rows of
/// equal length; any `m` is accepted.
pub fn solve_exact(matrix: &[Vec<BigInt>], rhs: &[BigInt]) -> LinearSolution {
    assert_eq!(matrix.len(), rhs.len(), "one right-hand side per equation");
    let n = matrix.first().map_or(0, Vec::len);
    let rows: Vec<Vec<BigInt>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), n, "ragged matrix");
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let ech = eliminate(rows, n);
    let rank = ech.pivot_cols.len();
    // Rows below the rank are zero outside the augmented column.
    if ech.rows[rank..].iter().any(|row| !row[n].is_zero()) {
        return LinearSolution::Inconsistent;
    }
    if rank < n {
        return LinearSolution::RankDeficient { rank };
    }
    let mut x: Vec<BigRational> = alloc::vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        let row = &ech.rows[k];
        let mut acc = BigRational::from_integer(row[n].clone());
        for j in k + 1..n {
            if !row[j].is_zero() {
                acc -= BigRational::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[k] = acc / BigRational::from_integer(row[k].clone());
    }
    LinearSolution::Unique(x)
}

/// Determinant of a square integer matrix.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let ech = eliminate(matrix.to_vec(), n);
    if ech.pivot_cols.len() < n {
        return BigInt::zero();
    }
    let det = ech.rows[n - 1][n - 1].clone();
    if ech.swaps % 2 == 1 {
        -det
    } else {
        det
    }
}

/// Converts a rational vector to integers, or `None` if any entry has a
/// nontrivial denominator.
pub fn integral(values: &[BigRational]) -> Option<Vec<BigInt>> {
    values
        .iter()
        .map(|v| v.is_integer().then(|| v.to_integer()))
        .collect()
}

/// Converts a rational vector to `i64`, or `None` on a fraction or overflow.
pub fn integral_i64(values: &[BigRational]) -> Option<Vec<i64>> {
    use num_traits::ToPrimitive;
    integral(values)?.iter().map(ToPrimitive::to_i64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

fn big_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn solves_square_system() {
        let m = big_matrix(&[&[2, -1], &[-1, 2]]);
        let sol = solve_exact(&m, &big(&[1, 0]));
        assert_eq!(sol, LinearSolution::Unique(vec![q(2, 3), q(1, 3)]));
    }

    #[test]
    fn overdetermined_consistent_and_inconsistent() {
        let m = big_matrix(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            solve_exact(&m, &big(&[1, 2, 3])),
            LinearSolution::Unique(vec![q(1, 1), q(2, 1)])
        );
        assert_eq!(
            solve_exact(&m, &big(&[1, 2, 4])),
            LinearSolution::Inconsistent
        );
    }

    #[test]
    fn rank_deficient_is_reported() {
        let m = big_matrix(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            solve_exact(&m, &big(&[1, 2])),
            LinearSolution::RankDeficient { rank: 1 }
        );
        assert_eq!(solve_exact(&m, &big(&[1, 3])), LinearSolution::Inconsistent);
    }

    #[test]
    fn needs_row_swap_and_skipped_column() {
        let m = big_matrix(&[&[0, 0, 1], &[0, 1, 1], &[0, 2, 5]]);
        assert_eq!(
            solve_exact(&m, &big(&[1, 1, 5])),
            LinearSolution::RankDeficient { rank: 2 }
        );
        assert_eq!(solve_exact(&m, &big(&[1, 1, 1])), LinearSolution::Inconsistent);
        let m = big_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            solve_exact(&m, &big(&[3, 4])),
            LinearSolution::Unique(vec![q(4, 1), q(3, 1)])
        );
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&big_matrix(&[&[2, -1], &[-1, 2]])), 3.into());
        assert_eq!(determinant(&big_matrix(&[&[0, 1], &[1, 0]])), (-1).into());
        assert_eq!(determinant(&big_matrix(&[&[2, -2], &[-2, 2]])), 0.into());
        let a4 = big_matrix(&[
            &[2, -1, 0, 0],
            &[-1, 2, -1, 0],
            &[0, -1, 2, -1],
            &[0, 0, -1, 2],
        ]);
        assert_eq!(determinant(&a4), 5.into());
    }

    #[test]
    fn integrality() {
        assert_eq!(integral_i64(&[q(4, 2), q(-3, 1)]), Some(vec![2, -3]));
        assert_eq!(integral_i64(&[q(1, 2)]), None);
    }
}
