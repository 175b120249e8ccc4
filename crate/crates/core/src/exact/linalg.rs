use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::ring::{Integer, Rational};
use crate::error::{Error, Result};

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let v = &a[col][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Scales a rational row to a primitive integer row (same direction).
fn clear_denominators(row: &[Rational]) -> Vec<Integer> {
    let l = row
        .iter()
        .fold(Integer::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Fraction-free (Bareiss) forward elimination of an integer matrix in place.
/// Returns the pivot columns, one per nonzero row of the echelon form.
fn bareiss_echelon(a: &mut [Vec<Integer>], ncols: usize) -> Vec<usize> {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut prev = Integer::one();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        for r in row + 1..nrows {
            for c in col + 1..a[r].len() {
                let v = (&a[row][col] * &a[r][c] - &a[r][col] * &a[row][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = Integer::zero();
        }
        prev = a[row][col].clone();
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank of a rational matrix.
pub fn rank(m: &[Vec<Rational>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let mut a: Vec<Vec<Integer>> = m.iter().map(|r| clear_denominators(r)).collect();
    bareiss_echelon(&mut a, ncols).len()
}

/// Solves `sum_i x_i * rows[i] = target` exactly.
///
/// The system is set up column-wise (one equation per coordinate), cleared
/// to integers and reduced by fraction-free elimination; the solution is
/// then recovered by rational back substitution and the residual is checked
/// to vanish on every coordinate.
pub fn solve_combination(rows: &[Vec<Rational>], target: &[Rational]) -> Result<Vec<Rational>> {
    let n = rows.len();
    let m = target.len();
    if rows.iter().any(|r| r.len() != m) {
        return Err(Error::Dimension {
            expected: m,
            got: rows.iter().map(|r| r.len()).find(|&l| l != m).unwrap_or(0),
        });
    }
    // equation j: sum_i rows[i][j] x_i = target[j]
    let mut aug: Vec<Vec<Integer>> = (0..m)
        .map(|j| {
            let mut eq: Vec<Rational> = rows.iter().map(|r| r[j].clone()).collect();
            eq.push(target[j].clone());
            clear_denominators(&eq)
        })
        .collect();
    let pivots = bareiss_echelon(&mut aug, n + 1);
    if pivots.iter().filter(|&&p| p < n).count() < n {
        return Err(Error::RankDeficient);
    }
    if pivots.contains(&n) {
        return Err(Error::NotInSpan);
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(aug[i][n].clone());
        for k in i + 1..n {
            acc -= Rational::from_integer(aug[i][k].clone()) * &x[k];
        }
        x[i] = acc / Rational::from_integer(aug[i][i].clone());
    }
    for j in 0..m {
        let lhs = (0..n).fold(Rational::zero(), |acc, i| acc + &rows[i][j] * &x[i]);
        if lhs != target[j] {
            return Err(Error::NotInSpan);
        }
    }
    Ok(x)
}

/// Determinant of a small integer matrix (fraction-free).
pub fn integer_det(m: &[Vec<i64>]) -> Integer {
    let n = m.len();
    if n == 0 {
        return Integer::one();
    }
    let mut a: Vec<Vec<Integer>> = m
        .iter()
        .map(|r| r.iter().map(|&v| Integer::from(v)).collect())
        .collect();
    let mut sign = Integer::one();
    let mut prev = Integer::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Integer::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    &a[n - 1][n - 1] * sign
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::{frac, rat};

    #[test]
    fn inverse_of_a2_cartan() {
        let a = vec![vec![rat(2), rat(-1)], vec![rat(-1), rat(2)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(
            inv,
            vec![vec![frac(2, 3), frac(1, 3)], vec![frac(1, 3), frac(2, 3)]]
        );
    }

    #[test]
    fn solve_recovers_coefficients() {
        let rows = vec![
            vec![rat(1), rat(0), rat(2)],
            vec![rat(0), rat(1), rat(1)],
        ];
        let target = vec![rat(2), frac(1, 2), frac(9, 2)];
        assert_eq!(solve_combination(&rows, &target).unwrap(), vec![rat(2), frac(1, 2)]);
    }

    #[test]
    fn solve_detects_not_in_span() {
        let rows = vec![vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)]];
        let target = vec![rat(1), rat(1), rat(1)];
        assert_eq!(solve_combination(&rows, &target), Err(Error::NotInSpan));
    }

    #[test]
    fn solve_detects_rank_deficiency() {
        let rows = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        let target = vec![rat(1), rat(2)];
        assert_eq!(solve_combination(&rows, &target), Err(Error::RankDeficient));
    }

    #[test]
    fn rank_counts_independent_rows() {
        let m = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), frac(1, 2)],
        ];
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn det_of_g2_cartan() {
        assert_eq!(integer_det(&[vec![2, -1], vec![-3, 2]]), Integer::from(1));
        assert_eq!(integer_det(&[vec![0, 1], vec![1, 0]]), Integer::from(-1));
    }
}
