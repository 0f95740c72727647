//! Exact integer rank computation (fraction-free Gaussian elimination).

use num_bigint::BigInt;
use num_traits::Zero;

/// Rank over the rationals of an integer matrix.
///
/// Fraction-free elimination: rows below the pivot are rewritten as
/// `pivot * row - factor * pivot_row`, which keeps all entries integral.
/// Entry growth is irrelevant at the sizes used here (hundreds of rows of
/// small entries).
pub fn int_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    debug_assert!(rows.iter().all(|r| r.len() == ncols));

    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        let Some(pivot_idx) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, pivot_idx);
        let pivot_row = rows[row].clone();
        let pivot = pivot_row[col].clone();
        for r in rows.iter_mut().skip(row + 1) {
            if r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for (x, p) in r[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = &pivot * &*x - &factor * p;
            }
        }
        rank += 1;
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    rank
}

/// Affine dimension of a point set: rank of the differences to the first
/// point. Returns -1 for the empty set.
pub fn affine_dimension(points: &[Vec<BigInt>]) -> i64 {
    match points.split_first() {
        None => -1,
        Some((base, rest)) => {
            let diffs: Vec<Vec<BigInt>> = rest
                .iter()
                .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            int_rank(diffs) as i64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn rank_basics() {
        assert_eq!(int_rank(m(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(int_rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(int_rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(int_rank(m(&[&[2, 3, 5], &[4, 6, 10], &[1, 0, 1]])), 2);
    }

    #[test]
    fn affine_dim_basics() {
        assert_eq!(affine_dimension(&[]), -1);
        assert_eq!(affine_dimension(&m(&[&[7, 7]])), 0);
        assert_eq!(affine_dimension(&m(&[&[0, 0], &[1, 1], &[2, 2]])), 1);
        assert_eq!(affine_dimension(&m(&[&[0, 0], &[1, 0], &[0, 1]])), 2);
    }
}
