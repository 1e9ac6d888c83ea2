//! Exact Gaussian elimination.

use crate::scalar::Field;

/// Rank of a dense matrix over an exact field.
pub fn rank<T: Field>(rows: &[Vec<T>]) -> usize {
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone() / p.clone();
                for c in col..cols {
                    let delta = factor.clone() * m[rank][c].clone();
                    m[r][c] = m[r][c].clone() - delta;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Coefficient rows of the equations `f(x) + f(y) = d(x, y)` for the given
/// pairs (a pair `(x, x)` reads `2 f(x) = 0`).
pub fn pair_system<T: Field>(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<T>> {
    pairs
        .iter()
        .map(|&(x, y)| {
            let mut row = vec![T::zero(); n];
            row[x] = row[x].clone() + T::one();
            row[y] = row[y].clone() + T::one();
            row
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, Rational};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| rational(v)).collect()).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])), 3);
        assert_eq!(rank(&m(&[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1]])), 3);
        assert_eq!(rank::<Rational>(&[]), 0);
    }

    #[test]
    fn pair_system_rank_matches_bipartite_count() {
        // triangle: odd cycle, full rank; path: bipartite, rank n - 1
        let tri = pair_system::<Rational>(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(rank(&tri), 3);
        let path = pair_system::<Rational>(3, &[(0, 1), (1, 2)]);
        assert_eq!(rank(&path), 2);
        let looped = pair_system::<Rational>(2, &[(0, 0), (0, 1)]);
        assert_eq!(rank(&looped), 2);
    }
}
