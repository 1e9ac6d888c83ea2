//! Finite metric spaces over exact scalars.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::scalar::{Rational, Scalar};

/// A validated finite metric space on points `0..n`.
///
/// Construction goes through [`validate_metric`], so every value of this type
/// satisfies the metric axioms with strictly positive off-diagonal entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteMetric<T> {
    labels: Option<Vec<String>>,
    dist: Vec<Vec<T>>,
}

/// Checks a square table against the metric axioms.
///
/// Violations are reported in a fixed scan order (shape, diagonal, signs,
/// symmetry, triangles), each naming the offending entries.
pub fn validate_metric<T: Scalar>(table: Vec<Vec<T>>) -> Result<FiniteMetric<T>> {
    let n = table.len();
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NonSquare { row, len: r.len(), expected: n });
        }
    }
    for i in 0..n {
        if !table[i][i].is_zero() {
            return Err(Error::NonZeroDiagonal { i });
        }
    }
    for i in 0..n {
        for j in 0..n {
            if table[i][j].is_negative() {
                return Err(Error::NegativeEntry { i, j });
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if table[i][j] != table[j][i] {
                return Err(Error::Asymmetry { i, j });
            }
            if table[i][j].is_zero() {
                return Err(Error::ZeroDistance { i, j });
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                if table[i][j] > table[i][k].clone() + table[k][j].clone() {
                    return Err(Error::Triangle {
                        i,
                        j,
                        k,
                        dij: table[i][j].to_string(),
                        dik: table[i][k].to_string(),
                        dkj: table[k][j].to_string(),
                    });
                }
            }
        }
    }
    Ok(FiniteMetric { labels: None, dist: table })
}

/// Shortest-path metric of a connected graph.
pub fn graph_distance_matrix(g: &SimpleGraph) -> Result<FiniteMetric<i64>> {
    let d = g.all_distances()?;
    let dist = d
        .into_iter()
        .map(|row| row.into_iter().map(|v| v as i64).collect())
        .collect();
    Ok(FiniteMetric { labels: None, dist })
}

impl<T: Scalar> FiniteMetric<T> {
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dist.len() {
            return Err(Error::InvalidInput(format!(
                "{} labels for {} points",
                labels.len(),
                self.dist.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of point `i`, falling back to its index.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    #[inline]
    pub fn d(&self, i: usize, j: usize) -> &T {
        &self.dist[i][j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.dist[i]
    }

    pub fn table(&self) -> &[Vec<T>] {
        &self.dist
    }

    pub fn eccentricity(&self, i: usize) -> T {
        self.dist[i].iter().max().cloned().unwrap_or_else(T::zero)
    }

    pub fn eccentricities(&self) -> Vec<T> {
        (0..self.len()).map(|i| self.eccentricity(i)).collect()
    }

    pub fn diameter(&self) -> T {
        (0..self.len()).map(|i| self.eccentricity(i)).max().unwrap_or_else(T::zero)
    }

    /// The metric multiplied by a positive constant.
    pub fn scaled(&self, factor: &T) -> FiniteMetric<T> {
        assert!(factor.is_positive(), "scale factor must be positive");
        FiniteMetric {
            labels: self.labels.clone(),
            dist: self
                .dist
                .iter()
                .map(|r| r.iter().map(|v| v.clone() * factor.clone()).collect())
                .collect(),
        }
    }

    /// Metric restricted to the listed points, in the given order.
    pub fn subspace(&self, points: &[usize]) -> FiniteMetric<T> {
        FiniteMetric {
            labels: self.labels.as_ref().map(|l| points.iter().map(|&p| l[p].clone()).collect()),
            dist: points
                .iter()
                .map(|&i| points.iter().map(|&j| self.dist[i][j].clone()).collect())
                .collect(),
        }
    }

    /// `{z : d(x,z) + d(z,y) = d(x,y)}`, sorted.
    pub fn interval(&self, x: usize, y: usize) -> Vec<usize> {
        let dxy = &self.dist[x][y];
        (0..self.len())
            .filter(|&z| &(self.dist[x][z].clone() + self.dist[z][y].clone()) == dxy)
            .collect()
    }

    /// Points lying simultaneously on geodesics between each pair of the triple.
    /// An empty answer means the triple has no median.
    pub fn median_set(&self, x: usize, y: usize, z: usize) -> Vec<usize> {
        let between = |a: usize, b: usize, p: usize| {
            self.dist[a][p].clone() + self.dist[p][b].clone() == self.dist[a][b]
        };
        (0..self.len())
            .filter(|&p| between(x, y, p) && between(y, z, p) && between(x, z, p))
            .collect()
    }

    /// Smallest δ ≥ 0 for which every quadruple satisfies the four-point
    /// condition `d(x,y) + d(z,t) ≤ max(d(x,z) + d(y,t), d(x,t) + d(y,z)) + δ`.
    ///
    /// For a quadruple with pair sums `s1 ≥ s2 ≥ s3` the required slack is
    /// `s1 − s2`; repeated points never need slack.
    pub fn four_point_delta(&self) -> T {
        let n = self.len();
        let d = &self.dist;
        let mut best = T::zero();
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    for t in z + 1..n {
                        let mut sums = [
                            d[x][y].clone() + d[z][t].clone(),
                            d[x][z].clone() + d[y][t].clone(),
                            d[x][t].clone() + d[y][z].clone(),
                        ];
                        sums.sort();
                        let slack = sums[2].clone() - sums[1].clone();
                        if slack > best {
                            best = slack;
                        }
                    }
                }
            }
        }
        best
    }
}

impl FiniteMetric<i64> {
    pub fn to_rational(&self) -> FiniteMetric<Rational> {
        FiniteMetric {
            labels: self.labels.clone(),
            dist: self
                .dist
                .iter()
                .map(|r| r.iter().map(|&v| crate::scalar::rational(v)).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, rational};

    fn int_metric(rows: &[&[i64]]) -> Result<FiniteMetric<i64>> {
        validate_metric(rows.iter().map(|r| r.to_vec()).collect())
    }

    fn path3() -> FiniteMetric<i64> {
        let g = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        graph_distance_matrix(&g).unwrap()
    }

    fn cycle4() -> FiniteMetric<i64> {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        graph_distance_matrix(&g).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(int_metric(&[&[0]]).is_ok());
        assert!(int_metric(&[&[0, 1], &[1, 0]]).is_ok());
        let err = int_metric(&[&[0, 1, 3], &[1, 0, 1], &[3, 1, 0]]).unwrap_err();
        assert!(matches!(err, Error::Triangle { i: 0, j: 2, k: 1, .. }), "{err:?}");
    }

    #[test]
    fn validation_errors() {
        assert_eq!(int_metric(&[&[0, 1], &[2, 0]]), Err(Error::Asymmetry { i: 0, j: 1 }));
        assert_eq!(int_metric(&[&[0, -1], &[-1, 0]]), Err(Error::NegativeEntry { i: 0, j: 1 }));
        assert_eq!(int_metric(&[&[0, 0], &[0, 0]]), Err(Error::ZeroDistance { i: 0, j: 1 }));
        assert_eq!(int_metric(&[&[1]]), Err(Error::NonZeroDiagonal { i: 0 }));
        assert!(matches!(int_metric(&[&[0, 1], &[1]]), Err(Error::NonSquare { row: 1, .. })));
    }

    #[test]
    fn graph_metrics() {
        assert_eq!(*path3().d(0, 2), 2);
        assert_eq!(*cycle4().d(0, 2), 2);
        assert_eq!(cycle4().diameter(), 2);
    }

    #[test]
    fn four_point_examples() {
        assert_eq!(path3().four_point_delta(), 0);
        assert_eq!(cycle4().four_point_delta(), 2);
        let r = validate_metric(vec![vec![rational(0), ratio(1, 2)], vec![ratio(1, 2), rational(0)]])
            .unwrap();
        assert_eq!(r.four_point_delta(), rational(0));
    }

    #[test]
    fn medians_and_intervals() {
        assert_eq!(path3().median_set(0, 2, 1), vec![1]);
        assert_eq!(cycle4().median_set(0, 1, 2), vec![1]);
        let k3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(graph_distance_matrix(&k3).unwrap().median_set(0, 1, 2).is_empty());
        assert_eq!(path3().interval(1, 1), vec![1]);
        assert_eq!(path3().interval(0, 2), vec![0, 1, 2]);
        assert_eq!(cycle4().interval(0, 2), vec![0, 1, 2, 3]);
    }
}
