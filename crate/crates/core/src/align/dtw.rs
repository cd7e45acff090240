use super::TimeSeries;

/// Distance between two samples: `|x - y|`.
#[inline]
pub fn local_distance(x: f64, y: f64) -> f64 {
    (x - y).abs()
}

/// Cumulative cost grid `D(i, j)`, row-major with one row per sample of the
/// first series.
#[derive(Debug, Clone, PartialEq)]
pub struct CostMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl CostMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    fn build(x: &[f64], y: &[f64]) -> Self {
        let (rows, cols) = (x.len(), y.len());
        let mut data = vec![0.0f64; rows * cols];
        for i in 0..rows {
            for j in 0..cols {
                let d = local_distance(x[i], y[j]);
                let prev = match (i, j) {
                    (0, 0) => 0.0,
                    (0, _) => data[j - 1],
                    (_, 0) => data[(i - 1) * cols],
                    _ => {
                        let diag = data[(i - 1) * cols + j - 1];
                        let up = data[(i - 1) * cols + j];
                        let left = data[i * cols + j - 1];
                        diag.min(up).min(left)
                    }
                };
                data[i * cols + j] = d + prev;
            }
        }
        Self { rows, cols, data }
    }

    /// Walks back from the last cell. Ties prefer the diagonal, then
    /// `(i-1, j)`, then `(i, j-1)`.
    fn backtrack(&self) -> Vec<(usize, usize)> {
        let (mut i, mut j) = (self.rows - 1, self.cols - 1);
        let mut path = Vec::with_capacity(self.rows + self.cols - 1);
        path.push((i, j));
        while i > 0 || j > 0 {
            if i == 0 {
                j -= 1;
            } else if j == 0 {
                i -= 1;
            } else {
                let diag = self.get(i - 1, j - 1);
                let up = self.get(i - 1, j);
                let left = self.get(i, j - 1);
                if diag <= up && diag <= left {
                    i -= 1;
                    j -= 1;
                } else if up <= left {
                    i -= 1;
                } else {
                    j -= 1;
                }
            }
            path.push((i, j));
        }
        path.reverse();
        path
    }
}

/// Output of [`dtw`]. Path indices are zero-based: the path runs from
/// `(0, 0)` to `(n - 1, m - 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlignmentResult {
    pub distance: f64,
    pub path: Vec<(usize, usize)>,
    pub matrix: Option<CostMatrix>,
}

/// Full DTW between `x` and `y`: distance `D(n, m)`, one optimal warping
/// path, and optionally the cumulative cost matrix.
pub fn dtw(x: &TimeSeries, y: &TimeSeries, keep_matrix: bool) -> AlignmentResult {
    let matrix = CostMatrix::build(x.samples(), y.samples());
    let distance = matrix.get(matrix.rows - 1, matrix.cols - 1);
    let path = matrix.backtrack();
    AlignmentResult {
        distance,
        path,
        matrix: keep_matrix.then_some(matrix),
    }
}

/// DTW distance only, in `O(m)` memory.
pub fn dtw_distance(x: &TimeSeries, y: &TimeSeries) -> f64 {
    let (x, y) = (x.samples(), y.samples());
    let mut prev = vec![0.0f64; y.len()];
    let mut curr = vec![0.0f64; y.len()];
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            let best = match (i, j) {
                (0, 0) => 0.0,
                (0, _) => curr[j - 1],
                (_, 0) => prev[0],
                _ => prev[j - 1].min(prev[j]).min(curr[j - 1]),
            };
            curr[j] = local_distance(xi, yj) + best;
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[y.len() - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(v: &[f64]) -> TimeSeries {
        TimeSeries::try_from(v).unwrap()
    }

    #[test]
    fn local_distance_examples() {
        assert_eq!(local_distance(3.0, 5.0), 2.0);
        assert_eq!(local_distance(-1.0, -1.0), 0.0);
        assert_eq!(local_distance(0.0, -4.5), 4.5);
    }

    #[test]
    fn identical_series_have_zero_distance() {
        let r = dtw(&ts(&[0.0, 1.0, 2.0]), &ts(&[0.0, 1.0, 2.0]), false);
        assert_eq!(r.distance, 0.0);
        assert_eq!(r.path, vec![(0, 0), (1, 1), (2, 2)]);
        assert!(r.matrix.is_none());
    }

    #[test]
    fn repeated_sample_warps_for_free() {
        let r = dtw(&ts(&[0.0, 0.0, 1.0]), &ts(&[0.0, 1.0]), true);
        assert_eq!(r.distance, 0.0);
        assert_eq!(r.path, vec![(0, 0), (1, 0), (2, 1)]);
    }

    #[test]
    fn constant_target() {
        let r = dtw(&ts(&[1.0, 2.0, 3.0]), &ts(&[2.0, 2.0, 2.0]), false);
        assert_eq!(r.distance, 2.0);
    }

    #[test]
    fn boundary_rows_are_running_sums() {
        let x = ts(&[1.0, 4.0, 2.0]);
        let y = ts(&[0.0, 3.0, 5.0, 1.0]);
        let m = dtw(&x, &y, true).matrix.unwrap();
        assert_eq!(m.get(0, 0), 1.0);
        assert_eq!(m.get(0, 1), 1.0 + 2.0);
        assert_eq!(m.get(0, 2), 3.0 + 4.0);
        assert_eq!(m.get(1, 0), 1.0 + 4.0);
        assert_eq!(m.get(2, 0), 5.0 + 2.0);
        // interior: d(4,3)=1 + min(D(0,0)=1, D(0,1)=3, D(1,0)=5)
        assert_eq!(m.get(1, 1), 2.0);
    }

    #[test]
    fn single_samples() {
        let r = dtw(&ts(&[5.0]), &ts(&[5.0]), false);
        assert_eq!(r.distance, 0.0);
        assert_eq!(r.path, vec![(0, 0)]);
        let r = dtw(&ts(&[5.0]), &ts(&[1.0, 2.0]), false);
        assert_eq!(r.distance, 7.0);
        assert_eq!(r.path, vec![(0, 0), (0, 1)]);
    }

    #[test]
    fn tie_prefers_diagonal_then_up() {
        // All-zero costs: every predecessor ties, so the path is diagonal
        // until an edge is hit, then steps along i.
        let r = dtw(&ts(&[0.0; 4]), &ts(&[0.0; 2]), false);
        assert_eq!(r.path, vec![(0, 0), (1, 0), (2, 0), (3, 1)]);
    }

    #[test]
    fn rolling_distance_matches_full_matrix() {
        let x = ts(&[0.3, -1.2, 4.4, 2.0, 2.1]);
        let y = ts(&[1.0, 0.0, 3.3]);
        assert_eq!(dtw_distance(&x, &y), dtw(&x, &y, false).distance);
        assert_eq!(dtw_distance(&y, &x), dtw(&y, &x, false).distance);
    }
}
