use super::{local_distance, TimeSeries};
use crate::error::{Error, Result};

/// Largest series length accepted by [`dtw_brute_force`].
pub const BRUTE_FORCE_MAX_LEN: usize = 8;

/// Minimum warping-path cost found by enumerating every monotone,
/// contiguous path from `(0, 0)` to `(n - 1, m - 1)`.
///
/// Shares nothing with the dynamic program except [`local_distance`]; it is
/// the reference that [`super::dtw`] is checked against.
pub fn dtw_brute_force(x: &TimeSeries, y: &TimeSeries) -> Result<f64> {
    let (n, m) = (x.len(), y.len());
    if n > BRUTE_FORCE_MAX_LEN || m > BRUTE_FORCE_MAX_LEN {
        return Err(Error::SizeLimitExceeded {
            n,
            m,
            limit: BRUTE_FORCE_MAX_LEN,
        });
    }
    let mut best = f64::INFINITY;
    walk(x.samples(), y.samples(), 0, 0, 0.0, &mut best);
    Ok(best)
}

fn walk(x: &[f64], y: &[f64], i: usize, j: usize, acc: f64, best: &mut f64) {
    let acc = acc + local_distance(x[i], y[j]);
    if i + 1 == x.len() && j + 1 == y.len() {
        if acc < *best {
            *best = acc;
        }
        return;
    }
    if i + 1 < x.len() {
        walk(x, y, i + 1, j, acc, best);
    }
    if j + 1 < y.len() {
        walk(x, y, i, j + 1, acc, best);
    }
    if i + 1 < x.len() && j + 1 < y.len() {
        walk(x, y, i + 1, j + 1, acc, best);
    }
}
