use super::{dtw, dtw_distance, TimeSeries};
use crate::error::{Error, Result};

/// How the starting barycenter is chosen from the inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DbaInit {
    /// Input with the smallest summed DTW distance to all others.
    #[default]
    Medoid,
    /// A fixed input index.
    Index(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DbaConfig {
    pub init: DbaInit,
    pub max_iter: usize,
    /// Stop once an update improves the objective by less than this.
    pub tol: f64,
}

impl Default for DbaConfig {
    fn default() -> Self {
        Self {
            init: DbaInit::Medoid,
            max_iter: 30,
            tol: 1e-6,
        }
    }
}

/// Result of [`dba`].
///
/// `objective_trace[k]` is `sum_i DTW(C_k, X_i)` after `k` accepted updates,
/// so `objective_trace[0]` belongs to the initial series and the trace has
/// `iterations + 1` entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Barycenter {
    pub series: TimeSeries,
    pub iterations: usize,
    pub objective_trace: Vec<f64>,
}

impl Barycenter {
    pub fn objective(&self) -> f64 {
        *self.objective_trace.last().expect("trace holds the initial objective")
    }
}

/// Index of the input with the smallest summed DTW distance to the others.
/// Ties go to the lowest index.
pub fn medoid_index(inputs: &[TimeSeries]) -> Result<usize> {
    if inputs.is_empty() {
        return Err(Error::EmptyInputSet);
    }
    let n = inputs.len();
    let mut totals = vec![0.0; n];
    for a in 0..n {
        for b in a + 1..n {
            let d = dtw_distance(&inputs[a], &inputs[b]);
            totals[a] += d;
            totals[b] += d;
        }
    }
    let mut best = 0;
    for (i, &t) in totals.iter().enumerate().skip(1) {
        if t < totals[best] {
            best = i;
        }
    }
    Ok(best)
}

/// DTW barycenter averaging.
///
/// Each update aligns every input to the current barycenter `C` and replaces
/// each sample of `C` with the mean of the input samples mapped onto it. The
/// local distance is `|x - y|`, for which that mean is not guaranteed to
/// lower the objective, so an update that raises it is rejected and the
/// previous barycenter is returned. Iteration also stops when the
/// improvement falls below `config.tol` or after `config.max_iter` updates.
pub fn dba(inputs: &[TimeSeries], config: &DbaConfig) -> Result<Barycenter> {
    if inputs.is_empty() {
        return Err(Error::EmptyInputSet);
    }
    if config.tol.is_nan() || config.tol < 0.0 {
        return Err(Error::InvalidConfig(format!("DBA tolerance must be >= 0, got {}", config.tol)));
    }
    let start = match config.init {
        DbaInit::Medoid => medoid_index(inputs)?,
        DbaInit::Index(i) if i < inputs.len() => i,
        DbaInit::Index(i) => {
            return Err(Error::InvalidConfig(format!(
                "DBA init index {i} out of range for {} inputs",
                inputs.len()
            )))
        }
    };

    let mut center = inputs[start].clone();
    let (mut objective, mut paths) = align_all(&center, inputs);
    let mut trace = vec![objective];

    for _ in 0..config.max_iter {
        let candidate = average_along(&center, inputs, &paths);
        let (cand_objective, cand_paths) = align_all(&candidate, inputs);
        if cand_objective > objective {
            break;
        }
        let improvement = objective - cand_objective;
        center = candidate;
        objective = cand_objective;
        paths = cand_paths;
        trace.push(objective);
        if improvement < config.tol {
            break;
        }
    }

    Ok(Barycenter {
        series: center,
        iterations: trace.len() - 1,
        objective_trace: trace,
    })
}

type Path = Vec<(usize, usize)>;

fn align_all(center: &TimeSeries, inputs: &[TimeSeries]) -> (f64, Vec<Path>) {
    let mut total = 0.0;
    let paths = inputs
        .iter()
        .map(|x| {
            let r = dtw(center, x, false);
            total += r.distance;
            r.path
        })
        .collect();
    (total, paths)
}

fn average_along(center: &TimeSeries, inputs: &[TimeSeries], paths: &[Path]) -> TimeSeries {
    let len = center.len();
    // Incremental mean: exact when every contribution is the same value.
    let mut mean = vec![0.0; len];
    let mut count = vec![0usize; len];
    for (x, path) in inputs.iter().zip(paths) {
        let x = x.samples();
        for &(ci, xi) in path {
            count[ci] += 1;
            mean[ci] += (x[xi] - mean[ci]) / count[ci] as f64;
        }
    }
    // A contiguous warping path visits every barycenter index.
    assert!(count.iter().all(|&c| c > 0), "barycenter index left unaligned");
    TimeSeries::new(mean).expect("mean of finite samples is finite and non-empty")
}
