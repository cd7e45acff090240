//! Scalar time-series alignment: dynamic time warping and DTW barycenter
//! averaging.
//!
//! The local distance between two samples is `|x - y|`, so DTW distances
//! carry the unit of the samples (degrees for joint angles).

mod brute;
mod dba;
mod dtw;
mod series;

pub use brute::{dtw_brute_force, BRUTE_FORCE_MAX_LEN};
pub use dba::{dba, medoid_index, Barycenter, DbaConfig, DbaInit};
pub use dtw::{dtw, dtw_distance, local_distance, AlignmentResult, CostMatrix};
pub use series::TimeSeries;
