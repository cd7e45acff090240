//! Group synchrony metrics.
//!
//! * [`angle_synchrony`]: spread of DTW distances between each performer's
//!   joint-angle series and the group barycenter, as a rate
//!   `100 * (1 - avg / max)`.
//! * [`direction_synchrony`]: `100 *` mean cosine similarity of limb segment
//!   directions over frames and unordered performer pairs.
//! * [`height_synchrony`]: agreement of vertical trajectories, normalized by
//!   the amplitude of the group-mean trajectory.

mod analyze;

pub use analyze::{analyze_scene, AnalysisConfig};

use std::fmt;
use std::str::FromStr;

use crate::align::{dba, dtw_distance, DbaConfig, TimeSeries};
use crate::error::{Error, Result};
use crate::kinematics::{
    angle_series, height_series, segment_direction, HeightFeature, JointId, SegmentId, Vec3,
};
use crate::scene_io::{SceneKind, ScenePose};

/// Group-mean amplitudes below this make height synchrony undefined.
pub const MIN_AMPLITUDE: f64 = 1e-9;

/// Which DTW distances feed the angle synchrony rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SynchronyMode {
    /// One distance per performer, to the DBA barycenter of the group.
    #[default]
    Barycenter,
    /// One distance per unordered performer pair.
    Pairwise,
}

impl SynchronyMode {
    pub fn name(self) -> &'static str {
        match self {
            SynchronyMode::Barycenter => "barycenter",
            SynchronyMode::Pairwise => "pairwise",
        }
    }
}

impl fmt::Display for SynchronyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SynchronyMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "barycenter" => Ok(SynchronyMode::Barycenter),
            "pairwise" => Ok(SynchronyMode::Pairwise),
            other => Err(format!("unknown mode {other:?} (expected barycenter or pairwise)")),
        }
    }
}

/// DTW distance summary for one feature across performers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DtwSpread {
    pub avg_dtw: f64,
    pub max_dtw: f64,
    pub rate_percent: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleSynchronyRow {
    pub joint: JointId,
    pub avg_dtw: f64,
    pub max_dtw: f64,
    pub rate_percent: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionSynchronyRow {
    pub segment: SegmentId,
    pub avg_cosine_percent: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeightSynchronyRow {
    pub feature: HeightFeature,
    pub synchrony_percent: f64,
}

/// `100 * (1 - avg / max)`, or 100 when every distance is zero.
pub fn synchrony_rate(avg_dtw: f64, max_dtw: f64) -> f64 {
    if max_dtw <= 0.0 {
        100.0
    } else {
        100.0 * (1.0 - avg_dtw / max_dtw)
    }
}

/// `a . b / (|a| |b|)`, clamped to `[-1, 1]`.
pub fn cosine_similarity(a: Vec3, b: Vec3) -> Result<f64> {
    let (na, nb) = (a.norm(), b.norm());
    if !(na >= f64::MIN_POSITIVE && nb >= f64::MIN_POSITIVE) {
        return Err(Error::ZeroVector);
    }
    Ok((a.dot(b) / (na * nb)).clamp(-1.0, 1.0))
}

/// Running mean; exact when every value is identical.
fn mean(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut m = 0.0;
    for (k, v) in values.into_iter().enumerate() {
        m += (v - m) / (k + 1) as f64;
    }
    m
}

/// Angle synchrony over one feature, one series per performer.
pub fn angle_synchrony(series: &[TimeSeries], mode: SynchronyMode) -> Result<DtwSpread> {
    if series.len() < 2 {
        return Err(Error::TooFewPerformers(series.len()));
    }
    let distances: Vec<f64> = match mode {
        SynchronyMode::Barycenter => {
            let center = dba(series, &DbaConfig::default())?.series;
            series.iter().map(|s| dtw_distance(s, &center)).collect()
        }
        SynchronyMode::Pairwise => {
            let mut d = Vec::with_capacity(series.len() * (series.len() - 1) / 2);
            for (i, a) in series.iter().enumerate() {
                for b in &series[i + 1..] {
                    d.push(dtw_distance(a, b));
                }
            }
            d
        }
    };
    let avg_dtw = mean(distances.iter().copied());
    let max_dtw = distances.iter().copied().fold(0.0, f64::max);
    Ok(DtwSpread {
        avg_dtw,
        max_dtw,
        rate_percent: synchrony_rate(avg_dtw, max_dtw),
    })
}

/// [`angle_synchrony`] on the given performers' angle series for `joint`.
pub fn joint_angle_synchrony(
    scene: &ScenePose,
    performers: &[&str],
    joint: JointId,
    mode: SynchronyMode,
) -> Result<AngleSynchronyRow> {
    if performers.len() < 2 {
        return Err(Error::TooFewPerformers(performers.len()));
    }
    let series = performers
        .iter()
        .map(|p| angle_series(scene, p, joint))
        .collect::<Result<Vec<_>>>()?;
    let spread = angle_synchrony(&series, mode)?;
    Ok(AngleSynchronyRow {
        joint,
        avg_dtw: spread.avg_dtw,
        max_dtw: spread.max_dtw,
        rate_percent: spread.rate_percent,
    })
}

/// Mean pairwise cosine similarity of one segment's direction, in percent.
///
/// A `(frame, pair)` sample is skipped when either performer's segment is
/// missing or degenerate in that frame.
pub fn direction_synchrony(
    scene: &ScenePose,
    performers: &[&str],
    segment: SegmentId,
) -> Result<DirectionSynchronyRow> {
    if performers.len() < 2 {
        return Err(Error::TooFewPerformers(performers.len()));
    }
    let tracks = performers
        .iter()
        .map(|p| scene.frames(p))
        .collect::<Result<Vec<_>>>()?;
    let mut sum = 0.0;
    let mut samples = 0usize;
    let mut dirs: Vec<Option<Vec3>> = Vec::with_capacity(tracks.len());
    for t in 0..scene.frame_count() {
        dirs.clear();
        dirs.extend(tracks.iter().map(|f| segment_direction(&f[t], segment).ok()));
        for (i, a) in dirs.iter().enumerate() {
            for b in &dirs[i + 1..] {
                if let (Some(a), Some(b)) = (a, b) {
                    sum += cosine_similarity(*a, *b)?;
                    samples += 1;
                }
            }
        }
    }
    if samples == 0 {
        return Err(Error::NoValidSamples(segment.label().to_string()));
    }
    Ok(DirectionSynchronyRow {
        segment,
        avg_cosine_percent: 100.0 * sum / samples as f64,
    })
}

/// Height synchrony of equal-length trajectories, in percent.
///
/// With `m(t)` the group mean at frame `t` and `dev(t)` the mean absolute
/// deviation from it, the score is `100 * (1 - mean_t dev(t) / A)` where
/// `A = max_t m(t) - min_t m(t)`. Scores are clamped below at -100.
pub fn height_synchrony(trajectories: &[TimeSeries]) -> Result<f64> {
    if trajectories.len() < 2 {
        return Err(Error::TooFewPerformers(trajectories.len()));
    }
    let len = trajectories[0].len();
    if let Some(bad) = trajectories.iter().find(|t| t.len() != len) {
        return Err(Error::LengthMismatch {
            expected: len,
            found: bad.len(),
        });
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut devs = Vec::with_capacity(len);
    for t in 0..len {
        let m = mean(trajectories.iter().map(|s| s.samples()[t]));
        lo = lo.min(m);
        hi = hi.max(m);
        devs.push(mean(trajectories.iter().map(|s| (s.samples()[t] - m).abs())));
    }
    let amplitude = hi - lo;
    if amplitude < MIN_AMPLITUDE {
        return Err(Error::FlatTrajectory { amplitude });
    }
    let score = 100.0 * (1.0 - mean(devs) / amplitude);
    Ok(score.max(-100.0))
}

fn require_kind(scene: &ScenePose, kind: SceneKind) -> Result<()> {
    if scene.kind != kind {
        return Err(Error::KindMismatch {
            expected: kind.to_string(),
            found: scene.kind.to_string(),
        });
    }
    Ok(())
}

fn feature_synchrony(
    scene: &ScenePose,
    performers: &[&str],
    feature: HeightFeature,
) -> Result<HeightSynchronyRow> {
    if performers.len() < 2 {
        return Err(Error::TooFewPerformers(performers.len()));
    }
    let trajectories = performers
        .iter()
        .map(|p| height_series(scene, p, feature))
        .collect::<Result<Vec<_>>>()?;
    Ok(HeightSynchronyRow {
        feature,
        synchrony_percent: height_synchrony(&trajectories)?,
    })
}

/// Head and foot height synchrony of a jump scene.
pub fn jump_synchrony(
    scene: &ScenePose,
    performers: &[&str],
) -> Result<(HeightSynchronyRow, HeightSynchronyRow)> {
    require_kind(scene, SceneKind::Jump)?;
    Ok((
        feature_synchrony(scene, performers, HeightFeature::Head)?,
        feature_synchrony(scene, performers, HeightFeature::Foot)?,
    ))
}

/// Head height synchrony of a crouch (`down`) scene.
pub fn crouch_synchrony(scene: &ScenePose, performers: &[&str]) -> Result<HeightSynchronyRow> {
    require_kind(scene, SceneKind::Down)?;
    feature_synchrony(scene, performers, HeightFeature::Head)
}
