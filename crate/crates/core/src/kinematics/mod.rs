//! Skeleton representation and per-frame geometric features: joint angles,
//! limb segment directions, and head/ankle heights.

mod skeleton;
mod vec3;

pub use skeleton::{JointId, KeypointId, SegmentId, SkeletonFrame};
pub use vec3::Vec3;

use crate::align::TimeSeries;
use crate::error::{Error, Result};
use crate::scene_io::ScenePose;

/// Segments shorter than this are treated as degenerate.
pub const MIN_SEGMENT_LENGTH: f64 = 1e-9;

fn keypoint(frame: &SkeletonFrame, id: KeypointId) -> Result<Vec3> {
    frame.get(id).ok_or(Error::Missing(id.name()))
}

fn segment(frame: &SkeletonFrame, from: KeypointId, to: KeypointId) -> Result<Vec3> {
    let start = keypoint(frame, from)?;
    let v = keypoint(frame, to)? - start;
    if v.norm() < MIN_SEGMENT_LENGTH {
        return Err(Error::DegenerateSegment {
            from: from.name(),
            to: to.name(),
        });
    }
    Ok(v)
}

/// Angle in degrees between two non-zero vectors, in `[0, 180]`.
pub fn angle_between_deg(a: Vec3, b: Vec3) -> f64 {
    // atan2 keeps precision near 0 and 180 where acos does not.
    a.cross(b).norm().atan2(a.dot(b)).to_degrees()
}

/// Angle at the joint vertex between its two adjacent segments, in degrees.
pub fn joint_angle(frame: &SkeletonFrame, joint: JointId) -> Result<f64> {
    let (vertex, a, b) = joint.keypoints();
    let ra = segment(frame, vertex, a)?;
    let rb = segment(frame, vertex, b)?;
    Ok(angle_between_deg(ra, rb))
}

/// Unit vector from the segment's start keypoint to its end keypoint.
pub fn segment_direction(frame: &SkeletonFrame, seg: SegmentId) -> Result<Vec3> {
    let (from, to) = seg.endpoints();
    let v = segment(frame, from, to)?;
    Ok(v * (1.0 / v.norm()))
}

/// Head height, taken as the nose y coordinate.
pub fn head_height(frame: &SkeletonFrame) -> Result<f64> {
    Ok(keypoint(frame, KeypointId::Nose)?.y)
}

/// Mean y of the two ankles, or the one valid ankle.
pub fn ankle_height(frame: &SkeletonFrame) -> Result<f64> {
    match (
        frame.get(KeypointId::LeftAnkle),
        frame.get(KeypointId::RightAnkle),
    ) {
        (Some(l), Some(r)) => Ok((l.y + r.y) / 2.0),
        (Some(p), None) | (None, Some(p)) => Ok(p.y),
        (None, None) => Err(Error::Missing("left_ankle and right_ankle")),
    }
}

/// Vertical features tracked for jump and crouch scenes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeightFeature {
    Head,
    Foot,
}

impl HeightFeature {
    pub fn name(self) -> &'static str {
        match self {
            HeightFeature::Head => "head",
            HeightFeature::Foot => "foot",
        }
    }

    pub fn measure(self, frame: &SkeletonFrame) -> Result<f64> {
        match self {
            HeightFeature::Head => head_height(frame),
            HeightFeature::Foot => ankle_height(frame),
        }
    }
}

/// Fills `None` gaps by linear interpolation between the nearest valid
/// neighbours; leading and trailing gaps take the nearest valid value.
/// Returns `None` when nothing is valid.
pub fn fill_gaps(values: &[Option<f64>]) -> Option<Vec<f64>> {
    let known: Vec<(usize, f64)> = values
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|v| (i, v)))
        .collect();
    let (&(first_i, first_v), &(last_i, last_v)) = (known.first()?, known.last()?);
    let mut out = Vec::with_capacity(values.len());
    let mut next = 0;
    for i in 0..values.len() {
        if i <= first_i {
            out.push(first_v);
            continue;
        }
        if i >= last_i {
            out.push(last_v);
            continue;
        }
        while known[next + 1].0 <= i {
            next += 1;
        }
        let (i0, v0) = known[next];
        if i0 == i {
            out.push(v0);
        } else {
            let (i1, v1) = known[next + 1];
            let t = (i - i0) as f64 / (i1 - i0) as f64;
            out.push(v0 + (v1 - v0) * t);
        }
    }
    Some(out)
}

fn feature_series(
    scene: &ScenePose,
    performer: &str,
    feature: &str,
    measure: impl Fn(&SkeletonFrame) -> Result<f64>,
) -> Result<TimeSeries> {
    let frames = scene.frames(performer)?;
    let values = frames
        .iter()
        .map(|f| match measure(f) {
            Ok(v) => Ok(Some(v)),
            Err(Error::Missing(_) | Error::DegenerateSegment { .. }) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<Vec<_>>>()?;
    let filled = fill_gaps(&values).ok_or_else(|| Error::NoValidFrames {
        performer: performer.to_string(),
        feature: feature.to_string(),
    })?;
    TimeSeries::new(filled)
}

/// Per-frame angle of `joint` for one performer, gaps interpolated.
pub fn angle_series(scene: &ScenePose, performer: &str, joint: JointId) -> Result<TimeSeries> {
    feature_series(scene, performer, joint.feature(), |f| joint_angle(f, joint))
}

/// Per-frame head or ankle height for one performer, gaps interpolated.
pub fn height_series(
    scene: &ScenePose,
    performer: &str,
    feature: HeightFeature,
) -> Result<TimeSeries> {
    feature_series(scene, performer, feature.name(), |f| feature.measure(f))
}
