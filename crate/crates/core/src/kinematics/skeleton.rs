use std::fmt;
use std::str::FromStr;

use super::Vec3;

/// The 17 body keypoints shared by common 2D detectors, in the usual
/// detector order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KeypointId {
    Nose,
    LeftEye,
    RightEye,
    LeftEar,
    RightEar,
    LeftShoulder,
    RightShoulder,
    LeftElbow,
    RightElbow,
    LeftWrist,
    RightWrist,
    LeftHip,
    RightHip,
    LeftKnee,
    RightKnee,
    LeftAnkle,
    RightAnkle,
}

impl KeypointId {
    pub const COUNT: usize = 17;

    pub const ALL: [KeypointId; 17] = [
        KeypointId::Nose,
        KeypointId::LeftEye,
        KeypointId::RightEye,
        KeypointId::LeftEar,
        KeypointId::RightEar,
        KeypointId::LeftShoulder,
        KeypointId::RightShoulder,
        KeypointId::LeftElbow,
        KeypointId::RightElbow,
        KeypointId::LeftWrist,
        KeypointId::RightWrist,
        KeypointId::LeftHip,
        KeypointId::RightHip,
        KeypointId::LeftKnee,
        KeypointId::RightKnee,
        KeypointId::LeftAnkle,
        KeypointId::RightAnkle,
    ];

    /// Name used in scene files.
    pub const fn name(self) -> &'static str {
        match self {
            KeypointId::Nose => "nose",
            KeypointId::LeftEye => "left_eye",
            KeypointId::RightEye => "right_eye",
            KeypointId::LeftEar => "left_ear",
            KeypointId::RightEar => "right_ear",
            KeypointId::LeftShoulder => "left_shoulder",
            KeypointId::RightShoulder => "right_shoulder",
            KeypointId::LeftElbow => "left_elbow",
            KeypointId::RightElbow => "right_elbow",
            KeypointId::LeftWrist => "left_wrist",
            KeypointId::RightWrist => "right_wrist",
            KeypointId::LeftHip => "left_hip",
            KeypointId::RightHip => "right_hip",
            KeypointId::LeftKnee => "left_knee",
            KeypointId::RightKnee => "right_knee",
            KeypointId::LeftAnkle => "left_ankle",
            KeypointId::RightAnkle => "right_ankle",
        }
    }

    pub const fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for KeypointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KeypointId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        KeypointId::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown keypoint {s:?}"))
    }
}

/// The eight directed limb segments whose directions are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentId {
    LeftUpperArm,
    LeftForearm,
    RightUpperArm,
    RightForearm,
    LeftThigh,
    LeftShin,
    RightThigh,
    RightShin,
}

impl SegmentId {
    pub const ALL: [SegmentId; 8] = [
        SegmentId::LeftUpperArm,
        SegmentId::LeftForearm,
        SegmentId::RightUpperArm,
        SegmentId::RightForearm,
        SegmentId::LeftThigh,
        SegmentId::LeftShin,
        SegmentId::RightThigh,
        SegmentId::RightShin,
    ];

    /// `(start, end)` keypoints; the direction points from start to end.
    pub const fn endpoints(self) -> (KeypointId, KeypointId) {
        use KeypointId::*;
        match self {
            SegmentId::LeftUpperArm => (LeftShoulder, LeftElbow),
            SegmentId::LeftForearm => (LeftElbow, LeftWrist),
            SegmentId::RightUpperArm => (RightShoulder, RightElbow),
            SegmentId::RightForearm => (RightElbow, RightWrist),
            SegmentId::LeftThigh => (LeftHip, LeftKnee),
            SegmentId::LeftShin => (LeftKnee, LeftAnkle),
            SegmentId::RightThigh => (RightHip, RightKnee),
            SegmentId::RightShin => (RightKnee, RightAnkle),
        }
    }

    /// Report label, e.g. `Left Shoulder -> Left Elbow`.
    pub const fn label(self) -> &'static str {
        match self {
            SegmentId::LeftUpperArm => "Left Shoulder -> Left Elbow",
            SegmentId::LeftForearm => "Left Elbow -> Left Wrist",
            SegmentId::RightUpperArm => "Right Shoulder -> Right Elbow",
            SegmentId::RightForearm => "Right Elbow -> Right Wrist",
            SegmentId::LeftThigh => "Left Hip -> Left Knee",
            SegmentId::LeftShin => "Left Knee -> Left Ankle",
            SegmentId::RightThigh => "Right Hip -> Right Knee",
            SegmentId::RightShin => "Right Knee -> Right Ankle",
        }
    }

    pub fn is_arm(self) -> bool {
        matches!(
            self,
            SegmentId::LeftUpperArm
                | SegmentId::LeftForearm
                | SegmentId::RightUpperArm
                | SegmentId::RightForearm
        )
    }
}

impl fmt::Display for SegmentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SegmentId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SegmentId::ALL
            .into_iter()
            .find(|seg| seg.label() == s)
            .ok_or_else(|| format!("unknown segment {s:?}"))
    }
}

/// The six joints whose angles are tracked over time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JointId {
    LeftElbow,
    RightElbow,
    LeftKnee,
    RightKnee,
    LeftShoulder,
    RightShoulder,
}

impl JointId {
    pub const ALL: [JointId; 6] = [
        JointId::LeftElbow,
        JointId::RightElbow,
        JointId::LeftKnee,
        JointId::RightKnee,
        JointId::LeftShoulder,
        JointId::RightShoulder,
    ];

    /// `(vertex, first, second)`: the angle is measured at `vertex` between
    /// the rays toward `first` and `second`. The shoulder uses the hip as its
    /// second point, giving the underarm angle.
    pub const fn keypoints(self) -> (KeypointId, KeypointId, KeypointId) {
        use KeypointId::*;
        match self {
            JointId::LeftElbow => (LeftElbow, LeftShoulder, LeftWrist),
            JointId::RightElbow => (RightElbow, RightShoulder, RightWrist),
            JointId::LeftKnee => (LeftKnee, LeftHip, LeftAnkle),
            JointId::RightKnee => (RightKnee, RightHip, RightAnkle),
            JointId::LeftShoulder => (LeftShoulder, LeftElbow, LeftHip),
            JointId::RightShoulder => (RightShoulder, RightElbow, RightHip),
        }
    }

    /// Short name used on the command line, e.g. `left_elbow`.
    pub const fn name(self) -> &'static str {
        match self {
            JointId::LeftElbow => "left_elbow",
            JointId::RightElbow => "right_elbow",
            JointId::LeftKnee => "left_knee",
            JointId::RightKnee => "right_knee",
            JointId::LeftShoulder => "left_shoulder",
            JointId::RightShoulder => "right_shoulder",
        }
    }

    /// Report feature name, e.g. `left_elbow_angle`.
    pub const fn feature(self) -> &'static str {
        match self {
            JointId::LeftElbow => "left_elbow_angle",
            JointId::RightElbow => "right_elbow_angle",
            JointId::LeftKnee => "left_knee_angle",
            JointId::RightKnee => "right_knee_angle",
            JointId::LeftShoulder => "left_shoulder_angle",
            JointId::RightShoulder => "right_shoulder_angle",
        }
    }
}

impl fmt::Display for JointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for JointId {
    type Err = String;

    /// Accepts either the short name or the `_angle` feature name.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        JointId::ALL
            .into_iter()
            .find(|j| j.name() == s || j.feature() == s)
            .ok_or_else(|| format!("unknown joint {s:?}"))
    }
}

/// One performer's keypoints at one frame.
#[derive(Debug, Clone, PartialEq)]
pub struct SkeletonFrame {
    positions: [Vec3; KeypointId::COUNT],
    valid: [bool; KeypointId::COUNT],
}

impl Default for SkeletonFrame {
    /// Every keypoint at the origin and marked invalid.
    fn default() -> Self {
        Self {
            positions: [Vec3::ZERO; KeypointId::COUNT],
            valid: [false; KeypointId::COUNT],
        }
    }
}

impl SkeletonFrame {
    /// Frame with every keypoint valid.
    pub fn from_positions(positions: [Vec3; KeypointId::COUNT]) -> Self {
        Self {
            positions,
            valid: [true; KeypointId::COUNT],
        }
    }

    pub fn set(&mut self, id: KeypointId, position: Vec3, valid: bool) {
        self.positions[id.index()] = position;
        self.valid[id.index()] = valid;
    }

    pub fn set_valid(&mut self, id: KeypointId, valid: bool) {
        self.valid[id.index()] = valid;
    }

    /// Position if the keypoint is valid.
    pub fn get(&self, id: KeypointId) -> Option<Vec3> {
        self.valid[id.index()].then_some(self.positions[id.index()])
    }

    /// Stored position regardless of validity.
    pub fn position(&self, id: KeypointId) -> Vec3 {
        self.positions[id.index()]
    }

    pub fn is_valid(&self, id: KeypointId) -> bool {
        self.valid[id.index()]
    }

    /// Applies `f` to every stored position, valid or not.
    pub fn map_positions(&self, mut f: impl FnMut(Vec3) -> Vec3) -> Self {
        Self {
            positions: self.positions.map(&mut f),
            valid: self.valid,
        }
    }
}
