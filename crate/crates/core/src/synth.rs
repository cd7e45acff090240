//! Deterministic synthetic multi-performer scenes.
//!
//! Each template drives a minimal articulated figure (17 keypoints, y up,
//! performer facing +z, left side at +x) through one movement:
//!
//! * `arm_wave`: shoulders and elbows sweep sinusoidally with period
//!   [`ARM_WAVE_PERIOD_FRAMES`]; knees flex gently in phase. Dance scene.
//! * `squat`: hips and knees flex into a crouch and back during the middle
//!   half of the clip, lowering the whole upper body. Down scene.
//! * `jump`: the whole figure follows a parabolic arc of height
//!   [`JUMP_HEIGHT`] during the middle half of the clip. Jump scene.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)`. Draw order:
//! for each performer in turn, one uniform time offset then one uniform
//! amplitude scale; then for each performer and each frame, six standard
//! normals (shoulder, elbow, hip angle noise, left then right for each)
//! followed by one standard normal for vertical jitter. Every draw is made
//! even when its magnitude is zero, so the same seed reuses the same
//! underlying numbers across configurations.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::kinematics::{KeypointId, SkeletonFrame, Vec3};
use crate::scene_io::{SceneKind, ScenePose};

pub const ARM_WAVE_PERIOD_FRAMES: f64 = 24.0;
pub const JUMP_HEIGHT: f64 = 0.3;
/// Peak hip flexion of the squat, degrees (knees flex twice as much).
pub const SQUAT_DEPTH_DEG: f64 = 60.0;

const GROUND: f64 = 0.05;
const THIGH: f64 = 0.45;
const SHIN: f64 = 0.45;
const TORSO: f64 = 0.5;
const UPPER_ARM: f64 = 0.3;
const FOREARM: f64 = 0.25;
const HIP_HALF_WIDTH: f64 = 0.1;
const SHOULDER_HALF_WIDTH: f64 = 0.18;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Template {
    ArmWave,
    Squat,
    Jump,
}

impl Template {
    pub fn name(self) -> &'static str {
        match self {
            Template::ArmWave => "arm_wave",
            Template::Squat => "squat",
            Template::Jump => "jump",
        }
    }

    pub fn scene_kind(self) -> SceneKind {
        match self {
            Template::ArmWave => SceneKind::Dance,
            Template::Squat => SceneKind::Down,
            Template::Jump => SceneKind::Jump,
        }
    }

    fn params(self, t: f64, frames: usize, scale: f64) -> PoseParams {
        match self {
            Template::ArmWave => {
                let phase = 2.0 * PI * t / ARM_WAVE_PERIOD_FRAMES;
                let abduction = 60.0 + scale * 35.0 * phase.sin();
                let elbow = 40.0 + scale * 30.0 * (phase + PI / 3.0).sin();
                let hip = 10.0 + scale * 8.0 * phase.sin();
                PoseParams {
                    lift: 0.0,
                    abduction: [abduction; 2],
                    elbow_flex: [elbow; 2],
                    hip_flex: [hip; 2],
                    knee_ratio: 2.0,
                }
            }
            Template::Squat => {
                let depth = SQUAT_DEPTH_DEG * scale * middle_half_bump(t, frames);
                PoseParams {
                    lift: 0.0,
                    abduction: [15.0; 2],
                    elbow_flex: [10.0; 2],
                    hip_flex: [depth; 2],
                    knee_ratio: 2.0,
                }
            }
            Template::Jump => {
                let (start, duration) = jump_window(frames);
                let tau = (t - start) / duration;
                let lift = if (0.0..=1.0).contains(&tau) {
                    JUMP_HEIGHT * scale * 4.0 * tau * (1.0 - tau)
                } else {
                    0.0
                };
                PoseParams {
                    lift,
                    abduction: [20.0; 2],
                    elbow_flex: [15.0; 2],
                    hip_flex: [5.0; 2],
                    knee_ratio: 2.0,
                }
            }
        }
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Template {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "arm_wave" => Ok(Template::ArmWave),
            "squat" => Ok(Template::Squat),
            "jump" => Ok(Template::Jump),
            other => Err(format!("unknown template {other:?} (expected arm_wave, squat or jump)")),
        }
    }
}

/// `(start_frame, duration_frames)` of the airborne phase for a clip of
/// `frames` frames.
pub fn jump_window(frames: usize) -> (f64, f64) {
    let n = frames as f64;
    (n / 4.0, n / 2.0)
}

/// `sin^2` bump over the middle half of the clip, zero elsewhere.
fn middle_half_bump(t: f64, frames: usize) -> f64 {
    let (start, duration) = jump_window(frames);
    let tau = (t - start) / duration;
    if (0.0..=1.0).contains(&tau) {
        (PI * tau).sin().powi(2)
    } else {
        0.0
    }
}

#[derive(Debug, Clone)]
pub struct SynthConfig {
    pub template: Template,
    pub performers: usize,
    pub frames: usize,
    pub seed: u64,
    /// Each performer is offset in time by a uniform draw from
    /// `[-time_jitter_frames, time_jitter_frames]`.
    pub time_jitter_frames: f64,
    /// Each performer's movement amplitude is scaled by a uniform draw from
    /// this range.
    pub amplitude_scale_range: (f64, f64),
    /// Standard deviation, in degrees, of per-frame noise on the limb angles.
    pub direction_noise_deg: f64,
    /// Standard deviation of per-frame vertical jitter, as a fraction of the
    /// template's head-height amplitude.
    pub height_noise: f64,
    pub fps: f64,
    /// Defaults to `synth-<template>-s<seed>`.
    pub scene_id: Option<String>,
}

impl Default for SynthConfig {
    fn default() -> Self {
        Self {
            template: Template::ArmWave,
            performers: 4,
            frames: 96,
            seed: 0,
            time_jitter_frames: 0.0,
            amplitude_scale_range: (1.0, 1.0),
            direction_noise_deg: 0.0,
            height_noise: 0.0,
            fps: ScenePose::DEFAULT_FPS,
            scene_id: None,
        }
    }
}

impl SynthConfig {
    pub fn new(template: Template) -> Self {
        Self {
            template,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfig(m));
        if self.performers < 1 {
            return bad("performers must be at least 1".into());
        }
        if self.frames < 2 {
            return bad(format!("frames must be at least 2, got {}", self.frames));
        }
        let (lo, hi) = self.amplitude_scale_range;
        if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo <= hi) {
            return bad(format!("amplitude scale range [{lo}, {hi}] must satisfy 0 < lo <= hi"));
        }
        for (name, v) in [
            ("time jitter", self.time_jitter_frames),
            ("direction noise", self.direction_noise_deg),
            ("height noise", self.height_noise),
        ] {
            if !(v.is_finite() && v >= 0.0) {
                return bad(format!("{name} must be a non-negative number, got {v}"));
            }
        }
        if !(self.fps.is_finite() && self.fps > 0.0) {
            return bad(format!("fps must be positive, got {}", self.fps));
        }
        Ok(())
    }

    pub fn scene_id(&self) -> String {
        self.scene_id
            .clone()
            .unwrap_or_else(|| format!("synth-{}-s{}", self.template, self.seed))
    }

    /// Head-height range of one unperturbed performer; the unit for
    /// `height_noise`.
    pub fn motion_amplitude(&self) -> f64 {
        let (lo, hi) = (0..self.frames)
            .map(|t| {
                let p = self.template.params(t as f64, self.frames, 1.0);
                p.figure().get(KeypointId::Nose).expect("figure is fully valid").y
            })
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), y| (lo.min(y), hi.max(y)));
        hi - lo
    }
}

#[derive(Debug, Clone, Copy)]
struct PoseParams {
    lift: f64,
    /// Degrees from hanging straight down, outward in the frontal plane.
    abduction: [f64; 2],
    /// Degrees of forward bend at the elbow.
    elbow_flex: [f64; 2],
    /// Degrees of forward thigh swing.
    hip_flex: [f64; 2],
    /// Knee flexion as a multiple of hip flexion.
    knee_ratio: f64,
}

impl PoseParams {
    fn figure(&self) -> SkeletonFrame {
        use KeypointId::*;
        let forward = Vec3::new(0.0, 0.0, 1.0);
        let legs: [(Vec3, Vec3); 2] = [0, 1].map(|s| {
            let h = self.hip_flex[s].to_radians();
            let shin = h - self.knee_ratio * h;
            (
                Vec3::new(0.0, -h.cos(), h.sin()) * THIGH,
                Vec3::new(0.0, -shin.cos(), shin.sin()) * SHIN,
            )
        });
        let leg_drop = legs
            .iter()
            .map(|(thigh, shin)| -(thigh.y + shin.y))
            .fold(0.0, f64::max);
        let pelvis_y = GROUND + leg_drop + self.lift;
        let shoulder_y = pelvis_y + TORSO;

        let mut f = SkeletonFrame::default();
        for (s, side) in [1.0, -1.0].into_iter().enumerate() {
            let (hip_kp, knee_kp, ankle_kp, sh_kp, el_kp, wr_kp) = if s == 0 {
                (LeftHip, LeftKnee, LeftAnkle, LeftShoulder, LeftElbow, LeftWrist)
            } else {
                (RightHip, RightKnee, RightAnkle, RightShoulder, RightElbow, RightWrist)
            };
            let hip = Vec3::new(side * HIP_HALF_WIDTH, pelvis_y, 0.0);
            let knee = hip + legs[s].0;
            let ankle = knee + legs[s].1;
            f.set(hip_kp, hip, true);
            f.set(knee_kp, knee, true);
            f.set(ankle_kp, ankle, true);

            let a = self.abduction[s].to_radians();
            let upper = Vec3::new(side * a.sin(), -a.cos(), 0.0);
            let e = self.elbow_flex[s].to_radians();
            let fore = upper * e.cos() + forward * e.sin();
            let shoulder = Vec3::new(side * SHOULDER_HALF_WIDTH, shoulder_y, 0.0);
            let elbow = shoulder + upper * UPPER_ARM;
            f.set(sh_kp, shoulder, true);
            f.set(el_kp, elbow, true);
            f.set(wr_kp, elbow + fore * FOREARM, true);

            let (eye_kp, ear_kp) = if s == 0 { (LeftEye, LeftEar) } else { (RightEye, RightEar) };
            f.set(eye_kp, Vec3::new(side * 0.035, shoulder_y + 0.25, 0.07), true);
            f.set(ear_kp, Vec3::new(side * 0.075, shoulder_y + 0.23, 0.0), true);
        }
        f.set(Nose, Vec3::new(0.0, shoulder_y + 0.22, 0.09), true);
        f
    }
}

/// Generates a scene with performers `p1..pN`.
pub fn generate(config: &SynthConfig) -> Result<ScenePose> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let (lo, hi) = config.amplitude_scale_range;
    let individual: Vec<(f64, f64)> = (0..config.performers)
        .map(|_| {
            let offset = config.time_jitter_frames * (2.0 * rng.random::<f64>() - 1.0);
            let scale = lo + (hi - lo) * rng.random::<f64>();
            (offset, scale)
        })
        .collect();
    let height_sigma = config.height_noise * config.motion_amplitude();

    let mut performers = IndexMap::with_capacity(config.performers);
    for (p, &(offset, scale)) in individual.iter().enumerate() {
        let frames = (0..config.frames)
            .map(|t| {
                let mut params = config.template.params(t as f64 + offset, config.frames, scale);
                let mut noise = || rng.sample::<f64, _>(StandardNormal);
                for side in 0..2 {
                    params.abduction[side] += config.direction_noise_deg * noise();
                    params.elbow_flex[side] += config.direction_noise_deg * noise();
                    params.hip_flex[side] += config.direction_noise_deg * noise();
                }
                let dy = height_sigma * noise();
                let frame = params.figure();
                if dy == 0.0 {
                    frame
                } else {
                    frame.map_positions(|v| Vec3::new(v.x, v.y + dy, v.z))
                }
            })
            .collect();
        performers.insert(format!("p{}", p + 1), frames);
    }
    ScenePose::new(
        config.scene_id(),
        config.template.scene_kind(),
        config.fps,
        performers,
    )
}

/// Resamples one performer so that new frame `t` shows the pose at time
/// `t - shift_frames`, interpolating linearly between neighbouring frames
/// and clamping at the clip edges. A keypoint is valid in an interpolated
/// frame only when it is valid in both source frames.
pub fn perturb_time(scene: &ScenePose, performer: &str, shift_frames: f64) -> Result<ScenePose> {
    let n = scene.frame_count();
    if shift_frames.is_nan() || shift_frames.abs() >= n as f64 {
        return Err(Error::ShiftTooLarge {
            shift: shift_frames,
            frames: n,
        });
    }
    let frames = scene.frames(performer)?;
    let last = (n - 1) as f64;
    let resampled = (0..n)
        .map(|t| {
            let at = (t as f64 - shift_frames).clamp(0.0, last);
            let i0 = at.floor() as usize;
            let frac = at - i0 as f64;
            if frac == 0.0 {
                return frames[i0].clone();
            }
            let (a, b) = (&frames[i0], &frames[i0 + 1]);
            let mut out = SkeletonFrame::default();
            for k in KeypointId::ALL {
                out.set(
                    k,
                    a.position(k).lerp(b.position(k), frac),
                    a.is_valid(k) && b.is_valid(k),
                );
            }
            out
        })
        .collect();
    let mut shifted = scene.clone();
    shifted.set_performer(performer, resampled)?;
    Ok(shifted)
}
