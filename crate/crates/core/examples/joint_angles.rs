// Extract joint angles, limb directions and heights from a skeleton.

use dance_sync::kinematics::{
    angle_series, head_height, joint_angle, segment_direction, JointId, SegmentId,
};
use dance_sync::synth::{generate, SynthConfig, Template};

pub fn run_example() -> dance_sync::Result<Vec<f64>> {
    let scene = generate(&SynthConfig { frames: 48, ..SynthConfig::new(Template::ArmWave) })?;
    let first = &scene.frames("p1")?[0];

    println!("frame 0 of p1:");
    for joint in JointId::ALL {
        println!("  {:<16} {:7.2} deg", joint.feature(), joint_angle(first, joint)?);
    }
    for seg in SegmentId::ALL {
        let d = segment_direction(first, seg)?;
        println!("  {:<30} ({:+.3}, {:+.3}, {:+.3})", seg.label(), d.x, d.y, d.z);
    }
    println!("  head height {:.3}", head_height(first)?);

    let elbow = angle_series(&scene, "p1", JointId::LeftElbow)?;
    let (lo, hi) = elbow
        .samples()
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    println!("left elbow over {} frames: {lo:.1}..{hi:.1} deg", elbow.len());
    Ok(elbow.into_inner())
}

fn main() -> dance_sync::Result<()> {
    run_example().map(drop)
}
