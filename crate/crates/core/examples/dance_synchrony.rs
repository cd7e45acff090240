// Score a synthetic dance group: DTW-based angle synchrony and cosine
// direction synchrony, in both DTW modes.

use dance_sync::scene_io::{render_report, ReportFormat};
use dance_sync::synchrony::{
    analyze_scene, direction_synchrony, joint_angle_synchrony, AnalysisConfig, SynchronyMode,
};
use dance_sync::synth::{generate, SynthConfig, Template};
use dance_sync::{JointId, SegmentId};

pub fn run_example() -> dance_sync::Result<String> {
    let scene = generate(&SynthConfig {
        seed: 5,
        amplitude_scale_range: (0.8, 1.2),
        time_jitter_frames: 1.0,
        direction_noise_deg: 3.0,
        ..SynthConfig::new(Template::ArmWave)
    })?;
    let performers: Vec<&str> = scene.performer_ids().collect();

    for mode in [SynchronyMode::Barycenter, SynchronyMode::Pairwise] {
        let row = joint_angle_synchrony(&scene, &performers, JointId::RightElbow, mode)?;
        println!(
            "{:>10}: right elbow avg {:.2}, max {:.2}, rate {:.1}%",
            mode.to_string(),
            row.avg_dtw,
            row.max_dtw,
            row.rate_percent
        );
    }
    let arm = direction_synchrony(&scene, &performers, SegmentId::LeftForearm)?;
    println!("left forearm direction synchrony {:.2}%", arm.avg_cosine_percent);

    let report = analyze_scene(&scene, &AnalysisConfig::default())?;
    let csv = render_report(&report, ReportFormat::Csv)?;
    print!("{csv}");
    Ok(csv)
}

fn main() -> dance_sync::Result<()> {
    run_example().map(drop)
}
