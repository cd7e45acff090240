// Generate reproducible synthetic scenes and perturb a performer in time.

use dance_sync::scene_io::scene_to_json;
use dance_sync::synth::{generate, perturb_time, SynthConfig, Template};
use dance_sync::KeypointId;

pub fn run_example() -> dance_sync::Result<usize> {
    let config = SynthConfig {
        performers: 3,
        frames: 48,
        seed: 42,
        time_jitter_frames: 2.0,
        amplitude_scale_range: (0.9, 1.1),
        height_noise: 0.01,
        ..SynthConfig::new(Template::ArmWave)
    };
    let scene = generate(&config)?;
    assert_eq!(scene_to_json(&scene), scene_to_json(&generate(&config)?), "same seed, same scene");
    println!(
        "{}: {} performers x {} frames at {} fps",
        scene.scene_id,
        scene.performer_count(),
        scene.frame_count(),
        scene.fps
    );

    let shifted = perturb_time(&scene, "p1", 3.5)?;
    let before = scene.frames("p1")?[20].position(KeypointId::LeftWrist);
    let after = shifted.frames("p1")?[20].position(KeypointId::LeftWrist);
    println!("p1 left wrist at frame 20: {before:?} -> {after:?} after a 3.5-frame delay");

    let json = scene_to_json(&scene);
    println!("serialized scene is {} bytes", json.len());
    Ok(json.len())
}

fn main() -> dance_sync::Result<()> {
    run_example().map(drop)
}
