// Write a scene to disk, load it back, analyze it, and emit the report and
// a per-frame plot table.

use dance_sync::scene_io::{emit_plot_data, load_scene, write_report, write_scene, ReportFormat};
use dance_sync::synchrony::{analyze_scene, AnalysisConfig};
use dance_sync::synth::{generate, SynthConfig, Template};
use dance_sync::{Error, JointId};

pub fn run_example() -> dance_sync::Result<String> {
    let dir = tempfile::tempdir().map_err(|source| Error::Io { path: std::env::temp_dir(), source })?;
    let scene_path = dir.path().join("wave.scene.json");

    let scene = generate(&SynthConfig { seed: 9, ..SynthConfig::new(Template::ArmWave) })?;
    write_scene(&scene, &scene_path)?;
    let loaded = load_scene(&scene_path)?;
    assert_eq!(loaded, scene);

    let report = analyze_scene(&loaded, &AnalysisConfig::default())?;
    for (format, name) in [(ReportFormat::Json, "report.json"), (ReportFormat::Csv, "report.csv")] {
        write_report(&report, format, dir.path().join(name))?;
    }
    emit_plot_data(&loaded, JointId::LeftShoulder, dir.path().join("left_shoulder.tsv"))?;

    let read = |name: &str| {
        let p = dir.path().join(name);
        std::fs::read_to_string(&p).map_err(|source| Error::Io { path: p, source })
    };
    let json = read("report.json")?;
    println!("{json}");
    let plot = read("left_shoulder.tsv")?;
    println!("plot table: {} lines, header {:?}", plot.lines().count(), plot.lines().next());
    Ok(json)
}

fn main() -> dance_sync::Result<()> {
    run_example().map(drop)
}
