//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use dance_sync::align::{dba, dtw, dtw_brute_force, local_distance, DbaConfig, TimeSeries};
use dance_sync::cli;
use dance_sync::kinematics::{joint_angle, segment_direction, JointId, SegmentId, SkeletonFrame, Vec3};
use dance_sync::scene_io::{load_scene, parse_scene, scene_to_json, SceneKind, ScenePose};
use dance_sync::synchrony::{
    crouch_synchrony, direction_synchrony, joint_angle_synchrony, jump_synchrony,
    synchrony_rate, SynchronyMode,
};
use dance_sync::synth::{generate, SynthConfig, Template};
use dance_sync::{Error, KeypointId};
use indexmap::IndexMap;
use nalgebra::{Rotation3, Unit, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

struct Criterion {
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ids(scene: &ScenePose) -> Vec<&str> {
    scene.performer_ids().collect()
}

// ---------------------------------------------------------------------------

fn rate_formula_regression() -> Outcome {
    let text = std::fs::read_to_string(fixture("rate_table.tsv")).map_err(|e| e.to_string())?;
    let mut rows = 0;
    let mut worst: f64 = 0.0;
    for line in text.lines().filter(|l| !l.starts_with('#')) {
        let cols: Vec<&str> = line.split('\t').collect();
        let num = |i: usize| cols[i].parse::<f64>().map_err(|e| format!("{line}: {e}"));
        let (avg, max, printed) = (num(2)?, num(3)?, num(4)?);
        let err = (synchrony_rate(avg, max) - printed).abs();
        worst = worst.max(err);
        ensure(err <= 5e-5, || format!("{} {}: off by {err:e}", cols[0], cols[1]))?;
        rows += 1;
    }
    ensure(rows == 30, || format!("expected 30 rows, found {rows}"))?;
    Ok(format!("30 rows, worst error {worst:.1e} pp"))
}

fn all_series(max_len: usize, alphabet: &[f64]) -> Vec<TimeSeries> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<f64>> = vec![vec![]];
    for _ in 0..max_len {
        current = current
            .iter()
            .flat_map(|s| {
                alphabet.iter().map(move |&a| {
                    let mut n = s.clone();
                    n.push(a);
                    n
                })
            })
            .collect();
        out.extend(current.iter().map(|s| TimeSeries::new(s.clone()).unwrap()));
    }
    out
}

fn dtw_oracle_equivalence() -> Outcome {
    let series = all_series(5, &[0.0, 1.0, 2.0]);
    let mut pairs = 0u64;
    for x in &series {
        for y in &series {
            let fast = dtw(x, y, false).distance;
            let slow = dtw_brute_force(x, y).map_err(|e| e.to_string())?;
            ensure(fast == slow, || {
                format!("{:?} vs {:?}: dtw {fast} brute {slow}", x.samples(), y.samples())
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs, exact match"))
}

fn random_series(rng: &mut ChaCha8Rng, max_len: usize) -> TimeSeries {
    let n = rng.random_range(1..=max_len);
    TimeSeries::new((0..n).map(|_| rng.random_range(-90.0..180.0)).collect()).unwrap()
}

fn dtw_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD7);
    for k in 0..1000 {
        let x = random_series(&mut rng, 60);
        let y = random_series(&mut rng, 60);
        let xy = dtw(&x, &y, false);
        let yx = dtw(&y, &x, false);
        let xx = dtw(&x, &x, false);
        ensure(xx.distance == 0.0, || format!("pair {k}: identity gave {}", xx.distance))?;
        ensure(xy.distance >= 0.0, || format!("pair {k}: negative distance"))?;
        let scale = xy.distance.max(1e-300);
        ensure((xy.distance - yx.distance).abs() <= 1e-9 * scale, || {
            format!("pair {k}: asymmetric {} vs {}", xy.distance, yx.distance)
        })?;
        let path = &xy.path;
        ensure(path[0] == (0, 0) && *path.last().unwrap() == (x.len() - 1, y.len() - 1), || {
            format!("pair {k}: path endpoints {:?}..{:?}", path[0], path.last())
        })?;
        for w in path.windows(2) {
            let (di, dj) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            ensure(matches!((di, dj), (1, 0) | (0, 1) | (1, 1)), || {
                format!("pair {k}: bad step {:?} -> {:?}", w[0], w[1])
            })?;
        }
        let cost: f64 = path
            .iter()
            .map(|&(i, j)| local_distance(x.samples()[i], y.samples()[j]))
            .sum();
        ensure((cost - xy.distance).abs() <= 1e-9 * scale, || {
            format!("pair {k}: path cost {cost} vs distance {}", xy.distance)
        })?;
    }
    Ok("1000 pairs: identity, symmetry, nonnegativity, path cost".into())
}

fn dba_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xDBA);
    let mut total_iters = 0;
    for k in 0..100 {
        let inputs: Vec<TimeSeries> = (0..4)
            .map(|_| {
                TimeSeries::new((0..80).map(|_| rng.random_range(0.0..180.0)).collect()).unwrap()
            })
            .collect();
        let b = dba(&inputs, &DbaConfig::default()).map_err(|e| e.to_string())?;
        total_iters += b.iterations;
        for (i, w) in b.objective_trace.windows(2).enumerate() {
            ensure(w[1] <= w[0] + 1e-9, || {
                format!("input {k}: objective rose at step {i}: {} -> {}", w[0], w[1])
            })?;
        }
        let same = vec![inputs[0].clone(); 4];
        let fixed = dba(&same, &DbaConfig { max_iter: 1, ..DbaConfig::default() })
            .map_err(|e| e.to_string())?;
        ensure(fixed.series == inputs[0] && fixed.objective() == 0.0, || {
            format!("input {k}: identical inputs not a fixed point")
        })?;
    }
    Ok(format!("100 inputs, {total_iters} accepted updates, traces non-increasing; fixed point holds"))
}

fn random_frame(rng: &mut ChaCha8Rng) -> SkeletonFrame {
    let cfg = SynthConfig {
        seed: rng.random(),
        frames: 8,
        performers: 1,
        direction_noise_deg: 15.0,
        ..SynthConfig::new(Template::ArmWave)
    };
    let scene = generate(&cfg).unwrap();
    scene.frames("p1").unwrap()[rng.random_range(0..8)].clone()
}

fn kinematics_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x51);
    let mut worst_angle: f64 = 0.0;
    let mut worst_dir: f64 = 0.0;
    for k in 0..100 {
        let frame = random_frame(&mut rng);
        let axis = Unit::new_normalize(Vector3::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0f64),
        ));
        let rot = Rotation3::from_axis_angle(&axis, rng.random_range(0.0..std::f64::consts::TAU));
        let shift = Vector3::new(
            rng.random_range(-5.0..5.0),
            rng.random_range(-5.0..5.0),
            rng.random_range(-5.0..5.0),
        );
        let scale = rng.random_range(0.1..10.0);
        let apply = |v: Vec3| {
            let p = rot * Vector3::new(v.x, v.y, v.z) * scale + shift;
            Vec3::new(p.x, p.y, p.z)
        };
        let moved = frame.map_positions(apply);
        for j in JointId::ALL {
            let a = joint_angle(&frame, j).map_err(|e| e.to_string())?;
            let b = joint_angle(&moved, j).map_err(|e| e.to_string())?;
            worst_angle = worst_angle.max((a - b).abs());
            ensure((a - b).abs() <= 1e-6, || format!("transform {k}, {j}: {a} vs {b}"))?;
            ensure((0.0..=180.0).contains(&a), || format!("{j} out of range: {a}"))?;
        }
        for s in SegmentId::ALL {
            let d = segment_direction(&frame, s).map_err(|e| e.to_string())?;
            let e = segment_direction(&moved, s).map_err(|e| e.to_string())?;
            let rd = rot * Vector3::new(d.x, d.y, d.z);
            let err = (rd - Vector3::new(e.x, e.y, e.z)).amax();
            worst_dir = worst_dir.max(err);
            ensure(err <= 1e-9, || format!("transform {k}, {s}: equivariance error {err:e}"))?;
            ensure((e.norm() - 1.0).abs() <= 1e-9, || format!("{s}: not unit"))?;
        }
    }
    Ok(format!(
        "100 transforms: max angle error {worst_angle:.1e} deg, max direction error {worst_dir:.1e}"
    ))
}

fn perfect_sync_calibration() -> Outcome {
    let dance = generate(&SynthConfig::new(Template::ArmWave)).map_err(|e| e.to_string())?;
    let p = ids(&dance);
    for s in SegmentId::ALL {
        let v = direction_synchrony(&dance, &p, s).map_err(|e| e.to_string())?.avg_cosine_percent;
        ensure((v - 100.0).abs() <= 1e-6, || format!("direction {s}: {v}"))?;
    }
    for j in JointId::ALL {
        let r = joint_angle_synchrony(&dance, &p, j, SynchronyMode::Barycenter)
            .map_err(|e| e.to_string())?;
        ensure(r.max_dtw == 0.0 && r.rate_percent == 100.0, || format!("angle {j}: {r:?}"))?;
    }
    let jump = generate(&SynthConfig::new(Template::Jump)).map_err(|e| e.to_string())?;
    let (head, foot) = jump_synchrony(&jump, &ids(&jump)).map_err(|e| e.to_string())?;
    ensure((head.synchrony_percent - 100.0).abs() <= 1e-6, || format!("jump head {head:?}"))?;
    ensure((foot.synchrony_percent - 100.0).abs() <= 1e-6, || format!("jump foot {foot:?}"))?;
    let down = generate(&SynthConfig::new(Template::Squat)).map_err(|e| e.to_string())?;
    let crouch = crouch_synchrony(&down, &ids(&down)).map_err(|e| e.to_string())?;
    ensure((crouch.synchrony_percent - 100.0).abs() <= 1e-6, || format!("crouch {crouch:?}"))?;
    Ok("direction, angle, jump and crouch all 100".into())
}

/// Mean (jump head, jump foot, crouch head) over seeds 0..20.
fn mean_height_scores(height_noise: f64) -> Result<[f64; 3], String> {
    let mut acc = [0.0; 3];
    for seed in 0..20 {
        let jump = generate(&SynthConfig {
            seed,
            height_noise,
            ..SynthConfig::new(Template::Jump)
        })
        .map_err(|e| e.to_string())?;
        let (h, f) = jump_synchrony(&jump, &ids(&jump)).map_err(|e| e.to_string())?;
        let down = generate(&SynthConfig {
            seed,
            height_noise,
            ..SynthConfig::new(Template::Squat)
        })
        .map_err(|e| e.to_string())?;
        let c = crouch_synchrony(&down, &ids(&down)).map_err(|e| e.to_string())?;
        acc[0] += h.synchrony_percent / 20.0;
        acc[1] += f.synchrony_percent / 20.0;
        acc[2] += c.synchrony_percent / 20.0;
    }
    Ok(acc)
}

fn monotone_degradation() -> Outcome {
    let levels = [0.0, 0.02, 0.05, 0.10];
    let scores = levels
        .iter()
        .map(|&s| mean_height_scores(s))
        .collect::<Result<Vec<_>, _>>()?;
    for w in 0..3 {
        for k in 1..levels.len() {
            ensure(scores[k][w] < scores[k - 1][w], || {
                format!("metric {w}: {:?} not strictly decreasing", scores.iter().map(|s| s[w]).collect::<Vec<_>>())
            })?;
        }
    }
    let fmt = |w: usize| {
        scores.iter().map(|s| format!("{:.2}", s[w])).collect::<Vec<_>>().join(" > ")
    };
    Ok(format!("jump head {} | jump foot {} | crouch {}", fmt(0), fmt(1), fmt(2)))
}

fn direction_vs_angle_structure() -> Outcome {
    let mut min_dir = f64::INFINITY;
    let mut rates: Vec<Vec<f64>> = vec![Vec::new(); JointId::ALL.len()];
    for seed in 0..20 {
        let scene = generate(&SynthConfig {
            seed,
            amplitude_scale_range: (0.7, 1.3),
            ..SynthConfig::new(Template::ArmWave)
        })
        .map_err(|e| e.to_string())?;
        let p = ids(&scene);
        for s in SegmentId::ALL {
            let v = direction_synchrony(&scene, &p, s).map_err(|e| e.to_string())?.avg_cosine_percent;
            min_dir = min_dir.min(v);
            ensure(v >= 95.0, || format!("seed {seed}, {s}: direction {v:.3} < 95"))?;
        }
        for (k, j) in JointId::ALL.into_iter().enumerate() {
            let r = joint_angle_synchrony(&scene, &p, j, SynchronyMode::Barycenter)
                .map_err(|e| e.to_string())?;
            rates[k].push(r.rate_percent);
        }
    }
    let mut min_spread = f64::INFINITY;
    for (k, r) in rates.iter().enumerate() {
        let lo = r.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = r.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        min_spread = min_spread.min(hi - lo);
        ensure(hi - lo > 20.0, || {
            format!("{}: angle-rate spread {:.2} pp <= 20", JointId::ALL[k], hi - lo)
        })?;
    }
    Ok(format!(
        "20 seeds: min direction {min_dir:.2}%, min per-joint angle-rate spread {min_spread:.1} pp"
    ))
}

fn qualitative_ranges() -> Outcome {
    let mut worst = f64::INFINITY;
    for height_noise in [0.0, 0.01, 0.02] {
        for seed in 0..20 {
            let jump = generate(&SynthConfig { seed, height_noise, ..SynthConfig::new(Template::Jump) })
                .map_err(|e| e.to_string())?;
            let (h, f) = jump_synchrony(&jump, &ids(&jump)).map_err(|e| e.to_string())?;
            let down = generate(&SynthConfig { seed, height_noise, ..SynthConfig::new(Template::Squat) })
                .map_err(|e| e.to_string())?;
            let c = crouch_synchrony(&down, &ids(&down)).map_err(|e| e.to_string())?;
            for v in [h.synchrony_percent, f.synchrony_percent, c.synchrony_percent] {
                worst = worst.min(v);
                ensure(v > 90.0, || format!("seed {seed}, jitter {height_noise}: score {v:.3}"))?;
            }
        }
    }
    Ok(format!("60 jump + 60 crouch scenes, lowest score {worst:.2}%"))
}

fn random_scene(rng: &mut ChaCha8Rng, k: usize) -> ScenePose {
    let performers = rng.random_range(1..=4);
    let frames = rng.random_range(1..=6);
    let kind = [SceneKind::Dance, SceneKind::Jump, SceneKind::Down][rng.random_range(0..3)];
    let mut map = IndexMap::new();
    for p in 0..performers {
        let seq = (0..frames)
            .map(|_| {
                let mut f = SkeletonFrame::default();
                for id in KeypointId::ALL {
                    // wide dynamic range so shortest-repr printing is exercised
                    let mag = 10f64.powi(rng.random_range(-8..4));
                    let v = Vec3::new(
                        rng.random_range(-1.0..1.0) * mag,
                        rng.random_range(-1.0..1.0) * mag,
                        rng.random_range(-1.0..1.0) * mag,
                    );
                    f.set(id, v, rng.random_bool(0.9));
                }
                f
            })
            .collect();
        map.insert(format!("dancer-{p}"), seq);
    }
    ScenePose::new(format!("scene-{k}"), kind, rng.random_range(1.0..120.0), map).unwrap()
}

fn run_cli(args: &[&str]) -> i32 {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["dance-sync"];
    full.extend_from_slice(args);
    cli::run(full, &mut out, &mut err)
}

fn io_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x10);
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for k in 0..100 {
        let scene = random_scene(&mut rng, k);
        let path = dir.path().join(format!("s{k}.scene.json"));
        dance_sync::scene_io::write_scene(&scene, &path).map_err(|e| e.to_string())?;
        let back = load_scene(&path).map_err(|e| e.to_string())?;
        ensure(back == scene, || format!("scene {k} did not round-trip"))?;
        // bit-level check on every stored coordinate
        for (id, frames) in scene.performers() {
            for (a, b) in frames.iter().zip(back.frames(id).unwrap()) {
                for kp in KeypointId::ALL {
                    let (p, q) = (a.position(kp), b.position(kp));
                    ensure(
                        p.x.to_bits() == q.x.to_bits()
                            && p.y.to_bits() == q.y.to_bits()
                            && p.z.to_bits() == q.z.to_bits(),
                        || format!("scene {k}: {kp} bits differ"),
                    )?;
                }
            }
        }
        ensure(parse_scene(&scene_to_json(&scene), "mem").is_ok(), || "reparse".into())?;
    }

    let classify = |name: &str| match load_scene(fixture(name)) {
        Ok(_) => "ok",
        Err(Error::Parse { .. }) => "parse",
        Err(Error::Schema { .. }) => "schema",
        Err(Error::Validation { .. }) => "validation",
        Err(Error::Io { .. }) => "io",
        Err(_) => "other",
    };
    let expectations = [
        ("minimal.scene.json", "ok", 0),
        ("malformed.scene.json", "parse", 1),
        ("missing_keypoint.scene.json", "schema", 1),
        ("bad_kind.scene.json", "schema", 1),
        ("frame_mismatch.scene.json", "validation", 2),
        ("does_not_exist.scene.json", "io", 1),
    ];
    for (name, class, _) in expectations {
        let got = classify(name);
        ensure(got == class, || format!("{name}: expected {class}, got {got}"))?;
    }
    for (name, _, code) in expectations.iter().skip(1) {
        let path = fixture(name);
        let got = run_cli(&["analyze", path.to_str().unwrap()]);
        ensure(got == *code, || format!("analyze {name}: exit {got}, expected {code}"))?;
    }
    // minimal has one performer: the metric itself fails
    let minimal = fixture("minimal.scene.json");
    let got = run_cli(&["analyze", minimal.to_str().unwrap()]);
    ensure(got == 3, || format!("analyze minimal: exit {got}, expected 3"))?;
    Ok("100 random scenes lossless; error classes and exit codes as specified".into())
}

fn main() {
    let criteria = [
        Criterion { name: "rate-formula regression", budget: Some(Duration::from_secs(1)), run: rate_formula_regression },
        Criterion { name: "DTW oracle equivalence", budget: Some(Duration::from_secs(60)), run: dtw_oracle_equivalence },
        Criterion { name: "DTW axioms", budget: Some(Duration::from_secs(10)), run: dtw_axioms },
        Criterion { name: "DBA properties", budget: Some(Duration::from_secs(30)), run: dba_properties },
        Criterion { name: "kinematics invariance", budget: None, run: kinematics_invariance },
        Criterion { name: "perfect-sync calibration", budget: None, run: perfect_sync_calibration },
        Criterion { name: "monotone degradation", budget: None, run: monotone_degradation },
        Criterion { name: "direction-vs-angle structure", budget: None, run: direction_vs_angle_structure },
        Criterion { name: "qualitative score ranges", budget: None, run: qualitative_ranges },
        Criterion { name: "I/O round-trip and error codes", budget: None, run: io_round_trip },
    ];

    // Honour `cargo test <filter>`: run only matching criteria.
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    let mut ran = 0;
    for c in &criteria {
        if !filter.is_empty() && !filter.iter().any(|f| c.name.contains(f.as_str())) {
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(b)) if elapsed > b => {
                Err(format!("took {elapsed:.2?}, budget {b:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  {:<32} {detail} [{elapsed:.2?}]", c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:<32} {why} [{elapsed:.2?}]", c.name);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", ran - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
