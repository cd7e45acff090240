//! Command-line front end: `analyze`, `dtw`, `dba`, `synth`, `plot`.
//!
//! Exit codes: 0 success; 1 bad flags, unreadable or malformed input;
//! 2 input that parses but violates an invariant (including a scene of the
//! wrong kind); 3 a metric that cannot be computed. Diagnostics go to the
//! error stream, results to the output stream or the `--out` file. Files
//! are written through a temporary and renamed, so failures leave no
//! partial output.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::align::{dba, dtw, DbaConfig, TimeSeries};
use crate::error::{Error, Result};
use crate::kinematics::JointId;
use crate::scene_io::{
    format_value, load_scene, render_plot_data, render_report, write_atomic, write_scene,
    ReportFormat,
};
use crate::synchrony::{analyze_scene, AnalysisConfig, SynchronyMode};
use crate::synth::{generate, SynthConfig, Template};

#[derive(Debug, Parser)]
#[command(name = "dance-sync", version, about = "Group dance synchrony metrics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Score a scene file and write its synchrony report.
    Analyze {
        scene: PathBuf,
        /// Comma-separated performer ids (default: all).
        #[arg(long, value_delimiter = ',')]
        performers: Option<Vec<String>>,
        /// DTW distances: barycenter or pairwise.
        #[arg(long, default_value = "barycenter")]
        mode: SynchronyMode,
        /// json or csv.
        #[arg(long, default_value = "json")]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// DTW distance between two single-column series files.
    Dtw { a: PathBuf, b: PathBuf },
    /// DTW barycenter of one or more single-column series files.
    Dba {
        #[arg(required = true)]
        series: Vec<PathBuf>,
        #[arg(long, default_value_t = 30)]
        max_iter: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a synthetic scene file.
    Synth(SynthArgs),
    /// Per-performer joint-angle columns of a dance scene, for plotting.
    Plot {
        scene: PathBuf,
        #[arg(long)]
        joint: JointId,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct SynthArgs {
    #[arg(long, default_value = "arm_wave")]
    template: Template,
    #[arg(long, default_value_t = 4)]
    performers: usize,
    #[arg(long, default_value_t = 96)]
    frames: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Max per-performer time offset, frames.
    #[arg(long, default_value_t = 0.0)]
    time_jitter: f64,
    #[arg(long, default_value_t = 1.0)]
    amp_lo: f64,
    #[arg(long, default_value_t = 1.0)]
    amp_hi: f64,
    /// Limb angle noise, degrees.
    #[arg(long, default_value_t = 0.0)]
    direction_noise: f64,
    /// Vertical jitter as a fraction of motion amplitude.
    #[arg(long, default_value_t = 0.0)]
    height_noise: f64,
    #[arg(long, default_value_t = 24.0)]
    fps: f64,
    #[arg(long)]
    scene_id: Option<String>,
    /// Output path (default: `<scene_id>.scene.json`).
    #[arg(long)]
    out: Option<PathBuf>,
}

impl From<&SynthArgs> for SynthConfig {
    fn from(a: &SynthArgs) -> Self {
        SynthConfig {
            template: a.template,
            performers: a.performers,
            frames: a.frames,
            seed: a.seed,
            time_jitter_frames: a.time_jitter,
            amplitude_scale_range: (a.amp_lo, a.amp_hi),
            direction_noise_deg: a.direction_noise,
            height_noise: a.height_noise,
            fps: a.fps,
            scene_id: a.scene_id.clone(),
        }
    }
}

/// Process exit code for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. }
        | Error::Schema { .. }
        | Error::Io { .. }
        | Error::InvalidConfig(_)
        | Error::EmptySeries
        | Error::NonFiniteSample { .. } => 1,
        Error::Validation { .. } | Error::KindMismatch { .. } | Error::UnknownPerformer(_) => 2,
        _ => 3,
    }
}

/// Reads a single-column numeric file. Blank lines and `#` comments are
/// skipped.
pub fn read_series(path: &Path) -> Result<TimeSeries> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut samples = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |m: String| Error::Parse {
            path: format!("{}:{}", path.display(), n + 1),
            message: m,
        };
        let v: f64 = line
            .parse()
            .map_err(|_| parse_err(format!("not a number: {line:?}")))?;
        if !v.is_finite() {
            return Err(parse_err(format!("non-finite value {line:?}")));
        }
        samples.push(v);
    }
    TimeSeries::new(samples).map_err(|_| Error::Parse {
        path: path.display().to_string(),
        message: "no samples".into(),
    })
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => write_atomic(p, text.as_bytes()),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Error::io("<stdout>", e)),
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Analyze {
            scene,
            performers,
            mode,
            format,
            out: path,
        } => {
            let scene = load_scene(&scene)?;
            let report = analyze_scene(&scene, &AnalysisConfig { performers, mode })?;
            emit(out, path.as_deref(), &render_report(&report, format)?)
        }
        Command::Dtw { a, b } => {
            let (a, b) = (read_series(&a)?, read_series(&b)?);
            let r = dtw(&a, &b, false);
            emit(out, None, &format!("{}\n", format_value(r.distance)))
        }
        Command::Dba {
            series,
            max_iter,
            tol,
            out: path,
        } => {
            if !(tol.is_finite() && tol >= 0.0) {
                return Err(Error::InvalidConfig(format!("tol must be non-negative, got {tol}")));
            }
            let inputs = series
                .iter()
                .map(|p| read_series(p))
                .collect::<Result<Vec<_>>>()?;
            let config = DbaConfig {
                max_iter,
                tol,
                ..DbaConfig::default()
            };
            let b = dba(&inputs, &config)?;
            let _ = writeln!(
                err,
                "dba: {} iterations, objective {}",
                b.iterations,
                format_value(b.objective())
            );
            let text: String = b
                .series
                .samples()
                .iter()
                .map(|v| format_value(*v) + "\n")
                .collect();
            emit(out, path.as_deref(), &text)
        }
        Command::Synth(args) => {
            let config = SynthConfig::from(&args);
            let scene = generate(&config)?;
            let path = args
                .out
                .unwrap_or_else(|| PathBuf::from(format!("{}.scene.json", config.scene_id())));
            write_scene(&scene, &path)?;
            emit(out, None, &format!("{}\n", path.display()))
        }
        Command::Plot {
            scene,
            joint,
            out: path,
        } => {
            let scene = load_scene(&scene)?;
            emit(out, path.as_deref(), &render_plot_data(&scene, joint)?)
        }
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
