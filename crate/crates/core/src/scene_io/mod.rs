//! Scene files, synchrony reports, and plot data.
//!
//! A scene file (`.scene.json`) is one JSON document:
//!
//! ```text
//! {
//!   "scene_id": "jump-scene1",
//!   "kind": "jump",              // dance | jump | down
//!   "fps": 24.0,
//!   "performers": {
//!     "p1": [ { "nose": [x, y, z, visible], ... 17 keypoints ... }, ... ],
//!     ...
//!   }
//! }
//! ```
//!
//! Coordinates are in the canonical y-up frame. `visible` is a boolean
//! (`0`/`1` are also accepted on input); an invisible keypoint may carry
//! `null` coordinates.

mod plot;
mod report;
mod scene;

use std::io::Write;
use std::path::Path;

pub use plot::{emit_plot_data, render_plot_data};
pub use report::{
    render_report, write_report, Provenance, ReportFormat, ReportRow, SynchronyReport,
};
pub use scene::{load_scene, parse_scene, scene_to_json, write_scene, SceneKind, ScenePose};

use crate::error::{Error, Result};

/// Writes `bytes` to a temporary file beside `path` and renames it into
/// place, so a failed write never leaves partial output behind.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut builder = tempfile::Builder::new();
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        builder.permissions(std::fs::Permissions::from_mode(0o644));
    }
    let mut tmp = builder.tempfile_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

/// Fixed seven-digit rendering used by every text output.
pub fn format_value(x: f64) -> String {
    // Avoid printing "-0.0000000".
    let x = if x == 0.0 { 0.0 } else { x };
    let s = format!("{x:.7}");
    if s == "-0.0000000" {
        "0.0000000".to_string()
    } else {
        s
    }
}
