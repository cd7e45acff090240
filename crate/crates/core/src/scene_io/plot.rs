use std::path::Path;

use super::{format_value, write_atomic, SceneKind, ScenePose};
use crate::error::{Error, Result};
use crate::kinematics::{angle_series, JointId};

/// Tab-separated joint-angle table: a `#`-prefixed header, then one row per
/// frame holding the frame index and one angle column per performer.
pub fn render_plot_data(scene: &ScenePose, joint: JointId) -> Result<String> {
    if scene.kind != SceneKind::Dance {
        return Err(Error::KindMismatch {
            expected: SceneKind::Dance.to_string(),
            found: scene.kind.to_string(),
        });
    }
    let columns = scene
        .performer_ids()
        .map(|p| angle_series(scene, p, joint))
        .collect::<Result<Vec<_>>>()?;

    let mut out = String::from("#frame");
    for id in scene.performer_ids() {
        out.push('\t');
        out.push_str(id);
    }
    out.push('\n');
    for t in 0..scene.frame_count() {
        out.push_str(&t.to_string());
        for c in &columns {
            out.push('\t');
            out.push_str(&format_value(c.samples()[t]));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Writes [`render_plot_data`] output atomically.
pub fn emit_plot_data(scene: &ScenePose, joint: JointId, path: impl AsRef<Path>) -> Result<()> {
    let text = render_plot_data(scene, joint)?;
    write_atomic(path.as_ref(), text.as_bytes())
}
