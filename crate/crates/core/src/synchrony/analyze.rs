use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::{
    crouch_synchrony, direction_synchrony, joint_angle_synchrony, jump_synchrony, SynchronyMode,
};
use crate::align::DbaConfig;
use crate::error::{Error, Result};
use crate::kinematics::{JointId, SegmentId};
use crate::scene_io::{Provenance, ReportRow, SceneKind, ScenePose, SynchronyReport};

/// Settings for [`analyze_scene`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnalysisConfig {
    /// Performers to compare; `None` means every performer in the scene.
    pub performers: Option<Vec<String>>,
    pub mode: SynchronyMode,
}

impl AnalysisConfig {
    /// Performer ids to analyze, validated against the scene.
    pub fn resolve<'a>(&'a self, scene: &'a ScenePose) -> Result<Vec<&'a str>> {
        match &self.performers {
            None => Ok(scene.performer_ids().collect()),
            Some(list) => {
                let mut out: Vec<&str> = Vec::with_capacity(list.len());
                for p in list {
                    scene.frames(p)?;
                    if out.contains(&p.as_str()) {
                        return Err(Error::InvalidConfig(format!("performer {p:?} listed twice")));
                    }
                    out.push(p);
                }
                Ok(out)
            }
        }
    }

    fn hash(&self, performers: &[&str]) -> String {
        let dba = DbaConfig::default();
        let canonical = format!(
            "mode={};performers={};dba_init=medoid;dba_max_iter={};dba_tol={:e}",
            self.mode,
            performers.join(","),
            dba.max_iter,
            dba.tol
        );
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }
}

/// Runs every metric that applies to the scene's kind and assembles the
/// report: joint-angle and direction rows for dance, head and foot rows for
/// jump, a head row for down.
pub fn analyze_scene(scene: &ScenePose, config: &AnalysisConfig) -> Result<SynchronyReport> {
    let performers = config.resolve(scene)?;
    if performers.len() < 2 {
        return Err(Error::TooFewPerformers(performers.len()));
    }
    let rows = match scene.kind {
        SceneKind::Dance => {
            let angles = JointId::ALL
                .par_iter()
                .map(|&j| joint_angle_synchrony(scene, &performers, j, config.mode).map(ReportRow::Angle))
                .collect::<Result<Vec<_>>>()?;
            let directions = SegmentId::ALL
                .par_iter()
                .map(|&s| direction_synchrony(scene, &performers, s).map(ReportRow::Direction))
                .collect::<Result<Vec<_>>>()?;
            angles.into_iter().chain(directions).collect()
        }
        SceneKind::Jump => {
            let (head, foot) = jump_synchrony(scene, &performers)?;
            vec![ReportRow::Height(head), ReportRow::Height(foot)]
        }
        SceneKind::Down => vec![ReportRow::Height(crouch_synchrony(scene, &performers)?)],
    };
    let report = SynchronyReport {
        scene_id: scene.scene_id.clone(),
        kind: scene.kind,
        rows,
        provenance: Provenance {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config_hash: config.hash(&performers),
        },
    };
    report.validate()?;
    Ok(report)
}
