use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde_json::{json, Value};

use super::{format_value, write_atomic, SceneKind};
use crate::error::{Error, Result};
use crate::kinematics::{HeightFeature, JointId, SegmentId};
use crate::synchrony::{AngleSynchronyRow, DirectionSynchronyRow, HeightSynchronyRow};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReportRow {
    Angle(AngleSynchronyRow),
    Direction(DirectionSynchronyRow),
    Height(HeightSynchronyRow),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub tool_version: String,
    /// Hex SHA-256 of the analysis settings.
    pub config_hash: String,
}

/// Score table for one scene.
///
/// Dance reports hold six angle rows and eight direction rows, jump reports
/// a head and a foot row, and down reports a single head row.
#[derive(Debug, Clone, PartialEq)]
pub struct SynchronyReport {
    pub scene_id: String,
    pub kind: SceneKind,
    pub rows: Vec<ReportRow>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(format!("unknown format {other:?} (expected json or csv)")),
        }
    }
}

/// Rows split by type, each in canonical order.
struct Sorted {
    angles: Vec<AngleSynchronyRow>,
    directions: Vec<DirectionSynchronyRow>,
    head: Option<HeightSynchronyRow>,
    foot: Option<HeightSynchronyRow>,
}

impl SynchronyReport {
    /// Checks the row set against the scene kind.
    pub fn validate(&self) -> Result<()> {
        self.sorted().map(|_| ())
    }

    fn sorted(&self) -> Result<Sorted> {
        let fail = |m: String| Err(Error::validation(format!("report {}", self.scene_id), m));
        if self.rows.is_empty() {
            return fail("report has no rows".into());
        }
        let mut angles = Vec::new();
        let mut directions = Vec::new();
        let mut head = None;
        let mut foot = None;
        for row in &self.rows {
            match *row {
                ReportRow::Angle(r) => angles.push(r),
                ReportRow::Direction(r) => directions.push(r),
                ReportRow::Height(r) => {
                    let slot = match r.feature {
                        HeightFeature::Head => &mut head,
                        HeightFeature::Foot => &mut foot,
                    };
                    if slot.replace(r).is_some() {
                        return fail(format!("duplicate {} row", r.feature.name()));
                    }
                }
            }
        }
        angles.sort_by_key(|r| JointId::ALL.iter().position(|j| *j == r.joint));
        directions.sort_by_key(|r| SegmentId::ALL.iter().position(|s| *s == r.segment));

        let ok = match self.kind {
            SceneKind::Dance => {
                angles.iter().map(|r| r.joint).eq(JointId::ALL)
                    && directions.iter().map(|r| r.segment).eq(SegmentId::ALL)
                    && head.is_none()
                    && foot.is_none()
            }
            SceneKind::Jump => {
                angles.is_empty() && directions.is_empty() && head.is_some() && foot.is_some()
            }
            SceneKind::Down => {
                angles.is_empty() && directions.is_empty() && head.is_some() && foot.is_none()
            }
        };
        if !ok {
            return fail(format!(
                "{} report needs {}; got {} angle, {} direction, {} height rows",
                self.kind,
                match self.kind {
                    SceneKind::Dance => "one angle row per joint and one direction row per segment",
                    SceneKind::Jump => "exactly a head and a foot row",
                    SceneKind::Down => "exactly a head row",
                },
                angles.len(),
                directions.len(),
                head.iter().count() + foot.iter().count(),
            ));
        }
        Ok(Sorted {
            angles,
            directions,
            head,
            foot,
        })
    }
}

fn round7(x: f64) -> Value {
    let r = (x * 1e7).round() / 1e7;
    json!(if r == 0.0 { 0.0 } else { r })
}

fn to_json(report: &SynchronyReport, rows: &Sorted) -> String {
    let mut out: Vec<Value> = Vec::new();
    for r in &rows.angles {
        out.push(json!({
            "type": "angle",
            "feature": r.joint.feature(),
            "avg_dtw_distance": round7(r.avg_dtw),
            "max_dtw_distance": round7(r.max_dtw),
            "synchrony_rate_percent": round7(r.rate_percent),
        }));
    }
    for r in &rows.directions {
        out.push(json!({
            "type": "direction",
            "joint_pair": r.segment.label(),
            "avg_cosine_similarity_percent": round7(r.avg_cosine_percent),
        }));
    }
    for r in rows.head.iter().chain(&rows.foot) {
        out.push(json!({
            "type": "height",
            "feature": r.feature.name(),
            "synchrony_percent": round7(r.synchrony_percent),
        }));
    }
    let doc = json!({
        "scene_id": report.scene_id,
        "kind": report.kind.name(),
        "provenance": {
            "tool_version": report.provenance.tool_version,
            "config_hash": report.provenance.config_hash,
        },
        "rows": out,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("report JSON is serializable");
    s.push('\n');
    s
}

fn to_csv(report: &SynchronyReport, rows: &Sorted) -> String {
    let mut s = String::new();
    match report.kind {
        SceneKind::Dance => {
            s.push_str("Feature,Avg_DTW_Distance,Max_DTW_Distance,Synchrony_Rate (%)\n");
            for r in &rows.angles {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    r.joint.feature(),
                    format_value(r.avg_dtw),
                    format_value(r.max_dtw),
                    format_value(r.rate_percent)
                );
            }
            s.push_str("Joint_Pair,Avg_Cosine_similarity(%)\n");
            for r in &rows.directions {
                let _ = writeln!(
                    s,
                    "{},{}",
                    r.segment.label(),
                    format_value(r.avg_cosine_percent)
                );
            }
        }
        SceneKind::Jump => {
            let (head, foot) = (rows.head.expect("validated"), rows.foot.expect("validated"));
            s.push_str("Feature,Head_Position_Synchrony,Foot_Position_Synchrony\n");
            let _ = writeln!(
                s,
                "jump_motion,{},{}",
                format_value(head.synchrony_percent),
                format_value(foot.synchrony_percent)
            );
        }
        SceneKind::Down => {
            let head = rows.head.expect("validated");
            s.push_str("Feature,Head_Position_Synchrony\n");
            let _ = writeln!(s, "down_motion,{}", format_value(head.synchrony_percent));
        }
    }
    s
}

/// Renders a validated report. Identical reports render to identical bytes.
pub fn render_report(report: &SynchronyReport, format: ReportFormat) -> Result<String> {
    let rows = report.sorted()?;
    Ok(match format {
        ReportFormat::Json => to_json(report, &rows),
        ReportFormat::Csv => to_csv(report, &rows),
    })
}

/// Validates, renders, and atomically writes a report.
pub fn write_report(
    report: &SynchronyReport,
    format: ReportFormat,
    path: impl AsRef<Path>,
) -> Result<()> {
    let text = render_report(report, format)?;
    write_atomic(path.as_ref(), text.as_bytes())
}
