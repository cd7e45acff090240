use std::fmt;
use std::path::Path;
use std::str::FromStr;

use indexmap::IndexMap;
use serde_json::{Map, Value};

use super::write_atomic;
use crate::error::{Error, Result};
use crate::kinematics::{KeypointId, SkeletonFrame};

/// Movement category of a scene; decides which metrics apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SceneKind {
    Dance,
    Jump,
    Down,
}

impl SceneKind {
    pub const fn name(self) -> &'static str {
        match self {
            SceneKind::Dance => "dance",
            SceneKind::Jump => "jump",
            SceneKind::Down => "down",
        }
    }
}

impl fmt::Display for SceneKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SceneKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dance" => Ok(SceneKind::Dance),
            "jump" => Ok(SceneKind::Jump),
            "down" => Ok(SceneKind::Down),
            other => Err(format!("unknown scene kind {other:?} (expected dance, jump or down)")),
        }
    }
}

/// Per-performer skeleton sequences for one scene.
///
/// Every performer has the same, non-zero number of frames and `fps` is
/// positive. Performer order is preserved from construction or from the
/// file.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenePose {
    pub scene_id: String,
    pub kind: SceneKind,
    pub fps: f64,
    performers: IndexMap<String, Vec<SkeletonFrame>>,
}

impl ScenePose {
    pub const DEFAULT_FPS: f64 = 24.0;

    pub fn new(
        scene_id: impl Into<String>,
        kind: SceneKind,
        fps: f64,
        performers: IndexMap<String, Vec<SkeletonFrame>>,
    ) -> Result<Self> {
        let scene = Self {
            scene_id: scene_id.into(),
            kind,
            fps,
            performers,
        };
        scene.validate()?;
        Ok(scene)
    }

    fn validate(&self) -> Result<()> {
        if !(self.fps.is_finite() && self.fps > 0.0) {
            return Err(Error::validation("fps", format!("must be positive, got {}", self.fps)));
        }
        let mut expected: Option<(&str, usize)> = None;
        for (id, frames) in &self.performers {
            if frames.is_empty() {
                return Err(Error::validation(
                    format!("performers.{id}"),
                    "performer has no frames",
                ));
            }
            for (t, frame) in frames.iter().enumerate() {
                for k in KeypointId::ALL {
                    if frame.is_valid(k) && !frame.position(k).is_finite() {
                        return Err(Error::validation(
                            format!("performers.{id}[{t}].{k}"),
                            "valid keypoint has non-finite coordinates",
                        ));
                    }
                }
            }
            match expected {
                None => expected = Some((id, frames.len())),
                Some((first, n)) if n != frames.len() => {
                    return Err(Error::validation(
                        format!("performers.{id}"),
                        format!(
                            "frame count mismatch: {first} has {n} frames, {id} has {}",
                            frames.len()
                        ),
                    ))
                }
                Some(_) => {}
            }
        }
        if expected.is_none() {
            return Err(Error::validation("performers", "scene has no performers"));
        }
        Ok(())
    }

    pub fn frame_count(&self) -> usize {
        self.performers.values().next().map_or(0, Vec::len)
    }

    pub fn performer_count(&self) -> usize {
        self.performers.len()
    }

    pub fn performer_ids(&self) -> impl Iterator<Item = &str> {
        self.performers.keys().map(String::as_str)
    }

    pub fn performers(&self) -> &IndexMap<String, Vec<SkeletonFrame>> {
        &self.performers
    }

    pub fn frames(&self, performer: &str) -> Result<&[SkeletonFrame]> {
        self.performers
            .get(performer)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownPerformer(performer.to_string()))
    }

    /// Replaces (or appends) one performer's frames, keeping the scene
    /// invariants.
    pub fn set_performer(&mut self, performer: &str, frames: Vec<SkeletonFrame>) -> Result<()> {
        let old = self.performers.insert(performer.to_string(), frames);
        if let Err(e) = self.validate() {
            match old {
                Some(old) => {
                    self.performers.insert(performer.to_string(), old);
                }
                None => {
                    self.performers.shift_remove(performer);
                }
            }
            return Err(e);
        }
        Ok(())
    }
}

/// Reads and validates a `.scene.json` file.
pub fn load_scene(path: impl AsRef<Path>) -> Result<ScenePose> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_scene(&text, &path.display().to_string())
}

/// Parses scene JSON. `origin` prefixes every error location.
pub fn parse_scene(text: &str, origin: &str) -> Result<ScenePose> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        path: origin.to_string(),
        message: e.to_string(),
    })?;
    let at = |p: &str| format!("{origin}:{p}");

    let root = doc
        .as_object()
        .ok_or_else(|| Error::schema(at("$"), "top level must be an object"))?;
    let field = |name: &str| {
        root.get(name)
            .ok_or_else(|| Error::schema(at(name), format!("missing field {name:?}")))
    };

    let scene_id = field("scene_id")?
        .as_str()
        .ok_or_else(|| Error::schema(at("scene_id"), "must be a string"))?
        .to_string();
    let kind = field("kind")?
        .as_str()
        .ok_or_else(|| Error::schema(at("kind"), "must be a string"))?
        .parse::<SceneKind>()
        .map_err(|m| Error::schema(at("kind"), m))?;
    let fps = field("fps")?
        .as_f64()
        .ok_or_else(|| Error::schema(at("fps"), "must be a number"))?;
    let performers_obj = field("performers")?
        .as_object()
        .ok_or_else(|| Error::schema(at("performers"), "must be an object"))?;

    let mut performers = IndexMap::with_capacity(performers_obj.len());
    for (id, frames) in performers_obj {
        let frames_path = format!("performers.{id}");
        let frames = frames
            .as_array()
            .ok_or_else(|| Error::schema(at(&frames_path), "must be an array of frames"))?;
        let parsed = frames
            .iter()
            .enumerate()
            .map(|(t, f)| parse_frame(f, &at(&format!("{frames_path}[{t}]"))))
            .collect::<Result<Vec<_>>>()?;
        performers.insert(id.clone(), parsed);
    }

    ScenePose::new(scene_id, kind, fps, performers).map_err(|e| match e {
        Error::Validation { path, message } => Error::Validation {
            path: at(&path),
            message,
        },
        other => other,
    })
}

fn parse_frame(value: &Value, path: &str) -> Result<SkeletonFrame> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::schema(path, "frame must be an object"))?;
    if let Some(unknown) = obj.keys().find(|k| k.parse::<KeypointId>().is_err()) {
        return Err(Error::schema(path, format!("unknown keypoint {unknown:?}")));
    }
    let mut frame = SkeletonFrame::default();
    for k in KeypointId::ALL {
        let kp_path = format!("{path}.{k}");
        let entry = obj
            .get(k.name())
            .ok_or_else(|| Error::schema(path, format!("missing keypoint {:?}", k.name())))?;
        let items = entry
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| Error::schema(&kp_path, "expected [x, y, z, visible]"))?;
        let visible = match &items[3] {
            Value::Bool(b) => *b,
            Value::Number(n) if n.as_f64() == Some(0.0) => false,
            Value::Number(n) if n.as_f64() == Some(1.0) => true,
            _ => return Err(Error::schema(&kp_path, "visible must be a boolean")),
        };
        let mut coords = [0.0; 3];
        for (c, item) in coords.iter_mut().zip(&items[..3]) {
            *c = match item {
                Value::Number(n) => n
                    .as_f64()
                    .ok_or_else(|| Error::schema(&kp_path, "coordinate out of range"))?,
                Value::Null if !visible => 0.0,
                Value::Null => {
                    return Err(Error::validation(
                        &kp_path,
                        "visible keypoint has a null coordinate",
                    ))
                }
                _ => return Err(Error::schema(&kp_path, "coordinates must be numbers")),
            };
        }
        frame.set(k, coords.into(), visible);
    }
    Ok(frame)
}

fn frame_to_json(frame: &SkeletonFrame) -> Value {
    let mut obj = Map::with_capacity(KeypointId::COUNT);
    for k in KeypointId::ALL {
        let p = frame.position(k);
        obj.insert(
            k.name().to_string(),
            Value::Array(vec![
                p.x.into(),
                p.y.into(),
                p.z.into(),
                frame.is_valid(k).into(),
            ]),
        );
    }
    Value::Object(obj)
}

/// Serializes a scene, one frame per line. Output is a pure function of the
/// scene, and float values round-trip exactly.
pub fn scene_to_json(scene: &ScenePose) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!(
        "  \"scene_id\": {},\n",
        Value::String(scene.scene_id.clone())
    ));
    out.push_str(&format!("  \"kind\": \"{}\",\n", scene.kind));
    out.push_str(&format!("  \"fps\": {},\n", Value::from(scene.fps)));
    out.push_str("  \"performers\": {");
    for (pi, (id, frames)) in scene.performers.iter().enumerate() {
        out.push_str(if pi == 0 { "\n" } else { ",\n" });
        out.push_str(&format!("    {}: [", Value::String(id.clone())));
        for (t, frame) in frames.iter().enumerate() {
            out.push_str(if t == 0 { "\n" } else { ",\n" });
            out.push_str("      ");
            out.push_str(&frame_to_json(frame).to_string());
        }
        out.push_str("\n    ]");
    }
    out.push_str("\n  }\n}\n");
    out
}

/// Writes a scene file atomically.
pub fn write_scene(scene: &ScenePose, path: impl AsRef<Path>) -> Result<()> {
    write_atomic(path.as_ref(), scene_to_json(scene).as_bytes())
}
