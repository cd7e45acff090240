//! Synchrony metrics for group dance performances.
//!
//! Given per-frame 3D skeletons for several performers in one scene, the
//! crate scores how closely they move together:
//!
//! * joint-angle synchrony: DTW distance of each performer's angle series to
//!   the DBA barycenter of the group ([`synchrony::angle_synchrony`]);
//! * limb-direction synchrony: mean cosine similarity of limb segment
//!   directions over frames and performer pairs
//!   ([`synchrony::direction_synchrony`]);
//! * jump and crouch synchrony: agreement of head and ankle height
//!   trajectories ([`synchrony::jump_synchrony`], [`synchrony::crouch_synchrony`]).
//!
//! Scenes are read from `.scene.json` files ([`scene_io`]) or generated
//! deterministically ([`synth`]). Reports mirror the familiar
//! Feature/value table layout in JSON or CSV.

pub mod align;
pub mod cli;
mod error;
pub mod kinematics;
pub mod scene_io;
pub mod synchrony;
pub mod synth;

pub use align::{dba, dtw, dtw_brute_force, AlignmentResult, Barycenter, DbaConfig, TimeSeries};
pub use error::{Error, Result};
pub use kinematics::{JointId, KeypointId, SegmentId, SkeletonFrame, Vec3};
pub use scene_io::{load_scene, SceneKind, ScenePose, SynchronyReport};
