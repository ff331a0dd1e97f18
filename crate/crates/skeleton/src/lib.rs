//! Skeleton motion data model.
//!
//! This crate owns the ground types every other crate in the workspace builds
//! on: the 25-joint capture topology ([`JointId`]), single-frame poses
//! ([`Pose`]), timed clips with subject metadata ([`SkeletonClip`]), the
//! native on-disk clip document, and the text parser for the standard
//! 25-joint capture format.
//!
//! Everything here is plain immutable data: values are safe to share across
//! threads and nothing mutates after construction.

pub mod capture;
pub mod clip;
pub mod error;
pub mod io;
pub mod joints;
pub mod pose;
pub mod seed;

pub use clip::{ActionLabel, Condition, SkeletonClip, SubjectMetadata};
pub use error::SkeletonError;
pub use joints::{JointId, KeyJoint, BONES, JOINT_COUNT};
pub use pose::{Pose, Vec3};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, SkeletonError>;
