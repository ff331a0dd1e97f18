//! 3D vectors and single-frame poses.

use serde::{Deserialize, Serialize};

use crate::joints::{JointId, JOINT_COUNT};

/// A 3D point or displacement in meters, camera-relative coordinates
/// (x right, y up, z along the optical axis).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 0.0 };

    pub fn new(x: f64, y: f64, z: f64) -> Vec3 {
        Vec3 { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(self, k: f64) -> Vec3 {
        Vec3::new(self.x * k, self.y * k, self.z * k)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Rotate about the vertical (y) axis by `angle_rad`.
    pub fn rotate_y(self, angle_rad: f64) -> Vec3 {
        let (s, c) = angle_rad.sin_cos();
        Vec3 {
            x: c * self.x + s * self.z,
            y: self.y,
            z: -s * self.x + c * self.z,
        }
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from(v: [f64; 3]) -> Vec3 {
        Vec3::new(v[0], v[1], v[2])
    }
}

impl From<Vec3> for [f64; 3] {
    fn from(v: Vec3) -> [f64; 3] {
        [v.x, v.y, v.z]
    }
}

impl std::ops::Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl std::ops::Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl std::ops::Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// One frame of skeleton motion: the positions of all 25 capture joints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pose {
    positions: [Vec3; JOINT_COUNT],
}

impl Pose {
    /// Pose with every joint at the origin.
    pub fn origin() -> Pose {
        Pose { positions: [Vec3::ZERO; JOINT_COUNT] }
    }

    pub fn from_positions(positions: [Vec3; JOINT_COUNT]) -> Pose {
        Pose { positions }
    }

    pub fn position(&self, joint: JointId) -> Vec3 {
        self.positions[joint.code()]
    }

    pub fn set_position(&mut self, joint: JointId, p: Vec3) {
        self.positions[joint.code()] = p;
    }

    pub fn positions(&self) -> &[Vec3; JOINT_COUNT] {
        &self.positions
    }

    pub fn all_finite(&self) -> bool {
        self.positions.iter().all(|p| p.is_finite())
    }

    /// Apply `f` to every joint position.
    pub fn map(&self, mut f: impl FnMut(Vec3) -> Vec3) -> Pose {
        let mut out = *self;
        for p in out.positions.iter_mut() {
            *p = f(*p);
        }
        out
    }
}
