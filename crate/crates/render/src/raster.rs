//! Capsule rasterization with a z-buffer.
//!
//! Every bone of the 24-edge skeleton topology is a capsule (cylinder with
//! spherical caps). Each pixel inside a capsule's projected bounding box
//! casts a ray and intersects it analytically; the nearest surface wins the
//! pixel. Bones with a joint behind the near plane are clipped (skipped)
//! rather than treated as errors.

use synact_skeleton::{SkeletonClip, Vec3, BONES};

use crate::camera::{CameraModel, DepthFrame};
use crate::error::{RenderError, Result};

/// Default capsule radius in meters.
pub const DEFAULT_BONE_RADIUS_M: f64 = 0.05;

/// Nearest positive ray parameter where the ray `t·dir` (origin at the
/// camera, `dir` unnormalized with dir.z = 1, so `t` is metric depth) hits
/// the capsule around segment `a..b` with radius `r`.
fn capsule_hit(dir: Vec3, a: Vec3, b: Vec3, r: f64) -> Option<f64> {
    let ba = b - a;
    let oa = -a; // ray origin is the camera at 0
    let baba = ba.dot(ba);

    let mut best: Option<f64> = None;
    let mut consider = |t: f64| {
        if t > 0.0 && best.is_none_or(|cur| t < cur) {
            best = Some(t);
        }
    };

    if baba > 1e-12 {
        // Infinite-cylinder portion, kept only where the axis projection
        // lands inside the segment.
        let bard = ba.dot(dir);
        let baoa = ba.dot(oa);
        let rdoa = dir.dot(oa);
        let oaoa = oa.dot(oa);
        let a_q = baba * dir.dot(dir) - bard * bard;
        let b_q = baba * rdoa - baoa * bard;
        let c_q = baba * oaoa - baoa * baoa - r * r * baba;
        if a_q.abs() > 1e-12 {
            let h = b_q * b_q - a_q * c_q;
            if h >= 0.0 {
                let t = (-b_q - h.sqrt()) / a_q;
                let y = baoa + t * bard;
                if y >= 0.0 && y <= baba {
                    consider(t);
                }
            }
        }
    }

    // Spherical caps (also covers zero-length bones).
    for center in [a, b] {
        let oc = -center;
        let a_s = dir.dot(dir);
        let b_s = dir.dot(oc);
        let c_s = oc.dot(oc) - r * r;
        let h = b_s * b_s - a_s * c_s;
        if h >= 0.0 {
            consider((-b_s - h.sqrt()) / a_s);
        }
    }
    best
}

struct ZBuffer {
    width: usize,
    height: usize,
    depths: Vec<f64>,
}

impl ZBuffer {
    fn new(width: usize, height: usize) -> ZBuffer {
        ZBuffer { width, height, depths: vec![f64::INFINITY; width * height] }
    }

    fn splat_capsule(&mut self, camera: &CameraModel, a: Vec3, b: Vec3, r: f64) {
        // Conservative pixel bounding box from both endpoints, padded by the
        // projected radius.
        let mut u_min = f64::INFINITY;
        let mut u_max = f64::NEG_INFINITY;
        let mut v_min = f64::INFINITY;
        let mut v_max = f64::NEG_INFINITY;
        for p in [a, b] {
            let pr = camera.fx.max(camera.fy) * r / p.z + 1.5;
            let u = camera.fx * p.x / p.z + camera.cx;
            let v = camera.fy * (-p.y) / p.z + camera.cy;
            u_min = u_min.min(u - pr);
            u_max = u_max.max(u + pr);
            v_min = v_min.min(v - pr);
            v_max = v_max.max(v + pr);
        }
        let x0 = u_min.floor().max(0.0) as usize;
        let x1 = (u_max.ceil() as isize).min(self.width as isize - 1);
        let y0 = v_min.floor().max(0.0) as usize;
        let y1 = (v_max.ceil() as isize).min(self.height as isize - 1);
        if x1 < x0 as isize || y1 < y0 as isize {
            return;
        }

        for y in y0..=y1 as usize {
            for x in x0..=x1 as usize {
                let dir = Vec3::new(
                    (x as f64 + 0.5 - camera.cx) / camera.fx,
                    -((y as f64 + 0.5 - camera.cy) / camera.fy),
                    1.0,
                );
                if let Some(t) = capsule_hit(dir, a, b, r) {
                    if t >= camera.near_m && t <= camera.far_m {
                        let cell = &mut self.depths[y * self.width + x];
                        if t < *cell {
                            *cell = t;
                        }
                    }
                }
            }
        }
    }

    fn quantized(&self, camera: &CameraModel) -> DepthFrame {
        DepthFrame {
            width: self.width,
            height: self.height,
            data: self
                .depths
                .iter()
                .map(|d| if d.is_finite() { camera.quantize(*d) } else { 0 })
                .collect(),
        }
    }
}

/// Render one pose into a depth frame.
pub fn render_pose_depth(
    pose: &synact_skeleton::Pose,
    camera: &CameraModel,
    bone_radius_m: f64,
) -> DepthFrame {
    let mut zbuf = ZBuffer::new(camera.width, camera.height);
    for (ja, jb) in BONES {
        let a = pose.position(ja);
        let b = pose.position(jb);
        // Near-plane clipping: a bone with a joint behind the near plane is
        // left out of the frame.
        if a.z < camera.near_m || b.z < camera.near_m {
            continue;
        }
        zbuf.splat_capsule(camera, a, b, bone_radius_m);
    }
    zbuf.quantized(camera)
}

/// Render every frame of a clip as 16-bit depth maps. Deterministic: the
/// output depends only on the clip, camera and radius.
pub fn render_depth(
    clip: &SkeletonClip,
    camera: &CameraModel,
    bone_radius_m: f64,
) -> Result<Vec<DepthFrame>> {
    camera.validate()?;
    if !(bone_radius_m.is_finite() && bone_radius_m > 0.0) {
        return Err(RenderError::InvalidRadius(bone_radius_m));
    }
    Ok(clip
        .frames
        .iter()
        .map(|pose| render_pose_depth(pose, camera, bone_radius_m))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use synact_skeleton::{ActionLabel, Condition, JointId, Pose, SubjectMetadata};

    fn clip_of(frames: Vec<Pose>) -> SkeletonClip {
        SkeletonClip::new(
            30.0,
            frames,
            SubjectMetadata::new(Condition::Nc, "render"),
            ActionLabel::Standing,
            0.0,
        )
        .unwrap()
    }

    fn point_pose(p: Vec3) -> Pose {
        let mut pose = Pose::origin();
        for joint in JointId::ALL {
            pose.set_position(joint, p);
        }
        pose
    }

    #[test]
    fn scene_beyond_far_plane_renders_empty() {
        let camera = CameraModel::small();
        let clip = clip_of(vec![point_pose(Vec3::new(0.0, 0.0, 40.0)); 3]);
        let frames = render_depth(&clip, &camera, 0.05).unwrap();
        assert_eq!(frames.len(), 3);
        for frame in &frames {
            assert!(frame.is_empty_silhouette());
        }
    }

    /// Point on the ray of pixel (px, py) at depth `d`, so a sphere centered
    /// there is hit dead-center by that pixel's sample ray.
    fn on_pixel_ray(camera: &CameraModel, px: usize, py: usize, d: f64) -> Vec3 {
        Vec3::new(
            (px as f64 + 0.5 - camera.cx) / camera.fx * d,
            -((py as f64 + 0.5 - camera.cy) / camera.fy) * d,
            d,
        )
    }

    #[test]
    fn sphere_on_pixel_ray_center_depth() {
        let camera = CameraModel::small();
        let (px, py) = (80usize, 60usize);
        let d = 2.5;
        let r = 0.05;
        // All joints coincide: every bone degenerates to the same sphere.
        let clip = clip_of(vec![point_pose(on_pixel_ray(&camera, px, py, d))]);
        let frames = render_depth(&clip, &camera, r).unwrap();
        let center = frames[0].get(px, py);
        assert_ne!(center, 0);
        let measured = camera.dequantize(center);
        assert!(
            (measured - (d - r)).abs() <= camera.depth_step(),
            "measured {measured}, expected {}",
            d - r
        );
    }

    #[test]
    fn axial_translation_shifts_depth_readings() {
        let camera = CameraModel::small();
        let (px, py) = (80usize, 60usize);
        let near_clip = clip_of(vec![point_pose(on_pixel_ray(&camera, px, py, 2.0))]);
        let far_clip = clip_of(vec![point_pose(on_pixel_ray(&camera, px, py, 2.5))]);
        let a = render_depth(&near_clip, &camera, 0.05).unwrap();
        let b = render_depth(&far_clip, &camera, 0.05).unwrap();
        let da = camera.dequantize(a[0].get(px, py));
        let db = camera.dequantize(b[0].get(px, py));
        assert!((db - da - 0.5).abs() <= 2.0 * camera.depth_step(), "{da} -> {db}");
    }

    #[test]
    fn z_buffer_front_surface_wins() {
        let camera = CameraModel::small();
        let front = point_pose(Vec3::new(0.0, 0.0, 2.0));
        let back = point_pose(Vec3::new(0.0, 0.0, 3.0));
        let front_only = render_pose_depth(&front, &camera, 0.05);
        let back_only = render_pose_depth(&back, &camera, 0.05);

        // A pose containing both spheres: overwrite half the joints.
        let mut both = front;
        for joint in JointId::ALL.iter().skip(12) {
            both.set_position(*joint, Vec3::new(0.0, 0.0, 3.0));
        }
        let combined = render_pose_depth(&both, &camera, 0.05);
        for i in 0..combined.data.len() {
            let f = front_only.data[i];
            let b = back_only.data[i];
            let c = combined.data[i];
            let expected = match (f, b) {
                (0, b) => b,
                (f, 0) => f,
                (f, b) => f.min(b),
            };
            assert_eq!(c, expected, "pixel {i}");
        }
    }

    #[test]
    fn bone_with_joint_behind_near_plane_is_clipped_not_an_error() {
        let camera = CameraModel::small();
        let mut pose = point_pose(Vec3::new(0.0, 0.0, 2.0));
        pose.set_position(JointId::Head, Vec3::new(0.0, 0.0, 0.1));
        let frames = render_depth(&clip_of(vec![pose]), &camera, 0.05).unwrap();
        // Still renders the rest of the skeleton.
        assert!(frames[0].nonzero_count() > 0);
    }

    #[test]
    fn invalid_radius_rejected() {
        let clip = clip_of(vec![point_pose(Vec3::new(0.0, 0.0, 2.0))]);
        assert!(render_depth(&clip, &CameraModel::small(), 0.0).is_err());
        assert!(render_depth(&clip, &CameraModel::small(), -0.1).is_err());
    }
}
