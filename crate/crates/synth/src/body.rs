//! Forward kinematics: build a full 25-joint pose from a compact set of
//! posture parameters.
//!
//! Poses are assembled in a body-local frame (+x forward, +y up, +z toward
//! the subject's left), optionally reclined about the lateral axis, then
//! yawed to the facing direction and translated to the pelvis position.

use synact_skeleton::{JointId, Pose, Vec3};

/// Segment lengths of the canonical adult body, meters.
#[derive(Debug, Clone, PartialEq)]
pub struct BodyModel {
    pub hip_halfwidth: f64,
    pub shoulder_halfwidth: f64,
    pub hip_drop: f64,
    pub lumbar: f64,
    pub thoracic: f64,
    pub cervical: f64,
    pub head: f64,
    pub upper_arm: f64,
    pub forearm: f64,
    pub hand: f64,
    pub hand_tip: f64,
    pub thigh: f64,
    pub shank: f64,
    pub ankle_height: f64,
    pub foot: f64,
}

impl Default for BodyModel {
    fn default() -> BodyModel {
        BodyModel {
            hip_halfwidth: 0.10,
            shoulder_halfwidth: 0.17,
            hip_drop: 0.06,
            lumbar: 0.24,
            thoracic: 0.21,
            cervical: 0.07,
            head: 0.17,
            upper_arm: 0.28,
            forearm: 0.25,
            hand: 0.08,
            hand_tip: 0.07,
            thigh: 0.42,
            shank: 0.40,
            ankle_height: 0.08,
            foot: 0.19,
        }
    }
}

impl BodyModel {
    /// Spine chord length from spine base to neck.
    pub fn spine_chord(&self) -> f64 {
        self.lumbar + self.thoracic + self.cervical
    }

    /// Total leg drop from hip to ankle with both segments vertical.
    pub fn leg_length(&self) -> f64 {
        self.thigh + self.shank
    }

    /// Vertical hip height above the floor for given thigh/shank pitches
    /// (angles from vertical), with the foot planted.
    pub fn hip_height(&self, thigh_pitch: f64, shank_pitch: f64) -> f64 {
        self.ankle_height + self.thigh * thigh_pitch.cos() + self.shank * shank_pitch.cos()
    }
}

/// Posture parameters for one frame. Angles in radians; pitches measure
/// forward rotation from vertical.
#[derive(Debug, Clone, Copy)]
pub struct PoseSpec {
    /// Scene position of the spine base.
    pub pelvis: Vec3,
    /// Yaw of the body about vertical; 0 faces +x.
    pub facing: f64,
    /// Pitch of the spine chord (spine base → neck) from vertical. The
    /// construction keeps the chord pitch exact regardless of curvature.
    pub trunk_pitch: f64,
    /// Backward bulge of the mid spine, meters; bends the back angle
    /// without moving the chord.
    pub spine_bulge: f64,
    /// Absolute pitch of the neck→head segment.
    pub head_pitch: f64,
    pub thigh_pitch_left: f64,
    pub thigh_pitch_right: f64,
    pub shank_pitch_left: f64,
    pub shank_pitch_right: f64,
    /// Shoulder flexion (arm forward of vertical).
    pub arm_pitch_left: f64,
    pub arm_pitch_right: f64,
    /// Extra forward flexion of the forearm relative to the upper arm.
    pub elbow_flex: f64,
    /// Rotation of the whole body about the lateral axis (lying back = +).
    pub recline: f64,
}

impl PoseSpec {
    pub fn upright(pelvis: Vec3) -> PoseSpec {
        PoseSpec {
            pelvis,
            facing: 0.0,
            trunk_pitch: 0.0,
            spine_bulge: 0.01,
            head_pitch: 0.0,
            thigh_pitch_left: 0.05,
            thigh_pitch_right: 0.05,
            shank_pitch_left: 0.02,
            shank_pitch_right: 0.02,
            arm_pitch_left: 0.05,
            arm_pitch_right: 0.05,
            elbow_flex: 0.3,
            recline: 0.0,
        }
    }
}

/// Direction in the sagittal (x up-forward) plane for a pitch angle.
fn sagittal(pitch: f64) -> Vec3 {
    Vec3::new(pitch.sin(), pitch.cos(), 0.0)
}

/// Downward sagittal direction (legs, hanging arms).
fn sagittal_down(pitch: f64) -> Vec3 {
    Vec3::new(pitch.sin(), -pitch.cos(), 0.0)
}

fn rotate_lateral(v: Vec3, recline: f64) -> Vec3 {
    // Rotation about the z (lateral) axis, tipping +y toward +x.
    let (s, c) = recline.sin_cos();
    Vec3::new(v.x * c + v.y * s, v.y * c - v.x * s, v.z)
}

/// Assemble the full 25-joint pose for a posture spec.
pub fn build_pose(model: &BodyModel, spec: &PoseSpec) -> Pose {
    let mut local = [(JointId::SpineBase, Vec3::ZERO); 25];
    let mut n = 0;
    let mut put = |joint: JointId, p: Vec3| {
        local[n] = (joint, p);
        n += 1;
    };

    // Spine: chord from base to neck at exactly trunk_pitch; intermediate
    // joints bow backward off the chord by spine_bulge.
    let chord_dir = sagittal(spec.trunk_pitch);
    let back_normal = Vec3::new(-chord_dir.y, chord_dir.x, 0.0); // behind the chord
    let chord = model.spine_chord();
    let neck = chord_dir.scale(chord);
    let spine_mid = chord_dir.scale(0.46 * chord) + back_normal.scale(spec.spine_bulge);
    let spine_shoulder = chord_dir.scale(0.87 * chord) + back_normal.scale(0.55 * spec.spine_bulge);
    let head = neck + sagittal(spec.head_pitch).scale(model.head);
    put(JointId::SpineBase, Vec3::ZERO);
    put(JointId::SpineMid, spine_mid);
    put(JointId::SpineShoulder, spine_shoulder);
    put(JointId::Neck, neck);
    put(JointId::Head, head);

    // Legs.
    for (left, hip_id, knee_id, ankle_id, foot_id, thigh_pitch, shank_pitch) in [
        (true, JointId::HipLeft, JointId::KneeLeft, JointId::AnkleLeft, JointId::FootLeft, spec.thigh_pitch_left, spec.shank_pitch_left),
        (false, JointId::HipRight, JointId::KneeRight, JointId::AnkleRight, JointId::FootRight, spec.thigh_pitch_right, spec.shank_pitch_right),
    ] {
        let side = if left { 1.0 } else { -1.0 };
        let hip = Vec3::new(0.0, -model.hip_drop, side * model.hip_halfwidth);
        let knee = hip + sagittal_down(thigh_pitch).scale(model.thigh);
        let ankle = knee + sagittal_down(shank_pitch).scale(model.shank);
        let foot = ankle + Vec3::new(model.foot, -0.04, 0.0);
        put(hip_id, hip);
        put(knee_id, knee);
        put(ankle_id, ankle);
        put(foot_id, foot);
    }

    // Arms hang from the shoulder girdle.
    for (left, shoulder_id, elbow_id, wrist_id, hand_id, tip_id, thumb_id, arm_pitch) in [
        (true, JointId::ShoulderLeft, JointId::ElbowLeft, JointId::WristLeft, JointId::HandLeft, JointId::HandTipLeft, JointId::ThumbLeft, spec.arm_pitch_left),
        (false, JointId::ShoulderRight, JointId::ElbowRight, JointId::WristRight, JointId::HandRight, JointId::HandTipRight, JointId::ThumbRight, spec.arm_pitch_right),
    ] {
        let side = if left { 1.0 } else { -1.0 };
        let shoulder = spine_shoulder + Vec3::new(0.0, -0.02, side * model.shoulder_halfwidth);
        let elbow = shoulder + sagittal_down(arm_pitch).scale(model.upper_arm);
        let forearm_dir = sagittal_down(arm_pitch + spec.elbow_flex);
        let wrist = elbow + forearm_dir.scale(model.forearm);
        let hand = wrist + forearm_dir.scale(model.hand);
        let tip = hand + forearm_dir.scale(model.hand_tip);
        let thumb = wrist + Vec3::new(0.03, -0.02, -side * 0.04);
        put(shoulder_id, shoulder);
        put(elbow_id, elbow);
        put(wrist_id, wrist);
        put(hand_id, hand);
        put(tip_id, tip);
        put(thumb_id, thumb);
    }

    let mut pose = Pose::origin();
    for (joint, p) in local.iter().take(n) {
        let placed = rotate_lateral(*p, spec.recline).rotate_y(spec.facing) + spec.pelvis;
        pose.set_position(*joint, placed);
    }
    pose
}
