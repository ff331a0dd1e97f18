//! Format-level tests: round-trip identity on random clips, capture-parser
//! agreement with an independent reference parser, and parser fuzzing.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use synact_skeleton::capture::parse_capture_skeleton;
use synact_skeleton::io::{clip_from_str, clip_to_string};
use synact_skeleton::{ActionLabel, Condition, Pose, SkeletonClip, SubjectMetadata, Vec3};

fn random_clip(rng: &mut ChaCha8Rng) -> SkeletonClip {
    let frame_count = rng.random_range(1..20);
    let mut frames = Vec::with_capacity(frame_count);
    for _ in 0..frame_count {
        let mut pose = Pose::origin();
        for joint in synact_skeleton::JointId::ALL {
            pose.set_position(
                joint,
                Vec3::new(
                    rng.random_range(-5.0..5.0),
                    rng.random_range(-5.0..5.0),
                    rng.random_range(-5.0..5.0),
                ),
            );
        }
        frames.push(pose);
    }
    let condition = *[Condition::Ad, Condition::Mci, Condition::Nc].choose(rng).unwrap();
    let mut metadata = SubjectMetadata::new(condition, format!("rand-{}", rng.random::<u32>()));
    if rng.random_bool(0.5) {
        metadata.moca_score = Some(rng.random_range(0..=30));
    }
    if rng.random_bool(0.5) {
        metadata.zbi_score = Some(rng.random_range(0..=88));
    }
    SkeletonClip {
        fps: rng.random_range(1.0..120.0),
        frames,
        metadata,
        action: *ActionLabel::ALL.choose(rng).unwrap(),
        viewpoint_deg: rng.random_range(0.0..360.0),
    }
}

#[test]
fn random_clips_round_trip_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let clip = random_clip(&mut rng);
        let text = clip_to_string(&clip).unwrap();
        let back = clip_from_str(&text).unwrap();
        assert_eq!(clip.fps, back.fps);
        assert_eq!(clip.metadata, back.metadata);
        assert_eq!(clip.action, back.action);
        assert_eq!(clip.viewpoint_deg, back.viewpoint_deg);
        assert_eq!(clip.frames.len(), back.frames.len());
        for (a, b) in clip.frames.iter().zip(back.frames.iter()) {
            for (pa, pb) in a.positions().iter().zip(b.positions().iter()) {
                assert!((*pa - *pb).norm() <= 1e-9);
            }
        }
    }
}

/// Independent reference parser: consumes the capture format as a flat token
/// stream instead of line-by-line. Used only to cross-check the production
/// parser's output on well-formed fixtures.
fn reference_parse(text: &str) -> Vec<Vec<[f64; 3]>> {
    let mut lines = text.lines();
    let mut next = || lines.next().expect("fixture truncated");
    let frame_count: usize = next().trim().parse().unwrap();
    let mut bodies: Vec<Vec<[f64; 3]>> = Vec::new();
    for _ in 0..frame_count {
        let body_count: usize = next().trim().parse().unwrap();
        for b in 0..body_count {
            next(); // info line
            let jc: usize = next().trim().parse().unwrap();
            assert_eq!(jc, 25);
            let mut flat = Vec::new();
            for _ in 0..25 {
                let vals: Vec<f64> =
                    next().split_whitespace().map(|t| t.parse().unwrap()).collect();
                flat.push([vals[0], vals[1], vals[2]]);
            }
            if bodies.len() <= b {
                bodies.resize_with(b + 1, Vec::new);
            }
            bodies[b].extend(flat);
        }
    }
    bodies
}

fn two_body_fixture() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut text = String::from("3\n");
    for frame in 0..3 {
        text.push_str("2\n");
        for body in 0..2 {
            text.push_str(&format!("{} 0 1 1 1 1 0 0 2 2\n25\n", 1000 + body));
            for j in 0..25 {
                let base = frame as f64 * 0.1 + body as f64 * 2.0 + j as f64 * 0.01;
                text.push_str(&format!(
                    "{} {} {} 0 0 0 0 1 0 0 0 2\n",
                    base,
                    base + rng.random_range(0.0..0.001),
                    -base
                ));
            }
        }
    }
    text
}

#[test]
fn two_bodies_yield_two_clips_matching_reference_parser() {
    let text = two_body_fixture();
    let clips = parse_capture_skeleton(&text).unwrap();
    assert_eq!(clips.len(), 2);

    let reference = reference_parse(&text);
    for (clip, body) in clips.iter().zip(reference.iter()) {
        assert_eq!(clip.frame_count() * 25, body.len());
        let mut k = 0;
        for frame in &clip.frames {
            for p in frame.positions() {
                assert_eq!([p.x, p.y, p.z], body[k]);
                k += 1;
            }
        }
    }
}

#[test]
fn parser_survives_mutated_inputs() {
    let base = two_body_fixture();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..2_000 {
        let mut bytes = base.clone().into_bytes();
        for _ in 0..rng.random_range(1..20) {
            let i = rng.random_range(0..bytes.len());
            match rng.random_range(0..3) {
                0 => bytes[i] = rng.random::<u8>(),
                1 => bytes.truncate(i.max(1)),
                _ => bytes.insert(i, rng.random::<u8>()),
            }
        }
        let text = String::from_utf8_lossy(&bytes);
        // Must return clips or a structured error, never panic.
        let _ = parse_capture_skeleton(&text);
    }
}
