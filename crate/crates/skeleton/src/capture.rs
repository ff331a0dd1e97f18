//! Parser for the standard 25-joint capture skeleton text format.
//!
//! Layout: a frame-count line; then per frame a body-count line and, per
//! body, one info line, a joint-count line (must be 25) and one line of 12
//! floats per joint, 3D position first. The parser is total over arbitrary
//! input: it returns clips or a structured error naming the offending line,
//! never panics.

use crate::clip::{ActionLabel, Condition, SkeletonClip, SubjectMetadata};
use crate::error::SkeletonError;
use crate::joints::JOINT_COUNT;
use crate::pose::{Pose, Vec3};
use crate::Result;

/// Default frame rate of the capture format.
pub const CAPTURE_FPS: f64 = 30.0;

struct LineReader<'a> {
    lines: std::str::Lines<'a>,
    line_no: usize,
}

impl<'a> LineReader<'a> {
    fn new(text: &'a str) -> LineReader<'a> {
        LineReader { lines: text.lines(), line_no: 0 }
    }

    fn next(&mut self, expected: &str) -> Result<&'a str> {
        self.line_no += 1;
        self.lines.next().ok_or_else(|| SkeletonError::Capture {
            line: self.line_no,
            message: format!("unexpected end of input, expected {expected}"),
        })
    }

    fn err(&self, message: impl Into<String>) -> SkeletonError {
        SkeletonError::Capture { line: self.line_no, message: message.into() }
    }
}

fn parse_count(reader: &mut LineReader<'_>, what: &str) -> Result<usize> {
    let line = reader.next(what)?;
    let token = line.trim();
    token
        .parse::<usize>()
        .map_err(|_| reader.err(format!("malformed {what} {token:?}")))
}

/// Parse capture-format text into one clip per tracked body index.
///
/// Bodies are associated purely by their index within each frame; body `b`
/// of the result collects poses from every frame that lists at least `b + 1`
/// bodies. Clips default to NC / standing metadata because the capture
/// format itself carries neither condition nor action; callers that know
/// better can overwrite both fields.
pub fn parse_capture_skeleton(text: &str) -> Result<Vec<SkeletonClip>> {
    let mut reader = LineReader::new(text);
    let frame_count = parse_count(&mut reader, "frame count")?;

    let mut bodies: Vec<Vec<Pose>> = Vec::new();
    for _ in 0..frame_count {
        let body_count = parse_count(&mut reader, "body count")?;
        for body_index in 0..body_count {
            reader.next("body info line")?;
            let joint_count = parse_count(&mut reader, "joint count")?;
            if joint_count != JOINT_COUNT {
                return Err(reader.err(format!("joint count {joint_count} != {JOINT_COUNT}")));
            }
            let mut positions = [Vec3::ZERO; JOINT_COUNT];
            for position in positions.iter_mut() {
                let line = reader.next("joint line")?;
                *position = parse_joint_line(&reader, line)?;
            }
            if bodies.len() <= body_index {
                bodies.resize_with(body_index + 1, Vec::new);
            }
            bodies[body_index].push(Pose::from_positions(positions));
        }
    }

    bodies
        .into_iter()
        .enumerate()
        .filter(|(_, frames)| !frames.is_empty())
        .map(|(index, frames)| {
            SkeletonClip::new(
                CAPTURE_FPS,
                frames,
                SubjectMetadata::new(Condition::Nc, format!("capture/body{index}")),
                ActionLabel::Standing,
                0.0,
            )
        })
        .collect()
}

fn parse_joint_line(reader: &LineReader<'_>, line: &str) -> Result<Vec3> {
    let mut values = [0.0f64; 3];
    let mut count = 0usize;
    for token in line.split_whitespace() {
        let value: f64 = token
            .parse()
            .map_err(|_| reader.err(format!("non-numeric field {token:?}")))?;
        if count < 3 {
            if !value.is_finite() {
                return Err(reader.err(format!("non-finite coordinate {token:?}")));
            }
            values[count] = value;
        }
        count += 1;
    }
    if count != 12 {
        return Err(reader.err(format!("joint line has {count} fields, expected 12")));
    }
    Ok(Vec3::new(values[0], values[1], values[2]))
}
