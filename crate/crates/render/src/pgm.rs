//! 16-bit binary portable graymap output. One file per frame: magic "P5",
//! maxval 65535, big-endian samples.

use std::io::Write;
use std::path::Path;

use crate::camera::DepthFrame;
use crate::error::{RenderError, Result};

pub fn frame_to_pgm(frame: &DepthFrame) -> Vec<u8> {
    let mut out = Vec::with_capacity(frame.data.len() * 2 + 32);
    out.extend_from_slice(format!("P5\n{} {}\n65535\n", frame.width, frame.height).as_bytes());
    for v in &frame.data {
        out.extend_from_slice(&v.to_be_bytes());
    }
    out
}

pub fn write_pgm(frame: &DepthFrame, path: impl AsRef<Path>) -> Result<()> {
    let mut file = std::fs::File::create(path)?;
    file.write_all(&frame_to_pgm(frame))?;
    Ok(())
}

/// Write every frame as `frame_NNNNNN.pgm` under `dir`; returns the paths.
pub fn write_pgm_sequence(
    frames: &[DepthFrame],
    dir: impl AsRef<Path>,
) -> Result<Vec<std::path::PathBuf>> {
    let dir = dir.as_ref();
    std::fs::create_dir_all(dir)?;
    let mut paths = Vec::with_capacity(frames.len());
    for (i, frame) in frames.iter().enumerate() {
        let path = dir.join(format!("frame_{i:06}.pgm"));
        write_pgm(frame, &path)?;
        paths.push(path);
    }
    Ok(paths)
}

pub fn pgm_from_bytes(bytes: &[u8]) -> Result<DepthFrame> {
    let mut fields = Vec::new();
    let mut pos = 0usize;
    // Header: three whitespace-separated fields after the magic.
    while fields.len() < 4 && pos < bytes.len() {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start < pos {
            fields.push(std::str::from_utf8(&bytes[start..pos]).map_err(|_| {
                RenderError::InvalidPgm("non-utf8 header".into())
            })?);
        }
    }
    if fields.len() != 4 || fields[0] != "P5" {
        return Err(RenderError::InvalidPgm("expected P5 header".into()));
    }
    let width: usize =
        fields[1].parse().map_err(|_| RenderError::InvalidPgm("bad width".into()))?;
    let height: usize =
        fields[2].parse().map_err(|_| RenderError::InvalidPgm("bad height".into()))?;
    if fields[3] != "65535" {
        return Err(RenderError::InvalidPgm(format!("maxval {} != 65535", fields[3])));
    }
    // Exactly one whitespace byte separates the header from the samples.
    pos += 1;
    let expected = width * height * 2;
    let body = bytes.get(pos..pos + expected).ok_or_else(|| {
        RenderError::InvalidPgm(format!("truncated body, need {expected} bytes"))
    })?;
    let data = body
        .chunks_exact(2)
        .map(|pair| u16::from_be_bytes([pair[0], pair[1]]))
        .collect();
    Ok(DepthFrame { width, height, data })
}

pub fn read_pgm(path: impl AsRef<Path>) -> Result<DepthFrame> {
    pgm_from_bytes(&std::fs::read(path)?)
}
