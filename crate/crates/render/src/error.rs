//! Error type for rendering and depth-feature extraction.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("invalid camera: {0}")]
    InvalidCamera(String),

    #[error("bone radius {0} must be positive")]
    InvalidRadius(f64),

    #[error("degenerate silhouette: every frame is empty")]
    DegenerateSilhouette,

    #[error("no frames to process")]
    NoFrames,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("invalid pgm file: {0}")]
    InvalidPgm(String),
}

pub type Result<T> = std::result::Result<T, RenderError>;
