//! Subcommand implementations.

pub mod bench;
pub mod compare;
pub mod fit;
pub mod gen;
pub mod metrics;
pub mod parse;
pub mod render;

use std::path::Path;

/// Command errors split by exit code: validation problems (bad inputs,
/// malformed files, out-of-range parameters) exit 2, everything else 1.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Internal(anyhow::Error),
}

pub type CmdResult = Result<(), CliError>;

impl CliError {
    pub fn validation(message: impl std::fmt::Display) -> CliError {
        CliError::Validation(message.to_string())
    }
}

impl From<anyhow::Error> for CliError {
    fn from(error: anyhow::Error) -> CliError {
        CliError::Internal(error)
    }
}

impl From<std::io::Error> for CliError {
    fn from(error: std::io::Error) -> CliError {
        CliError::Internal(error.into())
    }
}

/// Ensure the output directory exists.
pub fn prepare_out_dir(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)?;
    Ok(())
}

/// Write text, reporting the path written.
pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text)?;
    println!("wrote {}", path.display());
    Ok(())
}

/// Load every clip in a directory, as a validation-class error when the
/// directory is missing, empty or contains invalid documents.
pub fn load_clips(dir: &Path) -> Result<Vec<synact_skeleton::SkeletonClip>, CliError> {
    let clips = synact_skeleton::io::load_clip_dir(dir).map_err(CliError::validation)?;
    if clips.is_empty() {
        return Err(CliError::Validation(format!("no clips found in {}", dir.display())));
    }
    Ok(clips)
}
