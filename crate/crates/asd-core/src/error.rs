//! Crate-wide error type.

use std::path::PathBuf;

/// Errors produced by the pipeline.
///
/// Variants split into contract violations (bad inputs, shape mismatches,
/// invalid configuration) and I/O failures; the CLI maps the former to exit
/// code 1 and the latter to exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("failed to decode image {path}: {source}")]
    ImageDecode {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },

    #[error("failed to encode image {path}: {source}")]
    ImageEncode {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },

    #[error("unsupported pixel format for {path}: {detail} (expected 8- or 16-bit gray or RGB)")]
    UnsupportedFormat { path: PathBuf, detail: String },

    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: String,
        expected: String,
        actual: String,
    },

    #[error("normal class {class} absent from label map")]
    NormalClassAbsent { class: u32 },

    #[error("mask selects no pixels")]
    EmptyMask,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("need at least {need} samples, got {have}")]
    TooFewSamples { have: usize, need: usize },

    #[error("non-finite value encountered in {0}")]
    NonFinite(String),

    #[error("loss became NaN at epoch {epoch}, image {image_index}")]
    NanLoss { epoch: usize, image_index: usize },

    #[error("checkpoint is incomplete: {0}")]
    IncompleteCheckpoint(String),

    #[error("malformed file {path}: {detail}")]
    MalformedFile { path: PathBuf, detail: String },

    #[error("{0}")]
    Contract(String),
}

impl Error {
    /// Exit code the CLI should report for this error: 2 for I/O failures,
    /// 1 for everything else (contract violations).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } | Error::ImageDecode { .. } | Error::ImageEncode { .. } => 2,
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
