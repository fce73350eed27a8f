//! Anomaly segmentation for high-resolution imagery based on per-pixel
//! descriptors.
//!
//! The pipeline has two stages. The first learns a descriptor for every
//! pixel from a multi-scale patch pyramid, trained on normal imagery only
//! with three losses: a hypersphere compactness loss, a diversity loss
//! against augmented negatives, and an auxiliary reconstruction loss. The
//! second stage fits a multivariate Gaussian to the normal descriptors and
//! scores test pixels by Mahalanobis distance, yielding a per-pixel anomaly
//! map.
//!
//! Modules follow the pipeline order: [`data`] loads imagery and builds
//! synthetic datasets, [`augment`] synthesizes transformed negatives,
//! [`pyramid`] extracts multi-scale patch stacks, [`encoder`] maps stacks to
//! descriptors, [`training`] runs the optimization loop, [`scoring`] turns
//! descriptors into anomaly maps, and [`eval`] computes ROC-AUC and mIOU.

pub mod augment;
pub mod checkpoint;
pub mod data;
pub mod encoder;
pub mod error;
pub mod eval;
pub mod image;
pub mod pyramid;
pub mod scoring;
pub mod training;

pub use error::Error;

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
