//! In-memory grid types shared by the whole pipeline.
//!
//! An [`ImageTensor`] is an H×W×B grid of reals in [0, 1] stored row-major
//! with bands innermost, so the per-pixel band vector is contiguous. Label
//! maps and masks mirror the same H×W layout.

use crate::error::Error;
use crate::Result;

/// H×W×B image with all values finite and inside [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct ImageTensor {
    height: usize,
    width: usize,
    bands: usize,
    data: Vec<f64>,
}

impl ImageTensor {
    /// Build an image from row-major band-interleaved data, validating the
    /// [0, 1] range and finiteness invariants.
    pub fn new(height: usize, width: usize, bands: usize, data: Vec<f64>) -> Result<Self> {
        if height == 0 || width == 0 || bands == 0 {
            return Err(Error::InvalidParameter(format!(
                "image dimensions must be positive, got {height}x{width}x{bands}"
            )));
        }
        if data.len() != height * width * bands {
            return Err(Error::DimensionMismatch {
                context: "ImageTensor::new".into(),
                expected: format!("{} values", height * width * bands),
                actual: format!("{} values", data.len()),
            });
        }
        if !data.iter().all(|v| v.is_finite() && (0.0..=1.0).contains(v)) {
            return Err(Error::InvalidParameter(
                "image values must be finite and in [0, 1]".into(),
            ));
        }
        Ok(Self {
            height,
            width,
            bands,
            data,
        })
    }

    /// Construct without re-validating; callers must guarantee the range
    /// invariant (used by ops whose outputs are clamped by construction).
    pub(crate) fn from_clamped(height: usize, width: usize, bands: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), height * width * bands);
        debug_assert!(data.iter().all(|v| v.is_finite() && (0.0..=1.0).contains(v)));
        Self {
            height,
            width,
            bands,
            data,
        }
    }

    /// Image with every value set to `value`.
    pub fn constant(height: usize, width: usize, bands: usize, value: f64) -> Result<Self> {
        Self::new(height, width, bands, vec![value; height * width * bands])
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn bands(&self) -> usize {
        self.bands
    }

    /// Flat index of (row, col, band).
    #[inline]
    pub fn idx(&self, y: usize, x: usize, b: usize) -> usize {
        (y * self.width + x) * self.bands + b
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize, b: usize) -> f64 {
        self.data[self.idx(y, x, b)]
    }

    /// Contiguous band vector of one pixel.
    #[inline]
    pub fn pixel(&self, y: usize, x: usize) -> &[f64] {
        let i = (y * self.width + x) * self.bands;
        &self.data[i..i + self.bands]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }
}

/// H×W integer class-id grid paired with an image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap {
    height: usize,
    width: usize,
    data: Vec<u32>,
}

impl LabelMap {
    pub fn new(height: usize, width: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != height * width {
            return Err(Error::DimensionMismatch {
                context: "LabelMap::new".into(),
                expected: format!("{} values", height * width),
                actual: format!("{} values", data.len()),
            });
        }
        Ok(Self {
            height,
            width,
            data,
        })
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize) -> u32 {
        self.data[y * self.width + x]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.data
    }

    /// Number of pixels carrying `class`.
    pub fn count(&self, class: u32) -> usize {
        self.data.iter().filter(|&&c| c == class).count()
    }
}

/// H×W boolean grid; true marks pixels of the designated normal class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalMask {
    height: usize,
    width: usize,
    data: Vec<bool>,
}

impl NormalMask {
    pub fn new(height: usize, width: usize, data: Vec<bool>) -> Result<Self> {
        if data.len() != height * width {
            return Err(Error::DimensionMismatch {
                context: "NormalMask::new".into(),
                expected: format!("{} values", height * width),
                actual: format!("{} values", data.len()),
            });
        }
        Ok(Self {
            height,
            width,
            data,
        })
    }

    /// Mask that keeps every pixel.
    pub fn all_true(height: usize, width: usize) -> Self {
        Self {
            height,
            width,
            data: vec![true; height * width],
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize) -> bool {
        self.data[y * self.width + x]
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.data
    }

    pub fn count_true(&self) -> usize {
        self.data.iter().filter(|&&m| m).count()
    }
}

/// Generic H×W×C grid of reals without a range invariant. Used for
/// reconstruction outputs (which are deliberately unclamped) and as the
/// backing storage of descriptor cubes.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid3 {
    height: usize,
    width: usize,
    channels: usize,
    data: Vec<f64>,
}

impl Grid3 {
    pub fn zeros(height: usize, width: usize, channels: usize) -> Self {
        Self {
            height,
            width,
            channels,
            data: vec![0.0; height * width * channels],
        }
    }

    pub fn from_vec(height: usize, width: usize, channels: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != height * width * channels {
            return Err(Error::DimensionMismatch {
                context: "Grid3::from_vec".into(),
                expected: format!("{} values", height * width * channels),
                actual: format!("{} values", data.len()),
            });
        }
        Ok(Self {
            height,
            width,
            channels,
            data,
        })
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    /// Contiguous channel vector of one pixel.
    #[inline]
    pub fn pixel(&self, y: usize, x: usize) -> &[f64] {
        let i = (y * self.width + x) * self.channels;
        &self.data[i..i + self.channels]
    }

    #[inline]
    pub fn pixel_mut(&mut self, y: usize, x: usize) -> &mut [f64] {
        let i = (y * self.width + x) * self.channels;
        &mut self.data[i..i + self.channels]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn image_rejects_out_of_range() {
        assert!(ImageTensor::new(1, 1, 1, vec![1.5]).is_err());
        assert!(ImageTensor::new(1, 1, 1, vec![f64::NAN]).is_err());
        assert!(ImageTensor::new(1, 1, 1, vec![-0.1]).is_err());
        assert!(ImageTensor::new(1, 1, 1, vec![0.5]).is_ok());
    }

    #[test]
    fn image_rejects_zero_dims() {
        assert!(ImageTensor::new(0, 4, 1, vec![]).is_err());
        assert!(ImageTensor::new(4, 0, 1, vec![]).is_err());
        assert!(ImageTensor::new(4, 4, 0, vec![]).is_err());
    }

    #[test]
    fn pixel_slice_is_band_vector() {
        let img = ImageTensor::new(2, 2, 3, (0..12).map(|i| i as f64 / 12.0).collect()).unwrap();
        assert_eq!(img.pixel(1, 0), &[6.0 / 12.0, 7.0 / 12.0, 8.0 / 12.0]);
        assert_eq!(img.get(1, 0, 2), 8.0 / 12.0);
    }

    #[test]
    fn label_count_matches() {
        let labels = LabelMap::new(2, 2, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(labels.count(1), 2);
        assert_eq!(labels.count(7), 0);
    }
}
