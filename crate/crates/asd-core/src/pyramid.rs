//! Multi-scale patch pyramid extraction.
//!
//! For every pixel, the image is resized by each factor in the scale set and
//! a P×P patch is cropped around the mapped pixel position from each resized
//! version. Border samples are filled by reflection padding so the patch
//! stack is defined for every pixel of the image.

use crate::error::Error;
use crate::image::ImageTensor;
use crate::Result;

/// Ordered resize factors plus the shared patch side length.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleSet {
    scales: Vec<f64>,
    patch_size: usize,
}

impl ScaleSet {
    /// `patch_size` must be odd so a patch has a well-defined center pixel.
    pub fn new(scales: Vec<f64>, patch_size: usize) -> Result<Self> {
        if scales.is_empty() {
            return Err(Error::InvalidParameter("scale set must not be empty".into()));
        }
        if scales.iter().any(|&s| !s.is_finite() || s <= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "scales must be positive reals, got {scales:?}"
            )));
        }
        if patch_size == 0 || patch_size % 2 == 0 {
            return Err(Error::InvalidParameter(format!(
                "patch size must be odd and positive, got {patch_size}"
            )));
        }
        Ok(Self { scales, patch_size })
    }

    pub fn scales(&self) -> &[f64] {
        &self.scales
    }

    /// Number of scales m.
    pub fn count(&self) -> usize {
        self.scales.len()
    }

    pub fn patch_size(&self) -> usize {
        self.patch_size
    }
}

/// The m patches extracted around one pixel, each P×P×B, in scale order.
#[derive(Debug, Clone, PartialEq)]
pub struct PatchStack {
    count: usize,
    patch_size: usize,
    bands: usize,
    data: Vec<f64>,
}

impl PatchStack {
    pub fn new(count: usize, patch_size: usize, bands: usize, data: Vec<f64>) -> Result<Self> {
        let expect = count * patch_size * patch_size * bands;
        if data.len() != expect {
            return Err(Error::DimensionMismatch {
                context: "PatchStack::new".into(),
                expected: format!("{expect} values"),
                actual: format!("{} values", data.len()),
            });
        }
        Ok(Self {
            count,
            patch_size,
            bands,
            data,
        })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn patch_size(&self) -> usize {
        self.patch_size
    }

    pub fn bands(&self) -> usize {
        self.bands
    }

    /// Patch at scale index k as a flat P×P×B slice (rows outer, bands inner).
    pub fn patch(&self, k: usize) -> &[f64] {
        let len = self.patch_size * self.patch_size * self.bands;
        &self.data[k * len..(k + 1) * len]
    }
}

/// Reflect an out-of-bounds index back into [0, n) without repeating the
/// border sample (reflect-101). Degenerates to clamping when n == 1.
#[inline]
pub(crate) fn reflect_index(i: isize, n: usize) -> usize {
    debug_assert!(n >= 1);
    if n == 1 {
        return 0;
    }
    let n = n as isize;
    let period = 2 * n - 2;
    let mut m = i % period;
    if m < 0 {
        m += period;
    }
    if m < n {
        m as usize
    } else {
        (period - m) as usize
    }
}

/// Bilinear resize by `scale` with half-pixel-aligned sampling. The output
/// is round(H·scale) × round(W·scale); sample coordinates are clamped at the
/// borders so outputs stay inside [min(img), max(img)].
pub fn resize(img: &ImageTensor, scale: f64) -> Result<ImageTensor> {
    if !scale.is_finite() || scale <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "resize scale must be positive, got {scale}"
        )));
    }
    let out_h = (img.height() as f64 * scale).round() as usize;
    let out_w = (img.width() as f64 * scale).round() as usize;
    if out_h == 0 || out_w == 0 {
        return Err(Error::InvalidParameter(format!(
            "resize by {scale} of a {}x{} image would produce an empty output",
            img.height(),
            img.width()
        )));
    }
    let bands = img.bands();
    if out_h == img.height() && out_w == img.width() {
        return Ok(img.clone());
    }
    let ry = img.height() as f64 / out_h as f64;
    let rx = img.width() as f64 / out_w as f64;
    let mut data = vec![0.0; out_h * out_w * bands];
    for oy in 0..out_h {
        let sy = ((oy as f64 + 0.5) * ry - 0.5).clamp(0.0, (img.height() - 1) as f64);
        let y0 = sy.floor() as usize;
        let y1 = (y0 + 1).min(img.height() - 1);
        let fy = sy - y0 as f64;
        for ox in 0..out_w {
            let sx = ((ox as f64 + 0.5) * rx - 0.5).clamp(0.0, (img.width() - 1) as f64);
            let x0 = sx.floor() as usize;
            let x1 = (x0 + 1).min(img.width() - 1);
            let fx = sx - x0 as f64;
            let out = &mut data[(oy * out_w + ox) * bands..(oy * out_w + ox + 1) * bands];
            let p00 = img.pixel(y0, x0);
            let p01 = img.pixel(y0, x1);
            let p10 = img.pixel(y1, x0);
            let p11 = img.pixel(y1, x1);
            for b in 0..bands {
                let top = p00[b] + fx * (p01[b] - p00[b]);
                let bot = p10[b] + fx * (p11[b] - p10[b]);
                out[b] = top + fy * (bot - top);
            }
        }
    }
    // Convex combination keeps values in [0, 1] up to rounding; clamp the dust.
    for v in &mut data {
        *v = v.clamp(0.0, 1.0);
    }
    Ok(ImageTensor::from_clamped(out_h, out_w, bands, data))
}

/// Crop a P×P window from `img_at_scale` around the position that the
/// original-coordinate `center` maps to under `scale`. Out-of-bounds
/// samples are filled by reflection padding, so the result is defined for
/// every center inside the original image.
pub fn extract_patch(
    img_at_scale: &ImageTensor,
    center: (usize, usize),
    scale: f64,
    patch_size: usize,
) -> Vec<f64> {
    let mut out = vec![0.0; patch_size * patch_size * img_at_scale.bands()];
    extract_patch_into(img_at_scale, center, scale, patch_size, &mut out);
    out
}

/// Center position in the scaled image for an original-coordinate pixel.
#[inline]
pub(crate) fn scaled_center(center: (usize, usize), scale: f64) -> (usize, usize) {
    (
        (center.0 as f64 * scale).round() as usize,
        (center.1 as f64 * scale).round() as usize,
    )
}

pub(crate) fn extract_patch_into(
    img_at_scale: &ImageTensor,
    center: (usize, usize),
    scale: f64,
    patch_size: usize,
    out: &mut [f64],
) {
    let (cy, cx) = scaled_center(center, scale);
    extract_window_into(img_at_scale, cy, cx, patch_size, out);
}

/// Copy the reflection-padded window of side `patch_size` centered at
/// (cy, cx) of `img` into `out`.
pub(crate) fn extract_window_into(
    img: &ImageTensor,
    cy: usize,
    cx: usize,
    patch_size: usize,
    out: &mut [f64],
) {
    let bands = img.bands();
    let half = (patch_size / 2) as isize;
    debug_assert_eq!(out.len(), patch_size * patch_size * bands);
    let mut o = 0;
    for dy in -half..=half {
        let sy = reflect_index(cy as isize + dy, img.height());
        for dx in -half..=half {
            let sx = reflect_index(cx as isize + dx, img.width());
            out[o..o + bands].copy_from_slice(img.pixel(sy, sx));
            o += bands;
        }
    }
}

/// Resize the image by every scale and crop one patch per scale around
/// `center`, given in original image coordinates.
pub fn pyramid_patches(
    img: &ImageTensor,
    center: (usize, usize),
    scale_set: &ScaleSet,
) -> Result<PatchStack> {
    if center.0 >= img.height() || center.1 >= img.width() {
        return Err(Error::InvalidParameter(format!(
            "center {:?} outside {}x{} image",
            center,
            img.height(),
            img.width()
        )));
    }
    let p = scale_set.patch_size();
    let plen = p * p * img.bands();
    let mut data = vec![0.0; scale_set.count() * plen];
    for (k, &scale) in scale_set.scales().iter().enumerate() {
        let scaled = resize(img, scale)?;
        extract_patch_into(&scaled, center, scale, p, &mut data[k * plen..(k + 1) * plen]);
    }
    PatchStack::new(scale_set.count(), p, img.bands(), data)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gradient_image(h: usize, w: usize, b: usize) -> ImageTensor {
        let data: Vec<f64> = (0..h * w * b).map(|i| (i % 97) as f64 / 96.0).collect();
        ImageTensor::new(h, w, b, data).unwrap()
    }

    #[test]
    fn reflect_index_matches_manual_pattern() {
        // n = 4 -> ..., 2, 1, | 0 1 2 3 |, 2, 1, 0, 1, ...
        assert_eq!(reflect_index(-1, 4), 1);
        assert_eq!(reflect_index(-2, 4), 2);
        assert_eq!(reflect_index(0, 4), 0);
        assert_eq!(reflect_index(3, 4), 3);
        assert_eq!(reflect_index(4, 4), 2);
        assert_eq!(reflect_index(5, 4), 1);
        assert_eq!(reflect_index(6, 4), 0);
        assert_eq!(reflect_index(-3, 2), 1);
        assert_eq!(reflect_index(17, 1), 0);
    }

    #[test]
    fn resize_identity_is_exact() {
        let img = gradient_image(5, 7, 3);
        let out = resize(&img, 1.0).unwrap();
        assert_eq!(out, img);
    }

    #[test]
    fn resize_of_constant_stays_constant() {
        let img = ImageTensor::constant(6, 6, 2, 0.4).unwrap();
        for scale in [0.5, 0.75, 1.5, 2.0] {
            let out = resize(&img, scale).unwrap();
            assert!(out.as_slice().iter().all(|&v| (v - 0.4).abs() < 1e-12));
        }
    }

    /// Independent scalar reference resampler: one output sample recomputed
    /// straight from the half-pixel bilinear definition.
    fn reference_sample(
        img: &ImageTensor,
        out_h: usize,
        out_w: usize,
        oy: usize,
        ox: usize,
        b: usize,
    ) -> f64 {
        let sy = ((oy as f64 + 0.5) * img.height() as f64 / out_h as f64 - 0.5)
            .clamp(0.0, (img.height() - 1) as f64);
        let sx = ((ox as f64 + 0.5) * img.width() as f64 / out_w as f64 - 0.5)
            .clamp(0.0, (img.width() - 1) as f64);
        let (y0, x0) = (sy.floor() as usize, sx.floor() as usize);
        let (y1, x1) = ((y0 + 1).min(img.height() - 1), (x0 + 1).min(img.width() - 1));
        let (fy, fx) = (sy - y0 as f64, sx - x0 as f64);
        img.get(y0, x0, b) * (1.0 - fy) * (1.0 - fx)
            + img.get(y0, x1, b) * (1.0 - fy) * fx
            + img.get(y1, x0, b) * fy * (1.0 - fx)
            + img.get(y1, x1, b) * fy * fx
    }

    #[test]
    fn downscale_matches_reference_resampler() {
        let img = gradient_image(4, 4, 1);
        let out = resize(&img, 0.5).unwrap();
        assert_eq!((out.height(), out.width()), (2, 2));
        for oy in 0..2 {
            for ox in 0..2 {
                let want = reference_sample(&img, 2, 2, oy, ox, 0);
                assert!((out.get(oy, ox, 0) - want).abs() < 1e-12);
            }
        }
        // Non-integer scale on a larger multi-band image.
        let img = gradient_image(9, 7, 2);
        let out = resize(&img, 0.6).unwrap();
        assert_eq!((out.height(), out.width()), (5, 4));
        for oy in 0..out.height() {
            for ox in 0..out.width() {
                for b in 0..2 {
                    let want = reference_sample(&img, 5, 4, oy, ox, b);
                    assert!((out.get(oy, ox, b) - want).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn resize_to_empty_is_error() {
        let img = gradient_image(3, 3, 1);
        assert!(resize(&img, 0.1).is_err());
    }

    #[test]
    fn patch_of_constant_image_is_constant() {
        let img = ImageTensor::constant(8, 8, 3, 0.25).unwrap();
        let patch = extract_patch(&img, (0, 0), 1.0, 5);
        assert!(patch.iter().all(|&v| v == 0.25));
    }

    #[test]
    fn corner_patch_uses_reflection() {
        let img = gradient_image(6, 6, 1);
        let p = 5;
        let patch = extract_patch(&img, (0, 0), 1.0, p);
        // Sample (dy, dx) = (-2, -1) reflects to (2, 1).
        assert_eq!(patch[1], img.get(2, 1, 0));
        // Center of the patch is the pixel itself.
        assert_eq!(patch[2 * p + 2], img.get(0, 0, 0));
        assert!(patch.iter().all(|v| v.is_finite()));
    }

    #[test]
    fn interior_patch_equals_plain_crop() {
        let img = gradient_image(9, 9, 2);
        let patch = extract_patch(&img, (4, 5), 1.0, 3);
        let mut o = 0;
        for y in 3..=5 {
            for x in 4..=6 {
                for b in 0..2 {
                    assert_eq!(patch[o], img.get(y, x, b));
                    o += 1;
                }
            }
        }
    }

    #[test]
    fn pyramid_has_one_patch_per_scale() {
        let img = gradient_image(12, 10, 3);
        let scale_set = ScaleSet::new(vec![0.5, 1.0, 2.0], 15).unwrap();
        let stack = pyramid_patches(&img, (6, 4), &scale_set).unwrap();
        assert_eq!(stack.count(), 3);
        for k in 0..3 {
            assert_eq!(stack.patch(k).len(), 15 * 15 * 3);
        }
    }

    #[test]
    fn single_scale_identity_is_plain_crop() {
        let img = gradient_image(11, 11, 1);
        let scale_set = ScaleSet::new(vec![1.0], 5).unwrap();
        let stack = pyramid_patches(&img, (5, 5), &scale_set).unwrap();
        let direct = extract_patch(&img, (5, 5), 1.0, 5);
        assert_eq!(stack.patch(0), &direct[..]);
    }

    #[test]
    fn pyramid_of_constant_image_is_constant() {
        let img = ImageTensor::constant(10, 10, 2, 0.7).unwrap();
        let scale_set = ScaleSet::new(vec![0.5, 1.0, 2.0], 7).unwrap();
        let stack = pyramid_patches(&img, (9, 9), &scale_set).unwrap();
        for k in 0..3 {
            assert!(stack.patch(k).iter().all(|&v| (v - 0.7).abs() < 1e-12));
        }
    }

    #[test]
    fn scale_set_validation() {
        assert!(ScaleSet::new(vec![], 5).is_err());
        assert!(ScaleSet::new(vec![0.0], 5).is_err());
        assert!(ScaleSet::new(vec![1.0], 4).is_err());
        assert!(ScaleSet::new(vec![1.0], 0).is_err());
        assert!(ScaleSet::new(vec![0.5, 1.0, 2.0], 15).is_ok());
    }

    #[test]
    fn out_of_bounds_center_rejected() {
        let img = gradient_image(4, 4, 1);
        let scale_set = ScaleSet::new(vec![1.0], 3).unwrap();
        assert!(pyramid_patches(&img, (4, 0), &scale_set).is_err());
    }

    #[test]
    fn bilinear_never_overshoots() {
        // min/max of any resized output lie within [min, max] of the input.
        let img = gradient_image(13, 8, 2);
        let (lo, hi) = img
            .as_slice()
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| {
                (a.min(v), b.max(v))
            });
        for scale in [0.3, 0.5, 1.3, 2.0, 2.7] {
            let out = resize(&img, scale).unwrap();
            for &v in out.as_slice() {
                assert!(v >= lo - 1e-12 && v <= hi + 1e-12);
            }
        }
    }
}
