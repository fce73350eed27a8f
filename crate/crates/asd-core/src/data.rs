//! Dataset loading, the normal-class masking protocol, and procedural
//! synthetic datasets.
//!
//! On-disk layout: a dataset directory holds paired `images/NAME.png` and
//! `labels/NAME.png` files, labels stored as single-channel indexed images.
//! Image values are scaled to [0, 1] by the bit-depth maximum on load.

use std::fs;
use std::path::{Path, PathBuf};

use image::{DynamicImage, ImageBuffer, Luma, Rgb};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::augment::combine_seeds;
use crate::error::Error;
use crate::image::{ImageTensor, LabelMap, NormalMask};
use crate::Result;

/// Load a paired image/label PNG. The image may be 8- or 16-bit gray or
/// RGB; the label must be a single-channel indexed image of the same size.
pub fn load_labeled_image(image_path: &Path, label_path: &Path) -> Result<(ImageTensor, LabelMap)> {
    let img = load_image(image_path)?;
    let labels = load_labels(label_path)?;
    if img.height() != labels.height() || img.width() != labels.width() {
        return Err(Error::DimensionMismatch {
            context: format!(
                "label {} does not match image {}",
                label_path.display(),
                image_path.display()
            ),
            expected: format!("{}x{}", img.height(), img.width()),
            actual: format!("{}x{}", labels.height(), labels.width()),
        });
    }
    Ok((img, labels))
}

/// Load one image PNG, scaling values to [0, 1] by the bit-depth maximum.
pub fn load_image(path: &Path) -> Result<ImageTensor> {
    let dynamic = open_png(path)?;
    let (h, w) = (dynamic.height() as usize, dynamic.width() as usize);
    let (bands, data): (usize, Vec<f64>) = match &dynamic {
        DynamicImage::ImageLuma8(buf) => {
            (1, buf.as_raw().iter().map(|&v| v as f64 / 255.0).collect())
        }
        DynamicImage::ImageLuma16(buf) => {
            (1, buf.as_raw().iter().map(|&v| v as f64 / 65535.0).collect())
        }
        DynamicImage::ImageRgb8(buf) => {
            (3, buf.as_raw().iter().map(|&v| v as f64 / 255.0).collect())
        }
        DynamicImage::ImageRgb16(buf) => {
            (3, buf.as_raw().iter().map(|&v| v as f64 / 65535.0).collect())
        }
        other => {
            return Err(Error::UnsupportedFormat {
                path: path.to_path_buf(),
                detail: format!("{:?}", other.color()),
            })
        }
    };
    ImageTensor::new(h, w, bands, data)
}

/// Load a single-channel label PNG into integer class ids.
pub fn load_labels(path: &Path) -> Result<LabelMap> {
    let dynamic = open_png(path)?;
    let (h, w) = (dynamic.height() as usize, dynamic.width() as usize);
    let data: Vec<u32> = match &dynamic {
        DynamicImage::ImageLuma8(buf) => buf.as_raw().iter().map(|&v| v as u32).collect(),
        DynamicImage::ImageLuma16(buf) => buf.as_raw().iter().map(|&v| v as u32).collect(),
        other => {
            return Err(Error::UnsupportedFormat {
                path: path.to_path_buf(),
                detail: format!("label must be single-channel, got {:?}", other.color()),
            })
        }
    };
    LabelMap::new(h, w, data)
}

fn open_png(path: &Path) -> Result<DynamicImage> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    image::load_from_memory(&bytes).map_err(|e| Error::ImageDecode {
        path: path.to_path_buf(),
        source: e,
    })
}

/// Save an image as an 8-bit PNG (gray for 1 band, RGB for 3), quantizing
/// each value with round(v * 255).
pub fn save_image(img: &ImageTensor, path: &Path) -> Result<()> {
    let h = img.height() as u32;
    let w = img.width() as u32;
    let quantize = |v: f64| (v * 255.0).round().clamp(0.0, 255.0) as u8;
    let bytes: Vec<u8> = img.as_slice().iter().map(|&v| quantize(v)).collect();
    let mut out = Vec::new();
    let encode_result = match img.bands() {
        1 => ImageBuffer::<Luma<u8>, _>::from_raw(w, h, bytes)
            .expect("size checked")
            .write_to(&mut std::io::Cursor::new(&mut out), image::ImageFormat::Png),
        3 => ImageBuffer::<Rgb<u8>, _>::from_raw(w, h, bytes)
            .expect("size checked")
            .write_to(&mut std::io::Cursor::new(&mut out), image::ImageFormat::Png),
        b => {
            return Err(Error::UnsupportedFormat {
                path: path.to_path_buf(),
                detail: format!("{b} bands cannot be written as PNG (need 1 or 3)"),
            })
        }
    };
    encode_result.map_err(|e| Error::ImageEncode {
        path: path.to_path_buf(),
        source: e,
    })?;
    atomic_write(path, &out)
}

/// Save a label map as an 8-bit single-channel PNG. Class ids above 255 are
/// rejected (the synthetic generator only emits 0 and 1).
pub fn save_labels(labels: &LabelMap, path: &Path) -> Result<()> {
    let h = labels.height() as u32;
    let w = labels.width() as u32;
    let bytes: Vec<u8> = labels
        .as_slice()
        .iter()
        .map(|&c| {
            u8::try_from(c).map_err(|_| Error::UnsupportedFormat {
                path: path.to_path_buf(),
                detail: format!("class id {c} exceeds 8-bit label range"),
            })
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    ImageBuffer::<Luma<u8>, _>::from_raw(w, h, bytes)
        .expect("size checked")
        .write_to(&mut std::io::Cursor::new(&mut out), image::ImageFormat::Png)
        .map_err(|e| Error::ImageEncode {
            path: path.to_path_buf(),
            source: e,
        })?;
    atomic_write(path, &out)
}

/// Write bytes through a temp file and rename so interrupted runs never
/// leave partial artifacts behind.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
        }
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, bytes).map_err(|e| Error::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}

/// Mask true exactly where the label equals the designated normal class.
/// Rejects a class that never occurs, since an all-false training mask is
/// meaningless.
pub fn make_normal_mask(labels: &LabelMap, normal_class: u32) -> Result<NormalMask> {
    if labels.count(normal_class) == 0 {
        return Err(Error::NormalClassAbsent {
            class: normal_class,
        });
    }
    let data = labels.as_slice().iter().map(|&c| c == normal_class).collect();
    NormalMask::new(labels.height(), labels.width(), data)
}

/// Deterministic recipe for a desk-scale synthetic dataset: seeded normal
/// textures with inserted disk/rectangle anomalies on the test split.
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSpec {
    pub height: usize,
    pub width: usize,
    pub bands: usize,
    /// Selects the normal palette and pattern family.
    pub texture_family: u64,
    /// Inclusive range for the number of anomaly shapes per test image.
    pub anomaly_count: (usize, usize),
    /// Inclusive range for the anomaly radius (pixels).
    pub anomaly_radius: (usize, usize),
    pub train_count: usize,
    pub test_count: usize,
    pub seed: u64,
}

impl SyntheticSpec {
    pub fn validate(&self) -> Result<()> {
        if self.height == 0 || self.width == 0 || self.bands == 0 {
            return Err(Error::InvalidParameter("synthetic image dims must be positive".into()));
        }
        let (clo, chi) = self.anomaly_count;
        let (rlo, rhi) = self.anomaly_radius;
        if clo > chi {
            return Err(Error::InvalidParameter(format!(
                "anomaly count range [{clo}, {chi}] inverted"
            )));
        }
        if chi > 0 {
            if rlo == 0 || rlo > rhi {
                return Err(Error::InvalidParameter(format!(
                    "anomaly radius range [{rlo}, {rhi}] invalid"
                )));
            }
            if 2 * rhi >= self.height.min(self.width) {
                return Err(Error::InvalidParameter(format!(
                    "anomaly radius {rhi} too large for a {}x{} image",
                    self.height, self.width
                )));
            }
        }
        Ok(())
    }
}

/// A generated dataset: anomaly-free training images plus test images with
/// inserted anomalies (class 1 on a class-0 background).
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticDataset {
    pub train: Vec<(ImageTensor, LabelMap)>,
    pub test: Vec<(ImageTensor, LabelMap)>,
}

const SYNTH_TRAIN_TAG: u64 = 0x7472_6169_6e;
const SYNTH_TEST_TAG: u64 = 0x7465_7374;

/// Generate the dataset. Pure in the spec: equal specs give bit-identical
/// outputs.
pub fn generate_synthetic(spec: &SyntheticSpec) -> Result<SyntheticDataset> {
    spec.validate()?;
    let mut train = Vec::with_capacity(spec.train_count);
    for i in 0..spec.train_count {
        let img_seed = combine_seeds(&[spec.seed, SYNTH_TRAIN_TAG, i as u64]);
        let img = normal_texture(spec, img_seed);
        let labels = LabelMap::new(spec.height, spec.width, vec![0; spec.height * spec.width])?;
        train.push((img, labels));
    }
    let mut test = Vec::with_capacity(spec.test_count);
    for i in 0..spec.test_count {
        let img_seed = combine_seeds(&[spec.seed, SYNTH_TEST_TAG, i as u64]);
        test.push(test_image(spec, img_seed)?);
    }
    Ok(SyntheticDataset { train, test })
}

/// Per-family base color for one band, kept inside [0.3, 0.7] so both the
/// texture spread and the disjoint anomaly palette stay in range.
fn family_base(family: u64, band: usize) -> f64 {
    let h = combine_seeds(&[family, 0x62617365, band as u64]);
    0.3 + 0.4 * ((h >> 11) as f64 / (1u64 << 53) as f64)
}

/// Smoothed band-limited noise mixed 70/30 with a horizontal sinusoid of
/// seeded period 6-12 px, centered on the family palette.
fn normal_texture(spec: &SyntheticSpec, seed: u64) -> ImageTensor {
    let (h, w, bands) = (spec.height, spec.width, spec.bands);
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let period = rng.gen_range(6.0..=12.0);
    let phase = rng.gen_range(0.0..std::f64::consts::TAU);
    let amplitude = 0.4;
    let mut data = vec![0.0; h * w * bands];
    let mut noise = vec![0.0; h * w];
    let mut blurred = vec![0.0; h * w];
    for band in 0..bands {
        let base = family_base(spec.texture_family, band);
        for v in noise.iter_mut() {
            *v = rng.gen::<f64>();
        }
        box_blur_5(&noise, h, w, &mut blurred);
        for y in 0..h {
            for x in 0..w {
                let s = 0.5 * (1.0 + (std::f64::consts::TAU * x as f64 / period + phase).sin());
                let field = 0.7 * blurred[y * w + x] + 0.3 * s;
                data[(y * w + x) * bands + band] = (base + amplitude * (field - 0.5)).clamp(0.0, 1.0);
            }
        }
    }
    ImageTensor::from_clamped(h, w, bands, data)
}

/// 5x5 box blur with reflected borders.
fn box_blur_5(src: &[f64], h: usize, w: usize, dst: &mut [f64]) {
    use crate::pyramid::reflect_index;
    for y in 0..h {
        for x in 0..w {
            let mut acc = 0.0;
            for dy in -2isize..=2 {
                let sy = reflect_index(y as isize + dy, h);
                for dx in -2isize..=2 {
                    let sx = reflect_index(x as isize + dx, w);
                    acc += src[sy * w + sx];
                }
            }
            dst[y * w + x] = acc / 25.0;
        }
    }
}

#[derive(Clone, Copy)]
enum Shape {
    Disk,
    Rect,
}

/// One test image: normal texture plus 5-30% anomaly pixels drawn from a
/// palette disjoint from the normal one. The shape draw is retried with
/// fresh sub-seeds until the fraction lands in range, so degenerate shape
/// ranges surface as an error instead of an invalid split.
fn test_image(spec: &SyntheticSpec, seed: u64) -> Result<(ImageTensor, LabelMap)> {
    let base_img = normal_texture(spec, seed);
    let (clo, chi) = spec.anomaly_count;
    if chi == 0 {
        let labels = LabelMap::new(spec.height, spec.width, vec![0; spec.height * spec.width])?;
        return Ok((base_img, labels));
    }
    // Test images must contain anomalies; a lower bound of zero only
    // applies to the anomaly-free training split.
    let clo = clo.max(1);
    for attempt in 0..100u64 {
        let mut rng = ChaCha12Rng::seed_from_u64(combine_seeds(&[seed, 0x616e6f6d, attempt]));
        let mut img_data = base_img.as_slice().to_vec();
        let mut labels = vec![0u32; spec.height * spec.width];
        let count = rng.gen_range(clo..=chi);
        for _ in 0..count {
            draw_shape(spec, &mut rng, &mut img_data, &mut labels);
        }
        let anomaly = labels.iter().filter(|&&c| c == 1).count();
        let fraction = anomaly as f64 / labels.len() as f64;
        if (0.05..=0.30).contains(&fraction) {
            let img = ImageTensor::from_clamped(spec.height, spec.width, spec.bands, img_data);
            return Ok((img, LabelMap::new(spec.height, spec.width, labels)?));
        }
    }
    Err(Error::InvalidParameter(format!(
        "anomaly ranges count {:?} radius {:?} cannot reach a 5-30% pixel fraction on a {}x{} image",
        spec.anomaly_count, spec.anomaly_radius, spec.height, spec.width
    )))
}

fn draw_shape(
    spec: &SyntheticSpec,
    rng: &mut ChaCha12Rng,
    img_data: &mut [f64],
    labels: &mut [u32],
) {
    let (h, w, bands) = (spec.height, spec.width, spec.bands);
    let (rlo, rhi) = spec.anomaly_radius;
    let radius = rng.gen_range(rlo..=rhi);
    let cy = rng.gen_range(radius..h - radius) as isize;
    let cx = rng.gen_range(radius..w - radius) as isize;
    let shape = if rng.gen::<bool>() { Shape::Disk } else { Shape::Rect };
    // Disjoint palette: push each band at least 0.3 away from the family
    // base, plus a small per-shape jitter.
    let color: Vec<f64> = (0..bands)
        .map(|b| {
            let base = family_base(spec.texture_family, b);
            let jitter = rng.gen_range(-0.05..=0.05);
            let v = if base < 0.5 { base + 0.45 } else { base - 0.45 };
            (v + jitter).clamp(0.0, 1.0)
        })
        .collect();
    let r = radius as isize;
    for dy in -r..=r {
        for dx in -r..=r {
            let inside = match shape {
                Shape::Disk => dy * dy + dx * dx <= r * r,
                Shape::Rect => true,
            };
            if !inside {
                continue;
            }
            let (y, x) = ((cy + dy) as usize, (cx + dx) as usize);
            labels[y * w + x] = 1;
            for (b, &c) in color.iter().enumerate() {
                img_data[(y * w + x) * bands + b] = c;
            }
        }
    }
}

/// Standard dataset directory layout: paired `images/NAME.png` and
/// `labels/NAME.png`, enumerated in sorted name order.
pub fn list_dataset(dir: &Path) -> Result<Vec<(String, PathBuf, PathBuf)>> {
    let images_dir = dir.join("images");
    let labels_dir = dir.join("labels");
    let mut names = Vec::new();
    let entries = fs::read_dir(&images_dir).map_err(|e| Error::io(&images_dir, e))?;
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(&images_dir, e))?;
        let path = entry.path();
        if path.extension().and_then(|e| e.to_str()) == Some("png") {
            let stem = path
                .file_stem()
                .and_then(|s| s.to_str())
                .ok_or_else(|| Error::Contract(format!("unreadable file name {path:?}")))?
                .to_string();
            names.push(stem);
        }
    }
    names.sort();
    let mut out = Vec::with_capacity(names.len());
    for name in names {
        let image_path = images_dir.join(format!("{name}.png"));
        let label_path = labels_dir.join(format!("{name}.png"));
        if !label_path.exists() {
            return Err(Error::Contract(format!(
                "image {name}.png has no paired label in {}",
                labels_dir.display()
            )));
        }
        out.push((name, image_path, label_path));
    }
    if out.is_empty() {
        return Err(Error::Contract(format!(
            "no PNG images found in {}",
            images_dir.display()
        )));
    }
    Ok(out)
}

/// Write a dataset split into the standard directory layout.
pub fn write_dataset(split: &[(ImageTensor, LabelMap)], dir: &Path) -> Result<()> {
    let width = split.len().to_string().len().max(3);
    for (i, (img, labels)) in split.iter().enumerate() {
        let name = format!("{i:0width$}");
        save_image(img, &dir.join("images").join(format!("{name}.png")))?;
        save_labels(labels, &dir.join("labels").join(format!("{name}.png")))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    #[test]
    fn masking_examples() {
        let labels = LabelMap::new(2, 2, vec![3, 3, 3, 3]).unwrap();
        let mask = make_normal_mask(&labels, 3).unwrap();
        assert_eq!(mask.count_true(), 4);

        let labels = LabelMap::new(2, 2, vec![0, 1, 1, 0]).unwrap();
        let mask = make_normal_mask(&labels, 0).unwrap();
        assert_eq!(mask.as_slice(), &[true, false, false, true]);

        let labels = LabelMap::new(2, 2, vec![3, 3, 3, 3]).unwrap();
        let err = make_normal_mask(&labels, 7).unwrap_err();
        assert!(err.to_string().contains("absent"));
    }

    #[test]
    fn mask_count_equals_label_count() {
        let mut rng = ChaCha12Rng::seed_from_u64(5);
        let data: Vec<u32> = (0..100).map(|_| rng.gen_range(0..4)).collect();
        let labels = LabelMap::new(10, 10, data).unwrap();
        for class in 0..4 {
            if labels.count(class) == 0 {
                continue;
            }
            let mask = make_normal_mask(&labels, class).unwrap();
            assert_eq!(mask.count_true(), labels.count(class));
        }
    }

    #[test]
    fn png_round_trip_within_quantization() {
        let dir = tempdir().unwrap();
        let data: Vec<f64> = (0..4 * 5 * 3).map(|i| (i as f64 / 59.0).min(1.0)).collect();
        let img = ImageTensor::new(4, 5, 3, data).unwrap();
        let path = dir.path().join("img.png");
        save_image(&img, &path).unwrap();
        let back = load_image(&path).unwrap();
        assert_eq!((back.height(), back.width(), back.bands()), (4, 5, 3));
        for (a, b) in back.as_slice().iter().zip(img.as_slice()) {
            assert!((a - b).abs() <= 0.5 / 255.0 + 1e-12);
        }
        // Saving the loaded image again reproduces the exact same file.
        let path2 = dir.path().join("img2.png");
        save_image(&back, &path2).unwrap();
        assert_eq!(fs::read(&path).unwrap(), fs::read(&path2).unwrap());
    }

    #[test]
    fn load_scales_by_bit_depth_max() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("white.png");
        let buf = ImageBuffer::<Luma<u8>, _>::from_raw(2, 2, vec![255u8; 4]).unwrap();
        buf.save(&path).unwrap();
        let img = load_image(&path).unwrap();
        assert!(img.as_slice().iter().all(|&v| v == 1.0));

        let path16 = dir.path().join("mid16.png");
        let buf = ImageBuffer::<Luma<u16>, _>::from_raw(2, 2, vec![65535u16; 4]).unwrap();
        buf.save(&path16).unwrap();
        let img = load_image(&path16).unwrap();
        assert!(img.as_slice().iter().all(|&v| v == 1.0));
    }

    #[test]
    fn labeled_pair_shape_checks() {
        let dir = tempdir().unwrap();
        let img_path = dir.path().join("i.png");
        let lbl_path = dir.path().join("l.png");
        ImageBuffer::<Rgb<u8>, _>::from_raw(4, 4, vec![10u8; 48])
            .unwrap()
            .save(&img_path)
            .unwrap();
        ImageBuffer::<Luma<u8>, _>::from_raw(5, 5, vec![0u8; 25])
            .unwrap()
            .save(&lbl_path)
            .unwrap();
        let err = load_labeled_image(&img_path, &lbl_path).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));

        ImageBuffer::<Luma<u8>, _>::from_raw(4, 4, vec![0u8; 16])
            .unwrap()
            .save(&lbl_path)
            .unwrap();
        let (img, labels) = load_labeled_image(&img_path, &lbl_path).unwrap();
        assert_eq!((img.height(), img.width(), img.bands()), (4, 4, 3));
        assert_eq!((labels.height(), labels.width()), (4, 4));
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = load_image(Path::new("/nonexistent/x.png")).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn unsupported_format_rejected() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("rgba.png");
        let buf =
            ImageBuffer::<image::Rgba<u8>, _>::from_raw(2, 2, vec![0u8; 16]).unwrap();
        buf.save(&path).unwrap();
        assert!(matches!(
            load_image(&path).unwrap_err(),
            Error::UnsupportedFormat { .. }
        ));
    }

    fn small_spec() -> SyntheticSpec {
        SyntheticSpec {
            height: 32,
            width: 32,
            bands: 3,
            texture_family: 0,
            anomaly_count: (1, 3),
            anomaly_radius: (3, 6),
            train_count: 2,
            test_count: 2,
            seed: 7,
        }
    }

    #[test]
    fn synthetic_is_deterministic() {
        let spec = small_spec();
        let a = generate_synthetic(&spec).unwrap();
        let b = generate_synthetic(&spec).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn synthetic_without_anomalies_is_all_zero_labels() {
        let mut spec = small_spec();
        spec.anomaly_count = (0, 0);
        let ds = generate_synthetic(&spec).unwrap();
        for (_, labels) in ds.train.iter().chain(ds.test.iter()) {
            assert!(labels.as_slice().iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn synthetic_train_split_is_anomaly_free() {
        let ds = generate_synthetic(&small_spec()).unwrap();
        for (_, labels) in &ds.train {
            assert_eq!(labels.count(1), 0);
        }
    }

    #[test]
    fn synthetic_anomaly_fraction_in_range() {
        // 100 generated test images all land in the documented band.
        let mut spec = small_spec();
        spec.train_count = 0;
        spec.test_count = 100;
        let ds = generate_synthetic(&spec).unwrap();
        for (_, labels) in &ds.test {
            let frac = labels.count(1) as f64 / (32.0 * 32.0);
            assert!(
                (0.02..=0.35).contains(&frac),
                "anomaly fraction {frac} outside [0.02, 0.35]"
            );
        }
    }

    #[test]
    fn degenerate_specs_rejected() {
        let mut spec = small_spec();
        spec.anomaly_radius = (0, 0);
        assert!(generate_synthetic(&spec).is_err());
        let mut spec = small_spec();
        spec.anomaly_radius = (16, 20);
        assert!(generate_synthetic(&spec).is_err());
    }

    #[test]
    fn dataset_dir_round_trip() {
        let dir = tempdir().unwrap();
        let ds = generate_synthetic(&small_spec()).unwrap();
        write_dataset(&ds.train, &dir.path().join("train")).unwrap();
        let listed = list_dataset(&dir.path().join("train")).unwrap();
        assert_eq!(listed.len(), 2);
        let (img, labels) = load_labeled_image(&listed[0].1, &listed[0].2).unwrap();
        assert_eq!((img.height(), img.width(), img.bands()), (32, 32, 3));
        assert_eq!(labels.count(0), 32 * 32);
    }

    #[test]
    fn unpaired_dataset_rejected() {
        let dir = tempdir().unwrap();
        let ds = generate_synthetic(&small_spec()).unwrap();
        write_dataset(&ds.train, dir.path()).unwrap();
        fs::remove_file(dir.path().join("labels").join("000.png")).unwrap();
        assert!(list_dataset(dir.path()).is_err());
    }
}
