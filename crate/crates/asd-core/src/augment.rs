//! Photometric augmentation operations used to synthesize transformed
//! negatives from normal imagery.
//!
//! The five supported operations are Gaussian noise, channel shuffle,
//! random brightness, random contrast and solarize. A chain applies a
//! subset of its operations in listed order; all randomness is derived
//! deterministically from the chain seed, the op index and the (epoch,
//! image) pair so that re-runs reproduce the exact same negatives.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, Normal};

use crate::error::Error;
use crate::image::ImageTensor;
use crate::Result;

/// One augmentation operation with its parameter ranges.
#[derive(Debug, Clone, PartialEq)]
pub enum AugOp {
    /// Additive i.i.d. Gaussian noise; sigma drawn uniformly from the range.
    GaussNoise { sigma: (f64, f64) },
    /// Random permutation of the band order.
    ChannelShuffle,
    /// Single brightness shift drawn uniformly from the range.
    Brightness { delta: (f64, f64) },
    /// Contrast stretch around the global mean, factor drawn from the range.
    Contrast { factor: (f64, f64) },
    /// Invert values at or above the threshold.
    Solarize { threshold: f64 },
}

impl AugOp {
    fn name(&self) -> &'static str {
        match self {
            AugOp::GaussNoise { .. } => "gauss_noise",
            AugOp::ChannelShuffle => "channel_shuffle",
            AugOp::Brightness { .. } => "brightness",
            AugOp::Contrast { .. } => "contrast",
            AugOp::Solarize { .. } => "solarize",
        }
    }
}

/// Ordered list of operations applied to an image to produce its
/// transformed negative.
#[derive(Debug, Clone, PartialEq)]
pub struct AugmentationChain {
    ops: Vec<AugOp>,
    seed: u64,
    /// Per-image probability that each op participates; if the gate draw
    /// selects no op at all, one is forced so the negative never equals the
    /// original by construction.
    apply_prob: f64,
}

/// splitmix64; used to derive independent sub-seeds from (seed, tag) pairs.
pub(crate) fn mix_seed(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub(crate) fn combine_seeds(parts: &[u64]) -> u64 {
    let mut h = 0x243F_6A88_85A3_08D3u64;
    for &p in parts {
        h = mix_seed(h ^ p);
    }
    h
}

impl AugmentationChain {
    pub fn new(ops: Vec<AugOp>, seed: u64, apply_prob: f64) -> Result<Self> {
        if ops.is_empty() {
            return Err(Error::InvalidParameter(
                "augmentation chain needs at least one op".into(),
            ));
        }
        if !(0.0..=1.0).contains(&apply_prob) {
            return Err(Error::InvalidParameter(format!(
                "apply probability must be in [0, 1], got {apply_prob}"
            )));
        }
        for op in &ops {
            match op {
                AugOp::GaussNoise { sigma: (lo, hi) } => {
                    if !(*lo >= 0.0 && hi >= lo) {
                        return Err(Error::InvalidParameter(format!(
                            "gauss_noise sigma range [{lo}, {hi}] invalid"
                        )));
                    }
                }
                AugOp::Brightness { delta: (lo, hi) } => {
                    if !(*lo >= -1.0 && *hi <= 1.0 && hi >= lo) {
                        return Err(Error::InvalidParameter(format!(
                            "brightness delta range [{lo}, {hi}] invalid"
                        )));
                    }
                }
                AugOp::Contrast { factor: (lo, hi) } => {
                    if !(*lo >= 0.0 && hi >= lo) {
                        return Err(Error::InvalidParameter(format!(
                            "contrast factor range [{lo}, {hi}] invalid"
                        )));
                    }
                }
                AugOp::Solarize { threshold } => {
                    if !(0.0..=1.0).contains(threshold) {
                        return Err(Error::InvalidParameter(format!(
                            "solarize threshold {threshold} outside [0, 1]"
                        )));
                    }
                }
                AugOp::ChannelShuffle => {}
            }
        }
        Ok(Self {
            ops,
            seed,
            apply_prob,
        })
    }

    /// The default chain: all five ops with moderate ranges, each gated at
    /// probability 0.5 per image with at least one op forced.
    pub fn default_chain(seed: u64) -> Self {
        Self::new(
            vec![
                AugOp::GaussNoise { sigma: (0.02, 0.08) },
                AugOp::ChannelShuffle,
                AugOp::Brightness { delta: (-0.2, 0.2) },
                AugOp::Contrast { factor: (0.8, 1.2) },
                AugOp::Solarize { threshold: 0.5 },
            ],
            seed,
            0.5,
        )
        .expect("default chain is valid")
    }

    pub fn ops(&self) -> &[AugOp] {
        &self.ops
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn apply_prob(&self) -> f64 {
        self.apply_prob
    }

    /// Render the chain in the `op:params,op,...` form accepted by
    /// [`parse_chain_ops`].
    pub fn ops_spec(&self) -> String {
        self.ops
            .iter()
            .map(|op| match op {
                AugOp::GaussNoise { sigma: (lo, hi) } => format!("gauss_noise:{lo}:{hi}"),
                AugOp::ChannelShuffle => "channel_shuffle".to_string(),
                AugOp::Brightness { delta: (lo, hi) } => format!("brightness:{lo}:{hi}"),
                AugOp::Contrast { factor: (lo, hi) } => format!("contrast:{lo}:{hi}"),
                AugOp::Solarize { threshold } => format!("solarize:{threshold}"),
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parse a comma-separated op list such as
/// `gauss_noise:0.02:0.08,channel_shuffle,brightness:-0.2:0.2`.
pub fn parse_chain_ops(spec: &str) -> Result<Vec<AugOp>> {
    let mut ops = Vec::new();
    for item in spec.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let mut parts = item.split(':');
        let name = parts.next().unwrap_or_default();
        let args: Vec<f64> = parts
            .map(|p| {
                p.trim().parse::<f64>().map_err(|_| {
                    Error::InvalidParameter(format!("bad numeric argument {p:?} in op {item:?}"))
                })
            })
            .collect::<Result<_>>()?;
        let want = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "op {name} expects {n} arguments, got {}",
                    args.len()
                )))
            }
        };
        let op = match name {
            "gauss_noise" => {
                want(2)?;
                AugOp::GaussNoise { sigma: (args[0], args[1]) }
            }
            "channel_shuffle" => {
                want(0)?;
                AugOp::ChannelShuffle
            }
            "brightness" => {
                want(2)?;
                AugOp::Brightness { delta: (args[0], args[1]) }
            }
            "contrast" => {
                want(2)?;
                AugOp::Contrast { factor: (args[0], args[1]) }
            }
            "solarize" => {
                want(1)?;
                AugOp::Solarize { threshold: args[0] }
            }
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown augmentation op {other:?}"
                )))
            }
        };
        ops.push(op);
    }
    if ops.is_empty() {
        return Err(Error::InvalidParameter("empty augmentation op list".into()));
    }
    Ok(ops)
}

/// Add clamped i.i.d. Gaussian noise with standard deviation `sigma`.
pub fn gauss_noise(img: &ImageTensor, sigma: f64, seed: u64) -> Result<ImageTensor> {
    if !sigma.is_finite() || sigma < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "noise sigma must be non-negative, got {sigma}"
        )));
    }
    if sigma == 0.0 {
        return Ok(img.clone());
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, sigma).expect("sigma validated");
    let data = img
        .as_slice()
        .iter()
        .map(|&v| (v + normal.sample(&mut rng)).clamp(0.0, 1.0))
        .collect();
    Ok(ImageTensor::from_clamped(
        img.height(),
        img.width(),
        img.bands(),
        data,
    ))
}

/// Permute the band order by a seeded uniform random permutation. If the
/// drawn permutation is the identity it is redrawn once and the second draw
/// is accepted as-is.
pub fn channel_shuffle(img: &ImageTensor, seed: u64) -> Result<ImageTensor> {
    let bands = img.bands();
    if bands < 2 {
        return Err(Error::InvalidParameter(
            "channel shuffle requires at least 2 bands".into(),
        ));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..bands).collect();
    perm.shuffle(&mut rng);
    if perm.iter().enumerate().all(|(i, &p)| i == p) {
        perm.shuffle(&mut rng);
    }
    Ok(permute_bands(img, &perm))
}

/// Apply a fixed band permutation: output band b takes input band perm[b].
pub(crate) fn permute_bands(img: &ImageTensor, perm: &[usize]) -> ImageTensor {
    let bands = img.bands();
    debug_assert_eq!(perm.len(), bands);
    let src = img.as_slice();
    let mut data = vec![0.0; src.len()];
    for (px, chunk) in data.chunks_exact_mut(bands).enumerate() {
        let base = px * bands;
        for (b, out) in chunk.iter_mut().enumerate() {
            *out = src[base + perm[b]];
        }
    }
    ImageTensor::from_clamped(img.height(), img.width(), bands, data)
}

/// Shift all values by a delta drawn once per call from `delta_range`.
pub fn random_brightness(img: &ImageTensor, delta_range: (f64, f64), seed: u64) -> Result<ImageTensor> {
    let (lo, hi) = delta_range;
    if !(-1.0..=1.0).contains(&lo) || !(-1.0..=1.0).contains(&hi) || lo > hi {
        return Err(Error::InvalidParameter(format!(
            "brightness delta range [{lo}, {hi}] invalid"
        )));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let delta = if lo == hi { lo } else { rng.gen_range(lo..=hi) };
    let data = img
        .as_slice()
        .iter()
        .map(|&v| (v + delta).clamp(0.0, 1.0))
        .collect();
    Ok(ImageTensor::from_clamped(
        img.height(),
        img.width(),
        img.bands(),
        data,
    ))
}

/// Stretch values around the global mean by a factor drawn once per call
/// from `factor_range`.
pub fn random_contrast(img: &ImageTensor, factor_range: (f64, f64), seed: u64) -> Result<ImageTensor> {
    let (lo, hi) = factor_range;
    if !(lo >= 0.0 && hi >= lo) {
        return Err(Error::InvalidParameter(format!(
            "contrast factor range [{lo}, {hi}] invalid"
        )));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let factor = if lo == hi { lo } else { rng.gen_range(lo..=hi) };
    let n = img.as_slice().len() as f64;
    let mean = img.as_slice().iter().sum::<f64>() / n;
    let data = img
        .as_slice()
        .iter()
        .map(|&v| (mean + factor * (v - mean)).clamp(0.0, 1.0))
        .collect();
    Ok(ImageTensor::from_clamped(
        img.height(),
        img.width(),
        img.bands(),
        data,
    ))
}

/// Invert every value at or above the threshold: v < t keeps v, otherwise
/// 1 - v.
pub fn solarize(img: &ImageTensor, threshold: f64) -> Result<ImageTensor> {
    if !(0.0..=1.0).contains(&threshold) {
        return Err(Error::InvalidParameter(format!(
            "solarize threshold {threshold} outside [0, 1]"
        )));
    }
    let data = img
        .as_slice()
        .iter()
        .map(|&v| if v < threshold { v } else { 1.0 - v })
        .collect();
    Ok(ImageTensor::from_clamped(
        img.height(),
        img.width(),
        img.bands(),
        data,
    ))
}

const GATE_TAG: u64 = 0x6761_7465; // "gate"

/// Apply the chain to one image. Ops run in listed order, each consuming
/// the previous output. `epoch` and `image_index` feed the per-op seeds so
/// every (epoch, image) pair sees a fresh but reproducible negative.
pub fn apply_chain(
    img: &ImageTensor,
    chain: &AugmentationChain,
    epoch: u64,
    image_index: u64,
) -> Result<ImageTensor> {
    let mut gate_rng = ChaCha12Rng::seed_from_u64(combine_seeds(&[
        chain.seed,
        GATE_TAG,
        epoch,
        image_index,
    ]));
    let mut gates: Vec<bool> = chain
        .ops
        .iter()
        .map(|_| gate_rng.gen::<f64>() < chain.apply_prob)
        .collect();
    if gates.iter().all(|&g| !g) {
        let forced = gate_rng.gen_range(0..chain.ops.len());
        gates[forced] = true;
    }
    let mut out = img.clone();
    for (i, (op, &gate)) in chain.ops.iter().zip(gates.iter()).enumerate() {
        if !gate {
            continue;
        }
        let op_seed = combine_seeds(&[chain.seed, i as u64, epoch, image_index]);
        out = apply_op(&out, op, op_seed)
            .map_err(|e| Error::Contract(format!("chain op {} ({}): {e}", i, op.name())))?;
    }
    Ok(out)
}

fn apply_op(img: &ImageTensor, op: &AugOp, seed: u64) -> Result<ImageTensor> {
    match op {
        AugOp::GaussNoise { sigma: (lo, hi) } => {
            let mut rng = ChaCha12Rng::seed_from_u64(mix_seed(seed));
            let sigma = if lo == hi { *lo } else { rng.gen_range(*lo..=*hi) };
            gauss_noise(img, sigma, seed)
        }
        AugOp::ChannelShuffle => channel_shuffle(img, seed),
        AugOp::Brightness { delta } => random_brightness(img, *delta, seed),
        AugOp::Contrast { factor } => random_contrast(img, *factor, seed),
        AugOp::Solarize { threshold } => solarize(img, *threshold),
    }
}
