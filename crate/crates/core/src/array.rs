//! Flat-buffer entry points for callers that hold spectrograms as plain
//! row-major `f32` arrays (`n_frames` rows of `n_mels` values), such as
//! training pipelines in other languages.
//!
//! Values are widened to `f64`, processed exactly as the file-based path
//! does, and narrowed back to `f32`, so results match the CLI on the same
//! `LMSP` payload, configuration and seed.

use crate::augment::{self, AugmentConfig, MaskConfig};
use crate::error::{Error, Result};
use crate::rng::RandomStream;
use crate::spectro::LogMelSpectrogram;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaskKind {
    Frequency,
    Time,
}

fn to_spectrogram(values: &[f32], n_frames: usize, n_mels: usize) -> Result<LogMelSpectrogram> {
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::InvalidConfig(format!("non-finite value at flat index {i}")));
    }
    let widened = values.iter().map(|&v| f64::from(v)).collect();
    LogMelSpectrogram::new(widened, n_frames, n_mels, 0, 0)
}

fn narrow(spec: &LogMelSpectrogram) -> Vec<f32> {
    spec.values().iter().map(|&v| v as f32).collect()
}

/// FilterAugment on a flat array. Returns the augmented values and the
/// per-bin dB curve that was added.
pub fn augment_array(
    values: &[f32],
    n_frames: usize,
    n_mels: usize,
    cfg: &AugmentConfig,
    seed: u64,
) -> Result<(Vec<f32>, Vec<f64>)> {
    let spec = to_spectrogram(values, n_frames, n_mels)?;
    let (out, curve) = augment::filter_augment(&spec, cfg, &mut RandomStream::new(seed))?;
    Ok((narrow(&out), curve.weights_db))
}

pub fn mask_array(
    values: &[f32],
    n_frames: usize,
    n_mels: usize,
    cfg: &MaskConfig,
    seed: u64,
    kind: MaskKind,
) -> Result<Vec<f32>> {
    let spec = to_spectrogram(values, n_frames, n_mels)?;
    let mut rng = RandomStream::new(seed);
    let out = match kind {
        MaskKind::Frequency => augment::frequency_mask(&spec, cfg, &mut rng)?,
        MaskKind::Time => augment::time_mask(&spec, cfg, &mut rng)?,
    };
    Ok(narrow(&out))
}

/// One filter curve of length `n_mels`, without applying it.
pub fn filter_curve(n_mels: usize, cfg: &AugmentConfig, seed: u64) -> Result<Vec<f64>> {
    Ok(augment::sample_curve(n_mels, cfg, &mut RandomStream::new(seed))?.weights_db)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{decode_spectrogram, encode_spectrogram};
    use crate::preset::Preset;

    fn payload(t: usize, f: usize) -> Vec<f32> {
        (0..t * f).map(|i| ((i * 13) % 57) as f32 * -1.25).collect()
    }

    #[test]
    fn matches_file_path() {
        let values = payload(10, 64);
        let cfg = Preset::SedLinear.augment_config().unwrap();
        let (flat, curve) = augment_array(&values, 10, 64, &cfg, 42).unwrap();

        let widened = values.iter().map(|&v| f64::from(v)).collect();
        let spec = LogMelSpectrogram::new(widened, 10, 64, 16000, 256).unwrap();
        let spec = decode_spectrogram(&encode_spectrogram(&spec).unwrap()).unwrap();
        let (out, c) = augment::filter_augment(&spec, &cfg, &mut RandomStream::new(42)).unwrap();
        let file = decode_spectrogram(&encode_spectrogram(&out).unwrap()).unwrap();
        assert_eq!(curve, c.weights_db);
        for (a, b) in flat.iter().zip(file.values()) {
            assert_eq!(f64::from(*a), *b);
        }
    }

    #[test]
    fn zero_db_range_returns_input() {
        let values = payload(4, 32);
        let mut cfg = Preset::SedLinear.augment_config().unwrap();
        cfg.linear.db_range = (0.0, 0.0);
        let (out, _) = augment_array(&values, 4, 32, &cfg, 1).unwrap();
        assert_eq!(out, values);
    }

    #[test]
    fn rejects_bad_arrays() {
        let cfg = Preset::SedStep.augment_config().unwrap();
        assert!(augment_array(&[0.0, f32::NAN], 1, 2, &cfg, 0).is_err());
        assert!(augment_array(&[0.0; 5], 2, 2, &cfg, 0).is_err());
    }

    #[test]
    fn masks_by_kind() {
        let values = payload(40, 128);
        let cfg = MaskConfig::default();
        let freq = mask_array(&values, 40, 128, &cfg, 3, MaskKind::Frequency).unwrap();
        let time = mask_array(&values, 40, 128, &cfg, 3, MaskKind::Time).unwrap();
        let changed_cols = |out: &[f32]| {
            (0..128)
                .filter(|&f| (0..40).any(|t| out[t * 128 + f] != values[t * 128 + f]))
                .count()
        };
        assert!(changed_cols(&freq) <= 8);
        let changed_rows = (0..40)
            .filter(|&t| (0..128).any(|f| time[t * 128 + f] != values[t * 128 + f]))
            .count();
        assert!((7..=30).contains(&changed_rows));
    }

    #[test]
    fn curve_only() {
        let cfg = Preset::SedStep.augment_config().unwrap();
        let a = filter_curve(128, &cfg, 5).unwrap();
        assert_eq!(a.len(), 128);
        assert_eq!(a, filter_curve(128, &cfg, 5).unwrap());
    }
}
