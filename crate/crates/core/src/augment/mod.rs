//! FilterAugment and the masking baselines.
//!
//! FilterAugment adds a random per-mel-bin dB offset to every frame of a
//! log-mel spectrogram, which amounts to passing the audio through a random
//! filter. One call draws, in order:
//!
//! 1. (mixed type only) one Bernoulli(`mix_ratio`) draw; success picks step.
//! 2. the band count `n`,
//! 3. `n - 1` interior boundaries,
//! 4. `n` band weights (step) or `n + 1` boundary weights (linear).

mod config;
mod curve;
mod mask;
mod sampling;

pub use config::{AugmentConfig, BandParams, FillMode, FilterType, MaskConfig};
pub use curve::{apply_curve, apply_weights, build_linear_curve, build_step_curve, CurveShape, FilterCurve};
pub use mask::{
    apply_frequency_span, apply_time_span, fill_value, frequency_mask, sample_frequency_span, sample_time_span,
    time_mask, MaskSpan,
};
pub use sampling::{sample_band_count, sample_boundaries, sample_weights};

use crate::error::Result;
use crate::rng::RandomStream;
use crate::spectro::LogMelSpectrogram;

/// Draws one filter curve for a spectrogram with `n_mels` bins.
pub fn sample_curve(n_mels: usize, cfg: &AugmentConfig, rng: &mut RandomStream) -> Result<FilterCurve> {
    cfg.validate()?;
    let shape = match cfg.filter_type {
        FilterType::Step => CurveShape::Step,
        FilterType::Linear => CurveShape::Linear,
        FilterType::Mixed => {
            if rng.bernoulli(cfg.mix_ratio) {
                CurveShape::Step
            } else {
                CurveShape::Linear
            }
        }
    };
    let params = match shape {
        CurveShape::Step => &cfg.step,
        CurveShape::Linear => &cfg.linear,
    };

    let n = sample_band_count(params, n_mels, rng)?;
    let boundaries = sample_boundaries(n, n_mels, params.min_bandwidth, rng)?;
    match shape {
        CurveShape::Step => {
            let weights = sample_weights(n, params.db_range, rng);
            build_step_curve(&boundaries, &weights, n_mels)
        }
        CurveShape::Linear => {
            let weights = sample_weights(n + 1, params.db_range, rng);
            build_linear_curve(&boundaries, &weights, n_mels)
        }
    }
}

/// Applies one random filter to `spec` and returns the result with the curve used.
pub fn filter_augment(
    spec: &LogMelSpectrogram,
    cfg: &AugmentConfig,
    rng: &mut RandomStream,
) -> Result<(LogMelSpectrogram, FilterCurve)> {
    let curve = sample_curve(spec.n_mels(), cfg, rng)?;
    let out = apply_curve(spec, &curve)?;
    Ok((out, curve))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preset::Preset;

    fn spec(t: usize, f: usize) -> LogMelSpectrogram {
        let values = (0..t * f).map(|i| ((i * 37) % 91) as f64 - 60.0).collect();
        LogMelSpectrogram::new(values, t, f, 16000, 256).unwrap()
    }

    #[test]
    fn full_mix_ratio_always_steps() {
        let mut cfg = Preset::SedMixed.augment_config().unwrap();
        cfg.mix_ratio = 1.0;
        let mut rng = RandomStream::new(1);
        for _ in 0..500 {
            let c = sample_curve(128, &cfg, &mut rng).unwrap();
            assert_eq!(c.shape, CurveShape::Step);
        }
        cfg.mix_ratio = 0.0;
        for _ in 0..500 {
            let c = sample_curve(128, &cfg, &mut rng).unwrap();
            assert_eq!(c.shape, CurveShape::Linear);
        }
    }

    #[test]
    fn mixed_branches_use_their_own_params() {
        let cfg = Preset::SedMixed.augment_config().unwrap();
        let mut rng = RandomStream::new(2);
        for _ in 0..500 {
            let c = sample_curve(128, &cfg, &mut rng).unwrap();
            let (params, n_weights) = match c.shape {
                CurveShape::Step => (cfg.step, c.n_bands()),
                CurveShape::Linear => (cfg.linear, c.n_bands() + 1),
            };
            assert!((params.band_number_range.0..=params.band_number_range.1).contains(&c.n_bands()));
            assert!(c.boundaries.windows(2).all(|p| p[1] - p[0] >= params.min_bandwidth));
            assert_eq!(c.boundary_weights.len(), n_weights);
        }
    }

    #[test]
    fn seeded_runs_are_bitwise_identical() {
        let s = spec(20, 64);
        let cfg = Preset::SedMixed.augment_config().unwrap();
        let (a, ca) = filter_augment(&s, &cfg, &mut RandomStream::new(99)).unwrap();
        let (b, cb) = filter_augment(&s, &cfg, &mut RandomStream::new(99)).unwrap();
        let bits = |x: &LogMelSpectrogram| x.values().iter().map(|v| v.to_bits()).collect::<Vec<_>>();
        assert_eq!(bits(&a), bits(&b));
        assert_eq!(ca, cb);
    }

    #[test]
    fn zero_db_range_is_identity() {
        let s = spec(5, 32);
        let mut cfg = Preset::SedLinear.augment_config().unwrap();
        cfg.linear.db_range = (0.0, 0.0);
        let (out, _) = filter_augment(&s, &cfg, &mut RandomStream::new(3)).unwrap();
        assert_eq!(out.values(), s.values());
    }

    #[test]
    fn invalid_config_is_rejected() {
        let mut cfg = Preset::SedStep.augment_config().unwrap();
        cfg.step.band_number_range = (5, 2);
        assert!(filter_augment(&spec(2, 16), &cfg, &mut RandomStream::new(0)).is_err());
    }

    #[test]
    fn narrow_spectrogram_errors() {
        let cfg = Preset::SedLinear.augment_config().unwrap();
        assert!(filter_augment(&spec(2, 5), &cfg, &mut RandomStream::new(0)).is_err());
    }
}
