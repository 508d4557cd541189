//! Frequency and time masking baselines.

use super::{FillMode, MaskConfig};
use crate::error::Result;
use crate::rng::RandomStream;
use crate::spectro::LogMelSpectrogram;

/// Half-open interval `[start, start + width)` along one axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaskSpan {
    pub start: usize,
    pub width: usize,
}

impl MaskSpan {
    pub fn end(&self) -> usize {
        self.start + self.width
    }

    pub fn contains(&self, i: usize) -> bool {
        (self.start..self.end()).contains(&i)
    }
}

pub fn fill_value(spec: &LogMelSpectrogram, mode: FillMode) -> f64 {
    match mode {
        FillMode::SpectrogramMean => spec.mean(),
        FillMode::Constant(v) => v,
    }
}

/// Width uniform over `0..=floor(n_mels * max_mask_ratio)`, then start uniform
/// over `0..=n_mels - width`.
pub fn sample_frequency_span(n_mels: usize, max_mask_ratio: f64, rng: &mut RandomStream) -> MaskSpan {
    let max_width = ((n_mels as f64 * max_mask_ratio).floor() as usize).min(n_mels);
    let width = rng.uniform_int(0, max_width);
    let start = rng.uniform_int(0, n_mels - width);
    MaskSpan { start, width }
}

/// Width uniform over `time_mask_range`, both ends capped at `n_frames`, then
/// start uniform over `0..=n_frames - width`.
pub fn sample_time_span(n_frames: usize, time_mask_range: (usize, usize), rng: &mut RandomStream) -> MaskSpan {
    let hi = time_mask_range.1.min(n_frames);
    let lo = time_mask_range.0.min(hi);
    let width = rng.uniform_int(lo, hi);
    let start = rng.uniform_int(0, n_frames - width);
    MaskSpan { start, width }
}

pub fn apply_frequency_span(spec: &LogMelSpectrogram, span: MaskSpan, fill: f64) -> LogMelSpectrogram {
    let values = spec
        .frames()
        .flat_map(|frame| {
            frame
                .iter()
                .enumerate()
                .map(move |(f, &v)| if span.contains(f) { fill } else { v })
        })
        .collect();
    spec.with_values(values)
}

pub fn apply_time_span(spec: &LogMelSpectrogram, span: MaskSpan, fill: f64) -> LogMelSpectrogram {
    let values = spec
        .frames()
        .enumerate()
        .flat_map(|(t, frame)| {
            let masked = span.contains(t);
            frame.iter().map(move |&v| if masked { fill } else { v })
        })
        .collect();
    spec.with_values(values)
}

/// Replaces a random band of mel bins with the fill value, across all frames.
pub fn frequency_mask(spec: &LogMelSpectrogram, cfg: &MaskConfig, rng: &mut RandomStream) -> Result<LogMelSpectrogram> {
    cfg.validate()?;
    let span = sample_frequency_span(spec.n_mels(), cfg.max_mask_ratio, rng);
    Ok(apply_frequency_span(spec, span, fill_value(spec, cfg.fill_mode)))
}

/// Replaces a random run of frames with the fill value, across all mel bins.
pub fn time_mask(spec: &LogMelSpectrogram, cfg: &MaskConfig, rng: &mut RandomStream) -> Result<LogMelSpectrogram> {
    cfg.validate()?;
    let span = sample_time_span(spec.n_frames(), cfg.time_mask_range, rng);
    Ok(apply_time_span(spec, span, fill_value(spec, cfg.fill_mode)))
}
