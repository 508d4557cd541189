//! Waveform to log-mel spectrogram pipeline.
//!
//! `samples -> normalize_peak -> stft_power -> mel filterbank -> 10*log10, floored`.
//! Frames are not centered: frame `t` starts at sample `t * hop_length`.

mod mel;
mod stft;
mod waveform;

use serde::{Deserialize, Serialize};

pub use mel::{hz_to_mel, mel_to_hz, MelFilterbank};
pub use stft::{stft_power, PowerSpectrogram, StftConfig, WindowKind};
pub use waveform::{normalize_peak, Waveform};

use crate::error::{Error, Result};

pub const DEFAULT_DB_FLOOR: f64 = -100.0;

/// Time-major `n_frames x n_mels` matrix of dB values.
#[derive(Debug, Clone, PartialEq)]
pub struct LogMelSpectrogram {
    values: Vec<f64>,
    n_frames: usize,
    n_mels: usize,
    pub sample_rate: u32,
    pub hop_length: u32,
}

impl LogMelSpectrogram {
    pub fn new(values: Vec<f64>, n_frames: usize, n_mels: usize, sample_rate: u32, hop_length: u32) -> Result<Self> {
        if n_frames == 0 || n_mels == 0 {
            return Err(Error::InvalidConfig(format!(
                "spectrogram dimensions must be positive, got {n_frames} x {n_mels}"
            )));
        }
        if values.len() != n_frames * n_mels {
            return Err(Error::ShapeMismatch {
                expected: n_frames * n_mels,
                actual: values.len(),
            });
        }
        Ok(Self {
            values,
            n_frames,
            n_mels,
            sample_rate,
            hop_length,
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn n_frames(&self) -> usize {
        self.n_frames
    }

    pub fn n_mels(&self) -> usize {
        self.n_mels
    }

    pub fn get(&self, t: usize, f: usize) -> f64 {
        self.values[t * self.n_mels + f]
    }

    pub fn frame(&self, t: usize) -> &[f64] {
        &self.values[t * self.n_mels..(t + 1) * self.n_mels]
    }

    pub fn frames(&self) -> std::slice::ChunksExact<'_, f64> {
        self.values.chunks_exact(self.n_mels)
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Same geometry and metadata, new values.
    pub(crate) fn with_values(&self, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), self.values.len());
        Self {
            values,
            ..self.clone()
        }
    }
}

/// `max(10 * log10(fb . power_frame), db_floor)` for every frame and mel bin.
pub fn log_mel(power: &PowerSpectrogram, fb: &MelFilterbank, db_floor: f64) -> Result<Vec<f64>> {
    if power.n_bins != fb.n_bins() {
        return Err(Error::ShapeMismatch {
            expected: fb.n_bins(),
            actual: power.n_bins,
        });
    }
    let mut out = Vec::with_capacity(power.n_frames * fb.n_mels());
    for t in 0..power.n_frames {
        let frame = power.frame(t);
        for m in 0..fb.n_mels() {
            let mel_power: f64 = fb.row(m).iter().zip(frame).map(|(w, p)| w * p).sum();
            out.push((10.0 * mel_power.log10()).max(db_floor));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrogramConfig {
    pub stft: StftConfig,
    pub n_mels: usize,
    pub f_min: f64,
    pub f_max: f64,
    pub db_floor: f64,
}

impl Default for SpectrogramConfig {
    fn default() -> Self {
        Self {
            stft: StftConfig::default(),
            n_mels: 128,
            f_min: 0.0,
            f_max: 8000.0,
            db_floor: DEFAULT_DB_FLOOR,
        }
    }
}

impl SpectrogramConfig {
    pub fn filterbank(&self, sample_rate: u32) -> Result<MelFilterbank> {
        MelFilterbank::new(sample_rate, self.stft.n_fft, self.n_mels, self.f_min, self.f_max)
    }
}

/// Peak-normalizes `w` and computes its log-mel spectrogram.
pub fn compute_log_mel(w: &Waveform, cfg: &SpectrogramConfig) -> Result<LogMelSpectrogram> {
    let fb = cfg.filterbank(w.sample_rate)?;
    let power = stft_power(&normalize_peak(w), &cfg.stft)?;
    let values = log_mel(&power, &fb, cfg.db_floor)?;
    let hop = u32::try_from(cfg.stft.hop_length)
        .map_err(|_| Error::InvalidConfig("hop length does not fit in 32 bits".into()))?;
    LogMelSpectrogram::new(values, power.n_frames, cfg.n_mels, w.sample_rate, hop)
}
