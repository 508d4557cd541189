use std::f64::consts::PI;

use rustfft::{num_complex::Complex, FftPlanner};
use serde::{Deserialize, Serialize};

use super::Waveform;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WindowKind {
    /// Periodic Hann window.
    Hann,
    Rectangular,
}

impl WindowKind {
    pub fn coefficients(self, len: usize) -> Vec<f64> {
        match self {
            WindowKind::Hann => (0..len)
                .map(|i| 0.5 - 0.5 * (2.0 * PI * i as f64 / len as f64).cos())
                .collect(),
            WindowKind::Rectangular => vec![1.0; len],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StftConfig {
    pub n_fft: usize,
    pub hop_length: usize,
    pub win_length: usize,
    pub window: WindowKind,
}

impl Default for StftConfig {
    fn default() -> Self {
        Self {
            n_fft: 2048,
            hop_length: 256,
            win_length: 2048,
            window: WindowKind::Hann,
        }
    }
}

impl StftConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.n_fft >= self.win_length && self.win_length >= self.hop_length && self.hop_length >= 1) {
            return Err(Error::InvalidConfig(format!(
                "need n_fft >= win_length >= hop_length >= 1, got n_fft={} win_length={} hop_length={}",
                self.n_fft, self.win_length, self.hop_length
            )));
        }
        Ok(())
    }

    pub fn n_bins(&self) -> usize {
        self.n_fft / 2 + 1
    }

    /// Frames produced for `len` samples: `1 + (len - win_length) / hop_length`,
    /// or zero when the signal is shorter than one window. No centering.
    pub fn n_frames(&self, len: usize) -> usize {
        if len < self.win_length {
            0
        } else {
            1 + (len - self.win_length) / self.hop_length
        }
    }
}

/// Time-major `n_frames x n_bins` matrix of STFT power.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSpectrogram {
    pub values: Vec<f64>,
    pub n_frames: usize,
    pub n_bins: usize,
}

impl PowerSpectrogram {
    pub fn frame(&self, t: usize) -> &[f64] {
        &self.values[t * self.n_bins..(t + 1) * self.n_bins]
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            values: self.values.iter().map(|v| v * c).collect(),
            ..self.clone()
        }
    }
}

/// Squared magnitude of the one-sided DFT of each windowed frame.
///
/// Frame `t` covers samples `[t * hop, t * hop + win_length)`, is multiplied
/// by the window and zero-padded at the end to `n_fft`.
pub fn stft_power(w: &Waveform, cfg: &StftConfig) -> Result<PowerSpectrogram> {
    cfg.validate()?;
    if w.len() < cfg.win_length {
        return Err(Error::InputTooShort {
            len: w.len(),
            needed: cfg.win_length,
        });
    }
    let n_frames = cfg.n_frames(w.len());
    let n_bins = cfg.n_bins();
    let window = cfg.window.coefficients(cfg.win_length);
    let fft = FftPlanner::<f64>::new().plan_fft_forward(cfg.n_fft);

    let mut values = Vec::with_capacity(n_frames * n_bins);
    let mut buf = vec![Complex::new(0.0, 0.0); cfg.n_fft];
    let mut scratch = vec![Complex::new(0.0, 0.0); fft.get_inplace_scratch_len()];
    for t in 0..n_frames {
        let start = t * cfg.hop_length;
        let frame = &w.samples[start..start + cfg.win_length];
        for (slot, (s, win)) in buf.iter_mut().zip(frame.iter().zip(&window)) {
            *slot = Complex::new(s * win, 0.0);
        }
        buf[cfg.win_length..].fill(Complex::new(0.0, 0.0));
        fft.process_with_scratch(&mut buf, &mut scratch);
        values.extend(buf[..n_bins].iter().map(|c| c.norm_sqr()));
    }
    Ok(PowerSpectrogram {
        values,
        n_frames,
        n_bins,
    })
}
