//! HTK-scale triangular mel filterbank.
//!
//! Filters have unit peak (no area normalization), so a flat power spectrum
//! of 1.0 under a filter's peak maps to 0 dB.

use crate::error::{Error, Result};

/// HTK mel scale: `2595 * log10(1 + hz / 700)`.
pub fn hz_to_mel(hz: f64) -> f64 {
    2595.0 * (1.0 + hz / 700.0).log10()
}

pub fn mel_to_hz(mel: f64) -> f64 {
    700.0 * (10f64.powf(mel / 2595.0) - 1.0)
}

/// `n_mels x n_bins` filter matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct MelFilterbank {
    weights: Vec<f64>,
    n_mels: usize,
    n_bins: usize,
    /// `n_mels + 2` corner frequencies in Hz; filter `m` rises over
    /// `[corners[m], corners[m+1]]` and falls over `[corners[m+1], corners[m+2]]`.
    corners: Vec<f64>,
}

impl MelFilterbank {
    pub fn new(sample_rate: u32, n_fft: usize, n_mels: usize, f_min: f64, f_max: f64) -> Result<Self> {
        let nyquist = f64::from(sample_rate) / 2.0;
        if n_mels == 0 {
            return Err(Error::InvalidConfig("n_mels must be at least 1".into()));
        }
        if n_fft == 0 {
            return Err(Error::InvalidConfig("n_fft must be at least 1".into()));
        }
        if !(0.0 <= f_min && f_min < f_max && f_max <= nyquist) {
            return Err(Error::InvalidConfig(format!(
                "need 0 <= f_min < f_max <= {nyquist} Hz, got f_min={f_min} f_max={f_max}"
            )));
        }

        let n_bins = n_fft / 2 + 1;
        let (mel_lo, mel_hi) = (hz_to_mel(f_min), hz_to_mel(f_max));
        let mut corners: Vec<f64> = (0..n_mels + 2)
            .map(|i| mel_to_hz(mel_lo + (mel_hi - mel_lo) * i as f64 / (n_mels + 1) as f64))
            .collect();
        corners[0] = f_min;
        corners[n_mels + 1] = f_max;
        let bin_hz = f64::from(sample_rate) / n_fft as f64;

        let mut weights = vec![0.0; n_mels * n_bins];
        for (m, row) in weights.chunks_exact_mut(n_bins).enumerate() {
            let (lo, center, hi) = (corners[m], corners[m + 1], corners[m + 2]);
            for (k, w) in row.iter_mut().enumerate() {
                let f = k as f64 * bin_hz;
                let rising = (f - lo) / (center - lo);
                let falling = (hi - f) / (hi - center);
                *w = rising.min(falling).max(0.0);
            }
            if row.iter().all(|&w| w == 0.0) {
                return Err(Error::EmptyMelFilter { index: m });
            }
        }

        Ok(Self {
            weights,
            n_mels,
            n_bins,
            corners,
        })
    }

    pub fn n_mels(&self) -> usize {
        self.n_mels
    }

    pub fn n_bins(&self) -> usize {
        self.n_bins
    }

    pub fn row(&self, m: usize) -> &[f64] {
        &self.weights[m * self.n_bins..(m + 1) * self.n_bins]
    }

    pub fn center_hz(&self, m: usize) -> f64 {
        self.corners[m + 1]
    }

    pub fn centers_hz(&self) -> Vec<f64> {
        (0..self.n_mels).map(|m| self.center_hz(m)).collect()
    }

    /// Lower and upper edge of filter `m` in Hz.
    pub fn support_hz(&self, m: usize) -> (f64, f64) {
        (self.corners[m], self.corners[m + 2])
    }

    /// Mel bin whose center frequency is closest to `hz`.
    pub fn nearest_bin(&self, hz: f64) -> usize {
        (0..self.n_mels)
            .min_by(|&a, &b| {
                let da = (self.center_hz(a) - hz).abs();
                let db = (self.center_hz(b) - hz).abs();
                da.total_cmp(&db)
            })
            .unwrap_or(0)
    }
}
