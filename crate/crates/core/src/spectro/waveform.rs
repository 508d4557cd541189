use crate::error::{Error, Result};

/// Mono audio buffer. Samples are nominally in `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Waveform {
    pub samples: Vec<f64>,
    pub sample_rate: u32,
}

impl Waveform {
    pub fn new(samples: Vec<f64>, sample_rate: u32) -> Result<Self> {
        if sample_rate == 0 {
            return Err(Error::InvalidConfig("sample rate must be positive".into()));
        }
        Ok(Self {
            samples,
            sample_rate,
        })
    }

    /// Mono downmix of interleaved multi-channel samples by per-frame channel mean.
    pub fn from_interleaved(interleaved: &[f64], channels: usize, sample_rate: u32) -> Result<Self> {
        if channels == 0 {
            return Err(Error::InvalidConfig("channel count must be positive".into()));
        }
        let samples = interleaved
            .chunks_exact(channels)
            .map(|frame| frame.iter().sum::<f64>() / channels as f64)
            .collect();
        Self::new(samples, sample_rate)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_secs(&self) -> f64 {
        self.samples.len() as f64 / f64::from(self.sample_rate)
    }

    pub fn peak(&self) -> f64 {
        self.samples.iter().fold(0.0_f64, |m, s| m.max(s.abs()))
    }
}

/// Scales the waveform so that its absolute maximum is exactly one.
///
/// Silent (all-zero) input is returned unchanged.
pub fn normalize_peak(w: &Waveform) -> Waveform {
    let peak = w.peak();
    if peak == 0.0 {
        return w.clone();
    }
    Waveform {
        samples: w.samples.iter().map(|s| s / peak).collect(),
        sample_rate: w.sample_rate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn scales_to_unit_peak() {
        let w = Waveform::new(vec![0.25, -0.5], 16000).unwrap();
        assert_eq!(normalize_peak(&w).samples, vec![0.5, -1.0]);
    }

    #[test]
    fn silence_passes_through() {
        let w = Waveform::new(vec![0.0; 3], 16000).unwrap();
        assert_eq!(normalize_peak(&w), w);
    }

    #[test]
    fn noise_clip_peak_is_one() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let samples: Vec<f64> = (0..16000).map(|_| rng.gen_range(-0.3..0.3)).collect();
        let out = normalize_peak(&Waveform::new(samples, 16000).unwrap());
        let peak = out.samples.iter().fold(0.0_f64, |m, s| m.max(s.abs()));
        assert!((peak - 1.0).abs() <= f64::EPSILON);
    }

    #[test]
    fn downmix_averages_channels() {
        let w = Waveform::from_interleaved(&[1.0, 0.0, -0.5, 0.5], 2, 8000).unwrap();
        assert_eq!(w.samples, vec![0.5, 0.0]);
    }

    #[test]
    fn zero_sample_rate_rejected() {
        assert!(Waveform::new(vec![0.0], 0).is_err());
    }
}
