use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FilterType {
    Step,
    Linear,
    Mixed,
}

impl FromStr for FilterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "step" => Ok(Self::Step),
            "linear" => Ok(Self::Linear),
            "mixed" => Ok(Self::Mixed),
            other => Err(Error::InvalidConfig(format!(
                "unknown filter type {other:?} (expected step, linear or mixed)"
            ))),
        }
    }
}

impl fmt::Display for FilterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Step => "step",
            Self::Linear => "linear",
            Self::Mixed => "mixed",
        })
    }
}

/// Hyperparameters of one filter shape.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BandParams {
    /// Range the per-band (step) or per-boundary (linear) weights are drawn from, in dB.
    pub db_range: (f64, f64),
    /// Inclusive range of the number of frequency bands.
    pub band_number_range: (usize, usize),
    /// Smallest allowed band width in mel bins.
    pub min_bandwidth: usize,
}

impl BandParams {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.db_range;
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(Error::InvalidConfig(format!(
                "dB range must be finite with min <= max, got ({lo}, {hi})"
            )));
        }
        let (n_min, n_max) = self.band_number_range;
        if !(1 <= n_min && n_min <= n_max) {
            return Err(Error::InvalidConfig(format!(
                "band number range must satisfy 1 <= min <= max, got ({n_min}, {n_max})"
            )));
        }
        if self.min_bandwidth < 1 {
            return Err(Error::InvalidConfig("minimum bandwidth must be at least 1".into()));
        }
        Ok(())
    }
}

/// FilterAugment configuration.
///
/// `step` parameters drive the step type, `linear` the linear type; the mixed
/// type uses each set on its own branch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AugmentConfig {
    pub filter_type: FilterType,
    pub step: BandParams,
    pub linear: BandParams,
    /// Probability of taking the step branch for the mixed type.
    pub mix_ratio: f64,
}

impl AugmentConfig {
    pub fn validate(&self) -> Result<()> {
        match self.filter_type {
            FilterType::Step => self.step.validate()?,
            FilterType::Linear => self.linear.validate()?,
            FilterType::Mixed => {
                self.step.validate()?;
                self.linear.validate()?;
            }
        }
        if !(0.0..=1.0).contains(&self.mix_ratio) {
            return Err(Error::InvalidConfig(format!(
                "mix ratio must lie in [0, 1], got {}",
                self.mix_ratio
            )));
        }
        Ok(())
    }

    /// Applies `f` to every parameter set the filter type actually uses.
    pub fn update_active(&mut self, mut f: impl FnMut(&mut BandParams)) {
        match self.filter_type {
            FilterType::Step => f(&mut self.step),
            FilterType::Linear => f(&mut self.linear),
            FilterType::Mixed => {
                f(&mut self.step);
                f(&mut self.linear);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FillMode {
    /// Global mean of the input spectrogram.
    #[default]
    SpectrogramMean,
    Constant(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaskConfig {
    /// Largest masked fraction of the mel bins.
    pub max_mask_ratio: f64,
    /// Inclusive range of masked frame counts.
    pub time_mask_range: (usize, usize),
    pub fill_mode: FillMode,
}

impl Default for MaskConfig {
    fn default() -> Self {
        Self {
            max_mask_ratio: 1.0 / 16.0,
            time_mask_range: (7, 30),
            fill_mode: FillMode::SpectrogramMean,
        }
    }
}

impl MaskConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.max_mask_ratio) {
            return Err(Error::InvalidConfig(format!(
                "maximum masking ratio must lie in [0, 1], got {}",
                self.max_mask_ratio
            )));
        }
        let (t_min, t_max) = self.time_mask_range;
        if t_min > t_max {
            return Err(Error::InvalidConfig(format!(
                "time mask range must satisfy min <= max, got ({t_min}, {t_max})"
            )));
        }
        if let FillMode::Constant(v) = self.fill_mode {
            if !v.is_finite() {
                return Err(Error::InvalidConfig("mask fill value must be finite".into()));
            }
        }
        Ok(())
    }
}
