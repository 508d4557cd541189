//! Named hyperparameter sets tuned for sound event detection (`sed-*`) and
//! speaker verification (`sv-*`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::augment::{AugmentConfig, BandParams, FilterType, MaskConfig};
use crate::error::{Error, Result};

pub const SED_STEP: BandParams = BandParams {
    db_range: (-6.0, 6.0),
    band_number_range: (2, 5),
    min_bandwidth: 4,
};

pub const SED_LINEAR: BandParams = BandParams {
    db_range: (-6.0, 6.0),
    band_number_range: (3, 6),
    min_bandwidth: 6,
};

/// Speaker-verification recordings vary little acoustically, so only the dB
/// range is narrowed.
pub const SV_LINEAR: BandParams = BandParams {
    db_range: (-1.5, 1.5),
    ..SED_LINEAR
};

pub const SED_MIX_RATIO: f64 = 0.9;

pub const FREQ_MASK_RATIO: f64 = 1.0 / 16.0;

pub const TIME_MASK_RANGE: (usize, usize) = (7, 30);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    SedStep,
    SedLinear,
    SedMixed,
    SvLinear,
    FreqMask,
}

impl Preset {
    pub const ALL: [Preset; 5] = [
        Preset::SedStep,
        Preset::SedLinear,
        Preset::SedMixed,
        Preset::SvLinear,
        Preset::FreqMask,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::SedStep => "sed-step",
            Preset::SedLinear => "sed-linear",
            Preset::SedMixed => "sed-mixed",
            Preset::SvLinear => "sv-linear",
            Preset::FreqMask => "freq-mask",
        }
    }

    /// FilterAugment settings, or `None` for masking-only presets.
    pub fn augment_config(self) -> Option<AugmentConfig> {
        let cfg = |filter_type, step, linear| AugmentConfig {
            filter_type,
            step,
            linear,
            mix_ratio: SED_MIX_RATIO,
        };
        match self {
            Preset::SedStep => Some(cfg(FilterType::Step, SED_STEP, SED_LINEAR)),
            Preset::SedLinear => Some(cfg(FilterType::Linear, SED_STEP, SED_LINEAR)),
            Preset::SedMixed => Some(cfg(FilterType::Mixed, SED_STEP, SED_LINEAR)),
            Preset::SvLinear => Some(cfg(
                FilterType::Linear,
                BandParams {
                    db_range: SV_LINEAR.db_range,
                    ..SED_STEP
                },
                SV_LINEAR,
            )),
            Preset::FreqMask => None,
        }
    }

    /// Frequency-masking settings, or `None` for FilterAugment presets.
    pub fn frequency_mask_config(self) -> Option<MaskConfig> {
        match self {
            Preset::FreqMask => Some(MaskConfig {
                max_mask_ratio: FREQ_MASK_RATIO,
                ..MaskConfig::default()
            }),
            _ => None,
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown preset {s:?}")))
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
