//! Turns command-line flags into a fixed augmentation plan and runs it.

use std::path::Path;

use anyhow::{bail, Context, Result};
use filteraug::augment::{self, AugmentConfig, FillMode, FilterCurve, FilterType, MaskConfig};
use filteraug::io::{decode_spectrogram, decode_wav, is_spectrogram};
use filteraug::preset::{self, Preset};
use filteraug::spectro::{compute_log_mel, SpectrogramConfig};
use filteraug::{LogMelSpectrogram, RandomStream};
use serde_json::json;

use crate::args::AugmentArgs;

/// Applied in order: FilterAugment, frequency mask, time mask. All three
/// draw from one stream.
#[derive(Debug, Clone, PartialEq)]
pub struct Plan {
    pub preset: Option<Preset>,
    pub filter: Option<AugmentConfig>,
    pub freq_mask_ratio: Option<f64>,
    pub time_mask_range: Option<(usize, usize)>,
    pub fill: FillMode,
}

fn pair<T: Copy>(v: &Option<Vec<T>>) -> Option<(T, T)> {
    v.as_ref().map(|v| (v[0], v[1]))
}

fn defaults_for(filter_type: FilterType) -> AugmentConfig {
    let preset = match filter_type {
        FilterType::Step => Preset::SedStep,
        FilterType::Linear => Preset::SedLinear,
        FilterType::Mixed => Preset::SedMixed,
    };
    preset.augment_config().expect("filter presets carry a config")
}

impl Plan {
    pub fn from_args(args: &AugmentArgs) -> Result<Self> {
        let preset = args
            .preset
            .as_deref()
            .map(str::parse::<Preset>)
            .transpose()?;
        let mut filter = preset.and_then(Preset::augment_config);
        let mut freq_mask_ratio = preset
            .and_then(Preset::frequency_mask_config)
            .map(|m| m.max_mask_ratio);

        if let Some(ft) = args.filter_type.as_deref() {
            let ft: FilterType = ft.parse()?;
            match &mut filter {
                Some(cfg) => cfg.filter_type = ft,
                None => filter = Some(defaults_for(ft)),
            }
        }

        let db_range = pair(&args.db_range);
        let band_range = pair(&args.band_range);
        let touches_filter =
            db_range.is_some() || band_range.is_some() || args.min_bandwidth.is_some() || args.mix_ratio.is_some();
        if touches_filter && filter.is_none() {
            filter = Some(defaults_for(FilterType::Linear));
        }
        if let Some(cfg) = &mut filter {
            cfg.update_active(|p| {
                if let Some(r) = db_range {
                    p.db_range = r;
                }
                if let Some(r) = band_range {
                    p.band_number_range = r;
                }
                if let Some(bw) = args.min_bandwidth {
                    p.min_bandwidth = bw;
                }
            });
            if let Some(r) = args.mix_ratio {
                cfg.mix_ratio = r;
            }
            cfg.validate()?;
        }

        if let Some(r) = args.freq_mask_ratio {
            freq_mask_ratio = Some(r);
        }
        let time_mask_range = pair(&args.time_mask_range);
        let fill = args.mask_fill_db.map_or(FillMode::SpectrogramMean, FillMode::Constant);

        let plan = Plan {
            preset,
            filter,
            freq_mask_ratio,
            time_mask_range,
            fill,
        };
        plan.mask_config().validate()?;
        if plan.filter.is_none() && plan.freq_mask_ratio.is_none() && plan.time_mask_range.is_none() {
            bail!("no augmentation selected; pass --preset, --filter-type or a masking flag");
        }
        Ok(plan)
    }

    fn mask_config(&self) -> MaskConfig {
        MaskConfig {
            max_mask_ratio: self.freq_mask_ratio.unwrap_or(preset::FREQ_MASK_RATIO),
            time_mask_range: self.time_mask_range.unwrap_or(preset::TIME_MASK_RANGE),
            fill_mode: self.fill,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "preset": self.preset.map(Preset::name),
            "filter_augment": self.filter,
            "frequency_mask": self.freq_mask_ratio.map(|r| json!({ "max_mask_ratio": r })),
            "time_mask": self.time_mask_range.map(|r| json!({ "time_mask_range": r })),
            "mask_fill": self.fill,
        })
    }

    pub fn apply(
        &self,
        spec: &LogMelSpectrogram,
        rng: &mut RandomStream,
    ) -> filteraug::Result<(LogMelSpectrogram, Option<FilterCurve>)> {
        let mut out = spec.clone();
        let mut curve = None;
        if let Some(cfg) = &self.filter {
            let (s, c) = augment::filter_augment(&out, cfg, rng)?;
            out = s;
            curve = Some(c);
        }
        let masks = self.mask_config();
        if self.freq_mask_ratio.is_some() {
            out = augment::frequency_mask(&out, &masks, rng)?;
        }
        if self.time_mask_range.is_some() {
            out = augment::time_mask(&out, &masks, rng)?;
        }
        Ok((out, curve))
    }
}

/// Reads an LMSP file, or a WAV file converted with the default spectrogram settings.
pub fn load_spectrogram(path: &Path) -> Result<LogMelSpectrogram> {
    let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let spec = if is_spectrogram(&bytes) {
        decode_spectrogram(&bytes)?
    } else {
        let wav = decode_wav(bytes.as_slice()).with_context(|| format!("{} is neither LMSP nor WAV", path.display()))?;
        compute_log_mel(&wav, &SpectrogramConfig::default())?
    };
    Ok(spec)
}
