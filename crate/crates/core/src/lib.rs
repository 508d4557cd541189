//! Log-mel spectrogram augmentation.
//!
//! [`spectro`] turns audio into log-mel spectrograms, [`augment`] implements
//! FilterAugment (step, linear and mixed random filters) alongside frequency
//! and time masking, and [`io`] reads and writes the supporting file formats.
//! Every random draw goes through a seeded [`RandomStream`], so identical
//! inputs, configuration and seed always give bit-identical results.

pub mod array;
pub mod augment;
mod error;
pub mod io;
pub mod preset;
pub mod rng;
pub mod spectro;

pub use augment::{filter_augment, frequency_mask, time_mask, AugmentConfig, FilterCurve, MaskConfig};
pub use error::{Error, Result};
pub use preset::Preset;
pub use rng::RandomStream;
pub use spectro::{LogMelSpectrogram, SpectrogramConfig, Waveform};
