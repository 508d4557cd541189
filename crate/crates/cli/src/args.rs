use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "filteraug", version, about = "Log-mel spectrograms, FilterAugment and masking from the command line")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a log-mel spectrogram (LMSP file) from a WAV file.
    Spectrogram(SpectrogramArgs),
    /// Augment one spectrogram (LMSP or WAV input).
    Augment(AugmentCmd),
    /// Augment every file listed in a manifest.
    Batch(BatchCmd),
    /// Render an LMSP spectrogram or a curve CSV to PNG.
    Render(RenderCmd),
}

#[derive(Debug, Args)]
pub struct SpectrogramArgs {
    pub input: PathBuf,
    pub output: PathBuf,
    #[arg(long, default_value_t = 2048)]
    pub n_fft: usize,
    #[arg(long, default_value_t = 256)]
    pub hop_length: usize,
    #[arg(long, default_value_t = 2048)]
    pub win_length: usize,
    #[arg(long, default_value_t = 128)]
    pub n_mels: usize,
    #[arg(long, default_value_t = 0.0)]
    pub f_min: f64,
    #[arg(long, default_value_t = 8000.0)]
    pub f_max: f64,
    #[arg(long, default_value_t = -100.0, allow_negative_numbers = true)]
    pub db_floor: f64,
}

/// Augmentation selection shared by `augment` and `batch`.
#[derive(Debug, Args, Default)]
pub struct AugmentArgs {
    /// sed-step, sed-linear, sed-mixed, sv-linear or freq-mask.
    #[arg(long)]
    pub preset: Option<String>,
    /// step, linear or mixed.
    #[arg(long)]
    pub filter_type: Option<String>,
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], allow_negative_numbers = true)]
    pub db_range: Option<Vec<f64>>,
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"])]
    pub band_range: Option<Vec<usize>>,
    #[arg(long, value_name = "N")]
    pub min_bandwidth: Option<usize>,
    #[arg(long, value_name = "R")]
    pub mix_ratio: Option<f64>,
    /// Enables frequency masking with this maximum masked fraction of mel bins.
    #[arg(long, value_name = "R")]
    pub freq_mask_ratio: Option<f64>,
    /// Enables time masking with a width drawn from MIN..=MAX frames.
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"])]
    pub time_mask_range: Option<Vec<usize>>,
    /// Constant mask fill in dB (default: mean of the spectrogram).
    #[arg(long, value_name = "DB", allow_negative_numbers = true)]
    pub mask_fill_db: Option<f64>,
    /// Print the resolved configuration as JSON and exit.
    #[arg(long)]
    pub print_config: bool,
}

#[derive(Debug, Args)]
pub struct AugmentCmd {
    #[arg(required_unless_present = "print_config")]
    pub input: Option<PathBuf>,
    #[arg(required_unless_present = "print_config")]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub augment: AugmentArgs,
    #[arg(long, env = "FILTERAUG_SEED", default_value_t = filteraug::rng::DEFAULT_SEED)]
    pub seed: u64,
    /// Write the applied filter curve as CSV.
    #[arg(long, value_name = "PATH")]
    pub emit_curve: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub before_png: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub after_png: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BatchCmd {
    /// Newline-separated input paths; relative paths resolve against the manifest's directory.
    #[arg(required_unless_present = "print_config")]
    pub manifest: Option<PathBuf>,
    #[arg(required_unless_present = "print_config")]
    pub out_dir: Option<PathBuf>,
    #[command(flatten)]
    pub augment: AugmentArgs,
    #[arg(long, env = "FILTERAUG_SEED", default_value_t = filteraug::rng::DEFAULT_SEED)]
    pub master_seed: u64,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Also write each item's filter curve CSV next to its output.
    #[arg(long)]
    pub emit_curves: bool,
}

#[derive(Debug, Args)]
pub struct RenderCmd {
    /// LMSP spectrogram, or a `.csv` filter curve.
    pub input: PathBuf,
    pub output: PathBuf,
    /// grayscale or viridis.
    #[arg(long, default_value = "viridis")]
    pub colormap: String,
    /// Fixed display window in dB (default: -80 0).
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true, conflicts_with = "auto_range")]
    pub display_range: Option<Vec<f64>>,
    /// Display window of this many dB ending at the spectrogram's maximum.
    #[arg(long, value_name = "DB")]
    pub auto_range: Option<f64>,
}
