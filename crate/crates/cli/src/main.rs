//! `filteraug` command-line front end.
//!
//! Exit codes: 0 success, 1 partial batch failure, 2 invalid input or configuration.

mod args;
mod batch;
mod plan;

use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;
use filteraug::io::{
    read_curve_csv, read_spectrogram, read_wav, render_curve_weights, render_spectrogram, write_curve_csv,
    write_spectrogram, Colormap, RenderSpec,
};
use filteraug::spectro::{compute_log_mel, SpectrogramConfig, StftConfig, WindowKind};
use filteraug::RandomStream;

use crate::args::{AugmentCmd, Cli, Command, RenderCmd, SpectrogramArgs};
use crate::plan::{load_spectrogram, Plan};

pub const EXIT_PARTIAL: u8 = 1;
pub const EXIT_INVALID: u8 = 2;

const AUTO_RANGE_DB: f64 = 80.0;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Spectrogram(a) => cmd_spectrogram(&a).map(|()| ExitCode::SUCCESS),
        Command::Augment(a) => cmd_augment(&a).map(|()| ExitCode::SUCCESS),
        Command::Batch(a) => batch::cmd_batch(&a),
        Command::Render(a) => cmd_render(&a).map(|()| ExitCode::SUCCESS),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(EXIT_INVALID)
    })
}

fn cmd_spectrogram(a: &SpectrogramArgs) -> Result<()> {
    let cfg = SpectrogramConfig {
        stft: StftConfig {
            n_fft: a.n_fft,
            hop_length: a.hop_length,
            win_length: a.win_length,
            window: WindowKind::Hann,
        },
        n_mels: a.n_mels,
        f_min: a.f_min,
        f_max: a.f_max,
        db_floor: a.db_floor,
    };
    let wav = read_wav(&a.input).with_context(|| format!("cannot read WAV {}", a.input.display()))?;
    let spec = compute_log_mel(&wav, &cfg).with_context(|| a.input.display().to_string())?;
    write_spectrogram(&spec, &a.output)?;
    Ok(())
}

fn cmd_augment(a: &AugmentCmd) -> Result<()> {
    let plan = Plan::from_args(&a.augment)?;
    if a.augment.print_config {
        println!("{}", serde_json::to_string_pretty(&plan.to_json())?);
        return Ok(());
    }
    let (input, output) = match (&a.input, &a.output) {
        (Some(i), Some(o)) => (i, o),
        _ => bail!("input and output paths are required"),
    };
    let spec = load_spectrogram(input)?;
    let (out, curve) = plan
        .apply(&spec, &mut RandomStream::new(a.seed))
        .with_context(|| input.display().to_string())?;
    write_spectrogram(&out, output)?;

    if let Some(path) = &a.emit_curve {
        match &curve {
            Some(c) => write_curve_csv(&c.weights_db, path)?,
            None => bail!("--emit-curve needs a FilterAugment configuration"),
        }
    }
    // Both images share the input's window so they stay comparable.
    let render = RenderSpec::auto_range(Colormap::Viridis, &spec, AUTO_RANGE_DB);
    if let Some(path) = &a.before_png {
        render_spectrogram(&spec, &render, path)?;
    }
    if let Some(path) = &a.after_png {
        render_spectrogram(&out, &render, path)?;
    }
    Ok(())
}

fn is_csv(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"))
}

fn cmd_render(a: &RenderCmd) -> Result<()> {
    if is_csv(&a.input) {
        let weights = read_curve_csv(&a.input)?;
        render_curve_weights(&weights, &a.output)?;
        return Ok(());
    }
    let colormap: Colormap = a.colormap.parse()?;
    let spec = read_spectrogram(&a.input)?;
    let mut render = match a.auto_range {
        Some(span) => RenderSpec::auto_range(colormap, &spec, span),
        None => RenderSpec {
            colormap,
            ..RenderSpec::default()
        },
    };
    if let Some(r) = &a.display_range {
        render.db_display_range = (r[0], r[1]);
    }
    render_spectrogram(&spec, &render, &a.output)?;
    Ok(())
}
