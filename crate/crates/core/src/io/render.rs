//! PNG rendering of spectrograms and filter curves.

use std::path::Path;
use std::str::FromStr;

use image::{ImageFormat, Rgb, RgbImage};
use serde::{Deserialize, Serialize};

use crate::augment::FilterCurve;
use crate::error::{Error, Result};
use crate::spectro::LogMelSpectrogram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colormap {
    Grayscale,
    Viridis,
}

impl FromStr for Colormap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grayscale" | "gray" => Ok(Self::Grayscale),
            "viridis" => Ok(Self::Viridis),
            other => Err(Error::InvalidConfig(format!("unknown colormap {other:?}"))),
        }
    }
}

// Nine evenly spaced samples of matplotlib's viridis.
const VIRIDIS: [[u8; 3]; 9] = [
    [68, 1, 84],
    [71, 44, 122],
    [59, 81, 139],
    [44, 113, 142],
    [33, 144, 141],
    [39, 173, 129],
    [92, 200, 99],
    [170, 220, 50],
    [253, 231, 37],
];

impl Colormap {
    /// Color for an intensity in `[0, 1]`.
    pub fn color(self, intensity: f64) -> Rgb<u8> {
        let x = intensity.clamp(0.0, 1.0);
        match self {
            Colormap::Grayscale => {
                let g = (x * 255.0).round() as u8;
                Rgb([g, g, g])
            }
            Colormap::Viridis => {
                let pos = x * (VIRIDIS.len() - 1) as f64;
                let i = (pos.floor() as usize).min(VIRIDIS.len() - 2);
                let frac = pos - i as f64;
                let (a, b) = (VIRIDIS[i], VIRIDIS[i + 1]);
                Rgb(std::array::from_fn(|c| {
                    (f64::from(a[c]) + (f64::from(b[c]) - f64::from(a[c])) * frac).round() as u8
                }))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RenderSpec {
    pub colormap: Colormap,
    /// Values at or below `.0` map to the darkest color, at or above `.1` to the brightest.
    pub db_display_range: (f64, f64),
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            colormap: Colormap::Viridis,
            db_display_range: (-80.0, 0.0),
        }
    }
}

impl RenderSpec {
    /// Display window of `span` dB ending at the spectrogram's maximum.
    pub fn auto_range(colormap: Colormap, spec: &LogMelSpectrogram, span: f64) -> Self {
        let hi = spec.values().iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        Self {
            colormap,
            db_display_range: (hi - span, hi),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.db_display_range;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidConfig(format!("display range needs lo < hi, got ({lo}, {hi})")));
        }
        Ok(())
    }
}

/// `n_frames x n_mels` image, time on x, low frequencies at the bottom.
pub fn spectrogram_image(spec: &LogMelSpectrogram, render: &RenderSpec) -> Result<RgbImage> {
    render.validate()?;
    let (lo, hi) = render.db_display_range;
    let (w, h) = (spec.n_frames() as u32, spec.n_mels() as u32);
    Ok(RgbImage::from_fn(w, h, |x, y| {
        let v = spec.get(x as usize, (h - 1 - y) as usize);
        render.colormap.color((v - lo) / (hi - lo))
    }))
}

pub const CURVE_HEIGHT: u32 = 161;
const BACKGROUND: Rgb<u8> = Rgb([255, 255, 255]);
const AXIS: Rgb<u8> = Rgb([200, 200, 200]);
pub const LINE: Rgb<u8> = Rgb([0, 0, 0]);

/// Line plot of dB weight against mel bin, one pixel column per bin.
///
/// The vertical axis is symmetric around 0 dB, spanning the largest absolute
/// weight rounded up to a whole dB (at least 1 dB). Consecutive bins are
/// joined by a vertical run in the later bin's column, so a step between
/// bins `b - 1` and `b` shows up as a jump at `x = b`.
pub fn curve_image(weights_db: &[f64]) -> Result<RgbImage> {
    if weights_db.is_empty() {
        return Err(Error::InvalidConfig("cannot render an empty curve".into()));
    }
    if weights_db.iter().any(|w| !w.is_finite()) {
        return Err(Error::InvalidConfig("curve contains non-finite weights".into()));
    }
    let extent = weights_db.iter().fold(0.0_f64, |m, w| m.max(w.abs())).ceil().max(1.0);
    let rows = f64::from(CURVE_HEIGHT - 1);
    let to_y = |w: f64| ((extent - w) / (2.0 * extent) * rows).round() as u32;

    let mut img = RgbImage::from_pixel(weights_db.len() as u32, CURVE_HEIGHT, BACKGROUND);
    let zero = to_y(0.0);
    for x in 0..img.width() {
        img.put_pixel(x, zero, AXIS);
    }
    let mut prev = None;
    for (x, &w) in weights_db.iter().enumerate() {
        let y = to_y(w);
        let (a, b) = match prev {
            Some(p) => (y.min(p), y.max(p)),
            None => (y, y),
        };
        for yy in a..=b {
            img.put_pixel(x as u32, yy, LINE);
        }
        prev = Some(y);
    }
    Ok(img)
}

fn save_png(img: &RgbImage, path: &Path) -> Result<()> {
    img.save_with_format(path, ImageFormat::Png)?;
    Ok(())
}

pub fn render_spectrogram(spec: &LogMelSpectrogram, render: &RenderSpec, path: impl AsRef<Path>) -> Result<()> {
    save_png(&spectrogram_image(spec, render)?, path.as_ref())
}

pub fn render_curve(curve: &FilterCurve, path: impl AsRef<Path>) -> Result<()> {
    render_curve_weights(&curve.weights_db, path)
}

pub fn render_curve_weights(weights_db: &[f64], path: impl AsRef<Path>) -> Result<()> {
    save_png(&curve_image(weights_db)?, path.as_ref())
}
