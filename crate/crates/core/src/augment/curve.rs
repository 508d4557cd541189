use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectro::LogMelSpectrogram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveShape {
    Step,
    Linear,
}

/// One realized random filter: a dB offset per mel bin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FilterCurve {
    pub shape: CurveShape,
    pub weights_db: Vec<f64>,
    pub boundaries: Vec<usize>,
    /// Per-band weights (step) or per-boundary weights (linear).
    pub boundary_weights: Vec<f64>,
}

impl FilterCurve {
    pub fn n_mels(&self) -> usize {
        self.weights_db.len()
    }

    pub fn n_bands(&self) -> usize {
        self.boundaries.len().saturating_sub(1)
    }
}

fn check_boundaries(boundaries: &[usize], n_mels: usize) -> Result<()> {
    let valid = boundaries.len() >= 2
        && boundaries[0] == 0
        && boundaries[boundaries.len() - 1] == n_mels
        && boundaries.windows(2).all(|p| p[0] < p[1]);
    if valid {
        Ok(())
    } else {
        Err(Error::InvalidConfig(format!(
            "boundaries must rise strictly from 0 to {n_mels}, got {boundaries:?}"
        )))
    }
}

/// Piecewise-constant curve: bins in `[b_i, b_{i+1})` get `weights[i]`.
pub fn build_step_curve(boundaries: &[usize], weights: &[f64], n_mels: usize) -> Result<FilterCurve> {
    if weights.len() + 1 != boundaries.len() {
        return Err(Error::ShapeMismatch {
            expected: boundaries.len().saturating_sub(1),
            actual: weights.len(),
        });
    }
    check_boundaries(boundaries, n_mels)?;

    let mut weights_db = Vec::with_capacity(n_mels);
    for (band, &w) in boundaries.windows(2).zip(weights) {
        weights_db.extend(std::iter::repeat_n(w, band[1] - band[0]));
    }
    Ok(FilterCurve {
        shape: CurveShape::Step,
        weights_db,
        boundaries: boundaries.to_vec(),
        boundary_weights: weights.to_vec(),
    })
}

/// Piecewise-linear curve through the knots `(b_i, weights[i])`, evaluated at
/// bins `0..n_mels`. The last knot sits at `n_mels`, one past the final bin.
///
/// Each value is clamped to its segment's endpoint range, so the curve never
/// leaves the range spanned by the knot weights even under rounding.
pub fn build_linear_curve(boundaries: &[usize], weights: &[f64], n_mels: usize) -> Result<FilterCurve> {
    if weights.len() != boundaries.len() {
        return Err(Error::ShapeMismatch {
            expected: boundaries.len(),
            actual: weights.len(),
        });
    }
    check_boundaries(boundaries, n_mels)?;

    let mut weights_db = Vec::with_capacity(n_mels);
    for (band, w) in boundaries.windows(2).zip(weights.windows(2)) {
        let (start, end) = (band[0], band[1]);
        let (w0, w1) = (w[0], w[1]);
        let (lo, hi) = (w0.min(w1), w0.max(w1));
        let width = (end - start) as f64;
        weights_db.extend((start..end).map(|f| {
            let t = (f - start) as f64 / width;
            (w0 + (w1 - w0) * t).clamp(lo, hi)
        }));
    }
    Ok(FilterCurve {
        shape: CurveShape::Linear,
        weights_db,
        boundaries: boundaries.to_vec(),
        boundary_weights: weights.to_vec(),
    })
}

/// Adds `weights_db[f]` to every frame's bin `f`. Values are not re-floored.
pub fn apply_weights(spec: &LogMelSpectrogram, weights_db: &[f64]) -> Result<LogMelSpectrogram> {
    if weights_db.len() != spec.n_mels() {
        return Err(Error::ShapeMismatch {
            expected: spec.n_mels(),
            actual: weights_db.len(),
        });
    }
    let values = spec
        .frames()
        .flat_map(|frame| frame.iter().zip(weights_db).map(|(v, w)| v + w))
        .collect();
    Ok(spec.with_values(values))
}

pub fn apply_curve(spec: &LogMelSpectrogram, curve: &FilterCurve) -> Result<LogMelSpectrogram> {
    apply_weights(spec, &curve.weights_db)
}
