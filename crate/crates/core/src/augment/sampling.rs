//! Random draws behind one FilterAugment filter: band count, band
//! boundaries and weights. Draw order and counts are part of the
//! reproducibility contract; changing them changes every seeded output.

use super::BandParams;
use crate::error::{Error, Result};
use crate::rng::RandomStream;

/// Number of bands, uniform over `[n_min, min(n_max, n_mels / min_bandwidth)]`.
///
/// When the cap falls below `n_min` the lower end is lowered to the cap too,
/// so narrow spectrograms still get a filter. Only `n_mels < min_bandwidth`
/// is an error.
pub fn sample_band_count(params: &BandParams, n_mels: usize, rng: &mut RandomStream) -> Result<usize> {
    let cap = n_mels / params.min_bandwidth.max(1);
    if cap < 1 {
        return Err(Error::SpectrogramTooNarrow {
            n_mels,
            min_bandwidth: params.min_bandwidth,
        });
    }
    let (n_min, n_max) = params.band_number_range;
    let hi = n_max.min(cap);
    let lo = n_min.min(hi);
    Ok(rng.uniform_int(lo, hi))
}

/// Band edges `0 = b_0 < b_1 < ... < b_n = n_mels` with every gap at least
/// `min_bandwidth`.
///
/// Draws `n - 1` integers uniformly (with replacement) from
/// `[0, n_mels - n * min_bandwidth]`, sorts them, and shifts the i-th by
/// `i * min_bandwidth`. Every feasible layout is reachable and no draw is
/// ever rejected.
pub fn sample_boundaries(n: usize, n_mels: usize, min_bandwidth: usize, rng: &mut RandomStream) -> Result<Vec<usize>> {
    let infeasible = || Error::InfeasibleBoundaries {
        bands: n,
        min_bandwidth,
        n_mels,
    };
    if n == 0 || min_bandwidth == 0 {
        return Err(infeasible());
    }
    let slack = n
        .checked_mul(min_bandwidth)
        .and_then(|used| n_mels.checked_sub(used))
        .ok_or_else(infeasible)?;

    let mut offsets: Vec<usize> = (1..n).map(|_| rng.uniform_int(0, slack)).collect();
    offsets.sort_unstable();

    let mut boundaries = Vec::with_capacity(n + 1);
    boundaries.push(0);
    boundaries.extend(offsets.iter().enumerate().map(|(i, u)| u + (i + 1) * min_bandwidth));
    boundaries.push(n_mels);
    Ok(boundaries)
}

/// `count` independent weights, uniform over `db_range`.
pub fn sample_weights(count: usize, db_range: (f64, f64), rng: &mut RandomStream) -> Vec<f64> {
    (0..count).map(|_| rng.uniform_real(db_range.0, db_range.1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn params(range: (usize, usize), min_bandwidth: usize) -> BandParams {
        BandParams {
            db_range: (-6.0, 6.0),
            band_number_range: range,
            min_bandwidth,
        }
    }

    #[test]
    fn band_count_covers_range() {
        let mut rng = RandomStream::new(1);
        let seen: BTreeSet<usize> = (0..2000)
            .map(|_| sample_band_count(&params((2, 5), 4), 128, &mut rng).unwrap())
            .collect();
        assert_eq!(seen, BTreeSet::from([2, 3, 4, 5]));
    }

    #[test]
    fn degenerate_band_range() {
        let mut rng = RandomStream::new(2);
        for _ in 0..100 {
            assert_eq!(sample_band_count(&params((1, 1), 4), 128, &mut rng).unwrap(), 1);
        }
    }

    #[test]
    fn band_count_capped_by_width() {
        // Feasible band counts with gaps >= 4 inside 10 bins: enumerate.
        let feasible: Vec<usize> = (1..=10).filter(|n| n * 4 <= 10).collect();
        assert_eq!(feasible.iter().max(), Some(&2));
        let mut rng = RandomStream::new(3);
        for _ in 0..100 {
            assert_eq!(sample_band_count(&params((2, 5), 4), 10, &mut rng).unwrap(), 2);
        }
    }

    #[test]
    fn cap_below_minimum_lowers_minimum() {
        let mut rng = RandomStream::new(3);
        assert_eq!(sample_band_count(&params((2, 5), 4), 6, &mut rng).unwrap(), 1);
    }

    #[test]
    fn too_narrow_is_an_error() {
        let mut rng = RandomStream::new(4);
        let err = sample_band_count(&params((2, 5), 4), 3, &mut rng).unwrap_err();
        assert!(matches!(err, Error::SpectrogramTooNarrow { .. }));
    }

    #[test]
    fn single_band_boundaries() {
        let mut rng = RandomStream::new(5);
        assert_eq!(sample_boundaries(1, 128, 4, &mut rng).unwrap(), vec![0, 128]);
    }

    #[test]
    fn two_band_interior_hits_every_feasible_value() {
        let feasible: BTreeSet<usize> = (0..=128).filter(|&b| b >= 4 && 128 - b >= 4).collect();
        assert_eq!(feasible, (4..=124).collect());
        let mut rng = RandomStream::new(6);
        let mut seen = BTreeSet::new();
        for _ in 0..100_000 {
            let b = sample_boundaries(2, 128, 4, &mut rng).unwrap();
            assert_eq!((b[0], b[2]), (0, 128));
            assert!(feasible.contains(&b[1]));
            seen.insert(b[1]);
        }
        assert_eq!(seen, feasible);
    }

    #[test]
    fn tight_layout_is_unique() {
        let mut rng = RandomStream::new(7);
        for _ in 0..50 {
            assert_eq!(sample_boundaries(3, 12, 4, &mut rng).unwrap(), vec![0, 4, 8, 12]);
        }
    }

    #[test]
    fn infeasible_layout_is_an_error() {
        let mut rng = RandomStream::new(8);
        assert!(sample_boundaries(4, 12, 4, &mut rng).is_err());
        assert!(sample_boundaries(0, 12, 4, &mut rng).is_err());
    }

    #[test]
    fn zero_width_range_gives_zero_weights() {
        let mut rng = RandomStream::new(9);
        assert!(sample_weights(50, (0.0, 0.0), &mut rng).iter().all(|&w| w == 0.0));
    }

    #[test]
    fn uniform_weight_statistics() {
        let mut rng = RandomStream::new(10);
        let w = sample_weights(100_000, (-6.0, 6.0), &mut rng);
        let mean = w.iter().sum::<f64>() / w.len() as f64;
        let min = w.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = w.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert!(mean.abs() < 0.1, "mean {mean}");
        assert!((-6.0..-5.8).contains(&min));
        assert!(max <= 6.0 && max > 5.8);
    }
}
