use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input too short: {len} samples, need at least {needed}")]
    InputTooShort { len: usize, needed: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("spectrogram too narrow: {n_mels} mel bins cannot hold one band of {min_bandwidth} bins")]
    SpectrogramTooNarrow { n_mels: usize, min_bandwidth: usize },

    #[error("infeasible boundaries: {bands} bands of at least {min_bandwidth} bins do not fit in {n_mels} bins")]
    InfeasibleBoundaries {
        bands: usize,
        min_bandwidth: usize,
        n_mels: usize,
    },

    #[error("shape mismatch: expected {expected}, got {actual}")]
    ShapeMismatch { expected: usize, actual: usize },

    #[error("mel filter {index} is empty; n_mels is too large for n_fft resolution")]
    EmptyMelFilter { index: usize },

    #[error("bad magic: expected \"LMSP\", found {0:?}")]
    BadMagic([u8; 4]),

    #[error("unsupported spectrogram file version {0}")]
    VersionMismatch(u16),

    #[error("truncated spectrogram file: expected {expected} bytes, found {actual}")]
    Truncated { expected: u64, actual: u64 },

    #[error("spectrogram file has {extra} unexpected trailing bytes")]
    TrailingData { extra: u64 },

    #[error("unsupported WAV encoding: {0}")]
    UnsupportedWav(String),

    #[error("malformed curve CSV: {0}")]
    MalformedCurve(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Wav(#[from] hound::Error),

    #[error(transparent)]
    Image(#[from] image::ImageError),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
