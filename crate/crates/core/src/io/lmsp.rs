//! `LMSP` spectrogram files.
//!
//! Layout, all little-endian:
//!
//! | offset | size | field                         |
//! |--------|------|-------------------------------|
//! | 0      | 4    | magic `b"LMSP"`               |
//! | 4      | 2    | version (`u16`, currently 1)  |
//! | 6      | 4    | `n_frames` (`u32`)            |
//! | 10     | 4    | `n_mels` (`u32`)              |
//! | 14     | 4    | `sample_rate` (`u32`)         |
//! | 18     | 4    | `hop_length` (`u32`)          |
//! | 22     | 4·T·F| `f32` values, time-major      |
//!
//! Values are stored as `f32`; anything representable in `f32` survives a
//! round trip bit-exactly.

use std::path::Path;

use crate::error::{Error, Result};
use crate::spectro::LogMelSpectrogram;

pub const MAGIC: [u8; 4] = *b"LMSP";
pub const VERSION: u16 = 1;
pub const HEADER_LEN: usize = 22;

fn dim(value: usize, what: &str) -> Result<u32> {
    u32::try_from(value).map_err(|_| Error::InvalidConfig(format!("{what} {value} does not fit in 32 bits")))
}

pub fn encode_spectrogram(spec: &LogMelSpectrogram) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(HEADER_LEN + 4 * spec.values().len());
    out.extend_from_slice(&MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&dim(spec.n_frames(), "frame count")?.to_le_bytes());
    out.extend_from_slice(&dim(spec.n_mels(), "mel bin count")?.to_le_bytes());
    out.extend_from_slice(&spec.sample_rate.to_le_bytes());
    out.extend_from_slice(&spec.hop_length.to_le_bytes());
    for &v in spec.values() {
        out.extend_from_slice(&(v as f32).to_le_bytes());
    }
    Ok(out)
}

fn u32_at(bytes: &[u8], offset: usize) -> u32 {
    u32::from_le_bytes(bytes[offset..offset + 4].try_into().expect("4-byte slice"))
}

pub fn decode_spectrogram(bytes: &[u8]) -> Result<LogMelSpectrogram> {
    if bytes.len() < 4 {
        return Err(Error::Truncated {
            expected: HEADER_LEN as u64,
            actual: bytes.len() as u64,
        });
    }
    let magic: [u8; 4] = bytes[..4].try_into().expect("4-byte slice");
    if magic != MAGIC {
        return Err(Error::BadMagic(magic));
    }
    if bytes.len() < HEADER_LEN {
        return Err(Error::Truncated {
            expected: HEADER_LEN as u64,
            actual: bytes.len() as u64,
        });
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != VERSION {
        return Err(Error::VersionMismatch(version));
    }
    let n_frames = u32_at(bytes, 6) as usize;
    let n_mels = u32_at(bytes, 10) as usize;
    let sample_rate = u32_at(bytes, 14);
    let hop_length = u32_at(bytes, 18);

    let expected = HEADER_LEN as u64 + 4 * n_frames as u64 * n_mels as u64;
    let actual = bytes.len() as u64;
    if actual < expected {
        return Err(Error::Truncated { expected, actual });
    }
    if actual > expected {
        return Err(Error::TrailingData {
            extra: actual - expected,
        });
    }
    let values = bytes[HEADER_LEN..]
        .chunks_exact(4)
        .map(|c| f64::from(f32::from_le_bytes(c.try_into().expect("4-byte chunk"))))
        .collect();
    LogMelSpectrogram::new(values, n_frames, n_mels, sample_rate, hop_length)
}

pub fn write_spectrogram(spec: &LogMelSpectrogram, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let bytes = encode_spectrogram(spec)?;
    std::fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

pub fn read_spectrogram(path: impl AsRef<Path>) -> Result<LogMelSpectrogram> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    decode_spectrogram(&bytes)
}

/// Whether `bytes` start with the `LMSP` magic.
pub fn is_spectrogram(bytes: &[u8]) -> bool {
    bytes.len() >= 4 && bytes[..4] == MAGIC
}
