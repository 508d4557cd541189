use std::io::Read;
use std::path::Path;

use hound::{SampleFormat, WavReader};

use crate::error::{Error, Result};
use crate::spectro::Waveform;

/// Reads a RIFF/WAVE file and downmixes it to mono.
///
/// Supports 16/24/32-bit integer PCM (scaled by `2^(bits-1)`) and 32-bit float.
pub fn read_wav(path: impl AsRef<Path>) -> Result<Waveform> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    decode_wav(std::io::BufReader::new(file))
}

pub fn decode_wav<R: Read>(reader: R) -> Result<Waveform> {
    let reader = WavReader::new(reader)?;
    let spec = reader.spec();
    let samples: Vec<f64> = match (spec.sample_format, spec.bits_per_sample) {
        (SampleFormat::Int, bits @ (16 | 24 | 32)) => {
            let scale = f64::from(1u32 << (bits - 1));
            reader
                .into_samples::<i32>()
                .map(|s| s.map(|v| f64::from(v) / scale))
                .collect::<std::result::Result<_, _>>()?
        }
        (SampleFormat::Float, 32) => reader
            .into_samples::<f32>()
            .map(|s| s.map(f64::from))
            .collect::<std::result::Result<_, _>>()?,
        (format, bits) => {
            return Err(Error::UnsupportedWav(format!("{bits}-bit {format:?}")));
        }
    };
    Waveform::from_interleaved(&samples, usize::from(spec.channels), spec.sample_rate)
}
