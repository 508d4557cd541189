//! On-disk formats: WAV input, `LMSP` spectrograms, curve CSV and PNG renders.

mod curve_csv;
mod lmsp;
mod render;
mod wav;

pub use curve_csv::{decode_curve_csv, encode_curve_csv, format_significant, read_curve_csv, write_curve_csv};
pub use lmsp::{decode_spectrogram, encode_spectrogram, is_spectrogram, read_spectrogram, write_spectrogram, HEADER_LEN};
pub use render::{
    curve_image, render_curve, render_curve_weights, render_spectrogram, spectrogram_image, Colormap, RenderSpec,
    CURVE_HEIGHT,
};
pub use wav::{decode_wav, read_wav};
