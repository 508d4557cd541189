//! Filter curve CSV: header `bin,weight_db`, one row per mel bin, weights
//! written with 9 significant digits.

use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

const HEADER: [&str; 2] = ["bin", "weight_db"];

/// `%.{digits}g`-style formatting: fixed notation for moderate exponents,
/// scientific otherwise, trailing zeros removed.
pub fn format_significant(v: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        return format!("{}e{exp}", trim_zeros(mantissa));
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{v:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn encode_curve_csv<W: Write>(weights_db: &[f64], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for (bin, &v) in weights_db.iter().enumerate() {
        w.write_record([bin.to_string(), format_significant(v, 9)])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn decode_curve_csv<R: Read>(input: R) -> Result<Vec<f64>> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers()?.clone();
    if header.iter().map(str::trim).ne(HEADER) {
        return Err(Error::MalformedCurve(format!("expected header bin,weight_db, found {header:?}")));
    }
    let mut weights = Vec::new();
    for (row, record) in r.records().enumerate() {
        let record = record?;
        let field = |i: usize| record.get(i).map(str::trim).unwrap_or("");
        let bin: usize = field(0)
            .parse()
            .map_err(|_| Error::MalformedCurve(format!("row {row}: bad bin {:?}", field(0))))?;
        if bin != row {
            return Err(Error::MalformedCurve(format!("row {row}: expected bin {row}, found {bin}")));
        }
        let weight: f64 = field(1)
            .parse()
            .map_err(|_| Error::MalformedCurve(format!("row {row}: bad weight {:?}", field(1))))?;
        weights.push(weight);
    }
    if weights.is_empty() {
        return Err(Error::MalformedCurve("no rows".into()));
    }
    Ok(weights)
}

pub fn write_curve_csv(weights_db: &[f64], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    encode_curve_csv(weights_db, std::io::BufWriter::new(file))
}

pub fn read_curve_csv(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    decode_curve_csv(file)
}
