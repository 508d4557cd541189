#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use filteraug::RandomStream;

pub const SAMPLE_RATE: u32 = 16_000;

pub fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_filteraug"));
    cmd.env_remove("FILTERAUG_SEED");
    cmd
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// A few tones over low-level noise, deterministic per `seed`.
pub fn clip(seconds: f64, seed: u64) -> Vec<f64> {
    let mut rng = RandomStream::new(seed);
    let tones: Vec<(f64, f64)> = (0..3)
        .map(|_| (rng.uniform_real(100.0, 6000.0), rng.uniform_real(0.1, 0.3)))
        .collect();
    let n = (seconds * f64::from(SAMPLE_RATE)) as usize;
    (0..n)
        .map(|i| {
            let t = i as f64 / f64::from(SAMPLE_RATE);
            let tonal: f64 = tones
                .iter()
                .map(|&(f, a)| a * (2.0 * std::f64::consts::PI * f * t).sin())
                .sum();
            tonal + rng.uniform_real(-0.05, 0.05)
        })
        .collect()
}

pub fn write_wav(path: &Path, samples: &[f64]) {
    let spec = hound::WavSpec {
        channels: 1,
        sample_rate: SAMPLE_RATE,
        bits_per_sample: 16,
        sample_format: hound::SampleFormat::Int,
    };
    let mut w = hound::WavWriter::create(path, spec).unwrap();
    for &s in samples {
        w.write_sample((s.clamp(-1.0, 1.0) * 32767.0).round() as i16).unwrap();
    }
    w.finalize().unwrap();
}

/// Writes `count` clips named `clip{i}.wav` plus a manifest listing them.
pub fn clip_set(dir: &Path, count: usize, seconds: f64) -> PathBuf {
    let mut manifest = String::new();
    for i in 0..count {
        let name = format!("clip{i}.wav");
        write_wav(&dir.join(&name), &clip(seconds, i as u64));
        manifest.push_str(&name);
        manifest.push('\n');
    }
    let path = dir.join("manifest.txt");
    std::fs::write(&path, manifest).unwrap();
    path
}

/// Sorted `(file name, contents)` of every file in `dir`.
pub fn dir_contents(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap())
        })
        .collect();
    files.sort();
    files
}
