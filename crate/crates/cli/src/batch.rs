use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use filteraug::io::{write_curve_csv, write_spectrogram};
use filteraug::RandomStream;
use rayon::prelude::*;

use crate::args::BatchCmd;
use crate::plan::{load_spectrogram, Plan};
use crate::EXIT_PARTIAL;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Item {
    /// Zero-based line number in the manifest; also the seed-split index.
    pub line: usize,
    pub input: PathBuf,
}

impl Item {
    /// `<line, 4 digits>_<input stem>`, unique within a manifest.
    pub fn output_stem(&self) -> String {
        let stem = self.input.file_stem().map_or_else(|| "item".into(), |s| s.to_string_lossy());
        format!("{:04}_{stem}", self.line)
    }
}

/// Non-empty lines not starting with `#`. Relative paths are taken relative to `base`.
pub fn parse_manifest(text: &str, base: &Path) -> Vec<Item> {
    text.lines()
        .enumerate()
        .filter_map(|(line, raw)| {
            let entry = raw.trim();
            if entry.is_empty() || entry.starts_with('#') {
                return None;
            }
            Some(Item {
                line,
                input: base.join(entry),
            })
        })
        .collect()
}

fn process(item: &Item, plan: &Plan, master_seed: u64, out_dir: &Path, emit_curves: bool) -> Result<PathBuf> {
    let spec = load_spectrogram(&item.input)?;
    let mut rng = RandomStream::for_item(master_seed, item.line as u64);
    let (out, curve) = plan.apply(&spec, &mut rng)?;
    let stem = item.output_stem();
    let path = out_dir.join(format!("{stem}.lmsp"));
    write_spectrogram(&out, &path)?;
    if let (true, Some(c)) = (emit_curves, curve) {
        write_curve_csv(&c.weights_db, out_dir.join(format!("{stem}.curve.csv")))?;
    }
    Ok(path)
}

pub fn cmd_batch(a: &BatchCmd) -> Result<ExitCode> {
    let plan = Plan::from_args(&a.augment)?;
    if a.augment.print_config {
        println!("{}", serde_json::to_string_pretty(&plan.to_json())?);
        return Ok(ExitCode::SUCCESS);
    }
    let (manifest, out_dir) = match (&a.manifest, &a.out_dir) {
        (Some(m), Some(o)) => (m, o),
        _ => anyhow::bail!("manifest and output directory are required"),
    };
    let text = std::fs::read_to_string(manifest).with_context(|| format!("cannot read manifest {}", manifest.display()))?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    let items = parse_manifest(&text, base);
    std::fs::create_dir_all(out_dir).with_context(|| format!("cannot create {}", out_dir.display()))?;

    let jobs = a
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let results: Vec<Result<PathBuf>> = pool.install(|| {
        items
            .par_iter()
            .map(|item| process(item, &plan, a.master_seed, out_dir, a.emit_curves))
            .collect()
    });

    let mut failed = 0;
    for (item, result) in items.iter().zip(&results) {
        if let Err(e) = result {
            failed += 1;
            eprintln!("line {}: {}: {e:#}", item.line + 1, item.input.display());
        }
    }
    eprintln!("processed {} of {} inputs", items.len() - failed, items.len());
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_PARTIAL)
    })
}
