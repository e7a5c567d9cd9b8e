//! Plain-text zero-table files and the on-disk cache.

use super::finder::{find_zeros_with, FinderConfig};
use super::{ZeroEntry, ZeroTable};
use crate::error::{Error, Result};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// Bumped whenever the evaluator or finder changes in a way that could
/// change the stored ordinates.
pub const METHOD_VERSION: &str = "em-gram-1";

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "CHEBYSHEV_BOUNDS_CACHE";

/// Slack added to the stored error ceiling for the 12-digit print rounding.
const PRINT_SLACK: f64 = 5e-13;

pub fn cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("chebyshev-bounds"))
}

impl ZeroTable {
    /// Serialize in the deterministic text format.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(32 * self.count() + 128);
        let ceiling = self.max_err() + if self.printed { 0.0 } else { PRINT_SLACK };
        writeln!(s, "# height {}", self.height()).unwrap();
        writeln!(s, "# count {}", self.count()).unwrap();
        writeln!(s, "# method {METHOD_VERSION}").unwrap();
        writeln!(s, "# err-ceiling {ceiling:e}").unwrap();
        for e in self.entries() {
            writeln!(s, "{} {:.12}", e.index, e.gamma).unwrap();
        }
        s
    }

    /// Parse the text format. Every entry receives the header's error
    /// ceiling; the count certificate is re-checked.
    pub fn from_text(text: &str) -> Result<ZeroTable> {
        let mut height = None;
        let mut count = None;
        let mut ceiling = None;
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let bad = |what: &str| Error::Parse(format!("line {}: {what}", lineno + 1));
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let mut it = rest.split_whitespace();
                match (it.next(), it.next()) {
                    (Some("height"), Some(v)) => height = Some(v.parse::<f64>().map_err(|_| bad("height"))?),
                    (Some("count"), Some(v)) => count = Some(v.parse::<usize>().map_err(|_| bad("count"))?),
                    (Some("err-ceiling"), Some(v)) => {
                        ceiling = Some(v.parse::<f64>().map_err(|_| bad("err-ceiling"))?)
                    }
                    (Some("method"), Some(v)) if v != METHOD_VERSION => {
                        return Err(bad(&format!("method {v} does not match {METHOD_VERSION}")))
                    }
                    _ => {}
                }
                continue;
            }
            let err = ceiling.ok_or_else(|| bad("data before err-ceiling header"))?;
            let mut it = line.split_whitespace();
            let index = it
                .next()
                .and_then(|v| v.parse::<usize>().ok())
                .ok_or_else(|| bad("index"))?;
            let gamma = it
                .next()
                .and_then(|v| v.parse::<f64>().ok())
                .ok_or_else(|| bad("gamma"))?;
            entries.push(ZeroEntry { index, gamma, err });
        }
        let height = height.ok_or_else(|| Error::Parse("missing height header".into()))?;
        if count != Some(entries.len()) {
            return Err(Error::Parse(format!(
                "count header {count:?} but {} entries",
                entries.len()
            )));
        }
        let mut table = ZeroTable::new(entries, height)?;
        table.printed = true;
        Ok(table)
    }

    pub fn write_to(&self, path: &Path) -> Result<()> {
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        // write-then-rename so concurrent readers never see a partial file
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        std::fs::write(&tmp, self.to_text())?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn read_from(path: &Path) -> Result<ZeroTable> {
        ZeroTable::from_text(&std::fs::read_to_string(path)?)
    }
}

fn cache_file(dir: &Path, height: f64, cfg: &FinderConfig) -> PathBuf {
    dir.join(format!(
        "zeros-h{height}-tol{:e}-{METHOD_VERSION}.txt",
        cfg.tol
    ))
}

/// Load the table for `height` from `dir`, computing and storing it on a
/// miss. A corrupt cache file is recomputed and overwritten.
pub fn load_or_find(height: f64, cfg: &FinderConfig, dir: &Path) -> Result<ZeroTable> {
    let path = cache_file(dir, height, cfg);
    if path.exists() {
        if let Ok(t) = ZeroTable::read_from(&path) {
            if t.height() == height {
                return Ok(t);
            }
        }
    }
    let table = find_zeros_with(height, cfg)?;
    table.write_to(&path)?;
    Ok(table)
}
