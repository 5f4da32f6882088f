//! On-disk cache of `m -> f(m)`.
//!
//! The cache never makes a command fail: a missing, unreadable, outdated or
//! inconsistent file is replaced by fresh computation and a warning.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::squared::frequency;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: BTreeMap<u64, u64>,
}

#[derive(Debug, Clone, Default)]
pub struct FrequencyCache {
    path: Option<PathBuf>,
    entries: BTreeMap<u64, u64>,
    dirty: bool,
}

impl FrequencyCache {
    /// A cache that is never written.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads `path` and recomputes up to `sample` stored entries. Any
    /// disagreement discards the whole file.
    pub fn load(path: &Path, sample: usize) -> (Self, Vec<String>) {
        let mut warnings = Vec::new();
        let mut cache = Self {
            path: Some(path.to_path_buf()),
            ..Self::default()
        };
        let text = match fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) if e.kind() == io::ErrorKind::NotFound => {
                warnings.push(format!("cache {} not found; computing from scratch", path.display()));
                return (cache, warnings);
            }
            Err(e) => {
                warnings.push(format!("cannot read cache {}: {e}; ignoring it", path.display()));
                return (cache, warnings);
            }
        };
        let file: CacheFile = match serde_json::from_str(&text) {
            Ok(file) => file,
            Err(e) => {
                warnings.push(format!("cache {} is corrupt ({e}); ignoring it", path.display()));
                return (cache, warnings);
            }
        };
        if file.version != FORMAT_VERSION {
            warnings.push(format!(
                "cache {} has format version {} (expected {FORMAT_VERSION}); ignoring it",
                path.display(),
                file.version
            ));
            return (cache, warnings);
        }
        if let Some((m, stored, fresh)) = spot_check(&file.entries, sample) {
            warnings.push(format!(
                "cache {} says f({m}) = {stored} but recomputation gives {fresh}; ignoring it",
                path.display()
            ));
            return (cache, warnings);
        }
        cache.entries = file.entries;
        (cache, warnings)
    }

    pub fn get(&self, m: u64) -> Option<u64> {
        self.entries.get(&m).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn frequency(&mut self, m: u64) -> u64 {
        if let Some(f) = self.get(m) {
            return f;
        }
        let f = frequency(m);
        self.entries.insert(m, f);
        self.dirty = true;
        f
    }

    /// `f(m)` for `m = 1..=m_max`, computing the missing values on the
    /// current rayon pool.
    pub fn frequencies(&mut self, m_max: u64) -> Vec<(u64, u64)> {
        let missing: Vec<u64> = (1..=m_max).filter(|m| !self.entries.contains_key(m)).collect();
        let fresh: Vec<(u64, u64)> = missing.into_par_iter().map(|m| (m, frequency(m))).collect();
        if !fresh.is_empty() {
            self.dirty = true;
        }
        self.entries.extend(fresh);
        (1..=m_max).map(|m| (m, self.entries[&m])).collect()
    }

    /// Writes the cache if it has a path and new entries.
    pub fn save(&mut self) -> io::Result<()> {
        let Some(path) = self.path.as_ref().filter(|_| self.dirty) else {
            return Ok(());
        };
        let file = CacheFile {
            version: FORMAT_VERSION,
            entries: self.entries.clone(),
        };
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_vec(&file)?)?;
        fs::rename(&tmp, path)?;
        self.dirty = false;
        Ok(())
    }
}

/// Recomputes `sample` entries spread evenly over the stored keys and
/// returns the first disagreement.
fn spot_check(entries: &BTreeMap<u64, u64>, sample: usize) -> Option<(u64, u64, u64)> {
    if sample == 0 || entries.is_empty() {
        return None;
    }
    let stride = entries.len().div_ceil(sample).max(1);
    entries
        .iter()
        .step_by(stride)
        .take(sample)
        .map(|(&m, &stored)| (m, stored, frequency(m)))
        .find(|&(_, stored, fresh)| stored != fresh)
}
