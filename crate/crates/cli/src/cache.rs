//! Content-addressed colength cache.
//!
//! Layout: one JSON file per entry under the cache directory, named
//! `<sha256-of-canonical-inputs>.json`. Each entry stores the canonical
//! inputs alongside the result, so `verify` can recompute any entry from
//! the file alone. Entries are invalidated by the engine version tag.
//! Writers place files atomically (temp file + rename), so concurrent
//! writers of distinct keys are safe.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache I/O at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cache entry {path} is corrupt: {message}")]
    Corrupt { path: PathBuf, message: String },

    #[error("cache verification failed for {path}: {message}")]
    VerifyMismatch { path: PathBuf, message: String },
}

/// The canonical inputs of one colength computation.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CacheInputs {
    pub p: u32,
    pub vars: Vec<String>,
    pub relations: Vec<String>,
    pub ideal: Vec<String>,
    pub order: String,
    pub q: u64,
}

impl CacheInputs {
    fn canonical_string(&self) -> String {
        format!(
            "engine={};p={};vars={};relations={};ideal={};order={};q={}",
            ENGINE_VERSION,
            self.p,
            self.vars.join(","),
            self.relations.join(";"),
            self.ideal.join(";"),
            self.order,
            self.q
        )
    }

    pub fn key(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.canonical_string().as_bytes());
        format!("{:x}", hasher.finalize())
    }
}

/// One cache entry: inputs, result, and basis statistics.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CacheEntry {
    pub engine: String,
    pub inputs: CacheInputs,
    pub colength: u64,
    pub basis_size: usize,
}

impl CacheEntry {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut bytes = serde_json::to_vec_pretty(self).expect("entry serializes");
        bytes.push(b'\n');
        bytes
    }
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Cache, CacheError> {
        fs::create_dir_all(dir).map_err(|source| CacheError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn entry_path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Returns the cached entry when present, valid, and produced by the
    /// current engine version.
    pub fn get(&self, inputs: &CacheInputs) -> Option<CacheEntry> {
        let path = self.entry_path(&inputs.key());
        let bytes = fs::read(&path).ok()?;
        let entry: CacheEntry = serde_json::from_slice(&bytes).ok()?;
        if entry.engine != ENGINE_VERSION || &entry.inputs != inputs {
            return None;
        }
        Some(entry)
    }

    /// Atomic single-writer-per-key placement.
    pub fn put(&self, entry: &CacheEntry) -> Result<(), CacheError> {
        use std::sync::atomic::{AtomicU64, Ordering};
        static WRITE_SEQ: AtomicU64 = AtomicU64::new(0);
        let path = self.entry_path(&entry.inputs.key());
        let tmp = self.dir.join(format!(
            ".{}.{}.{}.tmp",
            entry.inputs.key(),
            std::process::id(),
            WRITE_SEQ.fetch_add(1, Ordering::Relaxed)
        ));
        fs::write(&tmp, entry.to_bytes()).map_err(|source| CacheError::Io {
            path: tmp.clone(),
            source,
        })?;
        fs::rename(&tmp, &path).map_err(|source| CacheError::Io { path, source })?;
        Ok(())
    }

    /// All entry paths in deterministic (sorted) order.
    pub fn entry_paths(&self) -> Result<Vec<PathBuf>, CacheError> {
        let mut paths: Vec<PathBuf> = fs::read_dir(&self.dir)
            .map_err(|source| CacheError::Io {
                path: self.dir.clone(),
                source,
            })?
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
            .collect();
        paths.sort();
        Ok(paths)
    }

    /// Samples up to `sample` entries (evenly spaced over the sorted
    /// listing), recomputes each from its stored inputs, and demands
    /// byte-identical files. Returns the number of verified entries.
    pub fn verify<F>(&self, sample: usize, mut recompute: F) -> Result<usize, CacheError>
    where
        F: FnMut(&CacheInputs) -> Result<(u64, usize), String>,
    {
        let paths = self.entry_paths()?;
        if paths.is_empty() {
            return Ok(0);
        }
        let step = (paths.len() / sample.max(1)).max(1);
        let chosen: Vec<&PathBuf> = paths.iter().step_by(step).take(sample).collect();
        let mut verified = 0;
        for path in chosen {
            let bytes = fs::read(path).map_err(|source| CacheError::Io {
                path: path.clone(),
                source,
            })?;
            let entry: CacheEntry =
                serde_json::from_slice(&bytes).map_err(|e| CacheError::Corrupt {
                    path: path.clone(),
                    message: e.to_string(),
                })?;
            if entry.engine != ENGINE_VERSION {
                continue; // stale version, not an error
            }
            let expected_name = format!("{}.json", entry.inputs.key());
            if path.file_name().map(|n| n.to_string_lossy().to_string())
                != Some(expected_name.clone())
            {
                return Err(CacheError::VerifyMismatch {
                    path: path.clone(),
                    message: format!("file name does not match content key {expected_name}"),
                });
            }
            let (colength, basis_size) =
                recompute(&entry.inputs).map_err(|message| CacheError::VerifyMismatch {
                    path: path.clone(),
                    message,
                })?;
            let fresh = CacheEntry {
                engine: ENGINE_VERSION.to_string(),
                inputs: entry.inputs.clone(),
                colength,
                basis_size,
            };
            if fresh.to_bytes() != bytes {
                return Err(CacheError::VerifyMismatch {
                    path: path.clone(),
                    message: format!(
                        "recomputation differs: cached colength {}, fresh colength {}",
                        entry.colength, colength
                    ),
                });
            }
            verified += 1;
        }
        Ok(verified)
    }
}
