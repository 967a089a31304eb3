//! Window cache keyed by a content hash of what determines the window.

use std::fs;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "CURVELAB_CACHE";

/// Stable key for a window of `instance` with `bound`.
pub fn key(instance: &str, bound: u64) -> String {
    let mut h = Sha256::new();
    h.update(format!("curvelab-window/{}\n{instance}\n{bound}\n", env!("CARGO_PKG_VERSION")).as_bytes());
    hex::encode(h.finalize())
}

fn dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

/// Cached JSON for `key`, if present.
pub fn load(key: &str) -> Option<String> {
    fs::read_to_string(dir()?.join(format!("{key}.json"))).ok()
}

/// Best-effort store; the cache never decides an outcome.
pub fn store(key: &str, json: &str) {
    let Some(d) = dir() else { return };
    let write = || -> std::io::Result<()> {
        fs::create_dir_all(&d)?;
        let tmp = d.join(format!(".{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, json)?;
        fs::rename(tmp, d.join(format!("{key}.json")))
    };
    if let Err(e) = write() {
        eprintln!("warning: cache write to {} failed: {e}", d.display());
    }
}
