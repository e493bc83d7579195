//! On-disk cache of invariant reports.
//!
//! Entries live under `<root>/v<version>/` so reports written by another
//! release are never read back. Writes go to a temporary file in the same
//! directory and are renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use hankel_blowup::invariants::{InvariantReport, Options};
use hankel_blowup::{OrderKind, ScrollParams};

pub const CACHE_ENV: &str = "HANKEL_BLOWUP_CACHE_DIR";
const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// The directory from the environment, else the platform cache dir.
    pub fn from_env() -> Option<Cache> {
        let root = match std::env::var_os(CACHE_ENV) {
            Some(v) if !v.is_empty() => PathBuf::from(v),
            _ => dirs::cache_dir()?.join("hankel-blowup"),
        };
        Some(Cache::at(root))
    }

    pub fn at(root: impl AsRef<Path>) -> Cache {
        Cache { dir: root.as_ref().join(format!("v{VERSION}")) }
    }

    pub fn key(params: &ScrollParams, order: OrderKind, options: &Options) -> String {
        let mask: u32 = options.oracles.iter().map(|&o| 1u32 << o as u32).sum();
        let b = &options.budget;
        format!(
            "inv-r{}-c{}-d{}-{}-o{mask:04x}-b{}.{}.{}.{}.{}-{}",
            params.r(),
            params.c(),
            params.d(),
            order.name(),
            b.max_y_vars,
            b.max_cliques,
            b.taylor_bound,
            b.max_groebner_minors,
            b.max_hilbert_points,
            if options.prime_field { "fp" } else { "q" },
        )
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A cached report, or `None` on a miss or an unreadable entry.
    pub fn get(&self, key: &str) -> Option<InvariantReport> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn put(&self, key: &str, report: &InvariantReport) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, report)?;
        tmp.flush()?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}
