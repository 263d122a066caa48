//! On-disk b-file cache, one file per identifier.
//!
//! Writers take an exclusive lock on `<name>.lock`, write a temporary file in
//! the same directory and rename it into place, so readers never see a
//! partial file and concurrent writers of one identifier serialize.

use std::fs::{self, File, OpenOptions};
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};

use tempfile::NamedTempFile;

use crate::{OeisError, OeisId, Result};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "GALILEO_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// `$GALILEO_CACHE_DIR`, else `~/.cache/galileo-oeis`, else a directory
    /// under the system temp dir.
    pub fn from_env() -> Self {
        if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
            return Self::new(dir);
        }
        let base = std::env::var_os("XDG_CACHE_HOME")
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))
            .unwrap_or_else(std::env::temp_dir);
        Self::new(base.join("galileo-oeis"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, id: OeisId) -> PathBuf {
        self.dir.join(id.bfile_name())
    }

    /// Cached b-file text, or `None` on a miss.
    pub fn load(&self, id: OeisId) -> Result<Option<String>> {
        let path = self.path(id);
        match fs::read_to_string(&path) {
            Ok(text) => Ok(Some(text)),
            Err(e) if e.kind() == ErrorKind::NotFound => Ok(None),
            Err(source) => Err(OeisError::Cache { path, source }),
        }
    }

    pub fn store(&self, id: OeisId, text: &str) -> Result<()> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| OeisError::Cache { path, source }
        };
        fs::create_dir_all(&self.dir).map_err(io(&self.dir))?;
        let lock_path = self.dir.join(format!("{}.lock", id.bfile_name()));
        let lock = OpenOptions::new()
            .create(true)
            .truncate(false)
            .write(true)
            .open(&lock_path)
            .map_err(io(&lock_path))?;
        lock.lock().map_err(io(&lock_path))?;
        let target = self.path(id);
        let mut tmp = NamedTempFile::new_in(&self.dir).map_err(io(&self.dir))?;
        tmp.write_all(text.as_bytes()).map_err(io(tmp.path()))?;
        tmp.as_file().sync_all().map_err(io(tmp.path()))?;
        tmp.persist(&target).map_err(|e| OeisError::Cache {
            path: target.clone(),
            source: e.error,
        })?;
        File::unlock(&lock).map_err(io(&lock_path))?;
        Ok(())
    }
}
