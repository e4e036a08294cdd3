//! One JSON file per fingerprint. Writes go through a temporary file in the
//! same directory and are renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use log::warn;

use super::ResultRecord;
use crate::error::Result;

pub struct Cache {
    dir: PathBuf,
}

#[derive(Debug)]
pub enum Lookup {
    Hit(Box<ResultRecord>),
    Miss,
    /// The file exists but cannot be trusted.
    Corrupt(String),
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, fingerprint: &str) -> PathBuf {
        self.dir.join(format!("{fingerprint}.json"))
    }

    pub fn lookup(&self, fingerprint: &str) -> Lookup {
        let path = self.path_for(fingerprint);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => return Lookup::Corrupt(format!("{}: {e}", path.display())),
        };
        match serde_json::from_slice::<ResultRecord>(&bytes) {
            Ok(r) if r.fingerprint == fingerprint => Lookup::Hit(Box::new(r)),
            Ok(r) => Lookup::Corrupt(format!(
                "{} holds fingerprint {}, expected {fingerprint}",
                path.display(),
                r.fingerprint
            )),
            Err(e) => Lookup::Corrupt(format!("{}: {e}", path.display())),
        }
    }

    /// Like [`Cache::lookup`] but logs and discards corrupt entries.
    pub fn get(&self, fingerprint: &str) -> Option<ResultRecord> {
        match self.lookup(fingerprint) {
            Lookup::Hit(r) => Some(*r),
            Lookup::Miss => None,
            Lookup::Corrupt(why) => {
                warn!("ignoring corrupt cache entry, recomputing ({why})");
                None
            }
        }
    }

    pub fn put(&self, record: &ResultRecord) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(&record.fingerprint);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer_pretty(&mut tmp, record)?;
        tmp.write_all(b"\n")?;
        tmp.as_file().sync_all()?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(path)
    }
}

/// Writes `record` and reads it back.
pub fn cache_roundtrip(cache: &Cache, record: &ResultRecord) -> Result<Option<ResultRecord>> {
    cache.put(record)?;
    Ok(cache.get(&record.fingerprint))
}
