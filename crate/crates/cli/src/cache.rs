//! On-disk cache of decomposition tables, one JSON file per cell.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use k3hilb::decomp::DecompositionTable;
use k3hilb::lie::Family;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliResult;

pub const SCHEMA_VERSION: u32 = 1;

pub fn code_version() -> String {
    format!("{}+{}", k3hilb::VERSION, k3hilb::ALGORITHM_REVISION)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub n: usize,
    pub degree: usize,
    pub family: Family,
    pub rank: usize,
    pub code_version: String,
}

impl CacheKey {
    pub fn new(n: usize, degree: usize, family: Family, rank: usize) -> Self {
        CacheKey {
            n,
            degree,
            family,
            rank,
            code_version: code_version(),
        }
    }

    fn file_name(&self) -> String {
        format!(
            "{}-n{}-d{}-r{}.json",
            self.family, self.n, self.degree, self.rank
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub schema_version: u32,
    pub key: CacheKey,
    pub payload: DecompositionTable,
    pub digest: String,
}

fn digest(payload: &DecompositionTable) -> CliResult<String> {
    let bytes = serde_json::to_vec(payload)?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

impl CacheEntry {
    pub fn new(key: CacheKey, payload: DecompositionTable) -> CliResult<Self> {
        let digest = digest(&payload)?;
        Ok(CacheEntry {
            schema_version: SCHEMA_VERSION,
            key,
            payload,
            digest,
        })
    }

    fn is_valid_for(&self, key: &CacheKey) -> bool {
        self.schema_version == SCHEMA_VERSION
            && &self.key == key
            && digest(&self.payload).is_ok_and(|d| d == self.digest)
    }
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// The cached table, or `None` when missing, stale or corrupt.
    pub fn get(&self, key: &CacheKey) -> Option<DecompositionTable> {
        let text = fs::read_to_string(self.dir.join(key.file_name())).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        entry.is_valid_for(key).then_some(entry.payload)
    }

    /// Writes atomically through a temporary file in the cache directory.
    pub fn put(&self, key: CacheKey, table: &DecompositionTable) -> CliResult<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.dir.join(key.file_name());
        let entry = CacheEntry::new(key, table.clone())?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.flush()?;
        tmp.persist(path).map_err(|e| e.error)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use k3hilb::decomp::decompose_cell;
    use k3hilb::hilb::molien_pg;

    fn table() -> DecompositionTable {
        let pg = molien_pg(3, 2).unwrap();
        decompose_cell(&pg, 2, 4, Family::B).unwrap()
    }

    #[test]
    fn round_trip_and_invalidation() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let key = CacheKey::new(2, 4, Family::B, 3);
        assert!(cache.get(&key).is_none());
        cache.put(key.clone(), &table()).unwrap();
        assert_eq!(cache.get(&key), Some(table()));

        let mut other = key.clone();
        other.code_version = "0.0.0+0".into();
        assert!(cache.get(&other).is_none());

        let path = dir.path().join(key.file_name());
        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, text.replace("\"mult\":1", "\"mult\":2")).unwrap();
        assert!(cache.get(&key).is_none());
    }
}
