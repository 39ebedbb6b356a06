//! On-disk cache of per-group analyses, keyed by group spec.
//!
//! The file records the tool version and analysis limits; a mismatch on
//! either discards the whole cache.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::analysis::GroupAnalysis;
use super::report::TOOL_VERSION;
use super::VerifyError;
use crate::centralizers::Limits;

pub const CACHE_DIR_ENV: &str = "CENTRA_CACHE_DIR";
const CACHE_FORMAT: u32 = 1;
const CACHE_FILE: &str = "analyses.json";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: u32,
    version: String,
    limits: Limits,
    entries: BTreeMap<String, GroupAnalysis>,
}

#[derive(Debug)]
pub struct AnalysisCache {
    path: PathBuf,
    limits: Limits,
    entries: BTreeMap<String, GroupAnalysis>,
    dirty: bool,
}

/// `$CENTRA_CACHE_DIR`, else `$XDG_CACHE_HOME/centra`, else `~/.cache/centra`,
/// else a directory under the system temp dir.
pub fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(CACHE_DIR_ENV) {
        return PathBuf::from(dir);
    }
    if let Some(xdg) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(xdg).join("centra");
    }
    if let Some(home) = std::env::var_os("HOME") {
        return PathBuf::from(home).join(".cache").join("centra");
    }
    std::env::temp_dir().join("centra-cache")
}

impl AnalysisCache {
    /// Loads the cache in `dir`; a missing, unreadable or stale file yields an
    /// empty cache.
    pub fn open(dir: &Path, limits: Limits) -> Self {
        let path = dir.join(CACHE_FILE);
        let entries = std::fs::read_to_string(&path)
            .ok()
            .and_then(|text| serde_json::from_str::<CacheFile>(&text).ok())
            .filter(|f| f.format == CACHE_FORMAT && f.version == TOOL_VERSION && f.limits == limits)
            .map(|f| f.entries)
            .unwrap_or_default();
        AnalysisCache {
            path,
            limits,
            entries,
            dirty: false,
        }
    }

    pub fn get(&self, spec: &str) -> Option<&GroupAnalysis> {
        self.entries.get(spec)
    }

    pub fn insert(&mut self, analysis: GroupAnalysis) {
        self.entries.insert(analysis.spec.clone(), analysis);
        self.dirty = true;
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn save(&mut self) -> Result<(), VerifyError> {
        if !self.dirty {
            return Ok(());
        }
        if let Some(parent) = self.path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        let file = CacheFile {
            format: CACHE_FORMAT,
            version: TOOL_VERSION.to_string(),
            limits: self.limits,
            entries: std::mem::take(&mut self.entries),
        };
        let text = serde_json::to_string(&file)?;
        self.entries = file.entries;
        // Write-then-rename so a concurrent reader never sees a torn file.
        let tmp = self.path.with_extension("json.tmp");
        std::fs::write(&tmp, text)?;
        std::fs::rename(&tmp, &self.path)?;
        self.dirty = false;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::analysis::Outcome;

    fn entry(spec: &str) -> GroupAnalysis {
        GroupAnalysis {
            spec: spec.into(),
            order: 1,
            outcome: Outcome::Skipped { reason: "x".into() },
        }
    }

    #[test]
    fn round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let mut cache = AnalysisCache::open(dir.path(), Limits::default());
        assert!(cache.is_empty());
        cache.insert(entry("C1"));
        cache.save().unwrap();
        let reopened = AnalysisCache::open(dir.path(), Limits::default());
        assert_eq!(reopened.get("C1"), Some(&entry("C1")));
    }

    #[test]
    fn stale_versions_are_discarded() {
        let dir = tempfile::tempdir().unwrap();
        let stale = CacheFile {
            format: CACHE_FORMAT,
            version: "0.0.0-old".into(),
            limits: Limits::default(),
            entries: BTreeMap::from([("C1".to_string(), entry("C1"))]),
        };
        std::fs::write(dir.path().join(CACHE_FILE), serde_json::to_string(&stale).unwrap()).unwrap();
        assert!(AnalysisCache::open(dir.path(), Limits::default()).is_empty());
    }

    #[test]
    fn changed_limits_invalidate() {
        let dir = tempfile::tempdir().unwrap();
        let mut cache = AnalysisCache::open(dir.path(), Limits::default());
        cache.insert(entry("C1"));
        cache.save().unwrap();
        let other = Limits {
            iso: 50,
            ..Limits::default()
        };
        assert!(AnalysisCache::open(dir.path(), other).is_empty());
    }

    #[test]
    fn garbage_file_is_ignored() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join(CACHE_FILE), "not json").unwrap();
        assert!(AnalysisCache::open(dir.path(), Limits::default()).is_empty());
    }
}
