use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

use super::table::{OracleQuery, OracleResult, VERSION};

/// One JSON file per [`OracleResult`], named after the canonical query.
/// Entries written by another crate version are ignored.
#[derive(Clone, Debug)]
pub struct OracleCache {
    dir: PathBuf,
}

impl OracleCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        OracleCache { dir: dir.into() }
    }

    /// `$LONGCYCLE_CACHE_DIR`, else `<tmp>/longcycle-cache`.
    pub fn default_dir() -> PathBuf {
        std::env::var_os("LONGCYCLE_CACHE_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|| std::env::temp_dir().join("longcycle-cache"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, query: &OracleQuery) -> PathBuf {
        let name: String = query
            .canonical()
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
            .collect();
        self.dir.join(format!("{name}.json"))
    }

    /// Cached result for `query`, if present, readable and current.
    pub fn load(&self, query: &OracleQuery) -> Option<OracleResult> {
        let text = fs::read_to_string(self.path_for(query)).ok()?;
        let r: OracleResult = serde_json::from_str(&text).ok()?;
        (r.version == VERSION && &r.query == query).then_some(r)
    }

    pub fn store(&self, result: &OracleResult) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(&result.query);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string(result)?)?;
        fs::rename(&tmp, &path).map_err(Error::from)
    }

    /// Loads `query` or computes and stores it.
    pub fn get_or_compute(
        &self,
        query: &OracleQuery,
        compute: impl FnOnce() -> Result<OracleResult>,
    ) -> Result<OracleResult> {
        if let Some(r) = self.load(query) {
            return Ok(r);
        }
        let r = compute()?;
        self.store(&r)?;
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{sweep_pairs, SweepOptions};

    #[test]
    fn store_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let cache = OracleCache::new(dir.path());
        let alpha = "2,2".parse().unwrap();
        let q = OracleQuery::pairs(4, Some(alpha));
        assert!(cache.load(&q).is_none());
        let first = cache
            .get_or_compute(&q, || sweep_pairs(4, q.alpha.as_ref(), SweepOptions::default()))
            .unwrap();
        let again = cache.get_or_compute(&q, || panic!("should hit the cache")).unwrap();
        assert_eq!(first, again);
    }

    #[test]
    fn stale_version_is_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = OracleCache::new(dir.path());
        let q = OracleQuery::pairs(3, None);
        let mut r = sweep_pairs(3, None, SweepOptions::default()).unwrap();
        r.version = "0.0.0-old".into();
        cache.store(&r).unwrap();
        assert!(cache.load(&q).is_none());
    }
}
