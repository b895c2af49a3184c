//! Optional on-disk memo cache: one JSON file per result, named by the
//! SHA-256 of its key. Enabled by `SCHUBERT_CACHE_DIR`.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const ENV: &str = "SCHUBERT_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DiskCache { dir: dir.into() }
    }

    /// The cache named by the environment, if any.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(ENV).filter(|v| !v.is_empty()).map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(key.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{hex}.json"))
    }

    /// Stored value for `key`; unreadable or mismatched files count as misses.
    pub fn get(&self, key: &str) -> Option<Value> {
        let text = fs::read_to_string(self.path_for(key)).ok()?;
        let mut doc: Value = serde_json::from_str(&text).ok()?;
        if doc.get("key")?.as_str()? != key {
            return None;
        }
        doc.get_mut("value").map(Value::take)
    }

    /// Write through a temporary file and rename, so readers never see a
    /// partial file. Errors are ignored: the cache is best effort.
    pub fn put(&self, key: &str, value: &Value) {
        let _ = self.try_put(key, value);
    }

    fn try_put(&self, key: &str, value: &Value) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let target = self.path_for(key);
        let mut tmp = create_temp(&self.dir)?;
        tmp.1.write_all(json!({ "key": key, "value": value }).to_string().as_bytes())?;
        tmp.1.sync_all()?;
        drop(tmp.1);
        fs::rename(&tmp.0, target).inspect_err(|_| {
            let _ = fs::remove_file(&tmp.0);
        })
    }

    /// Look up `key`, decoding with `decode`; otherwise compute and store.
    pub fn get_or_insert<T, E>(
        &self,
        key: &str,
        decode: impl FnOnce(&Value) -> Result<T, E>,
        encode: impl FnOnce(&T) -> Value,
        compute: impl FnOnce() -> Result<T, E>,
    ) -> Result<T, E> {
        if let Some(v) = self.get(key) {
            if let Ok(t) = decode(&v) {
                return Ok(t);
            }
        }
        let t = compute()?;
        self.put(key, &encode(&t));
        Ok(t)
    }
}

fn create_temp(dir: &Path) -> std::io::Result<(PathBuf, fs::File)> {
    let pid = std::process::id();
    for n in 0u32.. {
        let path = dir.join(format!(".tmp-{pid}-{n}"));
        match fs::OpenOptions::new().write(true).create_new(true).open(&path) {
            Ok(f) => return Ok((path, f)),
            Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => continue,
            Err(e) => return Err(e),
        }
    }
    unreachable!()
}
