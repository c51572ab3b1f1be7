//! Content-addressed on-disk cache of reduced Gröbner bases.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use pfaffschub::polyring::{Polynomial, TermOrder, VarSpace};
use pfaffschub::verify::BasisCache;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const ENV_VAR: &str = "PFAFFSCHUB_CACHE";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub space: VarSpace,
    pub order: TermOrder,
    pub generators: Vec<String>,
    pub basis: Vec<String>,
    pub tool_version: String,
    pub timestamp: u64,
}

pub struct DiskCache {
    dir: PathBuf,
    paranoid: bool,
}

/// `$PFAFFSCHUB_CACHE`, else `~/.cache/pfaffschub`.
pub fn default_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(ENV_VAR) {
        return Some(PathBuf::from(d));
    }
    std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache").join("pfaffschub"))
}

fn texts(gens: &[Polynomial]) -> Vec<String> {
    gens.iter().map(|f| f.to_text(TermOrder::RevLex)).collect()
}

/// SHA-256 of the generator texts, the variable space and the order.
pub fn digest(gens: &[Polynomial], space: VarSpace, order: TermOrder) -> String {
    let mut h = Sha256::new();
    h.update(b"pfaffschub-gb-v1\n");
    h.update(serde_json::to_string(&space).unwrap().as_bytes());
    h.update(b"\n");
    h.update(serde_json::to_string(&order).unwrap().as_bytes());
    for t in texts(gens) {
        h.update(b"\n");
        h.update(t.as_bytes());
    }
    hex::encode(h.finalize())
}

impl DiskCache {
    pub fn new(dir: PathBuf, paranoid: bool) -> Self {
        DiskCache { dir, paranoid }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn read_entry(&self, key: &str) -> Option<CacheEntry> {
        let s = fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&s).ok()
    }

    fn write_atomic(&self, key: &str, body: &str) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let nanos = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_nanos())
            .unwrap_or(0);
        let tmp = self
            .dir
            .join(format!(".{key}.{}.{nanos}.tmp", std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(body.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, self.path(key))
    }
}

impl BasisCache for DiskCache {
    fn lookup(
        &self,
        gens: &[Polynomial],
        space: VarSpace,
        order: TermOrder,
    ) -> Option<Vec<Polynomial>> {
        let key = digest(gens, space, order);
        let e = self.read_entry(&key)?;
        if e.key != key || e.space != space || e.order != order || e.generators != texts(gens) {
            return None;
        }
        e.basis.iter().map(|t| Polynomial::parse(t).ok()).collect()
    }

    fn store(&self, gens: &[Polynomial], space: VarSpace, order: TermOrder, basis: &[Polynomial]) {
        let key = digest(gens, space, order);
        let entry = CacheEntry {
            key: key.clone(),
            space,
            order,
            generators: texts(gens),
            basis: basis.iter().map(|f| f.to_text(order)).collect(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        };
        // A failed write only costs a recomputation later.
        let _ = self.write_atomic(
            &key,
            &serde_json::to_string_pretty(&entry).expect("serializable"),
        );
    }

    fn paranoid(&self) -> bool {
        self.paranoid
    }
}
