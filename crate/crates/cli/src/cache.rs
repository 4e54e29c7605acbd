//! On-disk cache for character tables, keyed by n and the cache format
//! version. Anything unreadable or stale is ignored and rebuilt; cache
//! writes are best-effort.

use std::env;
use std::fs;
use std::path::PathBuf;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use symchar_core::char_tables::CharTable;
use symchar_core::linalg::IntMatrix;
use symchar_core::partitions::Partition;

pub const CACHE_FORMAT_VERSION: u32 = 1;

/// Serialized square table with labels; also the machine output format for
/// table commands. Integers as decimal strings.
#[derive(Serialize, Deserialize)]
pub struct TableDoc {
    pub format_version: u32,
    pub n: u32,
    pub labels: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl TableDoc {
    pub fn new(n: u32, labels: &[Partition], values: &IntMatrix) -> TableDoc {
        TableDoc {
            format_version: CACHE_FORMAT_VERSION,
            n,
            labels: labels.iter().map(|l| l.to_string()).collect(),
            rows: (0..values.rows())
                .map(|r| values.row(r).iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }

    fn into_table(self) -> Option<CharTable> {
        if self.format_version != CACHE_FORMAT_VERSION {
            return None;
        }
        let labels: Vec<Partition> = self
            .labels
            .iter()
            .map(|s| s.parse().ok())
            .collect::<Option<_>>()?;
        let size = labels.len();
        if self.rows.len() != size || self.rows.iter().any(|r| r.len() != size) {
            return None;
        }
        let mut values = IntMatrix::zero(size, size);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                values[(r, c)] = entry.parse::<BigInt>().ok()?;
            }
        }
        CharTable::from_parts(self.n, labels, values).ok()
    }
}

pub fn cache_dir() -> PathBuf {
    if let Ok(dir) = env::var("SYMCHAR_CACHE_DIR") {
        return PathBuf::from(dir);
    }
    if let Ok(dir) = env::var("XDG_CACHE_HOME") {
        return PathBuf::from(dir).join("symchar");
    }
    if let Ok(home) = env::var("HOME") {
        return PathBuf::from(home).join(".cache").join("symchar");
    }
    env::temp_dir().join("symchar-cache")
}

pub fn cache_path(n: u32) -> PathBuf {
    cache_dir().join(format!("chartable-v{CACHE_FORMAT_VERSION}-n{n}.json"))
}

/// Character table of S_n, from the cache when possible.
pub fn load_or_build(n: u32) -> Result<CharTable, symchar_core::Error> {
    if let Some(table) = try_load(n) {
        return Ok(table);
    }
    let table = CharTable::build(n)?;
    let _ = store(&table);
    Ok(table)
}

fn try_load(n: u32) -> Option<CharTable> {
    let text = fs::read_to_string(cache_path(n)).ok()?;
    let doc: TableDoc = serde_json::from_str(&text).ok()?;
    if doc.n != n {
        return None;
    }
    doc.into_table()
}

pub fn store(table: &CharTable) -> std::io::Result<()> {
    let dir = cache_dir();
    fs::create_dir_all(&dir)?;
    let doc = TableDoc::new(table.n(), table.labels(), table.values());
    let text = serde_json::to_string_pretty(&doc).expect("serializable");
    fs::write(cache_path(table.n()), text)
}
