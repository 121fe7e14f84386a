//! OEIS b-file handling: parsing, a directory of reference snapshots, diffs
//! against computed sequences, and an opt-in network refresh.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

/// Environment variable naming the snapshot directory.
pub const SNAPSHOT_DIR_ENV: &str = "IMPARTIAL_OEIS_DIR";

/// Default remote location; `{id}` is the A-number, `{num}` its six digits.
pub const DEFAULT_URL_PATTERN: &str = "https://oeis.org/{id}/b{num}.txt";

/// The sequences bundled with the crate.
pub const BUNDLED_IDS: [&str; 6] = [
    "A002187", "A215721", "A274161", "A285304", "A285847", "A286332",
];

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("{id}: line {line}: {message}")]
    Malformed {
        id: String,
        line: usize,
        message: String,
    },
    #[error("{id}: index {found} follows {previous}; b-file indices must be contiguous")]
    NonContiguous {
        id: String,
        previous: i64,
        found: i64,
    },
    #[error("`{0}` is not an OEIS A-number")]
    InvalidId(String),
    #[error("no overlap between computed values and {0}")]
    EmptyOverlap(String),
    #[error("snapshot {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("network access is disabled; pass the explicit opt-in to fetch")]
    Offline,
    #[error("fetching {url}: {message}")]
    Network { url: String, message: String },
}

/// A parsed b-file: `(index, value)` pairs with contiguous indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub sequence_id: String,
    pub entries: Vec<(i64, i64)>,
}

impl BFile {
    pub fn first_index(&self) -> Option<i64> {
        self.entries.first().map(|e| e.0)
    }

    pub fn get(&self, index: i64) -> Option<i64> {
        let first = self.first_index()?;
        let pos = usize::try_from(index.checked_sub(first)?).ok()?;
        self.entries.get(pos).map(|e| e.1)
    }

    pub fn values(&self) -> Vec<i64> {
        self.entries.iter().map(|e| e.1).collect()
    }

    /// Renders `index value` lines.
    pub fn render(&self) -> String {
        self.entries
            .iter()
            .map(|(i, v)| format!("{i} {v}\n"))
            .collect()
    }
}

/// Parses b-file text. `#` comment lines and blank lines are ignored.
pub fn parse_bfile(sequence_id: &str, text: &str) -> Result<BFile, OeisError> {
    let mut entries: Vec<(i64, i64)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = |message: &str| OeisError::Malformed {
            id: sequence_id.to_string(),
            line: i + 1,
            message: message.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed("expected `index value`"));
        };
        let index: i64 = a
            .parse()
            .map_err(|_| malformed("index is not an integer"))?;
        let value: i64 = b
            .parse()
            .map_err(|_| malformed("value is not an integer"))?;
        if let Some(&(prev, _)) = entries.last() {
            if index != prev + 1 {
                return Err(OeisError::NonContiguous {
                    id: sequence_id.to_string(),
                    previous: prev,
                    found: index,
                });
            }
        }
        entries.push((index, value));
    }
    Ok(BFile {
        sequence_id: sequence_id.to_string(),
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: i64,
    pub expected: i64,
    pub actual: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub sequence_id: String,
    /// Inclusive range of reference indices compared.
    pub compared: (i64, i64),
    pub mismatches: Vec<Mismatch>,
}

impl DiffReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        writeln!(
            f,
            "{} indices {}..={}: {} ({} mismatches)",
            self.sequence_id,
            self.compared.0,
            self.compared.1,
            status,
            self.mismatches.len()
        )?;
        for m in &self.mismatches {
            writeln!(
                f,
                "  index {}: expected {}, computed {}",
                m.index, m.expected, m.actual
            )?;
        }
        Ok(())
    }
}

/// Compares `computed[k]` (whose own index is `first_index + k`) against the
/// reference entry at `first_index + k + offset`, over the overlap.
pub fn compare(
    computed: &[i64],
    first_index: i64,
    reference: &BFile,
    offset: i64,
) -> Result<DiffReport, OeisError> {
    let mut mismatches = Vec::new();
    let mut range: Option<(i64, i64)> = None;
    for (k, &actual) in computed.iter().enumerate() {
        let ref_index = first_index + k as i64 + offset;
        let Some(expected) = reference.get(ref_index) else {
            continue;
        };
        range = Some(match range {
            None => (ref_index, ref_index),
            Some((lo, _)) => (lo, ref_index),
        });
        if expected != actual {
            mismatches.push(Mismatch {
                index: ref_index,
                expected,
                actual,
            });
        }
    }
    let compared = range.ok_or_else(|| OeisError::EmptyOverlap(reference.sequence_id.clone()))?;
    Ok(DiffReport {
        sequence_id: reference.sequence_id.clone(),
        compared,
        mismatches,
    })
}

fn validate_id(id: &str) -> Result<&str, OeisError> {
    let digits = id
        .strip_prefix('A')
        .filter(|d| d.len() == 6 && d.bytes().all(|b| b.is_ascii_digit()));
    digits.ok_or_else(|| OeisError::InvalidId(id.to_string()))
}

/// Directory of `bNNNNNN.txt` snapshot files.
#[derive(Debug, Clone)]
pub struct SnapshotStore {
    dir: PathBuf,
}

impl SnapshotStore {
    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// The snapshots shipped in the crate's `data/oeis` directory.
    pub fn bundled() -> Self {
        Self::at(concat!(env!("CARGO_MANIFEST_DIR"), "/data/oeis"))
    }

    /// `$IMPARTIAL_OEIS_DIR` when set, the bundled directory otherwise.
    pub fn from_env() -> Self {
        match std::env::var_os(SNAPSHOT_DIR_ENV) {
            Some(dir) => Self::at(dir),
            None => Self::bundled(),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, id: &str) -> Result<PathBuf, OeisError> {
        let digits = validate_id(id)?;
        Ok(self.dir.join(format!("b{digits}.txt")))
    }

    pub fn load(&self, id: &str) -> Result<BFile, OeisError> {
        let path = self.path_for(id)?;
        let text = fs::read_to_string(&path).map_err(|source| OeisError::Io { path, source })?;
        parse_bfile(id, &text)
    }

    /// Writes `text` beside the target and renames it into place, so a
    /// reader never sees a partial file.
    fn replace(&self, id: &str, text: &str) -> Result<(), OeisError> {
        let path = self.path_for(id)?;
        let tmp = path.with_extension("txt.partial");
        let io = |source| OeisError::Io {
            path: tmp.clone(),
            source,
        };
        let mut file = fs::File::create(&tmp).map_err(io)?;
        file.write_all(text.as_bytes()).map_err(io)?;
        file.sync_all().map_err(io)?;
        fs::rename(&tmp, &path).map_err(|source| OeisError::Io { path, source })
    }
}

/// Downloads the b-file for `id` and replaces the snapshot. Nothing is
/// touched unless the download succeeds and parses.
pub fn fetch_remote(
    store: &SnapshotStore,
    id: &str,
    allow_network: bool,
    url_pattern: &str,
) -> Result<BFile, OeisError> {
    let digits = validate_id(id)?;
    if !allow_network {
        return Err(OeisError::Offline);
    }
    let url = url_pattern.replace("{id}", id).replace("{num}", digits);
    let net = |message: String| OeisError::Network {
        url: url.clone(),
        message,
    };
    let response = reqwest::blocking::get(&url).map_err(|e| net(e.to_string()))?;
    if !response.status().is_success() {
        return Err(net(format!("HTTP {}", response.status())));
    }
    let text = response.text().map_err(|e| net(e.to_string()))?;
    let parsed = parse_bfile(id, &text)?;
    if parsed.entries.is_empty() {
        return Err(net("empty b-file".into()));
    }
    store.replace(id, &text)?;
    Ok(parsed)
}
