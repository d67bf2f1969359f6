//! Append-only JSONL store of verdicts keyed by form type and partition.
//!
//! Each line is `{"key":"-1:6,1,1","verdict":{…}}`. Lines that fail to
//! parse, or whose verdict does not match its key, are skipped and reported
//! through [`VerdictCache::warnings`].

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::normality::NormalityVerdict;
use crate::partitions::EpsDiagram;

pub fn cache_key(eta: &EpsDiagram) -> String {
    format!("{}:{}", eta.eps().sign(), eta.partition())
}

#[derive(Serialize, Deserialize)]
struct Line {
    key: String,
    verdict: NormalityVerdict,
}

#[derive(Debug)]
pub struct VerdictCache {
    path: PathBuf,
    entries: HashMap<String, NormalityVerdict>,
    warnings: Vec<String>,
}

impl VerdictCache {
    /// Reads `path` if it exists; a missing file is an empty cache.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        let mut warnings = Vec::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (lineno, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<Line>(&line) {
                    Ok(entry) if entry.key == cache_key(&entry.verdict.eta) => {
                        entries.insert(entry.key, entry.verdict);
                    }
                    Ok(entry) => warnings.push(format!(
                        "{}:{}: key {:?} does not match its verdict; ignored",
                        path.display(),
                        lineno + 1,
                        entry.key
                    )),
                    Err(e) => warnings.push(format!(
                        "{}:{}: unparseable cache line ignored ({e})",
                        path.display(),
                        lineno + 1
                    )),
                }
            }
        }
        Ok(VerdictCache {
            path,
            entries,
            warnings,
        })
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, eta: &EpsDiagram) -> Option<&NormalityVerdict> {
        self.entries.get(&cache_key(eta))
    }

    /// Appends verdicts not already present, one line each.
    pub fn insert_all<'a>(&mut self, verdicts: impl IntoIterator<Item = &'a NormalityVerdict>) -> Result<()> {
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        for verdict in verdicts {
            let key = cache_key(&verdict.eta);
            if self.entries.contains_key(&key) {
                continue;
            }
            let line = serde_json::to_string(&Line {
                key: key.clone(),
                verdict: verdict.clone(),
            })?;
            writeln!(file, "{line}")?;
            self.entries.insert(key, verdict.clone());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normality::decide;
    use crate::partitions::{FormType, Partition};

    fn diagram(parts: &[usize], eps: FormType) -> EpsDiagram {
        EpsDiagram::new(Partition::new(parts.to_vec()).unwrap(), eps).unwrap()
    }

    #[test]
    fn cached_verdicts_are_identical() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let eta = diagram(&[7, 2, 2], FormType::Orthogonal);
        let fresh = decide(&eta).unwrap();

        let mut cache = VerdictCache::open(&path).unwrap();
        assert!(cache.is_empty());
        cache.insert_all([&fresh]).unwrap();
        cache.insert_all([&fresh]).unwrap();

        let reopened = VerdictCache::open(&path).unwrap();
        assert_eq!(reopened.len(), 1);
        let cached = reopened.get(&eta).unwrap();
        assert_eq!(
            serde_json::to_string(cached).unwrap(),
            serde_json::to_string(&fresh).unwrap()
        );
    }

    #[test]
    fn corrupt_lines_are_skipped_with_a_warning() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let eta = diagram(&[6, 1, 1], FormType::Symplectic);
        let mut cache = VerdictCache::open(&path).unwrap();
        cache.insert_all([&decide(&eta).unwrap()]).unwrap();
        let mut f = OpenOptions::new().append(true).open(&path).unwrap();
        writeln!(f, "{{not json").unwrap();
        writeln!(f, r#"{{"key":"1:6,1,1","verdict":{{}}}}"#).unwrap();
        drop(f);

        let reopened = VerdictCache::open(&path).unwrap();
        assert_eq!(reopened.len(), 1);
        assert_eq!(reopened.warnings().len(), 2);
        assert!(reopened.get(&eta).is_some());
    }
}
