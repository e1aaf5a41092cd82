//! Resumable progress records.
//!
//! A checkpoint stores the input digest, a fingerprint of the settings that
//! affect results, the number of input lines consumed and the running tally.
//! Resuming against different input or settings is refused.

use std::fs;
use std::io::ErrorKind;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::HarnessError;
use crate::tally::Tally;

pub const CHECKPOINT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub version: u32,
    pub input_sha256: String,
    pub settings: String,
    pub lines_consumed: usize,
    pub complete: bool,
    pub tally: Tally,
}

fn fail(path: &Path, reason: impl Into<String>) -> HarnessError {
    HarnessError::Checkpoint {
        path: path.to_path_buf(),
        reason: reason.into(),
    }
}

impl Checkpoint {
    /// `Ok(None)` when no checkpoint exists yet.
    pub fn load(path: &Path) -> Result<Option<Self>, HarnessError> {
        let text = match fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(fail(path, e.to_string())),
        };
        let cp: Checkpoint =
            serde_json::from_str(&text).map_err(|e| fail(path, format!("corrupt: {e}")))?;
        if cp.version != CHECKPOINT_VERSION {
            return Err(fail(
                path,
                format!("version {} is not {CHECKPOINT_VERSION}", cp.version),
            ));
        }
        Ok(Some(cp))
    }

    pub fn ensure_matches(
        &self,
        path: &Path,
        digest: &str,
        settings: &str,
    ) -> Result<(), HarnessError> {
        if self.input_sha256 != digest {
            return Err(fail(
                path,
                format!(
                    "input digest {} does not match checkpoint digest {}",
                    digest, self.input_sha256
                ),
            ));
        }
        if self.settings != settings {
            return Err(fail(
                path,
                format!(
                    "settings `{settings}` differ from checkpoint `{}`",
                    self.settings
                ),
            ));
        }
        Ok(())
    }

    /// Writes to a sibling temporary file and renames it into place.
    pub fn store(&self, path: &Path) -> Result<(), HarnessError> {
        let mut tmp = PathBuf::from(path);
        tmp.as_mut_os_string().push(".tmp");
        let text = serde_json::to_string(self)?;
        fs::write(&tmp, text).map_err(|e| fail(path, e.to_string()))?;
        fs::rename(&tmp, path).map_err(|e| fail(path, e.to_string()))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Checkpoint {
        Checkpoint {
            version: CHECKPOINT_VERSION,
            input_sha256: "ab".repeat(32),
            settings: "filters=connected".into(),
            lines_consumed: 42,
            complete: false,
            tally: Tally::default(),
        }
    }

    #[test]
    fn store_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.ckpt");
        assert_eq!(Checkpoint::load(&path).unwrap(), None);
        sample().store(&path).unwrap();
        assert_eq!(Checkpoint::load(&path).unwrap(), Some(sample()));
    }

    #[test]
    fn refuses_corrupt_or_foreign_checkpoints() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.ckpt");
        fs::write(&path, "{ not json").unwrap();
        assert!(matches!(
            Checkpoint::load(&path),
            Err(HarnessError::Checkpoint { .. })
        ));

        let mut old = sample();
        old.version = 0;
        old.store(&path).unwrap();
        assert!(Checkpoint::load(&path).is_err());

        let cp = sample();
        assert!(cp
            .ensure_matches(&path, &"ab".repeat(32), "filters=connected")
            .is_ok());
        assert!(cp
            .ensure_matches(&path, &"cd".repeat(32), "filters=connected")
            .is_err());
        assert!(cp
            .ensure_matches(&path, &"ab".repeat(32), "filters=")
            .is_err());
    }
}
