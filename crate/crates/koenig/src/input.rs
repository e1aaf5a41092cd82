//! graph6 line sources: standard input or a sequence of files, each of which
//! may be gzip-compressed (`.gz`).

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::{Path, PathBuf};

use flate2::read::MultiGzDecoder;
use sha2::{Digest, Sha256};

use crate::error::HarnessError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    Stdin,
    /// Files read one after another; line numbers run across all of them.
    Files(Vec<PathBuf>),
}

impl InputSource {
    pub fn file(path: impl Into<PathBuf>) -> Self {
        InputSource::Files(vec![path.into()])
    }

    pub fn open(&self) -> Result<Box<dyn BufRead>, HarnessError> {
        match self {
            InputSource::Stdin => Ok(Box::new(BufReader::new(io::stdin()))),
            InputSource::Files(paths) => {
                let mut chained: Box<dyn Read> = Box::new(io::empty());
                for path in paths {
                    chained = Box::new(chained.chain(open_file(path)?));
                }
                Ok(Box::new(BufReader::with_capacity(1 << 16, chained)))
            }
        }
    }

    /// SHA-256 over the raw bytes of every input file, in order. Standard
    /// input cannot be re-read, so it has no digest.
    pub fn digest(&self) -> Result<Option<String>, HarnessError> {
        let InputSource::Files(paths) = self else {
            return Ok(None);
        };
        let mut hasher = Sha256::new();
        let mut buf = vec![0u8; 1 << 16];
        for path in paths {
            let mut f = File::open(path).map_err(|source| HarnessError::Input {
                path: path.clone(),
                source,
            })?;
            loop {
                let k = f.read(&mut buf)?;
                if k == 0 {
                    break;
                }
                hasher.update(&buf[..k]);
            }
        }
        Ok(Some(hex::encode(hasher.finalize())))
    }
}

fn open_file(path: &Path) -> Result<Box<dyn Read>, HarnessError> {
    let f = File::open(path).map_err(|source| HarnessError::Input {
        path: path.to_path_buf(),
        source,
    })?;
    if path.extension().is_some_and(|e| e == "gz") {
        Ok(Box::new(MultiGzDecoder::new(BufReader::new(f))))
    } else {
        Ok(Box::new(f))
    }
}
