//! Writing Macaulay2 verification scripts to disk.

use std::fs;
use std::io::BufRead;
use std::path::{Path, PathBuf};

use koenig_core::algebra::emit_algebra_script;
use koenig_core::parse_graph6;

use crate::error::HarnessError;
use crate::input::InputSource;

/// A file name derived from a graph6 string. ASCII alphanumerics are kept;
/// every other byte, `_` included, becomes `_` followed by two hex digits,
/// so distinct strings give distinct names.
pub fn script_file_name(graph6: &str) -> String {
    let mut name = String::from("g6_");
    for b in graph6.bytes() {
        if b.is_ascii_alphanumeric() {
            name.push(b as char);
        } else {
            name.push_str(&format!("_{b:02x}"));
        }
    }
    name.push_str(".m2");
    name
}

/// Writes one script per non-blank input line into `out_dir` and returns the
/// paths in input order. Any malformed or unsupported line is an error.
pub fn write_scripts(input: &InputSource, out_dir: &Path) -> Result<Vec<PathBuf>, HarnessError> {
    fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();
    for (i, text) in input.open()?.lines().enumerate() {
        let text = text?;
        let text = text.trim_end();
        if text.is_empty() {
            continue;
        }
        let line = i + 1;
        let g = parse_graph6(text).map_err(|source| HarnessError::Malformed { line, source })?;
        let script =
            emit_algebra_script(&g).map_err(|source| HarnessError::Unsupported { line, source })?;
        let path = out_dir.join(script_file_name(text));
        fs::write(&path, script)?;
        written.push(path);
    }
    Ok(written)
}
