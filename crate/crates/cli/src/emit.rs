//! Output plumbing: the text/JSON stream and guarded file writes.

use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Serialize;

use crate::CliError;

/// Separates the human-readable part of a text report from its JSON block.
pub const SENTINEL: &str = "---- equitri json ----";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable text, then the sentinel line, then the JSON block.
    Text,
    /// The JSON block only.
    Json,
}

pub fn render<T: Serialize>(format: Format, text: &str, value: &T) -> String {
    let json = serde_json::to_string_pretty(value).expect("reports serialize");
    match format {
        Format::Json => format!("{json}\n"),
        Format::Text => {
            let mut out = text.to_string();
            if !out.is_empty() && !out.ends_with('\n') {
                out.push('\n');
            }
            out.push_str(SENTINEL);
            out.push('\n');
            out.push_str(&json);
            out.push('\n');
            out
        }
    }
}

pub fn emit<T: Serialize>(format: Format, text: &str, value: &T) {
    print!("{}", render(format, text, value));
}

/// Refuses to replace existing files unless `force` is set. All targets are
/// checked before anything is written.
pub fn write_files(files: &[(PathBuf, String)], force: bool) -> Result<(), CliError> {
    if !force {
        if let Some((p, _)) = files.iter().find(|(p, _)| p.exists()) {
            return Err(CliError::Input(format!(
                "{} exists; pass --force to overwrite",
                p.display()
            )));
        }
    }
    for (p, body) in files {
        fs::write(p, body).map_err(|source| CliError::Io {
            path: p.clone(),
            source,
        })?;
    }
    Ok(())
}

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}
