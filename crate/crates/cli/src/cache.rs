//! Plain-file result cache. Each entry is a JSON file named by the SHA-256 of
//! the command, its canonical flags and the library version.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    output: String,
}

pub fn key(command: &str, flags: &[(&str, String)]) -> String {
    let mut flags = flags.to_vec();
    flags.sort();
    let canonical: Vec<String> = flags.iter().map(|(k, v)| format!("--{k}={v}")).collect();
    format!(
        "{command} {} v{}",
        canonical.join(" "),
        env!("CARGO_PKG_VERSION")
    )
}

fn path(dir: &Path, key: &str) -> std::path::PathBuf {
    dir.join(format!(
        "{}.json",
        hex::encode(Sha256::digest(key.as_bytes()))
    ))
}

pub fn load(dir: &Path, key: &str) -> Option<String> {
    let text = fs::read_to_string(path(dir, key)).ok()?;
    let entry: Entry = serde_json::from_str(&text).ok()?;
    (entry.key == key).then_some(entry.output)
}

/// Write atomically: a temporary file in the same directory, then rename.
pub fn store(dir: &Path, key: &str, output: &str) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let entry = Entry {
        key: key.to_string(),
        output: output.to_string(),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(serde_json::to_string(&entry)?.as_bytes())?;
    tmp.persist(path(dir, key)).map_err(|e| e.error)?;
    Ok(())
}
