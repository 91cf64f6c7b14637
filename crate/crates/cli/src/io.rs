use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{Context, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Read a JSON file; `-` reads standard input. Parse errors carry line and
/// column from serde_json.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output types serialize")
}

/// Write `v` to `out`, or return it for standard output.
pub fn write_or_return<T: Serialize>(v: &T, out: Option<&Path>) -> Result<Option<String>> {
    let text = to_json(v);
    match out {
        Some(p) => {
            fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display()))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}
