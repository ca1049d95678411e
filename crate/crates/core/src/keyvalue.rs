//! Flat `key = value` text files.
//!
//! One entry per line, `#` starts a comment line, blank lines are ignored.
//! Used for the golden oracle constants and for CLI configuration files.

use std::collections::BTreeMap;

use crate::error::{HpmError, Result};

/// Parses `key = value` lines, preserving nothing but the final value of each key.
pub fn parse(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| HpmError::Parse {
            line: idx + 1,
            message: format!("expected `key = value`, got `{line}`"),
        })?;
        let key = key.trim();
        if key.is_empty() {
            return Err(HpmError::Parse { line: idx + 1, message: "empty key".into() });
        }
        out.insert(key.to_owned(), value.trim().to_owned());
    }
    Ok(out)
}

/// Renders entries sorted by key, each as `key = value`, with optional header comments.
pub fn render<'a>(
    header: &[&str],
    entries: impl IntoIterator<Item = (&'a str, String)>,
) -> String {
    let mut out = String::new();
    for h in header {
        out.push_str("# ");
        out.push_str(h);
        out.push('\n');
    }
    let sorted: BTreeMap<&str, String> = entries.into_iter().collect();
    for (k, v) in sorted {
        out.push_str(k);
        out.push_str(" = ");
        out.push_str(&v);
        out.push('\n');
    }
    out
}
