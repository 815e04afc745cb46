//! Loading groups and naming their elements on the command line.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use automizer_core::catalog::find_entry;
use automizer_core::group::{format_cycles, parse_permutation, PermutationGroupJson};
use automizer_core::{Caps, Group};

use crate::Cli;

/// Reads a group from a JSON file (a Cayley table or permutation
/// generators), or else looks the text up as a catalog entry name.
pub fn load_group(cli: &Cli, source: &str, caps: &Caps) -> Result<Group> {
    let path = Path::new(source);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {source}"))?;
        let value: serde_json::Value = serde_json::from_str(&text).with_context(|| format!("parsing {source}"))?;
        let group = if value.get("generators").is_some() {
            let spec: PermutationGroupJson = serde_json::from_value(value)?;
            spec.build(caps)?
        } else {
            serde_json::from_value::<Group>(value).with_context(|| format!("invalid group in {source}"))?
        };
        return Ok(group);
    }
    let catalog = cli.load_catalog(caps)?;
    match find_entry(&catalog, source) {
        Some(entry) => Ok(entry.group.clone()),
        None => bail!("{source:?} is neither a file nor a catalog entry"),
    }
}

/// Finds an element by exact label, by permutation (matched through its
/// cycle form), or by index.
pub fn resolve_element(g: &Group, text: &str) -> Result<usize> {
    if let Some(a) = g.find_label(text) {
        return Ok(a);
    }
    let degree = text.split(|c: char| !c.is_ascii_digit()).filter_map(|s| s.parse::<usize>().ok()).max().unwrap_or(1);
    if let Ok(p) = parse_permutation(degree, text) {
        if let Some(a) = g.find_label(&format_cycles(&p)) {
            return Ok(a);
        }
    }
    match text.parse::<usize>() {
        Ok(a) if a < g.order() => Ok(a),
        _ => Err(anyhow!("{text:?} is not an element of the group")),
    }
}
