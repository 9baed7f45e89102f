//! Flat `key = value` configuration files.
//!
//! Each key names a flag of the subcommand (`grid = "96x302"` acts like
//! `--grid 96x302`). Booleans switch flags on, arrays repeat the flag. The
//! synthesized flags are placed before the command-line ones, so explicit
//! flags override the file.

use std::ffi::OsString;
use std::path::Path;

use anyhow::{bail, Context, Result};

const SUBCOMMANDS: [&str; 4] = ["apele", "diag", "corr", "grid-dump"];

pub fn config_flags(text: &str) -> Result<Vec<String>> {
    let table: toml::Table = text.parse().context("config is not valid key = value syntax")?;
    let mut out = Vec::new();
    for (key, value) in &table {
        if key == "config" {
            bail!("config files cannot include other config files");
        }
        let flag = format!("--{}", key.replace('_', "-"));
        let scalar = |v: &toml::Value| -> Result<String> {
            Ok(match v {
                toml::Value::String(s) => s.clone(),
                toml::Value::Integer(i) => i.to_string(),
                toml::Value::Float(f) => f.to_string(),
                other => bail!("unsupported value for '{key}': {other}"),
            })
        };
        match value {
            toml::Value::Boolean(true) => out.push(flag),
            toml::Value::Boolean(false) => {}
            toml::Value::Array(items) => {
                for item in items {
                    out.push(flag.clone());
                    out.push(scalar(item)?);
                }
            }
            toml::Value::Table(_) => bail!("'{key}': nested tables are not supported"),
            v => {
                out.push(flag);
                out.push(scalar(v)?);
            }
        }
    }
    Ok(out)
}

/// Inserts the flags from `path` right after the subcommand name in `args`.
pub fn expand_args(args: &[OsString], path: &Path) -> Result<Vec<OsString>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config file {}", path.display()))?;
    let flags = config_flags(&text).with_context(|| format!("in {}", path.display()))?;
    let pos = args
        .iter()
        .position(|a| a.to_str().is_some_and(|s| SUBCOMMANDS.contains(&s)))
        .context("no subcommand found")?;
    let mut out: Vec<OsString> = args[..=pos].to_vec();
    out.extend(flags.into_iter().map(OsString::from));
    out.extend_from_slice(&args[pos + 1..]);
    Ok(out)
}
