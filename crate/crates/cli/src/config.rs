//! Defaults from a `key = value` file. Command-line flags and environment
//! variables take precedence over the file, which takes precedence over the
//! built-in defaults.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::args::Format;

pub const DEFAULT_R: u64 = 4;
pub const DEFAULT_MAX_N: u64 = 12;
pub const DEFAULT_R_SET: [u64; 4] = [2, 3, 4, 5];

const KEYS: [&str; 5] = ["r", "order", "format", "max-n", "r-set"];

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Config {
    pub r: Option<u64>,
    pub order: Option<usize>,
    pub format: Option<Format>,
    pub max_n: Option<u64>,
    pub r_set: Option<Vec<u64>>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", i + 1))?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(format!("line {}: unknown key {key:?}", i + 1));
            }
            entries.insert(key.to_string(), value.trim().to_string());
        }
        let num = |key: &str| -> Result<Option<u64>, String> {
            entries
                .get(key)
                .map(|v| {
                    v.parse()
                        .map_err(|_| format!("{key}: expected an integer, got {v:?}"))
                })
                .transpose()
        };
        let format = match entries.get("format").map(String::as_str) {
            None => None,
            Some("text") => Some(Format::Text),
            Some("json") => Some(Format::Json),
            Some("csv") => Some(Format::Csv),
            Some(other) => {
                return Err(format!("format: expected text, json or csv, got {other:?}"))
            }
        };
        let r_set = entries
            .get("r-set")
            .map(|v| {
                v.split(',')
                    .map(|p| {
                        p.trim()
                            .parse()
                            .map_err(|_| format!("r-set: bad entry {p:?}"))
                    })
                    .collect::<Result<Vec<u64>, String>>()
            })
            .transpose()?;
        Ok(Self {
            r: num("r")?,
            order: num("order")?.map(|o| o as usize),
            format,
            max_n: num("max-n")?,
            r_set,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_known_keys() {
        let c =
            Config::parse("# defaults\nr = 5\norder=10\nformat = json\nr-set = 3, 4\n").unwrap();
        assert_eq!(c.r, Some(5));
        assert_eq!(c.order, Some(10));
        assert_eq!(c.format, Some(Format::Json));
        assert_eq!(c.r_set, Some(vec![3, 4]));
        assert_eq!(c.max_n, None);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(Config::parse("colour = red").is_err());
        assert!(Config::parse("r = four").is_err());
        assert!(Config::parse("format = xml").is_err());
        assert!(Config::parse("just text").is_err());
    }
}
