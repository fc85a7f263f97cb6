//! Range syntax and the key-value config file.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

/// Parses `a..b` (inclusive), `a..=b`, `a,b,c` or a single value. `a..b` with
/// `a > b` is empty.
pub fn parse_range(s: &str) -> Result<Vec<i64>, String> {
    let s = s.trim();
    let num = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("bad number '{x}' in '{s}': {e}"));
    if let Some((a, b)) = split_dots(s) {
        let (a, b) = (num(a)?, num(b)?);
        return Ok((a..=b).collect());
    }
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(num).collect()
}

/// [`parse_range`] restricted to nonnegative values.
pub fn parse_range_usize(s: &str) -> Result<Vec<usize>, String> {
    parse_range(s)?
        .into_iter()
        .map(|v| usize::try_from(v).map_err(|_| format!("negative value {v} in '{s}'")))
        .collect()
}

fn split_dots(s: &str) -> Option<(&str, &str)> {
    let i = s.find("..")?;
    let rest = &s[i + 2..];
    Some((&s[..i], rest.strip_prefix('=').unwrap_or(rest)))
}

/// `key = value` lines; `#` starts a comment. Keys use the long flag names.
#[derive(Debug, Default, Clone)]
pub struct Config {
    values: BTreeMap<String, String>,
}

pub const CONFIG_KEYS: &[&str] = &["order", "m", "k", "h", "n", "family", "format", "out", "jobs", "thm", "variant", "timings"];

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut values = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!("config line {}: expected key = value", lineno + 1));
            };
            let key = key.trim().trim_start_matches("--").replace('_', "-");
            if !CONFIG_KEYS.contains(&key.as_str()) {
                return Err(format!("config line {}: unknown key '{key}'", lineno + 1));
            }
            values.insert(key, value.trim().to_string());
        }
        Ok(Config { values })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// The flag value if given, otherwise the config value.
    pub fn pick(&self, flag: Option<&String>, key: &str) -> Option<String> {
        flag.cloned().or_else(|| self.get(key).map(str::to_string))
    }
}
