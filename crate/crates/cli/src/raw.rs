//! Flat `[section]` / `key = value` text. Comments start with `#`.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    /// `section.key`, or empty for syntax errors
    pub key: String,
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.key.is_empty()) {
            (Some(l), false) => write!(f, "line {l}: {}: {}", self.key, self.message),
            (Some(l), true) => write!(f, "line {l}: {}", self.message),
            (None, _) => write!(f, "{}: {}", self.key, self.message),
        }
    }
}

pub const SECTIONS: [&str; 6] = ["scenario", "params", "grid", "profile", "run", "output"];

#[derive(Debug, Clone)]
pub(crate) struct Entry {
    pub value: String,
    pub line: usize,
    pub used: bool,
}

/// Entries keyed by "section.key".
#[derive(Debug, Default)]
pub(crate) struct RawConfig {
    pub entries: BTreeMap<String, Entry>,
}

pub(crate) fn parse_raw(text: &str, errors: &mut Vec<ConfigError>) -> RawConfig {
    let mut raw = RawConfig::default();
    let mut section: Option<&str> = None;
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let line = strip_comment(line).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let Some(name) = name.strip_suffix(']') else {
                errors.push(ConfigError { key: String::new(), line: Some(ln), message: format!("malformed section header `{line}`") });
                continue;
            };
            let name = name.trim();
            match SECTIONS.iter().find(|s| **s == name) {
                Some(s) => section = Some(s),
                None => {
                    errors.push(ConfigError {
                        key: name.to_string(),
                        line: Some(ln),
                        message: format!("unknown section (expected one of {})", SECTIONS.join(", ")),
                    });
                    section = None;
                }
            }
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            errors.push(ConfigError { key: String::new(), line: Some(ln), message: format!("expected `key = value`, got `{line}`") });
            continue;
        };
        let (k, v) = (k.trim(), unquote(v.trim()));
        let Some(sec) = section else {
            errors.push(ConfigError { key: k.to_string(), line: Some(ln), message: "key outside a known section".into() });
            continue;
        };
        let full = format!("{sec}.{k}");
        if let Some(prev) = raw.entries.get(&full) {
            errors.push(ConfigError { key: full, line: Some(ln), message: format!("duplicate key (first set on line {})", prev.line) });
            continue;
        }
        raw.entries.insert(full, Entry { value: v.to_string(), line: ln, used: false });
    }
    raw
}

fn strip_comment(line: &str) -> &str {
    let mut quoted = false;
    for (i, c) in line.char_indices() {
        match c {
            '"' => quoted = !quoted,
            '#' if !quoted => return &line[..i],
            _ => {}
        }
    }
    line
}

fn unquote(v: &str) -> &str {
    v.strip_prefix('"').and_then(|s| s.strip_suffix('"')).unwrap_or(v)
}

/// Typed access that records every problem instead of stopping at the first.
pub(crate) struct Reader {
    raw: RawConfig,
    pub errors: Vec<ConfigError>,
}

impl Reader {
    pub fn new(raw: RawConfig, errors: Vec<ConfigError>) -> Self {
        Reader { raw, errors }
    }

    pub fn has(&self, key: &str) -> bool {
        self.raw.entries.contains_key(key)
    }

    fn take(&mut self, key: &str) -> Option<(String, usize)> {
        self.raw.entries.get_mut(key).map(|e| {
            e.used = true;
            (e.value.clone(), e.line)
        })
    }

    pub fn error(&mut self, key: &str, message: impl Into<String>) {
        let line = self.raw.entries.get(key).map(|e| e.line);
        self.errors.push(ConfigError { key: key.to_string(), line, message: message.into() });
    }

    pub fn string(&mut self, key: &str) -> Option<String> {
        self.take(key).map(|(v, _)| v)
    }

    /// Parsed value or `default`; `check` returns the valid-range text on failure.
    pub fn get<T: std::str::FromStr>(&mut self, key: &str, default: T, check: impl Fn(&T) -> Option<String>) -> T {
        let v = match self.take(key) {
            None => default,
            Some((s, _)) => match s.parse::<T>() {
                Ok(v) => v,
                Err(_) => {
                    self.error(key, format!("cannot parse `{s}` as {}", short_type::<T>()));
                    return default;
                }
            },
        };
        if let Some(msg) = check(&v) {
            self.error(key, msg);
        }
        v
    }

    pub fn required<T: std::str::FromStr>(&mut self, key: &str, check: impl Fn(&T) -> Option<String>) -> Option<T> {
        if !self.has(key) {
            self.error(key, "required key missing");
            return None;
        }
        let (s, _) = self.take(key)?;
        match s.parse::<T>() {
            Ok(v) => {
                if let Some(msg) = check(&v) {
                    self.error(key, msg);
                }
                Some(v)
            }
            Err(_) => {
                self.error(key, format!("cannot parse `{s}` as {}", short_type::<T>()));
                None
            }
        }
    }

    /// One of `choices`, or `default`.
    pub fn choice<'c>(&mut self, key: &str, choices: &[&'c str], default: &'c str) -> &'c str {
        match self.take(key) {
            None => default,
            Some((s, _)) => match choices.iter().find(|c| **c == s) {
                Some(c) => c,
                None => {
                    self.error(key, format!("`{s}` is not one of {}", choices.join(", ")));
                    default
                }
            },
        }
    }

    /// Every key not read by the schema is unknown for this scenario.
    pub fn finish(mut self) -> Vec<ConfigError> {
        for (k, e) in &self.raw.entries {
            if !e.used {
                self.errors.push(ConfigError { key: k.clone(), line: Some(e.line), message: "unknown key for this scenario".into() });
            }
        }
        self.errors.sort_by(|a, b| a.line.cmp(&b.line).then_with(|| a.key.cmp(&b.key)));
        self.errors
    }
}

fn short_type<T>() -> &'static str {
    let n = std::any::type_name::<T>();
    match n {
        "f64" => "a real number",
        "usize" | "u64" | "u32" => "a non-negative integer",
        _ => n,
    }
}

// range checks shared by the schema
pub(crate) fn positive(v: &f64) -> Option<String> {
    (!(*v > 0.0 && v.is_finite())).then(|| "must be positive".into())
}

pub(crate) fn non_negative(v: &f64) -> Option<String> {
    (!(*v >= 0.0 && v.is_finite())).then(|| "must be >= 0".into())
}

pub(crate) fn finite(v: &f64) -> Option<String> {
    (!v.is_finite()).then(|| "must be finite".into())
}

pub(crate) fn in_range(lo: f64, hi: f64, open_lo: bool, open_hi: bool) -> impl Fn(&f64) -> Option<String> {
    move |v| {
        let ok = (if open_lo { *v > lo } else { *v >= lo }) && (if open_hi { *v < hi } else { *v <= hi });
        (!ok).then(|| format!("must lie in {}{lo},{hi}{}", if open_lo { "(" } else { "[" }, if open_hi { ")" } else { "]" }))
    }
}

pub(crate) fn any<T>(_: &T) -> Option<String> {
    None
}
