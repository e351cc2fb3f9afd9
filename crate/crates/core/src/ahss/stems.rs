use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::AbelianGroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("stems config line {line}: {message}")]
pub struct StemParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StemEntry {
    pub group: AbelianGroup,
    pub label: String,
    /// Set for entries read from a config file rather than the built-in table.
    pub user_supplied: bool,
}

/// Coefficient rows `π^q_st(pt)` for `q <= 0`, indexed cohomologically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StemTable {
    entries: BTreeMap<i64, StemEntry>,
    /// Known relations between generators. Informational only.
    relations: Vec<String>,
}

fn builtin(q: i64) -> Option<(AbelianGroup, &'static str)> {
    match q {
        0 => Some((AbelianGroup::z(), "1")),
        -1 => Some((AbelianGroup::cyclic(2), "η")),
        -2 => Some((AbelianGroup::cyclic(2), "η²")),
        -3 => Some((AbelianGroup::cyclic(24), "ν")),
        _ => None,
    }
}

impl Default for StemTable {
    fn default() -> Self {
        Self::standard()
    }
}

impl StemTable {
    /// The stems through `q = -3`: `Z`, `Z2{η}`, `Z2{η²}`, `Z24{ν}`.
    pub fn standard() -> Self {
        let entries = (-3..=0)
            .map(|q| {
                let (group, label) = builtin(q).expect("built-in range");
                (q, StemEntry { group, label: label.to_string(), user_supplied: false })
            })
            .collect();
        StemTable { entries, relations: vec!["η³ = 12ν".to_string()] }
    }

    pub fn empty() -> Self {
        StemTable { entries: BTreeMap::new(), relations: Vec::new() }
    }

    /// The group in row `q`; rows with `q > 0` are zero.
    pub fn group(&self, q: i64) -> Option<AbelianGroup> {
        if q > 0 {
            return Some(AbelianGroup::trivial());
        }
        self.entries.get(&q).map(|e| e.group.clone())
    }

    pub fn entry(&self, q: i64) -> Option<&StemEntry> {
        self.entries.get(&q)
    }

    pub fn relations(&self) -> &[String] {
        &self.relations
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, &StemEntry)> {
        self.entries.iter().map(|(&q, e)| (q, e))
    }

    /// Lowest `q` such that every row in `q..=0` is defined.
    pub fn lowest_contiguous(&self) -> i64 {
        let mut q = 0;
        while self.entries.contains_key(&(q - 1)) {
            q -= 1;
        }
        if self.entries.contains_key(&0) {
            q
        } else {
            1
        }
    }

    /// True when row `q` carries the same group as the built-in table.
    pub fn is_standard_row(&self, q: i64) -> bool {
        match (builtin(q), self.entries.get(&q)) {
            (Some((g, _)), Some(e)) => g == e.group,
            _ => false,
        }
    }

    pub fn insert(&mut self, q: i64, group: AbelianGroup, label: impl Into<String>) {
        self.entries.insert(q, StemEntry { group, label: label.into(), user_supplied: true });
    }

    /// Parses `q|factors|label` lines; `#` starts a comment line. Factors are
    /// comma-separated cyclic orders with `0` for `Z`; an empty list is the
    /// trivial group.
    pub fn parse(text: &str) -> Result<Self, StemParseError> {
        let mut table = StemTable::empty();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| StemParseError { line, message };
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split('|').collect();
            let [q, factors, label] = fields.as_slice() else {
                return Err(err(format!("expected 3 '|'-separated fields, found {}", fields.len())));
            };
            let q: i64 = q.trim().parse().map_err(|_| err(format!("bad degree {q:?}")))?;
            if q > 0 {
                return Err(err(format!("degree {q} is positive; rows above 0 are always zero")));
            }
            let mut orders = Vec::new();
            for f in factors.split(',').map(str::trim).filter(|f| !f.is_empty()) {
                let n: u64 = f.parse().map_err(|_| err(format!("bad invariant factor {f:?}")))?;
                orders.push(n);
            }
            if table.entries.contains_key(&q) {
                return Err(err(format!("degree {q} listed twice")));
            }
            table.insert(q, AbelianGroup::from_cyclic_orders(&orders), label.trim());
        }
        Ok(table)
    }

    /// The built-in table with the parsed rows layered on top.
    pub fn standard_with(text: &str) -> Result<Self, StemParseError> {
        let mut table = Self::standard();
        let extra = Self::parse(text)?;
        table.entries.extend(extra.entries);
        Ok(table)
    }

    pub fn load(path: &Path) -> Result<Self, StemParseError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| StemParseError { line: 0, message: format!("{}: {e}", path.display()) })?;
        Self::standard_with(&text)
    }
}
