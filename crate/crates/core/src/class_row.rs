use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The class row `(c1, ..., ct)` of a polynilpotent variety.
///
/// `c1` is the innermost class: the verbal subgroup is
/// `gamma_{ct+1}( ... gamma_{c1+1}(F) ... )`. A row of `l` ones is the
/// variety of solvable groups of derived length at most `l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassRow(Vec<u32>);

impl ClassRow {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::invalid("class row must have at least one entry"));
        }
        if let Some(pos) = entries.iter().position(|&c| c == 0) {
            return Err(Error::invalid(format!(
                "class row entry {} is 0; every class must be at least 1",
                pos + 1
            )));
        }
        Ok(ClassRow(entries))
    }

    /// The row `(c)` of a single nilpotent class.
    pub fn nilpotent(c: u32) -> Result<Self> {
        if c == 0 {
            return Err(Error::invalid("nilpotency class must be at least 1"));
        }
        Ok(ClassRow(vec![c]))
    }

    /// The all-ones row of length `l`.
    pub fn solvable(l: u32) -> Result<Self> {
        if l == 0 {
            return Err(Error::invalid("solvable length must be at least 1"));
        }
        Ok(ClassRow(vec![1; l as usize]))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Commutator weights `c_i + 1`, innermost first.
    pub fn weights(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|&c| c + 1)
    }
}

impl fmt::Display for ClassRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for ClassRow {
    type Err = Error;

    /// Parses `c1,c2,...`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        if inner.trim().is_empty() {
            return Err(Error::invalid("class row must have at least one entry"));
        }
        let entries = inner
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::invalid(format!("class row entry {:?} is not a positive integer", part.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        ClassRow::new(entries)
    }
}
