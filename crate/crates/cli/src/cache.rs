//! Plain-text cache for set enumerations.
//!
//! The first line names the set, bound and mode; each further line is
//! `value<TAB>certificate-json`. Loaded certificates are checked against a
//! fresh membership test, so a hand-edited file cannot smuggle in values.

use std::fs;
use std::io::{self, ErrorKind};

use lefschetz_core::sets::{membership, SetTag};
use lefschetz_core::MembershipCertificate;

pub(crate) struct CacheKey {
    pub tag: SetTag,
    pub bound: u64,
    pub doubled: bool,
}

impl CacheKey {
    fn header(&self) -> String {
        format!(
            "# lefschetz sets cache: set={} bound={} doubled={}",
            self.tag.as_str(),
            self.bound,
            self.doubled
        )
    }
}

fn invalid(msg: String) -> io::Error {
    io::Error::new(ErrorKind::InvalidData, msg)
}

/// `Ok(None)` when the file is absent or was written for other parameters.
pub(crate) fn load(path: &str, key: &CacheKey) -> io::Result<Option<Vec<(u64, MembershipCertificate)>>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut lines = text.lines();
    if lines.next() != Some(key.header().as_str()) {
        return Ok(None);
    }
    let mut out = Vec::new();
    for (n, line) in lines.enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let lineno = n + 2;
        let (value, stored) = line
            .split_once('\t')
            .ok_or_else(|| invalid(format!("line {lineno}: expected value<TAB>certificate")))?;
        let value: u64 = value
            .trim()
            .parse()
            .map_err(|_| invalid(format!("line {lineno}: bad value {value:?}")))?;
        let member = if key.doubled { value / 2 } else { value };
        let cert = membership(key.tag, member)
            .filter(|_| value <= key.bound && (!key.doubled || value.is_multiple_of(2)))
            .ok_or_else(|| invalid(format!("line {lineno}: {value} is not in the set")))?;
        if serde_json::to_string(&cert).expect("serializes") != stored {
            return Err(invalid(format!("line {lineno}: certificate does not match")));
        }
        out.push((value, cert));
    }
    Ok(Some(out))
}

pub(crate) fn store(path: &str, key: &CacheKey, elements: &[(u64, MembershipCertificate)]) -> io::Result<()> {
    let mut text = key.header();
    text.push('\n');
    for (v, c) in elements {
        text.push_str(&format!("{v}\t{}\n", serde_json::to_string(c).expect("serializes")));
    }
    fs::write(path, text)
}
