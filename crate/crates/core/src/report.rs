//! Check results and the JSON report written by the CLI.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Warn,
}

/// Outcome of a single identity check, before suite metadata is attached.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// The identity being checked, as a short formula.
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Names of the library operations this check exercised.
    pub ops: Vec<String>,
}

impl Check {
    pub fn new(id: &str, anchor: &str, ok: bool) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: None,
            ops: Vec::new(),
        }
    }

    pub fn pass(id: &str, anchor: &str) -> Self {
        Check::new(id, anchor, true)
    }

    pub fn fail(id: &str, anchor: &str, witness: impl Into<String>) -> Self {
        Check::new(id, anchor, false).with_witness(witness)
    }

    /// Pass, or fail carrying the first witness.
    pub fn from_witness(id: &str, anchor: &str, witness: Option<String>) -> Self {
        match witness {
            None => Check::pass(id, anchor),
            Some(w) => Check::fail(id, anchor, w),
        }
    }

    pub fn warn(mut self) -> Self {
        if self.status == Status::Fail {
            self.status = Status::Warn;
        }
        self
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn with_ops(mut self, ops: &[&str]) -> Self {
        self.ops.extend(ops.iter().map(|s| s.to_string()));
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub id: String,
    pub anchor: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub wall_time_ms: f64,
    pub ops: Vec<String>,
}

impl CheckReport {
    pub fn from_check(suite: &str, params: &BTreeMap<String, String>, c: Check, wall_time_ms: f64) -> Self {
        CheckReport {
            suite: suite.into(),
            id: c.id,
            anchor: c.anchor,
            params: params.clone(),
            status: c.status,
            witness: c.witness,
            wall_time_ms,
            ops: c.ops,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub warn: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub invocation: Vec<String>,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
}

impl Report {
    pub fn new(invocation: Vec<String>, checks: Vec<CheckReport>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Warn => summary.warn += 1,
            }
        }
        Report {
            version: env!("CARGO_PKG_VERSION").into(),
            invocation,
            checks,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Writes to a temporary file in the target directory, then renames.
    pub fn write_atomic(&self, path: &Path) -> Result<()> {
        let dir = match path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d,
            _ => Path::new("."),
        };
        let io = |e: std::io::Error| Error::Config(format!("{}: {e}", path.display()));
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
        tmp.write_all(self.to_json().as_bytes()).map_err(io)?;
        tmp.write_all(b"\n").map_err(io)?;
        tmp.persist(path).map_err(|e| io(e.error))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_and_atomic_write() {
        let params = BTreeMap::new();
        let checks = vec![
            CheckReport::from_check("s", &params, Check::pass("a", "x = x"), 0.0),
            CheckReport::from_check("s", &params, Check::fail("b", "x = y", "x - y").warn(), 0.0),
        ];
        let r = Report::new(vec!["verify".into()], checks);
        assert_eq!(r.summary, Summary { pass: 1, fail: 0, warn: 1 });
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("r.json");
        r.write_atomic(&p).unwrap();
        let back: Report = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
