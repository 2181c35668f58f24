//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub status: Status,
    pub detail: Value,
}

impl Case {
    pub fn new(id: impl Into<String>, ok: bool, detail: Value) -> Self {
        Case {
            id: id.into(),
            status: Status::from_bool(ok),
            detail,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

/// Outcome of one verification suite. Cases keep their construction order,
/// so reports are reproducible byte for byte.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub params: Value,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: impl Into<String>, params: Value, cases: Vec<Case>) -> Self {
        let pass = cases.iter().filter(|c| c.status == Status::Pass).count();
        let fail = cases.len() - pass;
        Report {
            suite: suite.into(),
            params,
            cases,
            summary: Summary { pass, fail },
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }

    /// Concatenates reports of the same suite run over several parameter
    /// sets, prefixing case ids with the given labels.
    pub fn merge(suite: &str, params: Value, parts: Vec<(String, Report)>) -> Report {
        let cases = parts
            .into_iter()
            .flat_map(|(label, r)| {
                r.cases.into_iter().map(move |mut c| {
                    c.id = format!("{label}/{}", c.id);
                    c
                })
            })
            .collect();
        Report::new(suite, params, cases)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} {}", self.suite, self.params)?;
        for c in &self.cases {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            if c.status == Status::Fail {
                writeln!(f, "  {tag} {} {}", c.id, c.detail)?;
            } else {
                writeln!(f, "  {tag} {}", c.id)?;
            }
        }
        write!(f, "summary: {} pass, {} fail", self.summary.pass, self.summary.fail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn summary_counts_and_schema() {
        let r = Report::new(
            "demo",
            json!({"k": 1}),
            vec![
                Case::new("a", true, json!(null)),
                Case::new("b", false, json!({"why": 1})),
            ],
        );
        assert_eq!(r.summary, Summary { pass: 1, fail: 1 });
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["cases"][1]["status"], "fail");
        assert_eq!(v["summary"]["pass"], 1);
        assert!(!r.all_pass());
    }
}
