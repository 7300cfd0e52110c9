//! Pass/fail check reports with a stable serialized shape.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    /// The statement being checked, as a formula.
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, outcome: Result<(), String>) -> Check {
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        Check {
            id: id.into(),
            anchor: anchor.into(),
            status,
            witness,
        }
    }

    /// Passes iff `lhs == rhs`; the witness prints `lhs - rhs`-style detail.
    pub fn equal<T>(id: impl Into<String>, anchor: impl Into<String>, lhs: &T, rhs: &T) -> Check
    where
        T: PartialEq + fmt::Display,
    {
        let outcome = if lhs == rhs {
            Ok(())
        } else {
            Err(format!("got {lhs}, expected {rhs}"))
        };
        Check::new(id, anchor, outcome)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> CheckReport {
        CheckReport {
            suite: suite.into(),
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, check: Check) {
        match check.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: CheckReport) {
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            writeln!(f, "  [{tag}] {}  {}", c.id, c.anchor)?;
            if let Some(w) = &c.witness {
                writeln!(f, "         witness: {w}")?;
            }
        }
        write!(f, "{} passed, {} failed", self.summary.pass, self.summary.fail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts_and_json_shape() {
        let mut r = CheckReport::new("demo");
        r.push(Check::new("a", "x = x", Ok(())));
        r.push(Check::equal("b", "1 = 2", &1, &2));
        assert_eq!(r.summary, Summary { pass: 1, fail: 1 });
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["checks"][0].get("witness"), None);
        assert_eq!(v["checks"][1]["status"], "fail");
        assert_eq!(v["checks"][1]["witness"], "got 1, expected 2");
        assert_eq!(v["summary"]["fail"], 1);
    }
}
