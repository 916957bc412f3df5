//! Suite reports: ordered check records with an overall status.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub description: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, description: impl Into<String>, ok: bool) -> Self {
        CheckRecord {
            id: id.into(),
            description: description.into(),
            status: Status::from_bool(ok),
            residual: None,
            details: None,
        }
    }

    pub fn error(id: impl Into<String>, description: impl Into<String>, err: &crate::Error) -> Self {
        CheckRecord {
            id: id.into(),
            description: description.into(),
            status: Status::Error,
            residual: Some(Value::String(err.to_string())),
            details: None,
        }
    }

    pub fn with_residual(mut self, residual: impl Into<Value>) -> Self {
        self.residual = Some(residual.into());
        self
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub timestamp: String,
    pub overall: Status,
    pub records: Vec<CheckRecord>,
    /// Free-form remarks, e.g. which correspondences were derived.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, records: Vec<CheckRecord>, notes: Vec<String>) -> Self {
        let overall = if records.iter().all(CheckRecord::passed) {
            Status::Pass
        } else if records.iter().any(|r| r.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Error
        };
        SuiteReport {
            suite: suite.into(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            overall,
            records,
            notes,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed())
    }

    /// 0 when every record passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// One line per record plus a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&format!("{:<5} {:<40} {}\n", r.status.as_str(), r.id, r.description));
            if let Some(residual) = &r.residual {
                let text = match residual {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("      residual: {text}\n"));
            }
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        let passed = self.records.iter().filter(|r| r.passed()).count();
        out.push_str(&format!(
            "{}: {} ({passed}/{} checks passed)\n",
            self.suite,
            self.overall.as_str(),
            self.records.len()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status() {
        let ok = SuiteReport::new("s", vec![CheckRecord::new("a", "", true)], vec![]);
        assert_eq!((ok.overall, ok.exit_code()), (Status::Pass, 0));
        let bad = SuiteReport::new("s", vec![CheckRecord::new("a", "", true), CheckRecord::new("b", "", false)], vec![]);
        assert_eq!((bad.overall, bad.exit_code()), (Status::Fail, 1));
        assert_eq!(bad.failures().count(), 1);
    }

    #[test]
    fn json_shape() {
        let report = SuiteReport::new("s", vec![CheckRecord::new("a", "d", false).with_residual("x")], vec![]);
        let v: Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["records"][0]["status"], "FAIL");
        assert_eq!(v["records"][0]["residual"], "x");
        assert_eq!(v["overall"], "FAIL");
        assert!(v.get("notes").is_none());
    }
}
