use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

/// One failure, witness or flagged finding: a kind plus ordered key/value
/// fields rendered with the group's element names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub kind: String,
    pub fields: Vec<(String, String)>,
}

impl Record {
    pub fn new(kind: impl Into<String>) -> Self {
        Record {
            kind: kind.into(),
            fields: Vec::new(),
        }
    }

    pub fn field(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.fields.len() + 1))?;
        map.serialize_entry("kind", &self.kind)?;
        for (k, v) in &self.fields {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// Outcome of one theorem check over one or many instances.
///
/// `instances_tested` counts every instance enumerated or sampled, including
/// those whose hypothesis did not hold (tallied under the `skipped` counter).
/// The status is `fail` if any failure was recorded, `skipped` if no instance
/// met the hypothesis, and `pass` otherwise.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub group: String,
    pub status: Status,
    pub instances_tested: u64,
    pub counters: BTreeMap<String, u64>,
    pub failures: Vec<Record>,
    pub witnesses: Vec<Record>,
    /// Findings worth showing that do not fail the check.
    pub flagged: Vec<Record>,
    pub seed: Option<u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn new(check_name: impl Into<String>, group: impl Into<String>) -> Self {
        CheckReport {
            check_name: check_name.into(),
            group: group.into(),
            status: Status::Skipped,
            instances_tested: 0,
            counters: BTreeMap::new(),
            failures: Vec::new(),
            witnesses: Vec::new(),
            flagged: Vec::new(),
            seed: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn bump(&mut self, counter: &str, by: u64) {
        *self.counters.entry(counter.to_string()).or_default() += by;
    }

    pub fn counter(&self, counter: &str) -> u64 {
        self.counters.get(counter).copied().unwrap_or(0)
    }

    pub fn skipped(&self) -> u64 {
        self.counter("skipped")
    }

    pub(crate) fn finish(mut self, started: Instant) -> Self {
        self.status = if !self.failures.is_empty() {
            Status::Fail
        } else if self.instances_tested > self.skipped() {
            Status::Pass
        } else {
            Status::Skipped
        };
        self.elapsed = started.elapsed();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(
            out,
            "[{}] {} on {}: {} instances",
            self.status.as_str(),
            self.check_name,
            self.group,
            self.instances_tested
        );
        if self.skipped() > 0 {
            let _ = write!(out, " ({} skipped)", self.skipped());
        }
        out.push('\n');
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "    seed: {seed}");
        }
        let counters: Vec<String> = self
            .counters
            .iter()
            .filter(|(k, _)| k.as_str() != "skipped")
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        if !counters.is_empty() {
            let _ = writeln!(out, "    counters: {}", counters.join(" "));
        }
        for (label, records) in [
            ("failure", &self.failures),
            ("witness", &self.witnesses),
            ("flagged", &self.flagged),
        ] {
            for r in records {
                let fields: Vec<String> =
                    r.fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(out, "    {label} {}: {}", r.kind, fields.join(" "));
            }
        }
        let _ = writeln!(out, "    elapsed: {:.1?}", self.elapsed);
        out
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// A list of reports plus a summary. The machine format is a JSON document
/// that omits timings, so equal seeds and caps give byte-identical output.
#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteReport {
    pub summary: Summary,
    pub reports: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn new(reports: Vec<CheckReport>) -> Self {
        let mut summary = Summary {
            checks: reports.len(),
            ..Summary::default()
        };
        for r in &reports {
            match r.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        SuiteReport { summary, reports }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out: String = self.reports.iter().map(CheckReport::render_text).collect();
        let _ = writeln!(
            out,
            "{} checks: {} passed, {} failed, {} skipped",
            self.summary.checks, self.summary.passed, self.summary.failed, self.summary.skipped
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_rules() {
        let now = Instant::now();
        let empty = CheckReport::new("x", "C1").finish(now);
        assert_eq!(empty.status, Status::Skipped);

        let mut all_skipped = CheckReport::new("x", "C2");
        all_skipped.instances_tested = 1;
        all_skipped.bump("skipped", 1);
        assert_eq!(all_skipped.finish(now).status, Status::Skipped);

        let mut ok = CheckReport::new("x", "C2");
        ok.instances_tested = 3;
        ok.bump("skipped", 1);
        assert_eq!(ok.clone().finish(now).status, Status::Pass);

        ok.failures.push(Record::new("bad"));
        assert_eq!(ok.finish(now).status, Status::Fail);
    }

    #[test]
    fn machine_format_is_ordered_and_timing_free() {
        let mut r = CheckReport::new("kemperman", "C3");
        r.instances_tested = 2;
        r.witnesses.push(
            Record::new("unique-product")
                .field("c", 2)
                .field("A", "{1}"),
        );
        r.elapsed = Duration::from_secs(5);
        let suite = SuiteReport::new(vec![r.finish(Instant::now())]);
        let json = suite.to_machine();
        assert!(!json.contains("elapsed"));
        let kind = json.find("\"kind\"").unwrap();
        let c = json.find("\"c\"").unwrap();
        let a = json.find("\"A\"").unwrap();
        assert!(kind < c && c < a);
        assert_eq!(suite.summary.passed, 1);
    }
}
