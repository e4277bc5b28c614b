use std::fmt::Write as _;

use serde::Serialize;

/// One named value shown as evidence for a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Check {
        Check { name: name.into(), passed, witnesses: Vec::new() }
    }

    pub fn with(mut self, label: impl Into<String>, value: impl ToString) -> Check {
        self.witnesses.push(Witness { label: label.into(), value: value.to_string() });
        self
    }
}

/// Ordered results of one replication command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    /// What the checks establish, stated in terms of the objects computed.
    pub statement: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, statement: impl Into<String>) -> Report {
        Report { command: command.into(), statement: statement.into(), checks: Vec::new(), notes: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Plain text, optionally with ANSI colors on the verdicts.
    pub fn render_text(&self, color: bool) -> String {
        let tag = |ok: bool| match (ok, color) {
            (true, true) => "\x1b[32mPASS\x1b[0m",
            (false, true) => "\x1b[31mFAIL\x1b[0m",
            (true, false) => "PASS",
            (false, false) => "FAIL",
        };
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.command);
        let _ = writeln!(out, "# {}", self.statement);
        for c in &self.checks {
            let _ = writeln!(out, "[{}] {}", tag(c.passed), c.name);
            for w in &c.witnesses {
                let _ = writeln!(out, "    {}: {}", w.label, w.value);
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let _ = writeln!(out, "overall: {}", tag(self.passed()));
        out
    }

    /// JSON with the same checks and verdicts as the text form.
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v["status"] = serde_json::Value::from(if self.passed() { "pass" } else { "fail" });
        v
    }
}
