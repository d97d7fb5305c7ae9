//! Deterministic reports in text, JSON or CSV.

use serde::Serialize;

pub const SCHEMA: &str = "gqe-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Reported but not part of the verdict.
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: CheckStatus,
    pub witness: Option<String>,
    /// Lowest order at which the checked identity fails.
    pub nonzero_order: Option<usize>,
}

impl CheckRecord {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckRecord { name: name.into(), status: CheckStatus::Pass, witness: None, nonzero_order: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckRecord { name: name.into(), status: CheckStatus::Fail, witness: Some(witness.into()), nonzero_order: None }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            CheckRecord::pass(name)
        } else {
            CheckRecord::fail(name, witness())
        }
    }

    pub fn from_identity(c: &langint::IdentityCheck, informational: bool) -> Self {
        let status = if informational {
            CheckStatus::Info
        } else if c.passed() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        CheckRecord { name: c.name.clone(), status, witness: c.witness.clone(), nonzero_order: c.nonzero_order }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub seed: u64,
    /// Result lines of the command.
    pub output: Vec<String>,
    pub checks: Vec<CheckRecord>,
    /// Tabular payload used by `--format csv` instead of the check table.
    #[serde(skip)]
    pub csv: Option<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        Report { schema: SCHEMA, command: command.into(), seed, output: Vec::new(), checks: Vec::new(), csv: None }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.output.push(s.into());
    }

    pub fn check(&mut self, c: CheckRecord) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serialises") + "\n",
            Format::Csv => self.csv.clone().unwrap_or_else(|| self.check_csv()),
            Format::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut s = String::new();
        for l in &self.output {
            s.push_str(l);
            s.push('\n');
        }
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Info => "INFO",
            };
            s.push_str(&format!("{} {}", tag, c.name));
            if let Some(o) = c.nonzero_order {
                s.push_str(&format!(" (nonzero at order {})", o));
            }
            if let Some(w) = &c.witness {
                s.push_str(&format!(" [{}]", w));
            }
            s.push('\n');
        }
        s
    }

    fn check_csv(&self) -> String {
        let mut s = String::from("name,status,nonzero_order,witness\n");
        for c in &self.checks {
            let status = serde_json::to_value(c.status).expect("status serialises");
            let order = c.nonzero_order.map(|o| o.to_string()).unwrap_or_default();
            let witness = c.witness.clone().unwrap_or_default().replace('"', "'");
            s.push_str(&format!("\"{}\",{},{},\"{}\"\n", c.name, status.as_str().unwrap_or(""), order, witness));
        }
        s
    }
}
