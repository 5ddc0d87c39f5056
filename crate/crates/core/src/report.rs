//! Machine-readable verification reports: one record per check, a summary,
//! and deterministic serialization so identical configurations produce
//! byte-identical output.

use serde::Serialize;
use std::fmt::Write as _;
use std::io;
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A single verified statement. `anchor` names the mathematical identity the
/// check certifies, in plain notation.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub anchor: String,
    pub details: String,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        ok: bool,
        anchor: impl Into<String>,
        details: impl Into<String>,
    ) -> Self {
        let anchor = anchor.into();
        assert!(!anchor.is_empty(), "every check carries its anchor");
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            anchor,
            details: details.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

/// Echo of the configuration a suite ran under.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub n: usize,
    pub trunc: i64,
    pub max_len: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub config: ConfigEcho,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: impl Into<String>, config: ConfigEcho, checks: Vec<Check>) -> Self {
        let pass = checks.iter().filter(|c| c.passed()).count();
        let fail = checks.len() - pass;
        Report {
            suite: suite.into(),
            config,
            checks,
            summary: Summary { pass, fail },
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

/// Render reports to a string: pretty JSON or one `PASS/FAIL` line per
/// check.
pub fn render(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            for report in reports {
                for check in &report.checks {
                    let status = if check.passed() { "PASS" } else { "FAIL" };
                    writeln!(
                        out,
                        "{status} {}/{} {}",
                        report.suite, check.name, check.anchor
                    )
                    .expect("write to string");
                }
                writeln!(
                    out,
                    "# {}: {} passed, {} failed",
                    report.suite, report.summary.pass, report.summary.fail
                )
                .expect("write to string");
            }
            out
        }
    }
}

/// Write reports to a file or stdout; returns whether every check passed.
pub fn emit(reports: &[Report], path: Option<&Path>, format: Format) -> io::Result<bool> {
    let rendered = render(reports, format);
    match path {
        Some(p) => std::fs::write(p, rendered)?,
        None => {
            use io::Write;
            io::stdout().write_all(rendered.as_bytes())?;
        }
    }
    Ok(reports.iter().all(|r| r.all_passed()))
}
