//! Report types and the json, csv and table emitters.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use serde_json::Value;

use crate::config::{Format, SuiteConfig};
use crate::error::VerifyError;

pub const SCHEMA_VERSION: u32 = 1;

/// One gated comparison. `pass` is exactly `residual <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Index pairs, functions, trials or points behind the residual.
    pub count: Option<usize>,
    pub reason: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            residual,
            tolerance,
            pass: residual <= tolerance,
            count: None,
            reason: None,
        }
    }

    /// A check that could not produce a residual.
    pub fn error(name: impl Into<String>, tolerance: f64, reason: impl Into<String>) -> Self {
        Self {
            reason: Some(reason.into()),
            ..Self::new(name, f64::INFINITY, tolerance)
        }
    }

    pub fn with_count(mut self, count: usize) -> Self {
        self.count = Some(count);
        self
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }

    pub fn suite(&self) -> &str {
        self.name.split('/').next().unwrap_or(&self.name)
    }
}

/// A measured value that is reported but not gated.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Observation {
    pub name: String,
    pub value: f64,
    pub note: String,
}

impl Observation {
    pub fn new(name: impl Into<String>, value: f64, note: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            value,
            note: note.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub library_version: &'static str,
    pub suite: String,
    pub config: SuiteConfig,
    pub checks: Vec<Check>,
    pub observations: Vec<Observation>,
    pub summary: Summary,
    /// Only recorded on request, so default reports stay byte-stable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(config: SuiteConfig, checks: Vec<Check>, observations: Vec<Observation>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        Self {
            schema_version: SCHEMA_VERSION,
            library_version: env!("CARGO_PKG_VERSION"),
            suite: config.suite.tag().to_string(),
            summary: Summary {
                total: checks.len(),
                passed,
                failed: checks.len() - passed,
            },
            config,
            checks,
            observations,
            runtime_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Pretty printer that writes every float as `%.15e`.
struct FixedFloat<'a> {
    inner: PrettyFormatter<'a>,
}

impl Formatter for FixedFloat<'_> {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.15e}")
    }

    fn write_f32<W: ?Sized + Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value as f64)
    }

    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_array(w)
    }

    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_array(w)
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_array_value(w)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_object(w)
    }

    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object(w)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object_value(w)
    }
}

/// Sorted keys (through `Value`'s ordered map), two-space indent, floats as
/// `%.15e`, non-finite floats as `null`, trailing newline.
pub fn to_stable_json<T: Serialize>(value: &T) -> Result<String, VerifyError> {
    let v: Value = serde_json::to_value(value).map_err(|e| VerifyError::Input(e.to_string()))?;
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(
        &mut buf,
        FixedFloat {
            inner: PrettyFormatter::with_indent(b"  "),
        },
    );
    v.serialize(&mut ser).map_err(|e| VerifyError::Input(e.to_string()))?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json writes utf-8"))
}

fn csv_report(report: &VerificationReport) -> Result<String, VerifyError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| VerifyError::Input(e.to_string());
    w.write_record(["name", "residual", "tolerance", "pass"]).map_err(err)?;
    for c in &report.checks {
        w.write_record([
            c.name.clone(),
            format!("{:.15e}", c.residual),
            format!("{:.15e}", c.tolerance),
            c.pass.to_string(),
        ])
        .map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| VerifyError::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv writes utf-8"))
}

fn table_report(report: &VerificationReport) -> String {
    let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(4).max(4);
    let mut s = format!("{:<width$}  {:>22}  {:>22}  {}\n", "name", "residual", "tolerance", "pass");
    for c in &report.checks {
        s.push_str(&format!(
            "{:<width$}  {:>22}  {:>22}  {}\n",
            c.name,
            format!("{:.15e}", c.residual),
            format!("{:.15e}", c.tolerance),
            if c.pass { "PASS" } else { "FAIL" }
        ));
    }
    for o in &report.observations {
        s.push_str(&format!("observed {} = {:.15e} ({})\n", o.name, o.value, o.note));
    }
    s.push_str(&format!(
        "{} checks, {} passed, {} failed\n",
        report.summary.total, report.summary.passed, report.summary.failed
    ));
    s
}

/// Renders the report in the requested format.
pub fn render(report: &VerificationReport, format: Format) -> Result<String, VerifyError> {
    match format {
        Format::Json => to_stable_json(report),
        Format::Csv => csv_report(report),
        Format::Table => Ok(table_report(report)),
    }
}

/// Writes the rendered report to `config.out`, or to stdout.
pub fn emit_report(report: &VerificationReport, format: Format) -> Result<(), VerifyError> {
    let text = render(report, format)?;
    match &report.config.out {
        Some(path) => std::fs::write(path, text).map_err(|e| VerifyError::io(path, e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| VerifyError::io("<stdout>", e)),
    }
}
