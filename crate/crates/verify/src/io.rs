//! Coefficient files (JSON) and sample tables (CSV) for the command line.
//!
//! Coefficient indices are written in natural units, so half-integer quantum
//! numbers appear as `1.5`.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use sgsf_algebra::{CoeffVec, Window};
use sgsf_basis::FamilyId;

use crate::error::VerifyError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffEntry {
    pub index: Vec<f64>,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffFile {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    pub entries: Vec<CoeffEntry>,
}

fn stored(family: FamilyId, value: f64) -> Result<i64, VerifyError> {
    let scaled = if family.doubled() { 2.0 * value } else { value };
    if scaled.fract() != 0.0 || !scaled.is_finite() {
        let what = if family.doubled() { "a half-integer" } else { "an integer" };
        return Err(VerifyError::Input(format!("{} index component {value} is not {what}", family.tag())));
    }
    Ok(scaled as i64)
}

fn natural(family: FamilyId, c: i64) -> f64 {
    if family.doubled() {
        c as f64 / 2.0
    } else {
        c as f64
    }
}

impl CoeffFile {
    /// Coefficients on the smallest box window holding every entry.
    pub fn to_coeffs(&self) -> Result<CoeffVec, VerifyError> {
        let family = FamilyId::from_tag(&self.family, self.alpha)?;
        if self.entries.is_empty() {
            return Err(VerifyError::Input("coefficient file has no entries".into()));
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let idx = e.index.iter().map(|&x| stored(family, x)).collect::<Result<Vec<_>, _>>()?;
            family.validate(&idx)?;
            entries.push((idx, Complex64::new(e.re, e.im)));
        }
        let arity = family.arity();
        let lo = (0..arity).map(|k| entries.iter().map(|(i, _)| i[k]).min().unwrap_or(0)).collect();
        let hi = (0..arity).map(|k| entries.iter().map(|(i, _)| i[k]).max().unwrap_or(0)).collect();
        Ok(CoeffVec::from_entries(family, Window::new(lo, hi), entries)?)
    }

    pub fn from_coeffs(v: &CoeffVec) -> Self {
        let family = v.family();
        CoeffFile {
            family: family.tag().to_string(),
            alpha: family.alpha(),
            entries: v
                .iter()
                .map(|(idx, a)| CoeffEntry {
                    index: idx.iter().map(|&c| natural(family, c)).collect(),
                    re: a.re,
                    im: a.im,
                })
                .collect(),
        }
    }
}

pub fn read_coeffs(path: &Path) -> Result<CoeffVec, VerifyError> {
    let text = std::fs::read_to_string(path).map_err(|e| VerifyError::io(path, e))?;
    let file: CoeffFile = serde_json::from_str(&text).map_err(|e| VerifyError::Input(format!("{}: {e}", path.display())))?;
    file.to_coeffs()
}

pub fn coeffs_json(v: &CoeffVec) -> Result<String, VerifyError> {
    crate::report::to_stable_json(&CoeffFile::from_coeffs(v))
}

/// Points with optional complex values read from a CSV table whose header
/// names the family coordinates, followed by `re,im` when `values` is set.
pub struct SampleTable {
    pub points: Vec<Vec<f64>>,
    pub values: Vec<Complex64>,
}

pub fn read_samples(path: &Path, family: FamilyId, values: bool) -> Result<SampleTable, VerifyError> {
    let mut rd = csv::Reader::from_path(path).map_err(|e| VerifyError::io(path, e))?;
    let mut expected: Vec<&str> = family.coordinate_names().to_vec();
    if values {
        expected.extend(["re", "im"]);
    }
    let header = rd.headers().map_err(|e| VerifyError::io(path, e))?.clone();
    if header.iter().map(str::trim).ne(expected.iter().copied()) {
        return Err(VerifyError::Input(format!(
            "{}: header must be '{}'",
            path.display(),
            expected.join(",")
        )));
    }
    let dim = family.dimension();
    let mut table = SampleTable {
        points: Vec::new(),
        values: Vec::new(),
    };
    for (line, rec) in rd.records().enumerate() {
        let rec = rec.map_err(|e| VerifyError::io(path, e))?;
        let nums = rec
            .iter()
            .map(|s| s.trim().parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| VerifyError::Input(format!("{} row {}: {e}", path.display(), line + 1)))?;
        table.points.push(nums[..dim].to_vec());
        if values {
            table.values.push(Complex64::new(nums[dim], nums[dim + 1]));
        }
    }
    Ok(table)
}

/// CSV with the coordinate columns, then `extra` columns per row.
pub fn write_table(
    family: FamilyId,
    extra: &[&str],
    rows: impl IntoIterator<Item = (Vec<f64>, Vec<f64>)>,
) -> Result<String, VerifyError> {
    let err = |e: csv::Error| VerifyError::Input(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = family.coordinate_names().to_vec();
    header.extend_from_slice(extra);
    w.write_record(&header).map_err(err)?;
    for (p, vals) in rows {
        let rec: Vec<String> = p.iter().chain(&vals).map(|x| format!("{x:.17e}")).collect();
        w.write_record(&rec).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| VerifyError::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv writes utf-8"))
}
