//! Run configuration and the window grammar of the command line.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sgsf_algebra::Window;
use sgsf_basis::{format_half, parse_half, FamilyId};

use crate::error::VerifyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Orthonormality,
    Commutators,
    Casimir,
    Adjoint,
    Weights,
    Differential,
    Seminorms,
    Bounds,
    Constants,
    Transforms,
    Ft,
    Crossfamily,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const CONCRETE: [Suite; 12] = [
        Suite::Orthonormality,
        Suite::Commutators,
        Suite::Casimir,
        Suite::Adjoint,
        Suite::Weights,
        Suite::Differential,
        Suite::Seminorms,
        Suite::Bounds,
        Suite::Constants,
        Suite::Transforms,
        Suite::Ft,
        Suite::Crossfamily,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Suite::Orthonormality => "orthonormality",
            Suite::Commutators => "commutators",
            Suite::Casimir => "casimir",
            Suite::Adjoint => "adjoint",
            Suite::Weights => "weights",
            Suite::Differential => "differential",
            Suite::Seminorms => "seminorms",
            Suite::Bounds => "bounds",
            Suite::Constants => "constants",
            Suite::Transforms => "transforms",
            Suite::Ft => "ft",
            Suite::Crossfamily => "crossfamily",
            Suite::All => "all",
        }
    }

    pub fn expand(&self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::CONCRETE.to_vec(),
            s => vec![*s],
        }
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::CONCRETE
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|x| x.tag() == s)
            .copied()
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

impl FromStr for Format {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            other => Err(VerifyError::UnknownFormat(other.to_string())),
        }
    }
}

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TRIALS: usize = 100;
pub const DEFAULT_SAMPLES: usize = 10_000;

/// Defaults:
///
/// | field | default |
/// |---|---|
/// | `family`, `algebra` | every registered one |
/// | `alpha` | `{-0.5, 0, 1, 2.5}` where a Laguerre parameter applies |
/// | `window` | the per-suite default window |
/// | `quad_order` | orders exact for the window (Gauss-Hermite/Laguerre 80, FT 160) |
/// | `tol` | per check: 1e-10 quadrature, 1e-12 algebra, 1e-8 finite differences |
/// | `seed` | 42 |
/// | `trials` | 100 random vectors per inequality |
/// | `samples` | 10^4 points per kernel bound |
/// | `jobs` | all cores |
/// | `out` | stdout |
/// | `format` | json |
/// | `timing` | off, so reports are byte-stable |
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub family: Option<String>,
    pub alpha: Option<f64>,
    pub algebra: Option<String>,
    pub window: Option<String>,
    pub quad_order: Option<usize>,
    pub tol: Option<f64>,
    pub seed: u64,
    pub trials: usize,
    pub samples: usize,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            suite: Suite::All,
            family: None,
            alpha: None,
            algebra: None,
            window: None,
            quad_order: None,
            tol: None,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            samples: DEFAULT_SAMPLES,
            jobs: None,
            out: None,
            format: Format::Json,
            timing: false,
        }
    }
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        let bad = |s: String| Err(VerifyError::InvalidConfig(s));
        if let Some(t) = self.tol {
            if !(t >= 0.0) || !t.is_finite() {
                return bad(format!("tolerance must be finite and non-negative, got {t}"));
            }
        }
        if self.quad_order == Some(0) {
            return bad("quad-order must be at least 1".into());
        }
        if self.jobs == Some(0) {
            return bad("jobs must be at least 1".into());
        }
        if self.trials == 0 || self.samples == 0 {
            return bad("trials and samples must be at least 1".into());
        }
        if self.window.is_some() && self.family.is_none() && self.algebra.is_none() {
            return bad("a window needs --family or --algebra to fix its meaning".into());
        }
        if let Some(a) = self.alpha {
            if !(a > -1.0) || !a.is_finite() {
                return bad(format!("alpha must exceed -1, got {a}"));
            }
        }
        Ok(())
    }
}

/// Bound on the leading quantum number, written the way [`parse_window`]
/// reads it.
pub fn window_label(family: FamilyId, stored_max: i64) -> String {
    let v = if family.doubled() {
        format_half(stored_max)
    } else {
        stored_max.to_string()
    };
    match family {
        FamilyId::FourierCircle => format!("|m|<={v}"),
        FamilyId::ZernikeW => format!("u+v<={v}"),
        f => format!("{}<={v}", f.component_names()[0]),
    }
}

/// Reads `"j<=8"`, `"n<=32"`, `"|m|<=16"`, `"u+v<=12"` and similar: a bound
/// on the leading quantum number of the family, half-integers as `3/2` or
/// `1.5`. Returns the standard window with that bound.
pub fn parse_window(family: FamilyId, text: &str) -> Result<Window, VerifyError> {
    let expected = window_label(family, if family.doubled() { 16 } else { 8 });
    let bad = || VerifyError::InvalidConfig(format!("window '{text}' for {} must look like '{expected}'", family.tag()));
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (name, value) = compact.split_once("<=").ok_or_else(bad)?;
    let ok = match family {
        FamilyId::FourierCircle => name == "|m|" || name == "m",
        FamilyId::ZernikeW => name == "u+v",
        f => name == f.component_names()[0],
    };
    if !ok {
        return Err(bad());
    }
    let doubled = parse_half(value).map_err(|_| bad())?;
    let stored = if family.doubled() {
        doubled
    } else if doubled % 2 == 0 {
        doubled / 2
    } else {
        return Err(bad());
    };
    if stored < 0 {
        return Err(bad());
    }
    Ok(Window::standard(family, stored))
}
