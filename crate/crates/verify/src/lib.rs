//! Verification battery over the special-function families and their
//! algebras, with deterministic reports and the file formats of the `sgsf`
//! command line.

pub mod config;
mod error;
pub mod io;
pub mod report;
pub mod suites;

pub use config::{parse_window, window_label, Format, Suite, SuiteConfig};
pub use error::VerifyError;
pub use report::{emit_report, render, to_stable_json, Check, Observation, Summary, VerificationReport};
pub use suites::{algebra_cases, family_cases, run_suite, AlgebraCase, FamilyCase, Item};
