//! Harness around `agchull-core`: instance configuration, report emission
//! (JSON and CSV), parameter sweeps, split-instance search, and the
//! verification suites behind `agchull verify`.

pub mod config;
pub mod report;
pub mod rng;
pub mod run;
pub mod search;
pub mod suites;

pub use config::{ExtensionConfig, InstanceConfig};
pub use report::{PredictionRow, Report, ReportRow};
pub use run::{run_instance, sweep, InstanceParams};
pub use search::{search_split_instance, SearchFamily};
pub use suites::{run_suite, SuiteOutcome};
