//! Library side of the `qcong` command: sweep configuration, the parallel
//! sweep runner and report serialization.

pub mod config;
pub mod record;
pub mod sweep;

pub use config::{Format, SweepConfig, SweepTheorem, WORKERS_ENV};
pub use record::CaseRecord;
pub use sweep::{expand, run_case, run_sweep, run_sweep_to, Case, SweepSummary};
