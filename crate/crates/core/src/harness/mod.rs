//! Sampling, batch execution and the command line.

pub mod cli;
pub mod sample;
pub mod suite;

pub use sample::{case_seed, sample_params, QSpec, SampleBounds};
pub use suite::{resolve_cases, run_suite, write_reports, Case, SuiteConfig, SuiteEntry};
