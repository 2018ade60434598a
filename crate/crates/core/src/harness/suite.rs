//! Config-driven batches of verifications.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::identities::{cross_check_fl, verify, IdentityId, ParamFile, ParamSet, Target, VerificationReport};
use crate::qarith::{EvalContext, Mode, DEFAULT_MAX_SHELL};

use super::sample::{case_seed, sample_params, SampleBounds};

fn default_digits() -> u32 {
    30
}

fn default_count() -> u32 {
    1
}

fn default_max_shell() -> u32 {
    DEFAULT_MAX_SHELL
}

/// One line of a suite: `count` cases of `id` sampled within `bounds`, or
/// the explicit parameter files in `params`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteEntry {
    pub id: Target,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default = "default_digits")]
    pub digits: u32,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_count")]
    pub count: u32,
    #[serde(default = "default_max_shell")]
    pub max_shell: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default)]
    pub bounds: SampleBounds,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<Value>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub cases: Vec<SuiteEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    /// Record wall time per case. Off by default so that reports are
    /// reproducible byte for byte.
    #[serde(default)]
    pub timing: bool,
}

impl SuiteConfig {
    pub fn parse_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Config(format!("suite config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }
}

/// A resolved case: the identity, its parameters and how to evaluate them.
#[derive(Debug, Clone)]
pub struct Case {
    pub target: Target,
    pub file: ParamFile,
    pub mode: Mode,
    pub digits: u32,
    pub max_shell: u32,
    pub tol: Option<f64>,
}

impl Case {
    pub fn context(&self) -> Result<EvalContext> {
        let q = self
            .file
            .q
            .as_ref()
            .ok_or_else(|| Error::Config(format!("case of {} has no q", self.target)))?;
        let mut b = EvalContext::builder(self.mode, [q.0.as_str(), q.1.as_str()])
            .digits(self.digits)
            .max_shell(self.max_shell);
        if let Some(t) = self.tol {
            b = b.inf_tail_tol(t);
        }
        b.build()
    }

    pub fn run(&self, timing: bool) -> Result<VerificationReport> {
        let ctx = self.context()?;
        let start = Instant::now();
        let mut report = match (self.target, &self.file.params) {
            (Target::Identity(id), params) => verify(id, params, &ctx),
            (Target::CrossCheckFl, ParamSet::OneVar(p)) => cross_check_fl(p, &ctx),
            (Target::CrossCheckFl, other) => {
                return Err(Error::SchemaMismatch(format!(
                    "cross_check_fl takes one-variable parameters, got {:?}",
                    other.family()
                )))
            }
        };
        if timing {
            report.wall_time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        }
        Ok(report)
    }
}

fn schema_id(t: Target) -> IdentityId {
    match t {
        Target::Identity(id) => id,
        Target::CrossCheckFl => IdentityId::FlOnevar,
    }
}

/// Expands the config into cases, sampling where no explicit parameters are
/// given. Case `k` of an entry uses the seed derived from `(seed, k)`.
pub fn resolve_cases(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for (i, e) in cfg.cases.iter().enumerate() {
        let at = |err: Error| Error::Config(format!("case {i} ({}): {err}", e.id));
        let files: Vec<ParamFile> = if e.params.is_empty() {
            (0..e.count)
                .into_par_iter()
                .map(|k| sample_params(schema_id(e.id), &e.bounds, e.mode, case_seed(e.seed, k as u64)))
                .collect::<Result<_>>()
                .map_err(at)?
        } else {
            e.params
                .iter()
                .map(|v| {
                    let mut obj = v.clone();
                    if let Value::Object(m) = &mut obj {
                        m.entry("id").or_insert_with(|| Value::from(schema_id(e.id).as_str()));
                    }
                    ParamFile::from_json(&obj)
                })
                .collect::<Result<_>>()
                .map_err(at)?
        };
        out.extend(files.into_iter().map(|file| Case {
            target: e.id,
            file,
            mode: e.mode,
            digits: e.digits,
            max_shell: e.max_shell,
            tol: e.tol,
        }));
    }
    Ok(out)
}

/// Runs every case, in parallel, and returns the reports in config order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let cases = resolve_cases(cfg)?;
    cases.par_iter().map(|c| c.run(cfg.timing)).collect()
}

/// Writes reports as a pretty-printed JSON array.
pub fn write_reports(path: &Path, reports: &[VerificationReport]) -> Result<()> {
    let text = serde_json::to_string_pretty(reports).expect("reports serialize");
    std::fs::write(path, text + "\n")?;
    Ok(())
}
