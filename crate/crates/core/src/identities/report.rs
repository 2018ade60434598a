use std::fmt;
use std::str::FromStr;

use rug::Float;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, ErrorKind, Result};
use crate::qarith::{EvalContext, Mode, QComplex};

use super::params::ParamSet;
use super::registry::IdentityId;
use super::{Evaluated, Side};

/// What a report compares: an identity, or the two finite forms of the
/// one-variable series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Identity(IdentityId),
    CrossCheckFl,
}

const CROSS_CHECK: &str = "cross_check_fl";

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Identity(id) => write!(f, "{id}"),
            Target::CrossCheckFl => f.write_str(CROSS_CHECK),
        }
    }
}

impl FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == CROSS_CHECK {
            Ok(Target::CrossCheckFl)
        } else {
            s.parse().map(Target::Identity)
        }
    }
}

impl Serialize for Target {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Target {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One evaluated side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SideReport {
    /// `[re, im]`; exact values are `p/q` strings with imaginary part `"0"`.
    pub value: [String; 2],
    pub radius_used: u32,
    pub tail_estimate: f64,
    pub terms_evaluated: u64,
    /// `|shells R+1..R+2| / |S_R|` for bilateral sides.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stability: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<Side>,
    pub kind: ErrorKind,
    pub message: String,
}

/// Outcome of comparing two sides.
///
/// A float comparison passes when
/// `|L - R| / max(|L|, |R|) <= 10 (tail_L + tail_R + 10^-(digits-10))`.
/// In exact mode the sides must be equal rationals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: Target,
    pub params: ParamSet,
    pub q: [String; 2],
    pub mode: Mode,
    pub digits: u32,
    pub lhs: Option<SideReport>,
    pub rhs: Option<SideReport>,
    pub abs_discrepancy: Option<String>,
    pub rel_discrepancy: Option<f64>,
    pub threshold: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

fn side_report(e: &Evaluated, digits: usize) -> SideReport {
    SideReport {
        value: e.result.value.to_strings(digits),
        radius_used: e.result.radius_used,
        tail_estimate: e.result.tail_estimate,
        terms_evaluated: e.result.terms_evaluated,
        stability: e.stability,
    }
}

fn header(id: Target, params: ParamSet, ctx: &EvalContext) -> VerificationReport {
    VerificationReport {
        id,
        params,
        q: ctx.q().to_strings(ctx.digits() as usize),
        mode: ctx.mode(),
        digits: ctx.digits(),
        lhs: None,
        rhs: None,
        abs_discrepancy: None,
        rel_discrepancy: None,
        threshold: 0.0,
        pass: false,
        failure: None,
        wall_time_ms: None,
    }
}

impl VerificationReport {
    pub(crate) fn failed(id: Target, params: ParamSet, ctx: &EvalContext, side: Option<Side>, e: Error) -> Self {
        let mut r = header(id, params, ctx);
        r.failure = Some(Failure {
            side,
            kind: e.kind(),
            message: e.to_string(),
        });
        r
    }

    pub(crate) fn compare(
        id: Target,
        params: ParamSet,
        ctx: &EvalContext,
        left: Result<Evaluated>,
        right: Result<Evaluated>,
    ) -> Self {
        let digits = ctx.digits() as usize;
        let mut r = header(id, params, ctx);
        r.lhs = left.as_ref().ok().map(|e| side_report(e, digits));
        r.rhs = right.as_ref().ok().map(|e| side_report(e, digits));
        let (l, rt) = match (left, right) {
            (Ok(l), Ok(rt)) => (l, rt),
            (Err(e), _) => {
                r.failure = Some(Failure {
                    side: Some(Side::Left),
                    kind: e.kind(),
                    message: e.to_string(),
                });
                return r;
            }
            (_, Err(e)) => {
                r.failure = Some(Failure {
                    side: Some(Side::Right),
                    kind: e.kind(),
                    message: e.to_string(),
                });
                return r;
            }
        };
        let (lv, rv) = (&l.result.value, &rt.result.value);
        let diff: QComplex = lv - rv;
        r.abs_discrepancy = Some(match &diff {
            QComplex::Rational(x) => x.to_string(),
            QComplex::Complex(_) => diff.abs_f64().to_string(),
        });
        let scale = {
            let (a, b) = (lv.abs_float(), rv.abs_float());
            if a > b {
                a
            } else {
                b
            }
        };
        let dabs = diff.abs_float();
        let rel = if dabs.is_zero() {
            0.0
        } else {
            Float::with_val(64, &dabs / &scale).to_f64()
        };
        r.rel_discrepancy = Some(rel);
        match ctx.mode() {
            Mode::Exact => {
                r.threshold = 0.0;
                r.pass = diff.is_zero();
            }
            Mode::Float => {
                let floor = 10f64.powi(-(ctx.digits() as i32 - 10));
                r.threshold = 10.0 * (l.result.tail_estimate + rt.result.tail_estimate + floor);
                r.pass = rel <= r.threshold;
            }
        }
        r
    }

    /// Whether every bilateral side had its two extra shells within three
    /// times its tail estimate.
    pub fn radius_stable(&self) -> bool {
        [&self.lhs, &self.rhs].into_iter().flatten().all(|s| match s.stability {
            Some(st) => st <= 3.0 * s.tail_estimate,
            None => true,
        })
    }
}
