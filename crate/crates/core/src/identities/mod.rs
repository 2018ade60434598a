//! Independent evaluators for both sides of every identity in the registry.
//!
//! Each side is its own summand or product, transcribed without algebraic
//! simplification. [`verify`] evaluates the two sides and compares them with
//! the tolerance rule documented on [`VerificationReport`].

pub mod an;
pub mod cn;
pub mod finite;
pub mod onevar;
pub mod params;
pub mod registry;
mod report;
pub mod terms;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qarith::{EvalContext, QComplex};
use crate::summation::{shell_range_sum, SeriesResult, TermFunction};

pub use params::{
    AnBilateralParams, AnValues, BilateralCnParams, CnValues, FiniteCnParams, FiniteValues, Num,
    OneVarParams, OneVarValues, ParamFile, ParamSet,
};
pub use registry::{descriptor, list_identities, Family, IdentityDescriptor, IdentityId, SideKind};
pub use report::{Failure, SideReport, Target, VerificationReport};

use onevar::RootBranch;
use terms::{Prod, Support};

/// Which side of an identity to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" | "lhs" => Ok(Side::Left),
            "right" | "rhs" => Ok(Side::Right),
            _ => Err(Error::Parse(format!("unknown side {s:?}"))),
        }
    }
}

/// A side value with the relative size of the two shells past the stopping
/// radius (bilateral sides only).
#[derive(Debug, Clone)]
pub struct Evaluated {
    pub result: SeriesResult,
    pub stability: Option<f64>,
}

impl Evaluated {
    pub(crate) fn series(result: SeriesResult) -> Self {
        Evaluated {
            result,
            stability: None,
        }
    }

    pub(crate) fn closed(p: &Prod<'_>) -> Self {
        Evaluated::series(SeriesResult {
            value: p.value(),
            radius_used: 0,
            tail_estimate: p.tail(),
            terms_evaluated: 1,
        })
    }

    pub(crate) fn product_times(p: &Prod<'_>, s: SeriesResult) -> Self {
        Evaluated::series(SeriesResult {
            value: p.value() * s.value,
            radius_used: s.radius_used,
            tail_estimate: p.tail() + s.tail_estimate,
            terms_evaluated: s.terms_evaluated,
        })
    }

    pub(crate) fn scaled(mut self, factor: &QComplex, extra_tail: f64) -> Self {
        self.result.value *= factor;
        self.result.tail_estimate += extra_tail;
        self
    }
}

pub(crate) fn check_convergence(modulus: f64, ctx: &EvalContext) -> Result<()> {
    let limit = ctx.convergence_limit();
    if modulus <= limit {
        Ok(())
    } else {
        Err(Error::ConvergenceConditionViolated { modulus, limit })
    }
}

/// Relative contribution of shells `R+1` and `R+2`.
pub(crate) fn finish_bilateral(
    f: &dyn TermFunction,
    r: SeriesResult,
    hyperplane: bool,
    ctx: &EvalContext,
) -> Result<Evaluated> {
    let (extra, _) = shell_range_sum(f, r.radius_used + 1, r.radius_used + 2, hyperplane, ctx)?;
    let v = r.value.abs_float();
    let e = extra.abs_float();
    let stability = if v.is_zero() {
        e.to_f64()
    } else {
        rug::Float::with_val(64, &e / &v).to_f64()
    };
    Ok(Evaluated {
        result: r,
        stability: Some(stability),
    })
}

/// Evaluates one side of `id`.
pub fn eval_side(id: IdentityId, side: Side, params: &ParamSet, ctx: &EvalContext) -> Result<SeriesResult> {
    eval_side_detailed(id, side, params, ctx).map(|e| e.result)
}

/// [`eval_side`] together with the radius-stability measurement.
pub fn eval_side_detailed(id: IdentityId, side: Side, params: &ParamSet, ctx: &EvalContext) -> Result<Evaluated> {
    use IdentityId as I;
    params.validate(id)?;
    match params {
        ParamSet::BilateralCn(p) => {
            let v = CnValues::new(p, ctx)?;
            let (z, c, m) = (&v.z, &v.c, &v.m);
            match (id, side) {
                (I::GiCn6psi6 | I::TeReduction | I::KmtTransform, Side::Left) => {
                    cn::left_sum(&v.a, z, c, m, Support::All, cn::te_modulus(&v.a, m, ctx), ctx)
                }
                (I::GiCn6psi6 | I::TeReduction, Side::Right) => cn::te_right(&v.a, z, c, m, ctx),
                (I::KmtTransform, Side::Right) => {
                    let w = v.w.as_ref().expect("validated");
                    cn::kmt_right(&v.a, z, w, c, m, ctx)
                }
                (I::KmsSummation, _) => {
                    let (b, d) = (v.b.as_ref().expect("validated"), v.d.as_ref().expect("validated"));
                    match side {
                        Side::Left => {
                            let upper = cn::kms_upper(&v.a, b, d);
                            cn::left_sum(&upper, z, c, m, Support::All, cn::kms_modulus(b, d, m, ctx), ctx)
                        }
                        Side::Right => cn::kms_right(&v.a, b, d, z, c, m, ctx),
                    }
                }
                (I::C2Gasper, Side::Left) => {
                    let upper = cn::c2_upper(&v.a, z);
                    cn::left_sum(&upper, z, c, m, Support::Nonnegative, cn::c2_modulus(z, m, ctx), ctx)
                }
                (I::C2Gasper, Side::Right) => cn::c2_right(&v.a, z, c, m, ctx),
                _ => unreachable!("family checked by validate"),
            }
        }
        ParamSet::FiniteCn(p) => {
            let v = FiniteValues::new(p, ctx)?;
            let b = v.b.as_ref().expect("validated");
            match id {
                I::AkFinite => {
                    let d = v.d.as_ref().expect("validated");
                    match side {
                        Side::Left => finite::ak_left(&v.z, &v.c, &v.m, &v.l, b, d, ctx),
                        Side::Right => finite::ak_right(&v.z, &v.c, &v.m, &v.l, b, d, ctx),
                    }
                }
                I::N0Terminating => match side {
                    Side::Left => finite::n0_left(&v.z, &v.m, &v.a[0], b, ctx),
                    Side::Right => finite::n0_right(&v.z, &v.m, &v.a[0], b, ctx),
                },
                I::CmlWatson => {
                    let w = finite::Watson {
                        b,
                        c: &v.c[0],
                        d: v.d.as_ref().expect("validated"),
                        e: v.e.as_ref().expect("validated"),
                    };
                    match side {
                        Side::Left => finite::cml_left(&v.z, &v.m, &w, ctx),
                        Side::Right => finite::cml_right(&v.z, &v.m, &w, ctx),
                    }
                }
                _ => unreachable!("family checked by validate"),
            }
        }
        ParamSet::OneVar(p) => {
            let v = OneVarValues::new(p, ctx)?;
            match (id, side) {
                (_, Side::Left) => onevar::left(&v, ctx),
                (I::FlOnevar, Side::Right) => onevar::right_cp(&v, RootBranch::Principal, ctx),
                (I::FlAnForm, Side::Right) => onevar::right_ap(&v, ctx),
                _ => unreachable!("family checked by validate"),
            }
        }
        ParamSet::AnBilateral(p) => {
            let v = AnValues::new(p, ctx)?;
            match side {
                Side::Left => an::left(&v, ctx),
                Side::Right => an::right(&v, ctx),
            }
        }
    }
}

/// Evaluates both sides of `id` and compares them. Evaluation failures give a
/// failed report with diagnostics rather than an error.
pub fn verify(id: IdentityId, params: &ParamSet, ctx: &EvalContext) -> VerificationReport {
    if let Err(e) = params.validate(id) {
        return VerificationReport::failed(Target::Identity(id), params.clone(), ctx, None, e);
    }
    let left = eval_side_detailed(id, Side::Left, params, ctx);
    let right = eval_side_detailed(id, Side::Right, params, ctx);
    VerificationReport::compare(Target::Identity(id), params.clone(), ctx, left, right)
}

/// Compares the `C_p` and `A_p` finite forms of the one-variable series after
/// removing their common infinite-product prefactor. Works in both modes.
pub fn cross_check_fl(params: &OneVarParams, ctx: &EvalContext) -> VerificationReport {
    let set = ParamSet::OneVar(params.clone());
    let target = Target::CrossCheckFl;
    if let Err(e) = set.validate(IdentityId::FlOnevar) {
        return VerificationReport::failed(target, set, ctx, None, e);
    }
    let sides = OneVarValues::new(params, ctx).map(|v| {
        (
            onevar::cp_finite(&v, RootBranch::Principal, ctx),
            onevar::ap_finite(&v, ctx),
        )
    });
    match sides {
        Ok((l, r)) => VerificationReport::compare(target, set, ctx, l, r),
        Err(e) => VerificationReport::failed(target, set, ctx, None, e),
    }
}

/// The series side of the reduction formula at `z` and at `w`, each divided
/// by its own `z`-dependent prefactor `U V`. Both equal the bare `x`-sum.
pub fn kmt_consistency(p: &BilateralCnParams, ctx: &EvalContext) -> Result<(QComplex, QComplex)> {
    let v = CnValues::new(p, ctx)?;
    let w = v
        .w
        .as_ref()
        .ok_or_else(|| Error::SchemaMismatch("second base point w is required".into()))?;
    let modulus = cn::te_modulus(&v.a, &v.m, ctx);
    let at = |z: &[QComplex]| -> Result<QComplex> {
        let s = cn::left_sum(&v.a, z, &v.c, &v.m, Support::All, modulus, ctx)?;
        Ok(s.result.value / cn::te_prefactor(&v.a, z, &v.c, &v.m, ctx)?)
    };
    Ok((at(&v.z)?, at(w)?))
}

/// The bare finite sum on the reduced side of the reduction formula.
pub fn te_x_sum(p: &BilateralCnParams, ctx: &EvalContext) -> Result<SeriesResult> {
    let v = CnValues::new(p, ctx)?;
    cn::x_sum(&v.a, &v.c, &v.m, ctx)
}

/// Substitutes `z_1 = sqrt(a)`, `(a_1..a_4) = (b, c, d, e)/sqrt(a)` and
/// `c_j = q sqrt(a)/f_j` into the `n = 1` reduction formula; float mode only.
pub fn one_var_as_cn(v: &OneVarValues, ctx: &EvalContext) -> Result<CnValues> {
    ctx.require_float()?;
    let s = v.a.sqrt()?;
    Ok(CnValues {
        a: [&v.b, &v.c, &v.d, &v.e].iter().map(|u| *u / &s).collect(),
        z: vec![s.clone()],
        c: v.f.iter().map(|f| ctx.q() * &s / f).collect(),
        m: v.m.clone(),
        w: None,
        b: None,
        d: None,
    })
}

/// Upper parameters `a_j = z_j`, `a_{n+j} = q^{-m_j}/z_j`, `1/a`, `1/b` that
/// turn the `C_n` 6psi6 series into the terminating 6W5 sum.
pub fn terminating_as_gi(v: &FiniteValues, ctx: &EvalContext) -> Result<CnValues> {
    let (Some(a), Some(b)) = (v.a.first(), v.b.as_ref()) else {
        return Err(Error::SchemaMismatch("letters a and b are required".into()));
    };
    let mut upper: Vec<QComplex> = v.z.clone();
    upper.extend(v.z.iter().zip(&v.m).map(|(zj, &mj)| ctx.q_pow(-mj) / zj));
    upper.push(a.recip());
    upper.push(b.recip());
    Ok(CnValues {
        a: upper,
        z: v.z.clone(),
        c: vec![],
        m: vec![],
        w: None,
        b: None,
        d: None,
    })
}

/// Both sides of the reduction formula for explicit scalar values.
pub fn te_sides(v: &CnValues, ctx: &EvalContext) -> (Result<Evaluated>, Result<Evaluated>) {
    let modulus = cn::te_modulus(&v.a, &v.m, ctx);
    (
        cn::left_sum(&v.a, &v.z, &v.c, &v.m, Support::All, modulus, ctx),
        cn::te_right(&v.a, &v.z, &v.c, &v.m, ctx),
    )
}

/// Both sides of the one-variable identity, with a chosen root of `aq` on
/// the right.
pub fn one_var_sides(
    v: &OneVarValues,
    branch: RootBranch,
    ctx: &EvalContext,
) -> (Result<Evaluated>, Result<Evaluated>) {
    (onevar::left(v, ctx), onevar::right_cp(v, branch, ctx))
}

/// The summand of a bilateral left side, whether it lives on the hyperplane
/// `|y| = 0`, and its convergence modulus. `None` for terminating identities.
pub fn bilateral_term(
    id: IdentityId,
    params: &ParamSet,
    ctx: &EvalContext,
) -> Result<Option<(terms::FactorizedTerm, bool, f64)>> {
    use IdentityId as I;
    params.validate(id)?;
    Ok(match params {
        ParamSet::BilateralCn(p) => {
            let v = CnValues::new(p, ctx)?;
            let (upper, support, modulus) = match id {
                I::KmsSummation => {
                    let (b, d) = (v.b.as_ref().expect("validated"), v.d.as_ref().expect("validated"));
                    (cn::kms_upper(&v.a, b, d), Support::All, cn::kms_modulus(b, d, &v.m, ctx))
                }
                I::C2Gasper => (
                    cn::c2_upper(&v.a, &v.z),
                    Support::Nonnegative,
                    cn::c2_modulus(&v.z, &v.m, ctx),
                ),
                _ => (v.a.clone(), Support::All, cn::te_modulus(&v.a, &v.m, ctx)),
            };
            Some((cn::left_term(&upper, &v.z, &v.c, &v.m, support, ctx)?, false, modulus))
        }
        ParamSet::FiniteCn(_) => None,
        ParamSet::OneVar(p) => {
            let v = OneVarValues::new(p, ctx)?;
            Some((onevar::left_term(&v, ctx)?, false, onevar::modulus(&v, ctx)))
        }
        ParamSet::AnBilateral(p) => {
            let v = AnValues::new(p, ctx)?;
            Some((an::left_term(&v, ctx)?, true, an::modulus(&v, ctx)))
        }
    })
}

/// Convergence modulus of the left side, `None` for terminating identities.
pub fn convergence_modulus(id: IdentityId, params: &ParamSet, ctx: &EvalContext) -> Result<Option<f64>> {
    Ok(bilateral_term(id, params, ctx)?.map(|(_, _, m)| m))
}

/// Evaluates every finite part of `id` and the bilateral summand on the cube
/// of the given radius, so that any denominator closer to zero than the
/// context margin surfaces as `SingularParameter`.
pub fn genericity_probe(id: IdentityId, params: &ParamSet, ctx: &EvalContext, radius: u32) -> Result<()> {
    match bilateral_term(id, params, ctx)? {
        Some((f, hyperplane, _)) => {
            crate::summation::sum_to_radius(&f, radius, hyperplane, ctx)?;
        }
        None => {
            eval_side_detailed(id, Side::Left, params, ctx)?;
        }
    }
    match (id, params) {
        (IdentityId::FlOnevar | IdentityId::FlAnForm, ParamSet::OneVar(p)) => {
            let v = OneVarValues::new(p, ctx)?;
            onevar::cp_finite(&v, RootBranch::Principal, ctx)?;
            onevar::ap_finite(&v, ctx)?;
            if ctx.mode() == crate::qarith::Mode::Float {
                onevar::cp_finite(&v, RootBranch::Negated, ctx)?;
                eval_side_detailed(id, Side::Right, params, ctx)?;
            }
        }
        (IdentityId::KmtTransform, ParamSet::BilateralCn(p)) => {
            let v = CnValues::new(p, ctx)?;
            let w = v.w.as_ref().expect("validated");
            let f = cn::left_term(&v.a, w, &v.c, &v.m, Support::All, ctx)?;
            crate::summation::sum_to_radius(&f, radius, false, ctx)?;
            cn::te_right(&v.a, &v.z, &v.c, &v.m, ctx)?;
            cn::te_right(&v.a, w, &v.c, &v.m, ctx)?;
        }
        _ => {
            eval_side_detailed(id, Side::Right, params, ctx)?;
        }
    }
    Ok(())
}
