//! The one-variable well-poised bilateral series with Karlsson-Minton type
//! pairs `(f_j, aq^{1+m_j}/f_j)`, and its two finite forms.

use crate::error::Result;
use crate::qarith::{index_sum, EvalContext, Mode, QComplex};
use crate::rootsys::WeylCRatio;
use crate::summation::{bilateral_sum, finite_box_sum, SeriesResult};

use super::params::OneVarValues;
use super::terms::{FactorizedTerm, Letters, Prod, Support, WeightSpec};
use super::{check_convergence, finish_bilateral, Evaluated};

/// Which square root of `aq` the float evaluation of the `C_p` weight uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootBranch {
    Principal,
    Negated,
}

fn bounds(m: &[i64]) -> Vec<u32> {
    m.iter().map(|&x| x as u32).collect()
}

/// Modulus of `a^2 q^{1-|m|}/(bcde)`.
pub fn modulus(v: &OneVarValues, ctx: &EvalContext) -> f64 {
    (&v.a * &v.a * ctx.q_pow(1 - index_sum(&v.m)) / &(&v.b * &v.c * &v.d * &v.e)).abs_f64()
}

pub fn left_term(v: &OneVarValues, ctx: &EvalContext) -> Result<FactorizedTerm> {
    let q = ctx.q();
    let aq = &v.a * q;
    let mut l = Letters::new();
    for u in [&v.b, &v.c, &v.d, &v.e] {
        l.num(u.clone()).den(&aq / u);
    }
    for (fj, &mj) in v.f.iter().zip(&v.m) {
        l.num(fj.clone())
            .num(&v.a * &ctx.q_pow(1 + mj) / fj)
            .den(ctx.q_pow(-mj) * fj)
            .den(&aq / fj);
    }
    l.arg(&v.a * &v.a * ctx.q_pow(1 - index_sum(&v.m)) / &(&v.b * &v.c * &v.d * &v.e));
    FactorizedTerm::new(WeightSpec::WellPoised { a: v.a.clone() }, vec![l], None, Support::All, ctx)
}

pub(crate) fn left(v: &OneVarValues, ctx: &EvalContext) -> Result<Evaluated> {
    ctx.require_float()?;
    check_convergence(modulus(v, ctx), ctx)?;
    let f = left_term(v, ctx)?;
    let r = bilateral_sum(&f, ctx)?;
    finish_bilateral(&f, r, false, ctx)
}

/// The shared infinite-product prefactor of both finite forms.
fn prefactor(p: &mut Prod<'_>, v: &OneVarValues, ctx: &EvalContext) -> Result<()> {
    let q = ctx.q();
    let aq = &v.a * q;
    let (b, c, d, e) = (&v.b, &v.c, &v.d, &v.e);
    for x in [
        q.clone(),
        aq.clone(),
        q / &v.a,
        &aq / &(b * c),
        &aq / &(b * d),
        &aq / &(b * e),
        &aq / &(c * d),
        &aq / &(c * e),
        &aq / &(d * e),
    ] {
        p.inf(&x)?;
    }
    for u in [b, c, d, e] {
        p.inf_den(&(q / u))?;
    }
    for u in [b, c, d, e] {
        p.inf_den(&(&aq / u))?;
    }
    p.inf_den(&(&aq * &v.a / &(b * c * d * e)))?;
    Ok(())
}

/// `W(s q^x/f)/W(s/f)` for `s^2 = aq`.
fn root_weight(v: &OneVarValues, branch: RootBranch, ctx: &EvalContext) -> Result<WeightSpec> {
    let inv_f: Vec<QComplex> = v.f.iter().map(QComplex::recip).collect();
    let aq = &v.a * ctx.q();
    Ok(match ctx.mode() {
        Mode::Exact => WeightSpec::WeylC {
            base: inv_f,
            scale_sq: aq,
        },
        Mode::Float => {
            let mut s = aq.sqrt()?;
            if branch == RootBranch::Negated {
                s = -s;
            }
            WeightSpec::WeylC {
                base: inv_f.iter().map(|x| &s * x).collect(),
                scale_sq: ctx.one(),
            }
        }
    })
}

/// `W(sqrt(aq) q^x/f)/W(sqrt(aq)/f)` at one point `x`, evaluated literally with
/// both square roots of `aq`; float mode only.
pub fn root_weights(v: &OneVarValues, x: &[i64], ctx: &EvalContext) -> Result<(QComplex, QComplex)> {
    ctx.require_float()?;
    let s = (&v.a * ctx.q()).sqrt()?;
    let eval = |s: &QComplex| -> Result<QComplex> {
        let base: Vec<QComplex> = v.f.iter().map(|fj| s / fj).collect();
        let shifted = crate::rootsys::shift(&base, x, ctx);
        Ok(WeylCRatio::new(&base, ctx)?.eval_shifted(&shifted))
    };
    Ok((eval(&s)?, eval(&-&s)?))
}

/// The `C_p` form without its infinite products.
pub(crate) fn cp_finite(v: &OneVarValues, branch: RootBranch, ctx: &EvalContext) -> Result<Evaluated> {
    let q = ctx.q();
    let (a, b, c, d, e) = (&v.a, &v.b, &v.c, &v.d, &v.e);
    let (f, m) = (&v.f, &v.m);
    let mm = index_sum(m);
    let aq = a * q;
    let bcde = b * c * d * e;
    let mut p = Prod::new(ctx);
    p.poch_den(&(&bcde / &(a * a)), mm)?;
    for (fj, &mj) in f.iter().zip(m) {
        for u in [b, c, d, e] {
            p.poch(&(q * u / fj), mj)?;
        }
        p.poch_den(&(&aq / fj), mj)?.poch_den(&(q / fj), mj)?;
    }
    let aq2 = &aq * q;
    for j in 0..f.len() {
        for k in j + 1..f.len() {
            p.poch(&(&aq2 / &(&f[j] * &f[k])), m[j] + m[k])?;
        }
        for fk in f {
            p.poch_den(&(&aq2 / &(&f[j] * fk)), m[j])?;
        }
    }
    let arg = &bcde * &ctx.q_pow(mm) / &(a * a);
    let coords = f
        .iter()
        .map(|fj| {
            let mut t = Letters::new();
            for u in [b, c, d, e] {
                t.num(&aq / &(u * fj)).den(u * q / fj);
            }
            for (fk, &mk) in f.iter().zip(m) {
                t.num(&aq / &(fj * fk))
                    .num(ctx.q_pow(-mk) * fk / fj)
                    .den(q * fk / fj)
                    .den(a * &ctx.q_pow(2 + mk) / &(fj * fk));
            }
            t.arg(arg.clone());
            t
        })
        .collect();
    let term = FactorizedTerm::new(root_weight(v, branch, ctx)?, coords, None, Support::All, ctx)?;
    let s = finite_box_sum(&bounds(m), &term, ctx)?;
    Ok(Evaluated::product_times(&p, s))
}

/// The `A_p` form without its infinite products.
pub(crate) fn ap_finite(v: &OneVarValues, ctx: &EvalContext) -> Result<Evaluated> {
    let q = ctx.q();
    let (a, b, c, d, e) = (&v.a, &v.b, &v.c, &v.d, &v.e);
    let (f, m) = (&v.f, &v.m);
    let mm = index_sum(m);
    let aq = a * q;
    let mut p = Prod::new(ctx);
    for (fj, &mj) in f.iter().zip(m) {
        p.poch(&(b * q / fj), mj)?
            .poch(&(c * q / fj), mj)?
            .poch_den(&(&aq / fj), mj)?
            .poch_den(&(q / fj), mj)?;
    }
    p.poch(&(d * e / a), mm)?.poch_den(&(b * c * d * e / &(a * a)), mm)?;
    let mut total = Letters::new();
    total.num(b * c / a).den(a * &ctx.q_pow(1 - mm) / &(d * e));
    let coords = f
        .iter()
        .map(|fj| {
            let mut t = Letters::new();
            t.num(&aq / &(d * fj)).num(&aq / &(e * fj)).den(q * b / fj).den(q * c / fj);
            for (fk, &mk) in f.iter().zip(m) {
                t.num(ctx.q_pow(-mk) * fk / fj).den(q * fk / fj);
            }
            t.arg(q.clone());
            t
        })
        .collect();
    let inv_f: Vec<QComplex> = f.iter().map(QComplex::recip).collect();
    let term = FactorizedTerm::new(WeightSpec::Delta { base: inv_f }, coords, Some(total), Support::All, ctx)?;
    let s = finite_box_sum(&bounds(m), &term, ctx)?;
    Ok(Evaluated::product_times(&p, s))
}

pub(crate) fn right_cp(v: &OneVarValues, branch: RootBranch, ctx: &EvalContext) -> Result<Evaluated> {
    let mut p = Prod::new(ctx);
    prefactor(&mut p, v, ctx)?;
    let fin = cp_finite(v, branch, ctx)?;
    Ok(fin.scaled(&p.value(), p.tail()))
}

pub(crate) fn right_ap(v: &OneVarValues, ctx: &EvalContext) -> Result<Evaluated> {
    let mut p = Prod::new(ctx);
    prefactor(&mut p, v, ctx)?;
    let fin = ap_finite(v, ctx)?;
    Ok(fin.scaled(&p.value(), p.tail()))
}

/// The `C_p` finite sum alone, for structural checks.
pub fn cp_sum(v: &OneVarValues, branch: RootBranch, ctx: &EvalContext) -> Result<SeriesResult> {
    cp_finite(v, branch, ctx).map(|e| e.result)
}
