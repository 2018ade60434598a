//! The Karlsson-Minton type `A_n` series on the hyperplane `|y| = 0` and its
//! reduction to a finite `A_p` sum.

use crate::error::Result;
use crate::qarith::{capital_product, index_sum, EvalContext};
use crate::summation::{finite_box_sum, hyperplane_sum};

use super::params::AnValues;
use super::terms::{FactorizedTerm, Letters, Prod, Support, WeightSpec};
use super::{check_convergence, finish_bilateral, Evaluated};

/// Modulus of `q^{1-|m|-n} B/A`.
pub fn modulus(v: &AnValues, ctx: &EvalContext) -> f64 {
    let n = v.z.len() as i64;
    let ratio = capital_product(&v.b, ctx) / capital_product(&v.a, ctx);
    (ctx.q_pow(1 - index_sum(&v.m) - n) * ratio).abs_f64()
}

pub fn left_term(v: &AnValues, ctx: &EvalContext) -> Result<FactorizedTerm> {
    let coords = v
        .z
        .iter()
        .map(|zk| {
            let mut t = Letters::new();
            for (ci, &mi) in v.c.iter().zip(&v.m) {
                t.num(ctx.q_pow(mi) * ci * zk).den(ci * zk);
            }
            for (ai, bi) in v.a.iter().zip(&v.b) {
                t.num(ai * zk).den(bi * zk);
            }
            t
        })
        .collect();
    FactorizedTerm::new(WeightSpec::Delta { base: v.z.clone() }, coords, None, Support::All, ctx)
}

pub(crate) fn left(v: &AnValues, ctx: &EvalContext) -> Result<Evaluated> {
    ctx.require_float()?;
    check_convergence(modulus(v, ctx), ctx)?;
    let f = left_term(v, ctx)?;
    let r = hyperplane_sum(&f, ctx)?;
    finish_bilateral(&f, r, true, ctx)
}

pub(crate) fn right(v: &AnValues, ctx: &EvalContext) -> Result<Evaluated> {
    let q = ctx.q();
    let n = v.z.len() as i64;
    let mm = index_sum(&v.m);
    let big_a = capital_product(&v.a, ctx);
    let big_b = capital_product(&v.b, ctx);
    let big_z = capital_product(&v.z, ctx);
    let az = &big_a * &big_z;
    let bz = &big_b * &big_z;
    let mut p = Prod::new(ctx);
    p.inf(&(ctx.q_pow(1 - mm) / &az))?
        .inf(&(ctx.q_pow(1 - n) * &bz))?
        .inf_den(q)?
        .inf_den(&(ctx.q_pow(1 - mm - n) * &big_b / &big_a))?;
    for (bi, zi) in v.b.iter().zip(&v.z) {
        for (ak, zk) in v.a.iter().zip(&v.z) {
            p.inf(&(bi / ak))?.inf(&(q * zk / zi))?;
            p.inf_den(&(q / &(ak * zi)))?.inf_den(&(bi * zk))?;
        }
    }
    for (bk, zk) in v.b.iter().zip(&v.z) {
        for (ci, &mi) in v.c.iter().zip(&v.m) {
            p.poch(&(ctx.q_pow(-mi) * bk / ci), mi)?
                .poch_den(&(ctx.q_pow(1 - mi) / &(ci * zk)), mi)?;
        }
    }
    let mut total = Letters::new();
    total.num(ctx.q_pow(n) / &bz).den(ctx.q_pow(1 - mm) / &az);
    let coords = v
        .c
        .iter()
        .map(|ci| {
            let mut t = Letters::new();
            for (ak, bk) in v.a.iter().zip(&v.b) {
                t.num(ci / ak).den(q * ci / bk);
            }
            for (ck, &mk) in v.c.iter().zip(&v.m) {
                t.num(ctx.q_pow(-mk) * ci / ck).den(q * ci / ck);
            }
            t.arg(q.clone());
            t
        })
        .collect();
    let f = FactorizedTerm::new(
        WeightSpec::Delta { base: v.c.clone() },
        coords,
        Some(total),
        Support::All,
        ctx,
    )?;
    let bounds: Vec<u32> = v.m.iter().map(|&x| x as u32).collect();
    let s = finite_box_sum(&bounds, &f, ctx)?;
    Ok(Evaluated::product_times(&p, s))
}
