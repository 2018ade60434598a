//! Terminating `C_n` identities: both sides are finite sums and products, so
//! they are exact in rational arithmetic.

use crate::error::Result;
use crate::qarith::{index_sum, EvalContext, QComplex};
use crate::summation::finite_box_sum;

use super::cn::{cc_factor, half_shift_weight};
use super::terms::{FactorizedTerm, Letters, Prod, Support, WeightSpec};
use super::Evaluated;

fn bounds(m: &[i64]) -> Vec<u32> {
    m.iter().map(|&x| x as u32).collect()
}

fn weyl(z: &[QComplex], ctx: &EvalContext) -> WeightSpec {
    WeightSpec::WeylC {
        base: z.to_vec(),
        scale_sq: ctx.one(),
    }
}

/// `prod_{j,k}(qz_jz_k)_{s_j} / prod_{j<k}(qz_jz_k)_{s_j+s_k}`.
fn zz_factor(p: &mut Prod<'_>, z: &[QComplex], s: &[i64], ctx: &EvalContext) -> Result<()> {
    let q = ctx.q();
    for j in 0..z.len() {
        for zk in z {
            p.poch(&(q * &z[j] * zk), s[j])?;
        }
        for k in j + 1..z.len() {
            p.poch_den(&(q * &z[j] * &z[k]), s[j] + s[k])?;
        }
    }
    Ok(())
}

pub(crate) fn ak_left(
    z: &[QComplex],
    c: &[QComplex],
    m: &[i64],
    l: &[i64],
    b: &QComplex,
    d: &QComplex,
    ctx: &EvalContext,
) -> Result<Evaluated> {
    let q = ctx.q();
    let arg = ctx.q_pow(1 - index_sum(m) + index_sum(l)) / &(b * d);
    let coords = z
        .iter()
        .map(|zk| {
            let mut t = Letters::new();
            for (cj, &mj) in c.iter().zip(m) {
                t.num(ctx.q_pow(mj) * cj * zk)
                    .num(q * zk / cj)
                    .den(cj * zk)
                    .den(ctx.q_pow(1 - mj) * zk / cj);
            }
            for (zj, &lj) in z.iter().zip(l) {
                t.num(zj * zk)
                    .num(ctx.q_pow(-lj) * zk / zj)
                    .den(q * zk / zj)
                    .den(ctx.q_pow(1 + lj) * zj * zk);
            }
            t.num(b * zk).num(d * zk).den(q * zk / b).den(q * zk / d);
            t.arg(arg.clone());
            t
        })
        .collect();
    let f = FactorizedTerm::new(weyl(z, ctx), coords, None, Support::All, ctx)?;
    Ok(Evaluated::series(finite_box_sum(&bounds(l), &f, ctx)?))
}

pub(crate) fn ak_right(
    z: &[QComplex],
    c: &[QComplex],
    m: &[i64],
    l: &[i64],
    b: &QComplex,
    d: &QComplex,
    ctx: &EvalContext,
) -> Result<Evaluated> {
    let q = ctx.q();
    let (mm, ll) = (index_sum(m), index_sum(l));
    let bd = b * d;
    let mut p = Prod::new(ctx);
    p.poch(&(q / &bd), ll)?.poch_den(&(ctx.q_pow(-ll) * &bd), mm)?;
    for (cj, &mj) in c.iter().zip(m) {
        p.poch(&(cj * b), mj)?.poch(&(cj * d), mj)?;
    }
    for (zk, &lk) in z.iter().zip(l) {
        p.poch_den(&(q * zk / b), lk)?.poch_den(&(q * zk / d), lk)?;
    }
    // prod_{j,k}(qz_jz_k)_{l_k} is symmetric under j <-> k
    zz_factor(&mut p, z, l, ctx)?;
    cc_factor(&mut p, c, m)?;
    for (zk, &lk) in z.iter().zip(l) {
        for (cj, &mj) in c.iter().zip(m) {
            p.poch(&(ctx.q_pow(-lk) * cj / zk), mj)?.poch_den(&(cj / zk), mj)?;
        }
    }
    let qinv = q.recip();
    let arg = ctx.q_pow(mm - ll) * &bd;
    let coords = c
        .iter()
        .map(|cj| {
            let mut t = Letters::new();
            for (zk, &lk) in z.iter().zip(l) {
                t.num(ctx.q_pow(lk) * cj * zk)
                    .num(cj / zk)
                    .den(cj * zk)
                    .den(ctx.q_pow(-lk) * cj / zk);
            }
            for (ck, &mk) in c.iter().zip(m) {
                t.num(&qinv * &(cj * ck))
                    .num(ctx.q_pow(-mk) * cj / ck)
                    .den(q * cj / ck)
                    .den(ctx.q_pow(mk) * cj * ck);
            }
            t.num(cj / b).num(cj / d).den(cj * b).den(cj * d);
            t.arg(arg.clone());
            t
        })
        .collect();
    let f = FactorizedTerm::new(half_shift_weight(c, ctx)?, coords, None, Support::All, ctx)?;
    let s = finite_box_sum(&bounds(m), &f, ctx)?;
    Ok(Evaluated::product_times(&p, s))
}

pub(crate) fn n0_left(z: &[QComplex], m: &[i64], a: &QComplex, b: &QComplex, ctx: &EvalContext) -> Result<Evaluated> {
    let q = ctx.q();
    let arg = a * b * &ctx.q_pow(index_sum(m) + 1);
    let coords = z
        .iter()
        .map(|zj| {
            let mut t = Letters::new();
            t.num(zj / a).num(zj / b).den(q * zj * a).den(q * zj * b);
            for (zk, &mk) in z.iter().zip(m) {
                t.num(zj * zk)
                    .num(ctx.q_pow(-mk) * zj / zk)
                    .den(q * zj / zk)
                    .den(ctx.q_pow(mk + 1) * zj * zk);
            }
            t.arg(arg.clone());
            t
        })
        .collect();
    let f = FactorizedTerm::new(weyl(z, ctx), coords, None, Support::All, ctx)?;
    Ok(Evaluated::series(finite_box_sum(&bounds(m), &f, ctx)?))
}

pub(crate) fn n0_right(z: &[QComplex], m: &[i64], a: &QComplex, b: &QComplex, ctx: &EvalContext) -> Result<Evaluated> {
    let q = ctx.q();
    let mut p = Prod::new(ctx);
    p.poch(&(q * a * b), index_sum(m))?;
    for (zj, &mj) in z.iter().zip(m) {
        p.poch_den(&(q * a * zj), mj)?.poch_den(&(q * b * zj), mj)?;
    }
    zz_factor(&mut p, z, m, ctx)?;
    Ok(Evaluated::closed(&p))
}

/// The four letters `b, c, d, e` of the Watson transformation.
pub(crate) struct Watson<'a> {
    pub b: &'a QComplex,
    pub c: &'a QComplex,
    pub d: &'a QComplex,
    pub e: &'a QComplex,
}

pub(crate) fn cml_left(z: &[QComplex], m: &[i64], w: &Watson<'_>, ctx: &EvalContext) -> Result<Evaluated> {
    let q = ctx.q();
    let arg = ctx.q_pow(index_sum(m) + 2) / &(w.b * w.c * w.d * w.e);
    let coords = z
        .iter()
        .map(|zj| {
            let mut t = Letters::new();
            for u in [w.b, w.c, w.d, w.e] {
                t.num(u * zj).den(q * zj / u);
            }
            for (zk, &mk) in z.iter().zip(m) {
                t.num(zj * zk)
                    .num(ctx.q_pow(-mk) * zj / zk)
                    .den(q * zj / zk)
                    .den(ctx.q_pow(1 + mk) * zj * zk);
            }
            t.arg(arg.clone());
            t
        })
        .collect();
    let f = FactorizedTerm::new(weyl(z, ctx), coords, None, Support::All, ctx)?;
    Ok(Evaluated::series(finite_box_sum(&bounds(m), &f, ctx)?))
}

pub(crate) fn cml_right(z: &[QComplex], m: &[i64], w: &Watson<'_>, ctx: &EvalContext) -> Result<Evaluated> {
    let q = ctx.q();
    let mm = index_sum(m);
    let de = w.d * w.e;
    let mut p = Prod::new(ctx);
    p.poch(&(q / &de), mm)?;
    for (zj, &mj) in z.iter().zip(m) {
        p.poch_den(&(q * zj / w.d), mj)?.poch_den(&(q * zj / w.e), mj)?;
    }
    zz_factor(&mut p, z, m, ctx)?;
    let mut total = Letters::new();
    total.num(q / &(w.b * w.c)).den(ctx.q_pow(-mm) * &de);
    let coords = z
        .iter()
        .map(|zj| {
            let mut t = Letters::new();
            t.num(w.d * zj).num(w.e * zj).den(q * zj / w.b).den(q * zj / w.c);
            for (zk, &mk) in z.iter().zip(m) {
                t.num(ctx.q_pow(-mk) * zj / zk).den(q * zj / zk);
            }
            t.arg(q.clone());
            t
        })
        .collect();
    let f = FactorizedTerm::new(
        WeightSpec::Delta { base: z.to_vec() },
        coords,
        Some(total),
        Support::All,
        ctx,
    )?;
    let s = finite_box_sum(&bounds(m), &f, ctx)?;
    Ok(Evaluated::product_times(&p, s))
}
