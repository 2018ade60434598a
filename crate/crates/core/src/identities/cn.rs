//! Bilateral `C_n` series with Karlsson-Minton type parameter pairs and their
//! closed or reduced forms.

use crate::error::Result;
use crate::qarith::{capital_product, index_sum, EvalContext, Mode, QComplex};
use crate::summation::{bilateral_sum, finite_box_sum, SeriesResult};

use super::terms::{FactorizedTerm, Letters, Prod, Support, WeightSpec};
use super::{check_convergence, finish_bilateral, Evaluated};

/// `W(q^{-1/2} c q^x)/W(q^{-1/2} c)`: exact mode uses `s^2 = 1/q` directly,
/// float mode scales by the principal root of `q`.
pub(crate) fn half_shift_weight(c: &[QComplex], ctx: &EvalContext) -> Result<WeightSpec> {
    Ok(match ctx.mode() {
        Mode::Exact => WeightSpec::WeylC {
            base: c.to_vec(),
            scale_sq: ctx.q().recip(),
        },
        Mode::Float => {
            let s = ctx.q().sqrt()?.recip();
            WeightSpec::WeylC {
                base: c.iter().map(|x| &s * x).collect(),
                scale_sq: ctx.one(),
            }
        }
    })
}

/// The summand of the Karlsson-Minton type `C_n` series with upper
/// parameters `a` (length `2n+2`), pairs `(c_j, m_j)` and base point `z`.
pub fn left_term(
    a: &[QComplex],
    z: &[QComplex],
    c: &[QComplex],
    m: &[i64],
    support: Support,
    ctx: &EvalContext,
) -> Result<FactorizedTerm> {
    let q = ctx.q();
    let big_a = capital_product(a, ctx);
    let arg = ctx.q_pow(1 - index_sum(m)) / &big_a;
    let coords = z
        .iter()
        .map(|zk| {
            let mut l = Letters::new();
            for (cj, &mj) in c.iter().zip(m) {
                l.num(ctx.q_pow(mj) * cj * zk)
                    .num(q * zk / cj)
                    .den(cj * zk)
                    .den(ctx.q_pow(1 - mj) * zk / cj);
            }
            for aj in a {
                l.num(aj * zk).den(q * zk / aj);
            }
            l.arg(arg.clone());
            l
        })
        .collect();
    FactorizedTerm::new(
        WeightSpec::WeylC {
            base: z.to_vec(),
            scale_sq: ctx.one(),
        },
        coords,
        None,
        support,
        ctx,
    )
}

/// Modulus of `q^{1-|m|}/A`.
pub fn te_modulus(a: &[QComplex], m: &[i64], ctx: &EvalContext) -> f64 {
    (ctx.q_pow(1 - index_sum(m)) / capital_product(a, ctx)).abs_f64()
}

pub(crate) fn left_sum(
    a: &[QComplex],
    z: &[QComplex],
    c: &[QComplex],
    m: &[i64],
    support: Support,
    modulus: f64,
    ctx: &EvalContext,
) -> Result<Evaluated> {
    ctx.require_float()?;
    check_convergence(modulus, ctx)?;
    let f = left_term(a, z, c, m, support, ctx)?;
    let r = bilateral_sum(&f, ctx)?;
    finish_bilateral(&f, r, false, ctx)
}

/// The `z`-dependent infinite products `prod_{j<=k}(qz_jz_k, q/z_jz_k)
/// prod_{j,k}(qz_k/z_j) / prod_{k,j}(qz_k/a_j, q/a_jz_k)`.
fn u_z_part(p: &mut Prod<'_>, a: &[QComplex], z: &[QComplex], ctx: &EvalContext) -> Result<()> {
    let q = ctx.q();
    for j in 0..z.len() {
        for k in j..z.len() {
            let zz = &z[j] * &z[k];
            p.inf(&(q * &zz))?.inf(&(q / &zz))?;
        }
    }
    for zj in z {
        for zk in z {
            p.inf(&(q * zk / zj))?;
        }
    }
    for zk in z {
        for aj in a {
            p.inf_den(&(q * zk / aj))?.inf_den(&(q / &(aj * zk)))?;
        }
    }
    Ok(())
}

/// `U(a, z)`, the product side of the `C_n` 6psi6 summation.
fn u_factor(p: &mut Prod<'_>, a: &[QComplex], z: &[QComplex], ctx: &EvalContext) -> Result<()> {
    let q = ctx.q();
    u_z_part(p, a, z, ctx)?;
    for j in 0..a.len() {
        for k in j + 1..a.len() {
            p.inf(&(q / &(&a[j] * &a[k])))?;
        }
    }
    p.inf_den(&(q / &capital_product(a, ctx)))?;
    Ok(())
}

/// `prod_{k,j} (c_j z_k, c_j/z_k)_{m_j}` as a denominator.
fn c_z_den(p: &mut Prod<'_>, z: &[QComplex], c: &[QComplex], m: &[i64]) -> Result<()> {
    for zk in z {
        for (cj, &mj) in c.iter().zip(m) {
            p.poch_den(&(cj * zk), mj)?.poch_den(&(cj / zk), mj)?;
        }
    }
    Ok(())
}

/// `prod_{j<k}(c_jc_k)_{m_j+m_k} / prod_{j,k}(c_jc_k)_{m_j}`.
pub(crate) fn cc_factor(p: &mut Prod<'_>, c: &[QComplex], m: &[i64]) -> Result<()> {
    for j in 0..c.len() {
        for k in j + 1..c.len() {
            p.poch(&(&c[j] * &c[k]), m[j] + m[k])?;
        }
    }
    for j in 0..c.len() {
        for ck in c {
            p.poch_den(&(&c[j] * ck), m[j])?;
        }
    }
    Ok(())
}

/// `V(a, z, c, m)`.
fn v_factor(p: &mut Prod<'_>, a: &[QComplex], z: &[QComplex], c: &[QComplex], m: &[i64], ctx: &EvalContext) -> Result<()> {
    for ak in a {
        for (cj, &mj) in c.iter().zip(m) {
            p.poch(&(cj * ak), mj)?;
        }
    }
    c_z_den(p, z, c, m)?;
    cc_factor(p, c, m)?;
    p.poch_den(&capital_product(a, ctx), index_sum(m))?;
    Ok(())
}

/// `sum_{0 <= x <= m} Q_x(a, c, m)`; contains no `z`.
pub fn x_sum(a: &[QComplex], c: &[QComplex], m: &[i64], ctx: &EvalContext) -> Result<SeriesResult> {
    let q = ctx.q();
    let qinv = q.recip();
    let big_a = capital_product(a, ctx);
    let arg = &big_a * &ctx.q_pow(index_sum(m));
    let coords = c
        .iter()
        .map(|cj| {
            let mut l = Letters::new();
            for ak in a {
                l.num(cj / ak).den(cj * ak);
            }
            for (ck, &mk) in c.iter().zip(m) {
                l.num(&qinv * &(cj * ck))
                    .num(ctx.q_pow(-mk) * cj / ck)
                    .den(q * cj / ck)
                    .den(ctx.q_pow(mk) * cj * ck);
            }
            l.arg(arg.clone());
            l
        })
        .collect();
    let f = FactorizedTerm::new(half_shift_weight(c, ctx)?, coords, None, Support::All, ctx)?;
    let bounds: Vec<u32> = m.iter().map(|&x| x as u32).collect();
    finite_box_sum(&bounds, &f, ctx)
}

/// Right side of the reduction formula: `U(a,z) V(a,z,c,m) sum_x Q_x`.
pub(crate) fn te_right(a: &[QComplex], z: &[QComplex], c: &[QComplex], m: &[i64], ctx: &EvalContext) -> Result<Evaluated> {
    let mut p = Prod::new(ctx);
    u_factor(&mut p, a, z, ctx)?;
    v_factor(&mut p, a, z, c, m, ctx)?;
    let s = x_sum(a, c, m, ctx)?;
    Ok(Evaluated::product_times(&p, s))
}

/// `U(a,z) V(a,z,c,m)`, the `z`-dependent prefactor of the reduced side.
pub fn te_prefactor(a: &[QComplex], z: &[QComplex], c: &[QComplex], m: &[i64], ctx: &EvalContext) -> Result<QComplex> {
    let mut p = Prod::new(ctx);
    u_factor(&mut p, a, z, ctx)?;
    v_factor(&mut p, a, z, c, m, ctx)?;
    Ok(p.value())
}

/// Right side of the base-point transformation: the product ratio between
/// `z` and `w` times the series at `w`.
pub(crate) fn kmt_right(
    a: &[QComplex],
    z: &[QComplex],
    w: &[QComplex],
    c: &[QComplex],
    m: &[i64],
    ctx: &EvalContext,
) -> Result<Evaluated> {
    ctx.require_float()?;
    let mut pz = Prod::new(ctx);
    u_z_part(&mut pz, a, z, ctx)?;
    c_z_den(&mut pz, z, c, m)?;
    let mut pw = Prod::new(ctx);
    u_z_part(&mut pw, a, w, ctx)?;
    c_z_den(&mut pw, w, c, m)?;
    let ratio = pz.value() / pw.value();
    let inner = left_sum(a, w, c, m, Support::All, te_modulus(a, m, ctx), ctx)?;
    let tail = pz.tail() + pw.tail();
    Ok(inner.scaled(&ratio, tail))
}

/// Upper parameter list `(a_1..a_n, 1/a_1..1/a_n, b, d)` of the paired summation.
pub(crate) fn kms_upper(a: &[QComplex], b: &QComplex, d: &QComplex) -> Vec<QComplex> {
    let mut out: Vec<QComplex> = a.to_vec();
    out.extend(a.iter().map(QComplex::recip));
    out.push(b.clone());
    out.push(d.clone());
    out
}

pub fn kms_modulus(b: &QComplex, d: &QComplex, m: &[i64], ctx: &EvalContext) -> f64 {
    (ctx.q_pow(1 - index_sum(m)) / &(b * d)).abs_f64()
}

/// `prod_{k,j} (c_ja_k, c_j/a_k)_{m_j} / (c_jz_k, c_j/z_k)_{m_j}`.
fn paired_c_factor(p: &mut Prod<'_>, a: &[QComplex], z: &[QComplex], c: &[QComplex], m: &[i64]) -> Result<()> {
    for ak in a {
        for (cj, &mj) in c.iter().zip(m) {
            p.poch(&(cj * ak), mj)?.poch(&(cj / ak), mj)?;
        }
    }
    c_z_den(p, z, c, m)
}

pub(crate) fn kms_right(
    a: &[QComplex],
    b: &QComplex,
    d: &QComplex,
    z: &[QComplex],
    c: &[QComplex],
    m: &[i64],
    ctx: &EvalContext,
) -> Result<Evaluated> {
    let q = ctx.q();
    let mut p = Prod::new(ctx);
    for j in 0..z.len() {
        for k in 0..z.len() {
            let (aj, ak, zj, zk) = (&a[j], &a[k], &z[j], &z[k]);
            p.inf(&(q * zk / zj))?.inf(&(q * ak / aj))?;
            p.inf_den(&(q * zk / aj))?
                .inf_den(&(q * zk * aj))?
                .inf_den(&(q / &(aj * zk)))?
                .inf_den(&(q * aj / zk))?;
        }
    }
    for (ak, zk) in a.iter().zip(z) {
        p.inf(&(q * ak / b))?
            .inf(&(q / &(ak * b)))?
            .inf(&(q * ak / d))?
            .inf(&(q / &(ak * d)))?;
        p.inf_den(&(q * zk / b))?
            .inf_den(&(q / &(zk * b)))?
            .inf_den(&(q * zk / d))?
            .inf_den(&(q / &(zk * d)))?;
    }
    for j in 0..z.len() {
        for k in j..z.len() {
            let zz = &z[j] * &z[k];
            p.inf(&(q * &zz))?.inf(&(q / &zz))?;
        }
        for k in j + 1..z.len() {
            let aa = &a[j] * &a[k];
            p.inf(&(q * &aa))?.inf(&(q / &aa))?;
        }
    }
    paired_c_factor(&mut p, a, z, c, m)?;
    Ok(Evaluated::closed(&p))
}

/// Upper parameters `(a_1, a_2, 1/a_1, 1/a_2, z_1, z_2)` of the `C_2` summation.
pub(crate) fn c2_upper(a: &[QComplex], z: &[QComplex]) -> Vec<QComplex> {
    let mut out = a.to_vec();
    out.extend(a.iter().map(QComplex::recip));
    out.extend(z.iter().cloned());
    out
}

pub fn c2_modulus(z: &[QComplex], m: &[i64], ctx: &EvalContext) -> f64 {
    (ctx.q_pow(1 - index_sum(m)) / &(&z[0] * &z[1])).abs_f64()
}

pub(crate) fn c2_right(a: &[QComplex], z: &[QComplex], c: &[QComplex], m: &[i64], ctx: &EvalContext) -> Result<Evaluated> {
    let q = ctx.q();
    let (z1, z2) = (&z[0], &z[1]);
    let (a1, a2) = (&a[0], &a[1]);
    let mut p = Prod::new(ctx);
    p.inf(&(q * z1 * z1))?
        .inf(&(q * z1 * z2))?
        .inf(&(q * z2 * z2))?
        .inf(&(q * a1 * a2))?
        .inf(&(q / &(a1 * a2)))?;
    p.inf_den(&(q / &(z1 * z2)))?;
    for aj in a {
        for (ak, zk) in a.iter().zip(z) {
            p.inf(&(q * ak / aj))?;
            p.inf_den(&(q * zk / aj))?.inf_den(&(q * zk * aj))?;
        }
    }
    paired_c_factor(&mut p, a, z, c, m)?;
    Ok(Evaluated::closed(&p))
}
