//! Weyl denominator of `C_n` and the Vandermonde factor of `A_n`.
//!
//! The ratios `W(zq^y)/W(z)` and `Delta(zq^y)/Delta(z)` are always formed
//! factor by factor; the denominators are inverted once and reused for every
//! lattice point.

use std::ops::Deref;

use crate::error::Result;
use crate::qarith::{EvalContext, QComplex};

/// A point of the summation lattice `Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePoint(pub Vec<i64>);

impl Deref for LatticePoint {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v)
    }
}

/// Componentwise `z_j q^{y_j}`.
pub fn shift(z: &[QComplex], y: &[i64], ctx: &EvalContext) -> Vec<QComplex> {
    assert_eq!(z.len(), y.len(), "lattice point and base vector differ in length");
    z.iter().zip(y).map(|(zj, &yj)| zj * ctx.q_pow(yj)).collect()
}

/// `W(z) = prod_{j<=k} (1 - z_j z_k) prod_{j<k} (z_j - z_k)`.
pub fn weyl_c(z: &[QComplex], ctx: &EvalContext) -> QComplex {
    let one = ctx.one();
    let mut acc = one.clone();
    for j in 0..z.len() {
        for k in j..z.len() {
            acc *= &one - &(&z[j] * &z[k]);
        }
    }
    acc * delta(z, ctx)
}

/// `Delta(z) = prod_{j<k} (z_j - z_k)`.
pub fn delta(z: &[QComplex], ctx: &EvalContext) -> QComplex {
    let mut acc = ctx.one();
    for j in 0..z.len() {
        for k in j + 1..z.len() {
            acc *= &z[j] - &z[k];
        }
    }
    acc
}

/// Precomputed `W(s v q^y) / W(s v)` for a fixed base `v` and `s^2`.
///
/// With `s^2 = 1` this is the plain `C_n` ratio. Only `s^2` enters, so the
/// ratio does not depend on which square root `s` is meant.
#[derive(Debug, Clone)]
pub struct WeylCRatio {
    scale_sq: QComplex,
    inv_pair: Vec<QComplex>,
    inv_diff: DeltaRatio,
}

impl WeylCRatio {
    pub fn new(z: &[QComplex], ctx: &EvalContext) -> Result<Self> {
        WeylCRatio::scaled(z, &ctx.one(), ctx)
    }

    pub fn scaled(v: &[QComplex], scale_sq: &QComplex, ctx: &EvalContext) -> Result<Self> {
        let one = ctx.one();
        let mut inv_pair = Vec::with_capacity(v.len() * (v.len() + 1) / 2);
        for j in 0..v.len() {
            for k in j..v.len() {
                let f = &one - &(scale_sq * &(&v[j] * &v[k]));
                ctx.check_generic(&f, || format!("Weyl factor 1 - z_{j} z_{k}"))?;
                inv_pair.push(f.recip());
            }
        }
        Ok(WeylCRatio {
            scale_sq: scale_sq.clone(),
            inv_pair,
            inv_diff: DeltaRatio::new(v, ctx)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.inv_diff.dim
    }

    /// Evaluates the ratio given the shifted coordinates `v_j q^{y_j}`.
    pub fn eval_shifted(&self, shifted: &[QComplex]) -> QComplex {
        let mut acc = self.inv_diff.eval_shifted(shifted);
        let one = &self.inv_diff.one;
        let mut idx = 0;
        for j in 0..shifted.len() {
            for k in j..shifted.len() {
                let f = one - &(&self.scale_sq * &(&shifted[j] * &shifted[k]));
                acc *= f * &self.inv_pair[idx];
                idx += 1;
            }
        }
        acc
    }
}

/// Precomputed `Delta(z q^y) / Delta(z)`.
#[derive(Debug, Clone)]
pub struct DeltaRatio {
    dim: usize,
    inv_diff: Vec<QComplex>,
    one: QComplex,
}

impl DeltaRatio {
    pub fn new(z: &[QComplex], ctx: &EvalContext) -> Result<Self> {
        let mut inv_diff = Vec::with_capacity(z.len() * z.len().saturating_sub(1) / 2);
        for j in 0..z.len() {
            for k in j + 1..z.len() {
                let f = &z[j] - &z[k];
                ctx.check_generic(&f, || format!("Vandermonde factor z_{j} - z_{k}"))?;
                inv_diff.push(f.recip());
            }
        }
        Ok(DeltaRatio {
            dim: z.len(),
            inv_diff,
            one: ctx.one(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval_shifted(&self, shifted: &[QComplex]) -> QComplex {
        debug_assert_eq!(shifted.len(), self.dim);
        let mut idx = 0;
        let mut acc = self.one.clone();
        for j in 0..shifted.len() {
            for k in j + 1..shifted.len() {
                acc *= (&shifted[j] - &shifted[k]) * &self.inv_diff[idx];
                idx += 1;
            }
        }
        acc
    }
}

/// `W(zq^y)/W(z)`.
pub fn weyl_c_ratio(z: &[QComplex], y: &[i64], ctx: &EvalContext) -> Result<QComplex> {
    Ok(WeylCRatio::new(z, ctx)?.eval_shifted(&shift(z, y, ctx)))
}

/// `W(s v q^y)/W(s v)` for any `s` with `s^2 = scale_sq`.
pub fn weyl_c_ratio_scaled(
    v: &[QComplex],
    scale_sq: &QComplex,
    y: &[i64],
    ctx: &EvalContext,
) -> Result<QComplex> {
    Ok(WeylCRatio::scaled(v, scale_sq, ctx)?.eval_shifted(&shift(v, y, ctx)))
}

/// `Delta(zq^y)/Delta(z)`.
pub fn delta_a_ratio(z: &[QComplex], y: &[i64], ctx: &EvalContext) -> Result<QComplex> {
    Ok(DeltaRatio::new(z, ctx)?.eval_shifted(&shift(z, y, ctx)))
}

/// `W(z_1, ..., z_{n-1}, lambda z_n) / W(z)` in its product form
/// `(1 - lambda^2 z_n^2)/(1 - z_n^2) prod_k (1 - lambda z_n z_k)(1 - lambda z_n/z_k) / ((1 - z_n z_k)(1 - z_n/z_k))`.
pub fn weyl_c_last_scaling(z: &[QComplex], lambda: &QComplex, ctx: &EvalContext) -> Result<QComplex> {
    let Some((zn, rest)) = z.split_last() else {
        return Ok(ctx.one());
    };
    let one = ctx.one();
    let lz = lambda * zn;
    let den = &one - &(zn * zn);
    ctx.check_generic(&den, || "1 - z_n^2".into())?;
    let mut acc = (&one - &(&lz * &lz)) / den;
    for zk in rest {
        let num = (&one - &(&lz * zk)) * (&one - &(&lz / zk));
        let den = (&one - &(zn * zk)) * (&one - &(zn / zk));
        ctx.check_generic(&den, || "(1 - z_n z_k)(1 - z_n/z_k)".into())?;
        acc *= num / den;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    fn r(n: i64, d: i64) -> QComplex {
        QComplex::Rational(Rational::from((n, d)))
    }

    #[test]
    fn weyl_c_examples() {
        let ctx = EvalContext::exact(1, 3).unwrap();
        let z = r(5, 7);
        assert_eq!(weyl_c(std::slice::from_ref(&z), &ctx), r(1, 1) - &(&z * &z));
        assert_eq!(weyl_c(&[r(2, 1), r(3, 1)], &ctx), r(120, 1));
        assert!(weyl_c(&[r(2, 5), r(2, 5)], &ctx).is_zero());
        assert!(weyl_c(&[], &ctx).is_one());
    }

    #[test]
    fn weyl_c_ratio_examples() {
        let ctx = EvalContext::exact(1, 3).unwrap();
        let z = [r(2, 5), r(7, 3)];
        assert!(weyl_c_ratio(&z, &[0, 0], &ctx).unwrap().is_one());
        assert_eq!(weyl_c_ratio(&[r(2, 1)], &[1], &ctx).unwrap(), r(-5, 27));
    }

    #[test]
    fn weyl_c_ratio_rejects_nongeneric_base() {
        let ctx = EvalContext::exact(1, 3).unwrap();
        assert!(weyl_c_ratio(&[r(1, 1)], &[1], &ctx).is_err());
        assert!(weyl_c_ratio(&[r(2, 1), r(1, 2)], &[1, 0], &ctx).is_err());
        assert!(delta_a_ratio(&[r(2, 1), r(2, 1)], &[1, 0], &ctx).is_err());
    }

    #[test]
    fn delta_a_ratio_examples() {
        let ctx = EvalContext::exact(1, 3).unwrap();
        assert!(delta_a_ratio(&[r(2, 1), r(3, 1)], &[0, 0], &ctx).unwrap().is_one());
        assert_eq!(delta_a_ratio(&[r(2, 1), r(3, 1)], &[1, 0], &ctx).unwrap(), r(7, 3));
        let a = delta_a_ratio(&[r(2, 1), r(3, 1)], &[1, -2], &ctx).unwrap();
        let b = delta_a_ratio(&[r(3, 1), r(2, 1)], &[-2, 1], &ctx).unwrap();
        assert_eq!(a, b);
        assert!(delta_a_ratio(&[r(2, 1)], &[4], &ctx).unwrap().is_one());
    }

    #[test]
    fn scaled_ratio_matches_literal_root_in_float_mode() {
        let ctx = EvalContext::float(0.3, 0.2, 40).unwrap();
        let v = [ctx.complex_f64(0.7, 0.1).unwrap(), ctx.complex_f64(-1.2, 0.5).unwrap()];
        let s2 = ctx.q().recip();
        let s = s2.sqrt().unwrap();
        let sv: Vec<_> = v.iter().map(|x| &s * x).collect();
        let y = [2, -1];
        let lit = weyl_c_ratio(&sv, &y, &ctx).unwrap();
        let sc = weyl_c_ratio_scaled(&v, &s2, &y, &ctx).unwrap();
        assert!((&lit - &sc).abs_f64() / lit.abs_f64() < 1e-40);
    }
}
