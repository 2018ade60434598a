//! Summation engines: finite boxes, bilateral sums over `Z^n` and sums over
//! the zero-sum hyperplane of `Z^n`.
//!
//! Bilateral sums grow in sup-norm shells `max_j |y_j| = R`. Points inside a
//! shell are visited in lexicographic order and accumulated sequentially, so a
//! fixed mode and precision give bit-identical results.

use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qarith::{EvalContext, QComplex};

/// A summand over `Z^n`.
pub trait TermFunction {
    fn dim(&self) -> usize;
    fn term(&self, y: &[i64]) -> Result<QComplex>;
}

/// Adapts a closure into a [`TermFunction`].
pub struct FnTerm<F> {
    dim: usize,
    f: F,
}

impl<F> FnTerm<F>
where
    F: Fn(&[i64]) -> Result<QComplex>,
{
    pub fn new(dim: usize, f: F) -> Self {
        FnTerm { dim, f }
    }
}

impl<F> TermFunction for FnTerm<F>
where
    F: Fn(&[i64]) -> Result<QComplex>,
{
    fn dim(&self) -> usize {
        self.dim
    }
    fn term(&self, y: &[i64]) -> Result<QComplex> {
        (self.f)(y)
    }
}

/// Value of a series together with its truncation bookkeeping.
///
/// `tail_estimate` is relative to `|value|` (absolute when the value is 0).
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesResult {
    pub value: QComplex,
    pub radius_used: u32,
    pub tail_estimate: f64,
    pub terms_evaluated: u64,
}

impl SeriesResult {
    /// A closed-form value: no truncation involved.
    pub fn closed(value: QComplex) -> Self {
        SeriesResult {
            value,
            radius_used: 0,
            tail_estimate: 0.0,
            terms_evaluated: 1,
        }
    }

    pub fn meta(&self) -> SeriesMeta {
        SeriesMeta {
            radius_used: self.radius_used,
            tail_estimate: self.tail_estimate,
            terms_evaluated: self.terms_evaluated,
        }
    }
}

/// The serializable part of a [`SeriesResult`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesMeta {
    pub radius_used: u32,
    pub tail_estimate: f64,
    pub terms_evaluated: u64,
}

/// Sum over the box `0 <= x_j <= m_j`, lexicographic order.
pub fn finite_box_sum(m: &[u32], f: &dyn TermFunction, ctx: &EvalContext) -> Result<SeriesResult> {
    if m.len() != f.dim() {
        return Err(Error::SchemaMismatch(format!(
            "box has {} bounds but the summand has dimension {}",
            m.len(),
            f.dim()
        )));
    }
    let mut x = vec![0i64; m.len()];
    let mut acc = ctx.zero();
    let mut count = 0u64;
    loop {
        acc += f.term(&x).map_err(|e| e.at_point(&x))?;
        count += 1;
        // odometer increment, last coordinate fastest
        let mut i = m.len();
        loop {
            if i == 0 {
                return Ok(SeriesResult {
                    value: acc,
                    radius_used: m.iter().copied().max().unwrap_or(0),
                    tail_estimate: 0.0,
                    terms_evaluated: count,
                });
            }
            i -= 1;
            if x[i] < m[i] as i64 {
                x[i] += 1;
                break;
            }
            x[i] = 0;
        }
    }
}

/// Visits every point of `Z^n` with `max_j |y_j| = radius` in lexicographic
/// order. With `hyperplane` set, only points with `y_1 + ... + y_n = 0`.
pub fn for_each_shell_point<E>(
    n: usize,
    radius: u32,
    hyperplane: bool,
    mut visit: impl FnMut(&[i64]) -> std::result::Result<(), E>,
) -> std::result::Result<(), E> {
    let r = radius as i64;
    if n == 0 {
        return if radius == 0 { visit(&[]) } else { Ok(()) };
    }
    let mut y = vec![0i64; n];
    shell_rec(&mut y, 0, r, false, 0, hyperplane, &mut visit)
}

fn shell_rec<E>(
    y: &mut [i64],
    i: usize,
    r: i64,
    on_boundary: bool,
    partial: i64,
    hyperplane: bool,
    visit: &mut impl FnMut(&[i64]) -> std::result::Result<(), E>,
) -> std::result::Result<(), E> {
    let n = y.len();
    if hyperplane && i == n - 1 {
        let last = -partial;
        if last.abs() <= r && (on_boundary || last.abs() == r) {
            y[i] = last;
            visit(y)?;
        }
        return Ok(());
    }
    if i == n - 1 {
        if on_boundary {
            for v in -r..=r {
                y[i] = v;
                visit(y)?;
            }
        } else {
            y[i] = -r;
            visit(y)?;
            if r != 0 {
                y[i] = r;
                visit(y)?;
            }
        }
        return Ok(());
    }
    for v in -r..=r {
        y[i] = v;
        shell_rec(y, i + 1, r, on_boundary || v.abs() == r, partial + v, hyperplane, visit)?;
    }
    Ok(())
}

struct Shell {
    sum: QComplex,
    abs_sum: Float,
    count: u64,
}

fn sum_shell(f: &dyn TermFunction, radius: u32, hyperplane: bool, ctx: &EvalContext) -> Result<Shell> {
    let mut sum = ctx.zero();
    let mut abs_sum = Float::with_val(64, 0);
    let mut count = 0u64;
    for_each_shell_point(f.dim(), radius, hyperplane, |y| -> Result<()> {
        let t = f.term(y).map_err(|e| e.at_point(y))?;
        abs_sum += t.abs_float();
        sum += t;
        count += 1;
        Ok(())
    })?;
    Ok(Shell { sum, abs_sum, count })
}

fn rel(num: &Float, den: &Float) -> f64 {
    if den.is_zero() {
        num.to_f64()
    } else {
        Float::with_val(64, num / den).to_f64()
    }
}

fn shells_until_converged(f: &dyn TermFunction, hyperplane: bool, ctx: &EvalContext) -> Result<SeriesResult> {
    ctx.require_float()?;
    let tol = ctx.inf_tail_tol();
    let mut value = ctx.zero();
    let mut mags: Vec<Float> = Vec::new();
    let mut count = 0u64;
    let mut last_relative = f64::INFINITY;
    for radius in 0..=ctx.max_shell() {
        let shell = sum_shell(f, radius, hyperplane, ctx)?;
        value += shell.sum;
        count += shell.count;
        mags.push(shell.abs_sum);
        if radius < 2 {
            continue;
        }
        let vabs = value.abs_float();
        let r = radius as usize;
        let rel_last = rel(&mags[r], &vabs);
        let rel_prev = rel(&mags[r - 1], &vabs);
        last_relative = rel_last;
        if rel_last > tol || rel_prev > tol {
            continue;
        }
        if mags[r].is_zero() && mags[r - 1].is_zero() {
            return Ok(SeriesResult {
                value,
                radius_used: radius,
                tail_estimate: 0.0,
                terms_evaluated: count,
            });
        }
        // geometric bound driven by the slower of the last two shell ratios
        let rho = rel(&mags[r], &mags[r - 1]).max(rel(&mags[r - 1], &mags[r - 2]));
        if rho < 1.0 {
            let tail = rel_last * rho / (1.0 - rho);
            if tail <= tol {
                return Ok(SeriesResult {
                    value,
                    radius_used: radius,
                    tail_estimate: tail,
                    terms_evaluated: count,
                });
            }
        }
    }
    Err(Error::NoConvergence {
        radius: ctx.max_shell(),
        last_relative,
    })
}

/// Sum over all of `Z^n`, adding shells until the last two contribute less
/// than `inf_tail_tol` relative to the running value and the geometric tail
/// bound is below the same tolerance.
pub fn bilateral_sum(f: &dyn TermFunction, ctx: &EvalContext) -> Result<SeriesResult> {
    shells_until_converged(f, false, ctx)
}

/// Like [`bilateral_sum`] but restricted to `y_1 + ... + y_n = 0`.
pub fn hyperplane_sum(f: &dyn TermFunction, ctx: &EvalContext) -> Result<SeriesResult> {
    shells_until_converged(f, true, ctx)
}

/// All shells up to and including `radius`, with no stopping rule.
pub fn sum_to_radius(
    f: &dyn TermFunction,
    radius: u32,
    hyperplane: bool,
    ctx: &EvalContext,
) -> Result<SeriesResult> {
    let mut value = ctx.zero();
    let mut count = 0u64;
    for r in 0..=radius {
        let shell = sum_shell(f, r, hyperplane, ctx)?;
        value += shell.sum;
        count += shell.count;
    }
    Ok(SeriesResult {
        value,
        radius_used: radius,
        tail_estimate: 0.0,
        terms_evaluated: count,
    })
}

/// Sum of the shells `from..=to` and the number of terms in them.
pub fn shell_range_sum(
    f: &dyn TermFunction,
    from: u32,
    to: u32,
    hyperplane: bool,
    ctx: &EvalContext,
) -> Result<(QComplex, u64)> {
    let mut value = ctx.zero();
    let mut count = 0u64;
    for r in from..=to {
        let shell = sum_shell(f, r, hyperplane, ctx)?;
        value += shell.sum;
        count += shell.count;
    }
    Ok((value, count))
}
