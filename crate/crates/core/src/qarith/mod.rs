//! q-shifted factorials and the evaluation context they run in.
//!
//! Everything downstream is built from [`qpoch`], [`qpoch_multi`] and
//! [`qpoch_inf`]. The fixed base `q` lives in [`EvalContext`] together with the
//! arithmetic mode and the numerical tolerances.

mod scalar;

pub use scalar::{parse_float, parse_rational, BigComplex, QComplex};

use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arithmetic mode of an [`EvalContext`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Exact rational arithmetic; requires real rational `q` and parameters.
    Exact,
    /// Complex MPFR arithmetic at `digits` decimal digits plus guard bits.
    #[default]
    Float,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" | "exact-rational" => Ok(Mode::Exact),
            "float" | "high-precision-float" => Ok(Mode::Float),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        })
    }
}

const GUARD_BITS: u32 = 32;
pub const DEFAULT_MAX_SHELL: u32 = 60;
pub const DEFAULT_CONVERGENCE_LIMIT: f64 = 0.9;

/// Immutable evaluation settings: the base `q`, the arithmetic mode and the
/// tolerances used by products, sums and genericity checks.
#[derive(Debug, Clone)]
pub struct EvalContext {
    q: QComplex,
    mode: Mode,
    digits: u32,
    prec: u32,
    inf_tail_tol: f64,
    max_shell: u32,
    genericity_margin: f64,
    convergence_limit: f64,
}

#[derive(Debug, Clone)]
pub struct ContextBuilder {
    mode: Mode,
    q: [String; 2],
    digits: u32,
    inf_tail_tol: Option<f64>,
    max_shell: u32,
    genericity_margin: Option<f64>,
    convergence_limit: f64,
}

impl ContextBuilder {
    pub fn digits(mut self, digits: u32) -> Self {
        self.digits = digits;
        self
    }

    pub fn inf_tail_tol(mut self, tol: f64) -> Self {
        self.inf_tail_tol = Some(tol);
        self
    }

    pub fn max_shell(mut self, r: u32) -> Self {
        self.max_shell = r;
        self
    }

    pub fn genericity_margin(mut self, margin: f64) -> Self {
        self.genericity_margin = Some(margin);
        self
    }

    /// Largest accepted convergence modulus for bilateral sides.
    pub fn convergence_limit(mut self, limit: f64) -> Self {
        self.convergence_limit = limit;
        self
    }

    pub fn build(self) -> Result<EvalContext> {
        if self.digits < 15 {
            return Err(Error::InvalidContext(format!(
                "digits must be at least 15, got {}",
                self.digits
            )));
        }
        let half = 10f64.powf(-(self.digits as f64) / 2.0);
        let tol = self
            .inf_tail_tol
            .unwrap_or_else(|| 10f64.powf(-(self.digits as f64 + 5.0)));
        if !(tol > 0.0 && tol <= half) {
            return Err(Error::InvalidContext(format!(
                "inf_tail_tol must lie in (0, 1e-{}], got {tol:e}",
                self.digits as f64 / 2.0
            )));
        }
        let margin = self.genericity_margin.unwrap_or(half);
        if margin.is_nan() || margin <= 0.0 {
            return Err(Error::InvalidContext("genericity_margin must be positive".into()));
        }
        if self.max_shell < 2 {
            return Err(Error::InvalidContext("max_shell must be at least 2".into()));
        }
        if !(self.convergence_limit > 0.0 && self.convergence_limit < 1.0) {
            return Err(Error::InvalidContext(
                "convergence limit must lie in (0, 1)".into(),
            ));
        }
        let prec = (self.digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS;
        let q = parse_scalar(self.mode, prec, &self.q[0], &self.q[1])?;
        let qa = q.abs_f64();
        if !(qa > 0.0 && qa < 1.0) {
            return Err(Error::InvalidContext(format!(
                "base q must satisfy 0 < |q| < 1, got |q| = {qa}"
            )));
        }
        Ok(EvalContext {
            q,
            mode: self.mode,
            digits: self.digits,
            prec,
            inf_tail_tol: tol,
            max_shell: self.max_shell,
            genericity_margin: margin,
            convergence_limit: self.convergence_limit,
        })
    }
}

fn parse_scalar(mode: Mode, prec: u32, re: &str, im: &str) -> Result<QComplex> {
    match mode {
        Mode::Exact => {
            let im = parse_rational(im)?;
            if im != 0 {
                return Err(Error::UnsupportedMode {
                    required: "high-precision-float",
                });
            }
            Ok(QComplex::Rational(parse_rational(re)?))
        }
        Mode::Float => Ok(QComplex::Complex(BigComplex::new(
            parse_float(re, prec)?,
            parse_float(im, prec)?,
        ))),
    }
}

impl EvalContext {
    pub fn builder(mode: Mode, q: [&str; 2]) -> ContextBuilder {
        ContextBuilder {
            mode,
            q: [q[0].to_string(), q[1].to_string()],
            digits: 30,
            inf_tail_tol: None,
            max_shell: DEFAULT_MAX_SHELL,
            genericity_margin: None,
            convergence_limit: DEFAULT_CONVERGENCE_LIMIT,
        }
    }

    /// Exact-rational context with `q = num/den`.
    pub fn exact(num: i64, den: i64) -> Result<Self> {
        EvalContext::builder(Mode::Exact, [&format!("{num}/{den}"), "0"]).build()
    }

    /// Float context with `q = re + i im`, taken as exact binary values.
    pub fn float(re: f64, im: f64, digits: u32) -> Result<Self> {
        EvalContext::builder(Mode::Float, [&format!("{re:e}"), &format!("{im:e}")])
            .digits(digits)
            .build()
    }

    pub fn q(&self) -> &QComplex {
        &self.q
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Working precision in bits (float mode).
    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn inf_tail_tol(&self) -> f64 {
        self.inf_tail_tol
    }

    pub fn max_shell(&self) -> u32 {
        self.max_shell
    }

    pub fn genericity_margin(&self) -> f64 {
        self.genericity_margin
    }

    pub fn convergence_limit(&self) -> f64 {
        self.convergence_limit
    }

    /// A copy with a different shell cap.
    pub fn with_max_shell(&self, r: u32) -> Self {
        EvalContext {
            max_shell: r.max(2),
            ..self.clone()
        }
    }

    /// A copy with a different genericity margin.
    pub fn with_genericity_margin(&self, margin: f64) -> Self {
        EvalContext {
            genericity_margin: margin,
            ..self.clone()
        }
    }

    /// Parses `re + i im` in this context's mode.
    pub fn number(&self, re: &str, im: &str) -> Result<QComplex> {
        parse_scalar(self.mode, self.prec, re, im)
    }

    pub fn int(&self, v: i64) -> QComplex {
        match self.mode {
            Mode::Exact => QComplex::Rational(Rational::from(v)),
            Mode::Float => QComplex::Complex(BigComplex::new(
                Float::with_val(self.prec, v),
                Float::with_val(self.prec, 0),
            )),
        }
    }

    pub fn one(&self) -> QComplex {
        self.int(1)
    }

    pub fn zero(&self) -> QComplex {
        self.int(0)
    }

    pub fn rational(&self, r: &Rational) -> QComplex {
        match self.mode {
            Mode::Exact => QComplex::Rational(r.clone()),
            Mode::Float => QComplex::Complex(BigComplex::from_rational(r, self.prec)),
        }
    }

    pub fn ratio(&self, num: i64, den: i64) -> QComplex {
        self.rational(&Rational::from((num, den)))
    }

    /// Complex value from doubles; float mode only.
    pub fn complex_f64(&self, re: f64, im: f64) -> Result<QComplex> {
        match self.mode {
            Mode::Float => Ok(QComplex::Complex(BigComplex::from_f64(re, im, self.prec))),
            Mode::Exact if im == 0.0 => Ok(QComplex::Rational(
                Rational::from_f64(re).ok_or_else(|| Error::Parse(format!("{re}")))?,
            )),
            Mode::Exact => Err(Error::UnsupportedMode {
                required: "high-precision-float",
            }),
        }
    }

    pub fn q_pow(&self, k: i64) -> QComplex {
        self.q.powi(k)
    }

    /// Fails with `SingularParameter` when `|x|` is below the genericity margin.
    pub fn check_generic(&self, x: &QComplex, what: impl FnOnce() -> String) -> Result<()> {
        if x.is_zero() || x.abs_f64() < self.genericity_margin {
            Err(Error::singular(what()))
        } else {
            Ok(())
        }
    }

    pub fn require_float(&self) -> Result<()> {
        match self.mode {
            Mode::Float => Ok(()),
            Mode::Exact => Err(Error::UnsupportedMode {
                required: "high-precision-float",
            }),
        }
    }
}

/// The q-shifted factorial `(a)_k`.
///
/// For `k >= 0` this is `(1-a)(1-aq)...(1-aq^{k-1})`; for `k < 0` it is
/// `1/((1-a/q)(1-a/q^2)...(1-aq^k))`.
pub fn qpoch(a: &QComplex, k: i64, ctx: &EvalContext) -> Result<QComplex> {
    let one = ctx.one();
    let mut acc = one.clone();
    if k >= 0 {
        let mut t = a.clone();
        for _ in 0..k {
            acc *= &one - &t;
            t *= ctx.q();
        }
        Ok(acc)
    } else {
        let qinv = ctx.q().recip();
        let mut t = a * &qinv;
        for j in 1..=-k {
            let f = &one - &t;
            ctx.check_generic(&f, || format!("factor 1 - a q^-{j} of (a)_{k}"))?;
            acc *= f;
            t *= &qinv;
        }
        Ok(one / acc)
    }
}

/// `(a)_k` used as a denominator: every factor must clear the genericity
/// margin, whatever the sign of `k`.
pub fn qpoch_nonvanishing(a: &QComplex, k: i64, ctx: &EvalContext) -> Result<QComplex> {
    if k >= 0 {
        let one = ctx.one();
        let mut acc = one.clone();
        let mut t = a.clone();
        for j in 0..k {
            let f = &one - &t;
            ctx.check_generic(&f, || format!("factor 1 - a q^{j} of (a)_{k}"))?;
            acc *= f;
            t *= ctx.q();
        }
        Ok(acc)
    } else {
        qpoch(a, k, ctx)
    }
}

/// `(a_1, ..., a_m)_k`; the empty list gives 1.
pub fn qpoch_multi(values: &[QComplex], k: i64, ctx: &EvalContext) -> Result<QComplex> {
    values.iter().try_fold(ctx.one(), |acc, a| Ok(acc * qpoch(a, k, ctx)?))
}

/// Number of factors used for `(a)_inf`: the smallest `J` with
/// `|a| |q|^J / (1 - |q|)` below the tail tolerance, plus two guard factors.
pub fn inf_truncation(a_abs: f64, q_abs: f64, tol: f64) -> usize {
    if a_abs == 0.0 {
        return 0;
    }
    let target = tol * (1.0 - q_abs);
    let j = ((target.ln() - a_abs.ln()) / q_abs.ln()).ceil();
    if j.is_finite() && j > 0.0 {
        j as usize + 2
    } else {
        2
    }
}

fn qpoch_inf_with_min(a: &QComplex, ctx: &EvalContext) -> Result<(QComplex, f64)> {
    ctx.require_float()?;
    let one = ctx.one();
    if a.is_zero() {
        return Ok((one, 1.0));
    }
    let terms = inf_truncation(a.abs_f64(), ctx.q().abs_f64(), ctx.inf_tail_tol());
    let mut acc = one.clone();
    let mut t = a.clone();
    let mut min = f64::INFINITY;
    for _ in 0..terms {
        let f = &one - &t;
        min = min.min(f.abs_f64());
        acc *= f;
        t *= ctx.q();
    }
    Ok((acc, min))
}

/// The infinite product `(a)_inf`, truncated by a geometric tail bound.
pub fn qpoch_inf(a: &QComplex, ctx: &EvalContext) -> Result<QComplex> {
    qpoch_inf_with_min(a, ctx).map(|(v, _)| v)
}

/// `(a)_inf` used as a denominator; fails if any factor is sub-margin.
pub fn qpoch_inf_nonvanishing(a: &QComplex, ctx: &EvalContext) -> Result<QComplex> {
    let (v, min) = qpoch_inf_with_min(a, ctx)?;
    if min < ctx.genericity_margin() {
        return Err(Error::singular(format!(
            "infinite product (a)_inf has a factor of modulus {min:e}"
        )));
    }
    Ok(v)
}

/// `Z = z_1 ... z_n`, with the empty product equal to 1.
pub fn capital_product(z: &[QComplex], ctx: &EvalContext) -> QComplex {
    z.iter().fold(ctx.one(), |acc, x| acc * x)
}

/// `|y| = y_1 + ... + y_n`.
pub fn index_sum(y: &[i64]) -> i64 {
    y.iter().sum()
}
