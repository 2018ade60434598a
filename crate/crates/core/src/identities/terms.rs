//! Summands built from per-coordinate Pochhammer tables.
//!
//! Every series handled here has a summand of the shape
//! `weight(y) * prod_k T_k(y_k) * G(|y|)` where each `T_k` and `G` is a ratio
//! of q-shifted factorials times a geometric factor. The tables are filled
//! incrementally, one factor per step, and grow on demand.

use std::cell::RefCell;

use crate::error::{Error, Result};
use crate::qarith::{qpoch_inf_nonvanishing, qpoch_nonvanishing, EvalContext, QComplex};
use crate::rootsys::{DeltaRatio, WeylCRatio};
use crate::summation::TermFunction;

/// `prod (num)_y / prod (den)_y * arg^y`.
#[derive(Debug, Clone)]
pub struct Letters {
    pub num: Vec<QComplex>,
    pub den: Vec<QComplex>,
    pub arg: Option<QComplex>,
}

impl Letters {
    pub fn new() -> Self {
        Letters {
            num: Vec::new(),
            den: Vec::new(),
            arg: None,
        }
    }

    pub fn num(&mut self, x: QComplex) -> &mut Self {
        self.num.push(x);
        self
    }

    pub fn den(&mut self, x: QComplex) -> &mut Self {
        self.den.push(x);
        self
    }

    pub fn arg(&mut self, x: QComplex) -> &mut Self {
        self.arg = Some(x);
        self
    }
}

impl Default for Letters {
    fn default() -> Self {
        Letters::new()
    }
}

type Entry = std::result::Result<QComplex, Error>;

/// Values of `start * prod (num)_y / prod (den)_y * arg^y` for `y` in a
/// growing window around 0.
#[derive(Debug)]
pub(crate) struct LazyTable {
    label: String,
    num_count: usize,
    q: QComplex,
    qinv: QComplex,
    one: QComplex,
    margin: f64,
    arg: Option<QComplex>,
    arg_inv: Option<Entry>,
    // pos[i] is the value at y = i, neg[i] the value at y = -(i + 1)
    pos: Vec<Entry>,
    neg: Vec<Entry>,
    // letters times q^(pos.len() - 1), numerators first
    fwd: Vec<QComplex>,
    // letters times q^-(neg.len() + 1)
    bwd: Vec<QComplex>,
}

impl LazyTable {
    pub(crate) fn new(label: String, letters: &Letters, start: QComplex, ctx: &EvalContext) -> Self {
        let mut fwd = letters.num.clone();
        fwd.extend(letters.den.iter().cloned());
        let qinv = ctx.q().recip();
        let bwd = fwd.iter().map(|x| x * &qinv).collect();
        let arg_inv = letters.arg.as_ref().map(|a| {
            if a.is_zero() || a.abs_f64() < ctx.genericity_margin() {
                Err(Error::singular(format!("{label}: geometric argument vanishes")))
            } else {
                Ok(a.recip())
            }
        });
        LazyTable {
            label,
            num_count: letters.num.len(),
            q: ctx.q().clone(),
            qinv,
            one: ctx.one(),
            margin: ctx.genericity_margin(),
            arg: letters.arg.clone(),
            arg_inv,
            pos: vec![Ok(start)],
            neg: Vec::new(),
            fwd,
            bwd,
        }
    }

    fn generic(&self, f: &QComplex) -> bool {
        !(f.is_zero() || f.abs_f64() < self.margin)
    }

    fn step_forward(&mut self) {
        let y = self.pos.len() as i64 - 1;
        let next = match self.pos.last().unwrap() {
            Err(e) => Err(e.clone()),
            Ok(v) => {
                let mut num = v.clone();
                let mut den = self.one.clone();
                let mut bad = None;
                for (i, t) in self.fwd.iter().enumerate() {
                    let f = &self.one - t;
                    if i < self.num_count {
                        num *= f;
                    } else {
                        if !self.generic(&f) {
                            bad = Some(f.abs_f64());
                        }
                        den *= f;
                    }
                }
                if let Some(a) = &self.arg {
                    num *= a;
                }
                match bad {
                    Some(m) => Err(Error::singular(format!(
                        "{}: denominator factor at index {y} has modulus {m:e}",
                        self.label
                    ))),
                    None => Ok(num / den),
                }
            }
        };
        self.pos.push(next);
        for t in &mut self.fwd {
            *t *= &self.q;
        }
    }

    fn step_backward(&mut self) {
        let y = -(self.neg.len() as i64) - 1;
        let prev = if self.neg.is_empty() {
            &self.pos[0]
        } else {
            self.neg.last().unwrap()
        };
        let next = match (prev, &self.arg_inv) {
            (Err(e), _) | (_, Some(Err(e))) => Err(e.clone()),
            (Ok(v), arg_inv) => {
                let mut num = v.clone();
                let mut den = self.one.clone();
                let mut bad = None;
                for (i, t) in self.bwd.iter().enumerate() {
                    let f = &self.one - t;
                    if i < self.num_count {
                        if !self.generic(&f) {
                            bad = Some(f.abs_f64());
                        }
                        den *= f;
                    } else {
                        num *= f;
                    }
                }
                if let Some(Ok(ai)) = arg_inv {
                    num *= ai;
                }
                match bad {
                    Some(m) => Err(Error::singular(format!(
                        "{}: reciprocal factor at index {y} has modulus {m:e}",
                        self.label
                    ))),
                    None => Ok(num / den),
                }
            }
        };
        self.neg.push(next);
        for t in &mut self.bwd {
            *t *= &self.qinv;
        }
    }

    pub(crate) fn get(&mut self, y: i64) -> Result<&QComplex> {
        let entry = if y >= 0 {
            let i = y as usize;
            while self.pos.len() <= i {
                self.step_forward();
            }
            &self.pos[i]
        } else {
            let i = (-y - 1) as usize;
            while self.neg.len() <= i {
                self.step_backward();
            }
            &self.neg[i]
        };
        entry.as_ref().map_err(Clone::clone)
    }
}

/// The lattice weight of a summand.
#[derive(Debug, Clone)]
pub enum WeightSpec {
    None,
    /// `W(s v q^y)/W(s v)` with `s^2 = scale_sq`.
    WeylC { base: Vec<QComplex>, scale_sq: QComplex },
    /// `Delta(v q^y)/Delta(v)`.
    Delta { base: Vec<QComplex> },
    /// `(1 - a q^{2y})/(1 - a)`.
    WellPoised { a: QComplex },
}

#[derive(Debug)]
#[allow(clippy::large_enum_variant)]
enum Weight {
    None,
    WeylC(WeylCRatio, Vec<RefCell<LazyTable>>),
    Delta(DeltaRatio, Vec<RefCell<LazyTable>>),
    WellPoised(QComplex, QComplex, RefCell<LazyTable>),
}

/// Restriction of the summation lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    All,
    Nonnegative,
}

/// A summand `weight(y) * prod_k T_k(y_k) * G(|y|)`.
#[derive(Debug)]
pub struct FactorizedTerm {
    dim: usize,
    weight: Weight,
    coords: Vec<RefCell<LazyTable>>,
    total: Option<RefCell<LazyTable>>,
    support: Support,
    zero: QComplex,
    one: QComplex,
}

fn shift_tables(base: &[QComplex], ctx: &EvalContext) -> Vec<RefCell<LazyTable>> {
    let mut step = Letters::new();
    step.arg(ctx.q().clone());
    base.iter()
        .enumerate()
        .map(|(k, v)| RefCell::new(LazyTable::new(format!("shift {k}"), &step, v.clone(), ctx)))
        .collect()
}

impl FactorizedTerm {
    pub fn new(
        weight: WeightSpec,
        coords: Vec<Letters>,
        total: Option<Letters>,
        support: Support,
        ctx: &EvalContext,
    ) -> Result<Self> {
        let dim = coords.len();
        let weight = match weight {
            WeightSpec::None => Weight::None,
            WeightSpec::WeylC { base, scale_sq } => {
                check_dim(base.len(), dim)?;
                Weight::WeylC(WeylCRatio::scaled(&base, &scale_sq, ctx)?, shift_tables(&base, ctx))
            }
            WeightSpec::Delta { base } => {
                check_dim(base.len(), dim)?;
                Weight::Delta(DeltaRatio::new(&base, ctx)?, shift_tables(&base, ctx))
            }
            WeightSpec::WellPoised { a } => {
                check_dim(1, dim)?;
                let d = ctx.one() - &a;
                ctx.check_generic(&d, || "well-poised factor 1 - a".into())?;
                let t = shift_tables(&[ctx.one()], ctx).pop().unwrap();
                Weight::WellPoised(a, d.recip(), t)
            }
        };
        let coords = coords
            .iter()
            .enumerate()
            .map(|(k, l)| RefCell::new(LazyTable::new(format!("coordinate {k}"), l, ctx.one(), ctx)))
            .collect();
        let total = total.map(|l| RefCell::new(LazyTable::new("index sum".into(), &l, ctx.one(), ctx)));
        Ok(FactorizedTerm {
            dim,
            weight,
            coords,
            total,
            support,
            zero: ctx.zero(),
            one: ctx.one(),
        })
    }

    fn shifted(tables: &[RefCell<LazyTable>], y: &[i64]) -> Result<Vec<QComplex>> {
        tables
            .iter()
            .zip(y)
            .map(|(t, &yk)| t.borrow_mut().get(yk).cloned())
            .collect()
    }

    fn weight(&self, y: &[i64]) -> Result<QComplex> {
        Ok(match &self.weight {
            Weight::None => self.one.clone(),
            Weight::WeylC(r, t) => r.eval_shifted(&Self::shifted(t, y)?),
            Weight::Delta(r, t) => r.eval_shifted(&Self::shifted(t, y)?),
            Weight::WellPoised(a, inv, t) => {
                let mut t = t.borrow_mut();
                let qy = t.get(y[0])?;
                (&self.one - &(a * &(qy * qy))) * inv
            }
        })
    }
}

fn check_dim(got: usize, want: usize) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::SchemaMismatch(format!(
            "weight has dimension {got} but the summand has {want} coordinates"
        )))
    }
}

impl TermFunction for FactorizedTerm {
    fn dim(&self) -> usize {
        self.dim
    }

    fn term(&self, y: &[i64]) -> Result<QComplex> {
        if self.support == Support::Nonnegative && y.iter().any(|&v| v < 0) {
            return Ok(self.zero.clone());
        }
        let mut acc = self.weight(y)?;
        for (t, &yk) in self.coords.iter().zip(y) {
            acc *= t.borrow_mut().get(yk)?;
        }
        if let Some(t) = &self.total {
            acc *= t.borrow_mut().get(y.iter().sum())?;
        }
        Ok(acc)
    }
}

/// Accumulates a closed-form product; denominators are collected and
/// inverted once.
pub struct Prod<'a> {
    ctx: &'a EvalContext,
    num: QComplex,
    den: QComplex,
    infinite: usize,
}

impl<'a> Prod<'a> {
    pub fn new(ctx: &'a EvalContext) -> Self {
        Prod {
            ctx,
            num: ctx.one(),
            den: ctx.one(),
            infinite: 0,
        }
    }

    pub fn mul(&mut self, x: &QComplex) -> &mut Self {
        self.num *= x;
        self
    }

    pub fn div(&mut self, x: &QComplex) -> Result<&mut Self> {
        self.ctx.check_generic(x, || "closed-form denominator".into())?;
        self.den *= x;
        Ok(self)
    }

    /// Multiplies by `(a)_k`.
    pub fn poch(&mut self, a: &QComplex, k: i64) -> Result<&mut Self> {
        self.num *= crate::qarith::qpoch(a, k, self.ctx)?;
        Ok(self)
    }

    /// Divides by `(a)_k`.
    pub fn poch_den(&mut self, a: &QComplex, k: i64) -> Result<&mut Self> {
        let v = qpoch_nonvanishing(a, k, self.ctx)?;
        self.den *= v;
        Ok(self)
    }

    /// Multiplies by `(a)_inf`.
    pub fn inf(&mut self, a: &QComplex) -> Result<&mut Self> {
        self.num *= crate::qarith::qpoch_inf(a, self.ctx)?;
        self.infinite += 1;
        Ok(self)
    }

    /// Divides by `(a)_inf`.
    pub fn inf_den(&mut self, a: &QComplex) -> Result<&mut Self> {
        let v = qpoch_inf_nonvanishing(a, self.ctx)?;
        self.den *= v;
        self.infinite += 1;
        Ok(self)
    }

    pub fn value(&self) -> QComplex {
        &self.num / &self.den
    }

    /// Relative truncation bound: one tail tolerance per infinite product.
    pub fn tail(&self) -> f64 {
        self.infinite as f64 * self.ctx.inf_tail_tol()
    }
}
