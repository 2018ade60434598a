//! Seeded random generic parameters.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::identities::registry::{Len, Shape};
use crate::identities::{convergence_modulus, descriptor, genericity_probe, params, IdentityId, Num, ParamFile};
use crate::qarith::{EvalContext, Mode};

/// Moduli of sampled letters.
pub const LETTER_MODULI: (f64, f64) = (0.2, 2.0);
/// Largest denominator of a sampled rational.
pub const MAX_DENOMINATOR: i64 = 20;
/// Minimum denominator modulus accepted by the sampler.
pub const SAMPLE_MARGIN: f64 = 1e-2;
pub const PROBE_RADIUS: u32 = 8;
pub const PROBE_DIGITS: u32 = 30;
pub const ATTEMPTS: u32 = 10_000;
/// Letter redraws before the dimensions, shifts and base are redrawn.
pub const LETTER_ATTEMPTS: u32 = 500;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QSpec {
    /// Always this base.
    Fixed(Num),
    /// Random modulus in `[min_abs, max_abs]`; random argument unless `real`.
    Range {
        min_abs: f64,
        max_abs: f64,
        #[serde(default)]
        real: bool,
    },
}

impl Default for QSpec {
    fn default() -> Self {
        QSpec::Range {
            min_abs: 0.2,
            max_abs: 0.5,
            real: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SampleBounds {
    pub n: [usize; 2],
    pub p: [usize; 2],
    pub m_max: u32,
    pub l_max: u32,
    pub q: QSpec,
    pub modulus_max: f64,
}

impl Default for SampleBounds {
    fn default() -> Self {
        SampleBounds {
            n: [1, 2],
            p: [0, 2],
            m_max: 2,
            l_max: 2,
            q: QSpec::default(),
            modulus_max: 0.9,
        }
    }
}

impl SampleBounds {
    fn check(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::Config(format!("sample bounds: {what}")));
        if self.n[0] > self.n[1] || self.n[0] == 0 {
            return bad("n range must be nonempty and start at 1 or more");
        }
        if self.p[0] > self.p[1] {
            return bad("p range must be nonempty");
        }
        if !(self.modulus_max > 0.0 && self.modulus_max <= 0.9) {
            return bad("modulus_max must lie in (0, 0.9]");
        }
        if let QSpec::Range { min_abs, max_abs, .. } = self.q {
            if !(min_abs > 0.0 && min_abs <= max_abs && max_abs < 1.0) {
                return bad("q moduli must satisfy 0 < min_abs <= max_abs < 1");
            }
        }
        Ok(())
    }
}

fn intersect(a: [usize; 2], b: (usize, usize)) -> Option<(usize, usize)> {
    let lo = a[0].max(b.0);
    let hi = a[1].min(b.1);
    (lo <= hi).then_some((lo, hi))
}

fn letter(rng: &mut ChaCha8Rng, mode: Mode, moduli: (f64, f64), real: bool) -> Num {
    match mode {
        Mode::Exact => {
            let (lo, hi) = moduli;
            loop {
                let d = rng.random_range(1..=MAX_DENOMINATOR);
                let n_lo = (lo * d as f64).ceil() as i64;
                let n_hi = (hi * d as f64).floor() as i64;
                if n_lo > n_hi {
                    continue;
                }
                let mut n = rng.random_range(n_lo..=n_hi);
                if n == 0 {
                    continue;
                }
                if rng.random_bool(0.5) {
                    n = -n;
                }
                return Num::real(Rational::from((n, d)).to_string());
            }
        }
        Mode::Float => {
            let r = rng.random_range(moduli.0.ln()..=moduli.1.ln()).exp();
            let theta = if real {
                if rng.random_bool(0.5) {
                    0.0
                } else {
                    PI
                }
            } else {
                rng.random_range(-PI..PI)
            };
            let (re, im) = if real { (r * theta.cos(), 0.0) } else { (r * theta.cos(), r * theta.sin()) };
            Num(format!("{re:.16e}"), format!("{im:.16e}"))
        }
    }
}

fn pick_q(rng: &mut ChaCha8Rng, spec: &QSpec, mode: Mode) -> Num {
    match spec {
        QSpec::Fixed(q) => q.clone(),
        QSpec::Range { min_abs, max_abs, real } => {
            let moduli = (*min_abs, *max_abs);
            match mode {
                Mode::Exact => loop {
                    let x = letter(rng, mode, moduli, true);
                    let v: Rational = crate::qarith::parse_rational(&x.0).expect("sampled rational");
                    if v.clone().abs() < 1 {
                        break x;
                    }
                },
                Mode::Float => {
                    let r = rng.random_range(moduli.0..=moduli.1);
                    let theta = if *real { 0.0 } else { rng.random_range(-PI..PI) };
                    Num(format!("{:.16e}", r * theta.cos()), format!("{:.16e}", r * theta.sin()))
                }
            }
        }
    }
}

fn json_num(x: &Num) -> Value {
    Value::from(vec![x.0.clone(), x.1.clone()])
}

/// Dimensions, shifts and base of one draw; letters are drawn separately.
struct Structure {
    n: usize,
    p: usize,
    q: Num,
    ints: Vec<(&'static str, Vec<u32>)>,
}

fn field_len(l: Len, n: usize, p: usize) -> usize {
    match l {
        Len::N => n,
        Len::P => p,
        Len::TwoNPlus2 => 2 * n + 2,
        Len::Fixed(k) => k,
    }
}

fn draw_structure(rng: &mut ChaCha8Rng, id: IdentityId, bounds: &SampleBounds, mode: Mode) -> Result<Structure> {
    let desc = descriptor(id);
    let (n_lo, n_hi) = intersect(bounds.n, desc.n_range)
        .ok_or_else(|| Error::Config(format!("n range {:?} is outside what {id} allows", bounds.n)))?;
    let n = rng.random_range(n_lo..=n_hi);
    let p = if desc.p_zero {
        0
    } else if desc.p_equals_n {
        n
    } else {
        rng.random_range(bounds.p[0]..=bounds.p[1])
    };
    let q = pick_q(rng, &bounds.q, mode);
    let ints = desc
        .fields
        .iter()
        .filter_map(|spec| match spec.shape {
            Shape::Ints(l) => {
                let hi = if spec.name == "l" { bounds.l_max } else { bounds.m_max };
                Some((spec.name, (0..field_len(l, n, p)).map(|_| rng.random_range(0..=hi)).collect()))
            }
            _ => None,
        })
        .collect();
    Ok(Structure { n, p, q, ints })
}

fn draw_letters(rng: &mut ChaCha8Rng, id: IdentityId, st: &Structure, mode: Mode) -> Result<ParamFile> {
    let desc = descriptor(id);
    let mut obj = Map::new();
    obj.insert("n".into(), Value::from(st.n));
    obj.insert("p".into(), Value::from(st.p));
    for spec in desc.fields {
        let v = match spec.shape {
            Shape::Scalar => json_num(&letter(rng, mode, LETTER_MODULI, false)),
            Shape::Vector(l) => Value::from(
                (0..field_len(l, st.n, st.p))
                    .map(|_| json_num(&letter(rng, mode, LETTER_MODULI, false)))
                    .collect::<Vec<_>>(),
            ),
            Shape::Ints(_) => {
                let (_, m) = st.ints.iter().find(|(k, _)| *k == spec.name).expect("drawn with the structure");
                Value::from(m.clone())
            }
        };
        obj.insert(spec.name.into(), v);
    }
    Ok(ParamFile {
        id,
        q: Some(st.q.clone()),
        params: params::params_from_fields(id, &obj)?,
    })
}

fn probe_context(q: &Num, mode: Mode) -> Result<EvalContext> {
    EvalContext::builder(mode, [q.0.as_str(), q.1.as_str()])
        .digits(PROBE_DIGITS)
        .genericity_margin(SAMPLE_MARGIN)
        .build()
}

/// Draws generic parameters for `id`: letters with moduli in `[0.2, 2]`,
/// rational with denominators up to 20 in exact mode. `q`, the shifts and the
/// letters are redrawn until the convergence modulus is at most
/// `bounds.modulus_max` and every denominator met by a probe evaluation is at
/// least [`SAMPLE_MARGIN`] away from zero.
pub fn sample_params(id: IdentityId, bounds: &SampleBounds, mode: Mode, seed: u64) -> Result<ParamFile> {
    bounds.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    while attempts < ATTEMPTS {
        let st = draw_structure(&mut rng, id, bounds, mode)?;
        let ctx = probe_context(&st.q, mode)?;
        for _ in 0..LETTER_ATTEMPTS {
            attempts += 1;
            let file = draw_letters(&mut rng, id, &st, mode)?;
            match convergence_modulus(id, &file.params, &ctx) {
                Ok(Some(m)) if m.is_nan() || m > bounds.modulus_max => continue,
                Ok(_) => {}
                Err(Error::SingularParameter { .. }) => continue,
                Err(e) => return Err(e),
            }
            match genericity_probe(id, &file.params, &ctx, PROBE_RADIUS) {
                Ok(()) => return Ok(file),
                Err(Error::SingularParameter { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Err(Error::SamplingExhausted { attempts: ATTEMPTS })
}

/// The seed of case `index` in a batch seeded with `seed`.
pub fn case_seed(seed: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng.random()
}
