//! Acceptance run: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use qroot::error::ErrorKind;
use qroot::harness::{run_suite, sample_params, QSpec, SampleBounds, SuiteConfig, SuiteEntry};
use qroot::identities::onevar::{self, RootBranch};
use qroot::identities::terms::Support;
use qroot::identities::{
    cn, eval_side, kmt_consistency, one_var_as_cn, one_var_sides, te_x_sum, verify, BilateralCnParams, IdentityId,
    Num, OneVarValues, ParamFile, ParamSet, Side, Target, VerificationReport,
};
use qroot::qarith::{qpoch, EvalContext, Mode, QComplex};
use qroot::rootsys::{delta_a_ratio, shift, weyl_c, weyl_c_last_scaling, weyl_c_ratio};
use qroot::summation::TermFunction;

const BILATERAL_DIGITS: u32 = 50;
const BILATERAL_MAX_SHELL: u32 = 400;
const BILATERAL_REL: f64 = 1e-30;
const DEGENERATION_REL: f64 = 1e-40;
const CASE_LIMIT_MS: f64 = 60_000.0;
const EXACT_LIMIT_S: f64 = 120.0;

struct Outcome {
    pass: bool,
    detail: String,
}

fn line(n: u32, title: &str, o: &Outcome) {
    let tag = if o.pass { "PASS" } else { "FAIL" };
    println!("{tag} criterion {n}: {title}: {}", o.detail);
}

fn rel(a: &QComplex, b: &QComplex) -> f64 {
    let d = (a - b).abs_f64();
    if d == 0.0 {
        0.0
    } else {
        d / a.abs_f64().max(b.abs_f64())
    }
}

fn context(file: &ParamFile, mode: Mode, digits: u32) -> EvalContext {
    let q = file.q.as_ref().unwrap();
    EvalContext::builder(mode, [q.0.as_str(), q.1.as_str()])
        .digits(digits)
        .max_shell(BILATERAL_MAX_SHELL)
        .build()
        .unwrap()
}

fn float_bounds(n: [usize; 2], p: [usize; 2], m_max: u32) -> SampleBounds {
    SampleBounds {
        n,
        p,
        m_max,
        l_max: 2,
        q: QSpec::Range {
            min_abs: 0.2,
            max_abs: 0.5,
            real: false,
        },
        modulus_max: 0.6,
    }
}

fn sample(id: IdentityId, bounds: &SampleBounds, seed: u64) -> ParamFile {
    sample_params(id, bounds, Mode::Float, seed).unwrap_or_else(|e| panic!("sampling {id} seed {seed}: {e}"))
}

fn exact_entry(id: Target, seed: u64, n: [usize; 2], p: [usize; 2], m_max: u32, l_max: u32) -> SuiteEntry {
    SuiteEntry {
        id,
        mode: Mode::Exact,
        digits: 30,
        seed,
        count: 25,
        max_shell: 60,
        tol: None,
        bounds: SampleBounds {
            n,
            p,
            m_max,
            l_max,
            q: QSpec::Fixed(Num::real("1/3")),
            modulus_max: 0.9,
        },
        params: vec![],
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cfg = SuiteConfig {
        cases: vec![
            exact_entry(Target::Identity(IdentityId::N0Terminating), 101, [1, 2], [0, 2], 2, 0),
            exact_entry(Target::Identity(IdentityId::AkFinite), 102, [1, 2], [0, 2], 2, 2),
            exact_entry(Target::Identity(IdentityId::CmlWatson), 103, [1, 2], [0, 2], 2, 0),
            exact_entry(Target::CrossCheckFl, 104, [1, 1], [0, 2], 1, 0),
        ],
        output: None,
        timing: false,
    };
    let reports = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                pass: false,
                detail: format!("suite error: {e}"),
            }
        }
    };
    let secs = start.elapsed().as_secs_f64();
    let exact_zero = |r: &VerificationReport| r.pass && r.abs_discrepancy.as_deref() == Some("0");
    let mut parts = Vec::new();
    let mut ok = reports.len() == 100 && secs < EXACT_LIMIT_S;
    for t in ["n0_terminating", "ak_finite", "cml_watson", "cross_check_fl"] {
        let of: Vec<_> = reports.iter().filter(|r| r.id.to_string() == t).collect();
        let good = of.iter().filter(|r| exact_zero(r)).count();
        ok &= good == 25 && of.len() == 25;
        parts.push(format!("{t} {good}/{}", of.len()));
    }
    Outcome {
        pass: ok,
        detail: format!("{} exactly zero, {secs:.1} s (limit {EXACT_LIMIT_S} s)", parts.join(", ")),
    }
}

fn bilateral_config() -> SuiteConfig {
    let entry = |id, seed, bounds| SuiteEntry {
        id: Target::Identity(id),
        mode: Mode::Float,
        digits: BILATERAL_DIGITS,
        seed,
        count: 15,
        max_shell: BILATERAL_MAX_SHELL,
        tol: None,
        bounds,
        params: vec![],
    };
    SuiteConfig {
        cases: vec![
            entry(IdentityId::GiCn6psi6, 201, float_bounds([1, 2], [0, 0], 0)),
            entry(IdentityId::TeReduction, 202, float_bounds([1, 2], [0, 2], 2)),
            entry(IdentityId::RgAnReduction, 203, float_bounds([2, 2], [0, 2], 2)),
            entry(IdentityId::FlOnevar, 204, float_bounds([1, 1], [0, 2], 2)),
        ],
        output: None,
        timing: true,
    }
}

fn criterion_2(reports: &[VerificationReport]) -> Outcome {
    let mut ok = reports.len() == 60;
    let mut parts = Vec::new();
    let mut worst_ms: f64 = 0.0;
    let mut worst_rel: f64 = 0.0;
    for t in ["gi_cn_6psi6", "te_reduction", "rg_an_reduction", "fl_onevar"] {
        let of: Vec<_> = reports.iter().filter(|r| r.id.to_string() == t).collect();
        let good = of
            .iter()
            .filter(|r| r.pass && r.rel_discrepancy.is_some_and(|x| x < BILATERAL_REL))
            .count();
        for r in &of {
            worst_ms = worst_ms.max(r.wall_time_ms.unwrap_or(f64::INFINITY));
            worst_rel = worst_rel.max(r.rel_discrepancy.unwrap_or(f64::INFINITY));
        }
        ok &= good == 15 && of.len() == 15;
        parts.push(format!("{t} {good}/{}", of.len()));
    }
    ok &= worst_ms < CASE_LIMIT_MS;
    Outcome {
        pass: ok,
        detail: format!(
            "{}; max rel {worst_rel:.1e} (< {BILATERAL_REL:.0e}), slowest case {:.1} s",
            parts.join(", "),
            worst_ms / 1e3
        ),
    }
}

fn criterion_3() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    let bounds = float_bounds([1, 2], [1, 2], 0);
    for seed in 0..10 {
        let file = sample(IdentityId::TeReduction, &bounds, 300 + seed);
        let ctx = context(&file, Mode::Float, BILATERAL_DIGITS);
        let te = file.params.as_bilateral_cn().unwrap();
        let gi = ParamSet::BilateralCn(BilateralCnParams {
            p: 0,
            c: vec![],
            m: vec![],
            ..te.clone()
        });
        for side in [Side::Left, Side::Right] {
            let a = eval_side(IdentityId::TeReduction, side, &file.params, &ctx);
            let b = eval_side(IdentityId::GiCn6psi6, side, &gi, &ctx);
            match (a, b) {
                (Ok(a), Ok(b)) => worst = worst.max(rel(&a.value, &b.value)),
                (a, b) => failures.push(format!("seed {seed} {side}: {:?} {:?}", a.err(), b.err())),
            }
        }
    }
    let first = worst <= DEGENERATION_REL && failures.is_empty();

    let mut term_worst: f64 = 0.0;
    let mut side_worst: f64 = 0.0;
    let fl_bounds = float_bounds([1, 1], [1, 2], 2);
    for seed in 0..5 {
        let file = sample(IdentityId::FlOnevar, &fl_bounds, 310 + seed);
        let ctx = context(&file, Mode::Float, BILATERAL_DIGITS);
        let v = OneVarValues::new(file.params.as_one_var().unwrap(), &ctx).unwrap();
        let cv = one_var_as_cn(&v, &ctx).unwrap();
        let te_term = cn::left_term(&cv.a, &cv.z, &cv.c, &cv.m, Support::All, &ctx).unwrap();
        let fl_term = onevar::left_term(&v, &ctx).unwrap();
        for y in -12..=12 {
            match (te_term.term(&[y]), fl_term.term(&[y])) {
                (Ok(a), Ok(b)) => term_worst = term_worst.max(rel(&a, &b)),
                (a, b) => failures.push(format!("term y={y}: {:?} {:?}", a.err(), b.err())),
            }
        }
        let (te_l, te_r) = qroot::identities::te_sides(&cv, &ctx);
        let (fl_l, fl_r) = one_var_sides(&v, RootBranch::Principal, &ctx);
        match (te_l, fl_l, te_r, fl_r) {
            (Ok(a), Ok(b), Ok(c), Ok(d)) => {
                side_worst = side_worst
                    .max(rel(&a.result.value, &b.result.value))
                    .max(rel(&c.result.value, &d.result.value));
            }
            _ => failures.push(format!("fl seed {seed}: side evaluation failed")),
        }
    }
    let second = term_worst <= DEGENERATION_REL && side_worst <= BILATERAL_REL && failures.is_empty();
    Outcome {
        pass: first && second,
        detail: format!(
            "m = 0 vs 6psi6 max rel {worst:.1e} on 10 sets; n = 1 substitution vs one-variable series: \
             summands max rel {term_worst:.1e}, sides {side_worst:.1e} on 5 sets{}",
            if failures.is_empty() { String::new() } else { format!("; errors: {}", failures.join("; ")) }
        ),
    }
}

fn criterion_4() -> Outcome {
    let mut errors = Vec::new();

    let mut perm_worst: f64 = 0.0;
    let bounds = float_bounds([1, 2], [2, 2], 2);
    for seed in 0..10 {
        let file = sample(IdentityId::TeReduction, &bounds, 400 + seed);
        let ctx = context(&file, Mode::Float, BILATERAL_DIGITS);
        let mut swapped = file.params.as_bilateral_cn().unwrap().clone();
        swapped.c.swap(0, 1);
        swapped.m.swap(0, 1);
        let swapped = ParamSet::BilateralCn(swapped);
        for side in [Side::Left, Side::Right] {
            match (
                eval_side(IdentityId::TeReduction, side, &file.params, &ctx),
                eval_side(IdentityId::TeReduction, side, &swapped, &ctx),
            ) {
                (Ok(a), Ok(b)) => perm_worst = perm_worst.max(rel(&a.value, &b.value)),
                _ => errors.push(format!("permutation seed {seed} {side}")),
            }
        }
    }

    let mut z_worst: f64 = 0.0;
    let mut kmt_pass = 0;
    let kmt_bounds = float_bounds([1, 2], [0, 2], 2);
    for seed in 0..10 {
        let file = sample(IdentityId::KmtTransform, &kmt_bounds, 410 + seed);
        let ctx = context(&file, Mode::Float, BILATERAL_DIGITS);
        let p = file.params.as_bilateral_cn().unwrap();
        match (kmt_consistency(p, &ctx), te_x_sum(p, &ctx)) {
            (Ok((at_z, at_w)), Ok(x)) => {
                z_worst = z_worst.max(rel(&at_z, &at_w)).max(rel(&at_z, &x.value));
            }
            _ => errors.push(format!("z-independence seed {seed}")),
        }
        let r = verify(IdentityId::KmtTransform, &file.params, &ctx);
        if r.pass && r.rel_discrepancy.is_some_and(|x| x < BILATERAL_REL) {
            kmt_pass += 1;
        }
    }

    let mut root_worst: f64 = 0.0;
    let fl_bounds = float_bounds([1, 1], [1, 2], 2);
    for seed in 0..10 {
        let file = sample(IdentityId::FlOnevar, &fl_bounds, 420 + seed);
        let ctx = context(&file, Mode::Float, BILATERAL_DIGITS);
        let v = OneVarValues::new(file.params.as_one_var().unwrap(), &ctx).unwrap();
        let (_, plus) = one_var_sides(&v, RootBranch::Principal, &ctx);
        let (_, minus) = one_var_sides(&v, RootBranch::Negated, &ctx);
        match (plus, minus) {
            (Ok(a), Ok(b)) => root_worst = root_worst.max(rel(&a.result.value, &b.result.value)),
            _ => errors.push(format!("root seed {seed}")),
        }
    }
    let ok = perm_worst <= DEGENERATION_REL
        && z_worst <= BILATERAL_REL
        && kmt_pass == 10
        && root_worst <= BILATERAL_REL
        && errors.is_empty();
    Outcome {
        pass: ok,
        detail: format!(
            "(c,m) swap max rel {perm_worst:.1e}; x-sum z-independence {z_worst:.1e}; \
             root independence {root_worst:.1e}; kmt {kmt_pass}/10 pass{}",
            if errors.is_empty() { String::new() } else { format!("; errors: {}", errors.join(", ")) }
        ),
    }
}

struct Laws {
    rng: ChaCha8Rng,
}

impl Laws {
    fn rational(&mut self, ctx: &EvalContext) -> QComplex {
        let mut n: i64 = self.rng.random_range(1..=40);
        if self.rng.random_bool(0.5) {
            n = -n;
        }
        ctx.ratio(n, self.rng.random_range(1..=20))
    }

    fn exact_ctx(&mut self) -> EvalContext {
        let n: i64 = self.rng.random_range(1..=9);
        let d = n + self.rng.random_range(1..=12);
        EvalContext::exact(if self.rng.random_bool(0.5) { n } else { -n }, d).unwrap()
    }

    /// Runs `law` until 100 nonsingular instances have been checked.
    fn count(&mut self, law: impl Fn(&mut Self) -> Option<bool>) -> (u32, u32) {
        let (mut valid, mut held) = (0, 0);
        while valid < 100 {
            if let Some(ok) = law(self) {
                valid += 1;
                held += ok as u32;
            }
        }
        (held, valid)
    }
}

fn criterion_5() -> Outcome {
    let mut laws = Laws {
        rng: ChaCha8Rng::seed_from_u64(500),
    };
    let tol = 10f64.powi(-(BILATERAL_DIGITS as i32 - 5));
    let mut results: Vec<(&str, (u32, u32))> = Vec::new();
    results.push((
        "shift law",
        laws.count(|l| {
            let ctx = l.exact_ctx();
            let a = l.rational(&ctx);
            let (k, m) = (l.rng.random_range(-4..=4), l.rng.random_range(-4..=4));
            let lhs = qpoch(&a, k + m, &ctx).ok()?;
            let rhs = qpoch(&a, k, &ctx).ok()? * qpoch(&(&a * &ctx.q_pow(k)), m, &ctx).ok()?;
            Some(lhs == rhs)
        }),
    ));
    results.push((
        "shift law (float)",
        laws.count(|l| {
            let (r, t): (f64, f64) = (l.rng.random_range(0.2..0.7), l.rng.random_range(-3.1..3.1));
            let ctx = EvalContext::float(r * t.cos(), r * t.sin(), BILATERAL_DIGITS).unwrap();
            let (s, u): (f64, f64) = (l.rng.random_range(0.3..1.8), l.rng.random_range(-3.1..3.1));
            let a = ctx.complex_f64(s * u.cos(), s * u.sin()).unwrap();
            let (k, m) = (l.rng.random_range(-4..=4), l.rng.random_range(-4..=4));
            let lhs = qpoch(&a, k + m, &ctx).ok()?;
            let rhs = qpoch(&a, k, &ctx).ok()? * qpoch(&(&a * &ctx.q_pow(k)), m, &ctx).ok()?;
            Some(rel(&lhs, &rhs) <= tol)
        }),
    ));
    results.push((
        "inversion law",
        laws.count(|l| {
            let ctx = l.exact_ctx();
            let a = l.rational(&ctx);
            let k = l.rng.random_range(0..=6);
            let v = qpoch(&a, -k, &ctx).ok()? * qpoch(&(&a * &ctx.q_pow(-k)), k, &ctx).ok()?;
            Some(v.is_one())
        }),
    ));
    results.push((
        "reversal of (a)_n/(b)_n",
        laws.count(|l| {
            let ctx = l.exact_ctx();
            let (a, b) = (l.rational(&ctx), l.rational(&ctx));
            let n = l.rng.random_range(0..=6);
            let den = qpoch(&b, n, &ctx).ok()?;
            let rev = qpoch(&(ctx.q_pow(1 - n) / &b), n, &ctx).ok()?;
            if den.is_zero() || rev.is_zero() {
                return None;
            }
            let lhs = qpoch(&a, n, &ctx).ok()? / den;
            let rhs = (&a / &b).powi(n) * qpoch(&(ctx.q_pow(1 - n) / &a), n, &ctx).ok()? / rev;
            Some(lhs == rhs)
        }),
    ));
    results.push((
        "(q)_n/(q^-n)_n",
        laws.count(|l| {
            let ctx = l.exact_ctx();
            let n = l.rng.random_range(0..=8);
            let lhs = qpoch(ctx.q(), n, &ctx).ok()? / qpoch(&ctx.q_pow(-n), n, &ctx).ok()?;
            let sign = if n % 2 == 0 { ctx.one() } else { -ctx.one() };
            Some(lhs == sign * ctx.q_pow(n * (n + 1) / 2))
        }),
    ));
    results.push((
        "last-coordinate scaling of W",
        laws.count(|l| {
            let ctx = l.exact_ctx();
            let n = l.rng.random_range(1..=3);
            let z: Vec<QComplex> = (0..n).map(|_| l.rational(&ctx)).collect();
            let lambda = l.rational(&ctx);
            let w = weyl_c(&z, &ctx);
            if w.is_zero() {
                return None;
            }
            let mut scaled = z.clone();
            *scaled.last_mut().unwrap() *= &lambda;
            Some(weyl_c(&scaled, &ctx) / w == weyl_c_last_scaling(&z, &lambda, &ctx).ok()?)
        }),
    ));
    results.push((
        "permutation invariance of W and Delta ratios",
        laws.count(|l| {
            let ctx = l.exact_ctx();
            let n = l.rng.random_range(2..=3);
            let z: Vec<QComplex> = (0..n).map(|_| l.rational(&ctx)).collect();
            let y: Vec<i64> = (0..n).map(|_| l.rng.random_range(-3..=3)).collect();
            let (i, j) = (0, l.rng.random_range(1..n));
            let (mut zs, mut ys) = (z.clone(), y.clone());
            zs.swap(i, j);
            ys.swap(i, j);
            let w = weyl_c_ratio(&z, &y, &ctx).ok()? == weyl_c_ratio(&zs, &ys, &ctx).ok()?;
            let d = delta_a_ratio(&z, &y, &ctx).ok()? == delta_a_ratio(&zs, &ys, &ctx).ok()?;
            Some(w && d)
        }),
    ));
    results.push((
        "cocycle law of W and Delta ratios",
        laws.count(|l| {
            let ctx = l.exact_ctx();
            let n = l.rng.random_range(1..=3);
            let z: Vec<QComplex> = (0..n).map(|_| l.rational(&ctx)).collect();
            let y: Vec<i64> = (0..n).map(|_| l.rng.random_range(-3..=3)).collect();
            let y2: Vec<i64> = (0..n).map(|_| l.rng.random_range(-3..=3)).collect();
            let sum: Vec<i64> = y.iter().zip(&y2).map(|(a, b)| a + b).collect();
            let zy = shift(&z, &y, &ctx);
            let w = weyl_c_ratio(&z, &sum, &ctx).ok()?
                == weyl_c_ratio(&z, &y, &ctx).ok()? * weyl_c_ratio(&zy, &y2, &ctx).ok()?;
            let d = delta_a_ratio(&z, &sum, &ctx).ok()?
                == delta_a_ratio(&z, &y, &ctx).ok()? * delta_a_ratio(&zy, &y2, &ctx).ok()?;
            Some(w && d)
        }),
    ));
    let ok = results.iter().all(|(_, (held, valid))| held == valid);
    let detail = results
        .iter()
        .map(|(name, (held, valid))| format!("{name} {held}/{valid}"))
        .collect::<Vec<_>>()
        .join(", ");
    Outcome { pass: ok, detail }
}

fn expect_failure(label: &str, file: serde_json::Value, mode: Mode, max_shell: u32, kind: ErrorKind) -> Option<String> {
    let file = ParamFile::from_json(&file).unwrap();
    let q = file.q.clone().unwrap();
    let ctx = EvalContext::builder(mode, [q.0.as_str(), q.1.as_str()])
        .digits(30)
        .max_shell(max_shell)
        .build()
        .unwrap();
    let r = verify(file.id, &file.params, &ctx);
    match &r.failure {
        Some(f) if f.kind == kind && !r.pass && r.rel_discrepancy.is_none() => None,
        other => Some(format!("{label}: expected {kind:?}, got pass={} failure={other:?}", r.pass)),
    }
}

fn criterion_6(reports: &[VerificationReport]) -> Outcome {
    let te = |a: [&str; 4], max_q: &str| {
        json!({"id": "te_reduction", "q": [max_q, "0"], "n": 1, "p": 1,
               "a": [[a[0], "0"], [a[1], "0"], [a[2], "0"], [a[3], "0"]],
               "z": [["0.7", "0.2"]], "c": [["0.45", "-0.3"]], "m": [1]})
    };
    let checks = [
        expect_failure(
            "n0 with q a z = 1",
            json!({"id": "n0_terminating", "q": "1/3", "z": ["2"], "m": [1], "a": ["3/2"], "b": "2/7"}),
            Mode::Exact,
            60,
            ErrorKind::SingularParameter,
        ),
        expect_failure(
            "ak with c z = 1",
            json!({"id": "ak_finite", "q": "1/3", "z": ["2"], "c": ["1/2"], "m": [1], "l": [1], "b": "3/5", "d": "2/7"}),
            Mode::Exact,
            60,
            ErrorKind::SingularParameter,
        ),
        expect_failure(
            "6psi6 with a_1 = q z_1",
            json!({"id": "gi_cn_6psi6", "q": ["0.3", "0"], "n": 1,
                   "a": [["0.21", "0"], ["1.9", "0.1"], ["-1.7", "0"], ["1.8", "0.4"]], "z": [["0.7", "0"]]}),
            Mode::Float,
            400,
            ErrorKind::SingularParameter,
        ),
        expect_failure(
            "reduction formula with modulus above 0.9",
            te(["0.3", "0.4", "0.5", "0.6"], "0.3"),
            Mode::Float,
            400,
            ErrorKind::ConvergenceConditionViolated,
        ),
        expect_failure(
            "balanced case A = q^(1-|m|)",
            te(["1", "1", "0.5", "2"], "0.3"),
            Mode::Float,
            400,
            ErrorKind::ConvergenceConditionViolated,
        ),
        expect_failure(
            "shell cap too small",
            te(["1.9", "1.8", "-1.7", "1.6"], "0.45"),
            Mode::Float,
            3,
            ErrorKind::NoConvergence,
        ),
        expect_failure(
            "bilateral side in rational mode",
            te(["19/10", "9/5", "-17/10", "8/5"], "9/20"),
            Mode::Exact,
            60,
            ErrorKind::UnsupportedMode,
        ),
    ];
    let total = checks.len();
    let errors: Vec<String> = checks.into_iter().flatten().collect();
    let stable = reports.iter().filter(|r| r.radius_stable()).count();
    let measured = reports
        .iter()
        .flat_map(|r| [&r.lhs, &r.rhs])
        .flatten()
        .filter(|s| s.stability.is_some())
        .count();
    let ok = errors.is_empty() && stable == reports.len() && measured >= reports.len();
    Outcome {
        pass: ok,
        detail: format!(
            "{}/{total} bad inputs give typed failures{}; radius stability {stable}/{} bilateral suite cases",
            total - errors.len(),
            if errors.is_empty() { String::new() } else { format!(" except: {}", errors.join("; ")) },
            reports.len()
        ),
    }
}

fn main() -> ExitCode {
    let mut all = true;
    let mut record = |n, title, o: Outcome| {
        line(n, title, &o);
        all &= o.pass;
    };
    record(1, "exact terminating suite", criterion_1());
    let bilateral = run_suite(&bilateral_config()).expect("bilateral suite runs");
    record(2, "bilateral suite at 50 digits", criterion_2(&bilateral));
    record(3, "degeneration checks", criterion_3());
    record(4, "structural invariants", criterion_4());
    record(5, "primitive properties", criterion_5());
    record(6, "robustness", criterion_6(&bilateral));
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
