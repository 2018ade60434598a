//! Randomized laws of the q-Pochhammer symbol, the Weyl and Vandermonde
//! ratios and the lattice enumerators.

use proptest::prelude::*;
use qroot::qarith::{qpoch, EvalContext, QComplex};
use qroot::rootsys::{delta_a_ratio, shift, weyl_c, weyl_c_last_scaling, weyl_c_ratio};
use qroot::summation::{for_each_shell_point, sum_to_radius, FnTerm};

const CASES: u32 = 100;
const DIGITS: u32 = 40;

fn rational() -> impl Strategy<Value = (i64, i64)> {
    (prop_oneof![-40i64..=-1, 1i64..=40], 1i64..=20)
}

fn base() -> impl Strategy<Value = (i64, i64)> {
    (1i64..=9, 0i64..=11, any::<bool>()).prop_map(|(n, extra, neg)| (if neg { -n } else { n }, n + 1 + extra))
}

fn complex() -> impl Strategy<Value = (f64, f64)> {
    (0.3f64..1.8, -3.1f64..3.1).prop_map(|(r, t)| (r * t.cos(), r * t.sin()))
}

fn float_base() -> impl Strategy<Value = (f64, f64)> {
    (0.2f64..0.7, -3.1f64..3.1).prop_map(|(r, t)| (r * t.cos(), r * t.sin()))
}

fn rel(a: &QComplex, b: &QComplex) -> f64 {
    let d = (a - b).abs_f64();
    if d == 0.0 {
        return 0.0;
    }
    d / a.abs_f64().max(b.abs_f64())
}

fn float_tol() -> f64 {
    10f64.powi(-(DIGITS as i32 - 5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn shift_law_exact(q in base(), a in rational(), k in -4i64..=4, l in -4i64..=4) {
        let ctx = EvalContext::exact(q.0, q.1).unwrap();
        let a = ctx.ratio(a.0, a.1);
        let lhs = qpoch(&a, k + l, &ctx);
        let r1 = qpoch(&a, k, &ctx);
        let r2 = qpoch(&(&a * &ctx.q_pow(k)), l, &ctx);
        prop_assume!(lhs.is_ok() && r1.is_ok() && r2.is_ok());
        prop_assert_eq!(lhs.unwrap(), r1.unwrap() * r2.unwrap());
    }

    #[test]
    fn shift_law_float(q in float_base(), a in complex(), k in -4i64..=4, l in -4i64..=4) {
        let ctx = EvalContext::float(q.0, q.1, DIGITS).unwrap();
        let a = ctx.complex_f64(a.0, a.1).unwrap();
        let lhs = qpoch(&a, k + l, &ctx);
        let r1 = qpoch(&a, k, &ctx);
        let r2 = qpoch(&(&a * &ctx.q_pow(k)), l, &ctx);
        prop_assume!(lhs.is_ok() && r1.is_ok() && r2.is_ok());
        prop_assert!(rel(&lhs.unwrap(), &(r1.unwrap() * r2.unwrap())) <= float_tol());
    }

    #[test]
    fn inversion_law(q in base(), a in rational(), k in 0i64..=6) {
        let ctx = EvalContext::exact(q.0, q.1).unwrap();
        let a = ctx.ratio(a.0, a.1);
        let neg = qpoch(&a, -k, &ctx);
        prop_assume!(neg.is_ok());
        let pos = qpoch(&(&a * &ctx.q_pow(-k)), k, &ctx).unwrap();
        prop_assert!((neg.unwrap() * pos).is_one());
    }

    #[test]
    fn reversal_ratio(q in base(), a in rational(), b in rational(), n in 0i64..=6) {
        let ctx = EvalContext::exact(q.0, q.1).unwrap();
        let (a, b) = (ctx.ratio(a.0, a.1), ctx.ratio(b.0, b.1));
        let den = qpoch(&b, n, &ctx).unwrap();
        let rev_den = qpoch(&(ctx.q_pow(1 - n) / &b), n, &ctx).unwrap();
        prop_assume!(!den.is_zero() && !rev_den.is_zero());
        let lhs = qpoch(&a, n, &ctx).unwrap() / den;
        let rhs = (&a / &b).powi(n) * qpoch(&(ctx.q_pow(1 - n) / &a), n, &ctx).unwrap() / rev_den;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reversal_ratio_float(q in float_base(), a in complex(), b in complex(), n in 0i64..=6) {
        let ctx = EvalContext::float(q.0, q.1, DIGITS).unwrap();
        let a = ctx.complex_f64(a.0, a.1).unwrap();
        let b = ctx.complex_f64(b.0, b.1).unwrap();
        let lhs = qpoch(&a, n, &ctx).unwrap() / qpoch(&b, n, &ctx).unwrap();
        let rhs = (&a / &b).powi(n) * qpoch(&(ctx.q_pow(1 - n) / &a), n, &ctx).unwrap()
            / qpoch(&(ctx.q_pow(1 - n) / &b), n, &ctx).unwrap();
        prop_assert!(rel(&lhs, &rhs) <= float_tol());
    }

    #[test]
    fn q_over_reversed_q(q in base(), n in 0i64..=8) {
        let ctx = EvalContext::exact(q.0, q.1).unwrap();
        let lhs = qpoch(ctx.q(), n, &ctx).unwrap() / qpoch(&ctx.q_pow(-n), n, &ctx).unwrap();
        let sign = if n % 2 == 0 { ctx.one() } else { -ctx.one() };
        prop_assert_eq!(lhs, sign * ctx.q_pow(n * (n + 1) / 2));
    }

    #[test]
    fn last_coordinate_scaling(
        q in base(),
        z in prop::collection::vec(rational(), 1..=3),
        lambda in rational(),
    ) {
        let ctx = EvalContext::exact(q.0, q.1).unwrap();
        let z: Vec<QComplex> = z.iter().map(|&(n, d)| ctx.ratio(n, d)).collect();
        let lambda = ctx.ratio(lambda.0, lambda.1);
        let w = weyl_c(&z, &ctx);
        prop_assume!(!w.is_zero());
        let mut scaled = z.clone();
        *scaled.last_mut().unwrap() *= &lambda;
        let expected = weyl_c_last_scaling(&z, &lambda, &ctx).unwrap();
        prop_assert_eq!(weyl_c(&scaled, &ctx) / w, expected);
    }

    #[test]
    fn ratios_are_permutation_invariant(
        q in base(),
        zy in prop::collection::vec((rational(), -3i64..=3), 2..=3),
        swap in 0usize..3,
    ) {
        let ctx = EvalContext::exact(q.0, q.1).unwrap();
        let z: Vec<QComplex> = zy.iter().map(|&((n, d), _)| ctx.ratio(n, d)).collect();
        let y: Vec<i64> = zy.iter().map(|&(_, y)| y).collect();
        let (i, j) = (swap % z.len(), (swap + 1) % z.len());
        let (mut zs, mut ys) = (z.clone(), y.clone());
        zs.swap(i, j);
        ys.swap(i, j);
        let w = weyl_c_ratio(&z, &y, &ctx);
        prop_assume!(w.is_ok());
        prop_assert_eq!(w.unwrap(), weyl_c_ratio(&zs, &ys, &ctx).unwrap());
        prop_assert_eq!(delta_a_ratio(&z, &y, &ctx).unwrap(), delta_a_ratio(&zs, &ys, &ctx).unwrap());
    }

    #[test]
    fn cocycle_law(
        q in base(),
        pts in prop::collection::vec((rational(), -3i64..=3, -3i64..=3), 1..=3),
    ) {
        let ctx = EvalContext::exact(q.0, q.1).unwrap();
        let z: Vec<QComplex> = pts.iter().map(|&((n, d), _, _)| ctx.ratio(n, d)).collect();
        let y: Vec<i64> = pts.iter().map(|p| p.1).collect();
        let y2: Vec<i64> = pts.iter().map(|p| p.2).collect();
        let sum: Vec<i64> = y.iter().zip(&y2).map(|(a, b)| a + b).collect();
        let zy = shift(&z, &y, &ctx);
        let (w, w1, w2) = (weyl_c_ratio(&z, &sum, &ctx), weyl_c_ratio(&z, &y, &ctx), weyl_c_ratio(&zy, &y2, &ctx));
        prop_assume!(w.is_ok() && w1.is_ok() && w2.is_ok());
        prop_assert_eq!(w.unwrap(), w1.unwrap() * w2.unwrap());
        let (d, d1, d2) = (delta_a_ratio(&z, &sum, &ctx), delta_a_ratio(&z, &y, &ctx), delta_a_ratio(&zy, &y2, &ctx));
        prop_assume!(d.is_ok() && d1.is_ok() && d2.is_ok());
        prop_assert_eq!(d.unwrap(), d1.unwrap() * d2.unwrap());
    }

    #[test]
    fn weyl_ratio_matches_quotient_float(
        q in float_base(),
        zy in prop::collection::vec((complex(), -2i64..=2), 1..=3),
    ) {
        let ctx = EvalContext::float(q.0, q.1, DIGITS).unwrap();
        let z: Vec<QComplex> = zy.iter().map(|&((re, im), _)| ctx.complex_f64(re, im).unwrap()).collect();
        let y: Vec<i64> = zy.iter().map(|&(_, y)| y).collect();
        let direct = weyl_c_ratio(&z, &y, &ctx).unwrap();
        let quotient = weyl_c(&shift(&z, &y, &ctx), &ctx) / weyl_c(&z, &ctx);
        prop_assert!(rel(&direct, &quotient) <= float_tol());
    }

    #[test]
    fn shells_partition_the_cube(n in 1usize..=3, r in 0u32..=4) {
        let mut seen = std::collections::HashSet::new();
        for radius in 0..=r {
            for_each_shell_point(n, radius, false, |y| -> Result<(), ()> {
                assert!(seen.insert(y.to_vec()), "visited twice");
                Ok(())
            }).unwrap();
        }
        prop_assert_eq!(seen.len() as u64, (2 * r as u64 + 1).pow(n as u32));
    }

    #[test]
    fn summation_is_reproducible(q in float_base(), t in complex()) {
        let ctx = EvalContext::float(q.0, q.1, 30).unwrap();
        let t = ctx.complex_f64(t.0 * 0.4, t.1 * 0.4).unwrap();
        let f = FnTerm::new(2, |y: &[i64]| Ok(t.powi(y[0].abs() + 2 * y[1].abs())));
        let a = sum_to_radius(&f, 6, false, &ctx).unwrap();
        let b = sum_to_radius(&f, 6, false, &ctx).unwrap();
        prop_assert_eq!(a.value, b.value);
    }
}
