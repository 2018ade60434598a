//! The Karlsson-Minton type C_n series is transformed between two base
//! points; the normalized finite side does not depend on the base point.

use qroot::harness::{sample_params, SampleBounds};
use qroot::identities::{kmt_consistency, te_x_sum, verify, ParamSet};
use qroot::{EvalContext, IdentityId, Mode};

fn main() -> qroot::Result<()> {
    let bounds = SampleBounds { n: [2, 2], p: [2, 2], m_max: 2, modulus_max: 0.6, ..SampleBounds::default() };
    let file = sample_params(IdentityId::KmtTransform, &bounds, Mode::Float, 5)?;
    let q = file.q.clone().expect("sampled files carry q");
    let ctx = EvalContext::builder(Mode::Float, [q.0.as_str(), q.1.as_str()])
        .digits(40)
        .max_shell(300)
        .build()?;

    let r = verify(IdentityId::KmtTransform, &file.params, &ctx);
    println!("series at z vs series at w: rel {:.2e}, pass = {}", r.rel_discrepancy.unwrap_or(f64::NAN), r.pass);

    let ParamSet::BilateralCn(p) = &file.params else { unreachable!() };
    let (at_z, at_w) = kmt_consistency(p, &ctx)?;
    let d = (&at_z - &at_w).abs_f64() / at_z.abs_f64();
    println!("normalized finite side at z = {}", at_z.to_strings(20)[0]);
    println!("normalized finite side at w = {}", at_w.to_strings(20)[0]);
    println!("bare finite sum             = {}", te_x_sum(p, &ctx)?.value.to_strings(20)[0]);
    println!("relative difference {d:.2e}");
    Ok(())
}
