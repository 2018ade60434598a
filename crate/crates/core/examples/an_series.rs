//! A_n series: the hyperplane reduction and the A_p finite form of the
//! one-variable bilateral series, checked against its C_p form.

use qroot::harness::{sample_params, SampleBounds};
use qroot::identities::{cross_check_fl, verify, ParamFile, ParamSet};
use qroot::{EvalContext, IdentityId, Mode};

fn context(file: &ParamFile, mode: Mode) -> qroot::Result<EvalContext> {
    let q = file.q.clone().expect("sampled files carry q");
    EvalContext::builder(mode, [q.0.as_str(), q.1.as_str()]).digits(40).max_shell(300).build()
}

fn main() -> qroot::Result<()> {
    let bounds = SampleBounds { n: [2, 2], p: [1, 1], m_max: 2, modulus_max: 0.6, ..SampleBounds::default() };
    let rg = sample_params(IdentityId::RgAnReduction, &bounds, Mode::Float, 21)?;
    let r = verify(IdentityId::RgAnReduction, &rg.params, &context(&rg, Mode::Float)?);
    let lhs = r.lhs.as_ref().expect("left side");
    println!("{:<16} radius {:>3}, rel {:.2e}, pass = {}", "rg_an_reduction", lhs.radius_used, r.rel_discrepancy.unwrap_or(f64::NAN), r.pass);

    let bounds = SampleBounds { n: [1, 1], p: [2, 2], modulus_max: 0.6, ..SampleBounds::default() };
    let fl = sample_params(IdentityId::FlAnForm, &bounds, Mode::Float, 22)?;
    let ctx = context(&fl, Mode::Float)?;
    for id in [IdentityId::FlOnevar, IdentityId::FlAnForm] {
        let r = verify(id, &fl.params, &ctx);
        println!("{:<16} rel {:.2e}, pass = {}", id.as_str(), r.rel_discrepancy.unwrap_or(f64::NAN), r.pass);
    }

    let exact = sample_params(IdentityId::FlAnForm, &SampleBounds { n: [1, 1], p: [2, 2], ..SampleBounds::default() }, Mode::Exact, 23)?;
    let exact_ctx = EvalContext::exact(1, 3)?;
    let ParamSet::OneVar(v) = &exact.params else { unreachable!() };
    let r = cross_check_fl(v, &exact_ctx);
    println!("C_p vs A_p finite forms, exact: discrepancy {}", r.abs_discrepancy.as_deref().unwrap_or("-"));
    Ok(())
}
