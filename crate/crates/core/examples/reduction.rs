//! A multilateral Karlsson-Minton type C_n series reduces to a finite C_p
//! sum; the number of positive integer shifts controls the finite side.

use qroot::harness::{sample_params, SampleBounds};
use qroot::identities::{eval_side, verify};
use qroot::{EvalContext, IdentityId, Mode, Side};

fn main() -> qroot::Result<()> {
    for (seed, p) in [(11, 0), (12, 1), (13, 2)] {
        let bounds = SampleBounds { n: [2, 2], p: [p, p], m_max: 2, modulus_max: 0.6, ..SampleBounds::default() };
        let file = sample_params(IdentityId::TeReduction, &bounds, Mode::Float, seed)?;
        let q = file.q.clone().expect("sampled files carry q");
        let ctx = EvalContext::builder(Mode::Float, [q.0.as_str(), q.1.as_str()])
            .digits(40)
            .max_shell(300)
            .build()?;
        let right = eval_side(IdentityId::TeReduction, Side::Right, &file.params, &ctx)?;
        let r = verify(IdentityId::TeReduction, &file.params, &ctx);
        let lhs = r.lhs.as_ref().expect("left side");
        println!(
            "p = {p}: series radius {:>3}, finite side {:>3} terms, rel {:.2e}, pass = {}",
            lhs.radius_used,
            right.terms_evaluated,
            r.rel_discrepancy.unwrap_or(f64::NAN),
            r.pass
        );
    }
    Ok(())
}
