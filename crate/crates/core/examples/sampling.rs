//! Seeded generic parameter files, in both arithmetic modes.

use qroot::harness::{sample_params, QSpec, SampleBounds};
use qroot::identities::{verify, Num};
use qroot::{EvalContext, IdentityId, Mode};

fn main() -> qroot::Result<()> {
    let exact_bounds = SampleBounds { p: [1, 2], q: QSpec::Fixed(Num::real("1/3")), ..SampleBounds::default() };
    let file = sample_params(IdentityId::AkFinite, &exact_bounds, Mode::Exact, 3)?;
    println!("{}", serde_json::to_string(&file.to_json()).expect("json"));
    let r = verify(file.id, &file.params, &EvalContext::exact(1, 3)?);
    println!("exact discrepancy {}", r.abs_discrepancy.as_deref().unwrap_or("-"));

    let again = sample_params(IdentityId::AkFinite, &exact_bounds, Mode::Exact, 3)?;
    println!("same seed, same file: {}", again == file);

    let bounds = SampleBounds { n: [1, 1], modulus_max: 0.6, ..SampleBounds::default() };
    let file = sample_params(IdentityId::KmsSummation, &bounds, Mode::Float, 7)?;
    println!("{}", serde_json::to_string(&file.to_json()).expect("json"));
    Ok(())
}
