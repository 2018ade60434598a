//! Both sides of the C_n very-well-poised 6psi6 summation at 50 digits.

use qroot::identities::{eval_side_detailed, verify, ParamFile};
use qroot::{EvalContext, IdentityId, Mode, Side};

const PARAMS: &str = r#"{
    "id": "gi_cn_6psi6", "n": 2, "q": ["0.3", "0.2"],
    "z": [["0.25", "0.1"], ["-0.2", "0.15"]],
    "a": [["1.4", "0.3"], ["-1.2", "0.5"], ["1.1", "-0.9"], ["0.9", "1.3"], ["-1.5", "-0.4"], ["1.25", "0.7"]]
}"#;

fn main() -> qroot::Result<()> {
    let file = ParamFile::parse_str(PARAMS)?;
    let q = file.q.clone().expect("q given");
    let ctx = EvalContext::builder(Mode::Float, [q.0.as_str(), q.1.as_str()])
        .digits(50)
        .max_shell(400)
        .build()?;

    let left = eval_side_detailed(IdentityId::GiCn6psi6, Side::Left, &file.params, &ctx)?;
    println!("series: radius {}, {} terms, tail {:.2e}", left.result.radius_used, left.result.terms_evaluated, left.result.tail_estimate);

    let report = verify(IdentityId::GiCn6psi6, &file.params, &ctx);
    let lhs = report.lhs.as_ref().expect("left side");
    let rhs = report.rhs.as_ref().expect("right side");
    println!("lhs = {} + {}i", lhs.value[0], lhs.value[1]);
    println!("rhs = {} + {}i", rhs.value[0], rhs.value[1]);
    println!("relative discrepancy {:.3e} (threshold {:.3e}), pass = {}", report.rel_discrepancy.unwrap_or(f64::NAN), report.threshold, report.pass);
    Ok(())
}
