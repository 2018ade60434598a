//! Finite, negative-order and infinite q-shifted factorials.

use qroot::qarith::{qpoch, qpoch_inf, EvalContext};

fn main() -> qroot::Result<()> {
    let exact = EvalContext::exact(1, 3)?;
    let a = exact.ratio(1, 2);
    for k in [-2, -1, 0, 1, 2, 3] {
        println!("(1/2; 1/3)_{k:<2} = {}", qpoch(&a, k, &exact)?.to_strings(0)[0]);
    }

    let float = EvalContext::builder(qroot::Mode::Float, ["0.3", "0.4"]).digits(40).build()?;
    let b = float.number("0.7", "-0.2")?;
    let [re, im] = qpoch_inf(&b, &float)?.to_strings(40);
    println!("(0.7-0.2i; 0.3+0.4i)_inf = {re} + {im}i");

    match qpoch(&exact.q_pow(-2), 3, &exact) {
        Ok(v) => println!("(q^-2; q)_3 = {}", v.to_strings(0)[0]),
        Err(e) => println!("(q^-2; q)_3: {e}"),
    }
    Ok(())
}
