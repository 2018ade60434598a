//! Weyl denominator of C_n, the A_n Vandermonde product and their lattice ratios.

use qroot::qarith::EvalContext;
use qroot::rootsys::{delta, delta_a_ratio, shift, weyl_c, weyl_c_ratio};

fn main() -> qroot::Result<()> {
    let ctx = EvalContext::exact(1, 3)?;
    let z = vec![ctx.int(2), ctx.int(3)];
    println!("W(2, 3)     = {}", weyl_c(&z, &ctx).to_strings(0)[0]);
    println!("Delta(2, 3) = {}", delta(&z, &ctx).to_strings(0)[0]);

    let y = [1, -2];
    let direct = weyl_c_ratio(&z, &y, &ctx)?;
    let quotient = weyl_c(&shift(&z, &y, &ctx), &ctx) / weyl_c(&z, &ctx);
    println!("W(zq^y)/W(z)         = {}", direct.to_strings(0)[0]);
    println!("agrees with quotient = {}", direct == quotient);
    println!("Delta(zq^y)/Delta(z) = {}", delta_a_ratio(&z, &y, &ctx)?.to_strings(0)[0]);
    Ok(())
}
