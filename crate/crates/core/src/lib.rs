//! Basic hypergeometric series on the root systems `C_n` and `A_n`.
//!
//! The crate evaluates multilateral and terminating series whose summands
//! carry the Weyl denominator ratio `W(zq^y)/W(z)` or the Vandermonde ratio
//! `Delta(zq^y)/Delta(z)`, and checks a family of summation and transformation
//! formulas by evaluating both sides independently:
//!
//! * in exact rational arithmetic, where terminating identities must agree with
//!   zero discrepancy;
//! * in complex MPFR arithmetic, where bilateral sums are truncated on
//!   sup-norm shells with a recorded tail estimate.
//!
//! ```
//! use qroot::qarith::{qpoch, EvalContext};
//!
//! let ctx = EvalContext::exact(1, 3).unwrap();
//! let v = qpoch(&ctx.ratio(1, 2), 2, &ctx).unwrap();
//! assert_eq!(v, ctx.ratio(5, 12));
//! ```

pub mod error;
pub mod harness;
pub mod identities;
pub mod qarith;
pub mod rootsys;
pub mod summation;

pub use error::{Error, ErrorKind, Result};
pub use identities::{IdentityId, ParamSet, Side, VerificationReport};
pub use qarith::{EvalContext, Mode, QComplex};
