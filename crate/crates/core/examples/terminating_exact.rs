//! Terminating identities in exact rational arithmetic: the discrepancy is
//! exactly zero.

use qroot::identities::{verify, ParamFile};
use qroot::EvalContext;

const FILES: [&str; 3] = [
    r#"{"id": "n0_terminating", "n": 2, "z": ["2", "-3/2"], "m": [1, 2], "a": ["1/5"], "b": "7/4"}"#,
    r#"{"id": "ak_finite", "n": 1, "p": 2, "z": ["7/10"], "c": ["-3/5", "5/11"], "m": [1, 1], "l": [2], "b": "-8/7", "d": "2/9"}"#,
    r#"{"id": "cml_watson", "n": 2, "z": ["2", "-3/2"], "c": ["7/4"], "m": [1, 1], "b": "1/5", "d": "1/7", "e": "1/11"}"#,
];

fn main() -> qroot::Result<()> {
    let ctx = EvalContext::exact(1, 3)?;
    for text in FILES {
        let file = ParamFile::parse_str(text)?;
        let r = verify(file.id, &file.params, &ctx);
        match (&r.lhs, &r.failure) {
            (Some(lhs), None) => println!(
                "{:<16} lhs = {:<28} discrepancy {}",
                file.id.as_str(),
                lhs.value[0],
                r.abs_discrepancy.as_deref().unwrap_or("-")
            ),
            (_, f) => println!("{:<16} failed: {f:?}", file.id.as_str()),
        }
    }
    Ok(())
}
