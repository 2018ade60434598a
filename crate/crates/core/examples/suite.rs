//! A seeded batch run from a JSON config; reports come back in config order.

use qroot::harness::{run_suite, SuiteConfig};

const CONFIG: &str = r#"{
    "cases": [
        {"id": "n0_terminating", "mode": "exact", "seed": 1, "count": 3,
         "bounds": {"q": {"fixed": ["1/3", "0"]}}},
        {"id": "gi_cn_6psi6", "digits": 30, "seed": 2, "count": 2, "max_shell": 300,
         "bounds": {"n": [2, 2], "p": [0, 0], "modulus_max": 0.6}},
        {"id": "c2_gasper", "digits": 30, "seed": 3, "count": 2, "max_shell": 300,
         "bounds": {"n": [2, 2], "modulus_max": 0.6}},
        {"id": "cross_check_fl", "mode": "exact", "seed": 4, "count": 2,
         "bounds": {"q": {"fixed": ["1/3", "0"]}}}
    ]
}"#;

fn main() -> qroot::Result<()> {
    let cfg = SuiteConfig::parse_str(CONFIG)?;
    let reports = run_suite(&cfg)?;
    for r in &reports {
        let disc = match (&r.abs_discrepancy, r.rel_discrepancy) {
            (Some(a), _) if r.mode == qroot::Mode::Exact => a.clone(),
            (_, Some(rel)) => format!("{rel:.2e}"),
            _ => "-".into(),
        };
        println!("{:<16} {:<5} {:>10}  {}", r.id.to_string(), r.mode, disc, if r.pass { "ok" } else { "FAIL" });
    }
    println!("{}/{} passed", reports.iter().filter(|r| r.pass).count(), reports.len());
    Ok(())
}
