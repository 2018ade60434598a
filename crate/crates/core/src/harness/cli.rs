//! The `qroot` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::identities::{
    cross_check_fl, eval_side_detailed, list_identities, verify, IdentityId, Num, ParamFile, ParamSet, Side, Target,
};
use crate::qarith::{EvalContext, Mode, DEFAULT_MAX_SHELL};

use super::sample::{sample_params, QSpec, SampleBounds};
use super::suite::{run_suite, write_reports, SuiteConfig};

#[derive(Debug, Parser)]
#[command(name = "qroot", version, about = "Evaluate and verify basic hypergeometric series on C_n and A_n")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the identity registry.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Evaluate one side of an identity.
    Eval {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_side)]
        side: Side,
        #[command(flatten)]
        eval: EvalFlags,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate both sides and compare them.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        eval: EvalFlags,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a batch described by a JSON config.
    Suite {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Replace the seed of every entry.
        #[arg(long)]
        seed: Option<u64>,
        /// Record wall time per case.
        #[arg(long)]
        timing: bool,
    },
    /// Emit a generic parameter file.
    Sample {
        #[arg(long, value_parser = parse_id)]
        id: IdentityId,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "float", value_parser = parse_mode)]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 2)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        p_min: usize,
        #[arg(long, default_value_t = 2)]
        p_max: usize,
        #[arg(long, default_value_t = 2)]
        m_max: u32,
        #[arg(long, default_value_t = 2)]
        l_max: u32,
        /// Fixed base, as `re`, `re,im` or `p/q`.
        #[arg(long, value_parser = parse_num)]
        q: Option<Num>,
        #[arg(long, default_value_t = 0.2)]
        q_min: f64,
        #[arg(long, default_value_t = 0.5)]
        q_max: f64,
        #[arg(long, default_value_t = 0.9)]
        modulus_max: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Identity id, or `cross_check_fl`; may come from the parameter file.
    #[arg(long, value_parser = parse_target)]
    id: Option<Target>,
    /// JSON parameter file.
    #[arg(long, conflicts_with = "inline")]
    params: Option<PathBuf>,
    /// Parameters as an inline JSON object.
    #[arg(long)]
    inline: Option<String>,
}

#[derive(Debug, Args)]
struct EvalFlags {
    #[arg(long, default_value_t = 30)]
    digits: u32,
    #[arg(long, default_value = "float", value_parser = parse_mode)]
    mode: Mode,
    #[arg(long, default_value_t = DEFAULT_MAX_SHELL)]
    max_shell: u32,
    /// Truncation tolerance for infinite products and bilateral sums.
    #[arg(long)]
    tol: Option<f64>,
    /// Base `q`; overrides the parameter file.
    #[arg(long, value_parser = parse_num)]
    q: Option<Num>,
}

fn parse_mode(s: &str) -> std::result::Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_side(s: &str) -> std::result::Result<Side, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_id(s: &str) -> std::result::Result<IdentityId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_target(s: &str) -> std::result::Result<Target, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_num(s: &str) -> std::result::Result<Num, String> {
    match s.split_once(',') {
        Some((re, im)) => Ok(Num::complex(re.trim(), im.trim())),
        None => Ok(Num::real(s.trim())),
    }
}

fn default_schema(t: Target) -> IdentityId {
    match t {
        Target::Identity(id) => id,
        Target::CrossCheckFl => IdentityId::FlOnevar,
    }
}

fn load_input(input: &Input) -> Result<(Target, ParamFile)> {
    let mut v: Value = match (&input.params, &input.inline) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)?;
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
        }
        (None, Some(text)) => serde_json::from_str(text).map_err(|e| Error::Parse(format!("--inline: {e}")))?,
        (None, None) => return Err(Error::Config("one of --params or --inline is required".into())),
    };
    let obj = v
        .as_object_mut()
        .ok_or_else(|| Error::Parse("parameters must be a JSON object".into()))?;
    let target = match (input.id, obj.get("id").and_then(Value::as_str)) {
        (Some(t), _) => t,
        (None, Some(s)) => s.parse()?,
        (None, None) => return Err(Error::Config("no identity id given (use --id)".into())),
    };
    obj.insert("id".into(), Value::from(default_schema(target).as_str()));
    Ok((target, ParamFile::from_json(&v)?))
}

fn context(flags: &EvalFlags, file: &ParamFile) -> Result<EvalContext> {
    let q = flags
        .q
        .as_ref()
        .or(file.q.as_ref())
        .ok_or_else(|| Error::Config("no base q given (use --q or a \"q\" field)".into()))?;
    let mut b = EvalContext::builder(flags.mode, [q.0.as_str(), q.1.as_str()])
        .digits(flags.digits)
        .max_shell(flags.max_shell);
    if let Some(t) = flags.tol {
        b = b.inf_tail_tol(t);
    }
    b.build()
}

fn emit(out: &Option<PathBuf>, v: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(v).expect("json") + "\n";
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn execute(cmd: Command) -> Result<bool> {
    match cmd {
        Command::List { json } => {
            let all = list_identities();
            if json {
                emit(&None, &serde_json::to_value(&all).expect("registry serializes"))?;
            } else {
                for d in &all {
                    println!("{:<16} {}", d.id.as_str(), d.anchor);
                }
            }
            Ok(true)
        }
        Command::Eval { input, side, eval, out } => {
            let (target, file) = load_input(&input)?;
            let Target::Identity(id) = target else {
                return Err(Error::Config("eval needs an identity id".into()));
            };
            let ctx = context(&eval, &file)?;
            let e = eval_side_detailed(id, side, &file.params, &ctx)?;
            let r = &e.result;
            emit(
                &out,
                &json!({
                    "id": id,
                    "side": side,
                    "value": r.value.to_strings(ctx.digits() as usize),
                    "radius_used": r.radius_used,
                    "tail_estimate": r.tail_estimate,
                    "terms_evaluated": r.terms_evaluated,
                    "stability": e.stability,
                }),
            )?;
            Ok(true)
        }
        Command::Verify { input, eval, out } => {
            let (target, file) = load_input(&input)?;
            let ctx = context(&eval, &file)?;
            let report = match (target, &file.params) {
                (Target::Identity(id), params) => verify(id, params, &ctx),
                (Target::CrossCheckFl, ParamSet::OneVar(p)) => cross_check_fl(p, &ctx),
                (Target::CrossCheckFl, _) => unreachable!("parsed with the one-variable schema"),
            };
            emit(&out, &serde_json::to_value(&report).expect("report serializes"))?;
            Ok(report.pass)
        }
        Command::Suite { config, out, seed, timing } => {
            let mut cfg = SuiteConfig::load(&config)?;
            if let Some(s) = seed {
                cfg.cases.iter_mut().for_each(|c| c.seed = s);
            }
            cfg.timing |= timing;
            let reports = run_suite(&cfg)?;
            let passed = reports.iter().filter(|r| r.pass).count();
            match out.or(cfg.output.clone()) {
                Some(path) => write_reports(&path, &reports)?,
                None => emit(&None, &serde_json::to_value(&reports).expect("reports serialize"))?,
            }
            eprintln!("{passed}/{} cases passed", reports.len());
            Ok(passed == reports.len())
        }
        Command::Sample {
            id,
            seed,
            mode,
            n_min,
            n_max,
            p_min,
            p_max,
            m_max,
            l_max,
            q,
            q_min,
            q_max,
            modulus_max,
            out,
        } => {
            let bounds = SampleBounds {
                n: [n_min, n_max],
                p: [p_min, p_max],
                m_max,
                l_max,
                q: match q {
                    Some(q) => QSpec::Fixed(q),
                    None => QSpec::Range {
                        min_abs: q_min,
                        max_abs: q_max,
                        real: false,
                    },
                },
                modulus_max,
            };
            let file = sample_params(id, &bounds, mode, seed)?;
            emit(&out, &file.to_json())?;
            Ok(true)
        }
    }
}

/// Runs the CLI on `args` (including the program name). Returns 0 on
/// success, 1 when a verification fails or evaluation errors, and 2 on
/// usage errors.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.cmd) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e @ Error::Config(_)) => {
            eprintln!("error: {e}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_succeeds() {
        assert_eq!(run(["qroot", "list"]), 0);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(["qroot", "frobnicate"]), 2);
        assert_eq!(run(["qroot", "verify", "--mode", "exact"]), 2);
        assert_eq!(run(["qroot", "verify", "--id", "nope", "--inline", "{}"]), 2);
    }

    #[test]
    fn q_forms() {
        assert_eq!(parse_num("1/3").unwrap(), Num::real("1/3"));
        assert_eq!(parse_num("0.3, -0.1").unwrap(), Num::complex("0.3", "-0.1"));
    }
}
