//! Command-line front end.
//!
//! Exit codes: 0 success, 1 the two methods disagree, 2 usage or validation
//! error, 3 a size limit was hit.

use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::{CodeSpec, EvalKind, DEFAULT_CODEWORD_BUDGET};
use crate::cwe::{closed_form_for, cwe_bruteforce, cwe_equal, cwe_rs2, weight_distribution, CweComparison, CwePolynomial};
use crate::errata::ERRATA;
use crate::error::Error;
use crate::gf::FieldContext;
use crate::json::CweRecord;

/// Environment variable that overrides the default codeword budget.
pub const BUDGET_ENV: &str = "RS_CWE_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SIZE_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "rs-cwe", version, about = "Complete weight enumerators of Reed-Solomon codes over GF(p^m)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the complete weight enumerator.
    Compute {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Compare exhaustive enumeration with the closed form.
    Compare {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Print the Hamming weight distribution.
    Weights {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// List where the implemented closed forms differ from the published ones.
    Explain,
    /// Compare dimension-2 closed forms on random evaluation sets.
    Sweep {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 30)]
        sets: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args, Debug, Clone)]
struct CodeArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    k: usize,
    /// full | primitive | standard | punctured:<code> | custom:<code>,<code>,...
    #[arg(long, default_value = "full")]
    eval: String,
    #[arg(long)]
    extended: bool,
    /// Maximum number of codewords to enumerate.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Brute,
    Formula,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Json,
    Text,
}

/// Fully resolved parameters of one run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub p: u64,
    pub m: u32,
    pub k: usize,
    pub method: Method,
    pub eval_kind: EvalKind,
    pub extended: bool,
    pub output: Output,
    pub seed: u64,
    pub budget: u64,
}

enum Failure {
    Error(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn resolve_budget(flag: Option<u64>) -> Result<u64, Error> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::parse(BUDGET_ENV, format!("not an integer: {v:?}"))),
        Err(_) => Ok(DEFAULT_CODEWORD_BUDGET),
    }
}

impl RunConfig {
    fn from_code_args(code: &CodeArgs, method: Method, output: Output) -> Result<Self, Error> {
        Ok(RunConfig {
            p: code.p,
            m: code.m,
            k: code.k,
            method,
            eval_kind: EvalKind::parse(&code.eval)?,
            extended: code.extended,
            output,
            seed: 0,
            budget: resolve_budget(code.budget)?,
        })
    }

    pub fn code_spec(&self) -> Result<CodeSpec, Error> {
        let ctx = Arc::new(FieldContext::new(self.p, self.m)?);
        CodeSpec::from_kind(ctx, self.k, &self.eval_kind, self.extended)
    }
}

fn describe_difference(cmp: &CweComparison) -> String {
    match cmp {
        CweComparison::Equal => "equal".into(),
        CweComparison::Differ { exps, left, right } => {
            let e: Vec<String> = exps.exps().iter().map(u32::to_string).collect();
            format!("first differing term e = [{}]: brute force {left}, closed form {right}", e.join(","))
        }
    }
}

fn enumerator(spec: &CodeSpec, cfg: &RunConfig) -> Result<CwePolynomial, Failure> {
    match cfg.method {
        Method::Brute => Ok(cwe_bruteforce(spec, cfg.budget)?),
        Method::Formula => Ok(closed_form_for(spec)?),
        Method::Both => {
            let brute = cwe_bruteforce(spec, cfg.budget)?;
            let formula = closed_form_for(spec)?;
            let cmp = cwe_equal(&brute, &formula)?;
            if cmp.is_equal() {
                Ok(brute)
            } else {
                Err(Failure::Mismatch(describe_difference(&cmp)))
            }
        }
    }
}

fn run_compute(cfg: &RunConfig, out: &mut dyn Write) -> Result<(), Failure> {
    let spec = cfg.code_spec()?;
    let cwe = enumerator(&spec, cfg)?;
    let record = CweRecord::new(&spec, cwe);
    match cfg.output {
        Output::Json => {
            let _ = writeln!(out, "{}", record.to_json());
        }
        Output::Text => {
            let _ = write!(out, "{}", record.to_text());
        }
    }
    Ok(())
}

fn run_compare(cfg: &RunConfig, out: &mut dyn Write) -> Result<(), Failure> {
    let spec = cfg.code_spec()?;
    let brute = cwe_bruteforce(&spec, cfg.budget)?;
    let formula = closed_form_for(&spec)?;
    let cmp = cwe_equal(&brute, &formula)?;
    let equal = cmp.is_equal();
    match cfg.output {
        Output::Json => {
            let doc = serde_json::json!({
                "p": cfg.p,
                "m": cfg.m,
                "k": cfg.k,
                "n": spec.length(),
                "extended": cfg.extended,
                "equal": equal,
                "terms": brute.num_terms(),
                "detail": describe_difference(&cmp),
            });
            let _ = writeln!(out, "{doc}");
        }
        Output::Text => {
            let _ = writeln!(
                out,
                "GF({}^{}) k={} length={} extended={}: {} ({} terms, {} codewords)",
                cfg.p,
                cfg.m,
                cfg.k,
                spec.length(),
                cfg.extended,
                describe_difference(&cmp),
                brute.num_terms(),
                brute.mass()
            );
        }
    }
    if equal {
        Ok(())
    } else {
        Err(Failure::Mismatch(describe_difference(&cmp)))
    }
}

fn run_weights(cfg: &RunConfig, out: &mut dyn Write) -> Result<(), Failure> {
    let spec = cfg.code_spec()?;
    let cwe = enumerator(&spec, cfg)?;
    let wd = weight_distribution(&cwe);
    match cfg.output {
        Output::Json => {
            let doc = serde_json::json!({
                "p": cfg.p,
                "m": cfg.m,
                "k": cfg.k,
                "n": spec.length(),
                "extended": cfg.extended,
                "weights": wd.0,
            });
            let _ = writeln!(out, "{doc}");
        }
        Output::Text => {
            for (i, a) in wd.0.iter().enumerate() {
                let _ = writeln!(out, "A[{i}] = {a}");
            }
        }
    }
    Ok(())
}

fn run_explain(out: &mut dyn Write) -> Result<(), Failure> {
    let _ = writeln!(out, "Corrections applied to the published closed forms ({}):", ERRATA.len());
    for (i, e) in ERRATA.iter().enumerate() {
        let (p, m, k, eval, extended) = e.probe;
        let cfg = RunConfig {
            p,
            m,
            k,
            method: Method::Both,
            eval_kind: EvalKind::parse(eval)?,
            extended,
            output: Output::Text,
            seed: 0,
            budget: DEFAULT_CODEWORD_BUDGET,
        };
        let spec = cfg.code_spec()?;
        let cmp = cwe_equal(&cwe_bruteforce(&spec, cfg.budget)?, &closed_form_for(&spec)?)?;
        let _ = writeln!(out);
        let _ = writeln!(out, "[{}] {}", i + 1, e.family);
        let _ = writeln!(out, "    printed:     {}", e.printed);
        let _ = writeln!(out, "    implemented: {}", e.implemented);
        let _ = writeln!(out, "    why:         {}", e.reason);
        let _ = writeln!(
            out,
            "    check:       GF({p}^{m}) k={k} eval={eval} extended={extended}: closed form vs enumeration {}",
            if cmp.is_equal() { "equal" } else { "DIFFER" }
        );
        if !cmp.is_equal() {
            return Err(Failure::Mismatch(describe_difference(&cmp)));
        }
    }
    Ok(())
}

fn run_sweep(p: u64, m: u32, sets: usize, cfg: &RunConfig, out: &mut dyn Write) -> Result<(), Failure> {
    let ctx = Arc::new(FieldContext::new(p, m)?);
    let q = ctx.q() as usize;
    if q < 2 {
        return Err(Error::ParameterOutOfRange("sweep needs q >= 2".into()).into());
    }
    let _ = writeln!(out, "sweep GF({p}^{m}) seed={} sets={sets}", cfg.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut elements: Vec<_> = ctx.elements().collect();
    for i in 0..sets {
        let n = rng.random_range(2..=q);
        elements.shuffle(&mut rng);
        let alpha = elements[..n].to_vec();
        for extended in [false, true] {
            let spec = CodeSpec::new(ctx.clone(), 2, alpha.clone(), extended)?;
            let brute = cwe_bruteforce(&spec, cfg.budget)?;
            let formula = cwe_rs2(&ctx, &alpha, extended)?;
            let cmp = cwe_equal(&brute, &formula)?;
            let codes: Vec<String> = alpha.iter().map(|a| a.code().to_string()).collect();
            let _ = writeln!(
                out,
                "set {i} extended={extended} alpha=[{}]: {}",
                codes.join(","),
                describe_difference(&cmp)
            );
            if !cmp.is_equal() {
                return Err(Failure::Mismatch(describe_difference(&cmp)));
            }
        }
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command. Output
/// goes to `out`, diagnostics to `err`; the return value is the exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };

    let result = match &cli.command {
        Command::Compute { code, method, output } => {
            RunConfig::from_code_args(code, *method, *output)
                .map_err(Failure::from)
                .and_then(|cfg| run_compute(&cfg, out))
        }
        Command::Compare { code, output } => RunConfig::from_code_args(code, Method::Both, *output)
            .map_err(Failure::from)
            .and_then(|cfg| run_compare(&cfg, out)),
        Command::Weights { code, method, output } => RunConfig::from_code_args(code, *method, *output)
            .map_err(Failure::from)
            .and_then(|cfg| run_weights(&cfg, out)),
        Command::Explain => run_explain(out),
        Command::Sweep { p, m, sets, seed, budget } => resolve_budget(*budget)
            .map_err(Failure::from)
            .and_then(|budget| {
                let cfg = RunConfig {
                    p: *p,
                    m: *m,
                    k: 2,
                    method: Method::Both,
                    eval_kind: EvalKind::Full,
                    extended: false,
                    output: Output::Text,
                    seed: *seed,
                    budget,
                };
                run_sweep(*p, *m, *sets, &cfg, out)
            }),
    };

    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Mismatch(detail)) => {
            let _ = writeln!(err, "mismatch: {detail}");
            EXIT_MISMATCH
        }
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::SizeLimit { .. } => EXIT_SIZE_LIMIT,
                _ => EXIT_USAGE,
            }
        }
    }
}
