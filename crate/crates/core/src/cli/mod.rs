//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure (or an internal
//! consistency failure), 2 usage or input error.

mod output;
mod specfile;

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

pub use output::{beta_list, ratfunc_from_json, ratfunc_json, rationals_json, vector_json};
pub use specfile::{parse_spec, render_spec, SpecError, SpecFile};

use crate::error::Error;
use crate::exactalg::BigRational;
use crate::genfun::GeneratingFunctions;
use crate::kneading::{self, RecurrenceSpec};
use crate::oracle::{self, DEFAULT_TERMS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kneadgen",
    version,
    about = "Exact generating functions of periodic infinite-order vector recurrences"
)]
struct Args {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Recurrence file; read from stdin when omitted or `-`.
    #[arg(long, global = true, value_name = "PATH")]
    spec: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Kneading matrix K and every increment K(α,β) for β ≤ (s+1)p.
    Kneading,
    /// Kneading determinant Δ, or Δ_α(β) when both --alpha and --beta are given.
    Delta {
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long)]
        beta: Option<usize>,
    },
    /// Generating function G(e_β).
    Genfun {
        #[arg(long)]
        beta: usize,
    },
    /// G(e_1), …, G(e_{(s+1)p}).
    Spanning,
    /// Greedy basis of the generating-function space and its dimension.
    Basis,
    /// Dimension of the generating-function space.
    Dim,
    /// Check closed forms against direct iteration.
    Verify {
        #[arg(long, default_value_t = DEFAULT_TERMS)]
        terms: usize,
        #[arg(long)]
        beta: Option<usize>,
        /// Test hook: add 1 to entry (i,j) of A_k on the closed-form side only.
        #[arg(long, hide = true, value_name = "K:I:J", value_parser = parse_fault)]
        inject_fault: Option<(usize, usize, usize)>,
    },
    /// Power-series coefficients v_0..v_N of G(e_β).
    Taylor {
        #[arg(long)]
        beta: usize,
        #[arg(long)]
        terms: usize,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Runs one command line (`args[0]` is the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if let Err(msg) = check_flags(&args.command) {
        return Outcome::fail(EXIT_USAGE, msg);
    }
    let text = match read_input(args.spec.as_ref(), stdin) {
        Ok(t) => t,
        Err(msg) => return Outcome::fail(EXIT_USAGE, msg),
    };
    let spec = match parse_spec(&text) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    match execute(&args.command, &spec, args.json) {
        Ok(out) => out,
        Err(e) => {
            let code = match e {
                Error::NotDivisibleByZ { .. } => EXIT_VERIFY_FAILED,
                _ => EXIT_USAGE,
            };
            Outcome::fail(code, e)
        }
    }
}

fn parse_fault(text: &str) -> Result<(usize, usize, usize), String> {
    let parts: Vec<&str> = text.trim_start_matches("A_").split(':').collect();
    let [k, i, j] = parts.as_slice() else {
        return Err("expected K:I:J".into());
    };
    let num = |s: &str| s.parse::<usize>().map_err(|e| format!("{s}: {e}"));
    Ok((num(k)?, num(i)?, num(j)?))
}

fn check_flags(cmd: &Command) -> Result<(), String> {
    let beta_ok = |b: Option<usize>| match b {
        Some(0) => Err(Error::BetaOutOfRange.to_string()),
        _ => Ok(()),
    };
    match *cmd {
        Command::Delta { alpha, beta } => {
            if alpha.is_some() != beta.is_some() {
                return Err("--alpha and --beta must be given together".into());
            }
            beta_ok(beta)
        }
        Command::Genfun { beta } | Command::Taylor { beta, .. } => beta_ok(Some(beta)),
        Command::Verify { beta, .. } => beta_ok(beta),
        _ => Ok(()),
    }
}

fn read_input(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<String, String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))
        }
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(s)
        }
    }
}

fn emit(json: bool, value: Value, text: String) -> Outcome {
    if json {
        Outcome::ok(serde_json::to_string_pretty(&value).expect("values serialize") + "\n")
    } else {
        Outcome::ok(text)
    }
}

fn execute(cmd: &Command, spec: &RecurrenceSpec, json: bool) -> crate::Result<Outcome> {
    let gf = GeneratingFunctions::new(spec);
    let p = spec.p();
    let out = match *cmd {
        Command::Kneading => {
            let k = gf.kneading_matrix();
            let mut text = format!("K =\n{}", output::matrix_text(k));
            let mut incs = Vec::new();
            for alpha in 1..=p {
                for beta in 1..=spec.spanning_len() {
                    let v = kneading::kneading_increment(spec, alpha, beta)?;
                    writeln!(text, "K({alpha},{beta}) = {}", v.display_integral()).unwrap();
                    incs.push(json!({ "alpha": alpha, "beta": beta, "value": ratfunc_json(&v) }));
                }
            }
            emit(json, json!({ "K": output::matrix_json(k), "increments": incs }), text)
        }
        Command::Delta { alpha: Some(alpha), beta: Some(beta) } => {
            let d = gf.extended_determinant(alpha, beta)?;
            emit(
                json,
                json!({ "alpha": alpha, "beta": beta, "delta": ratfunc_json(&d) }),
                format!("Δ_{alpha}({beta}) = {}\n", d.display_integral()),
            )
        }
        Command::Delta { .. } => {
            let d = gf.kneading_determinant();
            emit(json, json!({ "delta": ratfunc_json(d) }), format!("Δ = {}\n", d.display_integral()))
        }
        Command::Genfun { beta } => {
            let g = gf.generating_function(beta)?;
            let mut text = String::new();
            for (a, c) in g.components().iter().enumerate() {
                writeln!(text, "G_{}(e_{beta}) = {}", a + 1, c.display_integral()).unwrap();
            }
            emit(json, json!({ "beta": beta, "components": vector_json(&g) }), text)
        }
        Command::Spanning => {
            let span = gf.spanning_set()?;
            let mut text = String::new();
            for (i, g) in span.iter().enumerate() {
                writeln!(text, "G(e_{}) = {}", i + 1, output::vector_text(g)).unwrap();
            }
            let items: Vec<Value> = span
                .iter()
                .enumerate()
                .map(|(i, g)| json!({ "beta": i + 1, "components": vector_json(g) }))
                .collect();
            emit(json, json!({ "spanning": items }), text)
        }
        Command::Basis => {
            let r = gf.basis_and_dimension()?;
            let mut text = format!("dimension: {}\nbasis:\n", r.dimension);
            let mut basis = Vec::new();
            for &b in &r.selected_betas {
                let g = &r.spanning[b - 1];
                writeln!(text, "  G(e_{b}) = {}", output::vector_text(g)).unwrap();
                basis.push(json!({ "beta": b, "components": vector_json(g) }));
            }
            emit(
                json,
                json!({ "dimension": r.dimension, "selected_betas": r.selected_betas, "basis": basis }),
                text,
            )
        }
        Command::Dim => {
            let d = gf.basis_and_dimension()?.dimension;
            emit(json, json!({ "dimension": d }), format!("{d}\n"))
        }
        Command::Verify { terms, beta, inject_fault } => {
            let betas: Vec<usize> = match beta {
                Some(b) => vec![b],
                None => (1..=spec.spanning_len()).collect(),
            };
            let reports = match inject_fault {
                None => oracle::verify_all(spec, &betas, terms)?,
                Some((k, i, j)) => {
                    if k >= spec.s() || i == 0 || j == 0 || i > p || j > p {
                        return Err(Error::InvalidSpec(format!("no entry ({i},{j}) in A_{k}")));
                    }
                    let bumped = spec.coeffs()[k].get(i - 1, j - 1) + BigRational::from_integer(1.into());
                    let faulty = spec.with_entry(k, i - 1, j - 1, bumped);
                    oracle::verify_all_against(&faulty, spec, &betas, terms)?
                }
            };
            let pass = reports.iter().all(|r| r.pass);
            let mut text = String::new();
            if pass {
                writeln!(text, "PASS {}", beta_list(&betas)).unwrap();
            } else {
                for r in reports.iter().filter(|r| !r.pass) {
                    let m = r.mismatch.as_ref().expect("failed report has a mismatch");
                    writeln!(
                        text,
                        "FAIL β={}: first mismatch at z^{}: orbit {}, closed form {}",
                        r.beta,
                        m.index,
                        output::rationals_text(&m.expected),
                        output::rationals_text(&m.actual)
                    )
                    .unwrap();
                }
            }
            let results: Vec<Value> = reports.iter().map(output::report_json).collect();
            let mut out = emit(json, json!({ "pass": pass, "terms": terms, "results": results }), text);
            if !pass {
                out.code = EXIT_VERIFY_FAILED;
            }
            out
        }
        Command::Taylor { beta, terms } => {
            let coeffs = oracle::taylor(&gf.generating_function(beta)?, terms)?;
            let mut text = String::new();
            for (n, v) in coeffs.iter().enumerate() {
                writeln!(text, "v_{n} = {}", output::rationals_text(v)).unwrap();
            }
            let rows: Vec<Value> = coeffs.iter().map(|v| rationals_json(v)).collect();
            emit(json, json!({ "beta": beta, "terms": terms, "coefficients": rows }), text)
        }
    };
    Ok(out)
}
