//! Text and JSON renderings of results.
//!
//! JSON carries every number as an exact string. A rational function is
//! `{"num": [...], "den": [...], "display": "..."}` with coefficient arrays in
//! ascending powers of `z` and a monic `den`.

use serde_json::{json, Value};

use crate::exactalg::{format_rational, parse_rational, BigRational, Polynomial, RatFuncMatrix, RationalFunction};
use crate::genfun::GeneratingFunctionVector;
use crate::oracle::VerificationReport;

pub fn rationals_json(xs: &[BigRational]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(format_rational(x))).collect())
}

pub fn ratfunc_json(f: &RationalFunction) -> Value {
    json!({
        "num": rationals_json(f.numer().coeffs()),
        "den": rationals_json(f.denom().coeffs()),
        "display": f.to_string(),
    })
}

/// Reads back what [`ratfunc_json`] wrote.
pub fn ratfunc_from_json(v: &Value) -> Option<RationalFunction> {
    let poly = |key: &str| -> Option<Polynomial> {
        let coeffs = v
            .get(key)?
            .as_array()?
            .iter()
            .map(|c| parse_rational(c.as_str()?).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial::from_coeffs(coeffs))
    };
    RationalFunction::new(poly("num")?, poly("den")?).ok()
}

pub fn vector_json(g: &GeneratingFunctionVector) -> Value {
    Value::Array(g.components().iter().map(ratfunc_json).collect())
}

pub fn matrix_json(m: &RatFuncMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(ratfunc_json).collect()))
            .collect(),
    )
}

pub fn vector_text(g: &GeneratingFunctionVector) -> String {
    let parts: Vec<String> = g.components().iter().map(RationalFunction::display_integral).collect();
    format!("({})", parts.join(", "))
}

pub fn matrix_text(m: &RatFuncMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let cells: Vec<String> = m.row(i).iter().map(RationalFunction::display_integral).collect();
        out.push_str(&format!("[{}]\n", cells.join(", ")));
    }
    out
}

pub fn rationals_text(xs: &[BigRational]) -> String {
    let parts: Vec<String> = xs.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

pub fn report_json(r: &VerificationReport) -> Value {
    let mismatch = r.mismatch.as_ref().map_or(Value::Null, |m| {
        json!({
            "index": m.index,
            "expected": rationals_json(&m.expected),
            "actual": rationals_json(&m.actual),
        })
    });
    json!({ "beta": r.beta, "pass": r.pass, "mismatch": mismatch })
}

/// `β=1..4`, `β=3`, or `β=1,3,5` for the betas of passing reports.
pub fn beta_list(betas: &[usize]) -> String {
    match betas {
        [] => "β=∅".to_string(),
        [b] => format!("β={b}"),
        [first, .., last] if betas.windows(2).all(|w| w[1] == w[0] + 1) => format!("β={first}..{last}"),
        _ => {
            let parts: Vec<String> = betas.iter().map(ToString::to_string).collect();
            format!("β={}", parts.join(","))
        }
    }
}
