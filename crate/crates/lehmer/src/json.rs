//! JSON encodings.
//!
//! A polynomial with only even exponents is an array of
//! `[z_exp, q_exp, "coeff"]` triples in ascending term order. Anything with a
//! half-integer power is an object `{"vars": "uv", "terms": [[ev, eu, "coeff"], ...]}`.
//! Coefficients are decimal strings so they survive any size.

use std::fmt;

use lehmer_core::{BandedFactors, BigInt, Monomial, Poly2, RatFunc, Series2, TriMatrix};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError(String);

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed polynomial JSON: {}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn bad(msg: impl Into<String>) -> FormatError {
    FormatError(msg.into())
}

pub fn poly_to_json(p: &Poly2) -> Value {
    match p.as_qz() {
        Ok(qz) => Value::Array(
            qz.terms()
                .map(|(qe, ze, c)| json!([ze, qe, c.to_string()]))
                .collect(),
        ),
        Err(_) => json!({
            "vars": "uv",
            "terms": p
                .terms()
                .map(|(m, c)| json!([m.ev, m.eu, c.to_string()]))
                .collect::<Vec<_>>(),
        }),
    }
}

fn parse_triple(t: &Value) -> Result<(u32, u32, BigInt), FormatError> {
    let items = t
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or_else(|| bad("term is not a triple"))?;
    let exp = |v: &Value| {
        v.as_u64()
            .and_then(|e| u32::try_from(e).ok())
            .ok_or_else(|| bad("exponent is not a small nonnegative integer"))
    };
    let coeff = items[2]
        .as_str()
        .ok_or_else(|| bad("coefficient is not a string"))?
        .parse::<BigInt>()
        .map_err(|e| bad(format!("coefficient: {e}")))?;
    Ok((exp(&items[0])?, exp(&items[1])?, coeff))
}

pub fn poly_from_json(v: &Value) -> Result<Poly2, FormatError> {
    match v {
        Value::Array(terms) => {
            let parsed = terms
                .iter()
                .map(parse_triple)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Poly2::from_terms(
                parsed
                    .into_iter()
                    .map(|(ze, qe, c)| (Monomial::new(2 * qe, 2 * ze), c)),
            ))
        }
        Value::Object(map) => {
            if map.get("vars").and_then(Value::as_str) != Some("uv") {
                return Err(bad("object form needs \"vars\": \"uv\""));
            }
            let terms = map
                .get("terms")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing \"terms\" array"))?;
            let parsed = terms
                .iter()
                .map(parse_triple)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Poly2::from_terms(
                parsed
                    .into_iter()
                    .map(|(ev, eu, c)| (Monomial::new(eu, ev), c)),
            ))
        }
        _ => Err(bad("expected an array or an object")),
    }
}

pub fn ratfunc_to_json(r: &RatFunc) -> Value {
    json!({ "num": poly_to_json(r.num()), "den": poly_to_json(r.den()) })
}

pub fn matrix_to_json(m: &TriMatrix) -> Value {
    let band = |ps: &[Poly2]| ps.iter().map(poly_to_json).collect::<Vec<_>>();
    json!({
        "n": m.n(),
        "diag": band(m.diag()),
        "super": band(m.superdiag()),
        "sub": band(m.subdiag()),
    })
}

pub fn factors_to_json(f: &BandedFactors) -> Value {
    json!({
        "n": f.n(),
        "u_diag": f.u_diag.iter().map(ratfunc_to_json).collect::<Vec<_>>(),
        "u_super": f.u_super.iter().map(poly_to_json).collect::<Vec<_>>(),
        "l_sub": f.l_sub.iter().map(ratfunc_to_json).collect::<Vec<_>>(),
    })
}

pub fn series_to_json(s: &Series2) -> Value {
    json!({
        "zdeg": s.z_trunc(),
        "qdeg": s.q_trunc(),
        "coeffs": s.coeffs().iter().map(poly_to_json).collect::<Vec<_>>(),
    })
}
