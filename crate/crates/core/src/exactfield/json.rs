//! Canonical JSON encoding of exact scalars.
//!
//! A polynomial in `q` is a list of `[exponent, "p/q"]` pairs sorted by
//! ascending exponent, zero coefficients omitted; integral coefficients are
//! written without the `/1`. A [`QRational`] is `{"num": poly, "den": poly}`
//! where the denominator is primitive with positive leading coefficient.
//! Polynomials in `u` use the same pair layout with [`QRational`] objects as
//! coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{IntPoly, QRational, UPoly, URational, USeries};
use crate::error::{Error, Result};

fn ratio_string(n: &BigInt, d: &BigInt) -> String {
    if d.is_one() {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

pub fn qrational_to_json(x: &QRational) -> Value {
    let num: Vec<Value> = x
        .numerator_terms()
        .into_iter()
        .map(|(k, n, d)| json!([k, ratio_string(&n, &d)]))
        .collect();
    let den: Vec<Value> = x
        .denom()
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| json!([k, c.to_string()]))
        .collect();
    json!({ "num": num, "den": den })
}

pub fn upoly_to_json(p: &UPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| json!([k, qrational_to_json(c)]))
            .collect(),
    )
}

pub fn urational_to_json(r: &URational) -> Value {
    json!({
        "num": upoly_to_json(r.numerator()),
        "den": upoly_to_json(r.denominator()),
    })
}

/// `{"order": K, "coeffs": [c_0, ..., c_K]}` with every coefficient present.
pub fn useries_to_json(s: &USeries) -> Value {
    json!({
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(qrational_to_json).collect::<Vec<_>>(),
    })
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_ratio(s: &str) -> Result<(BigInt, BigInt)> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| parse_err(format!("bad coefficient {s:?}")))?;
    let d: BigInt = d.trim().parse().map_err(|_| parse_err(format!("bad coefficient {s:?}")))?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok((n, d))
}

/// Parse one `[[exp, "p/q"], ...]` list into `(integer poly, common denominator)`.
fn parse_qpoly(v: &Value) -> Result<(IntPoly, BigInt)> {
    let arr = v.as_array().ok_or_else(|| parse_err("polynomial must be a list"))?;
    let mut terms = Vec::with_capacity(arr.len());
    let mut common = BigInt::one();
    for t in arr {
        let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| parse_err("term must be [exp, coeff]"))?;
        let k = pair[0].as_u64().ok_or_else(|| parse_err("exponent must be a non-negative integer"))? as usize;
        let c = pair[1].as_str().ok_or_else(|| parse_err("coefficient must be a string"))?;
        let (n, d) = parse_ratio(c)?;
        common = num_integer::Integer::lcm(&common, &d);
        terms.push((k, n, d));
    }
    let deg = terms.iter().map(|t| t.0).max().map_or(0, |d| d + 1);
    let mut cs = vec![BigInt::zero(); deg];
    for (k, n, d) in terms {
        cs[k] += n * (&common / d);
    }
    Ok((IntPoly::from_coeffs(cs), common))
}

pub fn qrational_from_json(v: &Value) -> Result<QRational> {
    let (num, nd) = parse_qpoly(&v["num"])?;
    let (den, dd) = parse_qpoly(&v["den"])?;
    // (num/nd) / (den/dd) = (num*dd) / (den*nd)
    QRational::try_from_parts(num.scale(&dd), den.scale(&nd))
}
