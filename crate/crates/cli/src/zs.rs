//! Spectral-parameter expressions: products of integers, rationals and
//! powers of `q`, e.g. `q^3`, `-2*q^-1`, `1/3*q^(2)`.

use qloop::exactfield::QRational;

fn parse_int(s: &str) -> Result<i64, String> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| format!("expected an integer, got {s:?}"))
}

fn parse_factor(f: &str) -> Result<QRational, String> {
    let f = f.trim();
    if f.is_empty() {
        return Err("empty factor".into());
    }
    if let Some(rest) = f.strip_prefix('-') {
        return Ok(-parse_factor(rest)?);
    }
    if f == "q" {
        return Ok(QRational::q());
    }
    if let Some(exp) = f.strip_prefix("q^") {
        let exp = exp.trim();
        let exp = exp
            .strip_prefix('(')
            .and_then(|e| e.strip_suffix(')'))
            .unwrap_or(exp);
        return Ok(QRational::q_pow(parse_int(exp)?));
    }
    match f.split_once('/') {
        Some((n, d)) => QRational::from_ratio(parse_int(n)?, parse_int(d)?)
            .map_err(|e| format!("{f}: {e}")),
        None => Ok(QRational::from_int(parse_int(f)?)),
    }
}

/// Parses a nonzero spectral value.
pub fn parse_zs(s: &str) -> Result<QRational, String> {
    let v = s
        .split('*')
        .try_fold(QRational::one(), |acc, f| Ok::<_, String>(acc * parse_factor(f)?))?;
    if v.is_zero() {
        return Err(format!("spectral value {s:?} is zero"));
    }
    Ok(v)
}

/// Comma-separated list of spectral values.
pub fn parse_zs_list(s: &str) -> Result<Vec<QRational>, String> {
    s.split(',').map(parse_zs).collect()
}
