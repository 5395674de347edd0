//! Scalar and sequence literals: complex values as `RE`, `RE+IMi` or
//! `RE-IMi`, rationals as `p/q`, sequences as comma-separated entries.

use num_bigint::BigInt;
use powersum_core::{ComplexScalar, ExactRational, ExponentValue, ScalarValue, Sequence};

/// Parse a complex literal. A bare number is a real value; `1i`, `i` and
/// `-i` are accepted for pure imaginaries.
pub fn parse_complex(s: &str) -> Result<ComplexScalar, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    let Some(body) = s.strip_suffix('i') else {
        let re: f64 = s.parse().map_err(|_| format!("malformed number `{s}`"))?;
        return Ok(ComplexScalar::new(re, 0.0));
    };
    // split RE±IM at the last sign that is neither leading nor an exponent sign
    let bytes = body.as_bytes();
    let mut split = None;
    for i in (1..bytes.len()).rev() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'e' && bytes[i - 1] != b'E' {
            split = Some(i);
            break;
        }
    }
    let (re_str, im_str) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let re: f64 = if re_str.is_empty() {
        0.0
    } else {
        re_str
            .parse()
            .map_err(|_| format!("malformed real part in `{s}`"))?
    };
    let im: f64 = match im_str {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other
            .parse()
            .map_err(|_| format!("malformed imaginary part in `{s}`"))?,
    };
    Ok(ComplexScalar::new(re, im))
}

/// Parse an exact rational literal: an integer or `p/q`.
pub fn parse_rational(s: &str) -> Result<ExactRational, String> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p
            .trim()
            .parse()
            .map_err(|_| format!("malformed numerator in `{s}`"))?;
        let q: BigInt = q
            .trim()
            .parse()
            .map_err(|_| format!("malformed denominator in `{s}`"))?;
        if q == BigInt::from(0) {
            return Err(format!("zero denominator in `{s}`"));
        }
        Ok(ExactRational::new(p, q))
    } else {
        let v: BigInt = s
            .parse()
            .map_err(|_| format!("`{s}` is not an integer or `p/q` rational"))?;
        Ok(ExactRational::from_integer(v))
    }
}

/// Parse a scalar argument, keeping it exact when the literal is exact.
pub fn parse_scalar(s: &str) -> Result<ScalarValue, String> {
    if s.contains('i') {
        return parse_complex(s).map(ScalarValue::Complex);
    }
    if let Ok(q) = parse_rational(s) {
        return Ok(ScalarValue::Rational(q));
    }
    parse_complex(s).map(ScalarValue::Complex)
}

/// Parse an exponent argument: a plain integer stays exact-capable.
pub fn parse_exponent(s: &str) -> Result<ExponentValue, String> {
    let t = s.trim();
    if let Ok(v) = t.parse::<i64>() {
        return Ok(ExponentValue::Int(v));
    }
    parse_complex(t).map(ExponentValue::Complex)
}

/// Parse a comma-separated sequence literal. The sequence stays rational if
/// every entry does; one float or complex entry moves the whole sequence to
/// the complex regime.
pub fn parse_sequence(s: &str) -> Result<Sequence, String> {
    let entries: Vec<&str> = s.split(',').map(str::trim).collect();
    if entries.is_empty() || entries.iter().any(|e| e.is_empty()) {
        return Err(format!("malformed sequence literal `{s}`"));
    }
    let rationals: Result<Vec<ExactRational>, String> =
        entries.iter().map(|e| parse_rational(e)).collect();
    if let Ok(values) = rationals {
        return Ok(Sequence::Rational(values));
    }
    let complexes: Result<Vec<ComplexScalar>, String> = entries
        .iter()
        .map(|e| {
            parse_scalar(e).map(|v| match v {
                ScalarValue::Complex(z) => z,
                ScalarValue::Rational(q) => ComplexScalar::new(
                    num_traits::ToPrimitive::to_f64(&q).unwrap_or(f64::INFINITY),
                    0.0,
                ),
            })
        })
        .collect();
    complexes.map(Sequence::Complex)
}
