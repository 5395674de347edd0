//! Output rendering. Text mode prints floats to a configurable number of
//! significant decimals (default 6); JSON and CSV carry full binary64
//! round-trip precision. Complex values serialize as `a+bi`/`a-bi` with no
//! spaces, rationals as `p/q`.

use powersum_core::{
    ComplexScalar, ExponentValue, IdentityReport, ReportValue, ScalarValue, Sequence,
};

/// Format with `sig` significant decimal digits, trimming trailing zeros.
pub fn significant(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - exponent).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn complex(z: ComplexScalar, sig: usize) -> String {
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!(
        "{}{}{}i",
        significant(z.re, sig),
        sign,
        significant(z.im.abs(), sig)
    )
}

/// Full-precision complex rendering for machine formats.
pub fn complex_full(z: ComplexScalar) -> String {
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}

pub fn report_value(v: &ReportValue, sig: usize) -> String {
    match v {
        ReportValue::Rational(q) => q.to_string(),
        ReportValue::Complex(z) => complex(*z, sig),
    }
}

pub fn report_value_full(v: &ReportValue) -> String {
    match v {
        ReportValue::Rational(q) => q.to_string(),
        ReportValue::Complex(z) => complex_full(*z),
    }
}

pub fn exponent_value(a: &ExponentValue) -> String {
    match a {
        ExponentValue::Int(v) => v.to_string(),
        ExponentValue::Complex(z) => complex_full(*z),
    }
}

pub fn scalar_value(x: &ScalarValue) -> String {
    match x {
        ScalarValue::Rational(q) => q.to_string(),
        ScalarValue::Complex(z) => complex_full(*z),
    }
}

pub fn sequence(seq: &Sequence, sig: usize) -> String {
    match seq {
        Sequence::Rational(v) => v
            .iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join(","),
        Sequence::Complex(v) => v
            .iter()
            .map(|z| complex(*z, sig))
            .collect::<Vec<_>>()
            .join(","),
    }
}

/// Aggregate counters over a batch of reports.
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub max_rel_err: f64,
}

pub fn summarize(rows: &[IdentityReport]) -> Summary {
    let passed = rows.iter().filter(|r| r.pass).count();
    Summary {
        total: rows.len(),
        passed,
        failed: rows.len() - passed,
        max_rel_err: rows.iter().map(|r| r.rel_err).fold(0.0, f64::max),
    }
}

pub const CSV_HEADER: &str =
    "identity,alpha_re,alpha_im,x_re,x_im,m,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass";

/// One report as a CSV row in the fixed column order. Identities without a
/// weight base report x = 1, the value their power sums use.
pub fn csv_row(r: &IdentityReport) -> String {
    let alpha = r.params.alpha.to_complex();
    let x = r
        .params
        .x
        .as_ref()
        .map(ScalarValue::to_complex)
        .unwrap_or(ComplexScalar::new(1.0, 0.0));
    let lhs = r.lhs.to_complex();
    let rhs = r.rhs.to_complex();
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.id,
        alpha.re,
        alpha.im,
        x.re,
        x.im,
        r.params.m,
        lhs.re,
        lhs.im,
        rhs.re,
        rhs.im,
        r.abs_err,
        r.rel_err,
        r.pass
    )
}

pub fn text_row(r: &IdentityReport, sig: usize) -> String {
    format!(
        "{} {} lhs={} rhs={} abs_err={} rel_err={} mode={}",
        r.id,
        if r.pass { "pass" } else { "fail" },
        report_value(&r.lhs, sig),
        report_value(&r.rhs, sig),
        significant(r.abs_err, sig),
        significant(r.rel_err, sig),
        r.mode,
    )
}

pub fn json_row(r: &IdentityReport) -> serde_json::Value {
    serde_json::json!({
        "id": r.id.name(),
        "params": {
            "alpha": exponent_value(&r.params.alpha),
            "x": r.params.x.as_ref().map(scalar_value),
            "m": r.params.m,
            "coeffs": r.params.coeffs.as_ref().map(|c| sequence(c, 17)),
        },
        "lhs": report_value_full(&r.lhs),
        "rhs": report_value_full(&r.rhs),
        "abs_err": r.abs_err,
        "rel_err": r.rel_err,
        "mode": r.mode.name(),
        "pass": r.pass,
        "tol": r.tol,
    })
}

pub fn json_document(rows: &[IdentityReport]) -> serde_json::Value {
    let summary = summarize(rows);
    serde_json::json!({
        "rows": rows.iter().map(json_row).collect::<Vec<_>>(),
        "summary": {
            "total": summary.total,
            "passed": summary.passed,
            "failed": summary.failed,
            "max_rel_err": summary.max_rel_err,
        },
    })
}

pub fn summary_line(rows: &[IdentityReport]) -> String {
    let s = summarize(rows);
    format!(
        "summary: total={} passed={} failed={} max_rel_err={}",
        s.total, s.passed, s.failed, s.max_rel_err
    )
}
