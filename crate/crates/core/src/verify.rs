//! Identity verification: dispatch one of the catalogd identities to its
//! direct-summation left side and closed-form right side, evaluate both in
//! the requested arithmetic mode, and report the comparison.

use std::fmt;
use std::str::FromStr;

use crate::dd::ComplexDd;
use crate::error::{Error, Result};
use crate::identity::{
    binomial_power_sum_closed, binomial_power_sum_difference_form, coefficient_sum_closed,
    coefficient_sum_direct, eulerian_power_sum_closed, first_kind_power_sum_closed,
    harmonic_power_sum_closed, power_sum_closed, power_sum_direct,
    tail_reciprocal_power_sum_closed, unit_power_sum_closed, UnitSumForm, WeightKind,
    DEFAULT_SINGULAR_GUARD,
};
use crate::scalar::{PowerScalar, Scalar};
use crate::transform::Sequence;
use crate::{ComplexScalar, ExactRational};

/// Tags of the identity catalog. The set is closed; every tag resolves to one
/// left-hand oracle and one closed-form evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    Lemma4,
    Eq6,
    Eq8,
    Eq10,
    Eq13,
    Eq16,
    Eq17,
    Eq19,
    Eq20,
    Eq23,
    Eq24,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::Lemma4,
        IdentityId::Eq6,
        IdentityId::Eq8,
        IdentityId::Eq10,
        IdentityId::Eq13,
        IdentityId::Eq16,
        IdentityId::Eq17,
        IdentityId::Eq19,
        IdentityId::Eq20,
        IdentityId::Eq23,
        IdentityId::Eq24,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Lemma4 => "LEMMA4",
            IdentityId::Eq6 => "EQ6",
            IdentityId::Eq8 => "EQ8",
            IdentityId::Eq10 => "EQ10",
            IdentityId::Eq13 => "EQ13",
            IdentityId::Eq16 => "EQ16",
            IdentityId::Eq17 => "EQ17",
            IdentityId::Eq19 => "EQ19",
            IdentityId::Eq20 => "EQ20",
            IdentityId::Eq23 => "EQ23",
            IdentityId::Eq24 => "EQ24",
        }
    }

    /// Whether the identity takes a scalar weight base x.
    pub fn uses_x(self) -> bool {
        matches!(
            self,
            IdentityId::Eq6
                | IdentityId::Eq13
                | IdentityId::Eq16
                | IdentityId::Eq17
                | IdentityId::Eq19
        )
    }

    /// Whether the identity takes a coefficient sequence.
    pub fn uses_coeffs(self) -> bool {
        self == IdentityId::Lemma4
    }

    /// Whether the exponent must be a genuine integer in every mode (it
    /// bounds a sum on the closed-form side).
    pub fn requires_integer_exponent(self) -> bool {
        matches!(self, IdentityId::Eq16 | IdentityId::Eq19)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase();
        Self::ALL
            .into_iter()
            .find(|id| id.name() == upper)
            .ok_or_else(|| Error::InvalidParams(format!("unknown identity `{s}`")))
    }
}

/// Exponent argument: an integer (exact-capable) or a complex value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExponentValue {
    Int(i64),
    Complex(ComplexScalar),
}

impl ExponentValue {
    pub fn as_int(&self) -> Option<i64> {
        match self {
            ExponentValue::Int(v) => Some(*v),
            ExponentValue::Complex(_) => None,
        }
    }

    pub fn to_complex(&self) -> ComplexScalar {
        match self {
            ExponentValue::Int(v) => ComplexScalar::new(*v as f64, 0.0),
            ExponentValue::Complex(z) => *z,
        }
    }
}

/// Scalar argument: a rational (exact-capable) or a complex value.
#[derive(Debug, Clone, PartialEq)]
pub enum ScalarValue {
    Rational(ExactRational),
    Complex(ComplexScalar),
}

impl ScalarValue {
    pub fn as_rational(&self) -> Option<&ExactRational> {
        match self {
            ScalarValue::Rational(q) => Some(q),
            ScalarValue::Complex(_) => None,
        }
    }

    pub fn to_complex(&self) -> ComplexScalar {
        match self {
            ScalarValue::Rational(q) => ComplexScalar::new(
                num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::INFINITY),
                0.0,
            ),
            ScalarValue::Complex(z) => *z,
        }
    }
}

/// Parameters of one identity check. `m` is the upper summation limit (for
/// the iterated-difference identity this is the catalog's n); `coeffs` is
/// consulted only by the coefficient-sum identity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityParams {
    pub alpha: ExponentValue,
    pub x: Option<ScalarValue>,
    pub m: u32,
    pub coeffs: Option<Sequence>,
}

/// Arithmetic regime of a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithmeticMode {
    Exact,
    FloatStandard,
    FloatExtended,
}

impl ArithmeticMode {
    pub fn name(self) -> &'static str {
        match self {
            ArithmeticMode::Exact => "exact",
            ArithmeticMode::FloatStandard => "float-standard",
            ArithmeticMode::FloatExtended => "float-extended",
        }
    }

    /// Tolerance used when the caller does not pick one: exact mode compares
    /// for equality, the float modes carry their suite bounds.
    pub fn default_tol(self) -> f64 {
        match self {
            ArithmeticMode::Exact => 0.0,
            ArithmeticMode::FloatStandard => 1e-7,
            ArithmeticMode::FloatExtended => 1e-10,
        }
    }
}

impl fmt::Display for ArithmeticMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One evaluated side, in the regime it was computed in.
#[derive(Debug, Clone, PartialEq)]
pub enum ReportValue {
    Rational(ExactRational),
    Complex(ComplexScalar),
}

impl ReportValue {
    pub fn to_complex(&self) -> ComplexScalar {
        match self {
            ReportValue::Rational(q) => ComplexScalar::new(
                num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::INFINITY),
                0.0,
            ),
            ReportValue::Complex(z) => *z,
        }
    }
}

/// Record of one identity check: both sides, the error split, and the
/// pass/fail decision under the given tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: IdentityParams,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub abs_err: f64,
    pub rel_err: f64,
    pub mode: ArithmeticMode,
    pub pass: bool,
    pub tol: f64,
}

/// Below this left-hand-side magnitude the float pass rule falls back to the
/// absolute error; some identities drive the left side to zero.
pub const NEAR_ZERO_LHS: f64 = 1e-12;

fn relative_error(abs_err: f64, lhs_mag: f64) -> f64 {
    if abs_err == 0.0 {
        0.0
    } else if lhs_mag == 0.0 {
        f64::INFINITY
    } else {
        abs_err / lhs_mag
    }
}

fn float_pass(abs_err: f64, rel_err: f64, lhs_mag: f64, tol: f64) -> bool {
    rel_err <= tol || (lhs_mag < NEAR_ZERO_LHS && abs_err <= tol)
}

/// Both sides of an identity in one scalar regime. `bounded_exp` carries the
/// integer exponent for the two identities whose closed form is a sum bounded
/// by it; the dispatcher guarantees it is present for those.
fn eval_sides<S: PowerScalar>(
    id: IdentityId,
    alpha: &S::Exponent,
    bounded_exp: Option<u32>,
    x: Option<&S>,
    m: u32,
    coeffs: Option<&[S]>,
    guard: f64,
) -> Result<(S, S)> {
    let one = S::one();
    match id {
        IdentityId::Lemma4 => {
            let c = coeffs.expect("validated: coefficients present");
            Ok((
                coefficient_sum_direct::<S>(c, alpha, m)?,
                coefficient_sum_closed::<S>(c, alpha, m)?,
            ))
        }
        IdentityId::Eq6 => {
            let x = x.expect("validated: x present");
            Ok((
                power_sum_direct::<S>(alpha, x, WeightKind::Unit, m)?,
                power_sum_closed::<S>(alpha, x, m)?,
            ))
        }
        IdentityId::Eq13 => {
            // the reciprocal-power variant is the weighted sum at −alpha
            let x = x.expect("validated: x present");
            let neg = S::exponent_neg(alpha);
            Ok((
                power_sum_direct::<S>(&neg, x, WeightKind::Unit, m)?,
                power_sum_closed::<S>(&neg, x, m)?,
            ))
        }
        IdentityId::Eq8 => Ok((
            power_sum_direct::<S>(alpha, &one, WeightKind::Unit, m)?,
            unit_power_sum_closed::<S>(alpha, m, UnitSumForm::UpperBinomial)?,
        )),
        IdentityId::Eq10 => Ok((
            power_sum_direct::<S>(alpha, &one, WeightKind::Unit, m)?,
            unit_power_sum_closed::<S>(alpha, m, UnitSumForm::IndexShifted)?,
        )),
        IdentityId::Eq16 => {
            let x = x.expect("validated: x present");
            let n = bounded_exp.expect("validated: integer exponent present");
            Ok((
                power_sum_direct::<S>(alpha, x, WeightKind::Unit, m)?,
                eulerian_power_sum_closed::<S>(n, x, m, guard)?,
            ))
        }
        IdentityId::Eq17 => {
            let x = x.expect("validated: x present");
            Ok((
                power_sum_direct::<S>(alpha, x, WeightKind::Binomial, m)?,
                binomial_power_sum_closed::<S>(alpha, x, m)?,
            ))
        }
        IdentityId::Eq19 => {
            let x = x.expect("validated: x present");
            let r = bounded_exp.expect("validated: integer exponent present");
            Ok((
                power_sum_direct::<S>(alpha, x, WeightKind::Binomial, m)?,
                binomial_power_sum_difference_form::<S>(r, x, m, guard)?,
            ))
        }
        IdentityId::Eq20 => Ok((
            power_sum_direct::<S>(alpha, &one, WeightKind::FirstKindCycles, m)?,
            first_kind_power_sum_closed::<S>(alpha, m)?,
        )),
        IdentityId::Eq23 => Ok((
            power_sum_direct::<S>(alpha, &one, WeightKind::Harmonic, m)?,
            harmonic_power_sum_closed::<S>(alpha, m)?,
        )),
        IdentityId::Eq24 => Ok((
            power_sum_direct::<S>(alpha, &one, WeightKind::TailReciprocal, m)?,
            tail_reciprocal_power_sum_closed::<S>(alpha, m)?,
        )),
    }
}

fn validate(id: IdentityId, params: &IdentityParams) -> Result<Option<u32>> {
    if params.m < 1 {
        return Err(Error::InvalidParams("m must be >= 1".into()));
    }
    if id.uses_x() != params.x.is_some() {
        return Err(Error::InvalidParams(format!(
            "{id} {} a weight base x",
            if id.uses_x() {
                "requires"
            } else {
                "does not take"
            }
        )));
    }
    if id.uses_coeffs() {
        match &params.coeffs {
            None => {
                return Err(Error::InvalidParams(format!(
                    "{id} requires a coefficient sequence"
                )))
            }
            Some(c) if c.len() < params.m as usize => {
                return Err(Error::InvalidParams(format!(
                    "{id} needs at least m = {} coefficients, got {}",
                    params.m,
                    c.len()
                )))
            }
            Some(_) => {}
        }
    } else if params.coeffs.is_some() {
        return Err(Error::InvalidParams(format!(
            "{id} does not take coefficients"
        )));
    }
    if id.requires_integer_exponent() {
        let v = params.alpha.as_int().ok_or_else(|| {
            Error::InvalidParams(format!("{id} requires a genuine integer exponent"))
        })?;
        let min = if id == IdentityId::Eq19 { 1 } else { 0 };
        if v < min {
            return Err(Error::InvalidParams(format!(
                "{id} requires exponent >= {min}, got {v}"
            )));
        }
        return Ok(Some(v as u32));
    }
    Ok(None)
}

/// Check one identity at the given parameters, in the given arithmetic mode,
/// against the given tolerance. Exact mode demands exact inputs (integer
/// exponent, rational x / coefficients) and passes only on exact equality.
pub fn verify_identity(
    id: IdentityId,
    params: &IdentityParams,
    mode: ArithmeticMode,
    tol: f64,
) -> Result<IdentityReport> {
    let bounded_exp = validate(id, params)?;
    let (lhs, rhs, abs_err, rel_err, pass) = match mode {
        ArithmeticMode::Exact => {
            let alpha = params.alpha.as_int().ok_or_else(|| {
                Error::InvalidParams("exact mode requires an integer exponent".into())
            })?;
            let x = match &params.x {
                None => None,
                Some(v) => Some(v.as_rational().cloned().ok_or_else(|| {
                    Error::InvalidParams("exact mode requires a rational x".into())
                })?),
            };
            let coeffs = match &params.coeffs {
                None => None,
                Some(Sequence::Rational(c)) => Some(c.clone()),
                Some(Sequence::Complex(_)) => {
                    return Err(Error::InvalidParams(
                        "exact mode requires rational coefficients".into(),
                    ))
                }
            };
            let (l, r) = eval_sides::<ExactRational>(
                id,
                &alpha,
                bounded_exp,
                x.as_ref(),
                params.m,
                coeffs.as_deref(),
                0.0,
            )?;
            let pass = l == r;
            let (abs, rel) = if pass {
                (0.0, 0.0)
            } else {
                let abs = (l.clone() - r.clone()).magnitude();
                (abs, relative_error(abs, l.magnitude()))
            };
            (
                ReportValue::Rational(l),
                ReportValue::Rational(r),
                abs,
                rel,
                pass,
            )
        }
        ArithmeticMode::FloatStandard => {
            let alpha = params.alpha.to_complex();
            let x = params.x.as_ref().map(ScalarValue::to_complex);
            let coeffs: Option<Vec<ComplexScalar>> = params.coeffs.as_ref().map(to_complex_seq);
            let (l, r) = eval_sides::<ComplexScalar>(
                id,
                &alpha,
                bounded_exp,
                x.as_ref(),
                params.m,
                coeffs.as_deref(),
                DEFAULT_SINGULAR_GUARD,
            )?;
            let abs = (l - r).norm();
            let rel = relative_error(abs, l.norm());
            let pass = float_pass(abs, rel, l.norm(), tol);
            (
                ReportValue::Complex(l),
                ReportValue::Complex(r),
                abs,
                rel,
                pass,
            )
        }
        ArithmeticMode::FloatExtended => {
            let alpha = ComplexDd::from_complex(params.alpha.to_complex());
            let x = params
                .x
                .as_ref()
                .map(|v| ComplexDd::from_complex(v.to_complex()));
            let coeffs: Option<Vec<ComplexDd>> = params.coeffs.as_ref().map(|s| {
                to_complex_seq(s)
                    .iter()
                    .map(|z| ComplexDd::from_complex(*z))
                    .collect()
            });
            let (l, r) = eval_sides::<ComplexDd>(
                id,
                &alpha,
                bounded_exp,
                x.as_ref(),
                params.m,
                coeffs.as_deref(),
                DEFAULT_SINGULAR_GUARD,
            )?;
            let abs = (l - r).magnitude();
            let lhs_mag = l.magnitude();
            let rel = relative_error(abs, lhs_mag);
            let pass = float_pass(abs, rel, lhs_mag, tol);
            (
                ReportValue::Complex(l.to_complex()),
                ReportValue::Complex(r.to_complex()),
                abs,
                rel,
                pass,
            )
        }
    };
    Ok(IdentityReport {
        id,
        params: params.clone(),
        lhs,
        rhs,
        abs_err,
        rel_err,
        mode,
        pass,
        tol,
    })
}

fn to_complex_seq(seq: &Sequence) -> Vec<ComplexScalar> {
    match seq {
        Sequence::Rational(v) => v
            .iter()
            .map(|q| {
                ComplexScalar::new(
                    num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::INFINITY),
                    0.0,
                )
            })
            .collect(),
        Sequence::Complex(v) => v.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(n: i64) -> ExactRational {
        ExactRational::from_integer(BigInt::from(n))
    }

    fn ratio(n: i64, d: i64) -> ExactRational {
        ExactRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn exact_params(alpha: i64, x: Option<ExactRational>, m: u32) -> IdentityParams {
        IdentityParams {
            alpha: ExponentValue::Int(alpha),
            x: x.map(ScalarValue::Rational),
            m,
            coeffs: None,
        }
    }

    #[test]
    fn plain_power_sum_passes_exactly() {
        let report = verify_identity(
            IdentityId::Eq8,
            &exact_params(2, None, 2),
            ArithmeticMode::Exact,
            0.0,
        )
        .unwrap();
        assert!(report.pass);
        assert_eq!(report.lhs, ReportValue::Rational(int(5)));
        assert_eq!(report.rhs, ReportValue::Rational(int(5)));
        assert_eq!(report.abs_err, 0.0);
        assert_eq!(report.rel_err, 0.0);
    }

    #[test]
    fn tail_reciprocal_passes_exactly() {
        let report = verify_identity(
            IdentityId::Eq24,
            &exact_params(2, None, 2),
            ArithmeticMode::Exact,
            0.0,
        )
        .unwrap();
        assert!(report.pass);
        assert_eq!(report.lhs, ReportValue::Rational(ratio(9, 2)));
        assert_eq!(report.rhs, ReportValue::Rational(ratio(9, 2)));
    }

    #[test]
    fn reciprocal_variant_negates_the_exponent() {
        // with alpha = 1 the reciprocal variant checks Σ x^k/k
        let report = verify_identity(
            IdentityId::Eq13,
            &exact_params(1, Some(int(1)), 2),
            ArithmeticMode::Exact,
            0.0,
        )
        .unwrap();
        assert!(report.pass);
        assert_eq!(report.lhs, ReportValue::Rational(ratio(3, 2)));
    }

    #[test]
    fn excluded_point_is_rejected_in_every_mode() {
        let params = exact_params(1, Some(int(1)), 3);
        for mode in [
            ArithmeticMode::Exact,
            ArithmeticMode::FloatStandard,
            ArithmeticMode::FloatExtended,
        ] {
            assert_eq!(
                verify_identity(IdentityId::Eq16, &params, mode, 1e-7),
                Err(Error::SingularPoint("x=1")),
                "{mode}"
            );
        }
    }

    #[test]
    fn shape_validation_rejects_mismatched_params() {
        // x on an identity that does not take one
        let bad = IdentityParams {
            alpha: ExponentValue::Int(2),
            x: Some(ScalarValue::Rational(int(2))),
            m: 2,
            coeffs: None,
        };
        assert!(matches!(
            verify_identity(IdentityId::Eq8, &bad, ArithmeticMode::Exact, 0.0),
            Err(Error::InvalidParams(_))
        ));
        // missing x
        assert!(matches!(
            verify_identity(
                IdentityId::Eq6,
                &exact_params(2, None, 2),
                ArithmeticMode::Exact,
                0.0
            ),
            Err(Error::InvalidParams(_))
        ));
        // missing coefficients
        assert!(matches!(
            verify_identity(
                IdentityId::Lemma4,
                &exact_params(2, None, 2),
                ArithmeticMode::Exact,
                0.0
            ),
            Err(Error::InvalidParams(_))
        ));
        // complex exponent where a genuine integer is required
        let complex_exp = IdentityParams {
            alpha: ExponentValue::Complex(ComplexScalar::new(1.5, 0.0)),
            x: Some(ScalarValue::Rational(int(2))),
            m: 2,
            coeffs: None,
        };
        assert!(matches!(
            verify_identity(
                IdentityId::Eq16,
                &complex_exp,
                ArithmeticMode::FloatStandard,
                1e-7
            ),
            Err(Error::InvalidParams(_))
        ));
        // exact mode needs exact inputs
        let float_x = IdentityParams {
            alpha: ExponentValue::Int(2),
            x: Some(ScalarValue::Complex(ComplexScalar::new(0.5, 1.0))),
            m: 2,
            coeffs: None,
        };
        assert!(matches!(
            verify_identity(IdentityId::Eq6, &float_x, ArithmeticMode::Exact, 0.0),
            Err(Error::InvalidParams(_))
        ));
        // m = 0
        assert!(matches!(
            verify_identity(
                IdentityId::Eq8,
                &exact_params(2, None, 0),
                ArithmeticMode::Exact,
                0.0
            ),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn coefficient_identity_runs_in_all_modes() {
        let params = IdentityParams {
            alpha: ExponentValue::Int(2),
            x: None,
            m: 3,
            coeffs: Some(Sequence::Rational(vec![int(1), int(2), int(3)])),
        };
        let exact =
            verify_identity(IdentityId::Lemma4, &params, ArithmeticMode::Exact, 0.0).unwrap();
        assert!(exact.pass);
        assert_eq!(exact.lhs, ReportValue::Rational(int(36)));
        for mode in [ArithmeticMode::FloatStandard, ArithmeticMode::FloatExtended] {
            let report =
                verify_identity(IdentityId::Lemma4, &params, mode, mode.default_tol()).unwrap();
            assert!(report.pass, "{mode}: rel_err = {}", report.rel_err);
        }
    }

    #[test]
    fn float_modes_pass_on_complex_arguments() {
        let params = IdentityParams {
            alpha: ExponentValue::Complex(ComplexScalar::new(-1.7, 2.3)),
            x: Some(ScalarValue::Complex(ComplexScalar::new(0.4, -1.1))),
            m: 9,
            coeffs: None,
        };
        let std = verify_identity(
            IdentityId::Eq6,
            &params,
            ArithmeticMode::FloatStandard,
            1e-7,
        )
        .unwrap();
        assert!(std.pass, "standard rel_err = {}", std.rel_err);
        let ext = verify_identity(
            IdentityId::Eq6,
            &params,
            ArithmeticMode::FloatExtended,
            1e-10,
        )
        .unwrap();
        assert!(ext.pass, "extended rel_err = {}", ext.rel_err);
        assert!(ext.rel_err <= std.rel_err.max(1e-25));
    }

    #[test]
    fn identity_ids_round_trip_their_names() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert!("EQ7".parse::<IdentityId>().is_err());
    }
}
