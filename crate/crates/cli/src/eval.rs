//! `powersum eval`: single-value evaluation.

use std::process::ExitCode;

use powersum_core::{
    eulerian_polynomial, harmonic, sigma_polynomial, stirling1_unsigned, stirling2_exact,
    stirling_function, stirling_function_exact, ComplexDd, EvalContext, ExponentValue, Precision,
    ScalarValue,
};

use crate::literal::{parse_exponent, parse_scalar};
use crate::render;
use crate::{CliError, CliResult, EvalArgs, EvalTarget, FormatArg, ModeArg};

fn require<T>(v: Option<T>, flag: &str, target: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{target} requires --{flag}")))
}

fn emit(value: String, format: FormatArg) -> CliResult {
    match format {
        FormatArg::Text => println!("{value}"),
        FormatArg::Json => println!("{}", serde_json::json!({ "value": value })),
        FormatArg::Csv => println!("value\n{value}"),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn run(args: EvalArgs) -> CliResult {
    let sig = args.precision;
    match args.target {
        EvalTarget::StirlingFunction => {
            let alpha = parse_exponent(&require(args.alpha, "alpha", "stirling-function")?)
                .map_err(CliError::Usage)?;
            let k = require(args.k, "k", "stirling-function")?;
            if k < 1 {
                return Err(CliError::Usage("k must be >= 1".into()));
            }
            match args.mode {
                ModeArg::Exact => {
                    let ExponentValue::Int(a) = alpha else {
                        return Err(CliError::Usage(
                            "exact mode requires an integer --alpha".into(),
                        ));
                    };
                    emit(stirling_function_exact(a, k).to_string(), args.format)
                }
                mode => {
                    let ctx = EvalContext {
                        precision: mode.precision(),
                    };
                    let v = stirling_function(alpha.to_complex(), k, &ctx)?;
                    let rendered = match args.format {
                        FormatArg::Text => render::complex(v, sig),
                        _ => render::complex_full(v),
                    };
                    emit(rendered, args.format)
                }
            }
        }
        EvalTarget::Stirling1 => {
            let m = require(args.m, "m", "stirling1")?;
            let k = require(args.k, "k", "stirling1")?;
            if m < 1 || k < 1 {
                return Err(CliError::Usage(
                    "stirling1 requires m >= 1 and k >= 1".into(),
                ));
            }
            emit(stirling1_unsigned(m, k).to_string(), args.format)
        }
        EvalTarget::Stirling2 => {
            let n = require(args.n, "n", "stirling2")?;
            let k = require(args.k, "k", "stirling2")?;
            if n < 1 || k < 1 {
                return Err(CliError::Usage(
                    "stirling2 requires n >= 1 and k >= 1".into(),
                ));
            }
            emit(stirling2_exact(n, k).to_string(), args.format)
        }
        EvalTarget::Eulerian => {
            let n = require(args.n, "n", "eulerian")?;
            let coeffs = eulerian_polynomial(n)
                .coefficients()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            emit(coeffs, args.format)
        }
        EvalTarget::Harmonic => {
            let k = require(args.k, "k", "harmonic")?;
            if k < 1 {
                return Err(CliError::Usage("k must be >= 1".into()));
            }
            emit(harmonic(k).to_string(), args.format)
        }
        EvalTarget::Sigma => {
            let x = parse_scalar(&require(args.x, "x", "sigma")?).map_err(CliError::Usage)?;
            let m = require(args.m, "m", "sigma")?;
            let j = require(args.j, "j", "sigma")?;
            if !(1 <= j && j <= m) {
                return Err(CliError::Usage("sigma requires 1 <= j <= m".into()));
            }
            match x {
                ScalarValue::Rational(q) => {
                    emit(sigma_polynomial(&q, m, j).to_string(), args.format)
                }
                ScalarValue::Complex(z) => {
                    let v = match args.mode.precision() {
                        Precision::Standard => sigma_polynomial(&z, m, j),
                        Precision::Extended => {
                            sigma_polynomial(&ComplexDd::from_complex(z), m, j).to_complex()
                        }
                    };
                    let rendered = match args.format {
                        FormatArg::Text => render::complex(v, sig),
                        _ => render::complex_full(v),
                    };
                    emit(rendered, args.format)
                }
            }
        }
    }
}
