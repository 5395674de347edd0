//! `powersum sweep`: randomized float-mode verification over seeded draws.
//! Rows are emitted in draw order; a fixed seed reproduces the output byte
//! for byte.

use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use powersum_core::{
    verify_identity, ComplexScalar, ExponentValue, IdentityId, IdentityParams, IdentityReport,
    ScalarValue, Sequence,
};

use crate::literal::{parse_exponent, parse_scalar};
use crate::render;
use crate::{CliError, CliResult, FormatArg, ModeArg, SweepArgs};

/// Identities swept by `all`: the ones defined for complex exponents. The two
/// integer-exponent identities can be swept by name.
const ALL_TARGETS: [IdentityId; 9] = [
    IdentityId::Lemma4,
    IdentityId::Eq6,
    IdentityId::Eq8,
    IdentityId::Eq10,
    IdentityId::Eq13,
    IdentityId::Eq17,
    IdentityId::Eq20,
    IdentityId::Eq23,
    IdentityId::Eq24,
];

fn draw_in_range(rng: &mut ChaCha8Rng, bound: f64) -> f64 {
    if bound <= 0.0 {
        0.0
    } else {
        rng.random_range(-bound..=bound)
    }
}

/// Weight base from the disk |x| <= bound, kept a guard distance away from
/// the closed form's pole when the identity has one.
fn draw_x(rng: &mut ChaCha8Rng, bound: f64, id: IdentityId) -> ComplexScalar {
    loop {
        let re = draw_in_range(rng, bound);
        let im = draw_in_range(rng, bound);
        let x = ComplexScalar::new(re, im);
        if x.norm() > bound {
            continue;
        }
        let clear = match id {
            IdentityId::Eq16 => (x - 1.0).norm() >= 0.25,
            IdentityId::Eq17 | IdentityId::Eq19 => (x + 1.0).norm() >= 0.25,
            _ => true,
        };
        if clear {
            return x;
        }
    }
}

fn draw_exponent(rng: &mut ChaCha8Rng, bound: f64, id: IdentityId) -> ExponentValue {
    match id {
        IdentityId::Eq16 => {
            let hi = bound.floor().max(0.0) as i64;
            ExponentValue::Int(rng.random_range(0..=hi))
        }
        IdentityId::Eq19 => {
            let hi = bound.floor().max(1.0) as i64;
            ExponentValue::Int(rng.random_range(1..=hi))
        }
        _ => ExponentValue::Complex(ComplexScalar::new(
            draw_in_range(rng, bound),
            draw_in_range(rng, bound),
        )),
    }
}

pub fn run(args: SweepArgs) -> CliResult {
    if args.mode == ModeArg::Exact {
        return Err(CliError::Usage(
            "sweep runs in the float modes; use verify for exact checks".into(),
        ));
    }
    let mode = args.mode.arithmetic();
    let tol = args.tol.unwrap_or_else(|| mode.default_tol());
    if args.draws < 1 {
        return Err(CliError::Usage("--draws must be >= 1".into()));
    }
    if args.m_max < 1 {
        return Err(CliError::Usage("--m-max must be >= 1".into()));
    }

    let targets: Vec<IdentityId> = if args.target.eq_ignore_ascii_case("all") {
        ALL_TARGETS.to_vec()
    } else {
        vec![args.target.parse::<IdentityId>()?]
    };

    let pinned_alpha = match &args.alpha {
        Some(raw) => Some(parse_exponent(raw).map_err(CliError::Usage)?),
        None => None,
    };
    let pinned_x = match &args.x {
        Some(raw) => Some(parse_scalar(raw).map_err(CliError::Usage)?),
        None => None,
    };

    let seed = args.seed.unwrap_or_else(|| rand::rng().random());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut rows: Vec<IdentityReport> = Vec::with_capacity(targets.len() * args.draws as usize);
    for &id in &targets {
        for _ in 0..args.draws {
            let m = rng.random_range(1..=args.m_max);
            let alpha = match &pinned_alpha {
                Some(a) => {
                    if id.requires_integer_exponent() && a.as_int().is_none() {
                        return Err(CliError::Usage(format!("{id} requires an integer --alpha")));
                    }
                    *a
                }
                None => draw_exponent(&mut rng, args.alpha_bound, id),
            };
            let x = if id.uses_x() {
                Some(match &pinned_x {
                    Some(v) => v.clone(),
                    None => ScalarValue::Complex(draw_x(&mut rng, args.x_bound, id)),
                })
            } else {
                None
            };
            let coeffs = if id.uses_coeffs() {
                let entries = (0..m)
                    .map(|_| {
                        ComplexScalar::new(
                            draw_in_range(&mut rng, 1.0),
                            draw_in_range(&mut rng, 1.0),
                        )
                    })
                    .collect();
                Some(Sequence::Complex(entries))
            } else {
                None
            };
            let params = IdentityParams {
                alpha,
                x,
                m,
                coeffs,
            };
            rows.push(verify_identity(id, &params, mode, tol)?);
        }
    }

    match args.format {
        FormatArg::Csv => {
            println!("{}", render::CSV_HEADER);
            for row in &rows {
                println!("{}", render::csv_row(row));
            }
        }
        FormatArg::Json => println!("{}", render::json_document(&rows)),
        FormatArg::Text => {
            for row in &rows {
                println!("{}", render::text_row(row, args.precision));
            }
            println!("{}", render::summary_line(&rows));
        }
    }

    if rows.iter().all(|r| r.pass) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
