//! `powersum verify`: check identities at explicit parameters.

use std::process::ExitCode;

use powersum_core::{verify_identity, IdentityId, IdentityParams, IdentityReport};

use crate::literal::{parse_exponent, parse_scalar, parse_sequence};
use crate::render;
use crate::{CliError, CliResult, FormatArg, VerifyArgs};

/// Identities checked by `verify all`, in catalog order. The coefficient-sum
/// identity joins only when an explicit sequence is supplied.
const ALL_TARGETS: [IdentityId; 10] = [
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

fn build_params(id: IdentityId, args: &VerifyArgs, all: bool) -> Result<IdentityParams, CliError> {
    // the exponent flag: --n for EQ16 and --r for EQ19 when given singly,
    // --alpha otherwise
    let exponent_src = if all {
        args.alpha.as_deref()
    } else {
        match id {
            IdentityId::Eq16 => args.n.as_deref().or(args.alpha.as_deref()),
            IdentityId::Eq19 => args.r.as_deref().or(args.alpha.as_deref()),
            _ => args.alpha.as_deref(),
        }
    };
    let exponent_flag = match (all, id) {
        (false, IdentityId::Eq16) => "n",
        (false, IdentityId::Eq19) => "r",
        _ => "alpha",
    };
    let alpha = parse_exponent(
        exponent_src.ok_or_else(|| CliError::Usage(format!("{id} requires --{exponent_flag}")))?,
    )
    .map_err(CliError::Usage)?;

    // the summation limit: EQ19 also accepts --n when given singly
    let m = if !all && id == IdentityId::Eq19 {
        match (&args.n, args.m) {
            (Some(n), None) => n
                .parse::<u32>()
                .map_err(|_| CliError::Usage("EQ19 limit --n must be a positive integer".into()))?,
            (_, Some(m)) => m,
            (None, None) => return Err(CliError::Usage("EQ19 requires --n or --m".into())),
        }
    } else {
        args.m
            .ok_or_else(|| CliError::Usage(format!("{id} requires --m")))?
    };

    let x = if id.uses_x() {
        let raw = args
            .x
            .as_deref()
            .ok_or_else(|| CliError::Usage(format!("{id} requires --x")))?;
        Some(parse_scalar(raw).map_err(CliError::Usage)?)
    } else {
        None
    };

    let coeffs = if id.uses_coeffs() {
        let raw = args
            .coeffs
            .as_deref()
            .ok_or_else(|| CliError::Usage(format!("{id} requires --coeffs")))?;
        Some(parse_sequence(raw).map_err(CliError::Usage)?)
    } else {
        None
    };

    Ok(IdentityParams {
        alpha,
        x,
        m,
        coeffs,
    })
}

pub fn run(args: VerifyArgs) -> CliResult {
    let mode = args.mode.arithmetic();
    let tol = args.tol.unwrap_or_else(|| mode.default_tol());

    let targets: Vec<IdentityId> = if args.target.eq_ignore_ascii_case("all") {
        let mut ids = Vec::new();
        if args.coeffs.is_some() {
            ids.push(IdentityId::Lemma4);
        }
        ids.extend(ALL_TARGETS);
        ids
    } else {
        vec![args.target.parse::<IdentityId>()?]
    };
    let all = targets.len() > 1;

    let mut rows: Vec<IdentityReport> = Vec::with_capacity(targets.len());
    for id in &targets {
        // in `all` runs, identities needing an integer exponent are skipped
        // when the exponent is complex rather than failing the batch
        let params = build_params(*id, &args, all)?;
        if all && id.requires_integer_exponent() && params.alpha.as_int().is_none() {
            continue;
        }
        rows.push(verify_identity(*id, &params, mode, tol)?);
    }

    match args.format {
        FormatArg::Text => {
            for row in &rows {
                println!("{}", render::text_row(row, args.precision));
            }
            println!("{}", render::summary_line(&rows));
        }
        FormatArg::Json => println!("{}", render::json_document(&rows)),
        FormatArg::Csv => {
            println!("{}", render::CSV_HEADER);
            for row in &rows {
                println!("{}", render::csv_row(row));
            }
        }
    }

    if rows.iter().all(|r| r.pass) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
