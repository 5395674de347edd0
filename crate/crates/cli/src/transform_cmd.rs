//! `powersum transform`: binomial transform and its inverse on sequence
//! literals. Rational sequences stay exact; any float entry moves the whole
//! sequence to complex arithmetic.

use std::process::ExitCode;

use powersum_core::{binomial_transform, binomial_transform_inverse, Sequence};

use crate::literal::parse_sequence;
use crate::render;
use crate::{CliError, CliResult, Direction, FormatArg, TransformArgs};

pub fn run(args: TransformArgs) -> CliResult {
    let seq = parse_sequence(&args.seq).map_err(CliError::Usage)?;
    let transformed = match seq {
        Sequence::Rational(v) => Sequence::Rational(match args.dir {
            Direction::Forward => binomial_transform(&v),
            Direction::Inverse => binomial_transform_inverse(&v),
        }),
        Sequence::Complex(v) => Sequence::Complex(match args.dir {
            Direction::Forward => binomial_transform(&v),
            Direction::Inverse => binomial_transform_inverse(&v),
        }),
    };
    let rendered = render::sequence(&transformed, args.precision);
    match args.format {
        FormatArg::Text | FormatArg::Csv => println!("{rendered}"),
        FormatArg::Json => println!("{}", serde_json::json!({ "value": rendered })),
    }
    Ok(ExitCode::SUCCESS)
}
