//! `mscale entropy`: single-scale entropy of one signal, printed to stdout.
//! Undefined outcomes print as `undefined:<cause>` and still exit 0.

use std::path::Path;

use mscale_core::{fuzzy_entropy, sample_entropy, EntropyValue, Error};

use crate::commands::StageTimer;
use crate::csvio::read_signal;
use crate::errors::CliError;
use crate::flags::{EntropyFlags, EstimatorArg};

pub fn run(input: &Path, estimator: EstimatorArg, flags: &EntropyFlags) -> Result<(), CliError> {
    let mut timer = StageTimer::new();
    let params = flags.to_params()?;
    let signal = read_signal(input)?;
    timer.stage("load");

    let result = match estimator {
        EstimatorArg::Sample => sample_entropy(&signal, &params),
        EstimatorArg::Fuzzy => fuzzy_entropy(&signal, &params),
    };
    let value = match result {
        Ok(v) => v,
        // Too few samples to form templates is an undefined outcome here,
        // not a usage error.
        Err(Error::TooShort { .. }) => {
            EntropyValue::Undefined(mscale_core::UndefinedCause::TooShort)
        }
        Err(e) => return Err(e.into()),
    };
    timer.stage("compute");

    match value {
        EntropyValue::Finite(v) => println!("{v}"),
        EntropyValue::Undefined(cause) => println!("undefined:{}", cause.token()),
    }
    timer.report();
    Ok(())
}
