//! `mscale profile`: one multiscale profile as CSV rows `tau,entropy,defined`.

use std::io::Write;
use std::path::Path;

use mscale_core::{multiscale_profile, EntropyValue, MultiscaleProfile};

use crate::commands::StageTimer;
use crate::csvio::{cell, create_output, read_signal, Manifest};
use crate::errors::CliError;
use crate::flags::ProfileFlags;

pub fn write_profile_rows(
    w: &mut impl Write,
    profile: &MultiscaleProfile,
) -> Result<(), CliError> {
    writeln!(w, "tau,entropy,defined").map_err(CliError::from)?;
    for (tau, value) in profile.entries() {
        let (entropy, defined) = match value {
            EntropyValue::Finite(v) => (cell(Some(*v)), 1),
            EntropyValue::Undefined(_) => (cell(None), 0),
        };
        writeln!(w, "{tau},{entropy},{defined}").map_err(CliError::from)?;
    }
    Ok(())
}

pub fn run(input: &Path, flags: &ProfileFlags, out: &Path) -> Result<(), CliError> {
    let mut timer = StageTimer::new();
    let config = flags.to_config()?;
    let signal = read_signal(input)?;
    timer.stage("load");

    let profile = multiscale_profile(&signal, &config)?;
    timer.stage("compute");

    let mut manifest = Manifest::new();
    manifest.push("input", input.display());
    flags.describe(&mut manifest);
    manifest.push("tolerance_used", profile.tolerance_used());
    let mut w = create_output(out, &manifest)?;
    write_profile_rows(&mut w, &profile)?;
    w.flush()?;
    timer.stage("write");
    timer.report();
    Ok(())
}
