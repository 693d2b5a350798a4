//! File formats, reports and the `oklab` command line for `oklab-core`.

pub mod cli;
pub mod commands;
pub mod error;
pub mod format;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use oklab_core::limits;

use crate::cli::Cli;
use crate::error::CliError;

/// Environment variable holding the enumeration memory budget in MiB.
pub const MEMORY_LIMIT_VAR: &str = "OKLAB_MEMORY_LIMIT_MB";

fn configure(cli: &Cli) -> Result<(), CliError> {
    if let Ok(v) = std::env::var(MEMORY_LIMIT_VAR) {
        let mb: usize = v
            .trim()
            .parse()
            .map_err(|_| CliError::invalid(format!("{MEMORY_LIMIT_VAR}: expected a number of MiB, found {v:?}")))?;
        limits::set_max_points(limits::points_for_megabytes(mb));
    }
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::invalid(format!("--threads: {e}")))?;
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<bool, CliError> {
    configure(cli)?;
    let outcome = commands::run(&cli.command, cli.bound)?;
    let text = outcome.report.render(cli.format)?;
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path.display().to_string(), e))?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::io("stdout", e))?;
        }
    }
    Ok(outcome.passed)
}

/// Runs the command line and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(true) => 0,
        Ok(false) => 4,
        Err(e) => {
            eprintln!("oklab: {e}");
            e.exit_code()
        }
    }
}
