//! Command runner behind the `zariski` binary.
//!
//! Exit codes: 0 success or true, 1 checked false, 2 usage or parse
//! error, 3 internal invariant violation.

mod commands;
pub mod job;

use std::panic::{catch_unwind, AssertUnwindSafe};

pub use job::Job;

pub const COMMANDS: &[&str] = &[
    "normalize",
    "lat-eq",
    "lat-leq",
    "join",
    "meet",
    "support-check",
    "cover-check",
    "is-basic",
    "loc-eq",
    "restrict",
    "glue",
    "section-eq",
    "top-roundtrip",
    "lemma2-test",
    "sheaf-test",
    "verify-cert",
];

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] zariski::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(zariski::Error::Internal(_)) => 3,
            CliError::Core(_) => 2,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub verbose_certs: bool,
}

/// Report text and exit code of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn error(e: &CliError) -> Self {
        Outcome {
            text: format!("error: {e}\n"),
            code: e.exit_code(),
        }
    }
}

/// Runs `command` on the job file contents. Never panics; a panic in the
/// library is reported with exit code 3.
pub fn run(command: &str, job_text: &str, opts: &Options) -> Outcome {
    let result = catch_unwind(AssertUnwindSafe(|| {
        let job = Job::parse(job_text)?;
        commands::dispatch(command, &job, opts)
    }));
    match result {
        Ok(Ok(out)) => out,
        Ok(Err(e)) => Outcome::error(&e),
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| panic.downcast_ref::<&str>().copied())
                .unwrap_or("panic");
            Outcome {
                text: format!("internal error: {msg}\n"),
                code: 3,
            }
        }
    }
}
