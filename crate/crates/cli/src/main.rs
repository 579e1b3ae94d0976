use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use zariski_cli::{run, Options};

/// Exact computations in the Zariski lattice and structure sheaf of a ring.
#[derive(Parser, Debug)]
#[command(name = "zariski", version)]
struct Args {
    /// One of: normalize, lat-eq, lat-leq, join, meet, support-check,
    /// cover-check, is-basic, loc-eq, restrict, glue, section-eq,
    /// top-roundtrip, lemma2-test, sheaf-test, verify-cert
    command: String,
    /// JSON job file
    #[arg(long)]
    job: PathBuf,
    /// Seed for randomized suites; overrides the job's seed
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random samples; overrides the job's count
    #[arg(long)]
    samples: Option<usize>,
    /// Print intermediate certificates
    #[arg(long)]
    verbose_certs: bool,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let text = match std::fs::read_to_string(&args.job) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.job.display());
            return ExitCode::from(2);
        }
    };
    let opts = Options {
        seed: args.seed,
        samples: args.samples,
        verbose_certs: args.verbose_certs,
    };
    let out = run(&args.command, &text, &opts);
    if out.code >= 2 {
        eprint!("{}", out.text);
    } else {
        print!("{}", out.text);
    }
    ExitCode::from(out.code as u8)
}
