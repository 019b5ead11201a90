//! Library side of the `lincomp` command. The binary only parses arguments
//! and maps errors to exit codes; everything testable lives here.

pub mod bench;
pub mod error;
pub mod input;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use error::{CliError, CliResult};
pub use input::{parse_sequence, parse_sequence_file};
pub use report::{AnalysisReport, AnalyzeOptions};

/// Linear complexity of periodic sequences over GF(q) with period qⁿpᵐ.
#[derive(Parser, Debug)]
#[command(name = "lincomp", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the linear complexity and minimal polynomial of one period
    Analyze(AnalyzeArgs),
    /// Time the fast algorithm over a grid of period shapes, CSV on stdout
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// Field size (a prime)
    #[arg(long)]
    pub q: u64,

    /// Text file holding one period as integers separated by whitespace or commas
    #[arg(long)]
    pub input: PathBuf,

    /// Cross-check against the gcd oracle and Berlekamp-Massey; exit 2 on mismatch
    #[arg(long)]
    pub verify: bool,

    /// Print the report as JSON instead of aligned text
    #[arg(long)]
    pub json: bool,

    /// Corrupt the fast result before verification (self-test of --verify)
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long)]
    pub q: u64,

    /// Second prime of the period; q must be a primitive root modulo p²
    #[arg(long)]
    pub p: u64,

    /// Inclusive range of exponents of q, e.g. 1..3
    #[arg(long, value_parser = bench::parse_range)]
    pub n_range: std::ops::RangeInclusive<u32>,

    /// Inclusive range of exponents of p, e.g. 1..6
    #[arg(long, value_parser = bench::parse_range)]
    pub m_range: std::ops::RangeInclusive<u32>,

    /// Random sequences per shape
    #[arg(long)]
    pub trials: usize,

    /// Also time Berlekamp-Massey (only for N up to 10^4)
    #[arg(long)]
    pub with_bm: bool,

    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    /// Refuse grids containing a longer period
    #[arg(long, default_value_t = 1 << 24)]
    pub max_len: usize,

    /// Worker threads; 0 uses one per core. Use 1 for the quietest timings.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

pub fn run_analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> CliResult<()> {
    let s = parse_sequence_file(&args.input, args.q)?;
    let opts = AnalyzeOptions {
        verify: args.verify,
        inject_fault: args.inject_fault,
    };
    let analysis = report::analyze(&s, opts)?;
    let text = if args.json {
        analysis.report.to_json() + "\n"
    } else {
        analysis.report.to_text()
    };
    out.write_all(text.as_bytes()).map_err(stdout_error)?;
    analysis.verification
}

pub fn run_bench(args: &BenchArgs, out: &mut dyn Write) -> CliResult<()> {
    let cfg = bench::BenchConfig {
        q: args.q,
        p: args.p,
        n_range: args.n_range.clone(),
        m_range: args.m_range.clone(),
        trials: args.trials,
        with_bm: args.with_bm,
        seed: args.seed,
        max_len: args.max_len,
        bm_max_len: bench::BM_MAX_LEN,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.threads)
        .build()
        .map_err(|e| lincomp_core::Error::Usage(format!("cannot start worker threads: {e}")))?;
    let rows = pool.install(|| bench::run(&cfg))?;
    out.write_all(bench::to_csv(&cfg, &rows).as_bytes())
        .map_err(stdout_error)
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Analyze(args) => run_analyze(args, out),
        Command::Bench(args) => run_bench(args, out),
    }
}

fn stdout_error(source: std::io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}
