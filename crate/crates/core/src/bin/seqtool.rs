use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use trinomial::cli::{
    cmd_bench, cmd_check, cmd_gen, cmd_oeis_verify, cmd_table1, parse_range, BenchMethodKind, CliConfig, CmdOutput,
    OutputFormat, EXIT_USAGE,
};
use trinomial::genfun::DEFAULT_ORDER;
use trinomial::sequences::{Family, SeqSpec, DEFAULT_ORACLE_BOUND};

/// Exact computation and verification of trinomial-coefficient sequences.
#[derive(Parser)]
#[command(name = "seqtool", version)]
struct Cli {
    /// Truncation order for generating-function checks.
    #[arg(long, global = true, env = "SEQTOOL_ORDER", default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Worker threads for identity checks.
    #[arg(long, global = true, env = "SEQTOOL_JOBS")]
    jobs: Option<usize>,
    /// Largest n the brute-force oracles may be asked for.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_BOUND)]
    oracle_bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpecArgs {
    /// CTC, MOTZKIN, TRINOMIAL_COL, ASSOC_CTC, M_ORDER_CTC or GENERALIZED_D.
    family: Family,
    /// Association parameter (ASSOC_CTC, M_ORDER_CTC).
    #[arg(long, default_value_t = 0)]
    p: usize,
    /// Exponent m in 1 + x + x^m (M_ORDER_CTC, GENERALIZED_D).
    #[arg(long, default_value_t = 2)]
    m_step: usize,
    /// Column of the trinomial triangle (TRINOMIAL_COL).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    column: i64,
}

impl SpecArgs {
    fn build(&self) -> Result<SeqSpec, String> {
        SeqSpec::new(self.family, self.p, self.m_step, self.column).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print terms of a sequence over an inclusive range such as 0..20.
    Gen {
        #[command(flatten)]
        spec: SpecArgs,
        /// Inclusive index range, e.g. 0..20.
        range: String,
        /// plain, csv or bfile.
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
    },
    /// Recompute the reference table of c^0, c^1 and 6c^2.
    Table1,
    /// Check identities (`all` or a comma list like EQ24,EQ41(p=2)) for 0..=N_MAX.
    Check { suite: String, n_max: usize },
    /// Verify a b-file against a sequence; file index i is term i - offset.
    OeisVerify {
        path: PathBuf,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        offset: i64,
    },
    /// Time the computation methods after checking they agree.
    Bench {
        #[command(flatten)]
        spec: SpecArgs,
        n_max: usize,
        /// Comma list of direct_sum, recurrence, oracle.
        #[arg(long, value_delimiter = ',', default_value = "direct_sum,recurrence")]
        methods: Vec<BenchMethodKind>,
        /// plain or csv.
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
    },
}

fn run(cli: Cli) -> Result<CmdOutput, String> {
    let mut config = CliConfig { order: cli.order, oracle_bound: cli.oracle_bound, jobs: cli.jobs, ..CliConfig::default() };
    Ok(match cli.command {
        Command::Gen { spec, range, format } => {
            cmd_gen(&spec.build()?, parse_range(&range).map_err(|e| e.to_string())?, format)
        }
        Command::Table1 => cmd_table1(),
        Command::Check { suite, n_max } => cmd_check(&suite, n_max, &config),
        Command::OeisVerify { path, spec, offset } => cmd_oeis_verify(&path, &spec.build()?, offset),
        Command::Bench { spec, n_max, methods, format } => {
            config.format = format;
            cmd_bench(&spec.build()?, n_max, &methods, &config)
        }
    })
}

fn main() -> ExitCode {
    let output = run(Cli::parse()).unwrap_or_else(|e| CmdOutput { stderr: format!("error: {e}\n"), code: EXIT_USAGE, ..Default::default() });
    print!("{}", output.stdout);
    eprint!("{}", output.stderr);
    ExitCode::from(output.code as u8)
}
