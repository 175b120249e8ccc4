use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ellgenus_cli::{execute, parse_list, render, CliError, Command, Format, Settings};

#[derive(Parser)]
#[command(name = "ellgenus", version, about = "Chern numbers and elliptic genera of zero loci in G/P")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Cartan matrix and positive roots
    Roots(Flags),
    /// Minimal coset representatives of W / W_P
    Cosets(Flags),
    /// All Chern numbers without c1
    ChernTable(Flags),
    /// Line degree with factorization, and c_top
    Degrees(Flags),
    /// Elliptic genus in the weak Jacobi basis
    Genus(Flags),
    /// Full reproduction suite for the two F4 17-folds
    Verify(Flags),
}

#[derive(Args)]
struct Flags {
    /// Dynkin type, e.g. F4
    #[arg(long = "type")]
    dynkin: Option<String>,
    /// Crossed nodes, 1-based, comma separated
    #[arg(long)]
    cross: Option<String>,
    /// Highest weight of the bundle in fundamental-weight coordinates
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Genus and basis truncation in q [default: 1]
    #[arg(long)]
    q_order: Option<usize>,
    /// Seed for the generic point [default: 0]
    #[arg(long)]
    seed: Option<u64>,
    /// Output format [default: md]
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads for localization
    #[arg(long)]
    threads: Option<usize>,
    /// Job file with `key = value` lines; flags override it
    #[arg(long)]
    job: Option<PathBuf>,
    /// Include wall-clock stage timings in the output
    #[arg(long)]
    timings: bool,
}

impl Flags {
    fn settings(&self) -> Result<Settings, CliError> {
        let flags = Settings {
            dynkin: self.dynkin.clone(),
            cross: self.cross.as_deref().map(|s| parse_list(s, "node")).transpose()?,
            weight: self.weight.as_deref().map(|s| parse_list(s, "weight")).transpose()?,
            q_order: self.q_order,
            seed: self.seed,
            format: self.format,
            threads: self.threads,
        };
        let base = match &self.job {
            Some(p) => Settings::from_job_file(p)?,
            None => Settings::default(),
        };
        Ok(flags.over(base))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (cmd, flags) = match &cli.command {
        Cmd::Roots(f) => (Command::Roots, f),
        Cmd::Cosets(f) => (Command::Cosets, f),
        Cmd::ChernTable(f) => (Command::ChernTable, f),
        Cmd::Degrees(f) => (Command::Degrees, f),
        Cmd::Genus(f) => (Command::Genus, f),
        Cmd::Verify(f) => (Command::Verify, f),
    };
    let job = flags.settings()?.resolve()?;
    if let Some(n) = job.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let bundle = execute(cmd, &job, flags.timings)?;
    let text = render(&bundle, job.format)?;
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes()).map_err(|e| CliError::Math(e.to_string()))?;
    let failed = bundle.failed_criteria();
    if !failed.is_empty() {
        let names: Vec<String> = failed.iter().map(|c| format!("{} ({})", c.criterion, c.name)).collect();
        return Err(CliError::Math(format!("failed criteria: {}", names.join(", "))));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
