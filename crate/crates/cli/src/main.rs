//! `rectcomp` command-line interface.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage error, 3 enumeration guard
//! exceeded.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CliError, Status};

#[derive(Debug, Parser)]
#[command(
    name = "rectcomp",
    version,
    about = "Compositions inside a rectangle, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rows of the (l+1)-nomial triangle.
    Triangle(commands::TriangleArgs),
    /// Count restricted compositions of n into k parts.
    Count(commands::CountArgs),
    /// Exact distributions of X and S with the normal reference.
    Dist(commands::DistArgs),
    /// Maximum |P[X=n] - P[S=n]| over the published l x m grid.
    Table1(commands::Table1Args),
    /// Kolmogorov-Smirnov distance of X to the normal law for several m.
    Normality(commands::NormalityArgs),
    /// Draw uniform compositions from the rectangle.
    Sample(commands::SampleArgs),
}

impl Command {
    fn output(&self) -> &output::OutputSpec {
        match self {
            Command::Triangle(a) => &a.out,
            Command::Count(a) => &a.out,
            Command::Dist(a) => &a.out,
            Command::Table1(a) => &a.out,
            Command::Normality(a) => &a.out,
            Command::Sample(a) => &a.out,
        }
    }
}

fn run(cli: &Cli) -> Result<Status, CliError> {
    let mut out = cli.command.output().writer()?;
    let status = match &cli.command {
        Command::Triangle(args) => commands::triangle(args, &mut out),
        Command::Count(args) => commands::count_cmd(args, &mut out),
        Command::Dist(args) => commands::dist(args, &mut out),
        Command::Table1(args) => commands::table1(args, &mut out),
        Command::Normality(args) => commands::normality(args, &mut out),
        Command::Sample(args) => commands::sample(args, &mut out),
    }?;
    out.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("rectcomp: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
