use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use autz::cli::{self, Format};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "autz", about = "Exact homology computations for quotients (C x E)/G")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one case file (JSON).
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Recompute a table of minimal cases: `a1` (abelian G) or `a2` (sporadic G).
    Reproduce {
        table: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Reduce a monodromy to a minimal one, printing each step.
    Simplify { file: PathBuf },
    /// List the tabulated cases.
    Catalog {
        #[arg(long)]
        list: Option<u8>,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let out = match args.command {
        Command::Analyze { file, format } => cli::cmd_analyze(&file, format),
        Command::Reproduce { table, format } => cli::cmd_reproduce(&table, format),
        Command::Simplify { file } => cli::cmd_simplify(&file),
        Command::Catalog { list } => cli::cmd_catalog(list),
    };
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
