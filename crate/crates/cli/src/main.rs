use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use vcdim_cli::{run_classify, run_corpus, run_validate, EXIT_OK, EXIT_PARSE};

/// Virtually cyclic geometric dimension of closed 3-manifold groups.
#[derive(Parser)]
#[command(name = "vcdim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute gdvc for one description file.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Print the full justification chain.
        #[arg(long)]
        trace: bool,
    },
    /// Check a description without computing its dimension.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Classify every .json file in a directory and compare with expected values.
    Corpus {
        dir: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE } else { EXIT_OK });
        }
    };
    let outcome = match cli.command {
        Command::Classify { file, json, trace } => run_classify(&file, json, trace),
        Command::Validate { file, json } => run_validate(&file, json),
        Command::Corpus { dir, json } => run_corpus(&dir, json),
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code)
}
