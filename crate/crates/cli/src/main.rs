use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pmha_cli::{
    exit_code, explain, list_builtin, render_human, render_machine, run_scenario, CliError, RunOptions, Scenario, BUNDLED,
    EXIT_ERROR,
};

#[derive(Parser)]
#[command(name = "pmha", version, about = "Verify multiplier Hopf algebra scenarios")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file, or a bundled one given as scenario:<name>.
    Run {
        scenario: String,
        /// Window radius for infinite groups.
        #[arg(long)]
        window: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Machine)]
        format: Format,
        /// Include per-check wall-clock times.
        #[arg(long)]
        timing: bool,
    },
    /// List built-in groups, instances, actions, coactions, checks and scenarios.
    List,
    /// Describe a check kind.
    Explain { check: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Machine,
    Human,
}

fn load(target: &str) -> Result<Scenario, CliError> {
    match target.strip_prefix("scenario:") {
        Some(name) => BUNDLED
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| CliError::Reference(format!("no bundled scenario '{name}'")))
            .and_then(|(_, text)| Scenario::parse(text)),
        None => Scenario::load(std::path::Path::new(target)),
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::List => {
            for name in list_builtin() {
                println!("{name}");
            }
            Ok(0)
        }
        Command::Explain { check } => match explain(&check) {
            Some(text) => {
                println!("{check}: {text}");
                Ok(0)
            }
            None => Err(CliError::Reference(format!("unknown check kind '{check}'"))),
        },
        Command::Run { scenario, window, seed, out, format, timing } => {
            let s = load(&scenario)?;
            let report = run_scenario(&s, &RunOptions { window, seed, timing })?;
            let text = match format {
                Format::Machine => render_machine(&report),
                Format::Human => render_human(&report),
            };
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(exit_code(report.outcome))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("pmha: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
