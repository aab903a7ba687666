//! Command-line front end: parsers for the text syntax and the `nsl`
//! subcommands as library functions.

pub mod commands;
pub mod syntax;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use nsl_core::nlogic::Semantics;
use nsl_core::nsets::Extremum;

pub use commands::{Outcome, EXIT_DISAGREE, EXIT_OK, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(name = "nsl", version, about = "Exact neutrosophic logic over the rational functions in X")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SemanticsArg {
    Corrected,
    Original,
    Clamped,
}

impl From<SemanticsArg> for Semantics {
    fn from(s: SemanticsArg) -> Semantics {
        match s {
            SemanticsArg::Corrected => Semantics::Corrected,
            SemanticsArg::Original => Semantics::Original,
            SemanticsArg::Clamped => Semantics::Clamped,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Inf,
    Sup,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DemoArg {
    Paradox,
    Nonclosure,
    MonadVsInterval,
    #[value(name = "def1-vs-def2")]
    Def1VsDef2,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a formula in an environment file
    Eval {
        #[arg(long)]
        env: std::path::PathBuf,
        #[arg(long)]
        formula: String,
        /// Defaults to the file's `@semantics` line, else corrected
        #[arg(long, value_enum)]
        semantics: Option<SemanticsArg>,
    },
    /// Randomized check that the connectives stay inside the unit interval
    ClosureCheck {
        #[arg(long)]
        iters: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "corrected")]
        semantics: SemanticsArg,
    },
    /// Refute a candidate infimum or supremum of a monad
    Refute {
        #[arg(long, allow_hyphen_values = true)]
        center: String,
        #[arg(long, allow_hyphen_values = true)]
        candidate: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value = "1/X", allow_hyphen_values = true)]
        eps: String,
    },
    /// Replay a counterexample and check it
    Demo {
        #[arg(value_enum)]
        name: DemoArg,
    },
    /// Classify a field element
    Calc {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                },
            };
        }
    };
    match cli.command {
        Command::Eval { env, formula, semantics } => match std::fs::read_to_string(&env) {
            Ok(text) => commands::cmd_eval(&text, &formula, semantics.map(Into::into)),
            Err(e) => Outcome::usage(format!("{}: {e}", env.display())),
        },
        Command::ClosureCheck { iters, seed, semantics } => commands::cmd_closure_check(iters, seed, semantics.into()),
        Command::Refute {
            center,
            candidate,
            mode,
            eps,
        } => {
            let mode = match mode {
                ModeArg::Inf => Extremum::Infimum,
                ModeArg::Sup => Extremum::Supremum,
            };
            commands::cmd_refute(&center, &candidate, mode, &eps)
        }
        Command::Demo { name } => {
            let name = name.to_possible_value().expect("no skipped variants");
            commands::cmd_demo(name.get_name())
        }
        Command::Calc { expr } => commands::cmd_calc(&expr),
    }
}
