//! `pareto`: evaluate correspondences, sweep axioms, reproduce the worked
//! examples and search for deviations from the Pareto correspondence.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "pareto",
    version,
    about = "Exhaustive axiom checks for social choice correspondences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Worker threads for sweeps (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    workers: usize,

    /// Refuse domains with more profiles than this.
    #[arg(long, default_value_t = 2_000_000, global = true)]
    max_domain: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct RuleArgs {
    /// Rule name: pareto, tops, borda, plurality, copeland, all,
    /// dictator:<i>, or example:<k>[:variant].
    #[arg(long, conflicts_with = "table")]
    rule: Option<String>,

    /// Table correspondence JSON file.
    #[arg(long)]
    table: Option<PathBuf>,

    /// Display labels for the alternatives of a plain rule, e.g. "abcd".
    #[arg(long)]
    labels: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct SizeArgs {
    /// Number of alternatives.
    #[arg(long)]
    m: Option<usize>,

    /// Number of individuals.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print G(u) for one profile, e.g. "xyz|yzx|zxy".
    Eval {
        #[command(flatten)]
        rule: RuleArgs,
        #[arg(long)]
        profile: String,
    },
    /// Sweep one rule against a list of axioms.
    Check {
        #[command(flatten)]
        rule: RuleArgs,
        #[command(flatten)]
        size: SizeArgs,
        /// Comma-separated axiom names, or "all".
        #[arg(long, visible_alias = "axiom", default_value = "all")]
        axioms: String,
    },
    /// Sweep several rules against a list of axioms.
    Matrix {
        /// Comma-separated rule names.
        #[arg(long, default_value = "pareto,tops,borda,plurality,copeland")]
        rules: String,
        #[arg(long)]
        labels: Option<String>,
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long, visible_alias = "axiom", default_value = "all")]
        axioms: String,
    },
    /// Re-derive every claim about worked example k (1 to 11).
    Example { k: u8 },
    /// Check a rule against theorem k (1 to 4).
    Theorem {
        k: u8,
        #[command(flatten)]
        rule: RuleArgs,
        #[command(flatten)]
        size: SizeArgs,
    },
    /// Search for deviations of G_P that keep a list of axioms.
    Search {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long, visible_alias = "axiom")]
        axioms: String,
        #[arg(long, value_enum, default_value_t = Mode::Single)]
        mode: Mode,
        /// Stop after this many deviations.
        #[arg(long, default_value_t = 100)]
        budget: u64,
        #[arg(long)]
        labels: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Single,
    Orbit,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = commands::Settings {
        format: cli.format,
        max_domain: cli.max_domain,
    };
    let outcome = pareto_core::axioms::with_workers(cli.workers, || match cli.command {
        Command::Eval { rule, profile } => commands::eval(&settings, &rule, &profile),
        Command::Check { rule, size, axioms } => commands::check(&settings, &rule, &size, &axioms),
        Command::Matrix {
            rules,
            labels,
            size,
            axioms,
        } => commands::matrix(&settings, &rules, labels.as_deref(), &size, &axioms),
        Command::Example { k } => commands::example(&settings, k),
        Command::Theorem { k, rule, size } => commands::theorem(&settings, k, &rule, &size),
        Command::Search {
            size,
            axioms,
            mode,
            budget,
            labels,
        } => {
            let mode = match mode {
                Mode::Single => pareto_core::analysis::SearchMode::Single,
                Mode::Orbit => pareto_core::analysis::SearchMode::Orbit,
            };
            commands::search(&settings, &size, &axioms, mode, budget, labels.as_deref())
        }
    });
    match outcome.and_then(|r| r) {
        Ok(commands::Status::Clean) => ExitCode::SUCCESS,
        Ok(commands::Status::Found) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
