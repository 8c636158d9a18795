use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::{Failure, Report};

/// Bridge-sphere bookkeeping for 3-bridge arborescent links.
#[derive(Parser)]
#[command(name = "bridgekit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a link, reporting its family and branched cover.
    Classify { link: String },
    /// Count 3-bridge spheres up to isotopy.
    Census {
        /// Link spec such as `L1((1/2,-2/5),(1/2,-2/5))`.
        #[arg(required_unless_present = "sweep", conflicts_with = "sweep")]
        link: Option<String>,
        /// Sweep L1 links with all denominators up to N, e.g. `alpha_max=7`.
        #[arg(long, value_name = "alpha_max=N")]
        sweep: Option<String>,
    },
    /// Decide whether two of S1..S4 are isotopic for an L1 link.
    Isotopic { link: String, i: String, j: String },
    /// Word operations in a two-fiber Seifert group `D(β₁/α₁,β₂/α₂)`.
    Word {
        #[command(subcommand)]
        op: commands::WordOp,
    },
    /// Solve `w(a,b,c,d) ∈ {η₁^±1, η₂^±1}` inside a search window.
    SolveW {
        #[arg(long)]
        group: String,
        /// `AC,BD`: search `|a|,|c| <= AC` and `|b|,|d| <= BD`.
        #[arg(long, env = "BRIDGEKIT_WINDOW")]
        window: Option<String>,
        /// Compare the closed-form solutions with an exhaustive search.
        #[arg(long)]
        check_oracle: bool,
    },
    /// Count genus-2 Heegaard splittings of `S2(b;β₁/α₁,β₂/α₂,β₃/α₃)`.
    Heegaard { space: String },
    /// Symmetry group of an elliptic Montesinos link.
    Symmetry { link: String },
    /// Merge edges between the spheres P1..P6 of a Montesinos link.
    MergeGraph { link: String },
}

fn dispatch(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Classify { link } => commands::classify(&link),
        Command::Census { link: Some(link), .. } => commands::census(&link),
        Command::Census { sweep: Some(sweep), .. } => commands::sweep(&sweep),
        Command::Census { .. } => unreachable!("clap requires a link or --sweep"),
        Command::Isotopic { link, i, j } => commands::isotopic(&link, &i, &j),
        Command::Word { op } => commands::word(op),
        Command::SolveW { group, window, check_oracle } => commands::solve_w(&group, window.as_deref(), check_oracle),
        Command::Heegaard { space } => commands::heegaard(&space),
        Command::Symmetry { link } => commands::symmetry(&link),
        Command::MergeGraph { link } => commands::merge_graph(&link),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let json = cli.format == Format::Json;
    let mut out = io::stdout().lock();
    let written = match dispatch(cli.command) {
        Ok(Report::Value { json: value, text }) => {
            if json {
                serde_json::to_writer_pretty(&mut out, &value).map_err(io::Error::from).and_then(|_| writeln!(out))
            } else {
                write!(out, "{text}")
            }
        }
        Ok(Report::Rows(rows)) => {
            if json {
                serde_json::to_writer_pretty(&mut out, &rows).map_err(io::Error::from).and_then(|_| writeln!(out))
            } else {
                commands::write_csv(&mut out, &rows)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    match written.and_then(|_| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
