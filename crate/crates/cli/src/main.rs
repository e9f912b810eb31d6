use std::path::PathBuf;
use std::process::ExitCode;

use alia_cli::commands::{self, Inputs, Output};
use alia_cli::dispatch::{Kind, RepChoice};
use alia_cli::error::CliError;
use alia_core::{LawId, Scalar};
use clap::{Args, Parser, Subcommand};

/// Exact checker and constructor for left Alia structures given by
/// structure constants.
///
/// Exit status: 0 pass, 1 law or hypothesis failure, 2 usage or input error.
/// ALIA_THREADS caps the worker threads used for residual evaluation.
#[derive(Parser, Debug)]
#[command(name = "alia", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Structure files; their sections are merged.
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Bind a declared parameter, e.g. `--set lambda=3/2`.
    #[arg(long = "set", value_name = "NAME=RAT", value_parser = parse_set)]
    sets: Vec<(String, Scalar)>,
    /// Replace a map: identity, zero, a rational c for c·id, or another map name.
    #[arg(long = "override", value_name = "MAP=SPEC", value_parser = parse_override)]
    overrides: Vec<(String, String)>,
    /// Module for laws and constructions that take a representation.
    #[arg(long, value_enum)]
    rep: Option<RepChoice>,
}

impl Common {
    fn inputs(self) -> Inputs {
        Inputs {
            files: self.files,
            sets: self.sets,
            overrides: self.overrides,
            rep: self.rep,
        }
    }
}

#[derive(Args, Debug)]
struct ReportArgs {
    /// Law to evaluate.
    #[arg(long, value_parser = parse_law)]
    law: LawId,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Write the report here instead of standard output.
    #[arg(short = 'o', value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a law and list every nonzero residual coordinate.
    Check {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Evaluate a law at every point of {0,1,2,3,5} per unset parameter.
    Certify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Build a new structure file from the inputs.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        #[command(flatten)]
        common: Common,
        /// Write the structure here instead of standard output.
        #[arg(short = 'o', value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// List the built-in structure files, or print one.
    Examples {
        name: Option<String>,
        /// Write the file here instead of standard output.
        #[arg(short = 'o', value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

fn parse_law(s: &str) -> Result<LawId, String> {
    LawId::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = LawId::ALL.iter().map(|l| l.name()).collect();
        format!("unknown law; expected one of: {}", names.join(", "))
    })
}

fn split_pair(s: &str) -> Result<(String, String), String> {
    let (k, v) = s.split_once('=').ok_or("expected NAME=VALUE")?;
    if k.is_empty() || v.is_empty() {
        return Err("expected NAME=VALUE".into());
    }
    Ok((k.to_string(), v.to_string()))
}

fn parse_set(s: &str) -> Result<(String, Scalar), String> {
    let (k, v) = split_pair(s)?;
    let value = v
        .parse::<Scalar>()
        .map_err(|_| format!("`{v}` is not a rational"))?;
    Ok((k, value))
}

fn parse_override(s: &str) -> Result<(String, String), String> {
    split_pair(s)
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("ALIA_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Usage(format!("ALIA_THREADS=`{raw}` is not a positive integer"))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn write_out(path: Option<&PathBuf>, text: String, code: u8) -> Result<Output, CliError> {
    match path {
        Some(p) => {
            std::fs::write(p, &text).map_err(|e| CliError::Io {
                path: p.display().to_string(),
                msg: e.to_string(),
            })?;
            Ok(Output {
                text: String::new(),
                code,
            })
        }
        None => Ok(Output { text, code }),
    }
}

fn run(cli: Cli) -> Result<Output, CliError> {
    configure_threads()?;
    match cli.command {
        Command::Check { common, report } => {
            let (r, code) = commands::check(&common.inputs(), report.law)?;
            let text = if report.json {
                r.to_json()
            } else {
                r.to_text()
            };
            write_out(report.output.as_ref(), text, code)
        }
        Command::Certify { common, report } => {
            let (r, code) = commands::certify(&common.inputs(), report.law)?;
            let text = if report.json {
                r.to_json()
            } else {
                r.to_text()
            };
            write_out(report.output.as_ref(), text, code)
        }
        Command::Construct {
            kind,
            common,
            output,
        } => {
            let text = commands::construct_text(&common.inputs(), kind)?;
            write_out(output.as_ref(), text, 0)
        }
        Command::Examples { name, output } => {
            let text = commands::examples(name.as_deref())?;
            write_out(output.as_ref(), text, 0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
