use clap::{Parser, Subcommand, ValueEnum};
use logfol_cli::commands::{chern_input, verification_outcome};
use logfol_cli::report::points_text;
use logfol_cli::{
    cmd_count_complement, cmd_indices, cmd_verify, parse_point, parse_spec, sigma_check, sigma_note,
    CliError, ErrorCode, ProblemSpec,
};
use logfol_core::chern::{lhs_integral, ChernInput};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "logfol", version, about = "Checks the logarithmic-index residue formula for foliations on P^n")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    report: Format,

    /// Also evaluate the symmetric-function closed form of the Chern number.
    #[arg(long, global = true)]
    check_sigma: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Computes both sides and exits 0 exactly when they agree.
    Verify { file: PathBuf },
    /// Chern number of T(-log D) - T_F.
    ///
    /// With a problem file the divisor consists of its hyperplanes. Without
    /// one, `--dim`, `--degrees` and `--foliation-degree` describe the input
    /// directly, and divisor components of any degree are allowed.
    Chern {
        file: Option<PathBuf>,
        #[arg(long, requires = "foliation_degree")]
        dim: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
        #[arg(long)]
        foliation_degree: Option<u32>,
    },
    /// Milnor number, logarithmic and homological index at points.
    Indices {
        file: PathBuf,
        /// Homogeneous coordinates such as `1,0,-1/2`; repeatable.
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// Number of singular points off the divisor, with multiplicity.
    CountComplement { file: PathBuf },
}

fn load(path: &Path) -> Result<ProblemSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::new(ErrorCode::InvalidInput, Some(path.display().to_string()), e.to_string()))?;
    parse_spec(&text)
}

fn chern_output(input: &ChernInput, cli: &Cli) -> Result<String, CliError> {
    let lhs = lhs_integral(input)?;
    let sigma = cli.check_sigma.then(|| sigma_check(input)).transpose()?;
    let notes: Vec<String> = sigma.iter().map(|s| sigma_note(input, s)).collect();
    Ok(match cli.report {
        Format::Json => serde_json::to_string_pretty(&json!({ "lhs_chern": lhs, "sigma": sigma, "notes": notes }))
            .expect("plain data"),
        Format::Text => {
            let mut out = format!("{lhs}\n");
            if let Some(s) = &sigma {
                out.push_str(&format!("closed form {} ({})\n", s.closed_form, if s.agrees { "agrees" } else { "DISAGREES" }));
            }
            for n in &notes {
                out.push_str(&format!("note: {n}\n"));
            }
            out
        }
    })
}

fn run(cli: &Cli) -> Result<(String, Result<(), CliError>), CliError> {
    let ok = |s: String| Ok((s, Ok(())));
    match &cli.command {
        Command::Verify { file } => {
            let report = cmd_verify(&load(file)?, cli.check_sigma)?;
            let text = match cli.report {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            Ok((text, verification_outcome(&report)))
        }
        Command::Chern { file, dim, degrees, foliation_degree } => {
            let input = match (file, dim) {
                (Some(path), None) => chern_input(&load(path)?)?,
                (None, Some(n)) => ChernInput::new(*n, degrees.clone(), foliation_degree.expect("required by clap"))?,
                _ => return Err(CliError::new(ErrorCode::Syntax, None, "give either a problem file or --dim")),
            };
            ok(chern_output(&input, cli)?)
        }
        Command::Indices { file, points } => {
            let spec = load(file)?;
            let extra = points
                .iter()
                .enumerate()
                .map(|(i, p)| parse_point(p, spec.dim()).map_err(|e| CliError { locus: Some(format!("--point #{}", i + 1)), ..e }))
                .collect::<Result<Vec<_>, _>>()?;
            let table = cmd_indices(&spec, &extra)?;
            ok(match cli.report {
                Format::Json => serde_json::to_string_pretty(&json!({ "points": table })).expect("plain data"),
                Format::Text => points_text(&table),
            })
        }
        Command::CountComplement { file } => {
            let count = cmd_count_complement(&load(file)?)?;
            ok(match cli.report {
                Format::Json => serde_json::to_string_pretty(&json!({ "complement_milnor_sum": count })).expect("plain data"),
                Format::Text => format!("{count}\n"),
            })
        }
    }
}

fn fail(cli: &Cli, err: &CliError) -> ExitCode {
    if cli.report == Format::Json {
        println!("{}", serde_json::to_string_pretty(&json!({ "error": err })).expect("plain data"));
    }
    eprintln!("error[{}]{}: {}", err.code, err.locus.as_ref().map(|l| format!(" at {l}")).unwrap_or_default(), err.message);
    ExitCode::from(err.code.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, outcome)) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            match outcome {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error[{}]: {}", e.code, e.message);
                    ExitCode::from(e.code.exit_code() as u8)
                }
            }
        }
        Err(e) => fail(&cli, &e),
    }
}
