use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ncwitt::cd::{h_membership, XVector};
use ncwitt::cycquot::abelianize;
use ncwitt::freealg::{Alphabet, FreePoly};
use ncwitt::ghost::WittContext;
use ncwitt::parse::{format_poly, parse_poly, ParseError};
use ncwitt::rmap::{r_map, EpsilonTuple};
use ncwitt::sample::DEFAULT_SEED;
use ncwitt::verify::{run_checks, VerifyConfig, VerifyReport, CHECK_IDS};
use ncwitt::Error;

#[derive(Parser, Debug)]
#[command(
    name = "ncwitt",
    version,
    about = "Witt vector computations over free algebras"
)]
struct Cli {
    /// Prime p.
    #[arg(long, global = true, default_value_t = 2)]
    p: u64,
    /// Truncation level. For ghost and rmap this is the number of
    /// coordinates; for omega it is n in X_n(A), with n + 1 entries.
    #[arg(long, global = true, default_value_t = 2)]
    level: usize,
    /// Comma-separated generator names.
    #[arg(long, global = true, default_value = "X,Y")]
    alphabet: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized sweeps of `verify`.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ghost components of a coordinate tuple, in A/[A,A].
    Ghost {
        /// Pass a leading `--` if the first input starts with '-'.
        coords: Vec<String>,
    },
    /// The Witt polynomials of a coordinate tuple, kept in A.
    Omega {
        /// Pass a leading `--` if the first input starts with '-'.
        coords: Vec<String>,
    },
    /// The map R applied to a tuple of commutator sums.
    Rmap {
        /// Pass a leading `--` if the first input starts with '-'.
        eps: Vec<String>,
    },
    /// Image of a polynomial in A/[A,A].
    Abelianize {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Membership in A_4^0 + F^5 A + 2A (two generators only).
    Hmember {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Replay named checks, or all of them.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(CHECK_IDS))]
        checks: Vec<String>,
        #[arg(long, conflicts_with = "checks")]
        all: bool,
    },
}

enum Failure {
    /// Bad flags or unparsable input: exit code 2.
    Usage(String),
    /// The computation itself failed: exit code 1.
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyAlphabet
            | Error::InvalidGenerator(_)
            | Error::DuplicateGenerator(_)
            | Error::NotPrime(_)
            | Error::ZeroLength
            | Error::LengthMismatch { .. }
            | Error::UnknownCheck(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn parse_error(text: &str, e: ParseError) -> Failure {
    let position = match &e {
        ParseError::Syntax { position, .. } | ParseError::UnknownGenerator { position, .. } => {
            *position
        }
    };
    Failure::Usage(format!("{e}\n  {text}\n  {}^", " ".repeat(position)))
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn strings(fs: &[FreePoly]) -> Vec<String> {
    fs.iter().map(format_poly).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("valid json")
                ),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let alphabet = Alphabet::new(cli.alphabet.split(',').map(str::trim))?;
    let params = json!({
        "p": cli.p,
        "level": cli.level,
        "alphabet": alphabet.names(),
    });
    let parse = |text: &String| parse_poly(text, &alphabet).map_err(|e| parse_error(text, e));
    let parse_all = |texts: &[String]| texts.iter().map(parse).collect::<Result<Vec<_>, _>>();

    let (name, params, result, text) = match &cli.command {
        Command::Ghost { coords } => {
            let ctx = WittContext::new(&alphabet, cli.p, cli.level)?;
            let coords = ctx.coordinates_padded(parse_all(coords)?)?;
            let g = ctx.ghost_map(&coords);
            let comps: Vec<String> = g.components().iter().map(ToString::to_string).collect();
            (
                "ghost",
                with_inputs(params, coords.as_slice()),
                json!(comps),
                g.to_string(),
            )
        }
        Command::Omega { coords } => {
            let ctx = WittContext::for_level(&alphabet, cli.p, cli.level)?;
            let coords = ctx.coordinates_padded(parse_all(coords)?)?;
            let x = XVector::omega_map(&ctx, &coords);
            (
                "omega",
                with_inputs(params, coords.as_slice()),
                json!(strings(x.entries())),
                x.to_string(),
            )
        }
        Command::Rmap { eps } => {
            let ctx = WittContext::new(&alphabet, cli.p, cli.level)?;
            let eps = ctx.coordinates_padded(parse_all(eps)?)?;
            let params = with_inputs(params, eps.as_slice());
            let eps = EpsilonTuple::new(eps.into_vec())?;
            let r = r_map(&ctx, &eps)?;
            let audit: Vec<Value> = r
                .audit
                .iter()
                .map(|s| {
                    json!({
                        "index": s.index,
                        "divisor": s.divisor.to_string(),
                        "before_division": s.before_division.to_string(),
                        "quotient": s.quotient.to_string(),
                    })
                })
                .collect();
            let result = json!({ "coordinates": strings(r.coords.as_slice()), "audit": audit });
            ("rmap", params, result, r.coords.to_string())
        }
        Command::Abelianize { poly } => {
            let f = parse(poly)?;
            let a = abelianize(&f).to_string();
            ("abelianize", with_inputs(params, &[f]), json!(a), a)
        }
        Command::Hmember { poly } => {
            let f = parse(poly)?;
            let member = h_membership(&f)?;
            (
                "hmember",
                with_inputs(params, &[f]),
                json!(member),
                member.to_string(),
            )
        }
        Command::Verify { checks, all } => {
            if !all && checks.is_empty() {
                return Err(Failure::Usage(
                    "name at least one check or pass --all".into(),
                ));
            }
            let ids: Vec<&str> = if *all {
                CHECK_IDS.to_vec()
            } else {
                checks.iter().map(String::as_str).collect()
            };
            let cfg = VerifyConfig {
                p: cli.p,
                level: cli.level,
                seed: cli.seed,
            };
            let report = run_checks(&ids, &cfg)?;
            let mut params = params;
            params["seed"] = json!(cli.seed);
            params["checks"] = json!(ids);
            let json =
                json!({ "command": "verify", "params": params, "report": report_json(&report) });
            return Ok(Output {
                text: report.to_string(),
                json,
                ok: report.passed(),
            });
        }
    };
    Ok(Output {
        text,
        json: json!({ "command": name, "params": params, "result": result }),
        ok: true,
    })
}

fn with_inputs(mut params: Value, inputs: &[FreePoly]) -> Value {
    params["inputs"] = json!(strings(inputs));
    params
}

fn report_json(report: &VerifyReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "check_id": c.check_id,
                "anchor": c.anchor,
                "status": if c.passed { "pass" } else { "fail" },
                "cases": c.cases,
                "details": c.details,
            })
        })
        .collect();
    json!({ "status": if report.passed() { "pass" } else { "fail" }, "checks": checks })
}
