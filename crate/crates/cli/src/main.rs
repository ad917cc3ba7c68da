use std::fmt::Debug;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use frieze_core::report::run_checks;
use frieze_core::{
    enumerate_all, from_cycle, from_quiddity, minimal_cycle, parse_path, realize, t_map, BigDiamond,
    BigDiamondVector, BigFrieze, DyckPath, Natural,
};
use serde_json::{json, Number, Value};

#[derive(Parser)]
#[command(name = "frieze", version, about = "Frieze patterns, Dyck paths and triangulations from type A diamonds")]
struct Cli {
    /// Largest rank accepted by enumerate and verify.
    #[arg(long, global = true, env = "FRIEZE_MAX_N", default_value_t = 10)]
    max_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Complete a diamond from its first column.
    Complete {
        #[arg(long)]
        vector: BigDiamondVector,
    },
    /// Coupling cycle started at the completed diamond.
    Cycle {
        #[arg(long)]
        vector: BigDiamondVector,
    },
    /// Frieze pattern from a diamond vector or a quiddity sequence.
    Frieze {
        #[command(flatten)]
        input: FriezeInput,
        #[arg(long, value_enum)]
        render: Option<Render>,
    },
    /// Dyck path of a diamond vector, or encodings of a Dyck word.
    Dyck {
        #[command(flatten)]
        input: PathInput,
        #[arg(long, value_enum, default_value_t = Encoding::Path)]
        to: Encoding,
    },
    /// Triangulation of the (n + 3)-gon for a Dyck word or diamond vector.
    Triangulate {
        #[command(flatten)]
        input: PathInput,
    },
    /// Every vector that completes to a positive integral diamond of rank n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exhaustive self-check at rank n.
    Verify {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct FriezeInput {
    #[arg(long)]
    vector: Option<BigDiamondVector>,
    #[arg(long, value_parser = parse_quiddity)]
    quiddity: Option<Quiddity>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PathInput {
    #[arg(long)]
    vector: Option<BigDiamondVector>,
    #[arg(long, value_parser = parse_path)]
    word: Option<DyckPath>,
}

#[derive(Clone)]
struct Quiddity(Vec<Natural>);

fn parse_quiddity(s: &str) -> Result<Quiddity, String> {
    s.split(',')
        .map(|x| Natural::from_str(x.trim()).map_err(|_| format!("could not parse quiddity entry {x:?}")))
        .collect::<Result<_, _>>()
        .map(Quiddity)
}

#[derive(Clone, Copy, ValueEnum)]
enum Render {
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum Encoding {
    Path,
    V,
    Lambda,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

enum Failure {
    Input { kind: String, message: String },
    Invariant { kind: String, message: String },
}

impl Failure {
    fn input(e: impl Debug + ToString) -> Self {
        Failure::Input { kind: kind_of(&e), message: e.to_string() }
    }

    fn invariant(e: impl Debug + ToString) -> Self {
        Failure::Invariant { kind: kind_of(&e), message: e.to_string() }
    }
}

// Variant name from the Debug form, e.g. `NonExactDivision { j: 1 }`.
fn kind_of(e: &impl Debug) -> String {
    let debug = format!("{e:?}");
    debug.split(|c: char| !c.is_alphanumeric() && c != '_').next().unwrap_or_default().to_string()
}

fn number(x: &Natural) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("decimal digits are a JSON number"))
}

fn numbers(xs: &[Natural]) -> Value {
    Value::Array(xs.iter().map(number).collect())
}

fn diamond_json(d: &BigDiamond) -> Value {
    json!({ "col1": numbers(d.col1()), "col2": numbers(d.col2()) })
}

fn frieze_json(fp: &BigFrieze) -> Value {
    json!({
        "order": fp.order(),
        "quiddity": numbers(fp.quiddity()),
        "rows": fp.rows().iter().map(|r| numbers(r)).collect::<Vec<_>>(),
    })
}

fn cap(n: usize, max_n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Input { kind: "ZeroRank".into(), message: "n must be at least 1".into() });
    }
    if n > max_n {
        return Err(Failure::Input {
            kind: "AboveCap".into(),
            message: format!("n = {n} exceeds the cap {max_n}; raise it with --max-n or FRIEZE_MAX_N"),
        });
    }
    Ok(())
}

fn path_of(input: PathInput) -> Result<DyckPath, Failure> {
    match (input.vector, input.word) {
        (Some(v), _) => {
            // a vector that completes always has a path; only incompletable input fails here
            v.complete().map_err(Failure::input)?;
            t_map(&v).map_err(Failure::invariant)
        }
        (None, Some(w)) => Ok(w),
        (None, None) => unreachable!("clap requires one input"),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let out = match cli.command {
        Command::Complete { vector } => {
            let d = vector.complete().map_err(Failure::input)?;
            diamond_json(&d).to_string()
        }
        Command::Cycle { vector } => {
            let d = vector.complete().map_err(Failure::input)?;
            let c = minimal_cycle(&d).map_err(Failure::invariant)?;
            json!({
                "rank": c.rank(),
                "period": c.period(),
                "heads": numbers(&c.heads()),
                "members": c.members().iter().map(diamond_json).collect::<Vec<_>>(),
            })
            .to_string()
        }
        Command::Frieze { input, render } => {
            let fp = match (input.vector, input.quiddity) {
                (Some(v), _) => {
                    let d = v.complete().map_err(Failure::input)?;
                    let c = minimal_cycle(&d).map_err(Failure::invariant)?;
                    from_cycle(&c).map_err(Failure::invariant)?
                }
                (None, Some(q)) => from_quiddity(&q.0).map_err(Failure::input)?,
                (None, None) => unreachable!("clap requires one input"),
            };
            match render {
                Some(Render::Ascii) => return Ok(fp.render_ascii(2)),
                None => frieze_json(&fp).to_string(),
            }
        }
        Command::Dyck { input, to } => {
            let p = path_of(input)?;
            match to {
                Encoding::Path => p.to_string(),
                Encoding::V => p.to_v_vector().map_err(Failure::input)?.to_string(),
                Encoding::Lambda => p.to_lambda().map_err(Failure::input)?.to_string(),
            }
        }
        Command::Triangulate { input } => {
            let p = path_of(input)?;
            let lambda = p.to_lambda().map_err(Failure::input)?;
            realize(&lambda).map_err(Failure::invariant)?.to_string()
        }
        Command::Enumerate { n, format } => {
            cap(n, cli.max_n)?;
            let all = enumerate_all::<Natural>(n).map_err(Failure::invariant)?;
            match format {
                Format::Json => Value::Array(all.iter().map(|v| numbers(v.entries())).collect()).to_string(),
                Format::Text => {
                    let lines: Vec<String> = all.iter().map(ToString::to_string).collect();
                    lines.join("\n")
                }
            }
        }
        Command::Verify { n } => {
            cap(n, cli.max_n)?;
            let checks = run_checks::<Natural>(n);
            let report = json!({
                "n": n,
                "checks": checks
                    .iter()
                    .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
                    .collect::<Vec<_>>(),
            });
            if let Some(bad) = checks.iter().find(|c| !c.pass) {
                println!("{report}");
                return Err(Failure::Invariant { kind: "CheckFailed".into(), message: format!("{}: {}", bad.name, bad.detail) });
            }
            report.to_string()
        }
    };
    Ok(out + "\n")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // keep the first line only; the rest is usage text
            let rendered = e.to_string();
            let message = rendered.lines().next().unwrap_or_default().trim_start_matches("error: ");
            eprintln!("{}", json!({ "error": "InvalidArguments", "message": message }));
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input { kind, message }) => {
            eprintln!("{}", json!({ "error": kind, "message": message }));
            ExitCode::from(1)
        }
        Err(Failure::Invariant { kind, message }) => {
            eprintln!("{}", json!({ "error": kind, "message": message, "invariant": true }));
            ExitCode::from(2)
        }
    }
}
