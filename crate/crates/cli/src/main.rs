use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::{CliError, CommandResult};

#[derive(Parser, Debug)]
#[command(name = "shiftdelta", version, about = "Shifted delta products and point interactions")]
struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
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
    /// Evaluate a distribution expression; `*` is the shifted product.
    Product {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Largest delta order allowed in the result.
        #[arg(long)]
        n_cap: Option<u32>,
        #[arg(long, default_value_t = 8)]
        degree_cap: usize,
    },
    /// Classify c1·δ̂₋ + c2·δ̂₊ + b1·δ̂₋′ + b2·δ̂₊′.
    Classify(PotentialArgs),
    /// Boundary (pseudo) potentials realizing given conditions.
    Represent(RepresentArgs),
    /// Reflection and transmission amplitudes.
    Scatter {
        #[command(flatten)]
        op: OperatorArgs,
        /// Comma-separated wavenumbers.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        k: String,
    },
    /// Bound states, and optionally the grid spectrum of a regularized delta.
    Spectrum {
        #[command(flatten)]
        op: OperatorArgs,
        /// Also diagonalize −ψ″ + a·v_ε on a grid (needs --delta).
        #[arg(long)]
        grid: bool,
        #[arg(long, default_value_t = 0.05)]
        epsilon: f64,
        #[arg(long, default_value_t = 20.0)]
        half_width: f64,
        #[arg(long, default_value_t = 4000)]
        points: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Mollified shifting delta against its exact limit.
    Weaklimit {
        /// Piecewise-polynomial distribution F.
        #[arg(long, default_value = "heaviside(0)", allow_hyphen_values = true)]
        expr: String,
        /// Polynomial test function t.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        test: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        lo: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        hi: String,
        #[arg(long, default_value_t = 0)]
        order: u32,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        /// Comma-separated ε values.
        #[arg(long, default_value = "0.1,0.05,0.025")]
        eps: String,
    },
}

#[derive(Args, Debug, Clone)]
struct PotentialArgs {
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    c1: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    c2: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    b1: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    b2: String,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct RepresentArgs {
    /// Two conditions "f1;f2", each four comma-separated scalars over (ψ₋, ψ₊, ψ₋′, ψ₊′).
    #[arg(long, allow_hyphen_values = true)]
    bc: Option<String>,
    /// Interacting parameters "a,b,c".
    #[arg(long, allow_hyphen_values = true)]
    interacting: Option<String>,
    /// Separating parameters "a-,b-,a+,b+".
    #[arg(long, allow_hyphen_values = true)]
    separating: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct OperatorArgs {
    /// Conditions "f1;f2" with exact scalars.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["delta", "c1", "c2", "b1", "b2"])]
    bc: Option<String>,
    /// δ interaction of strength a (float).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["c1", "c2", "b1", "b2"])]
    delta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b2: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

fn run(cli: &Cli) -> Result<CommandResult, CliError> {
    match &cli.command {
        Command::Product { expr, n_cap, degree_cap } => commands::product(expr, *n_cap, *degree_cap),
        Command::Classify(p) => commands::classify(&p.c1, &p.c2, &p.b1, &p.b2),
        Command::Represent(r) => {
            if let Some(bc) = &r.bc {
                commands::represent_bc(bc)
            } else if let Some(v) = &r.interacting {
                commands::represent_interacting(v)
            } else {
                commands::represent_separating(r.separating.as_deref().unwrap_or_default())
            }
        }
        Command::Scatter { op, k } => commands::scatter(&operator_source(op)?, k),
        Command::Spectrum {
            op,
            grid,
            epsilon,
            half_width,
            points,
            count,
        } => {
            let grid = grid.then_some(commands::GridOptions {
                epsilon: *epsilon,
                half_width: *half_width,
                points: *points,
                count: *count,
            });
            commands::spectrum(&operator_source(op)?, grid)
        }
        Command::Weaklimit {
            expr,
            test,
            lo,
            hi,
            order,
            side,
            eps,
        } => {
            let side = match side {
                SideArg::Left => shiftdelta::boundary::Side::Left,
                SideArg::Right => shiftdelta::boundary::Side::Right,
            };
            commands::weaklimit(expr, test, lo, hi, *order, side, eps)
        }
    }
}

fn operator_source(op: &OperatorArgs) -> Result<commands::OperatorSource, CliError> {
    if let Some(bc) = &op.bc {
        return Ok(commands::OperatorSource::Bc(bc.clone()));
    }
    if let Some(a) = op.delta {
        return Ok(commands::OperatorSource::Delta(a));
    }
    let get = |v: &Option<String>| v.clone().unwrap_or_else(|| "0".into());
    Ok(commands::OperatorSource::Potential([get(&op.c1), get(&op.c2), get(&op.b1), get(&op.b2)]))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let (status, code) = match &outcome {
        Ok(_) => ("ok", 0),
        Err(CliError::Parse(_)) => ("parse_error", 2),
        Err(CliError::Precondition(_)) => ("precondition_violation", 3),
    };
    match (&outcome, cli.format) {
        (Ok(r), Format::Text) => println!("{}", r.text),
        (Ok(r), Format::Json) => {
            let v = serde_json::json!({ "status": status, "payload": r.payload, "text": r.text });
            println!("{v}");
        }
        (Err(e), Format::Text) => eprintln!("error: {e}"),
        (Err(e), Format::Json) => {
            eprintln!("error: {e}");
            let v = serde_json::json!({ "status": status, "payload": serde_json::Value::Null, "text": e.to_string() });
            println!("{v}");
        }
    }
    ExitCode::from(code)
}
