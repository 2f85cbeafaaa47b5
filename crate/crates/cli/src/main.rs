mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use triplet_core::params::{LambdaParam, ModelParams};
use triplet_core::qseries::{lattice_char, module_char, w_char, w_char_affine, QSeries};
use triplet_core::rational::format_rational;
use triplet_core::rootsys::{CartanType, RootSystem, Weight, DEFAULT_WEYL_CAP};
use triplet_core::verify::{all_passed, check_names, run_all, run_check, GridSpec, PRange};
use triplet_core::Error;

use render::Format;

#[derive(Parser)]
#[command(
    name = "triplet",
    version,
    about = "Characters and checks for triplet W-algebra modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root-system data and the minuscule representatives.
    Info {
        #[arg(long = "type", value_parser = parse_type)]
        cartan: CartanType,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        output: Format,
    },
    /// Every module parameter for the given type and modulus.
    LambdaList {
        #[arg(long = "type", value_parser = parse_type)]
        cartan: CartanType,
        #[arg(short)]
        p: i64,
        #[arg(long)]
        narrow_only: bool,
        #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
        weyl_cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        output: Format,
    },
    /// A character as a truncated q-series.
    Char {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long = "type", value_parser = parse_type)]
        cartan: CartanType,
        #[arg(short)]
        p: i64,
        /// Fundamental-weight coordinates, comma separated; defaults to 0.
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        alpha: Option<Coords>,
        #[arg(long, value_parser = parse_vector)]
        lambda0: Option<Coords>,
        #[arg(long, value_parser = parse_vector)]
        sp: Option<Coords>,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
        weyl_cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        output: Format,
    },
    /// Run one named check, or `all`, over a parameter grid.
    Verify {
        suite: String,
        /// Comma-separated types; defaults to A1,A2,A3.
        #[arg(long = "type", value_parser = parse_type, value_delimiter = ',')]
        types: Vec<CartanType>,
        /// Comma-separated moduli; defaults to h-1..h+2 for each type.
        #[arg(short, value_parser = parse_vector)]
        p: Option<Coords>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        alpha_shift: Option<i64>,
        #[arg(long)]
        weyl_cap: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        output: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    W,
    WAffine,
    Module,
    Lattice,
}

fn parse_type(s: &str) -> Result<CartanType, String> {
    s.parse::<CartanType>().map_err(|e| e.to_string())
}

/// A comma-separated integer vector.
#[derive(Clone, Debug)]
struct Coords(Vec<i64>);

fn parse_vector(s: &str) -> Result<Coords, String> {
    s.split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|e| format!("`{c}`: {e}")))
        .collect::<Result<_, _>>()
        .map(Coords)
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NotNarrow { .. } => 3,
            Error::WeylCapExceeded { .. } | Error::Overflow => 4,
            Error::Internal(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn model(cartan: CartanType, p: i64, weyl_cap: u64) -> Result<ModelParams, Failure> {
    Ok(ModelParams::with_weyl_cap(
        RootSystem::build(cartan)?,
        p,
        weyl_cap,
    )?)
}

/// Pads a missing vector with zeros and checks its length.
fn vector_or_zero(v: Option<Coords>, rank: usize, name: &str) -> Result<Vec<i64>, Failure> {
    match v.map(|c| c.0) {
        None => Ok(vec![0; rank]),
        Some(v) if v.len() == 1 && v[0] == 0 => Ok(vec![0; rank]),
        Some(v) if v.len() == rank => Ok(v),
        Some(v) => Err(Failure {
            code: 2,
            message: format!("--{name} needs {rank} coordinates, got {}", v.len()),
        }),
    }
}

#[derive(Serialize)]
struct Info {
    #[serde(rename = "type")]
    cartan: String,
    rank: usize,
    coxeter_number: i64,
    dim_g: i64,
    weyl_order: u64,
    degrees: Vec<i64>,
    det: i64,
    rho: Vec<String>,
    rho_norm_sq: String,
    theta_simple: Vec<i64>,
    theta: Vec<String>,
    inverse_cartan: Vec<Vec<String>>,
    lambda0: Vec<Lambda0Entry>,
}

#[derive(Serialize)]
struct Lambda0Entry {
    weight: Vec<i64>,
    class: usize,
}

fn strings(w: &Weight) -> Vec<String> {
    w.coords().iter().map(format_rational).collect()
}

fn cmd_info(cartan: CartanType, output: Format) -> Result<String, Failure> {
    let rs = RootSystem::build(cartan)?;
    let mp = ModelParams::new(rs.clone(), 2)?;
    let info = Info {
        cartan: cartan.to_string(),
        rank: rs.rank(),
        coxeter_number: rs.coxeter_number(),
        dim_g: rs.dim_g(),
        weyl_order: rs.weyl_order(),
        degrees: rs.degrees().to_vec(),
        det: rs.det(),
        rho: strings(&rs.rho()),
        rho_norm_sq: format_rational(&rs.norm_sq_int(&rs.rho_int())),
        theta_simple: rs.theta_simple().to_vec(),
        theta: strings(&rs.theta()),
        inverse_cartan: rs
            .inv_cartan()
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect(),
        lambda0: mp
            .lambda0_ints()
            .iter()
            .map(|w| Lambda0Entry {
                weight: w.clone(),
                class: mp.class_index(w),
            })
            .collect(),
    };
    Ok(render::info(&info, output))
}

#[derive(Serialize)]
struct LambdaRow {
    lambda0: Vec<i64>,
    sp: Vec<i64>,
    delta: String,
    narrow: bool,
    dual_param: LambdaParam,
    dual_module_param: LambdaParam,
}

fn cmd_lambda_list(mp: &ModelParams, narrow_only: bool, output: Format) -> Result<String, Failure> {
    let mut rows = Vec::new();
    for lam in mp.lambda_set() {
        let narrow = mp.narrow(&lam.sp)?;
        if narrow_only && !narrow {
            continue;
        }
        rows.push(LambdaRow {
            delta: format_rational(&mp.conformal_weight(&lam.to_scaled())?),
            narrow,
            dual_param: mp.dual_param(&lam)?,
            dual_module_param: mp.dual_module_param(&lam)?,
            lambda0: lam.lambda0,
            sp: lam.sp,
        });
    }
    Ok(render::lambda_rows(&rows, output))
}

fn cmd_char(
    kind: Kind,
    mp: &ModelParams,
    alpha: Vec<i64>,
    lambda0: Vec<i64>,
    sp: Vec<i64>,
    order: usize,
    output: Format,
) -> Result<String, Failure> {
    let lam = mp.lambda(lambda0, sp)?;
    let alpha = Weight::from_ints(&alpha);
    let series: QSeries = match kind {
        Kind::W => w_char(mp, &alpha, &lam, order)?,
        Kind::WAffine => w_char_affine(mp, &alpha, &lam, order)?,
        Kind::Module => module_char(mp, &lam, order)?,
        Kind::Lattice => lattice_char(mp, &lam, order)?,
    };
    Ok(render::series(&series, output))
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.command {
        Command::Info { cartan, output } => Ok((cmd_info(cartan, output)?, 0)),
        Command::LambdaList {
            cartan,
            p,
            narrow_only,
            weyl_cap,
            output,
        } => {
            let mp = model(cartan, p, weyl_cap)?;
            Ok((cmd_lambda_list(&mp, narrow_only, output)?, 0))
        }
        Command::Char {
            kind,
            cartan,
            p,
            alpha,
            lambda0,
            sp,
            order,
            weyl_cap,
            output,
        } => {
            let mp = model(cartan, p, weyl_cap)?;
            let l = mp.rank();
            let alpha = vector_or_zero(alpha, l, "alpha")?;
            let lambda0 = vector_or_zero(lambda0, l, "lambda0")?;
            let sp = vector_or_zero(sp, l, "sp")?;
            Ok((cmd_char(kind, &mp, alpha, lambda0, sp, order, output)?, 0))
        }
        Command::Verify {
            suite,
            types,
            p,
            order,
            alpha_shift,
            weyl_cap,
            output,
        } => {
            if suite != "all" && !check_names().contains(&suite.as_str()) {
                return Err(Error::UnknownCheck(suite).into());
            }
            let mut grid = GridSpec::default();
            if !types.is_empty() {
                grid.types = types;
            }
            if let Some(Coords(p)) = p {
                if let Some(bad) = p.iter().find(|&&v| v < 2) {
                    return Err(Error::InvalidModulus(*bad).into());
                }
                grid.p = PRange::Fixed(p);
            }
            grid.order = order.unwrap_or(grid.order);
            grid.alpha_shift = alpha_shift.unwrap_or(grid.alpha_shift);
            grid.weyl_cap = weyl_cap.unwrap_or(grid.weyl_cap);
            let reports = if suite == "all" {
                run_all(&grid)?
            } else {
                vec![run_check(&suite, &grid)?]
            };
            let code = if all_passed(&reports) { 0 } else { 1 };
            Ok((render::reports(&reports, output), code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
