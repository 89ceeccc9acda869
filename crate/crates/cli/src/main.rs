use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use latfield::field::DEFAULT_ENUMERATION_BOUND;
use latfield::RingTag;

mod commands;
mod output;

#[derive(Parser, Debug)]
#[command(name = "latfield", version, about = "Lattice models of finite fields, point counts and zeta data")]
pub struct Cli {
    /// Emit the JSON envelope instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Render w as ω and t as θ
    #[arg(long, global = true)]
    pub unicode: bool,

    /// Seed for the randomized property subsets of `verify`
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Largest field that may be enumerated
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BOUND)]
    pub bound: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor a rational prime in Z[i] or Z[w]
    Factor {
        #[arg(long)]
        ring: RingTag,
        p: u64,
    },
    /// Enumerate a finite field given as Z[xi]/(pi) or F_p[x]/(f)
    Field(FieldArgs),
    /// Count points on a curve over F_p
    Count(CountArgs),
    /// Zeta data of a genus-1 curve at p
    Zeta(ZetaArgs),
    /// Frobenius elements, matrices and characteristic polynomials
    #[command(subcommand)]
    Frobenius(FrobeniusCommand),
    /// Residue character of order m modulo p
    Character {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'm')]
        m: u32,
        /// Evaluate at this integer instead of printing the table
        #[arg(long, allow_negative_numbers = true)]
        at: Option<i64>,
    },
    /// Jacobi sum of the order-m1 and order-m2 characters modulo p
    Jacobi {
        #[arg(short = 'p')]
        p: u64,
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        m2: u32,
    },
    /// Run the property suites
    Verify {
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 200)]
        prime_bound: u64,
        #[arg(long, default_value_t = 50)]
        lift_bound: u64,
    },
}

#[derive(Args, Debug)]
pub struct FieldArgs {
    /// gaussian, eisenstein or poly
    pub ring: String,
    /// Prime element such as `2+i`, or a polynomial such as `x^2+1`
    pub modulus: String,
    /// Characteristic, for `poly`
    #[arg(short = 'p')]
    pub p: Option<u64>,
    #[arg(long, value_enum)]
    pub table: Option<TableKind>,
    /// Show the lattice point chosen for each residue class
    #[arg(long)]
    pub lattice: bool,
    /// Search for isomorphisms onto F_p[x]/(POLY)
    #[arg(long, value_name = "POLY")]
    pub iso: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Add,
    Mul,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// y^2 = x^3 + D
    Cubic,
    /// y^2 = x^3 + x
    Quartic,
    /// y^2 = x^degree + D
    Superelliptic,
}

#[derive(Args, Debug)]
pub struct CurveArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(short = 'D', allow_negative_numbers = true, default_value_t = 1)]
    pub d: i64,
    #[arg(short = 'p')]
    pub p: u64,
    /// Exponent for the superelliptic family
    #[arg(long, default_value_t = 5)]
    pub degree: u32,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Brute,
    Char,
    Closed,
    All,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
    /// Also count over F_{p^n}, by recurrence and by brute force
    #[arg(long)]
    pub ext: Option<u32>,
    /// List the affine points (p <= 200)
    #[arg(long)]
    pub points: bool,
}

#[derive(Args, Debug)]
pub struct ZetaArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Extension degrees 1..=N to tabulate
    #[arg(long, default_value_t = 3)]
    pub n_max: u32,
    /// Truncation order of the series check
    #[arg(long, default_value_t = 6)]
    pub order: u32,
}

#[derive(Subcommand, Debug)]
pub enum FrobeniusCommand {
    /// Frobenius at p in Q(sqrt d)
    Quadratic {
        #[arg(short = 'd', allow_negative_numbers = true)]
        d: i64,
        #[arg(short = 'p')]
        p: u64,
    },
    /// Frobenius lift on Z[i] or Z[w] and its matrix in the basis {1, xi}
    Ring {
        #[arg(long)]
        ring: RingTag,
        #[arg(short = 'p')]
        p: u64,
    },
    /// Artin symbol of p in Q(zeta_n)
    Cyclotomic {
        #[arg(short = 'n')]
        n: u64,
        #[arg(short = 'p')]
        p: u64,
    },
}

/// `-m1 2` is accepted as a spelling of `--m1 2`.
fn normalize_args(args: impl Iterator<Item = String>) -> Vec<String> {
    args.map(|a| match a.as_str() {
        "-m1" | "-m2" => format!("-{a}"),
        _ => a,
    })
    .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(normalize_args(std::env::args()));
    match commands::run(&cli) {
        Ok(report) => {
            if cli.json {
                match serde_json::to_string_pretty(&report.envelope()) {
                    Ok(s) => println!("{s}"),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(1);
                    }
                }
            } else {
                println!("{}", report.text);
            }
            ExitCode::from(report.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource() { 3 } else { 2 })
        }
    }
}
