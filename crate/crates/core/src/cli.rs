//! The `llt` command line: expansions of LLT, unicellular, 2-Schur and
//! Hall–Littlewood functions, and verification sweeps.

use std::ffi::OsString;
use std::fmt::{self, Write as _};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::kschur::{hall_littlewood, kschur2, two_schur_expand};
use crate::laurent::LaurentPoly;
use crate::llt::{l_poly, llt, Component, Piece, ShapeTuple, TwoDiagTuple};
use crate::partition::Partition;
use crate::symfunc::{schur_to_monomial, skew_schur, FundVector, MonomialVector, SchurVector, TwoSchurVector};
use crate::theorems::{run_sweep, Sweep, SweepConfig, DEFAULT_SEED};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Schur,
    TwoSchur,
    Fundamental,
    Monomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "llt", version, about = "LLT polynomials, 2-Schur expansions and verification sweeps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// LLT polynomial of a tuple over {H, V, 0, 1}.
    Llt {
        #[arg(long)]
        tuple: String,
        #[arg(long, value_enum, default_value_t = BasisArg::Schur)]
        basis: BasisArg,
        #[arg(long, allow_negative_numbers = true)]
        q: Option<i64>,
    },
    /// `L(n, λ)` for `λ` inside the staircase.
    Unicellular {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, value_enum, default_value_t = BasisArg::Schur)]
        basis: BasisArg,
        #[arg(long, allow_negative_numbers = true)]
        q: Option<i64>,
    },
    /// 2-Schur function of a 2-bounded partition.
    Kschur {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = BasisArg::Schur)]
        basis: BasisArg,
        #[arg(long, allow_negative_numbers = true)]
        q: Option<i64>,
    },
    /// Hall–Littlewood function from Jing's vertex operators.
    HallLittlewood {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = BasisArg::Schur)]
        basis: BasisArg,
        #[arg(long, allow_negative_numbers = true)]
        q: Option<i64>,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

/// An expansion in one of the supported bases.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Expansion {
    Schur(SchurVector),
    TwoSchur(TwoSchurVector),
    Fundamental(FundVector),
    Monomial(MonomialVector),
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expansion::Schur(v) => v.fmt(f),
            Expansion::TwoSchur(v) => v.fmt(f),
            Expansion::Fundamental(v) => v.fmt(f),
            Expansion::Monomial(v) => v.fmt(f),
        }
    }
}

fn specialize(c: &LaurentPoly, q: Option<i64>) -> Result<LaurentPoly> {
    match q {
        None => Ok(c.clone()),
        Some(q) => c
            .eval_at(q)
            .map(LaurentPoly::from)
            .ok_or_else(|| Error::Precondition(format!("cannot evaluate {c} at q = {q}"))),
    }
}

fn specialize_schur(f: &SchurVector, q: Option<i64>) -> Result<SchurVector> {
    let terms = f.terms().map(|(p, c)| Ok((p.clone(), specialize(c, q)?))).collect::<Result<Vec<_>>>()?;
    Ok(SchurVector::from_terms(f.degree(), terms))
}

fn schur_to_fundamental(f: &SchurVector) -> Result<FundVector> {
    let mut out = FundVector::zero(f.degree());
    for (lam, c) in f.terms() {
        let straight = if lam.is_empty() {
            ShapeTuple::new(Vec::new())
        } else {
            ShapeTuple::new(vec![Component::from_skew(lam, &Partition::empty(), 0)?])
        };
        out.add(&llt(&straight)?.scale(c));
    }
    Ok(out)
}

/// `f` in the requested basis, with `q` specialized first when given.
pub fn expand(f: &SchurVector, basis: BasisArg, q: Option<i64>) -> Result<Expansion> {
    let f = specialize_schur(f, q)?;
    Ok(match basis {
        BasisArg::Schur => Expansion::Schur(f),
        BasisArg::TwoSchur => Expansion::TwoSchur(two_schur_expand(&f)?),
        BasisArg::Fundamental => Expansion::Fundamental(schur_to_fundamental(&f)?),
        BasisArg::Monomial => Expansion::Monomial(schur_to_monomial(&f)),
    })
}

fn basis_name(b: BasisArg) -> &'static str {
    match b {
        BasisArg::Schur => "schur",
        BasisArg::TwoSchur => "two-schur",
        BasisArg::Fundamental => "fundamental",
        BasisArg::Monomial => "monomial",
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse()
}

/// The text and JSON forms of one expansion command.
struct Computed {
    label: String,
    input: serde_json::Value,
    basis: BasisArg,
    expansion: Expansion,
    extra: Vec<(String, serde_json::Value, String)>,
}

fn render(c: Computed, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = format!("{} = {}\n", c.label, c.expansion);
            for (key, _, text) in &c.extra {
                let _ = writeln!(out, "{key}: {text}");
            }
            out
        }
        Format::Json => {
            let mut obj = json!({
                "input": c.input,
                "basis": basis_name(c.basis),
                "expansion": c.expansion,
            });
            for (key, value, _) in c.extra {
                obj[key] = value;
            }
            serde_json::to_string_pretty(&obj).expect("serializable") + "\n"
        }
    }
}

fn q_label(q: Option<i64>) -> String {
    q.map(|q| format!(" at q={q}")).unwrap_or_default()
}

fn cmd_llt(tuple: &str, basis: BasisArg, q: Option<i64>) -> Result<Computed> {
    let t: TwoDiagTuple = tuple.parse()?;
    let shape = t.to_shape();
    let fund = llt(&shape)?;
    let schur = fund.to_schur()?;
    let expansion = if basis == BasisArg::Fundamental && q.is_none() {
        Expansion::Fundamental(fund)
    } else {
        expand(&schur, basis, q)?
    };
    let mut extra = Vec::new();
    if q == Some(1) {
        let product = t
            .pieces()
            .iter()
            .map(|p| {
                let shape = match p {
                    Piece::H => Partition::rectangle(1, 2),
                    Piece::V => Partition::rectangle(2, 1),
                    Piece::S0 | Piece::S1 => Partition::rectangle(1, 1),
                };
                skew_schur(&shape, &Partition::empty()).expect("straight shape")
            })
            .fold(SchurVector::one(), |acc, s| acc.multiply(&s));
        let holds = specialize_schur(&schur, Some(1))? == product;
        extra.push((
            "q1_product_check".to_string(),
            json!({ "holds": holds, "product": product }),
            format!("{} (product of skew Schur functions: {product})", if holds { "pass" } else { "FAIL" }),
        ));
    }
    Ok(Computed {
        label: format!("llt({t}){}", q_label(q)),
        input: json!({ "command": "llt", "tuple": t.to_string(), "q": q }),
        basis,
        expansion,
        extra,
    })
}

fn cmd_unicellular(n: usize, lambda: &str, basis: BasisArg, q: Option<i64>) -> Result<Computed> {
    let lam = parse_partition(lambda)?;
    let l = l_poly(n, &lam)?;
    Ok(Computed {
        label: format!("L({n},{lam}){}", q_label(q)),
        input: json!({ "command": "unicellular", "n": n, "lambda": lam, "q": q }),
        basis,
        expansion: expand(&l, basis, q)?,
        extra: Vec::new(),
    })
}

fn cmd_kschur(lambda: &str, basis: BasisArg, q: Option<i64>) -> Result<Computed> {
    let lam = parse_partition(lambda)?;
    Ok(Computed {
        label: format!("k2({lam}){}", q_label(q)),
        input: json!({ "command": "kschur", "lambda": lam, "q": q }),
        basis,
        expansion: expand(&kschur2(&lam)?, basis, q)?,
        extra: Vec::new(),
    })
}

fn cmd_hl(lambda: &str, basis: BasisArg, q: Option<i64>) -> Result<Computed> {
    let lam = parse_partition(lambda)?;
    Ok(Computed {
        label: format!("H({lam}){}", q_label(q)),
        input: json!({ "command": "hall-littlewood", "lambda": lam, "q": q }),
        basis,
        expansion: expand(&hall_littlewood(&lam), basis, q)?,
        extra: Vec::new(),
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } => 3,
        _ => 2,
    }
}

/// Runs the command line, returning the exit code together with what
/// belongs on stdout and on stderr.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    let format = cli.format;
    let computed = match &cli.command {
        Command::Llt { tuple, basis, q } => cmd_llt(tuple, *basis, *q),
        Command::Unicellular { n, lambda, basis, q } => cmd_unicellular(*n, lambda, *basis, *q),
        Command::Kschur { lambda, basis, q } => cmd_kschur(lambda, *basis, *q),
        Command::HallLittlewood { lambda, basis, q } => cmd_hl(lambda, *basis, *q),
        Command::Verify { theorem, max_n, seed, samples } => {
            return cmd_verify(theorem, *max_n, *seed, *samples, cli.jobs, format);
        }
    };
    match computed {
        Ok(c) => (0, render(c, format), String::new()),
        Err(e) => (exit_code(&e), String::new(), format!("error: {e}\n")),
    }
}

fn cmd_verify(
    theorem: &str,
    max_n: Option<usize>,
    seed: u64,
    samples: usize,
    jobs: Option<usize>,
    format: Format,
) -> (i32, String, String) {
    let sweep: Sweep = match theorem.parse() {
        Ok(t) => t,
        Err(e) => {
            let names: Vec<&str> = Sweep::ALL.iter().map(|t| t.name()).collect();
            return (2, String::new(), format!("error: {e}; expected one of {}\n", names.join(", ")));
        }
    };
    if max_n == Some(0) || jobs == Some(0) {
        return (2, String::new(), "error: --max-n and --jobs must be positive\n".to_string());
    }
    let config = SweepConfig { max_n, seed, samples };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return (2, String::new(), format!("error: {e}\n")),
    };
    match pool.install(|| run_sweep(sweep, &config)) {
        Ok(report) => {
            let out = match format {
                Format::Text => report.to_string(),
                Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
            };
            (if report.passed() { 0 } else { 1 }, out, String::new())
        }
        Err(e) => (exit_code(&e), String::new(), format!("error: {e}\n")),
    }
}
