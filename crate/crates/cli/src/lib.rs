//! Command implementations behind the `adjsq` binary.

pub mod report;
pub mod verify;

use std::sync::Arc;
use std::time::Instant;

use adjsq::casdecomp::{exceptional_table, tensor_square_table, DecompTable, Part};
use adjsq::dimform::{cartan_power_dim, wedge_power_dim, weyl_dim, IrrepLabel};
use adjsq::oracle::{adjoint_character, decompose_capped, sym_alt_square, DEFAULT_CAP};
use adjsq::rational::parse_q;
use adjsq::{AlgebraId, Family, RootSystem, Weight};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{Check, ConstituentRow, DimRow, OracleRow, Rat, Report, Results, TableResult};

/// Largest tensor-square operator the verifier builds without `--max-dim`.
pub const MATRIX_CAP: u64 = 500;

#[derive(Parser, Debug)]
#[command(name = "adjsq", version, about = "Tensor squares of adjoint modules, exactly")]
pub struct Cli {
    /// Print the JSON report instead of the text table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<std::path::PathBuf>,
    /// Override the oracle and matrix size caps.
    #[arg(long, global = true, value_name = "N")]
    pub max_dim: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimensions from the Weyl formula and closed forms.
    Dims(DimsArgs),
    /// Constituents of S²g or ∧²g.
    Decompose(DecomposeArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    /// su, so, sp, g2, f4, e6, e7 or e8.
    #[arg(long)]
    pub algebra: String,
    /// Size of the natural module for su, so and sp.
    #[arg(long)]
    pub n: Option<u32>,
}

#[derive(Args, Debug)]
pub struct DimsArgs {
    #[command(flatten)]
    pub alg: AlgebraArgs,
    /// Highest weight: comma-separated ε-coordinates, or `kθ` written `ktheta`.
    #[arg(long, allow_hyphen_values = true)]
    pub hw: Option<String>,
    /// Read `--hw` as Dynkin labels instead of ε-coordinates.
    #[arg(long)]
    pub dynkin: bool,
    #[arg(long)]
    pub cartan_power: Option<u32>,
    #[arg(long)]
    pub wedge_power: Option<u32>,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub alg: AlgebraArgs,
    #[arg(long, value_enum)]
    pub part: PartArg,
    /// Cross-check the table against character stripping.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long)]
    pub n: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartArg {
    Sym,
    Alt,
}

impl From<PartArg> for Part {
    fn from(p: PartArg) -> Part {
        match p {
            PartArg::Sym => Part::Sym,
            PartArg::Alt => Part::Alt,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Casimir,
    Projectors,
    Harmonic,
    Hwv,
    Schur,
    All,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cap(String),
    #[error(transparent)]
    Lib(adjsq::Error),
}

impl From<adjsq::Error> for CliError {
    fn from(e: adjsq::Error) -> Self {
        use adjsq::Error::*;
        match e {
            TooLarge { .. } => CliError::Cap(e.to_string()),
            UnsupportedAlgebra(_) | UnsupportedRealization(_) | BadParam(_) | BadRange { .. }
            | NonDominantWeight(_) | NonIntegralWeight(_) => CliError::Usage(e.to_string()),
            other => CliError::Lib(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Lib(_) => 1,
        }
    }
}

/// Size limits in force for one invocation.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub oracle: u64,
    pub matrix: u64,
}

impl Caps {
    pub fn from_override(max_dim: Option<u64>) -> (Caps, Vec<String>) {
        match max_dim {
            None => (Caps { oracle: DEFAULT_CAP, matrix: MATRIX_CAP }, vec![]),
            Some(m) => (
                Caps { oracle: m, matrix: m },
                vec![format!(
                    "size caps overridden to {m} (defaults: oracle {DEFAULT_CAP}, matrices {MATRIX_CAP}); runs may be slow"
                )],
            ),
        }
    }
}

/// Runs a parsed command. `echo` is recorded verbatim in the report.
pub fn run(cli: &Cli, echo: &str) -> Result<Report, CliError> {
    let start = Instant::now();
    let (caps, warnings) = Caps::from_override(cli.max_dim);
    let (algebra, results, checks) = match &cli.command {
        Command::Dims(a) => {
            let id = parse_algebra(&a.alg.algebra, a.alg.n)?;
            (Some(id.name()), cmd_dims(id, a)?, vec![])
        }
        Command::Decompose(a) => {
            let id = parse_algebra(&a.alg.algebra, a.alg.n)?;
            let (t, checks) = cmd_decompose(id, a.part.into(), a.oracle, caps)?;
            (Some(id.name()), Results::Table(t), checks)
        }
        Command::Verify(a) => {
            let filter = match &a.algebra {
                Some(name) => Some(parse_algebra(name, a.n)?),
                None => None,
            };
            let (suites, checks) = verify::run_suites(a.suite, filter, a.n, caps)?;
            (filter.map(|id| id.name()), Results::Verify { suites }, checks)
        }
    };
    Ok(Report {
        command: echo.to_string(),
        algebra,
        results,
        checks,
        warnings,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn parse_algebra(name: &str, n: Option<u32>) -> Result<AlgebraId, CliError> {
    Ok(AlgebraId::parse(name, n)?)
}

/// Parses `--hw`: `theta`, `3theta`, or a comma-separated list of rationals.
pub fn parse_hw(rs: &Arc<RootSystem>, s: &str, dynkin: bool) -> Result<IrrepLabel, CliError> {
    let s = s.trim();
    if let Some(k) = s.strip_suffix("theta") {
        let k: i64 = if k.is_empty() {
            1
        } else {
            k.parse().map_err(|_| CliError::Usage(format!("bad multiple of theta: {s:?}")))?
        };
        if k < 0 {
            return Err(CliError::Usage("theta multiple must be non-negative".into()));
        }
        return Ok(IrrepLabel::theta_multiple(rs.clone(), k));
    }
    let parts: Vec<&str> = s.trim_matches(|c| c == '(' || c == ')').split(',').collect();
    if dynkin {
        let labels: Vec<i64> = parts
            .iter()
            .map(|p| p.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| CliError::Usage(format!("malformed Dynkin labels {s:?}")))?;
        if labels.len() != rs.rank() {
            return Err(CliError::Usage(format!("expected {} Dynkin labels, got {}", rs.rank(), labels.len())));
        }
        return Ok(IrrepLabel::from_labels(rs.clone(), &labels)?);
    }
    let coords = parts
        .iter()
        .map(|p| parse_q(p))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| CliError::Usage(format!("malformed weight {s:?}")))?;
    if coords.len() != rs.ambient_dim() {
        return Err(CliError::Usage(format!(
            "weight needs {} coordinates for {}, got {}",
            rs.ambient_dim(),
            rs.algebra(),
            coords.len()
        )));
    }
    Ok(IrrepLabel::new(rs.clone(), Weight::new(coords))?)
}

fn cmd_dims(id: AlgebraId, a: &DimsArgs) -> Result<Results, CliError> {
    let rs = Arc::new(RootSystem::new(id)?);
    let mut rows = vec![DimRow { quantity: "adjoint".into(), value: id.dim() as u64, source: "root count".into() }];
    if let Some(hw) = &a.hw {
        let label = parse_hw(&rs, hw, a.dynkin)?;
        rows.push(DimRow { quantity: format!("V({})", label.hw()), value: weyl_dim(&label), source: "Weyl product".into() });
    }
    if let Some(k) = a.cartan_power {
        let label = IrrepLabel::theta_multiple(rs.clone(), k as i64);
        rows.push(DimRow { quantity: format!("g^({k})"), value: weyl_dim(&label), source: "Weyl product on kθ".into() });
        if id.family() == Family::A && k >= 1 {
            let n = id.n().unwrap();
            rows.push(DimRow {
                quantity: format!("g^({k})"),
                value: cartan_power_dim(n, k)?,
                source: "closed form (n+2k-1)/(n-1) C(n+k-2,k)^2".into(),
            });
        }
    }
    if let Some(k) = a.wedge_power {
        if id.family() != Family::A {
            return Err(CliError::Usage("--wedge-power is defined for su only".into()));
        }
        rows.push(DimRow {
            quantity: format!("g^(1^{k})"),
            value: wedge_power_dim(id.n().unwrap(), k)?,
            source: "closed form for the top component of ∧^k g".into(),
        });
    }
    Ok(Results::Dims { rows })
}

/// The table for `id`, from the classical builders or the exceptional list.
pub fn lookup_table(id: AlgebraId, part: Part) -> Result<DecompTable, CliError> {
    if id.family().is_classical() {
        return Ok(tensor_square_table(id, part)?);
    }
    exceptional_table()
        .into_iter()
        .find(|t| t.algebra == id && t.part == part)
        .ok_or_else(|| CliError::Usage(format!("no table for {id}")))
}

fn cmd_decompose(id: AlgebraId, part: Part, oracle: bool, caps: Caps) -> Result<(TableResult, Vec<Check>), CliError> {
    let table = lookup_table(id, part)?;
    let rs = RootSystem::new(id)?;
    let rows = table
        .constituents
        .iter()
        .map(|c| ConstituentRow {
            tag: c.tag.clone(),
            labels: c.label.as_ref().map(|l| rs.dynkin_labels(l.hw()).expect("label lives in this root system")),
            dim: c.dim,
            multiplicity: 1,
            casimir: c.casimir.clone().map(Rat),
            split_eigenvalue: c.split_eig.clone().map(Rat),
            note: c.note.clone(),
        })
        .collect();
    let mut checks = vec![];
    let mut oracle_rows = None;
    if oracle {
        let (s, a) = sym_alt_square(&adjoint_character(Arc::new(rs)));
        let chi = if part == Part::Sym { s } else { a };
        let d = decompose_capped(&chi, caps.oracle)?;
        let fmt = |m: Vec<(u64, usize)>| {
            m.iter().map(|(d, k)| if *k == 1 { d.to_string() } else { format!("{d}x{k}") }).collect::<Vec<_>>().join(" + ")
        };
        checks.push(Check::eq("oracle_agreement", fmt(table.dim_multiset()), fmt(d.dim_multiset())));
        oracle_rows = Some(
            d.terms.iter().map(|t| OracleRow { labels: t.labels.clone(), dim: t.dim, multiplicity: t.multiplicity }).collect(),
        );
    }
    Ok((TableResult { part: part.name().into(), parent_dim: table.parent_dim, rows, oracle: oracle_rows }, checks))
}
