//! Command-line surface for the orbit, cuspidal-pair, and correspondence
//! tables, and for the identity verifier. All output is deterministic;
//! there is no configuration beyond the flags.

mod output;
mod rows;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use output::{meta, Format, Output};
use rows::{CuspidalRow, EntryRow, LeviRow, OrbitRow, OrdinaryRow, ReportRow};
use serde_json::json;
use springer_core::arith;
use springer_core::correspondence;
use springer_core::orbit::{self, Decoration, GroupKind, OrbitLabel};
use springer_core::partition::{self, Partition, PartitionClass};
use springer_core::series::{self, SlCharacter};
use springer_core::verify::{self, BijectionId, IdentityId};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

/// Desk-scale tables for nilpotent orbits, cuspidal pairs, and modular
/// Springer correspondences of classical groups.
#[derive(Parser)]
#[command(name = "springer", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List nilpotent orbit labels with local-system counts.
    Orbits(TableArgs),
    /// List cuspidal data (one induction series each).
    Cuspidals(TableArgs),
    /// List Levi classes carrying cuspidal data, with relative Weyl groups.
    Levis(TableArgs),
    /// Print the explicit correspondence table (or, with --ordinary, the
    /// plain Springer map in characteristic 2).
    Springer(SpringerArgs),
    /// Run counting-identity and bijection checks; exits 1 on any failure.
    Verify(VerifyArgs),
    /// Find the table entry for one orbit label (plus character in type A).
    Lookup(LookupArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Group kind: sl, sp, so, or spin.
    #[arg(long)]
    group: String,
    /// Size parameter (matrix size; sl rank for sl).
    #[arg(long)]
    size: u32,
    /// Coefficient characteristic (a prime).
    #[arg(long)]
    ell: u32,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpringerArgs {
    #[command(flatten)]
    table: TableArgs,
    /// Restrict to the ordinary (un-generalized) Springer map.
    #[arg(long)]
    ordinary: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every applicable check up to --max-size.
    #[arg(long, conflicts_with_all = ["identity", "bijection"])]
    all: bool,
    /// One identity check by name (e.g. sp-l2-count).
    #[arg(long, conflicts_with = "bijection")]
    identity: Option<String>,
    /// One bijection check by name (e.g. omega).
    #[arg(long)]
    bijection: Option<String>,
    /// Group kind for bijection checks.
    #[arg(long)]
    group: Option<String>,
    /// Size parameter for single checks.
    #[arg(long)]
    size: Option<u32>,
    /// Characteristic for single checks.
    #[arg(long)]
    ell: Option<u32>,
    /// Size bound for --all.
    #[arg(long, default_value_t = 10)]
    max_size: u32,
    /// Comma-separated primes for --all.
    #[arg(long, default_value = "2,3")]
    primes: String,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LookupArgs {
    /// Group kind: sl, sp, or so.
    #[arg(long)]
    group: String,
    /// Size parameter.
    #[arg(long)]
    size: u32,
    /// Coefficient characteristic (a prime).
    #[arg(long)]
    ell: u32,
    /// Orbit partition, e.g. "4,2,1,1".
    #[arg(long)]
    orbit: String,
    /// Orbit decoration for split very even orbits.
    #[arg(long, default_value = "none")]
    decoration: String,
    /// Character residue (type A only; the modulus is the prime-to-ell part
    /// of the size).
    #[arg(long)]
    residue: Option<u64>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl From<springer_core::Error> for CliError {
    fn from(e: springer_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Domain(format!("{e:#}"))
    }
}

/// Desk-scale size cap: everything in range is exact and fast; beyond it the
/// table sizes stop being useful at a terminal.
const MAX_SIZE: u32 = 64;

fn parse_group(group: &str, size: u32) -> Result<GroupKind, CliError> {
    let kind = match group.to_ascii_lowercase().as_str() {
        "sl" => GroupKind::Sl(size),
        "sp" => GroupKind::Sp(size),
        "so" => GroupKind::So(size),
        "spin" => GroupKind::Spin(size),
        other => {
            return Err(CliError::Usage(format!(
                "unknown group '{other}' (expected sl, sp, so, or spin)"
            )));
        }
    };
    if size > MAX_SIZE {
        return Err(CliError::Usage(format!(
            "size {size} exceeds the supported bound {MAX_SIZE}"
        )));
    }
    kind.validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(kind)
}

fn parse_ell(ell: u32) -> Result<u32, CliError> {
    if arith::is_prime(ell) {
        Ok(ell)
    } else {
        Err(CliError::Usage(format!("--ell {ell} is not prime")))
    }
}

fn parse_decoration(s: &str) -> Result<Decoration, CliError> {
    match s {
        "none" => Ok(Decoration::None),
        "I" => Ok(Decoration::I),
        "II" => Ok(Decoration::II),
        other => Err(CliError::Usage(format!(
            "unknown decoration '{other}' (expected none, I, or II)"
        ))),
    }
}

fn group_meta(kind: GroupKind, ell: u32) -> Vec<(&'static str, serde_json::Value)> {
    vec![
        ("group", json!(kind.to_string())),
        ("size", json!(kind.size())),
        ("ell", json!(ell)),
    ]
}

fn run_orbits(args: &TableArgs) -> Result<ExitCode, CliError> {
    let kind = parse_group(&args.group, args.size)?;
    let ell = parse_ell(args.ell)?;
    if matches!(kind, GroupKind::Spin(_)) {
        return Err(CliError::Domain(
            "orbit-level local systems are not modelled for spin; \
             its orbit set matches --group so"
                .into(),
        ));
    }
    let distinguished: Vec<OrbitLabel> = orbit::distinguished_orbit_labels(kind);
    let mut table = Vec::new();
    for label in orbit::orbit_labels(kind) {
        let (partition, decoration) = rows::orbit_label_of(&label);
        table.push(OrbitRow {
            partition,
            decoration,
            distinguished: distinguished.contains(&label),
            local_systems: orbit::local_system_count(kind, &label, ell)?,
        });
    }
    Output::table("orbits", &group_meta(kind, ell), &table)?
        .emit(args.format, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn run_cuspidals(args: &TableArgs) -> Result<ExitCode, CliError> {
    let kind = parse_group(&args.group, args.size)?;
    let ell = parse_ell(args.ell)?;
    let mut table = Vec::new();
    for levi in series::cuspidal_levis(kind, ell) {
        let irr = series::irr_count(&series::weyl_shape(&levi), ell);
        for datum in series::cuspidal_data(&levi, ell)? {
            table.push(CuspidalRow::of(&datum, irr));
        }
    }
    Output::table("cuspidals", &group_meta(kind, ell), &table)?
        .emit(args.format, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn run_levis(args: &TableArgs) -> Result<ExitCode, CliError> {
    let kind = parse_group(&args.group, args.size)?;
    let ell = parse_ell(args.ell)?;
    let mut table = Vec::new();
    for levi in series::cuspidal_levis(kind, ell) {
        let irr = series::irr_count(&series::weyl_shape(&levi), ell);
        let data = series::cuspidal_data(&levi, ell)?.len() as u64;
        table.push(LeviRow::of(&levi, irr, data));
    }
    Output::table("levis", &group_meta(kind, ell), &table)?
        .emit(args.format, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn run_springer(args: &SpringerArgs) -> Result<ExitCode, CliError> {
    let kind = parse_group(&args.table.group, args.table.size)?;
    let ell = parse_ell(args.table.ell)?;
    let mut meta_fields = group_meta(kind, ell);
    if args.ordinary {
        if ell != 2 {
            return Err(CliError::Domain(
                "the ordinary modular Springer map is computed here for \
                 characteristic 2 only"
                    .into(),
            ));
        }
        meta_fields.push(("ordinary", json!(true)));
        let mut table = Vec::new();
        for lam in partition::enumerate(kind.size() / 2, PartitionClass::LRegular(2)) {
            let image = correspondence::springer_ordinary(kind, &lam)?;
            table.push(OrdinaryRow {
                label: rows::parts(&lam),
                orbit: rows::parts(&image),
            });
        }
        Output::table("springer", &meta_fields, &table)?
            .emit(args.table.format, args.table.out.as_deref())?;
        return Ok(ExitCode::SUCCESS);
    }
    let table: Vec<EntryRow> = correspondence::full_table(kind, ell)?
        .iter()
        .map(EntryRow::of)
        .collect();
    Output::table("springer", &meta_fields, &table)?
        .emit(args.table.format, args.table.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn parse_primes(list: &str) -> Result<Vec<u32>, CliError> {
    let mut primes = Vec::new();
    for tok in list.split(',') {
        let p: u32 = tok
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad prime '{tok}' in --primes")))?;
        if !arith::is_prime(p) {
            return Err(CliError::Usage(format!("{p} in --primes is not prime")));
        }
        primes.push(p);
    }
    Ok(primes)
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    let reports = if args.all {
        let primes = parse_primes(&args.primes)?;
        if args.max_size > MAX_SIZE {
            return Err(CliError::Usage(format!(
                "--max-size {} exceeds the supported bound {MAX_SIZE}",
                args.max_size
            )));
        }
        verify::verify_all(args.max_size, &primes)
    } else if let Some(name) = &args.identity {
        let id = IdentityId::from_str(name).map_err(|e| CliError::Usage(e.to_string()))?;
        let size = args
            .size
            .ok_or_else(|| CliError::Usage("--identity needs --size".into()))?;
        let ell = parse_ell(args.ell.ok_or_else(|| CliError::Usage("--identity needs --ell".into()))?)?;
        vec![verify::verify(id, size, ell)?]
    } else if let Some(name) = &args.bijection {
        let map = BijectionId::from_str(name).map_err(|e| CliError::Usage(e.to_string()))?;
        let group = args
            .group
            .as_ref()
            .ok_or_else(|| CliError::Usage("--bijection needs --group".into()))?;
        let size = args
            .size
            .ok_or_else(|| CliError::Usage("--bijection needs --size".into()))?;
        let ell = parse_ell(args.ell.ok_or_else(|| CliError::Usage("--bijection needs --ell".into()))?)?;
        let kind = parse_group(group, size)?;
        vec![verify::verify_bijection(map, kind, ell)?]
    } else {
        return Err(CliError::Usage(
            "choose one of --all, --identity <name>, or --bijection <name>".into(),
        ));
    };

    let all_pass = reports.iter().all(|r| r.pass);
    let table: Vec<ReportRow> = reports.iter().map(ReportRow::of).collect();
    let meta_fields = vec![
        ("checks", meta(table.len())),
        ("all_pass", meta(all_pass)),
    ];
    Output::table("verify", &meta_fields, &table)?
        .emit(args.format, args.out.as_deref())?;
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run_lookup(args: &LookupArgs) -> Result<ExitCode, CliError> {
    let kind = parse_group(&args.group, args.size)?;
    let ell = parse_ell(args.ell)?;
    let orbit_partition = Partition::from_str(&args.orbit)
        .map_err(|e| CliError::Usage(format!("--orbit: {e}")))?;
    let decoration = parse_decoration(&args.decoration)?;
    let label = OrbitLabel::new(orbit_partition, decoration);
    let character = match kind {
        GroupKind::Sl(n) => {
            let modulus = arith::prime_to_part(n as u64, ell).expect("n >= 1");
            let residue = args.residue.unwrap_or(0);
            Some(SlCharacter::new(modulus, residue)?)
        }
        _ => {
            if args.residue.is_some() {
                return Err(CliError::Usage(
                    "--residue applies to --group sl only".into(),
                ));
            }
            None
        }
    };
    let table = correspondence::full_table(kind, ell)?;
    let entry = correspondence::inverse_lookup(&table, &label, character)?;
    let row = EntryRow::of(entry);
    Output::single("lookup", &group_meta(kind, ell), &row)?
        .emit(args.format, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Orbits(args) => run_orbits(args),
        Command::Cuspidals(args) => run_cuspidals(args),
        Command::Levis(args) => run_levis(args),
        Command::Springer(args) => run_springer(args),
        Command::Verify(args) => run_verify(args),
        Command::Lookup(args) => run_lookup(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
