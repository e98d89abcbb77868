use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use grpexp::catalog::{self, Catalog};
use grpexp::constructions::FamilySpec;
use grpexp::runner::{run_suite, Check, RunConfig};
use grpexp::{invariants, landau, Caps};

/// Exact checks of `p^(d(G)-2) <= |G|/exp(G)` on permutation groups.
#[derive(Parser)]
#[command(name = "grpexp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks over a catalog.
    Check {
        catalog: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated subset of theorem,lemma,star,star3,sections,gl,proposition,dmax.
        #[arg(long)]
        checks: Option<String>,
        #[arg(long, default_value_t = Caps::default().enumeration)]
        enum_cap: u64,
        #[arg(long, default_value_t = Caps::default().lattice)]
        lattice_cap: u64,
        #[arg(long, default_value_t = Caps::default().coset)]
        coset_cap: u64,
        /// Evaluated section samples required per entry.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit 0 even when some checks were skipped at a cap.
        #[arg(long)]
        allow_skips: bool,
    },
    /// Print the invariants of every catalog entry as JSON.
    Invariants {
        catalog: PathBuf,
        #[arg(long, default_value_t = Caps::default().enumeration)]
        enum_cap: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit one built family as a catalog file.
    ///
    /// Families: cyclic N, elementary_abelian P K, dihedral N, symmetric N,
    /// alternating N, quaternion8, psl2 P, power_auto Q N, and
    /// direct_product FACTOR... where each factor is written `family:a,b`
    /// (for example `direct_product cyclic:5 symmetric:3`).
    Construct {
        family: String,
        params: Vec<String>,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit lcm(1..n) against the largest element order of S_n as CSV.
    Landau {
        #[arg(long)]
        max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn output(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn family(name: &str, params: &[String]) -> Result<FamilySpec> {
    if name == "direct_product" {
        let factors = params
            .iter()
            .map(|p| FamilySpec::parse(p))
            .collect::<grpexp::Result<Vec<_>>>()?;
        let spec = FamilySpec::DirectProduct(factors);
        spec.validate()?;
        return Ok(spec);
    }
    let params = params
        .iter()
        .map(|p| p.parse::<usize>().with_context(|| format!("bad parameter {p:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilySpec::from_params(name, &params)?)
}

/// Exit status of a command that ran to completion.
fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check {
            catalog,
            seed,
            checks,
            enum_cap,
            lattice_cap,
            coset_cap,
            samples,
            format,
            out,
            allow_skips,
        } => {
            let entries = catalog::parse_catalog(&catalog)?;
            let checks = match checks {
                Some(list) => Check::parse_list(&list)?,
                None => Check::ALL.to_vec(),
            };
            let config = RunConfig {
                checks,
                seed,
                caps: Caps {
                    enumeration: enum_cap,
                    coset: coset_cap,
                    lattice: lattice_cap,
                },
                sample_count: samples,
            };
            let start = Instant::now();
            let report = run_suite(&entries, &config);
            let mut w = output(out.as_deref())?;
            match format {
                Format::Json => w.write_all(report.to_json().as_bytes())?,
                Format::Csv => report.write_csv(&mut w)?,
            }
            w.flush()?;
            let s = &report.summary;
            eprintln!(
                "{} entries: {} pass, {} fail, {} skipped, {} n/a, {} expectation mismatches in {:.2?}",
                s.entries,
                s.pass,
                s.fail,
                s.skipped,
                s.na,
                s.expectation_failures,
                start.elapsed()
            );
            Ok(report.exit_code(allow_skips) as u8)
        }
        Command::Invariants {
            catalog,
            enum_cap,
            out,
        } => {
            let entries = catalog::parse_catalog(&catalog)?;
            let caps = Caps {
                enumeration: enum_cap,
                ..Caps::default()
            };
            let mut rows = Vec::new();
            let mut failed = false;
            for e in &entries {
                let mut row = serde_json::json!({ "name": e.name });
                match invariants::invariants_report(&e.group()?, &caps) {
                    Ok(inv) => row["invariants"] = serde_json::to_value(inv)?,
                    Err(err) => {
                        failed = true;
                        row["error"] = err.to_string().into();
                    }
                }
                rows.push(row);
            }
            let mut w = output(out.as_deref())?;
            serde_json::to_writer_pretty(&mut w, &rows)?;
            writeln!(w)?;
            w.flush()?;
            Ok(u8::from(failed))
        }
        Command::Construct {
            family: name,
            params,
            name: entry_name,
            out,
        } => {
            let spec = family(&name, &params)?;
            let catalog: Catalog = catalog::family_catalog(&spec, entry_name.as_deref())?;
            let mut w = output(out.as_deref())?;
            w.write_all(catalog.to_json().as_bytes())?;
            w.flush()?;
            Ok(0)
        }
        Command::Landau { max, out } => {
            let rows = landau::landau_table(max)?;
            let mut w = output(out.as_deref())?;
            landau::write_landau_csv(&rows, &mut w)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
