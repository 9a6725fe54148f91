use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use quartic::commands::{self, PhiArgs, Report, SchrodingerArgs};
use quartic::config::{emit_config, generate_example, parse_config, ConfigDocument};
use quartic::table::Format;
use quartic_core::ratcore::{int, parse_rational, Rational};
use quartic_core::Error;

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("not a rational number: {}", s))
}

#[derive(Parser)]
#[command(name = "quartic", version, about = "Quartic polynomial algebras: Casimirs, realizations, spectra")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// JSON config; without it the extended-oscillator example at --l is used.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_name = "RATIONAL", value_parser = rational, allow_hyphen_values = true)]
    l: Option<Rational>,
    #[arg(long = "p-max", global = true, value_name = "INT")]
    p_max: Option<usize>,
    #[arg(long, global = true, value_name = "FLOAT")]
    tol: Option<f64>,
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Casimir coefficients c1..c11 (classical mode also runs the bracket oracle).
    Casimir,
    /// Deformed-oscillator realization and its symbolic checks.
    Realize,
    /// Closed-form structure function against the pointwise oracle.
    Phi {
        #[arg(long, value_name = "RATIONAL", value_parser = rational, allow_hyphen_values = true)]
        energy: Option<Rational>,
        #[arg(long, value_name = "RATIONAL", value_parser = rational, allow_hyphen_values = true)]
        u: Option<Rational>,
        /// Casimir value; defaults to casimir_of_h at the energy.
        #[arg(long, value_name = "RATIONAL", value_parser = rational, allow_hyphen_values = true)]
        k: Option<Rational>,
    },
    /// Candidate finite-dimensional representations.
    Spectrum,
    /// Matrix residuals of the relations and identities on every unitary candidate.
    Verify,
    /// Finite-difference spectrum of the example Hamiltonian and comparison.
    Schrodinger {
        #[arg(long, default_value_t = 4000)]
        points: usize,
        #[arg(long = "e-max")]
        e_max: Option<f64>,
    },
    /// Print the example config.
    Example,
}

fn load(g: &Global) -> anyhow::Result<ConfigDocument> {
    let mut doc = match &g.config {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse_config(&text).with_context(|| format!("in {}", path.display()))?
        }
        None => generate_example(&g.l.clone().unwrap_or_else(|| int(1)))?,
    };
    if let Some(p) = g.p_max {
        doc.solver.p_max = p;
    }
    if let Some(t) = g.tol {
        doc.solver.tol = t;
    }
    Ok(doc)
}

fn sink(g: &Global) -> anyhow::Result<Box<dyn Write>> {
    Ok(match &g.out {
        Some(path) => Box::new(fs::File::create(path).with_context(|| format!("creating {}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let g = &cli.global;
    if let Command::Example = cli.command {
        let doc = generate_example(&g.l.clone().unwrap_or_else(|| int(1)))?;
        let mut out = sink(g)?;
        writeln!(out, "{}", emit_config(&doc))?;
        return Ok(true);
    }
    let doc = load(g)?;
    let report: Report = match cli.command {
        Command::Casimir => commands::casimir(&doc)?,
        Command::Realize => commands::realize_cmd(&doc)?,
        Command::Phi { energy, u, k } => {
            let d = PhiArgs::default();
            let args = PhiArgs { energy: energy.unwrap_or(d.energy), u: u.unwrap_or(d.u), k, n_max: d.n_max };
            commands::phi(&doc, &args)?
        }
        Command::Spectrum => commands::spectrum(&doc)?,
        Command::Verify => commands::verify(&doc, doc.solver.tol)?,
        Command::Schrodinger { points, e_max } => {
            let args = SchrodingerArgs {
                l: g.l.clone().unwrap_or_else(|| int(1)),
                points,
                e_max,
                cluster_tol: g.tol.unwrap_or(5e-3),
            };
            commands::schrodinger(&args, doc.solver.p_max)?
        }
        Command::Example => unreachable!(),
    };
    for note in &report.notes {
        eprintln!("{}", note);
    }
    report.table.write(g.format, &mut *sink(g)?)?;
    if !report.pass {
        eprintln!("verification failed");
    }
    Ok(report.pass)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {:#}", e);
            match e.downcast_ref::<Error>() {
                Some(Error::RealizationCheck(_)) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
