use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use farfield_iga::harness::{
    emit_plots, exit_code, output_dir, run_single, run_suite, run_sweep, RunRecord, ScatterConfig, Suite,
};
use farfield_iga::Error;

/// Isogeometric Helmholtz scattering with farfield-expansion absorbing
/// boundary conditions.
#[derive(Parser)]
#[command(name = "farfield-iga", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one configuration and write its record.
    Solve {
        #[arg(long)]
        config: PathBuf,
        /// Override a configuration key, e.g. `--set NT=8`.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Run every combination of the configuration's sweep lists.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Render SVG plots from a results CSV.
    Plot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run an acceptance suite: tables, lowfreq, closeboundary, sphere, bgt
    /// or all.
    Check {
        #[arg(long)]
        suite: String,
    },
}

const CHECK_FAILED: u8 = 5;

fn load(path: &Path, overrides: &[String]) -> Result<ScatterConfig, Error> {
    let mut cfg = ScatterConfig::load(path)?;
    for o in overrides {
        cfg.apply_override(o)?;
    }
    Ok(cfg)
}

fn describe(rec: &RunRecord) -> String {
    let ffp = rec.errors.ffp.map_or("-".to_string(), |e| format!("{e:.4e}"));
    format!(
        "N={} m={} DOF={} h={:.5} err_domain={:.4e} err_boundary={:.4e} err_ffp={ffp} residual={:.2e} solve={:.3}s",
        rec.radial_count,
        rec.angular_count,
        rec.dofs,
        rec.mesh_size,
        rec.errors.domain,
        rec.errors.boundary,
        rec.residual,
        rec.seconds
    )
}

fn run(cli: Cli) -> Result<u8, Error> {
    let out = output_dir(Path::new("output"));
    match cli.command {
        Command::Solve { config, overrides } => {
            let cfg = load(&config, &overrides)?;
            let rec = run_single(&cfg)?;
            println!("{}: {}", cfg.name, describe(&rec));
            let path = rec.persist(&out)?;
            println!("wrote {}", path.display());
            Ok(0)
        }
        Command::Sweep { config, overrides } => {
            let cfg = load(&config, &overrides)?;
            let report = run_sweep(&cfg)?;
            for row in &report.rows {
                match &row.result {
                    Ok(rec) => println!("{}", describe(rec)),
                    Err(e) => println!("failed: {e}"),
                }
            }
            if let Some(fit) = &report.fit {
                let pairwise: Vec<String> = fit.pairwise.iter().map(|q| format!("{q:.2}")).collect();
                println!("fitted order {:.3} (pairwise {})", fit.order, pairwise.join(", "));
            }
            let mut lists = cfg.zip.clone();
            lists.extend(cfg.sweep.iter().cloned());
            for path in report.persist(&cfg.name, &lists, &out)? {
                println!("wrote {}", path.display());
            }
            match report.rows.iter().find_map(|r| r.result.as_ref().err()) {
                Some(e) if report.failures() == report.rows.len() => Ok(exit_code(e) as u8),
                _ => Ok(0),
            }
        }
        Command::Plot { input, out } => {
            for path in emit_plots(&input, &out)? {
                println!("wrote {}", path.display());
            }
            Ok(0)
        }
        Command::Check { suite } => {
            let suites: Vec<Suite> =
                if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse::<Suite>()?] };
            let mut passed = true;
            for s in suites {
                for outcome in run_suite(s)? {
                    println!("{outcome}");
                    for line in &outcome.details {
                        println!("    {line}");
                    }
                    passed &= outcome.passed;
                }
            }
            Ok(if passed { 0 } else { CHECK_FAILED })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
