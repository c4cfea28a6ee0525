//! `bog2d`: batch driver for the 2D Bogoliubov pipeline. Reads one config per
//! invocation, runs a scenario, and writes a deterministic CSV or JSON table.
//!
//! Exit codes: 0 = all checks pass, 1 = numeric check failure, 2 = config or
//! input error.

use bog2d::commands::{self, Outcome};
use bog2d::config::RunConfig;
use bog2d::CliError;
use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "bog2d", version, about = "2D Bogoliubov free energy tables")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// TOML run configuration; defaults apply when omitted.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Output file (stdout when omitted); overrides the config.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Table encoding; overrides the config.
    #[arg(long, value_parser = ["csv", "json"])]
    format: Option<String>,
    /// Gas parameter(s); repeat to override the configured b list.
    #[arg(long = "b", value_name = "B")]
    b: Vec<f64>,
    /// Override ν instead of taking V̂(0)/b from the scattering solve.
    #[arg(long)]
    nu: Option<f64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve the scattering problem and report a, b, ε, V̂(0), ν, fit data.
    Scatter(Common),
    /// Tabulate C_ν(d) on a d grid with an (d*, min) footer row.
    Cnu(Common),
    /// Per-b ground-state expansion with residuals and error-term magnitudes.
    Energy(Common),
    /// Log-Fourier-transform identity checks (c₀, δ-cancellation, P-scaling).
    Logft {
        #[command(flatten)]
        common: Common,
        /// Multiply ε by this factor (negative control for δ-cancellation).
        #[arg(long = "perturb-eps", value_name = "FACTOR", default_value_t = 1.0)]
        perturb_eps: f64,
    },
    /// Ideal-gas references: 2D μ(ρ), 3D free energy and ρ_fc, T_c estimate.
    Ideal(Common),
}

impl Cmd {
    fn common(&self) -> &Common {
        match self {
            Cmd::Scatter(c) | Cmd::Cnu(c) | Cmd::Energy(c) | Cmd::Ideal(c) => c,
            Cmd::Logft { common, .. } => common,
        }
    }
}

fn load_config(common: &Common) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::load(common.config.as_deref())?;
    if let Some(nu) = common.nu {
        cfg.run.nu_override = Some(nu);
    }
    if !common.b.is_empty() {
        if common.b.iter().any(|&b| !(b > 0.0 && b < 1.0)) {
            return Err(CliError::Config("every --b must lie in (0, 1)".into()));
        }
        cfg.run.b_list = common.b.clone();
    }
    if let Some(f) = &common.format {
        cfg.output.format = f.clone();
    }
    if let Some(p) = &common.out {
        cfg.output.path = Some(p.clone());
    }
    Ok(cfg)
}

fn run(cmd: &Cmd) -> Result<Outcome, CliError> {
    let cfg = load_config(cmd.common())?;
    let outcome = match cmd {
        Cmd::Scatter(_) => commands::cmd_scatter(&cfg)?,
        Cmd::Cnu(_) => commands::cmd_cnu(&cfg)?,
        Cmd::Energy(c) => commands::cmd_energy(&cfg, &c.b)?,
        Cmd::Logft { perturb_eps, .. } => commands::cmd_logft(&cfg, *perturb_eps)?,
        Cmd::Ideal(_) => commands::cmd_ideal(&cfg)?,
    };
    let text = outcome.table.render(&cfg.output.format);
    match &cfg.output.path {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| CliError::Config(format!("cannot write to stdout: {e}")))?;
        }
    }
    Ok(outcome)
}

fn main() {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok(outcome) if outcome.failures.is_empty() => {}
        Ok(outcome) => {
            for f in &outcome.failures {
                eprintln!("check failed: {f}");
            }
            std::process::exit(1);
        }
        Err(e @ CliError::Config(_)) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
        Err(e @ CliError::Numeric(_)) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    }
}
