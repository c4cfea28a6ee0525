//! Run configuration: a single TOML file with every physics and numerics
//! default surfaced, plus command-line overrides.

use crate::CliError;
use bogoliubov2d::scattering::PotentialSpec;
use bogoliubov2d::QuadSpec;
use serde::Deserialize;
use std::path::{Path, PathBuf};

/// Top-level config file. Every section is optional; defaults reproduce the
/// reference bump-potential study.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub potential: PotentialSection,
    #[serde(default)]
    pub run: RunSection,
    #[serde(default)]
    pub physics: PhysicsSection,
    #[serde(default)]
    pub quad: QuadSection,
    #[serde(default)]
    pub output: OutputSection,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialSection {
    /// "bump" (analytic) or "table" (file of `r V` rows).
    #[serde(default = "default_kind")]
    pub kind: String,
    #[serde(default = "default_amplitude")]
    pub amplitude: f64,
    #[serde(default = "default_radius")]
    pub radius: f64,
    pub table_path: Option<PathBuf>,
}

fn default_kind() -> String {
    "bump".into()
}
fn default_amplitude() -> f64 {
    10.0
}
fn default_radius() -> f64 {
    1.0
}

impl Default for PotentialSection {
    fn default() -> Self {
        PotentialSection {
            kind: default_kind(),
            amplitude: default_amplitude(),
            radius: default_radius(),
            table_path: None,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSection {
    /// Reference density handed to the scattering solver.
    #[serde(default = "default_rho_ref")]
    pub rho_ref: f64,
    /// If set, use this ν instead of V̂(0)/b from the scattering solve.
    pub nu_override: Option<f64>,
    /// Gas parameters for the convergence sweep, strictly decreasing.
    #[serde(default = "default_b_list")]
    pub b_list: Vec<f64>,
    /// d values for the C_ν curve; empty means the built-in log-spaced grid.
    #[serde(default)]
    pub d_grid: Vec<f64>,
    #[serde(default)]
    pub temperature: f64,
}

fn default_rho_ref() -> f64 {
    1e-3
}
fn default_b_list() -> Vec<f64> {
    vec![0.05, 0.02, 0.01, 0.005]
}

impl Default for RunSection {
    fn default() -> Self {
        RunSection {
            rho_ref: default_rho_ref(),
            nu_override: None,
            b_list: default_b_list(),
            d_grid: Vec::new(),
            temperature: 0.0,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhysicsSection {
    /// Thermal density t₀ of the minimizer family; the expansion pipeline
    /// requires t₀ = 0 and rejects anything else.
    #[serde(default)]
    pub t0: f64,
    /// Upper end of the default d grid and of the d minimization scan.
    #[serde(default = "default_d_max")]
    pub d_max: f64,
    /// Physical density for the energy / ideal-gas scenarios.
    #[serde(default = "default_rho")]
    pub rho: f64,
    /// Constant in T_c = 4πρ/ln(ξ/4πb).
    #[serde(default = "default_xi")]
    pub xi: f64,
}

fn default_d_max() -> f64 {
    1e3
}
fn default_rho() -> f64 {
    1.0
}
fn default_xi() -> f64 {
    14.4
}

impl Default for PhysicsSection {
    fn default() -> Self {
        PhysicsSection { t0: 0.0, d_max: default_d_max(), rho: default_rho(), xi: default_xi() }
    }
}

/// Quadrature overrides; unset fields keep the library defaults.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadSection {
    pub abs_tol: Option<f64>,
    pub rel_tol: Option<f64>,
    pub max_subdivisions: Option<usize>,
    pub tail_cut: Option<f64>,
    pub tail_order: Option<i32>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    /// "csv" or "json".
    #[serde(default = "default_format")]
    pub format: String,
    pub path: Option<PathBuf>,
}

fn default_format() -> String {
    "csv".into()
}

impl Default for OutputSection {
    fn default() -> Self {
        OutputSection { format: default_format(), path: None }
    }
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else { return Ok(RunConfig::default()) };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let cfg: RunConfig = toml::from_str(&text)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.potential.kind != "bump" && self.potential.kind != "table" {
            return Err(CliError::Config(format!(
                "potential.kind must be \"bump\" or \"table\", got {:?}",
                self.potential.kind
            )));
        }
        if self.potential.kind == "table" && self.potential.table_path.is_none() {
            return Err(CliError::Config("potential.kind = \"table\" needs table_path".into()));
        }
        if self.run.b_list.is_empty() {
            return Err(CliError::Config("run.b_list must be nonempty".into()));
        }
        if self.run.b_list.iter().any(|&b| !(b > 0.0 && b < 1.0)) {
            return Err(CliError::Config("every b in run.b_list must lie in (0, 1)".into()));
        }
        if !(self.run.rho_ref > 0.0) {
            return Err(CliError::Config("run.rho_ref must be positive".into()));
        }
        if self.run.temperature < 0.0 {
            return Err(CliError::Config("run.temperature must be ≥ 0".into()));
        }
        if self.physics.t0 != 0.0 {
            return Err(CliError::Config(
                "physics.t0 ≠ 0 is surfaced for audit but unsupported; the expansion pipeline works at t₀ = 0".into(),
            ));
        }
        if !(self.physics.d_max > 0.0) || !(self.physics.rho > 0.0) {
            return Err(CliError::Config("physics.d_max and physics.rho must be positive".into()));
        }
        if self.output.format != "csv" && self.output.format != "json" {
            return Err(CliError::Config(format!(
                "output.format must be \"csv\" or \"json\", got {:?}",
                self.output.format
            )));
        }
        Ok(())
    }

    pub fn quad_spec(&self) -> QuadSpec {
        let d = QuadSpec::default();
        QuadSpec {
            abs_tol: self.quad.abs_tol.unwrap_or(d.abs_tol),
            rel_tol: self.quad.rel_tol.unwrap_or(d.rel_tol),
            max_subdivisions: self.quad.max_subdivisions.unwrap_or(d.max_subdivisions),
            tail_cut: self.quad.tail_cut.unwrap_or(d.tail_cut),
            tail_order: self.quad.tail_order.unwrap_or(d.tail_order),
        }
    }

    pub fn potential_spec(&self) -> Result<PotentialSpec, CliError> {
        match self.potential.kind.as_str() {
            "bump" => Ok(PotentialSpec::bump(self.potential.amplitude, self.potential.radius)),
            "table" => {
                let path = self.potential.table_path.as_ref().unwrap();
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CliError::Config(format!("cannot read {}: {e}", path.display()))
                })?;
                let mut pts = Vec::new();
                for (i, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let mut it = line.split([' ', '\t', ',']).filter(|s| !s.is_empty());
                    let parse = |s: Option<&str>| -> Result<f64, CliError> {
                        s.ok_or_else(|| {
                            CliError::Config(format!("{}:{}: need `r V`", path.display(), i + 1))
                        })?
                        .parse()
                        .map_err(|e| {
                            CliError::Config(format!("{}:{}: {e}", path.display(), i + 1))
                        })
                    };
                    pts.push((parse(it.next())?, parse(it.next())?));
                }
                PotentialSpec::from_table(&pts)
                    .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
            }
            _ => unreachable!("validated"),
        }
    }
}
