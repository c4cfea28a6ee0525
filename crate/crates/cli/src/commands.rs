//! The five batch scenarios. Each returns a table plus the list of failed
//! numeric checks; the caller maps those to the exit code.

use crate::config::RunConfig;
use crate::table::{Cell, Table};
use crate::CliError;
use bogoliubov2d::asymptotics::{
    critical_temperature_2d, ideal_gas_2d, ideal_gas_2d_mu, ideal_gas_3d, minimize_cnu,
    rho_fc_closed,
};
use bogoliubov2d::bogoliubov::{error_diagnostics, solve_rho0};
use bogoliubov2d::constants::{EIGHT_PI, TWO_PI};
use bogoliubov2d::logft::{c0_check, delta_cancellation_check, epsilon_for, p_action};
use bogoliubov2d::scattering::ScatteringSolution;
use bogoliubov2d::{
    asymptotics, solve_scattering, Interaction, MinimizerState, QuadSpec, RadialFunction,
    ThermoPoint,
};
use bogoliubov2d::constants::EULER_GAMMA;

pub struct Outcome {
    pub table: Table,
    /// Human-readable descriptions of failed numeric checks (empty = pass).
    pub failures: Vec<String>,
}

impl Outcome {
    fn clean(table: Table) -> Self {
        Outcome { table, failures: Vec::new() }
    }
}

fn solve(cfg: &RunConfig, spec: &QuadSpec) -> Result<ScatteringSolution, CliError> {
    let pot = cfg.potential_spec()?;
    solve_scattering(&pot, cfg.run.rho_ref, spec).map_err(CliError::from)
}

/// ν from the override if given, else V̂(0)/b of a fresh scattering solve.
fn resolve_nu(cfg: &RunConfig, spec: &QuadSpec) -> Result<f64, CliError> {
    match cfg.run.nu_override {
        Some(nu) => Ok(nu),
        None => {
            let sol = solve(cfg, spec)?;
            Ok(sol.vhat0 / sol.b)
        }
    }
}

pub fn cmd_scatter(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let spec = cfg.quad_spec();
    let sol = solve(cfg, &spec)?;
    let ratio = sol.vwhat0 / (EIGHT_PI * sol.b);
    let mut table = Table::new(&[
        "a",
        "b",
        "epsilon",
        "vhat0",
        "nu",
        "vwhat0_over_8pib",
        "fit_residual",
        "curvature_v",
        "curvature_vw",
    ]);
    table.push(vec![
        Cell::num(sol.a),
        Cell::num(sol.b),
        Cell::num(sol.epsilon),
        Cell::num(sol.vhat0),
        Cell::num(sol.vhat0 / sol.b),
        Cell::num(ratio),
        Cell::num(sol.fit_residual),
        Cell::num(sol.curvature_v),
        Cell::num(sol.curvature_vw),
    ]);
    let mut failures = Vec::new();
    if !((ratio - 1.0).abs() <= 1e-8) {
        failures.push(format!("|V̂w(0)/8πb − 1| = {:e} exceeds 1e-8", (ratio - 1.0).abs()));
    }
    Ok(Outcome { table, failures })
}

pub fn cmd_cnu(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let spec = cfg.quad_spec();
    let nu = resolve_nu(cfg, &spec)?;
    let grid: Vec<f64> = if cfg.run.d_grid.is_empty() {
        // d = 0 endpoint plus 199 log-spaced points up to d_max.
        let n = 199;
        let (lo, hi) = (1e-6f64, cfg.physics.d_max);
        std::iter::once(0.0)
            .chain((0..n).map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64)))
            .collect()
    } else {
        cfg.run.d_grid.clone()
    };
    let mut table = Table::new(&["kind", "nu", "d", "c_nu"]);
    for &d in &grid {
        let c = asymptotics::c_nu_of_d(nu, d)?;
        table.push(vec![Cell::text("point"), Cell::num(nu), Cell::num(d), Cell::num(c)]);
    }
    let (d_star, c_min) = minimize_cnu(nu)?;
    table.push(vec![Cell::text("minimum"), Cell::num(nu), Cell::num(d_star), Cell::num(c_min)]);
    Ok(Outcome::clean(table))
}

pub fn cmd_energy(cfg: &RunConfig, b_override: &[f64]) -> Result<Outcome, CliError> {
    if cfg.run.temperature != 0.0 {
        return Err(CliError::Config("energy expansion mode requires temperature = 0".into()));
    }
    let spec = cfg.quad_spec();
    let nu = resolve_nu(cfg, &spec)?;
    let b_list = if b_override.is_empty() { cfg.run.b_list.clone() } else { b_override.to_vec() };
    if b_list.windows(2).any(|w| w[1] >= w[0]) {
        eprintln!("warning: b list is not strictly decreasing; trend check may be meaningless");
    }
    let rho = cfg.physics.rho;
    let mut table = Table::new(&[
        "b",
        "f_min",
        "leading",
        "log_term",
        "const_term",
        "residual",
        "residual_ratio",
        "d_star",
        "rho0_over_rho",
        "abs_e2",
        "abs_e3",
        "abs_e4",
        "a1_bound",
    ]);
    let mut ratios = Vec::new();
    for &b in &b_list {
        let tp = ThermoPoint { rho, temperature: 0.0, nu, b };
        let exp = asymptotics::ground_state_expansion(&tp, &spec)?;
        let f_min = exp.leading + exp.log_term + exp.const_term + exp.residual;
        let ratio = exp.residual.abs() / (rho * rho * b * b);
        let inter = Interaction::Idealized { b, nu, rho_ref: rho };
        let rho0 = solve_rho0(rho, exp.d_star, 0.0, &inter, &spec)?;
        let st = MinimizerState::new(rho0, exp.d_star, 0.0, inter);
        let diag = error_diagnostics(&tp, &st, &spec)?;
        ratios.push(ratio);
        table.push(vec![
            Cell::num(b),
            Cell::num(f_min),
            Cell::num(exp.leading),
            Cell::num(exp.log_term),
            Cell::num(exp.const_term),
            Cell::num(exp.residual),
            Cell::num(ratio),
            Cell::num(exp.d_star),
            Cell::num(rho0 / rho),
            Cell::num(diag.e2.abs()),
            Cell::num(diag.e3.abs()),
            Cell::num(diag.e4.abs()),
            Cell::num(diag.a1_bound),
        ]);
    }
    let mut failures = Vec::new();
    if ratios.len() >= 2 && ratios.windows(2).any(|w| w[1] >= w[0]) {
        failures.push(format!(
            "residual/(ρ²b²) is not monotonically decreasing along the b sweep: {ratios:?}"
        ));
    }
    Ok(Outcome { table, failures })
}

pub fn cmd_logft(cfg: &RunConfig, perturb_eps: f64) -> Result<Outcome, CliError> {
    let spec = cfg.quad_spec();
    let mut table = Table::new(&["check", "detail", "measured", "tolerance", "status"]);
    let mut failures = Vec::new();
    let mut push = |table: &mut Table, name: &str, detail: String, measured: f64, tol: f64| {
        let ok = measured.abs() <= tol;
        table.push(vec![
            Cell::text(name),
            Cell::text(detail),
            Cell::num(measured),
            Cell::num(tol),
            Cell::text(if ok { "pass" } else { "fail" }),
        ]);
        if !ok {
            failures.push(format!("{name}: |{measured:e}| > {tol:e}"));
        }
    };

    let c0_closed = TWO_PI * TWO_PI * (2.0f64.ln() - EULER_GAMMA);
    let c0 = c0_check(&spec)?;
    push(&mut table, "c0", "vs (2π)²(ln2−Γ)".into(), c0 - c0_closed, 1e-8);

    for b in [0.01, 0.05] {
        for a in [0.3, 1.0] {
            let eps = epsilon_for(b, a) * perturb_eps;
            let r = delta_cancellation_check(b, a, eps);
            push(&mut table, "delta_cancellation", format!("b={b} a={a}"), r, 1e-14);
        }
    }

    let phi = RadialFunction::new(|p| (-0.5 * p * p).exp());
    let base = p_action(&phi, &spec)?;
    for kappa in [2.0f64, 5.0] {
        let scaled = RadialFunction::new(move |p| (-0.5 * (kappa * p) * (kappa * p)).exp());
        let v = p_action(&scaled, &spec)?;
        // φ(0) = 1 for the Gaussian probe.
        let r = v - base - TWO_PI * TWO_PI * kappa.ln();
        push(&mut table, "p_scaling", format!("kappa={kappa}"), r, 1e-7);
    }

    Ok(Outcome { table, failures })
}

pub fn cmd_ideal(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let spec = cfg.quad_spec();
    let t = if cfg.run.temperature > 0.0 { cfg.run.temperature } else { 1.0 };
    let rho = cfg.physics.rho;
    let b = cfg.run.b_list[0];
    let mut table = Table::new(&["quantity", "value"]);
    let row = |table: &mut Table, name: &str, v: f64| {
        table.push(vec![Cell::text(name), Cell::num(v)]);
    };
    row(&mut table, "temperature", t);
    row(&mut table, "rho", rho);

    let mu = ideal_gas_2d_mu(rho, t)?;
    let rho_back = ideal_gas_2d(mu, t)?;
    row(&mut table, "mu_2d", mu);
    row(&mut table, "rho_2d_of_mu", rho_back);

    let (f0, rho_fc) = ideal_gas_3d(t, rho, &spec)?;
    let fc_closed = rho_fc_closed(t);
    row(&mut table, "f0_3d", f0);
    row(&mut table, "rho_fc_3d", rho_fc);
    row(&mut table, "rho_fc_closed", fc_closed);

    let tc = critical_temperature_2d(rho, b, cfg.physics.xi)?;
    row(&mut table, "b", b);
    row(&mut table, "xi", cfg.physics.xi);
    row(&mut table, "tc_2d", tc);

    let mut failures = Vec::new();
    if !((rho_back - rho).abs() <= 1e-10 * rho) {
        failures.push(format!("2D μ(ρ) round-trip off by {:e}", (rho_back - rho).abs()));
    }
    if !((rho_fc - fc_closed).abs() <= 1e-8 * fc_closed) {
        failures.push(format!(
            "3D ρ_fc quadrature vs ζ(3/2)(T/4π)^3/2 off by {:e}",
            (rho_fc - fc_closed).abs()
        ));
    }
    Ok(Outcome { table, failures })
}
