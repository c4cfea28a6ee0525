//! Dilute-limit closed forms: the depletion coefficient C(d), the
//! order-ρ²b² constant C_ν(d) and its minimization, the exact I_< bracket,
//! the I_> quadrature, the ground-state expansion, and ideal-gas references.

use thiserror::Error;

use crate::bogoliubov::{fsim_energy, solve_rho0, BogError, MinimizerState, ThermoPoint};
use crate::constants::{EIGHT_PI, EULER_GAMMA, FOUR_PI, SIXTEEN_PI, TWO_PI, ZETA_3_2};
use crate::quadrature::{integrate_interval, QuadError, QuadSpec};
use crate::scattering::Interaction;

#[derive(Debug, Error)]
pub enum AsymptoticsError {
    #[error("d must be nonnegative, got {0}")]
    NegativeD(f64),
    #[error("chemical potential must be <= 0, got {0}")]
    PositiveMu(f64),
    #[error("xi = {xi} must exceed 4*pi*b = {floor} for the T_c logarithm")]
    LogDomain { xi: f64, floor: f64 },
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Bog(#[from] BogError),
}

/// The three closed-form terms of the ground-state expansion plus the measured
/// gap of the full numerical minimization.
#[derive(Debug, Clone, Copy)]
pub struct ExpansionResult {
    /// 4πρ²b.
    pub leading: f64,
    /// 4πρ²b² ln b.
    pub log_term: f64,
    /// (inf_d C_ν(d))·ρ²b².
    pub const_term: f64,
    /// Argmin d of the numerical minimization.
    pub d_star: f64,
    /// F_min(numeric) − (leading + log_term + const_term).
    pub residual: f64,
}

/// Depletion coefficient C(d) = 1 − (√(d(d+16π)) − d)/8π, evaluated in the
/// subtraction-free form 1 − 2/(√(1+16π/d) + 1).
pub fn c_of_d(d: f64) -> Result<f64, AsymptoticsError> {
    if d < 0.0 {
        return Err(AsymptoticsError::NegativeD(d));
    }
    if d == 0.0 {
        return Ok(1.0);
    }
    Ok(1.0 - 2.0 / ((1.0 + SIXTEEN_PI / d).sqrt() + 1.0))
}

/// C_ν(d) exactly as displayed:
/// C(d)(2ν−16π−d) + d²/16π + 2π + d − 4π(ln8 − 2Γ)
/// − d√(d(d+16π))/16π − √(d(d+16π))/2 + 4π ln(d+√(d(d+16π))+8π).
pub fn c_nu_of_d(nu: f64, d: f64) -> Result<f64, AsymptoticsError> {
    if d < 0.0 {
        return Err(AsymptoticsError::NegativeD(d));
    }
    let s = (d * (d + SIXTEEN_PI)).sqrt();
    Ok(c_of_d(d)? * (2.0 * nu - SIXTEEN_PI - d)
        + d * d / SIXTEEN_PI
        + TWO_PI
        + d
        - FOUR_PI * (8.0f64.ln() - 2.0 * EULER_GAMMA)
        - d * s / SIXTEEN_PI
        - 0.5 * s
        + FOUR_PI * (d + s + EIGHT_PI).ln())
}

const D_MAX: f64 = 1e3;

/// Golden-section minimization of a scalar function on [lo, hi].
fn golden_min(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let inv_phi = 0.5 * (5.0f64.sqrt() - 1.0);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}

/// Scan grid for d-minimizations: 0 followed by log-spaced points up to `hi`.
fn d_scan_grid(hi: f64, n: usize) -> Vec<f64> {
    let mut grid = vec![0.0];
    let lo = 1e-6f64;
    for i in 0..=n {
        grid.push(lo * (hi / lo).powf(i as f64 / n as f64));
    }
    grid
}

/// inf over d ∈ [0, 10³] of C_ν(d): coarse scan then golden-section refinement
/// to |Δd| ≤ 1e−8; a boundary minimum at d = 0 is a valid return. Debug-checks
/// that C_ν is still increasing at the cap so no minimum escapes.
pub fn minimize_cnu(nu: f64) -> Result<(f64, f64), AsymptoticsError> {
    let f = |d: f64| c_nu_of_d(nu, d).expect("d >= 0 on the scan grid");
    debug_assert!(f(D_MAX) > f(0.99 * D_MAX), "C_nu must be increasing at the cap");
    let grid = d_scan_grid(D_MAX, 800);
    let (ibest, _) = grid
        .iter()
        .enumerate()
        .map(|(i, &d)| (i, f(d)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("grid is nonempty");
    let lo = if ibest == 0 { 0.0 } else { grid[ibest - 1] };
    let hi = if ibest + 1 < grid.len() { grid[ibest + 1] } else { D_MAX };
    let (d_star, value) = golden_min(&f, lo, hi, 1e-9);
    // Snap to the boundary when the refinement collapsed onto it.
    if d_star < 1e-8 && f(0.0) <= value {
        return Ok((0.0, f(0.0)));
    }
    Ok((d_star, value))
}

/// 8π(u+d) under the square root, c = 8π: the I_< antiderivative
/// A(t) = −c²[t/(2(t+√(t²−c²))) + ½ln(t+√(t²−c²))] of √(t²−c²) − t.
fn antiderivative(t: f64) -> f64 {
    let c = EIGHT_PI;
    let s = ((t - c) * (t + c)).sqrt();
    -c * c * (t / (2.0 * (t + s)) + 0.5 * (t + s).ln())
}

/// Exact small-momentum piece
/// I_< = (ρ₀b)²/(8π) ∫₀^{L²} [√((u+d)(u+d+16π)) − (u+d+8π)] du,
/// L² = ε²/(ρ₀b), in closed form via the antiderivative of √(t²−c²) − t.
pub fn i_less_exact(d: f64, rho0b: f64, eps: f64) -> Result<f64, AsymptoticsError> {
    if d < 0.0 {
        return Err(AsymptoticsError::NegativeD(d));
    }
    let c = EIGHT_PI;
    let l2 = eps * eps / rho0b;
    let bracket = antiderivative(l2 + d + c) - antiderivative(d + c);
    Ok(rho0b * rho0b / EIGHT_PI * bracket)
}

/// Large-momentum piece by quadrature with the +32π²/p² counterterm:
/// I_> = (ρ₀b)²/(4π) ∫_{p>L} [√((p²+d)²+16π(p²+d)) − (p²+d+8π) + 32π²/p²] p dp.
pub fn i_greater(
    d: f64,
    rho0b: f64,
    eps: f64,
    spec: &QuadSpec,
) -> Result<f64, AsymptoticsError> {
    if d < 0.0 {
        return Err(AsymptoticsError::NegativeD(d));
    }
    let big_l = eps / rho0b.sqrt();
    // √(X²+16πX) − (X+8π) = −64π²/(√(X²+16πX)+X+8π), cancellation-free.
    let f = move |p: f64| {
        let x = p * p + d;
        let root = (x * (x + SIXTEEN_PI)).sqrt();
        (32.0 * PI2 / (p * p) - 64.0 * PI2 / (root + x + EIGHT_PI)) * p
    };
    let wspec = QuadSpec { tail_order: 3, ..*spec }; // integrand·p ~ p^{-3}
    let r = integrate_interval(f, big_l, f64::INFINITY, &wspec)?;
    Ok(rho0b * rho0b / FOUR_PI * r.value)
}

const PI2: f64 = std::f64::consts::PI * std::f64::consts::PI;

/// Closed form of the same I_> integral (the M → ∞ limit is exact for all d):
/// (ρ₀b)²/(8π)·[−16π² − 32π² ln 2 − A(L²+d+8π) − 32π² ln L²].
pub fn i_greater_closed(d: f64, rho0b: f64, eps: f64) -> Result<f64, AsymptoticsError> {
    if d < 0.0 {
        return Err(AsymptoticsError::NegativeD(d));
    }
    let l2 = eps * eps / rho0b;
    let bracket =
        -16.0 * PI2 - 32.0 * PI2 * 2.0f64.ln() - antiderivative(l2 + d + EIGHT_PI) - 32.0 * PI2 * l2.ln();
    Ok(rho0b * rho0b / EIGHT_PI * bracket)
}

/// Ground-state expansion at T = 0: closed-form terms plus the residual of the
/// full two-stage numerical minimization (bisection in ρ₀ nested inside a
/// golden-section search over d) of F^sim on the idealized profile.
pub fn ground_state_expansion(
    tp: &ThermoPoint,
    spec: &QuadSpec,
) -> Result<ExpansionResult, AsymptoticsError> {
    let b = tp.b;
    let rho2 = tp.rho * tp.rho;
    let leading = FOUR_PI * rho2 * b;
    let log_term = FOUR_PI * rho2 * b * b * b.ln();
    let (_, cmin) = minimize_cnu(tp.nu)?;
    let const_term = cmin * rho2 * b * b;

    let inter = Interaction::Idealized { b, nu: tp.nu, rho_ref: tp.rho };
    let f_of_d = |d: f64| -> Result<f64, AsymptoticsError> {
        let rho0 = solve_rho0(tp.rho, d, 0.0, &inter, spec)?;
        let st = MinimizerState::new(rho0, d, 0.0, inter.clone());
        Ok(fsim_energy(tp, &st, spec)?)
    };
    // Coarse scan (cheap grid), then golden refinement; min sits near d = 0
    // for ν near 8π but may move inside for other ν.
    let grid = d_scan_grid(50.0, 24);
    let mut best = (0usize, f64::INFINITY);
    for (i, &d) in grid.iter().enumerate() {
        let v = f_of_d(d)?;
        if v < best.1 {
            best = (i, v);
        }
    }
    let lo = if best.0 == 0 { 0.0 } else { grid[best.0 - 1] };
    let hi = if best.0 + 1 < grid.len() { grid[best.0 + 1] } else { 50.0 };
    let fallible = std::cell::Cell::new(None::<AsymptoticsError>);
    let f = |d: f64| match f_of_d(d) {
        Ok(v) => v,
        Err(e) => {
            fallible.set(Some(e));
            f64::INFINITY
        }
    };
    let (d_star, f_min) = golden_min(&f, lo, hi, 1e-6);
    if let Some(e) = fallible.take() {
        return Err(e);
    }
    Ok(ExpansionResult {
        leading,
        log_term,
        const_term,
        d_star,
        residual: f_min - (leading + log_term + const_term),
    })
}

/// 2D ideal-gas density ρ(μ,T) = −(T/4π)·ln(1−e^{μ/T}).
pub fn ideal_gas_2d(mu: f64, temperature: f64) -> Result<f64, AsymptoticsError> {
    if mu > 0.0 {
        return Err(AsymptoticsError::PositiveMu(mu));
    }
    // 1 − e^{μ/T} via expm1 so densities stay accurate down to |μ| ~ T·1e−300.
    Ok(-(temperature / FOUR_PI) * (-(mu / temperature).exp_m1()).ln())
}

/// Inverse of `ideal_gas_2d` in μ by monotone root-finding (any ρ ≥ 0 is
/// attainable in 2D).
pub fn ideal_gas_2d_mu(rho: f64, temperature: f64) -> Result<f64, AsymptoticsError> {
    if rho == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    // Expand a bracket downward from 0, then bisect (density is increasing
    // in μ). The root can sit at |μ| ~ T·e^{−4πρ/T} many orders below T, so
    // the stop criterion is on the matched density, not the interval width.
    let mut lo = -temperature;
    while ideal_gas_2d(lo, temperature)? > rho {
        lo *= 2.0;
    }
    let mut hi = 0.0;
    let mut best = lo;
    for _ in 0..500 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let r = ideal_gas_2d(mid, temperature)?;
        best = mid;
        if (r - rho).abs() <= 1e-14 * rho {
            break;
        }
        if r > rho {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(best)
}

/// 3D ideal-gas density at chemical potential μ ≤ 0:
/// ρ(μ,T) = (2π)^{-3}·4π ∫ p²(e^{(p²−μ)/T}−1)^{-1} dp.
fn ideal_gas_3d_density(mu: f64, t: f64, spec: &QuadSpec) -> Result<f64, AsymptoticsError> {
    let f = move |p: f64| {
        let g = ((p * p - mu) / t).exp_m1();
        if g.is_infinite() {
            0.0
        } else {
            p * p / g
        }
    };
    let cut = (40.0 * t).sqrt().max(1.0);
    let r = integrate_interval(f, 0.0, cut, spec)?;
    Ok(r.value * FOUR_PI / (TWO_PI * TWO_PI * TWO_PI))
}

/// Grand-potential density ω(μ,T) = T(2π)^{-3}·4π ∫ p² ln(1−e^{(μ−p²)/T}) dp.
fn ideal_gas_3d_omega(mu: f64, t: f64, spec: &QuadSpec) -> Result<f64, AsymptoticsError> {
    let f = move |p: f64| {
        let z = ((mu - p * p) / t).exp();
        p * p * (-z).ln_1p()
    };
    let cut = (40.0 * t).sqrt().max(1.0);
    let r = integrate_interval(f, 0.0, cut, spec)?;
    Ok(t * r.value * FOUR_PI / (TWO_PI * TWO_PI * TWO_PI))
}

/// 3D ideal-gas reference: returns (F₀(T,ρ), ρ_fc(T)). The free critical
/// density is computed by quadrature (it equals ζ(3/2)(T/4π)^{3/2}); F₀ is
/// the sup over μ ≤ 0 of μρ + ω(μ), attained at the density-matching μ below
/// condensation and at μ = 0 above it.
pub fn ideal_gas_3d(
    temperature: f64,
    rho: f64,
    spec: &QuadSpec,
) -> Result<(f64, f64), AsymptoticsError> {
    let t = temperature;
    let rho_fc = ideal_gas_3d_density(0.0, t, spec)?;
    let mu = if rho >= rho_fc {
        0.0
    } else {
        // Monotone bisection for ρ(μ) = ρ.
        let mut lo = -t;
        while ideal_gas_3d_density(lo, t, spec)? > rho {
            lo *= 2.0;
        }
        let mut hi = 0.0;
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if ideal_gas_3d_density(mid, t, spec)? > rho {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 1e-13 * t.max(lo.abs()) {
                break;
            }
        }
        0.5 * (lo + hi)
    };
    let f0 = mu * rho + ideal_gas_3d_omega(mu, t, spec)?;
    Ok((f0, rho_fc))
}

/// Kosterlitz–Thouless-type critical temperature evaluator:
/// T_c = 4πρ/ln(ξ/(4πb)), ξ caller-supplied (14.4 as V̂(0) → 8πb).
pub fn critical_temperature_2d(rho: f64, b: f64, xi: f64) -> Result<f64, AsymptoticsError> {
    let floor = FOUR_PI * b;
    if xi <= floor {
        return Err(AsymptoticsError::LogDomain { xi, floor });
    }
    Ok(FOUR_PI * rho / (xi / floor).ln())
}

/// ρ_fc(T) closed form ζ(3/2)(T/4π)^{3/2}, for cross-checks.
pub fn rho_fc_closed(temperature: f64) -> f64 {
    ZETA_3_2 * (temperature / FOUR_PI).powf(1.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bogoliubov::fs_energy;
    use crate::quadrature::{integrate_radial_2d, RadialFunction};
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    fn spec() -> QuadSpec {
        QuadSpec::default()
    }

    fn eps_for_rho(rho: f64) -> f64 {
        2.0 * (-EULER_GAMMA).exp() * rho.sqrt()
    }

    #[test]
    fn c_of_d_closed_values() {
        assert_eq!(c_of_d(0.0).unwrap(), 1.0);
        assert_abs_diff_eq!(
            c_of_d(16.0 * PI).unwrap(),
            3.0 - 2.0 * 2.0f64.sqrt(),
            epsilon = 1e-12
        );
        assert_relative_eq!(c_of_d(1e6).unwrap(), 1.2566054796936399e-5, max_relative = 1e-12);
        assert!(matches!(c_of_d(-1.0), Err(AsymptoticsError::NegativeD(_))));
    }

    #[test]
    fn c_of_d_decreasing_and_tail_bounded() {
        let mut prev = c_of_d(0.0).unwrap();
        for i in 1..200 {
            let d = 1e-3 * (10.0f64).powf(7.0 * i as f64 / 199.0);
            let c = c_of_d(d).unwrap();
            assert!(c < prev, "C(d) must be strictly decreasing, d = {d}");
            prev = c;
            if d >= 1e3 {
                assert!(c <= EIGHT_PI / (2.0 * d) * 1.01);
            }
        }
    }

    #[test]
    fn c_nu_d0_closed_form_consistency() {
        for nu in [4.0 * PI, 8.0 * PI, 10.0 * PI, 30.0] {
            let closed = 2.0 * nu - 14.0 * PI + FOUR_PI * PI.ln() + EIGHT_PI * EULER_GAMMA;
            assert_abs_diff_eq!(c_nu_of_d(nu, 0.0).unwrap(), closed, epsilon = 1e-12);
        }
    }

    #[test]
    fn c_8pi_reference_value() {
        let expect = TWO_PI * (1.0 + 4.0 * EULER_GAMMA + 2.0 * PI.ln());
        assert_relative_eq!(expect, 35.175297245229046, max_relative = 1e-15);
        assert_abs_diff_eq!(c_nu_of_d(8.0 * PI, 0.0).unwrap(), expect, epsilon = 1e-12);
        assert!(c_nu_of_d(8.0 * PI, 1.0).unwrap() > expect);
    }

    #[test]
    fn minimize_cnu_at_8pi() {
        let (d_star, value) = minimize_cnu(8.0 * PI).unwrap();
        assert!(d_star <= 1e-6, "d_star = {d_star}");
        assert_abs_diff_eq!(
            value,
            TWO_PI * (1.0 + 4.0 * EULER_GAMMA + 2.0 * PI.ln()),
            epsilon = 1e-10
        );
    }

    #[test]
    fn minimize_cnu_contract() {
        for nu in [8.0 * PI + 0.1, 10.0 * PI, 20.0] {
            let (d_star, value) = minimize_cnu(nu).unwrap();
            assert!(d_star >= 0.0);
            assert!(value <= c_nu_of_d(nu, 0.0).unwrap() + 1e-12);
        }
    }

    #[test]
    fn i_less_matches_quadrature() {
        for d in [0.0, 1.0, 10.0] {
            for b in [0.01, 0.005] {
                let c = c_of_d(d).unwrap();
                let rho0b = b / (1.0 + c * b);
                let eps = eps_for_rho(1.0);
                let big_l = eps / rho0b.sqrt();
                let f = RadialFunction::new(move |p| {
                    let x = p * p + d;
                    0.5 * ((x * (x + SIXTEEN_PI)).sqrt() - (x + EIGHT_PI))
                });
                let quad = rho0b
                    * rho0b
                    * integrate_radial_2d(&f, 0.0, big_l, &spec()).unwrap().value;
                let exact = i_less_exact(d, rho0b, eps).unwrap();
                assert_relative_eq!(exact, quad, max_relative = 1e-6);
            }
        }
    }

    #[test]
    fn i_less_d0_paper_bracket() {
        // The displayed d = 0 bracket 8π² − 16π² ln(2ε²/ρ₀b) + 16π² ln 8π
        // matches the exact form up to its dropped O(b) remainder.
        let mut prev_gap = f64::INFINITY;
        for b in [0.01, 0.005] {
            let rho0b = b / (1.0 + b);
            let eps = eps_for_rho(1.0);
            let bracket = 8.0 * PI2 - 16.0 * PI2 * (2.0 * eps * eps / rho0b).ln()
                + 16.0 * PI2 * EIGHT_PI.ln();
            let displayed = rho0b * rho0b / FOUR_PI * bracket;
            let exact = i_less_exact(0.0, rho0b, eps).unwrap();
            let gap = ((exact - displayed) / exact).abs();
            assert!(gap < 10.0 * b, "O(b) remainder too large: {gap} at b = {b}");
            assert!(gap < prev_gap, "remainder must shrink with b");
            prev_gap = gap;
        }
    }

    #[test]
    fn i_greater_matches_closed_form() {
        for d in [0.0, 1.0] {
            let b = 0.01;
            let rho0b = b / (1.0 + b);
            let eps = eps_for_rho(1.0);
            let quad = i_greater(d, rho0b, eps, &spec()).unwrap();
            let closed = i_greater_closed(d, rho0b, eps).unwrap();
            assert_relative_eq!(quad, closed, max_relative = 1e-8);
        }
    }

    #[test]
    fn i_greater_tail_bound() {
        // |integrand| at p = 100, d = 0 obeys the Taylor bound 32π²·16π/(2p⁴)·(1+o).
        let p: f64 = 100.0;
        let x = p * p;
        let integrand =
            32.0 * PI2 / (p * p) - 64.0 * PI2 / ((x * (x + SIXTEEN_PI)).sqrt() + x + EIGHT_PI);
        assert!(integrand.abs() <= 32.0 * PI2 * SIXTEEN_PI / (2.0 * p.powi(4)) * 1.05);
    }

    #[test]
    fn i_split_sums_to_fs_energy() {
        // I_< + I_> is the ε-split of the idealized zero-point energy.
        let b = 0.02;
        let d = 0.3;
        let rho0 = 1.0 / (1.0 + c_of_d(d).unwrap() * b);
        let inter = Interaction::Idealized { b, nu: 8.0 * PI, rho_ref: 1.0 };
        let st = MinimizerState::new(rho0, d, 0.0, inter);
        let eps = st.interaction.epsilon();
        let rho0b = rho0 * b;
        let total = i_less_exact(d, rho0b, eps).unwrap() + i_greater(d, rho0b, eps, &spec()).unwrap();
        let fs = fs_energy(&st, &spec()).unwrap();
        assert_relative_eq!(fs, total, max_relative = 1e-8);
    }

    #[test]
    fn ground_state_expansion_arithmetic() {
        let tp = ThermoPoint { rho: 1.0, temperature: 0.0, nu: 8.0 * PI, b: 0.01 };
        let r = ground_state_expansion(&tp, &spec()).unwrap();
        assert_relative_eq!(r.leading, 0.12566370614359174, max_relative = 1e-12);
        assert_relative_eq!(r.log_term, FOUR_PI * 1e-4 * 0.01f64.ln(), max_relative = 1e-12);
        assert_relative_eq!(r.const_term, 35.175297245229046e-4, max_relative = 1e-9);
        assert!(r.leading > 0.0 && r.log_term < 0.0 && r.d_star >= 0.0);
        // o(ρ²b²) claim is a trend over b (acceptance); here just boundedness.
        assert!(r.residual.abs() / (tp.b * tp.b) < 5.0, "residual ratio too large");
    }

    #[test]
    fn ground_state_expansion_rho_homogeneity() {
        let (tp1, tp2) = (
            ThermoPoint { rho: 1.0, temperature: 0.0, nu: 8.0 * PI, b: 0.02 },
            ThermoPoint { rho: 2.0, temperature: 0.0, nu: 8.0 * PI, b: 0.02 },
        );
        let r1 = ground_state_expansion(&tp1, &spec()).unwrap();
        let r2 = ground_state_expansion(&tp2, &spec()).unwrap();
        assert_relative_eq!(r2.leading, 4.0 * r1.leading, max_relative = 1e-12);
        assert_relative_eq!(r2.log_term, 4.0 * r1.log_term, max_relative = 1e-12);
        assert_relative_eq!(r2.const_term, 4.0 * r1.const_term, max_relative = 1e-12);
    }

    #[test]
    fn ideal_gas_2d_values() {
        assert_relative_eq!(
            ideal_gas_2d(-1.0, 1.0).unwrap(),
            0.036500208330873925,
            max_relative = 1e-12
        );
        assert!(ideal_gas_2d(-700.0, 1.0).unwrap() < 1e-300);
        assert!(matches!(ideal_gas_2d(0.1, 1.0), Err(AsymptoticsError::PositiveMu(_))));
        // Quadrature oracle for the closed form.
        let f = RadialFunction::new(|p: f64| 1.0 / ((p * p + 1.0).exp() - 1.0)).with_hint(30.0);
        let quad = integrate_radial_2d(&f, 0.0, 30.0, &spec()).unwrap().value;
        assert_relative_eq!(ideal_gas_2d(-1.0, 1.0).unwrap(), quad, max_relative = 1e-10);
    }

    #[test]
    fn ideal_gas_2d_inverse_roundtrip() {
        let rho = ideal_gas_2d(-1.0, 1.0).unwrap();
        let mu = ideal_gas_2d_mu(rho, 1.0).unwrap();
        assert_abs_diff_eq!(mu, -1.0, epsilon = 1e-12);
        assert_eq!(ideal_gas_2d_mu(0.0, 1.0).unwrap(), f64::NEG_INFINITY);
    }

    #[test]
    fn ideal_gas_3d_critical_density() {
        let (_, rho_fc) = ideal_gas_3d(1.0, 1.0, &spec()).unwrap();
        assert_relative_eq!(rho_fc, rho_fc_closed(1.0), max_relative = 1e-8);
        assert_abs_diff_eq!(rho_fc, 0.05864362, epsilon = 1e-6);
    }

    #[test]
    fn ideal_gas_3d_free_energy() {
        let (f0, rho_fc) = ideal_gas_3d(1.0, 0.02, &spec()).unwrap();
        assert!(0.02 < rho_fc);
        assert_relative_eq!(f0, -0.0254863852909, max_relative = 1e-8);
        // Above condensation F₀ no longer depends on ρ.
        let (fa, _) = ideal_gas_3d(1.0, 0.08, &spec()).unwrap();
        let (fb, _) = ideal_gas_3d(1.0, 0.2, &spec()).unwrap();
        assert_relative_eq!(fa, fb, max_relative = 1e-12);
    }

    #[test]
    fn critical_temperature_values() {
        let tc = critical_temperature_2d(1.0, 0.01, 14.4).unwrap();
        assert_relative_eq!(tc, FOUR_PI / (14.4 / (0.04 * PI)).ln(), max_relative = 1e-15);
        assert_abs_diff_eq!(tc, 2.6503, epsilon = 1e-4);
        assert!(matches!(
            critical_temperature_2d(1.0, 0.9, 10.0),
            Err(AsymptoticsError::LogDomain { .. })
        ));
        // Calculus of the formula: decreasing in ξ, increasing in b.
        let t1 = critical_temperature_2d(1.0, 0.01, 14.4).unwrap();
        let t2 = critical_temperature_2d(1.0, 0.01, 20.0).unwrap();
        assert!(t2 < t1);
        let t3 = critical_temperature_2d(1.0, 0.02, 14.4).unwrap();
        assert!(t3 > t1);
    }
}
