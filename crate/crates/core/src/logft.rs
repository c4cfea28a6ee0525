//! Distributional Fourier calculus for the log-tail scattering solution: the
//! distribution P, the constant c₀ = (2π)²(ln 2 − Γ), the regularized
//! representation of φ̂ (with ŵ = (2π)²δ₀ − φ̂), and the δ-coefficient
//! cancellation fixed by the cutoff ε.

use thiserror::Error;

use crate::constants::{EULER_GAMMA, TWO_PI};
use crate::quadrature::{
    integrate_geometric, integrate_interval, integrate_radial_log, QuadError, QuadSpec,
    RadialFunction,
};
use crate::scattering::ScatteringSolution;

#[derive(Debug, Error)]
pub enum LogFtError {
    #[error(transparent)]
    Quad(#[from] QuadError),
}

/// A radial tempered distribution of the restricted shape appearing here:
/// a multiple of (2π)²δ₀, plus an absolutely continuous density whose p → 0
/// singularity is handled by subtracting `singular_limit`·φ(0) inside
/// `subtract_radius`.
#[derive(Debug, Clone)]
pub struct RadialDistribution {
    /// Coefficient of (2π)²δ₀.
    pub delta_coeff: f64,
    /// Density of the absolutely continuous part, valid for p > 0.
    pub regular: RadialFunction,
    /// Declared p → 0 limit of the singular prefactor; its product with φ(0)
    /// is subtracted inside the subtraction radius.
    pub singular_limit: RadialFunction,
    pub subtract_radius: f64,
}

impl RadialDistribution {
    /// Action on a radial test function φ:
    /// delta_coeff·φ(0)
    ///   + ∫_{|p|≤r₀}(regular·φ − singular_limit·φ(0)) d²p
    ///   + ∫_{|p|>r₀} regular·φ d²p,   r₀ = subtract_radius.
    pub fn action(&self, phi: &RadialFunction, spec: &QuadSpec) -> Result<f64, LogFtError> {
        let (inner, outer) = self.action_split(phi, spec)?;
        Ok(self.delta_coeff * phi.eval(0.0) + inner + outer)
    }

    /// The two absolutely continuous pieces separately: the subtracted part
    /// on |p| ≤ subtract_radius and the plain part beyond (φ̂ = φ̂₁ + φ̂₂).
    pub fn action_split(
        &self,
        phi: &RadialFunction,
        spec: &QuadSpec,
    ) -> Result<(f64, f64), LogFtError> {
        let phi0 = phi.eval(0.0);
        let r0 = self.subtract_radius;
        let upper = phi
            .domain_hint
            .unwrap_or(spec.tail_cut)
            .max(self.regular.domain_hint.unwrap_or(0.0));
        let two_pi_sq = TWO_PI * TWO_PI;
        let inner = if r0 > 0.0 {
            let reg = self.regular.clone();
            let sing = self.singular_limit.clone();
            let f = move |p: f64| reg.eval(p) * phi.eval(p) - sing.eval(p) * phi0;
            // Integrand is finite at p → 0 by construction; the skipped
            // [0, r₀·1e−10] sliver is O(r₀²·integrand).
            two_pi_sq * integrate_radial_log(&f, r0 * 1e-10, r0, spec)?.value
        } else {
            0.0
        };
        let reg = self.regular.clone();
        let f = move |p: f64| reg.eval(p) * phi.eval(p);
        let lo = if r0 > 0.0 { r0 } else { upper * 1e-12 };
        let outer = two_pi_sq * integrate_radial_log(&f, lo, upper, spec)?.value;
        Ok((inner, outer))
    }
}

/// The distribution P of the log Fourier transform:
/// P(φ) = −2π(∫_{|p|≤1}(φ(p)−φ(0))/p² d²p + ∫_{|p|>1} φ(p)/p² d²p).
pub fn p_action(phi: &RadialFunction, spec: &QuadSpec) -> Result<f64, LogFtError> {
    let phi0 = phi.eval(0.0);
    let inner = integrate_interval(|p| (phi.eval(p) - phi0) / p, 0.0, 1.0, spec)?;
    let upper = phi.domain_hint.unwrap_or(spec.tail_cut);
    let outer = if upper > 1.0 {
        integrate_geometric(&|p: f64| phi.eval(p) / p, 1.0, upper, spec)?.value
    } else {
        0.0
    };
    // d²p = 2π p dp, so each radial integrand carries p/p² = 1/p.
    Ok(-TWO_PI * TWO_PI * (inner.value + outer))
}

/// Radial integral 2(2π)²∫₀^∞ r ln r · e^{−r²/2} dr; the caller compares
/// against c₀ = (2π)²(ln 2 − Γ).
pub fn c0_check(spec: &QuadSpec) -> Result<f64, LogFtError> {
    let f = |r: f64| r * r.ln() * (-0.5 * r * r).exp();
    let inner = integrate_interval(f, 0.0, 1.0, spec)?;
    let outer = integrate_geometric(&f, 1.0, spec.tail_cut.min(50.0), spec)?;
    Ok(2.0 * TWO_PI * TWO_PI * (inner.value + outer.value))
}

/// φ̂ of the scattering profile: zero δ-part (all δ coefficients cancel at the chosen
/// ε), density V̂w(p)/(2p²), subtraction by V̂w(0)/(2p²) inside ε.
pub fn build_phi_hat(sol: &ScatteringSolution) -> RadialDistribution {
    let vw = sol.vwhat.clone();
    let vw0 = sol.vwhat0;
    RadialDistribution {
        delta_coeff: 0.0,
        regular: RadialFunction::new(move |p| vw.eval(p) / (2.0 * p * p)).with_hint(sol.p_max),
        singular_limit: RadialFunction::new(move |p| vw0 / (2.0 * p * p)),
        subtract_radius: sol.epsilon,
    }
}

/// Residual of the δ-coefficient cancellation,
/// 1 + 2b ln a − 2b ln 2 + 2bΓ + 2b ln ε,
/// identically 0 when ε = (2/(a e^Γ))e^{−1/(2b)}.
pub fn delta_cancellation_check(b: f64, a: f64, eps: f64) -> f64 {
    1.0 + 2.0 * b * a.ln() - 2.0 * b * 2.0f64.ln() + 2.0 * b * EULER_GAMMA + 2.0 * b * eps.ln()
}

/// Same residual with all inputs taken from a solved potential.
pub fn delta_cancellation_check_sol(sol: &ScatteringSolution) -> f64 {
    delta_cancellation_check(sol.b, sol.a, sol.epsilon)
}

/// The cutoff that cancels all δ coefficients.
pub fn epsilon_for(b: f64, a: f64) -> f64 {
    2.0 / (a * EULER_GAMMA.exp()) * (-1.0 / (2.0 * b)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::EIGHT_PI;
    use crate::test_util::solved_bump;
    use approx::assert_abs_diff_eq;

    fn spec() -> QuadSpec {
        QuadSpec::default()
    }

    fn c0() -> f64 {
        TWO_PI * TWO_PI * (2.0f64.ln() - EULER_GAMMA)
    }

    #[test]
    fn p_action_of_gaussian_is_minus_half_c0() {
        // Frozen oracle (subtracted + tail quadrature): −2.288396394334454.
        let phi = RadialFunction::new(|p| (-0.5 * p * p).exp());
        let v = p_action(&phi, &spec()).unwrap();
        assert_abs_diff_eq!(v, -2.288396394334454, epsilon = 1e-9);
        assert_abs_diff_eq!(v, -0.5 * c0(), epsilon = 1e-9);
    }

    #[test]
    fn p_action_no_subtraction_case() {
        // φ(0) = 0, support in |p| ≤ 1: P(φ) = −2π∫φ/p² d²p.
        let phi = RadialFunction::new(|p| if p <= 1.0 { p * p * (1.0 - p * p) } else { 0.0 })
            .with_hint(1.0);
        let v = p_action(&phi, &spec()).unwrap();
        assert_abs_diff_eq!(v, -TWO_PI * TWO_PI / 4.0, epsilon = 1e-10);
    }

    #[test]
    fn p_action_of_zero_is_zero() {
        let phi = RadialFunction::new(|_| 0.0).with_hint(1.0);
        assert_abs_diff_eq!(p_action(&phi, &spec()).unwrap(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn p_scaling_covariance() {
        // P(φ(κ·)) = P(φ) + (2π)² ln κ · φ(0).
        let phi = RadialFunction::new(|p| (-0.5 * p * p).exp());
        let base = p_action(&phi, &spec()).unwrap();
        for kappa in [2.0f64, 5.0] {
            let scaled = RadialFunction::new(move |p| (-0.5 * (kappa * p) * (kappa * p)).exp());
            let v = p_action(&scaled, &spec()).unwrap();
            assert_abs_diff_eq!(v - base - TWO_PI * TWO_PI * kappa.ln(), 0.0, epsilon = 1e-7);
        }
    }

    #[test]
    fn c0_quadrature_matches_closed_form() {
        let v = c0_check(&spec()).unwrap();
        assert_abs_diff_eq!(v, c0(), epsilon = 1e-8);
        // (2π)²·0.11593152 ≈ 4.5767928.
        assert_abs_diff_eq!(v, 4.5767928, epsilon = 1e-5);
        let doubled = c0_check(&QuadSpec { tail_cut: 2e3, ..spec() }).unwrap();
        assert_abs_diff_eq!(v, doubled, epsilon = 1e-10);
    }

    #[test]
    fn c0_integrand_sign_structure() {
        let f = |r: f64| r * r.ln() * (-0.5 * r * r).exp();
        let inner = integrate_interval(f, 0.0, 1.0, &spec()).unwrap();
        let outer = integrate_interval(f, 1.0, 50.0, &spec()).unwrap();
        assert!(inner.value < 0.0 && outer.value > 0.0);
    }

    #[test]
    fn phi_hat_action_on_gaussian_is_finite() {
        let sol = solved_bump();
        let phi_hat = build_phi_hat(&sol);
        let phi = RadialFunction::new(|p| (-p * p).exp());
        let v = phi_hat.action(&phi, &spec()).unwrap();
        assert!(v.is_finite() && v != 0.0);
    }

    #[test]
    fn phi1_piece_is_small() {
        // Inner (subtracted) piece on a test function ≡ 1 near 0: bounded by
        // ε²·sup|V̂w″|-type smallness.
        let sol = solved_bump();
        let phi_hat = build_phi_hat(&sol);
        let phi = RadialFunction::new(|p| (-p * p).exp());
        let (inner, outer) = phi_hat.action_split(&phi, &spec()).unwrap();
        assert!(inner.abs() < 1e-2 * outer.abs(), "inner {inner}, outer {outer}");
    }

    #[test]
    fn phi_hat_action_on_vhat_matches_scattering_identity() {
        // (2π)^{-2}⟨φ̂, V̂⟩ = ∫φV = V̂(0) − 8πb (Parseval + scattering eq.).
        let sol = solved_bump();
        let phi_hat = build_phi_hat(&sol);
        let v = phi_hat.action(&sol.vhat, &spec()).unwrap();
        let expected = TWO_PI * TWO_PI * (sol.vhat0 - EIGHT_PI * sol.b);
        assert_abs_diff_eq!(v / expected, 1.0, epsilon = 1e-6);
    }

    #[test]
    fn delta_cancellation_exact() {
        for b in [0.01, 0.05] {
            for a in [0.3, 1.0] {
                let eps = epsilon_for(b, a);
                assert!(delta_cancellation_check(b, a, eps).abs() <= 1e-14);
            }
        }
    }

    #[test]
    fn delta_cancellation_detects_perturbed_epsilon() {
        let b = 0.01;
        let eps = epsilon_for(b, 1.0);
        let r = delta_cancellation_check(b, 1.0, eps * 1.01);
        assert_abs_diff_eq!(r, 2.0 * b * 1.01f64.ln(), epsilon = 1e-12);
    }

    #[test]
    fn action_linearity() {
        let sol = solved_bump();
        let phi_hat = build_phi_hat(&sol);
        let f = RadialFunction::new(|p| (-p * p).exp());
        let g = RadialFunction::new(|p| 1.0 / (1.0 + p * p).powi(3));
        let combo = RadialFunction::new(|p| {
            2.0 * (-p * p).exp() - 0.5 / (1.0 + p * p).powi(3)
        });
        let af = phi_hat.action(&f, &spec()).unwrap();
        let ag = phi_hat.action(&g, &spec()).unwrap();
        let ac = phi_hat.action(&combo, &spec()).unwrap();
        assert_abs_diff_eq!(ac, 2.0 * af - 0.5 * ag, epsilon = 1e-7 * ac.abs().max(1.0));
    }
}
