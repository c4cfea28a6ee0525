//! Adaptive 1D quadrature for radial 2D integrals.
//!
//! The workhorse is a 15-point Gauss–Kronrod rule driven by a worst-interval
//! heap. Semi-infinite integrals are truncated at `tail_cut`, extended by
//! doubling panels until the contribution stalls, and closed with a power-law
//! tail estimate of the declared `tail_order`. All radial integrals
//! (2π)^{-2}∫ f(|p|) dp over the plane are evaluated as (2π)^{-1}∫ f(p) p dp.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuadError {
    /// The subdivision budget was exhausted before the tolerance was met.
    #[error("quadrature did not converge: estimated error {estimate:e} for value {value:e}")]
    NonConvergence { value: f64, estimate: f64 },
    /// The integrand produced a non-finite value at a quadrature node.
    #[error("integrand not finite at {at} (declared origin behavior violated?)")]
    SingularEndpoint { at: f64 },
    /// The tolerance/tail parameters are unusable.
    #[error("invalid quadrature spec: {0}")]
    InvalidSpec(String),
}

/// Tolerances and tail handling for one quadrature call.
#[derive(Debug, Clone, Copy)]
pub struct QuadSpec {
    /// Absolute tolerance on the integral value.
    pub abs_tol: f64,
    /// Relative tolerance on the integral value.
    pub rel_tol: f64,
    /// Maximum number of interval bisections.
    pub max_subdivisions: usize,
    /// Finite cutoff Λ for semi-infinite integrals.
    pub tail_cut: f64,
    /// The integrand handed to the integrator decays like p^{-k} beyond Λ.
    pub tail_order: i32,
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_subdivisions: 2000,
            tail_cut: 1e3,
            tail_order: 4,
        }
    }
}

impl QuadSpec {
    pub fn validate(&self) -> Result<(), QuadError> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) {
            return Err(QuadError::InvalidSpec("tolerances must be positive".into()));
        }
        if !(self.tail_cut > 0.0) {
            return Err(QuadError::InvalidSpec("tail_cut must be positive".into()));
        }
        if self.tail_order < 2 {
            return Err(QuadError::InvalidSpec(
                "tail_order must be >= 2 for a convergent tail".into(),
            ));
        }
        Ok(())
    }

    /// Spec for the p-weighted integrand p·f(p), whose decay is one order
    /// slower than f itself.
    fn weighted(self) -> Self {
        QuadSpec {
            tail_order: (self.tail_order - 1).max(2),
            ..self
        }
    }
}

/// Behavior of a radial profile as p → 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OriginBehavior {
    #[default]
    Finite,
    /// Diverges like ln p (integrable against p dp).
    Logarithmic,
    /// Diverges like p^{-2} (integrable against p dp only away from 0).
    InverseSquare,
}

/// A radial profile p ↦ f(p), the carrier for γ(p), α(p), V̂(p), V̂w(p).
#[derive(Clone)]
pub struct RadialFunction {
    eval: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    /// Support radius or decay scale, when known; integrators that must span
    /// many decades use it to place panels.
    pub domain_hint: Option<f64>,
    pub origin: OriginBehavior,
}

impl RadialFunction {
    pub fn new(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        RadialFunction {
            eval: Arc::new(f),
            domain_hint: None,
            origin: OriginBehavior::Finite,
        }
    }

    pub fn with_hint(mut self, hint: f64) -> Self {
        self.domain_hint = Some(hint);
        self
    }

    pub fn with_origin(mut self, origin: OriginBehavior) -> Self {
        self.origin = origin;
        self
    }

    #[inline]
    pub fn eval(&self, p: f64) -> f64 {
        (self.eval)(p)
    }
}

impl std::fmt::Debug for RadialFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RadialFunction")
            .field("domain_hint", &self.domain_hint)
            .field("origin", &self.origin)
            .finish_non_exhaustive()
    }
}

/// Integral value together with the achieved error estimate.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
}

// 15-point Kronrod nodes on [-1, 1] (positive half) and weights, with the
// embedded 7-point Gauss weights. Standard QUADPACK constants.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526,
    0.949107912342758524526189684048,
    0.864864423359769072789712788641,
    0.741531185599394439863864773281,
    0.586087235467691130294144838259,
    0.405845151377397166906606412077,
    0.207784955007898467600689403773,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058,
    0.063092092629978553290700663189,
    0.104790010322250183839876322541,
    0.140653259715525918745189590510,
    0.169004726639267902826583426599,
    0.190350578064785409913256402421,
    0.204432940075298892414161999234,
    0.209482141084727828012999174891,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679,
    0.279705391489276667901467771424,
    0.381830050505118944950369775489,
    0.417959183673469387755102040816,
];

/// One application of the 15-point Kronrod rule with embedded Gauss estimate.
fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Result<(f64, f64), QuadError> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    if !fc.is_finite() {
        return Err(QuadError::SingularEndpoint { at: center });
    }
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut resabs = fc.abs() * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        if !f1.is_finite() {
            return Err(QuadError::SingularEndpoint { at: center - dx });
        }
        if !f2.is_finite() {
            return Err(QuadError::SingularEndpoint { at: center + dx });
        }
        let fsum = f1 + f2;
        kronrod += WGK[j] * fsum;
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    let value = kronrod * half;
    let mut err = ((kronrod - gauss) * half).abs();
    // QUADPACK-style rescaling: sharpen the raw |K - G| difference.
    let resabs = resabs * half.abs();
    if resabs > 0.0 && err > 0.0 {
        let scale = (200.0 * err / resabs).powf(1.5);
        if scale < 1.0 {
            err = resabs * scale;
        }
    }
    Ok((value, err))
}

#[derive(Debug)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.partial_cmp(&other.error).unwrap_or(Ordering::Equal)
    }
}

/// Adaptive Gauss–Kronrod integration on a finite interval.
pub(crate) fn adaptive(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    spec: &QuadSpec,
) -> Result<QuadResult, QuadError> {
    spec.validate()?;
    if a == b {
        return Ok(QuadResult { value: 0.0, error: 0.0 });
    }
    let (v, e) = gk15(f, a, b)?;
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, value: v, error: e });
    let mut total_v = v;
    let mut total_e = e;
    let mut splits = 0usize;
    loop {
        let tol = spec.abs_tol.max(spec.rel_tol * total_v.abs());
        if total_e <= tol {
            return Ok(QuadResult { value: total_v, error: total_e });
        }
        if splits >= spec.max_subdivisions {
            return Err(QuadError::NonConvergence { value: total_v, estimate: total_e });
        }
        let worst = heap.pop().expect("heap cannot be empty while error > 0");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval at floating-point resolution; accept what we have.
            heap.push(worst);
            return Ok(QuadResult { value: total_v, error: total_e });
        }
        let (v1, e1) = gk15(f, worst.a, mid)?;
        let (v2, e2) = gk15(f, mid, worst.b)?;
        total_v += v1 + v2 - worst.value;
        total_e += e1 + e2 - worst.error;
        heap.push(Segment { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Segment { a: mid, b: worst.b, value: v2, error: e2 });
        splits += 1;
    }
}

/// Adaptive quadrature of a scalar integrand on [lo, hi]; `hi` may be
/// `f64::INFINITY`, in which case the integral is truncated at `tail_cut`,
/// extended by doubling panels, and closed with a power-law tail of the
/// declared `tail_order` (the decay of the integrand as handed in).
pub fn integrate_interval(
    f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    spec: &QuadSpec,
) -> Result<QuadResult, QuadError> {
    spec.validate()?;
    if hi.is_finite() {
        return adaptive(&f, lo, hi, spec);
    }
    let cut = spec.tail_cut.max(lo * 2.0).max(lo + 1.0);
    let base = adaptive(&f, lo, cut, spec)?;
    let mut value = base.value;
    let mut error = base.error;
    let mut p = cut;
    for _ in 0..48 {
        let panel = adaptive(&f, p, 2.0 * p, spec)?;
        value += panel.value;
        error += panel.error;
        p *= 2.0;
        let tol = spec.abs_tol.max(spec.rel_tol * value.abs());
        if panel.value.abs() <= 0.25 * tol {
            break;
        }
    }
    // Closed-form tail for f ~ c p^{-k}: ∫_P^∞ = f(P)·P/(k-1).
    let k = spec.tail_order as f64;
    let tail = f(p) * p / (k - 1.0);
    value += tail;
    error += tail.abs() * 0.5;
    Ok(QuadResult { value, error })
}

/// Integral over [lo, hi] (0 < lo < hi, finite) split into octave panels, so
/// integrands whose support is a narrow band anywhere inside a wide range are
/// never missed by a single coarse panel.
pub(crate) fn integrate_geometric(
    f: &impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    spec: &QuadSpec,
) -> Result<QuadResult, QuadError> {
    assert!(lo > 0.0 && hi > lo);
    let mut value = 0.0;
    let mut error = 0.0;
    let mut a = lo;
    while a < hi {
        let b = (2.0 * a).min(hi);
        let r = adaptive(f, a, b, spec)?;
        value += r.value;
        error += r.error;
        a = b;
    }
    Ok(QuadResult { value, error })
}

/// (2π)^{-2} ∫ f(|p|) dp over the annulus lo ≤ |p| ≤ hi in the plane,
/// evaluated as (2π)^{-1} ∫ f(p) p dp.
pub fn integrate_radial_2d(
    f: &RadialFunction,
    lo: f64,
    hi: f64,
    spec: &QuadSpec,
) -> Result<QuadResult, QuadError> {
    let g = |p: f64| f.eval(p) * p;
    let wspec = spec.weighted();
    let r = integrate_interval(g, lo, hi, &wspec)?;
    Ok(QuadResult {
        value: r.value / crate::constants::TWO_PI,
        error: r.error / crate::constants::TWO_PI,
    })
}

/// (2π)^{-1} ∫_{pmin}^{pmax} f(p) p dp computed in log momentum, for
/// integrands whose features sit many decades below the upper limit.
pub(crate) fn integrate_radial_log(
    f: &impl Fn(f64) -> f64,
    pmin: f64,
    pmax: f64,
    spec: &QuadSpec,
) -> Result<QuadResult, QuadError> {
    assert!(pmin > 0.0 && pmax > pmin);
    let g = |t: f64| {
        let p = t.exp();
        f(p) * p * p
    };
    // Split at decade boundaries so the heap does not have to discover the
    // structure of a 100-unit-wide interval from a single panel.
    let (ta, tb) = (pmin.ln(), pmax.ln());
    let n = (((tb - ta) / 4.0).ceil() as usize).clamp(1, 64);
    // First pass at the nominal tolerances to learn the overall magnitude;
    // the integrals this routine serves can be ~1e-80, far below abs_tol, so
    // a second pass pins the absolute tolerance to the observed scale.
    let run = |sub: &QuadSpec| -> Result<(f64, f64, f64), QuadError> {
        let mut value = 0.0;
        let mut error = 0.0;
        let mut mag = 0.0;
        for i in 0..n {
            let a = ta + (tb - ta) * i as f64 / n as f64;
            let b = ta + (tb - ta) * (i + 1) as f64 / n as f64;
            let r = adaptive(&g, a, b, sub)?;
            value += r.value;
            error += r.error;
            mag += r.value.abs();
        }
        Ok((value, error, mag))
    };
    let sub = QuadSpec { abs_tol: spec.abs_tol / n as f64, ..*spec };
    let (mut value, mut error, mag) = run(&sub)?;
    let scaled = spec.rel_tol * mag / n as f64;
    if scaled > 0.0 && scaled < sub.abs_tol {
        let sub2 = QuadSpec { abs_tol: scaled, ..*spec };
        let (v2, e2, _) = run(&sub2)?;
        value = v2;
        error = e2;
    }
    Ok(QuadResult {
        value: value / crate::constants::TWO_PI,
        error: error / crate::constants::TWO_PI,
    })
}

/// Angular convolution kernel for radial functions:
/// K(p, q) = ∫_0^{2π} g(√(p² + q² − 2pq cos θ)) dθ.
///
/// Written with the symmetric argument (p−q)² + 4pq sin²(θ/2), so the result
/// is bitwise symmetric in (p, q).
pub fn angular_kernel(
    g: &RadialFunction,
    p: f64,
    q: f64,
    spec: &QuadSpec,
) -> Result<f64, QuadError> {
    let dd = (p - q) * (p - q);
    let pq4 = 4.0 * p * q;
    let f = |theta: f64| {
        let s = (0.5 * theta).sin();
        g.eval((dd + pq4 * s * s).sqrt())
    };
    let r = adaptive(&f, 0.0, std::f64::consts::PI, spec)?;
    Ok(2.0 * r.value)
}
