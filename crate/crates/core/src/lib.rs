//! Numerics for the two-dimensional Bogoliubov free energy functional in the
//! dilute limit: scattering input, regularized log-Fourier transforms, the
//! simplified and canonical functionals, and the ground-state expansion.

pub mod asymptotics;
pub mod bessel;
pub mod bogoliubov;
pub mod constants;
pub mod logft;
pub mod quadrature;
pub mod scattering;
mod spline;

pub use quadrature::{OriginBehavior, QuadError, QuadResult, QuadSpec, RadialFunction};

pub use asymptotics::{AsymptoticsError, ExpansionResult};
pub use bogoliubov::{BogError, EnergyBreakdown, MinimizerState, ThermoPoint};
pub use scattering::{
    fourier_radial, solve_scattering, Interaction, PotentialSpec, ScatteringError,
    ScatteringSolution,
};
