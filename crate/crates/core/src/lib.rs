//! Bound states and thermodynamics of the generalized trigonometric
//! Pöschl-Teller potential
//!
//! ```text
//! V(r) = V1 cosec²(αr) + V2 sec²(αr) + V3 tan²(αr) + V4 cot²(αr),   0 < αr < π/2
//! ```
//!
//! The crate evaluates the closed-form spectrum (with the `α²(1/12 + 1/sin²)`
//! centrifugal approximation), the hypergeometric radial wavefunctions, the
//! vibrational partition function under ordinary Boltzmann statistics and under
//! the delta-distribution superstatistics with deformation `q`, and the derived
//! thermodynamic functions. Every closed form has an independent numerical
//! counterpart in [`oracle`]: a Numerov shooting eigensolver, adaptive
//! Gauss-Kronrod quadrature and Richardson-extrapolated finite differences.
//!
//! Units follow the `ħ = 1` numeric convention: well depths, energies, `α` and
//! `μ` are plain numbers, and `k_B = 1` so `β` is an inverse energy.

pub mod error;
pub mod oracle;
pub mod potential;
pub mod report;
pub mod specfun;
pub mod spectrum;
pub mod superstat;
pub mod thermo;

mod moments;

pub use error::{Error, Result};
pub use oracle::OracleReport;
pub use potential::{PotentialParams, QuantumState};
pub use spectrum::{EnergyLevel, RadialWavefunction, SpectrumCoefficients};
pub use superstat::SuperstatConfig;
pub use thermo::{Convention, LevelRange, ThermoPoint, ZSource};
