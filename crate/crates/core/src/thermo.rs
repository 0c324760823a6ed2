//! Vibrational partition function at fixed `ℓ` and the derived thermodynamic
//! functions.
//!
//! `Z` is either the discrete Boltzmann sum over `n = 0..=n_max` or its
//! classical limit, the integral over `n ∈ [0, n_max]`, which has the closed
//! form
//!
//! ```text
//! Z = √π e^{-βC} e^{βB²/4A} [erf(√(βA)(n_max + B/2A)) - erf(√(βA) B/2A)] / (2√(βA))
//! ```
//!
//! with `E(n) = An² + Bn + C`. Then `F = -ln Z/β` and `U = -∂ln Z/∂β`.
//! Entropy and heat capacity come in two conventions:
//!
//! | convention      | S              | C_v             |
//! |-----------------|----------------|-----------------|
//! | `standard`      | `k β² ∂F/∂β`   | `-k β² ∂U/∂β`   |
//! | `paper-literal` | `-k ∂F/∂β`     | `k ∂U/∂β`       |
//!
//! so `S_std = -β² S_lit` and `C_std = -β² C_lit`. `k_B = 1` throughout.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moments::{self, Moments};
use crate::oracle::derivative::derivative_scan;
use crate::oracle::quadrature::Quadrature;
use crate::potential::PotentialParams;
use crate::specfun::{erfcx, scaled_erf_diff};
use crate::spectrum::{derive_coefficients, SpectrumCoefficients};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    #[default]
    Standard,
    PaperLiteral,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZSource {
    /// Classical integral in closed form.
    #[default]
    Closed,
    /// Discrete Boltzmann sum.
    Sum,
}

/// Range of `n` entering `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LevelRange {
    UpTo(u32),
    Unbounded,
}

impl LevelRange {
    /// `n ∈ [0, n_max]` with `n_max = ⌊σ₂/4⌋`.
    pub fn natural(coeffs: &SpectrumCoefficients) -> Self {
        Self::UpTo(coeffs.n_max)
    }
}

macro_rules! kebab_enum {
    ($ty:ty, $($variant:ident => $name:literal),+) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $(Self::$variant => $name),+ })
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(Self::$variant),)+
                    _ => Err(Error::invalid(stringify!($ty), format!("unknown value '{s}'"))),
                }
            }
        }
    };
}

kebab_enum!(Convention, Standard => "standard", PaperLiteral => "paper-literal");
kebab_enum!(ZSource, Closed => "closed", Sum => "sum");

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermoPoint {
    pub inv_temperature: f64,
    pub z: f64,
    pub ln_z: f64,
    pub f: f64,
    pub s: f64,
    pub u: f64,
    pub cv: f64,
    pub convention: Convention,
}

impl ThermoPoint {
    /// Assembles the functions from `ln Z`, `U = -∂ln Z/∂β` and `∂U/∂β`.
    pub fn from_log_partition(beta: f64, ln_z: f64, u: f64, du_dbeta: f64, convention: Convention) -> Self {
        let f = -ln_z / beta;
        let df_dbeta = ln_z / (beta * beta) + u / beta;
        let (s, cv) = match convention {
            Convention::Standard => (beta * beta * df_dbeta, -beta * beta * du_dbeta),
            Convention::PaperLiteral => (-df_dbeta, du_dbeta),
        };
        Self {
            inv_temperature: beta,
            z: ln_z.exp(),
            ln_z,
            f,
            s,
            u,
            cv,
            convention,
        }
    }

    pub fn temperature(&self) -> f64 {
        1.0 / self.inv_temperature
    }
}

pub(crate) fn check_beta(beta: f64) -> Result<()> {
    if beta.is_finite() && beta > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid("beta", format!("must be finite and > 0, got {beta}")))
    }
}

/// `Σ_{n=0}^{n_max} e^{-βE_n}`.
pub fn partition_sum(params: &PotentialParams, l: u32, beta: f64, n_max: u32) -> Result<f64> {
    check_beta(beta)?;
    let coeffs = derive_coefficients(params, l)?;
    Ok(moments::sum(&coeffs, beta, Some(n_max)).ln_m0().exp())
}

/// `(ln Z + βE₀, E₀)` for the closed form, with `E₀ = C`.
fn reduced_closed(params: &PotentialParams, l: u32, beta: f64, range: LevelRange) -> Result<(f64, f64)> {
    check_beta(beta)?;
    let c = derive_coefficients(params, l)?;
    let root = (beta * c.quad_a).sqrt();
    let x1 = root * c.quad_b / (2.0 * c.quad_a);
    let bracket = match range {
        LevelRange::UpTo(n_max) => {
            let x2 = root * (f64::from(n_max) + c.quad_b / (2.0 * c.quad_a));
            scaled_erf_diff(x1, x2)
        }
        LevelRange::Unbounded => erfcx(x1),
    };
    Ok((0.5 * std::f64::consts::PI.ln() - (2.0 * root).ln() + bracket.ln(), c.quad_c))
}

/// `ln` of the closed-form classical partition function over `range`.
pub fn ln_partition_closed(params: &PotentialParams, l: u32, beta: f64, range: LevelRange) -> Result<f64> {
    let (reduced, e0) = reduced_closed(params, l, beta, range)?;
    Ok(reduced - beta * e0)
}

/// Classical partition function `∫_0^{n_max} e^{-βE(n)} dn` in closed form.
pub fn partition_closed(params: &PotentialParams, l: u32, beta: f64, n_max: u32) -> Result<f64> {
    if n_max == 0 {
        check_beta(beta)?;
        return Ok(0.0);
    }
    Ok(ln_partition_closed(params, l, beta, LevelRange::UpTo(n_max))?.exp())
}

/// Adaptive quadrature of the classical integrand over `range`, for checking
/// the closed form.
pub fn partition_quadrature(params: &PotentialParams, l: u32, beta: f64, range: LevelRange, rel_tol: f64) -> Result<f64> {
    check_beta(beta)?;
    let c = derive_coefficients(params, l)?;
    let e0 = c.energy(0);
    let integrand = |n: f64| (-beta * (c.energy_at(n) - e0)).exp();
    let q = Quadrature::new(rel_tol)?.with_panels(64);
    let estimate = match range {
        LevelRange::UpTo(n_max) => q.integrate(integrand, 0.0, f64::from(n_max))?,
        LevelRange::Unbounded => q.integrate_to_infinity(integrand, 0.0)?,
    };
    Ok(estimate.value * (-beta * e0).exp())
}

fn level_moments(coeffs: &SpectrumCoefficients, beta: f64, range: LevelRange, source: ZSource) -> Moments {
    match (source, range) {
        (ZSource::Closed, LevelRange::UpTo(n)) => moments::integral(coeffs, beta, Some(f64::from(n))),
        (ZSource::Closed, LevelRange::Unbounded) => moments::integral(coeffs, beta, None),
        (ZSource::Sum, LevelRange::UpTo(n)) => moments::sum(coeffs, beta, Some(n)),
        (ZSource::Sum, LevelRange::Unbounded) => moments::sum(coeffs, beta, None),
    }
}

/// `(ln Z + βE₀, E₀)`: the log partition function without its linear
/// ground-state part.
fn reduced_ln_partition(params: &PotentialParams, l: u32, beta: f64, range: LevelRange, source: ZSource) -> Result<(f64, f64)> {
    match source {
        ZSource::Closed => reduced_closed(params, l, beta, range),
        ZSource::Sum => {
            check_beta(beta)?;
            let c = derive_coefficients(params, l)?;
            let m = level_moments(&c, beta, range, source);
            Ok((m.m[0].ln(), m.shift))
        }
    }
}

/// `ln Z` from the selected source.
pub fn ln_partition(params: &PotentialParams, l: u32, beta: f64, range: LevelRange, source: ZSource) -> Result<f64> {
    let (reduced, e0) = reduced_ln_partition(params, l, beta, range, source)?;
    Ok(reduced - beta * e0)
}

/// `F, S, U, C_v` with analytic `β`-derivatives.
pub fn thermo_functions(
    params: &PotentialParams,
    l: u32,
    beta: f64,
    range: LevelRange,
    convention: Convention,
    source: ZSource,
) -> Result<ThermoPoint> {
    let ln_z = ln_partition(params, l, beta, range, source)?;
    let c = derive_coefficients(params, l)?;
    let m = level_moments(&c, beta, range, source);
    let u = m.mean_energy();
    let du_dbeta = -m.variance();
    Ok(ThermoPoint::from_log_partition(beta, ln_z, u, du_dbeta, convention))
}

/// Same quantities from Richardson-extrapolated differences of `ln Z(β)`.
pub fn thermo_functions_numeric(
    params: &PotentialParams,
    l: u32,
    beta: f64,
    range: LevelRange,
    convention: Convention,
    source: ZSource,
) -> Result<ThermoPoint> {
    let (reduced, e0) = reduced_ln_partition(params, l, beta, range, source)?;
    let reduced_at = |b: f64| reduced_ln_partition(params, l, b, range, source).map_or(f64::NAN, |r| r.0);
    numeric_point(beta, reduced, e0, reduced_at, convention)
}

/// Richardson base steps tried by the finite-difference path, as fractions of `β`.
const NUMERIC_STEPS: [f64; 8] = [0.4, 0.2, 0.1, 0.05, 0.02, 0.01, 0.005, 0.002];

/// Differences the reduced `ln Z(β) + βE₀`, whose linear ground-state part
/// would otherwise dominate the rounding error.
pub(crate) fn numeric_point<F: FnMut(f64) -> f64>(
    beta: f64,
    reduced: f64,
    e0: f64,
    mut reduced_at: F,
    convention: Convention,
) -> Result<ThermoPoint> {
    let steps = NUMERIC_STEPS.map(|s| s * beta);
    let first = derivative_scan(&mut reduced_at, beta, 1, &steps, 1e-6, 0.0)?;
    let second = derivative_scan(&mut reduced_at, beta, 2, &steps, 1e-6, 0.0)?;
    let ln_z = reduced - beta * e0;
    Ok(ThermoPoint::from_log_partition(beta, ln_z, e0 - first.value, -second.value, convention))
}
