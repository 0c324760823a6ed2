//! Superstatistics with a delta-peaked temperature distribution.
//!
//! The Boltzmann factor is deformed to `e^{-βE}(1 + (q/2)β²E²)` and the
//! partition function integrates it over `n ∈ [0, ∞)`:
//!
//! ```text
//! Z_s = m₀ + (q/2)β² m₂,    m_k = ∫_0^∞ E(n)^k e^{-βE(n)} dn
//! ```
//!
//! With `u = 4n + σ₂` the moments reduce to Gaussian moments of
//! `e^{-βχu²}` over `[σ₂, ∞)`, which follow from `erfc` by recursion.
//! At `q = 0` everything collapses to the ordinary classical partition
//! function over the unbounded range.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moments;
use crate::oracle::quadrature::Quadrature;
use crate::potential::PotentialParams;
use crate::specfun::erf;
use crate::spectrum::derive_coefficients;
use crate::thermo::{check_beta, numeric_point, Convention, ThermoPoint};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuperstatConfig {
    pub q: f64,
    /// `ħ²α²/(8μ)`.
    pub chi: f64,
}

impl SuperstatConfig {
    pub fn new(q: f64, chi: f64) -> Result<Self> {
        if !(q.is_finite() && q >= 0.0) {
            return Err(Error::invalid("q", format!("must be finite and >= 0, got {q}")));
        }
        if !(chi.is_finite() && chi > 0.0) {
            return Err(Error::invalid("chi", format!("must be finite and > 0, got {chi}")));
        }
        Ok(Self { q, chi })
    }

    pub fn for_params(params: &PotentialParams, q: f64) -> Result<Self> {
        params.validate()?;
        Self::new(q, params.chi())
    }
}

/// `e^{-βE}(1 + (q/2)β²E²)`.
pub fn effective_boltzmann(beta: f64, e: f64, q: f64) -> f64 {
    let be = beta * e;
    (-be).exp() * (1.0 + 0.5 * q * be * be)
}

/// `Z_s` and its first two `β`-derivatives, divided by a common scale
/// `e^{log_scale}`.
struct Deformed {
    log_scale: f64,
    z: f64,
    dz: f64,
    d2z: f64,
}

fn deformed(params: &PotentialParams, l: u32, beta: f64, q: f64) -> Result<Deformed> {
    check_beta(beta)?;
    SuperstatConfig::for_params(params, q)?;
    let c = derive_coefficients(params, l)?;
    let mm = moments::integral(&c, beta, None);
    let m = mm.m;
    let h = 0.5 * q;
    Ok(Deformed {
        log_scale: mm.log_scale,
        z: m[0] + h * beta * beta * m[2],
        dz: -m[1] + q * beta * m[2] - h * beta * beta * m[3],
        d2z: m[2] + q * m[2] - 2.0 * q * beta * m[3] + h * beta * beta * m[4],
    })
}

/// `ln Z_s` from the closed form.
pub fn ln_superstat_partition(params: &PotentialParams, l: u32, beta: f64, q: f64) -> Result<f64> {
    let d = deformed(params, l, beta, q)?;
    Ok(d.z.ln() + d.log_scale)
}

/// Closed-form `Z_s`.
pub fn superstat_partition_closed(params: &PotentialParams, l: u32, beta: f64, q: f64) -> Result<f64> {
    Ok(ln_superstat_partition(params, l, beta, q)?.exp())
}

/// `Z_s` by adaptive quadrature of the deformed Boltzmann factor over `[0, ∞)`.
pub fn superstat_partition_quadrature(params: &PotentialParams, l: u32, beta: f64, q: f64) -> Result<f64> {
    check_beta(beta)?;
    SuperstatConfig::for_params(params, q)?;
    let c = derive_coefficients(params, l)?;
    let e0 = c.energy(0);
    let integrand = |n: f64| {
        let e = c.energy_at(n);
        let be = beta * e;
        (-beta * (e - e0)).exp() * (1.0 + 0.5 * q * be * be)
    };
    let estimate = Quadrature::new(1e-12)?.with_panels(64).integrate_to_infinity(integrand, 0.0)?;
    Ok(estimate.value * (-beta * e0).exp())
}

/// Alternative closed form of the deformed partition function with a different
/// `erf` coefficient. Diagnostic only: it does not reduce to the ordinary
/// partition function at `q = 0`.
pub fn paper_eq37(params: &PotentialParams, l: u32, beta: f64, q: f64) -> Result<f64> {
    check_beta(beta)?;
    let cfg = SuperstatConfig::for_params(params, q)?;
    let c = derive_coefficients(params, l)?;
    let (s1, s2, chi) = (c.sigma1, c.sigma2, cfg.chi);
    let p = beta * chi;
    let sp = p.sqrt();
    let root_pi = std::f64::consts::PI.sqrt();
    // e^{-β(σ₁+χσ₂²)} distributed over the terms so that e^{βχσ₂²} never forms
    let outer = (-beta * s1).exp();
    let gauss = (-beta * (s1 + chi * s2 * s2)).exp();
    let polynomial = -6.0 * q - 8.0 * q * beta * s1;
    let numerator = outer * root_pi * (8.0 + 3.0 * q + 4.0 * q * beta * s1 * (1.0 + beta * s1))
        - sp * s2 * polynomial * gauss
        - outer * root_pi * erf(sp * s2)
        + 4.0 * q * p * sp * s2.powi(3) * gauss;
    Ok(numerator / (64.0 * sp))
}

/// Thermodynamic functions of `Z_s` with analytic `β`-derivatives.
pub fn superstat_thermo(params: &PotentialParams, l: u32, beta: f64, q: f64, convention: Convention) -> Result<ThermoPoint> {
    let d = deformed(params, l, beta, q)?;
    let ln_z = d.z.ln() + d.log_scale;
    let g = d.dz / d.z;
    let u = -g;
    let du_dbeta = -(d.d2z / d.z - g * g);
    Ok(ThermoPoint::from_log_partition(beta, ln_z, u, du_dbeta, convention))
}

/// Same quantities from Richardson differences of `ln Z_s`.
pub fn superstat_thermo_numeric(params: &PotentialParams, l: u32, beta: f64, q: f64, convention: Convention) -> Result<ThermoPoint> {
    let reduced_at = |b: f64| deformed(params, l, b, q).map_or(f64::NAN, |d| d.z.ln());
    let d = deformed(params, l, beta, q)?;
    numeric_point(beta, d.z.ln(), -d.log_scale / beta, reduced_at, convention)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::erfc;
    use crate::thermo::{thermo_functions, LevelRange, ZSource};
    use proptest::prelude::*;

    fn table2() -> PotentialParams {
        PotentialParams::trig_pt(5.0, 3.0, 0.2, 10.0).unwrap()
    }

    fn table3() -> PotentialParams {
        PotentialParams::trig_pt(5.0, 3.0, 1.2, 10.0).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    fn beta_grid() -> impl Iterator<Item = f64> {
        (0..16).map(|i| 10f64.powf(-2.0 + 3.0 * i as f64 / 15.0))
    }

    #[test]
    fn boltzmann_factor() {
        assert_eq!(effective_boltzmann(0.3, 2.0, 0.0), (-0.6f64).exp());
        assert_eq!(effective_boltzmann(0.3, 0.0, 0.7), 1.0);
        // e^{-2}·1.2 from an independent evaluation
        assert!((effective_boltzmann(1.0, 2.0, 0.1) - 0.162_402_339_883_935_24).abs() < 1e-15);
    }

    #[test]
    fn config_validation() {
        assert!(SuperstatConfig::new(-0.1, 1.0).is_err());
        assert!(SuperstatConfig::new(0.1, 0.0).is_err());
        let cfg = SuperstatConfig::for_params(&table2(), 0.5).unwrap();
        assert_eq!(cfg.chi, table2().chi());
    }

    #[test]
    fn q_zero_is_gaussian_tail() {
        for p in [table2(), table3()] {
            let c = derive_coefficients(&p, 0).unwrap();
            for beta in [0.01, 0.2, 1.0] {
                let x = (beta * c.chi).sqrt() * c.sigma2;
                let tail = (-beta * c.sigma1).exp() / 8.0 * (std::f64::consts::PI / (beta * c.chi)).sqrt() * erfc(x);
                let closed = superstat_partition_closed(&p, 0, beta, 0.0).unwrap();
                assert!(rel(closed, tail) <= 1e-12, "beta={beta}: {closed} vs {tail}");
            }
        }
    }

    #[test]
    fn closed_matches_quadrature() {
        for p in [table2(), table3()] {
            for q in [0.0, 0.1, 0.5, 1.0] {
                for beta in beta_grid() {
                    let closed = superstat_partition_closed(&p, 0, beta, q).unwrap();
                    let quad = superstat_partition_quadrature(&p, 0, beta, q).unwrap();
                    assert!(rel(closed, quad) <= 1e-8, "q={q} beta={beta}: {closed} vs {quad}");
                }
            }
        }
    }

    #[test]
    fn sigma1_shift_is_an_exponential_factor() {
        let a = PotentialParams::new(5.0, 3.0, 0.0, 0.0, 0.4, 10.0, 1.0).unwrap();
        let b = PotentialParams::new(5.0, 2.0, 1.0, 0.0, 0.4, 10.0, 1.0).unwrap();
        // V₂ + V₃ is unchanged so σ₂ is too, and σ₁ drops by V₃ = 1
        let (beta, q) = (0.3, 0.2);
        let za = superstat_partition_quadrature(&a, 0, beta, q).unwrap();
        let zb = superstat_partition_quadrature(&b, 0, beta, q).unwrap();
        let ea = derive_coefficients(&a, 0).unwrap();
        let eb = derive_coefficients(&b, 0).unwrap();
        assert_eq!(ea.sigma2, eb.sigma2);
        // the deformation polynomial depends on σ₁ too; compare the q=0 parts
        let za0 = superstat_partition_quadrature(&a, 0, beta, 0.0).unwrap();
        let zb0 = superstat_partition_quadrature(&b, 0, beta, 0.0).unwrap();
        assert!(rel(zb0 / za0, (beta * 1.0f64).exp()) < 1e-10);
        assert!(zb > za);
    }

    #[test]
    fn reduces_to_normal_statistics() {
        for p in [table2(), table3()] {
            for beta in beta_grid() {
                for conv in [Convention::Standard, Convention::PaperLiteral] {
                    let s = superstat_thermo(&p, 0, beta, 0.0, conv).unwrap();
                    let n = thermo_functions(&p, 0, beta, LevelRange::Unbounded, conv, ZSource::Closed).unwrap();
                    for (x, y) in [(s.z, n.z), (s.f, n.f), (s.u, n.u), (s.s, n.s), (s.cv, n.cv)] {
                        assert!(rel(x, y) <= 1e-10, "beta={beta}: {x} vs {y}");
                    }
                }
            }
        }
    }

    #[test]
    fn analytic_derivatives_match_richardson() {
        let p = table3();
        for q in [0.1, 1.0] {
            for beta in beta_grid() {
                let a = superstat_thermo(&p, 0, beta, q, Convention::Standard).unwrap();
                let n = superstat_thermo_numeric(&p, 0, beta, q, Convention::Standard).unwrap();
                assert!(rel(a.u, n.u) <= 1e-6);
                assert!(rel(a.cv, n.cv) <= 1e-6, "beta={beta} q={q}: {} vs {}", a.cv, n.cv);
            }
        }
    }

    #[test]
    fn printed_formula_misses_at_q_zero() {
        let p = table3();
        let beta = 0.5;
        let printed = paper_eq37(&p, 0, beta, 0.0).unwrap();
        let closed = superstat_partition_closed(&p, 0, beta, 0.0).unwrap();
        assert!(rel(printed, closed) > 1e-3);
        // its q = 0 value is √π(8 - erf)/(64√p)·e^{-βσ₁} rather than 8·erfc
        let c = derive_coefficients(&p, 0).unwrap();
        let sp = (beta * c.chi).sqrt();
        let expected = (-beta * c.sigma1).exp() * std::f64::consts::PI.sqrt() * (8.0 - erf(sp * c.sigma2)) / (64.0 * sp);
        assert!(rel(printed, expected) < 1e-13);
    }

    proptest! {
        #[test]
        fn dominates_ordinary_factor(beta in 1e-3..10.0f64, e in 0.0..100.0f64, q in 0.0..2.0f64) {
            let deformed = effective_boltzmann(beta, e, q);
            let plain = (-beta * e).exp();
            prop_assert!(deformed >= plain);
            if q * e > 0.0 && plain > 0.0 && 0.5 * q * (beta * e).powi(2) > 1e-15 {
                prop_assert!(deformed > plain);
            }
        }

        #[test]
        fn nondecreasing_in_q(v1 in 0.0..20.0f64, v2 in 0.0..20.0f64, alpha in 0.05..1.5f64,
                              beta in 1e-2..10.0f64, q in 0.0..1.0f64, dq in 0.0..1.0f64) {
            let p = PotentialParams::trig_pt(v1, v2, alpha, 10.0).unwrap();
            let lo = superstat_partition_closed(&p, 0, beta, q).unwrap();
            let hi = superstat_partition_closed(&p, 0, beta, q + dq).unwrap();
            prop_assert!(hi >= lo);
        }

        #[test]
        fn decreasing_in_beta(v1 in 0.0..20.0f64, v2 in 0.0..20.0f64, alpha in 0.05..1.5f64,
                              beta in 1e-2..10.0f64, q in 0.0..1.0f64) {
            let p = PotentialParams::trig_pt(v1, v2, alpha, 10.0).unwrap();
            let d = deformed(&p, 0, beta, q).unwrap();
            prop_assert!(d.dz < 0.0);
        }
    }
}
