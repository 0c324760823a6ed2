//! Closed-form spectrum and radial wavefunctions.
//!
//! With `ρ = sin²(αr)` the radial equation (centrifugal term approximated) has
//! solutions `ρ^β (1−ρ)^δ ₂F₁(−n, n + 2(β+δ); 2β + ½; ρ)` and energies
//!
//! ```text
//! E(n, l) = σ₁ + χ (4n + σ₂)²,   χ = ħ²α²/(8μ)
//! σ₁ = ħ²α² l(l+1) d₀/(2μ) − V3 − V4
//! σ₂ = 2 + √(1 + 8μ(V3+V2)/ħ²α²) + √(8μ(V1+V4)/ħ²α² + (2l+1)²)
//! ```

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::quadrature::Quadrature;
use crate::potential::{PotentialParams, QuantumState, D0, WALL_GUARD};
use crate::specfun::{hyp2f1_jacobi, HypergeometricArgs};

fn checked_sqrt(term: &'static str, value: f64) -> Result<f64> {
    if value >= 0.0 {
        Ok(value.sqrt())
    } else {
        Err(Error::NegativeRadicand { term, value })
    }
}

/// `ħ²α² l(l+1) d₀ / (2μ)`.
fn centrifugal_shift(params: &PotentialParams, l: u32) -> f64 {
    let k = params.hbar * params.hbar * params.alpha * params.alpha;
    let gamma = (l as f64) * (l as f64 + 1.0);
    k * gamma * D0 / (2.0 * params.mu)
}

/// Derived quantities for one parameter set and orbital number.
///
/// `epsilon` is level dependent and is exposed through [`Self::epsilon`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumCoefficients {
    pub l: u32,
    pub eta1: f64,
    pub eta2: f64,
    pub eta3: f64,
    pub eta4: f64,
    /// `l(l+1)`
    pub gamma: f64,
    /// Exponent of `ρ` at the left wall.
    pub beta_exp: f64,
    /// Exponent of `1 − ρ` at the right wall.
    pub delta_exp: f64,
    /// `c = 2β + ½` of the hypergeometric factor.
    pub hyp_c: f64,
    pub sigma1: f64,
    pub sigma2: f64,
    /// `ħ²α²/(8μ)`
    pub chi: f64,
    /// `ħ²α²/(2μ)`, converts dimensionless energies.
    pub energy_unit: f64,
    /// Quadratic-in-n exponent `A n² + B n + C` of the Boltzmann factor.
    pub quad_a: f64,
    pub quad_b: f64,
    pub quad_c: f64,
    /// Default partition-sum truncation `⌊σ₂/4⌋`.
    pub n_max: u32,
}

pub fn derive_coefficients(params: &PotentialParams, l: u32) -> Result<SpectrumCoefficients> {
    params.validate()?;
    let PotentialParams { v1, v2, v3, v4, alpha, mu, hbar } = *params;
    let k = hbar * hbar * alpha * alpha;
    let eta = |v: f64| 2.0 * mu * v / k;
    let (eta1, eta2, eta3, eta4) = (eta(v1), eta(v2), eta(v3), eta(v4));
    let gamma = (l as f64) * (l as f64 + 1.0);

    let beta_exp = 0.25 + checked_sqrt("beta", 1.0 / 16.0 + (eta1 + eta4 + gamma) / 4.0)?;
    let delta_exp = 0.25 + checked_sqrt("delta", 1.0 / 16.0 + (eta3 + eta2) / 4.0)?;

    let two_l1 = 2.0 * l as f64 + 1.0;
    let right = checked_sqrt("sigma2", 1.0 + 8.0 * mu * v3 / k + 8.0 * mu * v2 / k)?;
    let left = checked_sqrt("sigma2", 8.0 * mu * v1 / k + 8.0 * mu * v4 / k + two_l1 * two_l1)?;
    let sigma2 = 2.0 + right + left;
    let sigma1 = centrifugal_shift(params, l) - v3 - v4;
    let chi = params.chi();

    Ok(SpectrumCoefficients {
        l,
        eta1,
        eta2,
        eta3,
        eta4,
        gamma,
        beta_exp,
        delta_exp,
        hyp_c: 2.0 * beta_exp + 0.5,
        sigma1,
        sigma2,
        chi,
        energy_unit: params.energy_unit(),
        quad_a: 2.0 * k / mu,
        quad_b: k * sigma2 / mu,
        quad_c: k * sigma2 * sigma2 / (8.0 * mu) + sigma1,
        n_max: (sigma2 / 4.0).floor() as u32,
    })
}

impl SpectrumCoefficients {
    /// `σ₁ + χ(4n + σ₂)²`.
    pub fn energy(&self, n: u32) -> f64 {
        let u = 4.0 * n as f64 + self.sigma2;
        self.sigma1 + self.chi * u * u
    }

    /// Energy at a continuous level index, as used by the classical-limit integrals.
    pub fn energy_at(&self, n: f64) -> f64 {
        let u = 4.0 * n + self.sigma2;
        self.sigma1 + self.chi * u * u
    }

    /// Dimensionless energy `γd₀ − η₃ − η₄ + ¼(4n + σ₂)²`.
    pub fn epsilon(&self, n: u32) -> f64 {
        let u = 4.0 * n as f64 + self.sigma2;
        self.gamma * D0 - self.eta3 - self.eta4 + 0.25 * u * u
    }

    /// Hypergeometric parameters of level `n`: `(−n, n + 2(β+δ), 2β + ½)`.
    pub fn hyp_args(&self, n: u32) -> HypergeometricArgs {
        HypergeometricArgs::terminating(
            n,
            n as f64 + 2.0 * (self.beta_exp + self.delta_exp),
            self.hyp_c,
        )
    }

    /// The parameter `a = (β+δ) − √(ε + η₃ + η₄ − γd₀)/2` implied by `energy`.
    pub fn hyp_a_for_energy(&self, energy: f64) -> Result<f64> {
        let eps = energy / self.energy_unit;
        let root = checked_sqrt("quantization", eps + self.eta3 + self.eta4 - self.gamma * D0)?;
        Ok(self.beta_exp + self.delta_exp - root / 2.0)
    }

    /// `a + n`, zero when `energy` satisfies the termination condition for level `n`.
    pub fn quantization_residual(&self, energy: f64, n: u32) -> Result<f64> {
        Ok(self.hyp_a_for_energy(energy)? + n as f64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyLevel {
    pub state: QuantumState,
    pub energy: f64,
}

/// Energy of the generalized potential.
pub fn energy_eigenvalue(params: &PotentialParams, state: QuantumState) -> Result<EnergyLevel> {
    let coeffs = derive_coefficients(params, state.l)?;
    Ok(EnergyLevel {
        state,
        energy: coeffs.energy(state.n),
    })
}

/// Energy of the two-term potential; `v3` and `v4` are ignored.
pub fn energy_trig_pt(params: &PotentialParams, state: QuantumState) -> Result<EnergyLevel> {
    params.validate()?;
    let PotentialParams { v1, v2, alpha, mu, hbar, .. } = *params;
    let k = hbar * hbar * alpha * alpha;
    let two_l1 = 2.0 * state.l as f64 + 1.0;
    let bracket = 2.0
        + checked_sqrt("trig_pt", 1.0 + 8.0 * mu * v2 / k)?
        + checked_sqrt("trig_pt", 8.0 * mu * v1 / k + two_l1 * two_l1)?;
    let u = 4.0 * state.n as f64 + bracket;
    Ok(EnergyLevel {
        state,
        energy: centrifugal_shift(params, state.l) + params.chi() * u * u,
    })
}

/// s-wave energy of the two-term potential; `v3` and `v4` are ignored.
pub fn energy_s_wave(params: &PotentialParams, n: u32) -> Result<EnergyLevel> {
    params.validate()?;
    let PotentialParams { v1, v2, alpha, mu, hbar, .. } = *params;
    let k = hbar * hbar * alpha * alpha;
    let bracket = 2.0
        + checked_sqrt("s_wave", 1.0 + 8.0 * mu * v2 / k)?
        + checked_sqrt("s_wave", 8.0 * mu * v1 / k + 1.0)?;
    let u = 4.0 * n as f64 + bracket;
    Ok(EnergyLevel {
        state: QuantumState::new(n, 0),
        energy: params.chi() * u * u,
    })
}

/// `N ρ^β (1−ρ)^δ ₂F₁(−n, n + 2(β+δ); 2β + ½; ρ)` with `ρ = sin²(αr)`.
///
/// The amplitude is held as `log_norm = ln N`: for small `α` the exponents run
/// into the thousands and the bare envelope underflows.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialWavefunction {
    pub params: PotentialParams,
    pub state: QuantumState,
    pub coeffs: SpectrumCoefficients,
    pub log_norm: f64,
}

impl RadialWavefunction {
    /// Unnormalized wavefunction (`N = 1`).
    pub fn new(params: &PotentialParams, state: QuantumState) -> Result<Self> {
        Ok(Self {
            params: *params,
            state,
            coeffs: derive_coefficients(params, state.l)?,
            log_norm: 0.0,
        })
    }

    pub fn norm_constant(&self) -> f64 {
        self.log_norm.exp()
    }

    /// `β ln ρ + δ ln(1 − ρ)` at `x = αr`.
    fn log_envelope(&self, x: f64) -> f64 {
        let (s, c) = x.sin_cos();
        2.0 * (self.coeffs.beta_exp * s.ln() + self.coeffs.delta_exp * c.ln())
    }

    /// Largest value of the log envelope, at `ρ = β/(β+δ)`.
    fn log_envelope_peak(&self) -> f64 {
        let (b, d) = (self.coeffs.beta_exp, self.coeffs.delta_exp);
        let rho = b / (b + d);
        b * rho.ln() + d * (1.0 - rho).ln()
    }

    fn polynomial(&self, x: f64) -> Result<f64> {
        let rho = x.sin().powi(2).clamp(0.0, 1.0);
        hyp2f1_jacobi(self.coeffs.hyp_args(self.state.n), rho)
    }

    /// Value with the envelope shifted by `shift` in log space; zero at the walls.
    fn shifted(&self, x: f64, shift: f64) -> Result<f64> {
        if x <= 0.0 || x >= FRAC_PI_2 {
            return Ok(0.0);
        }
        Ok((self.log_envelope(x) + shift).exp() * self.polynomial(x)?)
    }

    pub fn eval(&self, r: f64) -> Result<f64> {
        let x = self.params.alpha * r;
        if !(x.is_finite() && x > WALL_GUARD && x < FRAC_PI_2 - WALL_GUARD) {
            return Err(Error::Domain { scaled: x });
        }
        self.shifted(x, self.log_norm)
    }

    /// Copy normalized so that `∫₀^{π/2α} R² dr = 1`.
    pub fn normalize(&self) -> Result<Self> {
        let peak = self.log_envelope_peak();
        let alpha = self.params.alpha;
        let quad = Quadrature::new(1e-10)?.with_panels(256);
        let mut failure = None;
        let integral = quad.integrate(
            |r| match self.shifted(alpha * r, -peak) {
                Ok(v) => v * v,
                Err(e) => {
                    failure.get_or_insert(e);
                    f64::NAN
                }
            },
            0.0,
            self.params.well_width(),
        );
        if let Some(e) = failure {
            return Err(e);
        }
        let integral = integral?.value;
        Ok(Self {
            log_norm: -peak - 0.5 * integral.ln(),
            ..*self
        })
    }

    /// Sign changes on `points` equally spaced interior points of the well.
    pub fn node_count(&self, points: usize) -> Result<u32> {
        let width = self.params.well_width();
        let shift = -self.log_envelope_peak();
        let mut last = 0.0f64;
        let mut nodes = 0;
        for i in 1..=points {
            let r = width * i as f64 / (points + 1) as f64;
            let v = self.shifted(self.params.alpha * r, shift)?;
            if v != 0.0 {
                if last != 0.0 && v.signum() != last.signum() {
                    nodes += 1;
                }
                last = v;
            }
        }
        Ok(nodes)
    }
}

pub fn wavefunction_eval(wf: &RadialWavefunction, r: f64) -> Result<f64> {
    wf.eval(r)
}

pub fn normalize(wf: &RadialWavefunction) -> Result<RadialWavefunction> {
    wf.normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn trig(alpha: f64) -> PotentialParams {
        PotentialParams::trig_pt(5.0, 3.0, alpha, 10.0).unwrap()
    }

    fn general(v: [f64; 4], alpha: f64, mu: f64) -> PotentialParams {
        PotentialParams::new(v[0], v[1], v[2], v[3], alpha, mu, 1.0).unwrap()
    }

    #[test]
    fn zero_potential_coefficients() {
        let c = derive_coefficients(&general([0.0; 4], 0.7, 3.0), 0).unwrap();
        assert_eq!(c.beta_exp, 0.5);
        assert_eq!(c.delta_exp, 0.5);
        assert_eq!(c.sigma2, 4.0);
        assert_eq!(c.n_max, 1);
        assert_eq!(c.sigma1, 0.0);
        for n in 0..5 {
            let u = 4.0 * n as f64 + 4.0;
            assert_relative_eq!(c.energy(n), c.chi * u * u, max_relative = 1e-15);
        }
    }

    #[test]
    fn sigma2_by_hand() {
        let c = derive_coefficients(&trig(1.2), 0).unwrap();
        let by_hand = 2.0 + (1.0f64 + 240.0 / 1.44).sqrt() + (400.0f64 / 1.44 + 1.0).sqrt();
        assert_relative_eq!(c.sigma2, by_hand, max_relative = 1e-15);
        assert!((c.sigma2 - 31.645).abs() < 1e-3);
        assert_eq!(c.n_max, 7);

        let c = derive_coefficients(&trig(0.2), 0).unwrap();
        assert!((c.sigma2 - 179.47).abs() < 5e-3, "{}", c.sigma2);
        assert_relative_eq!(c.chi * c.sigma2 * c.sigma2, 16.104_941_72, max_relative = 1e-9);
    }

    #[test]
    fn coefficient_invariants() {
        let p = general([5.0, 3.0, 0.5, 0.5], 0.4, 10.0);
        for l in 0..4 {
            let c = derive_coefficients(&p, l).unwrap();
            assert!(c.beta_exp >= 0.5 && c.delta_exp >= 0.5);
            assert_relative_eq!(c.sigma2, 4.0 * (c.beta_exp + c.delta_exp), max_relative = 1e-14);
            for n in 0..4 {
                let h = c.hyp_args(n);
                assert_relative_eq!(h.a + h.b, 2.0 * (c.beta_exp + c.delta_exp), max_relative = 1e-14);
                assert_relative_eq!(c.epsilon(n) * c.energy_unit, c.energy(n), max_relative = 1e-13);
            }
            assert!(c.quad_a > 0.0);
            let k = p.alpha * p.alpha;
            let lhs = c.quad_c - c.sigma1;
            assert_relative_eq!(lhs, k * c.sigma2 * c.sigma2 / (8.0 * p.mu), max_relative = 1e-14);
            assert_relative_eq!(c.quad_b, c.quad_a * c.sigma2 / 2.0, max_relative = 1e-14);
            assert_eq!(c.n_max, (c.sigma2 / 4.0).floor() as u32);
        }
    }

    #[test]
    fn printed_spot_values() {
        let e = |alpha, n, l| energy_eigenvalue(&trig(alpha), QuantumState::new(n, l)).unwrap().energy;
        assert!((e(0.2, 0, 0) - 16.104_941_72).abs() < 1e-6);
        assert!((e(1.2, 0, 0) - 18.025_600_22).abs() < 1e-6);
        assert!((e(1.2, 2, 1) - 28.643_954_20).abs() < 1e-6);
        let t = |alpha, n, l| energy_trig_pt(&trig(alpha), QuantumState::new(n, l)).unwrap().energy;
        assert!((t(0.8, 0, 0) - 17.231_633_09).abs() < 1e-6);
        assert!((t(0.4, 3, 2) - 21.218_753_32).abs() < 1e-6);
        let s = |alpha, n| energy_s_wave(&trig(alpha), n).unwrap().energy;
        assert!((s(0.02, 4) - 16.067_034_62).abs() < 1e-6);
        assert!((s(0.002, 6) - 15.792_140_21).abs() < 1e-6);
    }

    #[test]
    fn special_cases_agree_exactly() {
        for alpha in [0.002, 0.02, 0.2, 0.4, 0.8, 1.2] {
            let p = trig(alpha);
            for n in 0..8 {
                for l in 0..5 {
                    let s = QuantumState::new(n, l);
                    assert_eq!(energy_eigenvalue(&p, s).unwrap().energy, energy_trig_pt(&p, s).unwrap().energy);
                }
                assert_eq!(
                    energy_trig_pt(&p, QuantumState::new(n, 0)).unwrap().energy,
                    energy_s_wave(&p, n).unwrap().energy
                );
            }
        }
    }

    #[test]
    fn trig_pt_ignores_extra_terms() {
        let with = general([5.0, 3.0, 2.0, 1.0], 0.3, 10.0);
        let s = QuantumState::new(1, 1);
        assert_eq!(energy_trig_pt(&with, s).unwrap(), energy_trig_pt(&trig(0.3), s).unwrap());
    }

    #[test]
    fn quantization_residual_vanishes() {
        for alpha in [0.002, 0.2, 1.2] {
            let p = general([5.0, 3.0, 0.5, 0.5], alpha, 10.0);
            for l in 0..4 {
                let c = derive_coefficients(&p, l).unwrap();
                for n in 0..6 {
                    let r = c.quantization_residual(c.energy(n), n).unwrap();
                    assert!(r.abs() <= 1e-10, "alpha {alpha} n {n} l {l}: {r}");
                }
            }
        }
    }

    #[test]
    fn wavefunction_vanishes_at_walls() {
        let wf = RadialWavefunction::new(&trig(0.8), QuantumState::new(2, 1)).unwrap();
        let w = wf.params.well_width();
        let mid = wf.eval(0.5 * w).unwrap().abs();
        assert!(wf.eval(1e-9).unwrap().abs() < 1e-12 * mid.max(1e-300));
        assert!(wf.eval(w * (1.0 - 1e-9)).unwrap().abs() < 1e-12 * mid.max(1e-300));
        assert!(wf.eval(0.0).is_err());
        assert!(wf.eval(w).is_err());
    }

    #[test]
    fn ground_state_is_nodeless_and_positive() {
        let wf = RadialWavefunction::new(&trig(0.4), QuantumState::new(0, 2)).unwrap();
        assert_eq!(wf.node_count(10_000).unwrap(), 0);
        let w = wf.params.well_width();
        for i in 1..100 {
            assert!(wf.eval(w * i as f64 / 100.0).unwrap() > 0.0);
        }
        assert_eq!(wf.polynomial(0.3).unwrap(), 1.0);
    }

    #[test]
    fn normalization() {
        for alpha in [0.002, 0.2, 1.2] {
            let wf = RadialWavefunction::new(&trig(alpha), QuantumState::new(1, 1))
                .unwrap()
                .normalize()
                .unwrap();
            // independent check: composite Simpson on a dense grid
            let w = wf.params.well_width();
            let m = 200_000;
            let h = w / m as f64;
            let mut sum = 0.0;
            for i in 1..m {
                let v = wf.eval(i as f64 * h).unwrap();
                sum += if i % 2 == 1 { 4.0 } else { 2.0 } * v * v;
            }
            assert!((sum * h / 3.0 - 1.0).abs() < 1e-9, "alpha {alpha}: {}", sum * h / 3.0);
            assert_eq!(wf.node_count(10_000).unwrap(), 1);
            let again = wf.normalize().unwrap();
            assert!((again.log_norm - wf.log_norm).abs() < 1e-12);
        }
    }

    #[test]
    fn node_count_equals_n() {
        for alpha in [0.002, 0.02, 0.2] {
            for n in 0..6 {
                for l in 0..4 {
                    let wf = RadialWavefunction::new(&trig(alpha), QuantumState::new(n, l)).unwrap();
                    assert_eq!(wf.node_count(10_000).unwrap(), n, "alpha {alpha} n {n} l {l}");
                }
            }
        }
    }

    fn admissible() -> impl Strategy<Value = PotentialParams> {
        (0.0..20.0f64, 0.0..20.0f64, 0.0..5.0f64, 0.0..5.0f64, 0.01..2.0f64, 0.5..20.0f64)
            .prop_map(|(v1, v2, v3, v4, alpha, mu)| PotentialParams::new(v1, v2, v3, v4, alpha, mu, 1.0).unwrap())
    }

    proptest! {
        #[test]
        fn energy_increases_with_n_and_l(p in admissible(), n in 0u32..20, l in 0u32..10) {
            let e = |n, l| energy_eigenvalue(&p, QuantumState::new(n, l)).unwrap().energy;
            prop_assert!(e(n + 1, l) > e(n, l));
            prop_assert!(e(n, l + 1) > e(n, l));
        }

        #[test]
        fn reduction_agrees(v1 in 0.0..20.0f64, v2 in 0.0..20.0f64, alpha in 0.01..2.0f64, mu in 0.5..20.0f64, n in 0u32..20, l in 0u32..6) {
            let p = PotentialParams::trig_pt(v1, v2, alpha, mu).unwrap();
            let s = QuantumState::new(n, l);
            let a = energy_eigenvalue(&p, s).unwrap().energy;
            let b = energy_trig_pt(&p, s).unwrap().energy;
            prop_assert!((a - b).abs() <= 1e-12 * a.abs());
        }
    }
}
