//! Energy moments `m_k = Σ or ∫ E^k e^{-βE} dn`, `k = 0..=4`, over the level
//! ladder `E(n) = σ₁ + χ(4n + σ₂)²`, held as `m[k]·e^{log_scale}` with
//! `m[k]` the moment of `(E - shift)^k`.

use std::sync::OnceLock;

use crate::specfun::scaled_erf_diff;
use crate::spectrum::SpectrumCoefficients;

pub(crate) const ORDERS: usize = 5;

const BINOMIAL: [[f64; ORDERS]; ORDERS] = [
    [1.0, 0.0, 0.0, 0.0, 0.0],
    [1.0, 1.0, 0.0, 0.0, 0.0],
    [1.0, 2.0, 1.0, 0.0, 0.0],
    [1.0, 3.0, 3.0, 1.0, 0.0],
    [1.0, 4.0, 6.0, 4.0, 1.0],
];

/// Below this value of `p(b² - a²)` the Gaussian moments of a finite range are
/// taken from a fixed Gauss-Legendre rule, which is exact to rounding there.
const SHORT_RANGE: f64 = 4.0;
const LEGENDRE_POINTS: usize = 48;
const MAX_TERMS: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Moments {
    pub log_scale: f64,
    pub shift: f64,
    pub m: [f64; ORDERS],
}

impl Moments {
    pub fn ln_m0(&self) -> f64 {
        self.m[0].ln() + self.log_scale
    }

    pub fn mean_energy(&self) -> f64 {
        self.shift + self.m[1] / self.m[0]
    }

    pub fn variance(&self) -> f64 {
        let d = self.m[1] / self.m[0];
        self.m[2] / self.m[0] - d * d
    }
}

fn legendre() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = LEGENDRE_POINTS;
        (0..n)
            .map(|i| {
                let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
                let mut dp = 0.0;
                for _ in 0..100 {
                    let (mut p0, mut p1) = (1.0, x);
                    for k in 2..=n {
                        let k = k as f64;
                        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                        p0 = p1;
                        p1 = p2;
                    }
                    dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                    let dx = p1 / dp;
                    x -= dx;
                    if dx.abs() < 1e-16 {
                        break;
                    }
                }
                (x, 2.0 / ((1.0 - x * x) * dp * dp))
            })
            .collect()
    })
}

/// `H_j = ∫_a^b u^{2j} e^{-p(u² - a²)} du` for `j = 0..=4`.
fn gaussian_moments(p: f64, a: f64, b: f64) -> [f64; ORDERS] {
    let mut h = [0.0; ORDERS];
    if b.is_finite() && p * (b - a) * (b + a) < SHORT_RANGE {
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        for &(x, w) in legendre() {
            let u = mid + half * x;
            let weight = w * half * (-p * (u - a) * (u + a)).exp();
            let u2 = u * u;
            let mut power = 1.0;
            for hj in &mut h {
                *hj += weight * power;
                power *= u2;
            }
        }
        return h;
    }
    let sp = p.sqrt();
    h[0] = std::f64::consts::PI.sqrt() / (2.0 * sp) * scaled_erf_diff(sp * a, sp * b);
    let tail = if b.is_finite() { (-p * (b - a) * (b + a)).exp() } else { 0.0 };
    for j in 1..ORDERS {
        let k = (2 * j - 1) as i32;
        let boundary = a.powi(k) - if tail == 0.0 { 0.0 } else { b.powi(k) * tail };
        h[j] = (boundary + (2 * j - 1) as f64 * h[j - 1]) / (2.0 * p);
    }
    h
}

/// Classical moments `∫_0^{upper} E^k e^{-βE} dn` (`upper = None` for `∞`).
pub(crate) fn integral(coeffs: &SpectrumCoefficients, beta: f64, upper: Option<f64>) -> Moments {
    let (s1, s2, chi) = (coeffs.sigma1, coeffs.sigma2, coeffs.chi);
    let b = upper.map_or(f64::INFINITY, |n| 4.0 * n + s2);
    let h = gaussian_moments(beta * chi, s2, b);
    let mut m = [0.0; ORDERS];
    for (k, mk) in m.iter_mut().enumerate() {
        *mk = 0.25
            * (0..=k)
                .map(|j| BINOMIAL[k][j] * s1.powi((k - j) as i32) * chi.powi(j as i32) * h[j])
                .sum::<f64>();
    }
    Moments {
        log_scale: -beta * (s1 + chi * s2 * s2),
        shift: 0.0,
        m,
    }
}

/// Discrete moments `Σ_{n=0}^{upper} (E_n - E_0)^k e^{-βE_n}` (`upper = None`
/// runs until the Boltzmann factor underflows).
pub(crate) fn sum(coeffs: &SpectrumCoefficients, beta: f64, upper: Option<u32>) -> Moments {
    let e0 = coeffs.energy(0);
    let last = upper.map_or(MAX_TERMS, u64::from);
    let mut m = [0.0; ORDERS];
    let mut n = 0u64;
    while n <= last {
        let x = n as f64;
        let gap = coeffs.chi * 4.0 * x * (4.0 * x + 2.0 * coeffs.sigma2);
        let weight = (-beta * gap).exp();
        if weight == 0.0 {
            break;
        }
        let mut power = weight;
        for mk in &mut m {
            *mk += power;
            power *= gap;
        }
        n += 1;
    }
    Moments {
        log_scale: -beta * e0,
        shift: e0,
        m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::PotentialParams;
    use crate::spectrum::derive_coefficients;

    fn coeffs() -> SpectrumCoefficients {
        let p = PotentialParams::new(5.0, 3.0, 0.4, 0.2, 0.4, 10.0, 1.0).unwrap();
        derive_coefficients(&p, 1).unwrap()
    }

    fn brute_integral(c: &SpectrumCoefficients, beta: f64, upper: f64, k: i32) -> f64 {
        // composite Simpson on a fine grid, scaled like the moments
        let steps = 200_000;
        let h = upper / steps as f64;
        let e0 = c.energy(0);
        (0..=steps)
            .map(|i| {
                let w = if i == 0 || i == steps { 1.0 } else if i % 2 == 1 { 4.0 } else { 2.0 };
                let e = c.energy_at(i as f64 * h);
                w * e.powi(k) * (-beta * (e - e0)).exp()
            })
            .sum::<f64>()
            * h
            / 3.0
    }

    #[test]
    fn legendre_rule_integrates_polynomials() {
        let s: f64 = legendre().iter().map(|&(_, w)| w).sum();
        assert!((s - 2.0).abs() < 1e-14);
        let x10: f64 = legendre().iter().map(|&(x, w)| w * x.powi(10)).sum();
        assert!((x10 - 2.0 / 11.0).abs() < 1e-14);
    }

    #[test]
    fn finite_moments_match_simpson() {
        let c = coeffs();
        for beta in [1e-4, 0.05, 1.0, 10.0] {
            let m = integral(&c, beta, Some(30.0));
            for k in 0..ORDERS {
                let reference = brute_integral(&c, beta, 30.0, k as i32);
                let rel = (m.m[k] - reference).abs() / reference;
                assert!(rel < 1e-10, "beta={beta} k={k}: {} vs {reference}", m.m[k]);
            }
        }
    }

    #[test]
    fn branches_agree_at_the_switch() {
        let (a, b) = (12.0f64, 20.0f64);
        let p_switch = SHORT_RANGE / (b * b - a * a);
        let below = gaussian_moments(p_switch * (1.0 - 1e-14), a, b);
        let above = gaussian_moments(p_switch * (1.0 + 1e-14), a, b);
        for j in 0..ORDERS {
            assert!((below[j] - above[j]).abs() <= 1e-12 * above[j], "j={j}: {} vs {}", below[j], above[j]);
        }
    }

    #[test]
    fn unbounded_sum_converges_to_long_finite_sum() {
        let c = coeffs();
        let open = sum(&c, 0.3, None);
        let closed = sum(&c, 0.3, Some(2000));
        for k in 0..ORDERS {
            assert!((open.m[k] - closed.m[k]).abs() <= 1e-14 * closed.m[k]);
        }
    }

    #[test]
    fn single_term_sum() {
        let c = coeffs();
        let m = sum(&c, 2.0, Some(0));
        assert_eq!(m.m[0], 1.0);
        assert_eq!(m.mean_energy(), c.energy(0));
        assert_eq!(m.variance(), 0.0);
        assert!((m.ln_m0() + 2.0 * c.energy(0)).abs() < 1e-12);
    }
}
