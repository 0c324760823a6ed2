//! Central differences with Richardson extrapolation.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derivative {
    pub value: f64,
    pub error: f64,
}

/// Three-step Richardson scheme on central differences (steps `h`, `h/2`, `h/4`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Richardson {
    pub step: f64,
    /// Accept when `error <= rel_tol·|value| + abs_tol`.
    pub rel_tol: f64,
    pub abs_tol: f64,
}

impl Richardson {
    pub fn new(step: f64) -> Self {
        Self {
            step,
            rel_tol: 1e-4,
            abs_tol: 1e-8,
        }
    }

    pub fn with_tolerance(self, rel_tol: f64, abs_tol: f64) -> Self {
        Self { rel_tol, abs_tol, ..self }
    }

    pub fn derivative<F: FnMut(f64) -> f64>(&self, mut f: F, x: f64, order: u8) -> Result<Derivative> {
        if !(self.step.is_finite() && self.step > 0.0) {
            return Err(Error::invalid("step", format!("must be > 0, got {}", self.step)));
        }
        let centre = if order == 2 { f(x) } else { 0.0 };
        let mut central = |h: f64| match order {
            1 => Ok((f(x + h) - f(x - h)) / (2.0 * h)),
            2 => Ok((f(x + h) - 2.0 * centre + f(x - h)) / (h * h)),
            _ => Err(Error::invalid("order", format!("must be 1 or 2, got {order}"))),
        };
        let h = self.step;
        let d0 = central(h)?;
        let d1 = central(h / 2.0)?;
        let d2 = central(h / 4.0)?;
        let r1a = (4.0 * d1 - d0) / 3.0;
        let r1b = (4.0 * d2 - d1) / 3.0;
        let value = (16.0 * r1b - r1a) / 15.0;
        let error = (value - r1b).abs();
        if !(value.is_finite() && error <= self.rel_tol * value.abs() + self.abs_tol) {
            return Err(Error::DerivativeNonConvergence { x, value, error });
        }
        Ok(Derivative { value, error })
    }
}

/// Runs the scheme at each step in `steps` and keeps the result with the
/// smallest error estimate.
pub fn derivative_scan<F: FnMut(f64) -> f64>(
    mut f: F,
    x: f64,
    order: u8,
    steps: &[f64],
    rel_tol: f64,
    abs_tol: f64,
) -> Result<Derivative> {
    let mut best: Option<Derivative> = None;
    let mut last_error = Error::invalid("steps", "no step sizes given");
    for &step in steps {
        let scheme = Richardson::new(step).with_tolerance(rel_tol, abs_tol);
        match scheme.derivative(&mut f, x, order) {
            Ok(d) if best.is_none_or(|b| d.error < b.error) => best = Some(d),
            Ok(_) => {}
            Err(e) => last_error = e,
        }
    }
    best.ok_or(last_error)
}

/// `d^order f / dx^order` at `x` with a step of `10⁻²·max(|x|, 1)`.
pub fn derivative<F: FnMut(f64) -> f64>(f: F, x: f64, order: u8) -> Result<Derivative> {
    Richardson::new(1e-2 * x.abs().max(1.0)).derivative(f, x, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial() {
        let d = derivative(|x| x * x, 3.0, 1).unwrap();
        assert!((d.value - 6.0).abs() <= 1e-9);
        let d = derivative(|x| x * x * x, 2.0, 2).unwrap();
        assert!((d.value - 12.0).abs() <= 1e-7);
    }

    #[test]
    fn sine_curvature_at_origin() {
        let d = derivative(f64::sin, 0.0, 2).unwrap();
        assert!(d.value.abs() <= 1e-7);
        let d = derivative(f64::sin, 0.7, 1).unwrap();
        assert!((d.value - 0.7f64.cos()).abs() <= 1e-10);
    }

    #[test]
    fn error_estimate_tracks_truth() {
        let d = Richardson::new(0.2).derivative(f64::exp, 1.0, 1).unwrap();
        let truth = (d.value - 1f64.exp()).abs();
        assert!(truth <= 10.0 * d.error.max(1e-15), "{truth} vs {}", d.error);
    }

    #[test]
    fn scan_picks_the_quietest_step() {
        // noise of 1e-13 ruins tiny steps; large steps carry truncation error
        let noisy = |x: f64| x.ln() + 1e-13 * (x * 1e9).sin();
        let d = derivative_scan(noisy, 1.0, 2, &[0.5, 0.1, 0.01, 1e-4], 1e-6, 0.0).unwrap();
        assert!((d.value + 1.0).abs() <= 1e-6, "{}", d.value);
        assert!(derivative_scan(|x| x, 1.0, 1, &[], 1e-6, 0.0).is_err());
    }

    #[test]
    fn failures() {
        assert!(derivative(|x| x, 1.0, 3).is_err());
        assert!(Richardson::new(0.0).derivative(|x| x, 1.0, 1).is_err());
        // a kink defeats the extrapolation
        let r = Richardson::new(0.3).with_tolerance(1e-6, 0.0).derivative(|x: f64| (x - 0.01).abs(), 0.0, 1);
        assert!(matches!(r, Err(Error::DerivativeNonConvergence { .. })));
    }
}
