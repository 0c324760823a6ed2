//! Independent numerical machinery used to check the closed forms.

pub mod derivative;
pub mod numerov;
pub mod quadrature;

use serde::{Deserialize, Serialize};

pub use derivative::{derivative, derivative_scan, Derivative, Richardson};
pub use numerov::{numerov_eigenvalue, CentrifugalMode, GridSpec, NumerovEigen, NumerovProblem};
pub use quadrature::{quadrature, Estimate, Interval, Quadrature};

/// Below this magnitude an oracle value is compared in absolute terms.
pub const NEAR_ZERO: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ToleranceKind {
    Relative,
    Absolute,
}

/// One closed-form value set against its oracle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub quantity: String,
    pub closed_form: f64,
    pub oracle: f64,
    pub abs_error: f64,
    pub rel_error: f64,
    pub tolerance: f64,
    pub kind: ToleranceKind,
    pub pass: bool,
}

impl OracleReport {
    /// Passes when the relative error is within `tolerance`, or, for oracle
    /// values below [`NEAR_ZERO`], when the absolute error is.
    pub fn relative(quantity: impl Into<String>, closed_form: f64, oracle: f64, tolerance: f64) -> Self {
        let abs_error = (closed_form - oracle).abs();
        let rel_error = abs_error / oracle.abs();
        let pass = if oracle.abs() < NEAR_ZERO {
            abs_error <= tolerance
        } else {
            rel_error <= tolerance
        };
        Self {
            quantity: quantity.into(),
            closed_form,
            oracle,
            abs_error,
            rel_error,
            tolerance,
            kind: ToleranceKind::Relative,
            pass,
        }
    }

    pub fn absolute(quantity: impl Into<String>, closed_form: f64, oracle: f64, tolerance: f64) -> Self {
        let abs_error = (closed_form - oracle).abs();
        Self {
            quantity: quantity.into(),
            closed_form,
            oracle,
            abs_error,
            rel_error: abs_error / oracle.abs(),
            tolerance,
            kind: ToleranceKind::Absolute,
            pass: abs_error <= tolerance,
        }
    }

    /// A yes/no property; `value` is the quantity the predicate was read from.
    pub fn check(quantity: impl Into<String>, value: f64, pass: bool) -> Self {
        Self {
            quantity: quantity.into(),
            closed_form: value,
            oracle: 0.0,
            abs_error: value.abs(),
            rel_error: f64::NAN,
            tolerance: 0.0,
            kind: ToleranceKind::Absolute,
            pass,
        }
    }

    /// A failed report for a check whose oracle could not be evaluated.
    pub fn failed(quantity: impl Into<String>, tolerance: f64) -> Self {
        Self {
            quantity: quantity.into(),
            closed_form: f64::NAN,
            oracle: f64::NAN,
            abs_error: f64::NAN,
            rel_error: f64::NAN,
            tolerance,
            kind: ToleranceKind::Relative,
            pass: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_rules() {
        assert!(OracleReport::relative("x", 1.0 + 1e-9, 1.0, 1e-8).pass);
        assert!(!OracleReport::relative("x", 1.0 + 1e-7, 1.0, 1e-8).pass);
        // near zero falls back to absolute error
        assert!(OracleReport::relative("x", 1e-15, 0.0, 1e-8).pass);
        assert!(!OracleReport::relative("x", 1e-7, 1e-13, 1e-8).pass);
        assert!(OracleReport::absolute("x", 16.104_941_72, 16.104_941_723, 1e-6).pass);
        assert!(!OracleReport::failed("x", 1.0).pass);
        assert!(!OracleReport::relative("x", f64::NAN, 1.0, 1.0).pass);
    }
}
