//! Shared fixtures for the benchmarks.

use gtpt::PotentialParams;

/// `V1 = 5, V2 = 3, μ = 10` at the given `α`.
pub fn table2(alpha: f64) -> PotentialParams {
    PotentialParams::trig_pt(5.0, 3.0, alpha, 10.0).expect("fixed parameters are valid")
}

/// All four terms switched on.
pub fn generalized(alpha: f64) -> PotentialParams {
    PotentialParams::new(5.0, 3.0, 0.5, 0.5, alpha, 10.0, 1.0).expect("fixed parameters are valid")
}

/// `points` log-spaced inverse temperatures in `[10⁻⁴, 10]`.
pub fn beta_grid(points: usize) -> Vec<f64> {
    gtpt::report::validate::beta_grid(points)
}
