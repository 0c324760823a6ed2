//! Potential parameters, the potential itself and the centrifugal approximation.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shifting constant of the centrifugal approximation.
pub const D0: f64 = 1.0 / 12.0;

/// Evaluation is refused this close to the walls `αr = 0` and `αr = π/2`.
pub const WALL_GUARD: f64 = 1e-12;

fn one() -> f64 {
    1.0
}

/// Physical inputs of the generalized potential.
///
/// Depths are in inverse-length units and `hbar` defaults to 1; all values are
/// treated as plain numbers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialParams {
    #[serde(default)]
    pub v1: f64,
    #[serde(default)]
    pub v2: f64,
    #[serde(default)]
    pub v3: f64,
    #[serde(default)]
    pub v4: f64,
    pub alpha: f64,
    pub mu: f64,
    #[serde(default = "one")]
    pub hbar: f64,
}

impl PotentialParams {
    pub fn new(v1: f64, v2: f64, v3: f64, v4: f64, alpha: f64, mu: f64, hbar: f64) -> Result<Self> {
        let params = Self {
            v1,
            v2,
            v3,
            v4,
            alpha,
            mu,
            hbar,
        };
        params.validate()?;
        Ok(params)
    }

    /// The two-term trigonometric Pöschl-Teller potential (`V3 = V4 = 0`, `ħ = 1`).
    pub fn trig_pt(v1: f64, v2: f64, alpha: f64, mu: f64) -> Result<Self> {
        Self::new(v1, v2, 0.0, 0.0, alpha, mu, 1.0)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [("alpha", self.alpha), ("mu", self.mu), ("hbar", self.hbar)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::invalid(name, format!("must be finite and > 0, got {value}")));
            }
        }
        for (name, value) in [("v1", self.v1), ("v2", self.v2), ("v3", self.v3), ("v4", self.v4)] {
            if !(value.is_finite() && value >= 0.0) {
                return Err(Error::invalid(name, format!("must be finite and >= 0, got {value}")));
            }
        }
        Ok(())
    }

    /// Width of the first well, `π/(2α)`.
    pub fn well_width(&self) -> f64 {
        FRAC_PI_2 / self.alpha
    }

    /// `ħ²α²/(2μ)`, the factor converting dimensionless energies to energies.
    pub fn energy_unit(&self) -> f64 {
        self.hbar * self.hbar * self.alpha * self.alpha / (2.0 * self.mu)
    }

    /// `χ = ħ²α²/(8μ)`, the coefficient of `(4n + σ₂)²` in the spectrum.
    pub fn chi(&self) -> f64 {
        self.hbar * self.hbar * self.alpha * self.alpha / (8.0 * self.mu)
    }

    /// `2μ/ħ²`, the factor in front of `E − V` in the radial equation.
    pub fn kinetic_factor(&self) -> f64 {
        2.0 * self.mu / (self.hbar * self.hbar)
    }

    pub fn get(&self, key: &str) -> Option<f64> {
        Some(match key {
            "v1" => self.v1,
            "v2" => self.v2,
            "v3" => self.v3,
            "v4" => self.v4,
            "alpha" => self.alpha,
            "mu" => self.mu,
            "hbar" => self.hbar,
            _ => return None,
        })
    }

    /// Copy with one named parameter replaced, validated.
    pub fn with(&self, key: &str, value: f64) -> Result<Self> {
        let mut out = *self;
        match key {
            "v1" => out.v1 = value,
            "v2" => out.v2 = value,
            "v3" => out.v3 = value,
            "v4" => out.v4 = value,
            "alpha" => out.alpha = value,
            "mu" => out.mu = value,
            "hbar" => out.hbar = value,
            _ => return Err(Error::Config(format!("unknown parameter `{key}`"))),
        }
        out.validate()?;
        Ok(out)
    }
}

impl fmt::Display for PotentialParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "v1={} v2={} v3={} v4={} alpha={} mu={} hbar={}",
            self.v1, self.v2, self.v3, self.v4, self.alpha, self.mu, self.hbar
        )
    }
}

const ORBITAL_LETTERS: &[u8] = b"spdfghiklmnoqrtuvwxyz";

/// Vibrational (`n`) and orbital (`l`) quantum numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QuantumState {
    pub n: u32,
    pub l: u32,
}

impl QuantumState {
    pub fn new(n: u32, l: u32) -> Self {
        Self { n, l }
    }

    /// Spectroscopic label in the tables' convention, where "Nx" means `n = N`.
    pub fn label(&self) -> String {
        match ORBITAL_LETTERS.get(self.l as usize) {
            Some(&c) => format!("{}{}", self.n, c as char),
            None => format!("{}[l={}]", self.n, self.l),
        }
    }

    /// Parses "Nx" labels ("1s", "2p", "4f") with `n = N`.
    pub fn from_label(label: &str) -> Result<Self> {
        let label = label.trim();
        let split = label
            .find(|c: char| !c.is_ascii_digit())
            .ok_or_else(|| Error::Config(format!("state label `{label}` has no orbital letter")))?;
        let (digits, letter) = label.split_at(split);
        let n = digits
            .parse()
            .map_err(|_| Error::Config(format!("state label `{label}` has no principal number")))?;
        let mut chars = letter.chars();
        let l = match (chars.next(), chars.next()) {
            (Some(c), None) => ORBITAL_LETTERS
                .iter()
                .position(|&x| x as char == c.to_ascii_lowercase())
                .ok_or_else(|| Error::Config(format!("unknown orbital letter `{c}`")))?,
            _ => return Err(Error::Config(format!("malformed state label `{label}`"))),
        };
        Ok(Self::new(n, l as u32))
    }
}

impl FromStr for QuantumState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_label(s)
    }
}

fn check_well(scaled: f64) -> Result<()> {
    if scaled.is_finite() && scaled > WALL_GUARD && scaled < FRAC_PI_2 - WALL_GUARD {
        Ok(())
    } else {
        Err(Error::Domain { scaled })
    }
}

/// `V1 cosec²(αr) + V2 sec²(αr) + V3 tan²(αr) + V4 cot²(αr)` inside the first well.
pub fn potential_eval(params: &PotentialParams, r: f64) -> Result<f64> {
    let x = params.alpha * r;
    check_well(x)?;
    let (s, c) = x.sin_cos();
    let (s2, c2) = (s * s, c * c);
    Ok(params.v1 / s2 + params.v2 / c2 + params.v3 * s2 / c2 + params.v4 * c2 / s2)
}

/// `α²(d₀ + 1/sin²(αr))`, the approximation to `1/r²`.
pub fn centrifugal_approx(alpha: f64, r: f64) -> Result<f64> {
    let x = alpha * r;
    check_well(x)?;
    let s = x.sin();
    Ok(alpha * alpha * (D0 + 1.0 / (s * s)))
}

/// Named parameter sets read from a TOML file, one `[section]` per set.
///
/// A `[sweep]` table (and anything nested under it) is not a parameter set and is
/// skipped here.
#[derive(Debug, Clone, Default)]
pub struct ParamSets {
    sets: BTreeMap<String, PotentialParams>,
}

impl ParamSets {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let table: toml::Table = text.parse().map_err(|e| Error::Config(format!("{e}")))?;
        let mut sets = BTreeMap::new();
        for (name, value) in table {
            if name == "sweep" {
                continue;
            }
            let params: PotentialParams = value
                .try_into()
                .map_err(|e| Error::Config(format!("section [{name}]: {e}")))?;
            params
                .validate()
                .map_err(|e| Error::Config(format!("section [{name}]: {e}")))?;
            sets.insert(name, params);
        }
        Ok(Self { sets })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_toml_str(&std::fs::read_to_string(path)?)
    }

    pub fn get(&self, name: &str) -> Option<&PotentialParams> {
        self.sets.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.sets.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_PI_4;

    fn params(v1: f64, v2: f64, v3: f64, v4: f64, alpha: f64) -> PotentialParams {
        PotentialParams::new(v1, v2, v3, v4, alpha, 10.0, 1.0).unwrap()
    }

    #[test]
    fn zero_potential_vanishes() {
        let p = params(0.0, 0.0, 0.0, 0.0, 0.3);
        for r in [0.1, 1.0, 3.0, 5.0] {
            assert_eq!(potential_eval(&p, r).unwrap(), 0.0);
        }
    }

    #[test]
    fn quarter_period_value() {
        let p = params(1.0, 1.0, 0.0, 0.0, 1.0);
        assert_relative_eq!(potential_eval(&p, FRAC_PI_4).unwrap(), 4.0, max_relative = 1e-14);
    }

    #[test]
    fn figure_parameters_match_direct_trig() {
        // tan² and cot² written as sin/cos ratios here, as 1/tan² in the oracle
        let p = params(5.0, 3.0, 2.0, 0.5, 0.3);
        let x: f64 = 0.3;
        let oracle = 5.0 / x.sin().powi(2) + 3.0 / x.cos().powi(2) + 2.0 * x.tan().powi(2)
            + 0.5 / x.tan().powi(2);
        assert_relative_eq!(potential_eval(&p, 1.0).unwrap(), oracle, max_relative = 1e-14);
        assert_relative_eq!(oracle, 65.956_366_459_838_83, max_relative = 1e-13);
    }

    #[test]
    fn reduces_to_two_term_form() {
        let p = params(5.0, 3.0, 0.0, 0.0, 0.7);
        for r in [0.05f64, 0.5, 1.0, 2.0] {
            let x = 0.7 * r;
            let two_term = 5.0 / x.sin().powi(2) + 3.0 / x.cos().powi(2);
            assert_relative_eq!(potential_eval(&p, r).unwrap(), two_term, max_relative = 1e-14);
        }
    }

    #[test]
    fn rejects_points_outside_well() {
        let p = params(5.0, 3.0, 0.0, 0.0, 1.0);
        for r in [0.0, -0.1, FRAC_PI_2, 2.0, FRAC_PI_2 - 1e-13, f64::NAN] {
            assert!(matches!(potential_eval(&p, r), Err(Error::Domain { .. })), "r = {r}");
        }
        assert!(centrifugal_approx(1.0, 0.0).is_err());
    }

    #[test]
    fn diverges_at_both_walls() {
        let p = params(5.0, 3.0, 2.0, 0.5, 1.0);
        let left: Vec<f64> = [1e-1, 1e-2, 1e-3, 1e-4]
            .iter()
            .map(|&r| potential_eval(&p, r).unwrap())
            .collect();
        let right: Vec<f64> = [1e-1, 1e-2, 1e-3, 1e-4]
            .iter()
            .map(|&d| potential_eval(&p, FRAC_PI_2 - d).unwrap())
            .collect();
        assert!(left.windows(2).all(|w| w[1] > w[0]));
        assert!(right.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn centrifugal_small_alpha() {
        let v = centrifugal_approx(0.01, 1.0).unwrap();
        assert!((v - 1.0).abs() < 5e-5);
        let x: f64 = 0.2;
        assert_relative_eq!(
            centrifugal_approx(0.2, 1.0).unwrap(),
            0.04 * (1.0 / 12.0 + 1.0 / x.sin().powi(2)),
            max_relative = 1e-15
        );
    }

    #[test]
    fn centrifugal_error_is_second_order_in_alpha() {
        let err = |a: f64| (centrifugal_approx(a, 1.0).unwrap() - 1.0).abs();
        for a in [0.1, 0.05, 0.025] {
            let ratio = err(a) / err(a / 2.0);
            assert!((ratio - 4.0).abs() < 0.05, "ratio {ratio}");
        }
        // leading coefficient 1/12 + 1/3
        assert_relative_eq!(err(1e-3) / 1e-6, 5.0 / 12.0, max_relative = 1e-3);
    }

    #[test]
    fn validation() {
        assert!(PotentialParams::new(-1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0).is_err());
        assert!(PotentialParams::new(0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0).is_err());
        assert!(PotentialParams::new(0.0, 0.0, 0.0, 0.0, 1.0, -1.0, 1.0).is_err());
        assert!(PotentialParams::new(0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0).is_err());
        assert!(PotentialParams::new(0.0, 0.0, 0.0, f64::INFINITY, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn labels_round_trip() {
        for (label, n, l) in [("1s", 1, 0), ("2p", 2, 1), ("3d", 3, 2), ("4f", 4, 3), ("10g", 10, 4)] {
            let s = QuantumState::from_label(label).unwrap();
            assert_eq!(s, QuantumState::new(n, l));
            assert_eq!(s.label(), label);
        }
        assert!(QuantumState::from_label("p").is_err());
        assert!(QuantumState::from_label("2").is_err());
        assert!(QuantumState::from_label("2j").is_err());
    }

    #[test]
    fn param_sets_from_toml() {
        let text = r#"
            [table2]
            v1 = 5
            v2 = 3
            alpha = 0.2
            mu = 10

            [table1]
            v1 = 5.0
            v2 = 3.0
            v3 = 0.5
            v4 = 0.5
            alpha = 0.002
            mu = 10.0
            hbar = 1.0

            [sweep]
            variable = "beta"
        "#;
        let sets = ParamSets::from_toml_str(text).unwrap();
        assert_eq!(sets.len(), 2);
        let t2 = sets.get("table2").unwrap();
        assert_eq!(t2.v3, 0.0);
        assert_eq!(t2.hbar, 1.0);
        assert_eq!(sets.get("table1").unwrap().v4, 0.5);

        assert!(ParamSets::from_toml_str("[x]\nalpha = 1\nmu = 1\nlambda = 2\n").is_err());
        assert!(ParamSets::from_toml_str("[x]\nalpha = -1\nmu = 1\n").is_err());
    }
}
