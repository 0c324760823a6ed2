//! One-dimensional parameter sweeps written as row-oriented data.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::format::{render, sig10, Cell, Frame, OutputFormat};
use crate::error::{Error, Result};
use crate::potential::{PotentialParams, QuantumState};
use crate::spectrum::{derive_coefficients, energy_eigenvalue};
use crate::superstat::superstat_thermo;
use crate::thermo::{thermo_functions, Convention, LevelRange, ZSource};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepVariable {
    Beta,
    Alpha,
    Q,
    V1,
    V2,
    V3,
    V4,
    Mu,
    N,
    L,
}

impl SweepVariable {
    fn name(self) -> &'static str {
        match self {
            Self::Beta => "beta",
            Self::Alpha => "alpha",
            Self::Q => "q",
            Self::V1 => "v1",
            Self::V2 => "v2",
            Self::V3 => "v3",
            Self::V4 => "v4",
            Self::Mu => "mu",
            Self::N => "n",
            Self::L => "l",
        }
    }

    fn is_integer(self) -> bool {
        matches!(self, Self::N | Self::L)
    }

    fn is_param(self) -> bool {
        matches!(self, Self::Alpha | Self::V1 | Self::V2 | Self::V3 | Self::V4 | Self::Mu)
    }

    /// Whether zero is admissible (`false` means strictly positive).
    fn allows_zero(self) -> bool {
        !matches!(self, Self::Beta | Self::Alpha | Self::Mu)
    }
}

impl fmt::Display for SweepVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepVariable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::invalid("variable", format!("unknown sweep variable '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    #[default]
    Linear,
    Log,
}

/// Quantities a sweep can emit. The `s`-suffixed thermodynamic names are the
/// superstatistics counterparts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Energy,
    Z,
    F,
    S,
    U,
    Cv,
    Zs,
    Fs,
    Ss,
    Us,
    Cvs,
}

impl Quantity {
    fn name(self) -> &'static str {
        match self {
            Self::Energy => "energy",
            Self::Z => "z",
            Self::F => "f",
            Self::S => "s",
            Self::U => "u",
            Self::Cv => "cv",
            Self::Zs => "zs",
            Self::Fs => "fs",
            Self::Ss => "ss",
            Self::Us => "us",
            Self::Cvs => "cvs",
        }
    }
}

fn default_beta() -> f64 {
    1.0
}

fn default_points() -> usize {
    11
}

fn default_quantities() -> Vec<Quantity> {
    vec![Quantity::Energy]
}

/// A sweep of one variable with everything else held fixed.
///
/// In a config file this is the `[sweep]` table; `params` names a parameter
/// section of the same file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    pub start: f64,
    pub stop: f64,
    #[serde(default = "default_points")]
    pub points: usize,
    #[serde(default)]
    pub scale: Scale,
    #[serde(default)]
    pub params: Option<String>,
    #[serde(default = "default_quantities")]
    pub quantities: Vec<Quantity>,
    #[serde(default = "default_beta")]
    pub beta: f64,
    #[serde(default)]
    pub q: f64,
    #[serde(default)]
    pub n: u32,
    #[serde(default)]
    pub l: u32,
    /// Upper level of `Z`; defaults to `⌊σ₂/4⌋` at each grid point.
    #[serde(default)]
    pub n_max: Option<u32>,
    #[serde(default)]
    pub convention: Convention,
    #[serde(default)]
    pub z_source: ZSource,
}

impl SweepSpec {
    pub fn new(variable: SweepVariable, start: f64, stop: f64, points: usize) -> Self {
        Self {
            variable,
            start,
            stop,
            points,
            scale: Scale::Linear,
            params: None,
            quantities: default_quantities(),
            beta: default_beta(),
            q: 0.0,
            n: 0,
            l: 0,
            n_max: None,
            convention: Convention::Standard,
            z_source: ZSource::Closed,
        }
    }

    /// Reads the `[sweep]` table of a TOML config.
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let mut table: toml::Table = text.parse().map_err(|e| Error::Config(format!("{e}")))?;
        let sweep = table
            .remove("sweep")
            .ok_or_else(|| Error::Config("no [sweep] table".into()))?;
        let spec: Self = sweep.try_into().map_err(|e| Error::Config(format!("[sweep]: {e}")))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.variable;
        if self.points == 0 {
            return Err(Error::invalid("points", "must be at least 1"));
        }
        if self.quantities.is_empty() {
            return Err(Error::invalid("quantities", "at least one quantity is required"));
        }
        for x in [self.start, self.stop] {
            let ok = x.is_finite() && (x > 0.0 || (x == 0.0 && v.allows_zero()));
            if !ok {
                return Err(Error::invalid("start/stop", format!("{x} is outside the domain of {v}")));
            }
            if v.is_integer() && x.fract() != 0.0 {
                return Err(Error::invalid("start/stop", format!("{v} needs integer bounds, got {x}")));
            }
        }
        if self.scale == Scale::Log && (self.start <= 0.0 || self.stop <= 0.0) {
            return Err(Error::invalid("scale", "a log scale needs positive bounds"));
        }
        if !(self.beta.is_finite() && self.beta > 0.0) {
            return Err(Error::invalid("beta", format!("must be > 0, got {}", self.beta)));
        }
        if !(self.q.is_finite() && self.q >= 0.0) {
            return Err(Error::invalid("q", format!("must be >= 0, got {}", self.q)));
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.start];
        }
        let last = (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                let t = i as f64 / last;
                let x = match self.scale {
                    Scale::Linear => self.start + (self.stop - self.start) * t,
                    Scale::Log => (self.start.ln() + (self.stop.ln() - self.start.ln()) * t).exp(),
                };
                if self.variable.is_integer() {
                    x.round()
                } else {
                    x
                }
            })
            .collect()
    }

    fn point(&self, base: &PotentialParams, x: f64) -> Result<Vec<f64>> {
        let mut params = *base;
        let (mut beta, mut q, mut n, mut l) = (self.beta, self.q, self.n, self.l);
        match self.variable {
            SweepVariable::Beta => beta = x,
            SweepVariable::Q => q = x,
            SweepVariable::N => n = x as u32,
            SweepVariable::L => l = x as u32,
            v if v.is_param() => params = params.with(v.name(), x)?,
            _ => unreachable!("every variable is covered"),
        }
        let range = match self.n_max {
            Some(n_max) => LevelRange::UpTo(n_max),
            None => LevelRange::natural(&derive_coefficients(&params, l)?),
        };
        let needs_normal = self.quantities.iter().any(|q| matches!(q, Quantity::Z | Quantity::F | Quantity::S | Quantity::U | Quantity::Cv));
        let needs_super = self.quantities.iter().any(|q| matches!(q, Quantity::Zs | Quantity::Fs | Quantity::Ss | Quantity::Us | Quantity::Cvs));
        let normal = if needs_normal {
            Some(thermo_functions(&params, l, beta, range, self.convention, self.z_source)?)
        } else {
            None
        };
        let deformed = if needs_super {
            Some(superstat_thermo(&params, l, beta, q, self.convention)?)
        } else {
            None
        };
        self.quantities
            .iter()
            .map(|quantity| {
                Ok(match quantity {
                    Quantity::Energy => energy_eigenvalue(&params, QuantumState::new(n, l))?.energy,
                    Quantity::Z => normal.expect("computed").z,
                    Quantity::F => normal.expect("computed").f,
                    Quantity::S => normal.expect("computed").s,
                    Quantity::U => normal.expect("computed").u,
                    Quantity::Cv => normal.expect("computed").cv,
                    Quantity::Zs => deformed.expect("computed").z,
                    Quantity::Fs => deformed.expect("computed").f,
                    Quantity::Ss => deformed.expect("computed").s,
                    Quantity::Us => deformed.expect("computed").u,
                    Quantity::Cvs => deformed.expect("computed").cv,
                })
            })
            .collect()
    }

    /// One row per grid point. A grid point outside the model's domain
    /// yields a row whose `status` column carries the error.
    pub fn frame(&self, params: &PotentialParams) -> Result<Frame> {
        self.validate()?;
        params.validate()?;
        let mut columns = vec![self.variable.name()];
        columns.extend(self.quantities.iter().map(|q| q.name()));
        columns.push("status");
        let mut frame = Frame::new(format!("sweep over {}", self.variable), &columns);
        frame.comment(format!(
            "fixed: V1={} V2={} V3={} V4={} alpha={} mu={} hbar={}",
            params.v1, params.v2, params.v3, params.v4, params.alpha, params.mu, params.hbar
        ));
        frame.comment(format!(
            "fixed: beta={} q={} n={} l={} n_max={} convention={} z_source={}",
            sig10(self.beta),
            sig10(self.q),
            self.n,
            self.l,
            self.n_max.map_or("natural".to_string(), |n| n.to_string()),
            self.convention,
            self.z_source
        ));
        for x in self.grid() {
            let mut row: Vec<Cell> = vec![x.into()];
            match self.point(params, x) {
                Ok(values) => {
                    row.extend(values.into_iter().map(Cell::from));
                    row.push("ok".into());
                }
                Err(e) => {
                    row.extend(self.quantities.iter().map(|_| Cell::Text(String::new())));
                    row.push(format!("error: {e}").into());
                }
            }
            frame.push(row);
        }
        Ok(frame)
    }
}

/// Writes the sweep described by `spec` over `params` to `destination`.
pub fn emit_sweep(spec: &SweepSpec, params: &PotentialParams, destination: &mut dyn Write, format: OutputFormat) -> Result<()> {
    let frame = spec.frame(params)?;
    destination.write_all(render(&[frame], format)?.as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table2() -> PotentialParams {
        PotentialParams::trig_pt(5.0, 3.0, 0.2, 10.0).unwrap()
    }

    fn column(frame: &Frame, name: &str) -> Vec<f64> {
        let idx = frame.columns.iter().position(|c| c == name).unwrap();
        frame
            .rows
            .iter()
            .map(|r| match &r[idx] {
                Cell::Real(x) => *x,
                other => panic!("not a number: {other:?}"),
            })
            .collect()
    }

    #[test]
    fn beta_sweep_z_decreases() {
        let mut spec = SweepSpec::new(SweepVariable::Beta, 0.01, 10.0, 20);
        spec.scale = Scale::Log;
        spec.quantities = vec![Quantity::Z, Quantity::U, Quantity::S, Quantity::F, Quantity::Cv];
        let frame = spec.frame(&table2()).unwrap();
        let z = column(&frame, "z");
        assert!(z.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn q_sweep_orders_partition_functions() {
        let mut spec = SweepSpec::new(SweepVariable::Q, 0.0, 0.5, 3);
        spec.quantities = vec![Quantity::Zs];
        spec.beta = 0.4;
        let zs = column(&spec.frame(&table2()).unwrap(), "zs");
        assert!(zs[0] <= zs[1] && zs[1] <= zs[2]);
    }

    #[test]
    fn alpha_sweep_raises_ground_state() {
        let spec = SweepSpec::new(SweepVariable::Alpha, 0.002, 1.2, 25);
        let e = column(&spec.frame(&table2()).unwrap(), "energy");
        assert!(e.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn out_of_domain_bounds_are_rejected() {
        assert!(SweepSpec::new(SweepVariable::Beta, 0.0, 1.0, 3).validate().is_err());
        assert!(SweepSpec::new(SweepVariable::N, 0.0, 2.5, 3).validate().is_err());
        assert!(SweepSpec::new(SweepVariable::V1, 0.0, 1.0, 0).validate().is_err());
        let mut log = SweepSpec::new(SweepVariable::Q, 0.0, 1.0, 3);
        log.scale = Scale::Log;
        assert!(log.validate().is_err());
        assert!(SweepSpec::new(SweepVariable::V1, 0.0, 10.0, 3).validate().is_ok());
    }

    #[test]
    fn integer_grid_and_toml() {
        let text = r#"
            [table2]
            v1 = 5
            v2 = 3
            alpha = 0.2
            mu = 10

            [sweep]
            variable = "n"
            start = 0
            stop = 6
            points = 7
            params = "table2"
            quantities = ["energy"]
        "#;
        let spec = SweepSpec::from_toml_str(text).unwrap();
        assert_eq!(spec.grid(), vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert_eq!(spec.params.as_deref(), Some("table2"));
        let e = column(&spec.frame(&table2()).unwrap(), "energy");
        assert!((e[0] - 16.104_941_72).abs() < 1e-6);
        assert!(SweepSpec::from_toml_str("[sweep]\nvariable = \"x\"\nstart = 0\nstop = 1").is_err());
        assert!(SweepSpec::from_toml_str("[other]\nv1 = 1").is_err());
    }

    #[test]
    fn emits_bytes() {
        let spec = SweepSpec::new(SweepVariable::Alpha, 0.2, 0.4, 2);
        let mut out = Vec::new();
        emit_sweep(&spec, &table2(), &mut out, OutputFormat::Csv).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.starts_with("# sweep over alpha\n# fixed: V1=5"));
        assert!(text.contains("alpha,energy,status\n0.2000000000,16.10494173,ok\n"));
    }
}
