//! The oracle suite: every closed form set against its independent check.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use super::format::{Cell, Frame};
use super::tables::{numerov_check, numerov_crosscheck, reproduce_table, RowStatus, TableSpec};
use crate::error::Result;
use crate::oracle::numerov::CentrifugalMode;
use crate::oracle::OracleReport;
use crate::potential::{PotentialParams, QuantumState};
use crate::spectrum::{derive_coefficients, energy_eigenvalue, RadialWavefunction};
use crate::superstat::{paper_eq37, superstat_partition_closed, superstat_partition_quadrature, superstat_thermo};
use crate::thermo::{
    partition_closed, partition_quadrature, partition_sum, thermo_functions, thermo_functions_numeric, Convention,
    LevelRange, ZSource,
};

/// `α` values of the s-wave tables (Table 2 then Table 3).
pub const TABLE_ALPHAS: [f64; 6] = [0.2, 0.02, 0.002, 1.2, 0.8, 0.4];
pub const TABLE2_ALPHAS: [f64; 3] = [0.2, 0.02, 0.002];
pub const DEFORMATIONS: [f64; 4] = [0.0, 0.1, 0.5, 1.0];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationSection {
    pub id: String,
    pub title: String,
    pub reports: Vec<OracleReport>,
    /// Reported for information; excluded from the overall verdict.
    pub known_discrepancy: bool,
}

impl ValidationSection {
    fn new(id: &str, title: impl Into<String>, reports: Vec<OracleReport>) -> Self {
        Self {
            id: id.to_string(),
            title: title.into(),
            reports,
            known_discrepancy: false,
        }
    }

    fn informational(self) -> Self {
        Self {
            known_discrepancy: true,
            ..self
        }
    }

    pub fn all_pass(&self) -> bool {
        !self.reports.is_empty() && self.reports.iter().all(|r| r.pass)
    }

    /// Counts toward the verdict and passes, or is informational.
    pub fn ok(&self) -> bool {
        self.known_discrepancy || self.all_pass()
    }

    pub fn failures(&self) -> impl Iterator<Item = &OracleReport> {
        self.reports.iter().filter(|r| !r.pass)
    }
}

/// `points` log-spaced inverse temperatures in `[10⁻⁴, 10]`.
pub fn beta_grid(points: usize) -> Vec<f64> {
    (0..points)
        .map(|i| 10f64.powf(-4.0 + 5.0 * i as f64 / (points.max(2) - 1) as f64))
        .collect()
}

/// `V1 = 5, V2 = 3, μ = 10` at the given `α`.
pub fn table_params(alpha: f64) -> PotentialParams {
    PotentialParams::trig_pt(5.0, 3.0, alpha, 10.0).expect("fixed parameters are valid")
}

fn or_failed(quantity: String, tolerance: f64, r: Result<OracleReport>) -> OracleReport {
    r.unwrap_or_else(|e| OracleReport::failed(format!("{quantity}: {e}"), tolerance))
}

/// Rows of a reference table; Table 1 is informational.
pub fn table_section(id: u8) -> Result<ValidationSection> {
    let spec = TableSpec::published(id)?;
    let rows = reproduce_table(&spec)?;
    let reports = rows.into_iter().map(|r| r.report).collect();
    let section = ValidationSection::new(&format!("table-{id}"), format!("table {id} energies, absolute 1e-6"), reports);
    Ok(if spec.report_only() { section.informational() } else { section })
}

/// Numerov cross-check of the computed Table 1 energies.
pub fn table1_numerov_section() -> Result<ValidationSection> {
    let spec = TableSpec::published(1)?;
    Ok(ValidationSection::new(
        "table-1-numerov",
        "table 1 computed energies vs Numerov, relative 1e-6",
        numerov_crosscheck(&spec)?,
    ))
}

/// Whether Table 1 produced a complete, non-failing report.
pub fn table1_reported() -> Result<bool> {
    let spec = TableSpec::published(1)?;
    let rows = reproduce_table(&spec)?;
    Ok(rows.len() == spec.rows.len() && rows.iter().all(|r| r.status != RowStatus::Fail))
}

/// Numerov eigenvalues of the approximated equation on the Table 2 grid.
pub fn numerov_section() -> ValidationSection {
    let mut reports = Vec::new();
    for alpha in TABLE2_ALPHAS {
        for n in 0..7 {
            let state = QuantumState::new(n, 0);
            let q = format!("numerov {} alpha={alpha}", state.label());
            reports.push(or_failed(q, 1e-6, numerov_check(&table_params(alpha), state, CentrifugalMode::Approximated)));
        }
    }
    ValidationSection::new("numerov", "Numerov vs closed form, Table 2 grid, relative 1e-6", reports)
}

/// Exact `1/r²` centrifugal term against its approximation at `α = 0.002`.
pub fn centrifugal_section() -> ValidationSection {
    let params = table_params(0.002);
    let reports = (0..3)
        .map(|l| {
            let state = QuantumState::new(0, l);
            let quantity = format!("exact vs approximated centrifugal {} alpha=0.002", state.label());
            let result = (|| {
                let approx = crate::oracle::numerov::NumerovProblem::auto(params, l, CentrifugalMode::Approximated, 0)?;
                let exact = crate::oracle::numerov::NumerovProblem::auto(params, l, CentrifugalMode::Exact, 0)?;
                let e_approx = crate::oracle::numerov::numerov_eigenvalue(&approx, 0)?.energy;
                let e_exact = crate::oracle::numerov::numerov_eigenvalue(&exact, 0)?.energy;
                Ok(OracleReport::relative(quantity.clone(), e_approx, e_exact, 1e-5))
            })();
            or_failed(quantity.clone(), 1e-5, result)
        })
        .collect();
    ValidationSection::new("centrifugal", "exact vs approximated centrifugal term, relative 1e-5", reports)
}

/// Closed-form classical `Z` against adaptive quadrature.
pub fn partition_section(points: usize) -> ValidationSection {
    let mut reports = Vec::new();
    for alpha in TABLE_ALPHAS {
        let params = table_params(alpha);
        let n_max = derive_coefficients(&params, 0).expect("valid").n_max;
        for beta in beta_grid(points) {
            let quantity = format!("Z closed vs quadrature alpha={alpha} beta={beta:e}");
            let result = (|| {
                let closed = partition_closed(&params, 0, beta, n_max)?;
                let quad = partition_quadrature(&params, 0, beta, LevelRange::UpTo(n_max), 1e-13)?;
                Ok(OracleReport::relative(quantity.clone(), closed, quad, 1e-10))
            })();
            reports.push(or_failed(quantity.clone(), 1e-10, result));
        }
    }
    ValidationSection::new("partition", "closed-form Z vs quadrature, relative 1e-10", reports)
}

/// Analytic `U, S, C_v` against Richardson differences, plus `F = U - TS`.
pub fn thermo_section(points: usize) -> ValidationSection {
    let mut reports = Vec::new();
    for alpha in TABLE_ALPHAS {
        let params = table_params(alpha);
        let range = LevelRange::natural(&derive_coefficients(&params, 0).expect("valid"));
        for beta in beta_grid(points) {
            let tag = format!("alpha={alpha} beta={beta:e}");
            let analytic = thermo_functions(&params, 0, beta, range, Convention::Standard, ZSource::Closed);
            let numeric = thermo_functions_numeric(&params, 0, beta, range, Convention::Standard, ZSource::Closed);
            match (analytic, numeric) {
                (Ok(a), Ok(n)) => {
                    reports.push(OracleReport::relative(format!("U {tag}"), a.u, n.u, 1e-6));
                    reports.push(OracleReport::relative(format!("S {tag}"), a.s, n.s, 1e-6));
                    reports.push(OracleReport::relative(format!("Cv {tag}"), a.cv, n.cv, 1e-6));
                    reports.push(OracleReport::relative(format!("F = U - TS {tag}"), a.f, a.u - a.s / beta, 1e-8));
                }
                (a, n) => {
                    let why = a.err().or(n.err()).map(|e| e.to_string()).unwrap_or_default();
                    reports.push(OracleReport::failed(format!("thermo {tag}: {why}"), 1e-6));
                }
            }
        }
    }
    ValidationSection::new("thermo", "analytic derivatives vs Richardson, relative 1e-6", reports)
}

/// Superstatistics at `q = 0` against the ordinary classical integral.
pub fn reduction_section(points: usize) -> ValidationSection {
    let mut reports = Vec::new();
    for alpha in TABLE_ALPHAS {
        let params = table_params(alpha);
        for beta in beta_grid(points) {
            for convention in [Convention::Standard, Convention::PaperLiteral] {
                let tag = format!("alpha={alpha} beta={beta:e} {convention}");
                let s = superstat_thermo(&params, 0, beta, 0.0, convention);
                let n = thermo_functions(&params, 0, beta, LevelRange::Unbounded, convention, ZSource::Closed);
                match (s, n) {
                    (Ok(s), Ok(n)) => {
                        for (name, x, y) in [("Z", s.z, n.z), ("F", s.f, n.f), ("S", s.s, n.s), ("U", s.u, n.u), ("Cv", s.cv, n.cv)] {
                            reports.push(OracleReport::relative(format!("{name} q=0 {tag}"), x, y, 1e-10));
                        }
                    }
                    _ => reports.push(OracleReport::failed(format!("q=0 reduction {tag}"), 1e-10)),
                }
            }
        }
    }
    ValidationSection::new("superstat-reduction", "superstatistics at q = 0 vs normal statistics, relative 1e-10", reports)
}

/// Re-derived superstatistics closed form against quadrature.
pub fn superstat_section(points: usize) -> ValidationSection {
    let mut reports = Vec::new();
    for alpha in TABLE_ALPHAS {
        let params = table_params(alpha);
        for q in DEFORMATIONS {
            for beta in beta_grid(points) {
                let quantity = format!("Z_s closed vs quadrature alpha={alpha} q={q} beta={beta:e}");
                let result = (|| {
                    let closed = superstat_partition_closed(&params, 0, beta, q)?;
                    let quad = superstat_partition_quadrature(&params, 0, beta, q)?;
                    Ok(OracleReport::relative(quantity.clone(), closed, quad, 1e-8))
                })();
                reports.push(or_failed(quantity.clone(), 1e-8, result));
            }
        }
    }
    ValidationSection::new("superstat", "superstatistics closed form vs quadrature, relative 1e-8", reports)
}

/// The alternative closed form against the same quadrature. Informational.
pub fn printed_superstat_section(points: usize) -> ValidationSection {
    let mut reports = Vec::new();
    for alpha in TABLE_ALPHAS {
        let params = table_params(alpha);
        for q in DEFORMATIONS {
            for beta in beta_grid(points) {
                let quantity = format!("printed Z_s vs quadrature alpha={alpha} q={q} beta={beta:e}");
                let result = (|| {
                    let printed = paper_eq37(&params, 0, beta, q)?;
                    let quad = superstat_partition_quadrature(&params, 0, beta, q)?;
                    Ok(OracleReport::relative(quantity.clone(), printed, quad, 1e-8))
                })();
                reports.push(or_failed(quantity.clone(), 1e-8, result));
            }
        }
    }
    ValidationSection::new("superstat-printed", "printed superstatistics formula vs quadrature (diagnostic)", reports).informational()
}

fn simpson_norm(wf: &RadialWavefunction, intervals: usize) -> Result<f64> {
    let width = wf.params.well_width();
    let h = width / intervals as f64;
    let mut total = 0.0;
    for i in 1..intervals {
        let v = wf.eval(h * i as f64)?;
        total += if i % 2 == 1 { 4.0 } else { 2.0 } * v * v;
    }
    Ok(total * h / 3.0)
}

/// Boundary decay, node count, normalization and quantization residual for
/// `n ≤ 5, ℓ ≤ 3` on the Table 2 parameters.
pub fn wavefunction_section() -> ValidationSection {
    let mut reports = Vec::new();
    for alpha in TABLE2_ALPHAS {
        let params = table_params(alpha);
        for l in 0..4 {
            for n in 0..6 {
                let state = QuantumState::new(n, l);
                let tag = format!("{} alpha={alpha}", state.label());
                let result = (|| -> Result<Vec<OracleReport>> {
                    let wf = RadialWavefunction::new(&params, state)?.normalize()?;
                    let edge = 1e-6 / alpha;
                    let left = wf.eval(edge)?.abs();
                    let right = wf.eval((FRAC_PI_2 - 1e-6) / alpha)?.abs();
                    let nodes = wf.node_count(10_000)?;
                    let norm = simpson_norm(&wf, 200_000)?;
                    let energy = energy_eigenvalue(&params, state)?.energy;
                    let residual = wf.coeffs.quantization_residual(energy, n)?;
                    Ok(vec![
                        OracleReport::absolute(format!("R at left wall {tag}"), left, 0.0, 1e-10),
                        OracleReport::absolute(format!("R at right wall {tag}"), right, 0.0, 1e-10),
                        OracleReport::absolute(format!("nodes {tag}"), f64::from(nodes), f64::from(n), 0.0),
                        OracleReport::absolute(format!("norm {tag}"), norm, 1.0, 1e-9),
                        OracleReport::absolute(format!("a + n {tag}"), residual, 0.0, 1e-10),
                    ])
                })();
                match result {
                    Ok(r) => reports.extend(r),
                    Err(e) => reports.push(OracleReport::failed(format!("wavefunction {tag}: {e}"), 0.0)),
                }
            }
        }
    }
    ValidationSection::new("wavefunction", "wavefunction properties, n <= 5, l <= 3", reports)
}

/// Radical-inverse (van der Corput) value of `i` in base `b`.
fn radical_inverse(mut i: u64, b: u64) -> f64 {
    let (mut f, mut x) = (1.0, 0.0);
    while i > 0 {
        f /= b as f64;
        x += f * (i % b) as f64;
        i /= b;
    }
    x
}

/// Admissible parameters from a point of the unit hypercube.
pub fn sample_params(u: [f64; 6]) -> PotentialParams {
    PotentialParams::new(
        20.0 * u[0],
        20.0 * u[1],
        5.0 * u[2],
        5.0 * u[3],
        0.01 + 1.49 * u[4],
        1.0 + 19.0 * u[5],
        1.0,
    )
    .expect("sampled parameters are admissible")
}

/// The four monotonicity properties at one parameter point; each report's
/// value is the smallest step seen.
pub fn monotonicity_reports(params: &PotentialParams, beta: f64, tag: &str) -> Vec<OracleReport> {
    let energy = |n, l| energy_eigenvalue(params, QuantumState::new(n, l)).map(|e| e.energy).unwrap_or(f64::NAN);
    let step_n = (0..6).map(|n| energy(n + 1, 1) - energy(n, 1)).fold(f64::INFINITY, f64::min);
    let step_l = (0..4).map(|l| energy(2, l + 1) - energy(2, l)).fold(f64::INFINITY, f64::min);
    let n_max = derive_coefficients(params, 0).map(|c| c.n_max).unwrap_or(0);
    let z = |b: f64| partition_sum(params, 0, b, n_max).unwrap_or(f64::NAN);
    let step_beta = z(beta) - z(1.5 * beta);
    let zs = |q: f64| superstat_partition_closed(params, 0, beta, q).unwrap_or(f64::NAN);
    let qs = [0.0, 0.1, 0.25, 0.5, 1.0];
    let step_q = qs.windows(2).map(|w| zs(w[1]) - zs(w[0])).fold(f64::INFINITY, f64::min);
    vec![
        OracleReport::check(format!("E increasing in n {tag}"), step_n, step_n > 0.0),
        OracleReport::check(format!("E increasing in l {tag}"), step_l, step_l > 0.0),
        OracleReport::check(format!("Z decreasing in beta {tag}"), step_beta, step_beta > 0.0),
        OracleReport::check(format!("Z_s nondecreasing in q {tag}"), step_q, step_q >= 0.0),
    ]
}

/// Monotonicity over `samples` Halton points of the parameter space.
pub fn monotonicity_section(samples: usize) -> ValidationSection {
    const BASES: [u64; 7] = [2, 3, 5, 7, 11, 13, 17];
    let mut reports = Vec::new();
    for i in 1..=samples as u64 {
        let u: Vec<f64> = BASES.iter().map(|&b| radical_inverse(i, b)).collect();
        let params = sample_params([u[0], u[1], u[2], u[3], u[4], u[5]]);
        let beta = 10f64.powf(-3.0 + 4.0 * u[6]);
        reports.extend(monotonicity_reports(&params, beta, &format!("sample {i}")));
    }
    ValidationSection::new("monotonicity", "monotonicity in n, l, beta and q", reports)
}

/// Every section, in criterion order.
pub fn validate_all() -> Result<Vec<ValidationSection>> {
    let points = 30;
    Ok(vec![
        table_section(2)?,
        table_section(3)?,
        table_section(4)?,
        table_section(5)?,
        table_section(1)?,
        table1_numerov_section()?,
        numerov_section(),
        centrifugal_section(),
        partition_section(points),
        thermo_section(points),
        reduction_section(points),
        superstat_section(points),
        printed_superstat_section(points),
        wavefunction_section(),
        monotonicity_section(128),
    ])
}

/// One row per check.
pub fn validation_frame(sections: &[ValidationSection]) -> Frame {
    let mut frame = Frame::new(
        "oracle validation",
        &["section", "quantity", "closed_form", "oracle", "abs_error", "rel_error", "tolerance", "kind", "status"],
    );
    frame.comment("status known-discrepancy rows are reported and excluded from the verdict");
    for section in sections {
        for r in &section.reports {
            let status = match (r.pass, section.known_discrepancy) {
                (true, _) => "pass",
                (false, true) => "known-discrepancy",
                (false, false) => "fail",
            };
            frame.push(vec![
                section.id.as_str().into(),
                r.quantity.as_str().into(),
                r.closed_form.into(),
                r.oracle.into(),
                r.abs_error.into(),
                r.rel_error.into(),
                r.tolerance.into(),
                Cell::Text(format!("{:?}", r.kind).to_lowercase()),
                status.into(),
            ]);
        }
    }
    frame
}

/// Per-section pass counts.
pub fn summary_frame(sections: &[ValidationSection]) -> Frame {
    let mut frame = Frame::new("validation summary", &["section", "title", "checks", "passed", "verdict"]);
    for s in sections {
        let passed = s.reports.iter().filter(|r| r.pass).count();
        let verdict = if s.known_discrepancy {
            "known-discrepancy"
        } else if s.all_pass() {
            "pass"
        } else {
            "fail"
        };
        frame.push(vec![
            s.id.as_str().into(),
            s.title.as_str().into(),
            s.reports.len().into(),
            passed.into(),
            verdict.into(),
        ]);
    }
    frame
}
