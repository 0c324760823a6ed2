//! Numerov shooting solver for the radial equation on `(0, π/2α)`.
//!
//! The solution is integrated outward and inward with Dirichlet ends and
//! matched at the potential minimum. Sturm node counting isolates the
//! requested level before the matching defect is bisected.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::{PotentialParams, D0};

/// WKB decay `∫κ dr` kept beyond each classical turning point.
const DECAY_ACTION: f64 = 40.0;
const ACTION_SAMPLES: usize = 400;
const RESCALE: f64 = 1e200;
const REL_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CentrifugalMode {
    /// `ħ²ℓ(ℓ+1)/(2μr²)`.
    Exact,
    /// `ħ²ℓ(ℓ+1)α²(1/12 + 1/sin²αr)/(2μ)`.
    Approximated,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub points: usize,
    /// Fraction of the well width cut away next to a divergent wall.
    pub margin: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            points: 20_001,
            margin: 1e-6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumerovProblem {
    pub params: PotentialParams,
    pub l: u32,
    pub mode: CentrifugalMode,
    pub grid: GridSpec,
    pub energy_bracket: (f64, f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumerovEigen {
    pub energy: f64,
    pub nodes: u32,
    pub grid_points: usize,
    pub domain: (f64, f64),
}

struct Mesh {
    r0: f64,
    h: f64,
    /// `2μU(r_i)/ħ²` with zeros at both ends.
    kin_u: Vec<f64>,
    kinetic: f64,
    matching: usize,
}

impl NumerovProblem {
    pub fn new(params: PotentialParams, l: u32, mode: CentrifugalMode, energy_bracket: (f64, f64)) -> Result<Self> {
        let problem = Self {
            params,
            l,
            mode,
            grid: GridSpec::default(),
            energy_bracket,
        };
        problem.validate()?;
        Ok(problem)
    }

    pub fn with_grid(self, grid: GridSpec) -> Result<Self> {
        let problem = Self { grid, ..self };
        problem.validate()?;
        Ok(problem)
    }

    /// Builds a problem whose bracket holds the level with `node_target`
    /// nodes, doubling the bracket width upward from the potential minimum.
    pub fn auto(params: PotentialParams, l: u32, mode: CentrifugalMode, node_target: u32) -> Result<Self> {
        Self::auto_with_grid(params, l, mode, node_target, GridSpec::default())
    }

    pub fn auto_with_grid(
        params: PotentialParams,
        l: u32,
        mode: CentrifugalMode,
        node_target: u32,
        grid: GridSpec,
    ) -> Result<Self> {
        params.validate()?;
        let mut problem = Self {
            params,
            l,
            mode,
            grid,
            energy_bracket: (0.0, 1.0),
        };
        let (ra, rb) = problem.outer_domain();
        let (_, u_min) = problem.minimum(ra, rb);
        let lo = u_min;
        let mut step = params.energy_unit().max(1e-300);
        for _ in 0..200 {
            let hi = lo + step;
            problem.energy_bracket = (lo, hi);
            if let Ok(mesh) = problem.mesh() {
                if mesh.sturm_count(hi) > node_target {
                    problem.validate()?;
                    return Ok(problem);
                }
            }
            step *= 2.0;
        }
        Err(Error::BracketMiss {
            low: lo,
            high: lo + step,
            nodes: node_target,
        })
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if self.grid.points < 1000 {
            return Err(Error::invalid("grid.points", format!("needs >= 1000, got {}", self.grid.points)));
        }
        if !(self.grid.margin > 0.0 && self.grid.margin < 0.25) {
            return Err(Error::invalid("grid.margin", format!("must lie in (0, 0.25), got {}", self.grid.margin)));
        }
        let (lo, hi) = self.energy_bracket;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::invalid("energy_bracket", format!("needs low < high, got ({lo}, {hi})")));
        }
        Ok(())
    }

    fn gamma(&self) -> f64 {
        let l = f64::from(self.l);
        l * (l + 1.0)
    }

    fn left_singular(&self) -> bool {
        self.params.v1 + self.params.v4 > 0.0 || self.l > 0
    }

    fn right_singular(&self) -> bool {
        self.params.v2 + self.params.v3 > 0.0
    }

    /// `V(r)` plus the centrifugal term selected by `mode`. Only terms with a
    /// nonzero coefficient are evaluated, so a non-divergent wall is finite.
    pub fn effective_potential(&self, r: f64) -> f64 {
        let p = &self.params;
        let (s, c) = (p.alpha * r).sin_cos();
        let (s2, c2) = (s * s, c * c);
        let mut u = 0.0;
        if p.v1 != 0.0 {
            u += p.v1 / s2;
        }
        if p.v2 != 0.0 {
            u += p.v2 / c2;
        }
        if p.v3 != 0.0 {
            u += p.v3 * s2 / c2;
        }
        if p.v4 != 0.0 {
            u += p.v4 * c2 / s2;
        }
        let gamma = self.gamma();
        if gamma != 0.0 {
            let shape = match self.mode {
                CentrifugalMode::Exact => 1.0 / (r * r),
                CentrifugalMode::Approximated => p.alpha * p.alpha * (D0 + 1.0 / s2),
            };
            u += p.hbar * p.hbar * gamma / (2.0 * p.mu) * shape;
        }
        u
    }

    fn outer_domain(&self) -> (f64, f64) {
        let width = self.params.well_width();
        let ra = if self.left_singular() { self.grid.margin * width } else { 0.0 };
        let rb = if self.right_singular() { (1.0 - self.grid.margin) * width } else { width };
        (ra, rb)
    }

    /// Golden-section minimum of the (convex) effective potential.
    fn minimum(&self, ra: f64, rb: f64) -> (f64, f64) {
        let g = 0.5 * (5f64.sqrt() - 1.0);
        let (mut a, mut b) = (ra, rb);
        let mut x1 = b - g * (b - a);
        let mut x2 = a + g * (b - a);
        let (mut f1, mut f2) = (self.effective_potential(x1), self.effective_potential(x2));
        for _ in 0..200 {
            if f1 <= f2 {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - g * (b - a);
                f1 = self.effective_potential(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + g * (b - a);
                f2 = self.effective_potential(x2);
            }
        }
        let r = 0.5 * (a + b);
        (r, self.effective_potential(r))
    }

    /// Root of `U(r) = e` between `inside` (allowed) and `outside` (forbidden).
    fn turning_point(&self, e: f64, mut inside: f64, mut outside: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (inside + outside);
            if mid == inside || mid == outside {
                break;
            }
            if self.effective_potential(mid) > e {
                outside = mid;
            } else {
                inside = mid;
            }
        }
        0.5 * (inside + outside)
    }

    /// `∫κ dr` from the wall-side point at distance `d` to the turning point
    /// at distance `d_tp`, both measured from the `wall`, midpoint rule in
    /// `ln d`.
    fn action(&self, e: f64, kinetic: f64, wall: f64, sign: f64, d: f64, d_tp: f64) -> f64 {
        let (la, lb) = (d.ln(), d_tp.ln());
        let step = (lb - la) / ACTION_SAMPLES as f64;
        (0..ACTION_SAMPLES)
            .map(|i| {
                let dist = (la + (i as f64 + 0.5) * step).exp();
                let r = wall + sign * dist;
                (kinetic * (self.effective_potential(r) - e)).max(0.0).sqrt() * dist
            })
            .sum::<f64>()
            * step
    }

    /// Distance from the wall at which the decay action to the turning point
    /// drops to [`DECAY_ACTION`].
    fn trimmed(&self, e: f64, kinetic: f64, wall: f64, sign: f64, d_min: f64, d_tp: f64) -> f64 {
        if d_min <= 0.0 || self.action(e, kinetic, wall, sign, d_min, d_tp) <= DECAY_ACTION {
            return d_min;
        }
        let (mut near, mut far) = (d_min, d_tp);
        for _ in 0..60 {
            let mid = (near * far).sqrt();
            if self.action(e, kinetic, wall, sign, mid, d_tp) > DECAY_ACTION {
                near = mid;
            } else {
                far = mid;
            }
        }
        near
    }

    /// Integration domain: the walls less their margins, trimmed to where the
    /// solution at the top of the bracket has decayed by `e^-40`.
    pub fn domain(&self) -> Result<(f64, f64)> {
        let (ra, rb) = self.outer_domain();
        let e = self.energy_bracket.1;
        let kinetic = self.params.kinetic_factor();
        let (r_min, u_min) = self.minimum(ra, rb);
        if !(u_min < e) {
            return Err(Error::BracketMiss {
                low: self.energy_bracket.0,
                high: e,
                nodes: 0,
            });
        }
        let width = self.params.well_width();
        let lo = if self.effective_potential(ra) > e {
            let tp = self.turning_point(e, r_min, ra);
            self.trimmed(e, kinetic, 0.0, 1.0, ra, tp)
        } else {
            ra
        };
        let hi = if self.effective_potential(rb) > e {
            let tp = self.turning_point(e, r_min, rb);
            width - self.trimmed(e, kinetic, width, -1.0, width - rb, width - tp)
        } else {
            rb
        };
        Ok((lo, hi))
    }

    fn mesh(&self) -> Result<Mesh> {
        let (lo, hi) = self.domain()?;
        let n = self.grid.points;
        let h = (hi - lo) / (n - 1) as f64;
        let kinetic = self.params.kinetic_factor();
        let mut kin_u = vec![0.0; n];
        let mut best = (f64::INFINITY, 1);
        for (i, slot) in kin_u.iter_mut().enumerate().take(n - 1).skip(1) {
            let u = kinetic * self.effective_potential(lo + h * i as f64);
            if !u.is_finite() {
                return Err(Error::Grid(format!("potential not finite at grid point {i}")));
            }
            *slot = u;
            if u < best.0 {
                best = (u, i);
            }
        }
        let matching = best.1.clamp(1, n - 3);
        let mesh = Mesh {
            r0: lo,
            h,
            kin_u,
            kinetic,
            matching,
        };
        let worst = mesh.kin_u.iter().fold(0.0f64, |m, &u| m.max(u - kinetic * self.energy_bracket.0));
        if worst * h * h / 12.0 >= 1.0 {
            return Err(Error::Grid(format!(
                "step {h:e} too coarse: h²f/12 reaches {:e}",
                worst * h * h / 12.0
            )));
        }
        Ok(mesh)
    }
}

impl Mesh {
    fn g(&self, i: usize, e: f64) -> f64 {
        if i == 0 || i + 1 == self.kin_u.len() {
            return 0.0;
        }
        (self.kin_u[i] - self.kinetic * e) * self.h * self.h / 12.0
    }

    /// Sign changes of the outward solution: the number of levels below `e`.
    fn sturm_count(&self, e: f64) -> u32 {
        let n = self.kin_u.len();
        let (mut prev, mut cur) = (0.0, 1e-10);
        let mut count = 0;
        let (mut g_prev, mut g_cur) = (self.g(0, e), self.g(1, e));
        for i in 1..n - 1 {
            let g_next = self.g(i + 1, e);
            let mut next = (2.0 * (1.0 + 5.0 * g_cur) * cur - (1.0 - g_prev) * prev) / (1.0 - g_next);
            if (next > 0.0 && cur < 0.0) || (next < 0.0 && cur > 0.0) || (next == 0.0 && i + 2 < n) {
                count += 1;
            }
            if next.abs() > RESCALE {
                next /= RESCALE;
                cur /= RESCALE;
            }
            if next == 0.0 {
                next = -cur * f64::EPSILON;
            }
            prev = cur;
            cur = next;
            g_prev = g_cur;
            g_cur = g_next;
        }
        count
    }

    fn outward(&self, e: f64, upto: usize) -> Vec<f64> {
        let mut psi = vec![0.0; upto + 1];
        psi[1] = 1e-10;
        for i in 1..upto {
            psi[i + 1] = (2.0 * (1.0 + 5.0 * self.g(i, e)) * psi[i] - (1.0 - self.g(i - 1, e)) * psi[i - 1])
                / (1.0 - self.g(i + 1, e));
            if psi[i + 1].abs() > RESCALE {
                psi.iter_mut().for_each(|v| *v /= RESCALE);
            }
        }
        psi
    }

    /// Inward solution indexed from the right end: `out[j]` is point `n-1-j`.
    fn inward(&self, e: f64, downto: usize) -> Vec<f64> {
        let n = self.kin_u.len();
        let len = n - downto;
        let mut psi = vec![0.0; len];
        psi[1] = 1e-10;
        for j in 1..len - 1 {
            let i = n - 1 - j;
            psi[j + 1] = (2.0 * (1.0 + 5.0 * self.g(i, e)) * psi[j] - (1.0 - self.g(i + 1, e)) * psi[j - 1])
                / (1.0 - self.g(i - 1, e));
            if psi[j + 1].abs() > RESCALE {
                psi.iter_mut().for_each(|v| *v /= RESCALE);
            }
        }
        psi
    }

    /// Normalized Casoratian of `φ = (1 - g)ψ` across points `m, m+1`.
    fn defect(&self, e: f64) -> f64 {
        let n = self.kin_u.len();
        let m = self.matching;
        let out = self.outward(e, m + 1);
        let inw = self.inward(e, m);
        let (o0, o1) = (out[m], out[m + 1]);
        let (i0, i1) = (inw[n - 1 - m], inw[n - 2 - m]);
        let (g0, g1) = (1.0 - self.g(m, e), 1.0 - self.g(m + 1, e));
        let (a0, a1, b0, b1) = (g0 * o0, g1 * o1, g0 * i0, g1 * i1);
        (a0 * b1 - a1 * b0) / (a0.hypot(a1) * b0.hypot(b1))
    }

    /// Interior sign changes of the matched solution.
    fn matched_nodes(&self, e: f64) -> u32 {
        let n = self.kin_u.len();
        let m = self.matching;
        let out = self.outward(e, m);
        let inw = self.inward(e, m);
        let scale = out[m] / inw[n - 1 - m];
        let values = out[1..=m].iter().copied().chain((1..n - 1 - m).rev().map(|j| inw[j] * scale));
        let mut nodes = 0;
        let mut last = 0.0f64;
        for v in values {
            if v != 0.0 {
                if last != 0.0 && v.signum() != last.signum() {
                    nodes += 1;
                }
                last = v;
            }
        }
        nodes
    }
}

/// Eigenvalue with `node_target` interior nodes inside `problem.energy_bracket`,
/// refined to `10⁻¹³` relative.
pub fn numerov_eigenvalue(problem: &NumerovProblem, node_target: u32) -> Result<NumerovEigen> {
    problem.validate()?;
    let mesh = problem.mesh()?;
    let (mut lo, mut hi) = problem.energy_bracket;
    let (mut c_lo, mut c_hi) = (mesh.sturm_count(lo), mesh.sturm_count(hi));
    let miss = |low, high| Error::BracketMiss {
        low,
        high,
        nodes: node_target,
    };
    if c_lo > node_target || c_hi <= node_target {
        return Err(miss(lo, hi));
    }
    for _ in 0..400 {
        if c_lo == node_target && c_hi == node_target + 1 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let c = mesh.sturm_count(mid);
        if c <= node_target {
            lo = mid;
            c_lo = c;
        } else {
            hi = mid;
            c_hi = c;
        }
    }
    if c_lo != node_target || c_hi != node_target + 1 {
        return Err(miss(lo, hi));
    }

    let converged = |lo: f64, hi: f64| hi - lo <= REL_TOL * lo.abs().max(hi.abs()) || 0.5 * (lo + hi) == lo;
    let (d_lo, d_hi) = (mesh.defect(lo), mesh.defect(hi));
    if d_lo.signum() != d_hi.signum() && d_lo.is_finite() && d_hi.is_finite() {
        let mut d_lo = d_lo;
        while !converged(lo, hi) {
            let mid = 0.5 * (lo + hi);
            let d = mesh.defect(mid);
            if d.signum() == d_lo.signum() {
                lo = mid;
                d_lo = d;
            } else {
                hi = mid;
            }
        }
    } else {
        while !converged(lo, hi) {
            let mid = 0.5 * (lo + hi);
            if mesh.sturm_count(mid) <= node_target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
    let energy = 0.5 * (lo + hi);
    let nodes = mesh.matched_nodes(energy);
    if nodes != node_target {
        return Err(Error::NodeMismatch {
            expected: node_target,
            found: nodes,
        });
    }
    let n = mesh.kin_u.len();
    Ok(NumerovEigen {
        energy,
        nodes,
        grid_points: n,
        domain: (mesh.r0, mesh.r0 + mesh.h * (n - 1) as f64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::potential_eval;
    use crate::spectrum::derive_coefficients;

    fn table2(alpha: f64) -> PotentialParams {
        PotentialParams::trig_pt(5.0, 3.0, alpha, 10.0).unwrap()
    }

    #[test]
    fn effective_potential_matches_potential_eval() {
        let p = PotentialParams::new(1.5, 2.0, 0.5, 0.25, 0.3, 2.0, 1.0).unwrap();
        let prob = NumerovProblem::new(p, 0, CentrifugalMode::Exact, (0.0, 1.0)).unwrap();
        for r in [0.3, 1.0, 2.5, 4.9] {
            let v = potential_eval(&p, r).unwrap();
            assert!((prob.effective_potential(r) - v).abs() <= 1e-12 * v.abs());
        }
    }

    #[test]
    fn table2_ground_state() {
        let prob = NumerovProblem::auto(table2(0.2), 0, CentrifugalMode::Approximated, 0).unwrap();
        let e = numerov_eigenvalue(&prob, 0).unwrap();
        assert!((e.energy - 16.10494).abs() <= 1e-4, "{}", e.energy);
        assert_eq!(e.nodes, 0);
    }

    #[test]
    fn zero_potential_well() {
        let p = PotentialParams::trig_pt(0.0, 0.0, 0.5, 1.0).unwrap();
        for n in 0..4 {
            let prob = NumerovProblem::auto(p, 0, CentrifugalMode::Approximated, n).unwrap();
            let e = numerov_eigenvalue(&prob, n).unwrap();
            let exact = derive_coefficients(&p, 0).unwrap().energy(n);
            assert!(((e.energy - exact) / exact).abs() <= 1e-6, "n={n}: {} vs {exact}", e.energy);
            assert_eq!(e.domain, (0.0, p.well_width()));
        }
    }

    #[test]
    fn fourth_order_convergence() {
        let p = PotentialParams::trig_pt(0.0, 0.0, 1.0, 0.5).unwrap();
        let exact = derive_coefficients(&p, 0).unwrap().energy(9);
        let err = |points| {
            let grid = GridSpec { points, margin: 1e-6 };
            let prob = NumerovProblem::auto_with_grid(p, 0, CentrifugalMode::Approximated, 9, grid).unwrap();
            (numerov_eigenvalue(&prob, 9).unwrap().energy - exact).abs()
        };
        let ratio = err(1001) / err(2001);
        assert!((ratio - 16.0).abs() < 1.0, "ratio {ratio}");
    }

    #[test]
    fn node_theorem_ascending() {
        let p = PotentialParams::new(2.0, 1.0, 0.5, 0.5, 0.4, 3.0, 1.0).unwrap();
        let mut previous = f64::NEG_INFINITY;
        for k in 0..6 {
            let prob = NumerovProblem::auto(p, 1, CentrifugalMode::Approximated, k).unwrap();
            let e = numerov_eigenvalue(&prob, k).unwrap();
            assert_eq!(e.nodes, k);
            assert!(e.energy > previous);
            previous = e.energy;
            let exact = derive_coefficients(&p, 1).unwrap().energy(k);
            assert!(((e.energy - exact) / exact).abs() <= 1e-6);
        }
    }

    #[test]
    fn bracket_errors() {
        let p = table2(0.2);
        assert!(NumerovProblem::new(p, 0, CentrifugalMode::Approximated, (2.0, 1.0)).is_err());
        let bad_grid = GridSpec { points: 10, margin: 1e-6 };
        assert!(NumerovProblem::new(p, 0, CentrifugalMode::Approximated, (0.0, 1.0))
            .unwrap()
            .with_grid(bad_grid)
            .is_err());
        // bracket below the ground state
        let prob = NumerovProblem::new(p, 0, CentrifugalMode::Approximated, (15.0, 16.0)).unwrap();
        assert!(matches!(numerov_eigenvalue(&prob, 0), Err(Error::BracketMiss { .. })));
        // bracket holding only the ground state, asked for the first excited
        let prob = NumerovProblem::new(p, 0, CentrifugalMode::Approximated, (16.0, 16.5)).unwrap();
        assert!(matches!(numerov_eigenvalue(&prob, 1), Err(Error::BracketMiss { .. })));
    }
}
