//! Globally adaptive 10/21-point Gauss-Kronrod quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_600_525_435_223,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], ..., XGK[9]`.
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Smallest relative tolerance accepted.
pub const MIN_REL_TOL: f64 = 1e-13;

/// Integrand magnitude, relative to the largest sample seen, at which a
/// semi-infinite integral is truncated.
pub const TAIL_CUTOFF: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub intervals: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Interval {
    Finite(f64, f64),
    ToInfinity(f64),
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: FnMut(f64) -> f64>(f: &mut F, lo: f64, hi: f64) -> Segment {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut gauss = 0.0;
    let mut kron = fc * WGK[10];
    let mut abs_sum = fc.abs() * WGK[10];
    let mut fv = [(0.0, 0.0); 10];
    for (j, &x) in XGK[..10].iter().enumerate() {
        let dx = half * x;
        let (f1, f2) = (f(center - dx), f(center + dx));
        fv[j] = (f1, f2);
        kron += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = kron * 0.5;
    let mut asc = WGK[10] * (fc - mean).abs();
    for (j, &(f1, f2)) in fv.iter().enumerate() {
        asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let value = kron * half;
    let res_abs = abs_sum * half.abs();
    let res_asc = asc * half.abs();
    let mut error = ((kron - gauss) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Segment { lo, hi, value, error }
}

/// Adaptive integrator settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_intervals: usize,
    /// The interval is first cut into this many equal panels, so narrow peaks
    /// in long intervals are not missed by the first rule application.
    pub initial_panels: usize,
    /// First probe step when locating the truncation point of a semi-infinite
    /// interval.
    pub tail_scale: f64,
}

impl Quadrature {
    pub fn new(rel_tol: f64) -> Result<Self> {
        if !(rel_tol >= MIN_REL_TOL) {
            return Err(Error::invalid("rel_tol", format!("must be >= {MIN_REL_TOL:e}, got {rel_tol:e}")));
        }
        Ok(Self {
            rel_tol,
            abs_tol: 0.0,
            max_intervals: 20_000,
            initial_panels: 1,
            tail_scale: 1.0,
        })
    }

    pub fn with_panels(self, initial_panels: usize) -> Self {
        Self {
            initial_panels: initial_panels.max(1),
            ..self
        }
    }

    pub fn with_abs_tol(self, abs_tol: f64) -> Self {
        Self { abs_tol, ..self }
    }

    pub fn with_tail_scale(self, tail_scale: f64) -> Self {
        Self { tail_scale, ..self }
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F, lo: f64, hi: f64) -> Result<Estimate> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::invalid("interval", format!("[{lo}, {hi}] must be finite")));
        }
        if lo == hi {
            return Ok(Estimate { value: 0.0, error: 0.0, intervals: 0 });
        }
        if hi < lo {
            let e = self.integrate(f, hi, lo)?;
            return Ok(Estimate { value: -e.value, ..e });
        }

        let panels = self.initial_panels;
        let width = (hi - lo) / panels as f64;
        let mut heap = BinaryHeap::with_capacity(2 * panels);
        let mut settled = Vec::new();
        for i in 0..panels {
            let a = lo + width * i as f64;
            let b = if i + 1 == panels { hi } else { a + width };
            heap.push(kronrod(&mut f, a, b));
        }

        loop {
            let (value, error) = heap
                .iter()
                .chain(settled.iter())
                .fold((0.0, 0.0), |(v, e), s: &Segment| (v + s.value, e + s.error));
            let intervals = heap.len() + settled.len();
            if !value.is_finite() || !error.is_finite() {
                return Err(Error::QuadratureNonConvergence { estimate: value, error, intervals });
            }
            if error <= self.abs_tol.max(self.rel_tol * value.abs()) {
                return Ok(Estimate { value, error, intervals });
            }
            if intervals >= self.max_intervals {
                return Err(Error::QuadratureNonConvergence { estimate: value, error, intervals });
            }
            let Some(worst) = heap.pop() else {
                // every interval is at the resolution floor
                return Err(Error::QuadratureNonConvergence { estimate: value, error, intervals });
            };
            let mid = 0.5 * (worst.lo + worst.hi);
            if mid <= worst.lo || mid >= worst.hi || (worst.hi - worst.lo) < 1e-14 * mid.abs() {
                settled.push(worst);
                continue;
            }
            heap.push(kronrod(&mut f, worst.lo, mid));
            heap.push(kronrod(&mut f, mid, worst.hi));
        }
    }

    /// Upper truncation point of `[lo, ∞)`: probes `lo + s·2^k` until the
    /// integrand drops below [`TAIL_CUTOFF`] times the largest value seen.
    pub fn tail_cutoff<F: FnMut(f64) -> f64>(&self, f: &mut F, lo: f64) -> Result<f64> {
        let mut peak = f(lo).abs();
        let mut previous = peak;
        let mut step = self.tail_scale;
        for _ in 0..2000 {
            let x = lo + step;
            let v = f(x).abs();
            if !v.is_finite() {
                return Err(Error::QuadratureNonConvergence { estimate: v, error: f64::NAN, intervals: 0 });
            }
            peak = peak.max(v);
            if peak > 0.0 && v <= previous && v <= TAIL_CUTOFF * peak {
                return Ok(x);
            }
            previous = v;
            step *= 2.0;
            if !x.is_finite() {
                break;
            }
        }
        Err(Error::QuadratureNonConvergence { estimate: f64::NAN, error: f64::NAN, intervals: 0 })
    }

    pub fn integrate_to_infinity<F: FnMut(f64) -> f64>(&self, mut f: F, lo: f64) -> Result<Estimate> {
        let hi = self.tail_cutoff(&mut f, lo)?;
        self.integrate(f, lo, hi)
    }

    pub fn integrate_over<F: FnMut(f64) -> f64>(&self, f: F, interval: Interval) -> Result<Estimate> {
        match interval {
            Interval::Finite(lo, hi) => self.integrate(f, lo, hi),
            Interval::ToInfinity(lo) => self.integrate_to_infinity(f, lo),
        }
    }
}

/// Adaptive integral of `f` over `interval` to relative tolerance `rel_tol`.
pub fn quadrature<F: FnMut(f64) -> f64>(f: F, interval: Interval, rel_tol: f64) -> Result<f64> {
    Ok(Quadrature::new(rel_tol)?.with_panels(16).integrate_over(f, interval)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn constant() {
        assert!((quadrature(|_| 1.0, Interval::Finite(0.0, 1.0), 1e-12).unwrap() - 1.0).abs() <= 2.0 * f64::EPSILON);
    }

    #[test]
    fn gaussian_half_line() {
        let v = quadrature(|x| (-x * x).exp(), Interval::ToInfinity(0.0), 1e-13).unwrap();
        assert!((v - PI.sqrt() / 2.0).abs() <= 1e-12);
    }

    #[test]
    fn reversed_and_empty_intervals() {
        let q = Quadrature::new(1e-12).unwrap();
        assert_eq!(q.integrate(|x| x, 2.0, 2.0).unwrap().value, 0.0);
        assert_relative_eq!(q.integrate(|x| x, 1.0, 0.0).unwrap().value, -0.5, max_relative = 1e-14);
    }

    #[test]
    fn rejects_tight_tolerance() {
        assert!(Quadrature::new(1e-14).is_err());
        assert!(Quadrature::new(f64::NAN).is_err());
    }

    #[test]
    fn nonconvergence_is_reported() {
        let mut q = Quadrature::new(1e-12).unwrap();
        q.max_intervals = 8;
        let r = q.integrate(|x: f64| x.abs().powf(-0.9), -1.0, 1.0);
        assert!(matches!(r, Err(Error::QuadratureNonConvergence { .. })));
        assert!(q.integrate(|_| f64::NAN, 0.0, 1.0).is_err());
    }

    #[test]
    fn endpoint_singularity() {
        let v = quadrature(|x: f64| 1.0 / x.sqrt(), Interval::Finite(0.0, 1.0), 1e-10).unwrap();
        assert_relative_eq!(v, 2.0, max_relative = 1e-9);
    }

    #[test]
    fn narrow_peak_needs_panels() {
        let f = |x: f64| (-(x - 424.0).powi(2) / 8.0).exp();
        let exact = (8.0 * PI).sqrt();
        let v = Quadrature::new(1e-12).unwrap().with_panels(256).integrate(f, 0.0, 785.0).unwrap();
        assert_relative_eq!(v.value, exact, max_relative = 1e-11);
    }

    #[test]
    fn error_estimate_is_conservative() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut covered = 0;
        let trials = 400;
        for _ in 0..trials {
            let q = Quadrature::new(10f64.powf(rng.random_range(-12.0..-4.0))).unwrap();
            let (exact, est) = if rng.random_bool(0.5) {
                let s = rng.random_range(0.2..5.0f64);
                let c = rng.random_range(-1.0..3.0f64);
                let e = q.integrate(|x| (-s * (x - c) * (x - c)).exp(), -10.0, 10.0).unwrap();
                ((PI / s).sqrt(), e)
            } else {
                let k = rng.random_range(0..12);
                let b = rng.random_range(0.5..3.0f64);
                let e = q.integrate(|x: f64| x.powi(k), 0.0, b).unwrap();
                (b.powi(k + 1) / (k + 1) as f64, e)
            };
            if (est.value - exact).abs() <= est.error {
                covered += 1;
            }
        }
        assert!(covered as f64 >= 0.99 * trials as f64, "covered {covered}/{trials}");
    }
}
