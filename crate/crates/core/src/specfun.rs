//! Error-function family and the terminating Gauss hypergeometric series.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

/// Below this |x| erf is summed from its power series, above it erfc comes from
/// the continued fraction.
const SERIES_LIMIT: f64 = 2.0;

/// `e^{-x²} Σ 2^k x^{2k+1} / (2k+1)!!`, all terms positive.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= 2.0 * x2 / (2.0 * k + 1.0);
        sum += term;
        if term <= sum * 1e-17 {
            break;
        }
    }
    FRAC_2_SQRT_PI * (-x2).exp() * sum
}

/// `e^{x²} erfc(x)` for `x >= SERIES_LIMIT` by the Laplace continued fraction
/// `1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))`, modified Lentz.
fn erfcx_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = x;
    let mut c = x;
    let mut d = 0.0;
    for k in 1..5000 {
        let a = 0.5 * k as f64;
        d = x + a * d;
        if d.abs() < TINY {
            d = TINY;
        }
        d = 1.0 / d;
        c = x + a / c;
        if c.abs() < TINY {
            c = TINY;
        }
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    1.0 / (PI.sqrt() * f)
}

/// The error function.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    let v = if ax < SERIES_LIMIT {
        erf_series(ax)
    } else if ax > 6.5 {
        1.0
    } else {
        1.0 - (-ax * ax).exp() * erfcx_fraction(ax)
    };
    v.copysign(x)
}

/// The complementary error function `1 − erf(x)`, accurate in relative terms for
/// large positive `x`.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.0 {
        2.0 - erfc(-x)
    } else if x < SERIES_LIMIT {
        1.0 - erf_series(x)
    } else if x > 27.3 {
        0.0
    } else {
        (-x * x).exp() * erfcx_fraction(x)
    }
}

/// The scaled complementary error function `e^{x²} erfc(x)`, for `x >= 0`
/// finite at every magnitude.
pub fn erfcx(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < SERIES_LIMIT {
        (x * x).exp() * erfc(x)
    } else if x > 1e8 {
        1.0 / (PI.sqrt() * x)
    } else {
        erfcx_fraction(x)
    }
}

/// `e^{a²} (erf(b) − erf(a))` for `0 <= a <= b`, without cancellation when both
/// arguments sit in the tail.
pub fn scaled_erf_diff(a: f64, b: f64) -> f64 {
    debug_assert!(0.0 <= a && a <= b);
    if b.is_infinite() {
        erfcx(a)
    } else if a > 0.5 {
        erfcx(a) - (-(b - a) * (b + a)).exp() * erfcx(b)
    } else {
        (a * a).exp() * (erf(b) - erf(a))
    }
}

/// The imaginary error function `(2/√π) ∫₀ˣ e^{u²} du`.
///
/// Errors when the result exceeds the f64 range (|x| above roughly 26.6).
pub fn erfi(x: f64) -> Result<f64> {
    if !x.is_finite() || x.abs() > 27.0 {
        return Err(Error::Overflow { function: "erfi", x });
    }
    let x2 = x * x;
    let mut power = x;
    let mut sum = x;
    let mut k = 0.0;
    loop {
        k += 1.0;
        power *= x2 / k;
        let term = power / (2.0 * k + 1.0);
        sum += term;
        if term.abs() <= sum.abs() * 1e-17 && k > x2 {
            break;
        }
    }
    let v = FRAC_2_SQRT_PI * sum;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow { function: "erfi", x })
    }
}

/// Parameters `(a, b, c)` of `₂F₁(a, b; c; ρ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricArgs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HypergeometricArgs {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        Self { a, b, c }
    }

    /// `a = −n`.
    pub fn terminating(n: u32, b: f64, c: f64) -> Self {
        Self::new(-(n as f64), b, c)
    }

    /// Degree of the polynomial when `a` is a non-positive integer.
    pub fn degree(&self) -> Option<u32> {
        let n = (-self.a).round();
        let tol = 1e-9 * n.max(1.0);
        (n >= 0.0 && (self.a + n).abs() <= tol && n <= u32::MAX as f64).then_some(n as u32)
    }
}

/// `₂F₁(−n, b; c; ρ)` as the finite sum `Σ_{k≤n} (a)_k (b)_k / ((c)_k k!) ρᵏ`.
///
/// Requires `a` to be a non-positive integer, `c` not a non-positive integer
/// reachable by the series, and `ρ ∈ [0, 1]`.
pub fn hyp2f1_terminating(args: HypergeometricArgs, rho: f64) -> Result<f64> {
    let n = args.degree().ok_or(Error::NonTerminating { a: args.a })?;
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::invalid("rho", format!("must lie in [0, 1], got {rho}")));
    }
    let a = -(n as f64);
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..n {
        let k = k as f64;
        let denom = (args.c + k) * (k + 1.0);
        if denom == 0.0 {
            return Err(Error::invalid("c", format!("{} is a pole of the series", args.c)));
        }
        term *= (a + k) * (args.b + k) / denom * rho;
        sum += term;
    }
    Ok(sum)
}

/// Same polynomial through the three-term Jacobi recurrence in the degree.
///
/// `₂F₁(−n, n + s + 1; a + 1; ρ) = n!/(a+1)_n · P_n^{(a, s−a)}(1 − 2ρ)`. The
/// recurrence stays accurate where the alternating series cancels, which is
/// the case near the envelope peak once `b` and `c` are large. Falls back to
/// the series when the recurrence degenerates.
pub fn hyp2f1_jacobi(args: HypergeometricArgs, rho: f64) -> Result<f64> {
    let n = args.degree().ok_or(Error::NonTerminating { a: args.a })?;
    let ja = args.c - 1.0;
    let s = args.b - n as f64 - 1.0;
    let jb = s - ja;
    let degenerate = (1..=n).any(|k| {
        let k = k as f64;
        ja + k == 0.0 || (k >= 2.0 && ((k + s) == 0.0 || (2.0 * k + s - 2.0) == 0.0))
    });
    if n < 2 || degenerate {
        return hyp2f1_terminating(args, rho);
    }
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::invalid("rho", format!("must lie in [0, 1], got {rho}")));
    }
    let x = 1.0 - 2.0 * rho;
    let mut prev = 1.0;
    let mut cur = 1.0 - (s + 2.0) * rho / (ja + 1.0);
    for k in 2..=n {
        let k = k as f64;
        let t = 2.0 * k + s;
        let lead = 2.0 * k * (k + s) * (t - 2.0);
        let mid = (t - 1.0) * (t * (t - 2.0) * x + (ja - jb) * (ja + jb));
        let back = 2.0 * (k + ja - 1.0) * (k + jb - 1.0) * t;
        let r1 = k / (ja + k);
        let r2 = r1 * (k - 1.0) / (ja + k - 1.0);
        let next = (mid * r1 * cur - back * r2 * prev) / lead;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
