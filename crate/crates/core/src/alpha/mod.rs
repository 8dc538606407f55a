//! The limit curve α(x) = lim a_{kx,k}/k, its closed-form characterisation,
//! the comparison function ι̃ and the bounds sandwiching α.

mod interp;
mod ode;

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::refine_bracket;
use crate::willis::f_limit_unchecked;

/// Default tolerance for curve construction.
pub const DEFAULT_TOL: f64 = 1e-9;

fn check_r(func: &'static str, r: f64) -> Result<()> {
    if !r.is_finite() || !(r > 1.0) {
        return Err(Error::domain(func, format!("R must be finite and > 1, got {r}")));
    }
    Ok(())
}

fn check_x(func: &'static str, x: f64) -> Result<()> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain(func, format!("x must be finite and >= 0, got {x}")));
    }
    Ok(())
}

fn check_tol(func: &'static str, tol: f64) -> Result<()> {
    if !tol.is_finite() || !(tol > 0.0) {
        return Err(Error::domain(func, format!("tol must be > 0, got {tol}")));
    }
    Ok(())
}

/// The abscissa where α crosses the diagonal, π/(√(R²−1) − arccos(1/R)).
pub fn corner_x0(r: f64) -> Result<f64> {
    check_r("corner_x0", r)?;
    Ok(PI / (((r - 1.0) * (r + 1.0)).sqrt() - (1.0 / r).acos()))
}

/// α(0) = π/(R−1).
pub fn alpha_at_origin(r: f64) -> f64 {
    PI / (r - 1.0)
}

/// √(π²/(R−1)² + x²/R²).
pub fn sandwich_lower(r: f64, x: f64) -> f64 {
    alpha_at_origin(r).hypot(x / r)
}

/// π/(R−1) + πx/(2R).
pub fn sandwich_upper(r: f64, x: f64) -> f64 {
    alpha_at_origin(r) + PI * x / (2.0 * r)
}

/// Residual of the equation valid for α ≥ x:
/// Rα√(1−(x/Rα)²) − α√(1−(x/α)²) − x·arccos(x/Rα) + x·arccos(x/α) − π.
pub fn residual_below_corner(r: f64, x: f64, alpha: f64) -> f64 {
    let s = x / (r * alpha);
    let t = (x / alpha).min(1.0);
    r * alpha * ((1.0 - s) * (1.0 + s)).sqrt() - alpha * ((1.0 - t) * (1.0 + t)).sqrt() - x * s.acos()
        + x * t.acos()
        - PI
}

/// Residual of the equation valid for α ≤ x:
/// Rα√(1−(x/Rα)²) − x₀√(R²−1) − x·arccos(x/Rα) + x₀·arccos(1/R).
pub fn residual_above_corner(r: f64, x: f64, x0: f64, alpha: f64) -> f64 {
    let s = (x / (r * alpha)).min(1.0);
    r * alpha * ((1.0 - s) * (1.0 + s)).sqrt() - x0 * ((r - 1.0) * (r + 1.0)).sqrt() - x * s.acos()
        + x0 * (1.0 / r).acos()
}

/// α(x) as the root of the closed-form equations: the α ≥ x equation for
/// x < x₀ and the α ≤ x equation for x ≥ x₀.
pub fn alpha_transcendental(r: f64, x: f64, tol: f64) -> Result<f64> {
    check_r("alpha_transcendental", r)?;
    check_x("alpha_transcendental", x)?;
    check_tol("alpha_transcendental", tol)?;
    if x == 0.0 {
        return Ok(alpha_at_origin(r));
    }
    let x0 = corner_x0(r)?;
    let hi = sandwich_upper(r, x);
    let below = x < x0;
    let lo = if below { sandwich_lower(r, x).max(x) } else { sandwich_lower(r, x).max(x / r) };
    let g = |a: f64| {
        if below {
            residual_below_corner(r, x, a)
        } else {
            residual_above_corner(r, x, x0, a)
        }
    };
    let g_lo = g(lo);
    // The lower end coincides with the root only at the corner itself.
    if g_lo >= 0.0 && (lo - x).abs() <= tol.max(4.0 * f64::EPSILON * x) {
        return Ok(lo);
    }
    let b = refine_bracket(|a| Ok(g(a)), lo, hi, tol)?;
    Ok(b.root)
}

/// tan δ − δ, accurate for small δ.
fn tan_minus_id(d: f64) -> f64 {
    if d < 0.1 {
        let d2 = d * d;
        d * d2 * (1.0 / 3.0 + d2 * (2.0 / 15.0 + d2 * (17.0 / 315.0 + d2 * (62.0 / 2835.0 + d2 * 1382.0 / 155925.0))))
    } else {
        d.tan() - d
    }
}

/// ι̃(x) = x / sin γ where γ ∈ (0, π/2) solves cot γ − (π/2 − γ) = πR/((R−1)x);
/// ι̃(0) = πR/(R−1).
pub fn tilde_iota(r: f64, x: f64, tol: f64) -> Result<f64> {
    check_r("tilde_iota", r)?;
    check_x("tilde_iota", x)?;
    check_tol("tilde_iota", tol)?;
    if x == 0.0 {
        return Ok(PI * r / (r - 1.0));
    }
    // With δ = π/2 − γ the equation reads tan δ − δ = rhs, increasing in δ.
    let rhs = PI * r / ((r - 1.0) * x);
    let hi = FRAC_PI_2 - 0.5 * (1.0 / (rhs + FRAC_PI_2)).atan();
    let b = refine_bracket(|d| Ok(tan_minus_id(d) - rhs), 0.0, hi, (tol / x).min(tol))?;
    Ok(x / b.root.cos())
}

/// The three bounds lower < ι̃/R ≤ linear on α(x).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaBounds {
    pub lower: f64,
    pub upper_iota: f64,
    pub upper_linear: f64,
}

pub fn alpha_bounds(r: f64, x: f64) -> Result<AlphaBounds> {
    check_r("alpha_bounds", r)?;
    check_x("alpha_bounds", x)?;
    Ok(AlphaBounds {
        lower: sandwich_lower(r, x),
        upper_iota: tilde_iota(r, x, 1e-14)? / r,
        upper_linear: sandwich_upper(r, x),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Ode,
    Transcendental,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaSample {
    pub x: f64,
    pub alpha: f64,
}

/// A sampled α curve on [0, x_max] for one R.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaCurve {
    #[serde(rename = "R")]
    pub r: f64,
    pub samples: Vec<AlphaSample>,
    /// Corner abscissa: located by the solver when the curve reaches it,
    /// otherwise the closed-form value.
    pub x0: f64,
    pub tol: f64,
    pub method: Method,
}

/// Default right end of a curve: max(4x₀, 20).
pub fn default_x_max(r: f64) -> Result<f64> {
    Ok((4.0 * corner_x0(r)?).max(20.0))
}

/// Largest integration step, also the spacing of closed-form samples.
fn sample_spacing(r: f64, x_max: f64) -> f64 {
    (x_max / 2000.0).min(0.05 * alpha_at_origin(r).max(1.0))
}

fn slack(tol: f64) -> f64 {
    10.0 * tol
}

/// Integrates α' = F(x, α), α(0) = π/(R−1), up to `x_max`, stopping at the
/// diagonal crossing and restarting from it.
pub fn solve_ivp(r: f64, x_max: f64, tol: f64) -> Result<AlphaCurve> {
    check_r("solve_ivp", r)?;
    check_x("solve_ivp", x_max)?;
    check_tol("solve_ivp", tol)?;
    let y0 = alpha_at_origin(r);
    let x0_exact = corner_x0(r)?;
    let settings = ode::Settings { atol: 1e-3 * tol, h_max: sample_spacing(r, x_max) };
    let field = |x: f64, y: f64| f_limit_unchecked(x, y, r);

    let first = ode::integrate(field, 0.0, y0, x_max, settings, Some(|x: f64, y: f64| y - x))?;
    let mut points = first.points;
    let mut x0 = x0_exact;
    if let Some((xe, ye)) = first.event {
        if (xe - x0_exact).abs() > slack(tol) {
            return Err(Error::Invariant(format!(
                "corner located at {xe}, closed form gives {x0_exact} (R = {r})"
            )));
        }
        x0 = xe;
        let second = ode::integrate(field, xe, ye, x_max, settings, None::<fn(f64, f64) -> f64>)?;
        points.extend(second.points.into_iter().skip(1));
    }
    let curve = AlphaCurve {
        r,
        samples: points.into_iter().map(|(x, alpha)| AlphaSample { x, alpha }).collect(),
        x0,
        tol,
        method: Method::Ode,
    };
    curve.check_invariants()?;
    Ok(curve)
}

/// The same curve built from the closed-form equations on a uniform grid
/// that includes x₀ when it lies in range.
pub fn solve_transcendental(r: f64, x_max: f64, tol: f64) -> Result<AlphaCurve> {
    check_r("solve_transcendental", r)?;
    check_x("solve_transcendental", x_max)?;
    check_tol("solve_transcendental", tol)?;
    let x0 = corner_x0(r)?;
    let mut xs = vec![0.0];
    if x_max > 0.0 {
        let n = (x_max / sample_spacing(r, x_max)).ceil() as usize;
        xs.extend((1..=n).map(|i| x_max * i as f64 / n as f64));
        if x0 < x_max {
            let gap = 1e-6 * sample_spacing(r, x_max);
            xs.retain(|&x| (x - x0).abs() > gap);
            let at = xs.partition_point(|&x| x < x0);
            xs.insert(at, x0);
        }
    }
    let samples = xs
        .into_iter()
        .map(|x| Ok(AlphaSample { x, alpha: alpha_transcendental(r, x, 1e-3 * tol)? }))
        .collect::<Result<Vec<_>>>()?;
    let curve = AlphaCurve { r, samples, x0, tol, method: Method::Transcendental };
    curve.check_invariants()?;
    Ok(curve)
}

/// Builds a curve with the chosen method.
pub fn solve(r: f64, x_max: f64, tol: f64, method: Method) -> Result<AlphaCurve> {
    match method {
        Method::Ode => solve_ivp(r, x_max, tol),
        Method::Transcendental => solve_transcendental(r, x_max, tol),
    }
}

impl AlphaCurve {
    pub fn x_max(&self) -> f64 {
        self.samples.last().map_or(0.0, |s| s.x)
    }

    /// Slope F(x, α) at a sample.
    fn slope(&self, s: &AlphaSample) -> f64 {
        f_limit_unchecked(s.x, s.alpha, self.r)
    }

    /// α at any x in [0, x_max], by monotone cubic interpolation with the
    /// exact slopes at the samples.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(x >= 0.0) || x > self.x_max() {
            return Err(Error::domain("AlphaCurve::eval", format!("x = {x} outside [0, {}]", self.x_max())));
        }
        let i = self.samples.partition_point(|s| s.x <= x);
        if i == 0 {
            return Ok(self.samples[0].alpha);
        }
        if i == self.samples.len() {
            return Ok(self.samples[i - 1].alpha);
        }
        let (a, b) = (&self.samples[i - 1], &self.samples[i]);
        Ok(interp::monotone_hermite(a.x, b.x, a.alpha, b.alpha, self.slope(a), self.slope(b), x))
    }

    /// Checks the start value, strict growth, the sandwich bounds (with
    /// slack 10·tol) and the side of the diagonal relative to x₀.
    pub fn check_invariants(&self) -> Result<()> {
        let r = self.r;
        let first = self.samples.first().ok_or_else(|| Error::Invariant("empty curve".into()))?;
        if first.x != 0.0 || first.alpha != alpha_at_origin(r) {
            return Err(Error::Invariant(format!("curve starts at ({}, {})", first.x, first.alpha)));
        }
        let eps = slack(self.tol);
        for w in self.samples.windows(2) {
            if !(w[1].x > w[0].x && w[1].alpha > w[0].alpha) {
                return Err(Error::Invariant(format!(
                    "samples not strictly increasing at x = {}",
                    w[1].x
                )));
            }
        }
        for s in self.samples.iter().skip(1) {
            let (lo, hi) = (sandwich_lower(r, s.x), sandwich_upper(r, s.x));
            if !(s.alpha > lo - eps && s.alpha < hi) {
                return Err(Error::Invariant(format!(
                    "alpha({}) = {} outside ({lo}, {hi})",
                    s.x, s.alpha
                )));
            }
            let side_ok = if s.x < self.x0 - eps {
                s.alpha > s.x - eps
            } else if s.x > self.x0 + eps {
                s.alpha < s.x + eps
            } else {
                (s.alpha - s.x).abs() <= eps
            };
            if !side_ok {
                return Err(Error::Invariant(format!(
                    "alpha({}) = {} on the wrong side of the diagonal (x0 = {})",
                    s.x, s.alpha, self.x0
                )));
            }
        }
        Ok(())
    }
}
