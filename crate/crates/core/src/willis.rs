//! Derivative of the cross-product zeros with respect to the order, the
//! scaled direction fields F_k and their limit F.

use serde::{Deserialize, Serialize};

use crate::crosszeros::{self, eval_cross_normalized};
use crate::error::{Error, Result};
use crate::specfun::{bessel_jy, integrate_k0_weighted, QuadratureConfig};

/// Largest |f/(M(a)M(Ra))| accepted at a claimed zero.
pub const RESIDUAL_GATE: f64 = 1e-6;

/// arccos t on [−1, 1], zero elsewhere.
pub fn ac(t: f64) -> f64 {
    if t.abs() <= 1.0 {
        t.acos()
    } else {
        0.0
    }
}

/// √t for t ≥ 0, zero elsewhere.
pub fn sr(t: f64) -> f64 {
    if t >= 0.0 {
        t.sqrt()
    } else {
        0.0
    }
}

/// A point (x, y) = (ν/k, a/k) of the scaled plane, restricted to y > x/R.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaledPoint {
    pub x: f64,
    pub y: f64,
    #[serde(rename = "R")]
    pub r: f64,
}

impl ScaledPoint {
    pub fn new(x: f64, y: f64, r: f64) -> Result<Self> {
        let p = ScaledPoint { x, y, r };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let ScaledPoint { x, y, r } = *self;
        if !x.is_finite() || x < 0.0 || !y.is_finite() || !(y > 0.0) {
            return Err(Error::domain("ScaledPoint", format!("need x >= 0, y > 0; got x = {x}, y = {y}")));
        }
        if !r.is_finite() || !(r > 1.0) {
            return Err(Error::domain("ScaledPoint", format!("R must be > 1, got {r}")));
        }
        if !(y > x / r) {
            return Err(Error::domain("ScaledPoint", format!("need y > x/R; got x = {x}, y = {y}, R = {r}")));
        }
        Ok(())
    }

    /// y ≤ x, where the limit field reduces to its majorant.
    pub fn in_e1(&self) -> bool {
        self.y <= self.x
    }

    /// arccos(x/(Ry)) / (R√(1 − (x/(Ry))²)), the common upper bound of F_k and F.
    pub fn majorant(&self) -> f64 {
        let s = self.x / (self.r * self.y);
        s.acos() / (self.r * ((1.0 - s) * (1.0 + s)).sqrt())
    }
}

/// ∫₀^∞ K₀(2c sinh t) e^{−2νt} dt, computed in the variable u = 2c sinh t.
pub fn k0_laplace_integral(c: f64, nu: f64, quad: &QuadratureConfig) -> Result<f64> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::domain("k0_laplace_integral", format!("c must be > 0, got {c}")));
    }
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::domain("k0_laplace_integral", format!("nu must be >= 0, got {nu}")));
    }
    let two_c = 2.0 * c;
    integrate_k0_weighted(
        |u| -2.0 * nu * (u / two_c).asinh() - 0.5 * (u * u + two_c * two_c).ln(),
        quad,
    )
}

/// The Willis expression at an arbitrary (ν, a), without checking that a
/// is a zero.
///
/// Dividing through by J_ν²(a) + Y_ν²(a) gives
/// 2a·[I(Ra) − ρ·I(a)] / (1 − ρ) with ρ = (M(Ra)/M(a))², which stays finite
/// when the moduli themselves are far from 1.
pub fn willis_formula(nu: f64, r: f64, a: f64, quad: &QuadratureConfig) -> Result<f64> {
    let inner = bessel_jy(nu, a)?.modulus();
    let outer = bessel_jy(nu, r * a)?.modulus();
    if !inner.is_finite() || !(outer > 0.0) {
        return Err(Error::domain(
            "willis_formula",
            format!("Bessel modulus out of double range at nu = {nu}, a = {a}"),
        ));
    }
    let rho = (outer / inner).powi(2);
    if !(rho < 1.0) {
        return Err(Error::Invariant(format!(
            "J^2 + Y^2 not decreasing between {a} and {}: ratio {rho}",
            r * a
        )));
    }
    let i_outer = k0_laplace_integral(r * a, nu, quad)?;
    let i_inner = k0_laplace_integral(a, nu, quad)?;
    Ok(2.0 * a * (i_outer - rho * i_inner) / (1.0 - rho))
}

/// da_{ν,k}/dν at a zero `a` of f_{ν,R}.
pub fn willis_derivative(nu: f64, r: f64, a: f64, quad: &QuadratureConfig) -> Result<f64> {
    let residual = eval_cross_normalized(nu, r, a)?.abs();
    if residual > RESIDUAL_GATE {
        return Err(Error::Precondition(format!(
            "{a} is not a zero of the cross-product for nu = {nu}, R = {r} (normalised residual {residual:e})"
        )));
    }
    willis_formula(nu, r, a, quad)
}

/// F_k(x, y): the Willis expression at order kx and argument ky.
pub fn f_k(p: &ScaledPoint, k: u32, quad: &QuadratureConfig) -> Result<f64> {
    p.validate()?;
    if k == 0 {
        return Err(Error::domain("f_k", "k must be >= 1"));
    }
    let k = f64::from(k);
    willis_formula(k * p.x, p.r, k * p.y, quad)
}

/// The limit field
/// F(x, y) = [arccos(x/(Ry)) − Ac(x/y)] / [R√(1 − (x/(Ry))²) − Sr(1 − (x/y)²)].
pub fn f_limit(p: &ScaledPoint) -> Result<f64> {
    p.validate()?;
    Ok(f_limit_unchecked(p.x, p.y, p.r))
}

pub(crate) fn f_limit_unchecked(x: f64, y: f64, r: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let s = x / (r * y);
    let outer = (1.0 - s) * (1.0 + s);
    if y <= x {
        return s.acos() / (r * outer.sqrt());
    }
    let t = x / y;
    (s.acos() - ac(t)) / (r * outer.sqrt() - sr((1.0 - t) * (1.0 + t)))
}

/// Step used by [`derivative_by_differences`] for order ν.
pub fn difference_step(nu: f64) -> f64 {
    1e-3 * nu.max(1.0)
}

/// da_{ν,k}/dν from recomputed zeros: Richardson-extrapolated central
/// differences for ν > 0, a forward difference with step 1e−5 at ν = 0.
pub fn derivative_by_differences(nu: f64, r: f64, k: usize) -> Result<f64> {
    let a = |v: f64| crosszeros::zero(v, r, k, 1e-14).map(|z| z.value);
    if nu == 0.0 {
        let h = 1e-5;
        return Ok((a(h)? - a(0.0)?) / h);
    }
    let h = difference_step(nu).min(0.5 * nu);
    let d1 = (a(nu + h)? - a(nu - h)?) / (2.0 * h);
    let d2 = (a(nu + 0.5 * h)? - a(nu - 0.5 * h)?) / h;
    Ok((4.0 * d2 - d1) / 3.0)
}
