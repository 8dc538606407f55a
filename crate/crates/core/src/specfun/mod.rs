//! Special functions and the integral identities used to validate them.

mod bessel;
mod quad;

use std::f64::consts::PI;

pub use bessel::{bessel_j, bessel_jy, bessel_k0, bessel_y, BesselJY};
pub use quad::{integrate_k0_weighted, k0_asymptote, QuadratureConfig};

use crate::error::{Error, Result};

/// Closed form of ∫₀^∞ K₀(u)e^{−au} du = arccos(a)/√(1−a²), |a| < 1.
pub fn watson_laplace(a: f64) -> Result<f64> {
    if !(a.abs() < 1.0) {
        return Err(Error::domain("watson_laplace", format!("|a| must be < 1, got {a}")));
    }
    Ok(a.acos() / ((1.0 - a) * (1.0 + a)).sqrt())
}

/// Numerical ∫₀^∞ K₀(u)e^{−au} du, the quadrature side of [`watson_laplace`].
pub fn watson_laplace_quadrature(a: f64, quad: &QuadratureConfig) -> Result<f64> {
    if !(a > -1.0) {
        return Err(Error::domain("watson_laplace_quadrature", format!("a must be > -1, got {a}")));
    }
    integrate_k0_weighted(|u| -a * u, quad)
}

/// ln cosh z without overflow.
fn ln_cosh(z: f64) -> f64 {
    let z = z.abs();
    z + (0.5 * (1.0 + (-2.0 * z).exp())).ln()
}

/// (8/π²)∫₀^∞ K₀(2x sinh t) cosh(2νt) dt, evaluated through u = 2x sinh t.
pub fn nicholson_integral(nu: f64, x: f64, quad: &QuadratureConfig) -> Result<f64> {
    if !(nu >= 0.0) || !(x > 0.0) || !nu.is_finite() || !x.is_finite() {
        return Err(Error::domain("nicholson_integral", format!("need nu >= 0, x > 0; got nu = {nu}, x = {x}")));
    }
    if x <= nu {
        return Err(Error::Precondition(format!("Nicholson integral needs x > nu (x = {x}, nu = {nu})")));
    }
    let two_x = 2.0 * x;
    let integral = integrate_k0_weighted(
        |u| {
            let t = (u / two_x).asinh();
            ln_cosh(2.0 * nu * t) - 0.5 * (u * u + two_x * two_x).ln()
        },
        quad,
    )?;
    Ok(8.0 / (PI * PI) * integral)
}

/// Relative discrepancy between Nicholson's integral and J_ν²(x) + Y_ν²(x).
pub fn nicholson_check(nu: f64, x: f64, quad: &QuadratureConfig) -> Result<f64> {
    let lhs = nicholson_integral(nu, x, quad)?;
    let rhs = bessel_jy(nu, x)?.modulus_sq();
    Ok(((lhs - rhs) / rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn watson_closed_form_values() {
        assert!((watson_laplace(0.0).unwrap() - PI / 2.0).abs() < 1e-15);
        let expected = (2.0 * PI / 3.0) / 0.75f64.sqrt();
        assert!((watson_laplace(-0.5).unwrap() - expected).abs() < 1e-14);
        assert!((watson_laplace(-0.5).unwrap() - 2.418_399_152_312_290_5).abs() < 1e-12);
        assert!((watson_laplace(1.0 - 1e-8).unwrap() - 1.0).abs() < 1e-4);
        assert!(watson_laplace(1.0).is_err());
        assert!(watson_laplace(-1.0).is_err());
        assert!(watson_laplace(f64::NAN).is_err());
    }

    #[test]
    fn nicholson_needs_x_above_nu() {
        let q = QuadratureConfig::default();
        assert!(matches!(nicholson_check(3.0, 3.0, &q), Err(Error::Precondition(_))));
        assert!(nicholson_check(0.0, -1.0, &q).is_err());
    }

    #[test]
    fn nicholson_half_order_closed_form() {
        let q = QuadratureConfig::default();
        let lhs = nicholson_integral(0.5, 2.0, &q).unwrap();
        assert!(((lhs - 1.0 / PI) / (1.0 / PI)).abs() < 1e-9);
    }

    #[test]
    fn ln_cosh_matches_direct() {
        for &z in &[0.0, 0.3, -2.0, 10.0] {
            assert!((ln_cosh(z) - f64::cosh(z).ln()).abs() < 1e-14);
        }
        assert!((ln_cosh(1000.0) - (1000.0 - 2f64.ln())).abs() < 1e-12);
    }
}
