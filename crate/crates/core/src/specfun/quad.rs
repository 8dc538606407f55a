//! Adaptive Gauss–Kronrod quadrature for K₀-weighted integrals on [0, ∞).

use std::collections::BinaryHeap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::bessel::k0_scaled_unchecked;
use crate::error::{Error, Result};

/// Truncation and tolerance parameters for the K₀ Laplace-type integrals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    /// Target relative error.
    pub rel_tol: f64,
    /// Budget of integrand evaluations.
    pub max_nodes: usize,
    /// Upper limit of the first integration block; the integral is
    /// continued past it only while the integrand has not decayed.
    pub truncation_u: f64,
}

impl QuadratureConfig {
    /// Builds a config whose truncation point is the first u where the
    /// K₀ asymptote √(π/2u)e^{−u} drops below `rel_tol`.
    pub fn new(rel_tol: f64, max_nodes: usize) -> Result<Self> {
        if !(rel_tol > 0.0) || !rel_tol.is_finite() {
            return Err(Error::domain("QuadratureConfig", format!("rel_tol must be > 0, got {rel_tol}")));
        }
        let cfg = QuadratureConfig { rel_tol, max_nodes, truncation_u: truncation_for(rel_tol) };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !self.rel_tol.is_finite() {
            return Err(Error::domain("QuadratureConfig", "rel_tol must be positive"));
        }
        if self.max_nodes < 16 {
            return Err(Error::domain("QuadratureConfig", "max_nodes must be >= 16"));
        }
        if !(self.truncation_u > 0.0) || !self.truncation_u.is_finite() {
            return Err(Error::domain("QuadratureConfig", "truncation_u must be positive"));
        }
        if k0_asymptote(self.truncation_u) >= self.rel_tol {
            return Err(Error::domain(
                "QuadratureConfig",
                format!(
                    "K0 tail estimate {:e} at truncation_u = {} is not below rel_tol = {:e}",
                    k0_asymptote(self.truncation_u),
                    self.truncation_u,
                    self.rel_tol
                ),
            ));
        }
        Ok(())
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig::new(1e-10, 4096).expect("default quadrature config is valid")
    }
}

/// √(π/2u)·e^{−u}, the large-argument form of K₀.
pub fn k0_asymptote(u: f64) -> f64 {
    (PI / (2.0 * u)).sqrt() * (-u).exp()
}

fn truncation_for(rel_tol: f64) -> f64 {
    // k0_asymptote is decreasing; bisect on [1e-3, 800].
    let (mut lo, mut hi) = (1e-3, 800.0);
    if k0_asymptote(lo) < rel_tol {
        return lo;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if k0_asymptote(mid) < rel_tol {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// One 15-point Kronrod panel: (estimate, error estimate).
fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut resk = fc * WGK[7];
    let mut resg = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let fsum = f(center - dx) + f(center + dx);
        resk += WGK[j] * fsum;
        if j % 2 == 1 {
            resg += WG[j / 2] * fsum;
        }
    }
    (resk * half, ((resk - resg) * half).abs())
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Adaptive integration of `f` over [a, b] until the summed error estimate
/// is below `abs_tol`. Charges 15 evaluations per panel against `budget`.
pub(crate) fn adaptive<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    abs_tol: f64,
    budget: &mut usize,
) -> Result<(f64, f64)> {
    let mut heap = BinaryHeap::new();
    let take = |budget: &mut usize| -> Result<()> {
        if *budget < 15 {
            return Err(Error::NoConvergence {
                what: "quadrature",
                detail: "evaluation budget (max_nodes) exhausted".into(),
            });
        }
        *budget -= 15;
        Ok(())
    };
    take(budget)?;
    let (value, err) = gk15(f, a, b);
    if !value.is_finite() {
        return Err(Error::NoConvergence { what: "quadrature", detail: format!("non-finite integrand on [{a}, {b}]") });
    }
    heap.push(Panel { a, b, value, err });
    let mut total_err = err;
    while total_err > abs_tol {
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Panel cannot be split further in double precision.
            heap.push(worst);
            break;
        }
        take(budget)?;
        take(budget)?;
        let (v1, e1) = gk15(f, worst.a, mid);
        let (v2, e2) = gk15(f, mid, worst.b);
        total_err += e1 + e2 - worst.err;
        heap.push(Panel { a: worst.a, b: mid, value: v1, err: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, err: e2 });
        if heap.len() % 64 == 0 {
            // Resum to keep round-off out of the running error total.
            total_err = heap.iter().map(|p| p.err).sum();
        }
    }
    let total: f64 = heap.iter().map(|p| p.value).sum();
    let total_err: f64 = heap.iter().map(|p| p.err).sum();
    if !total.is_finite() {
        return Err(Error::NoConvergence { what: "quadrature", detail: "non-finite result".into() });
    }
    Ok((total, total_err))
}

/// ∫₀^∞ K₀(u)·exp(log_weight(u)) du.
///
/// The weight is passed in log form so that K₀'s exponential decay and a
/// growing weight are combined before exponentiation. The first block is
/// [0, truncation_u]; further blocks of doubling length are added until a
/// block contributes less than `rel_tol` of the running total and the
/// integrand is decreasing at its right edge. An integrand that has not
/// decayed after 16 doublings is reported as non-convergent.
pub fn integrate_k0_weighted<W: Fn(f64) -> f64>(log_weight: W, cfg: &QuadratureConfig) -> Result<f64> {
    cfg.validate()?;
    let mut integrand = |u: f64| -> f64 {
        if u <= 0.0 {
            return 0.0;
        }
        let lw = log_weight(u);
        k0_scaled_unchecked(u) * (lw - u).exp()
    };
    let mut budget = cfg.max_nodes;

    // A single panel fixes the scale for the absolute error target; it is
    // accurate to a few percent even with the log singularity at 0.
    let (rough, _) = gk15(&mut integrand, 0.0, cfg.truncation_u);
    budget = budget.saturating_sub(15);
    let scale = |t: f64| cfg.rel_tol * 0.25 * t.abs();
    let (mut total, _) = adaptive(&mut integrand, 0.0, cfg.truncation_u, scale(rough), &mut budget)?;

    let mut lo = cfg.truncation_u;
    let mut prev_edge = integrand(lo).abs();
    for _ in 0..16 {
        let hi = 2.0 * lo;
        let (piece, _) = adaptive(&mut integrand, lo, hi, scale(total), &mut budget)?;
        total += piece;
        let edge = integrand(hi).abs();
        if piece.abs() <= cfg.rel_tol * 0.1 * total.abs() && edge <= prev_edge {
            return Ok(total);
        }
        prev_edge = edge;
        lo = hi;
    }
    Err(Error::NoConvergence {
        what: "quadrature",
        detail: format!("tail still significant at u = {lo}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_invariants() {
        let cfg = QuadratureConfig::default();
        assert_eq!(cfg.rel_tol, 1e-10);
        assert_eq!(cfg.max_nodes, 4096);
        assert!(k0_asymptote(cfg.truncation_u) < cfg.rel_tol);
        assert!(k0_asymptote(cfg.truncation_u * 0.99) >= cfg.rel_tol);
    }

    #[test]
    fn invalid_configs_rejected() {
        assert!(QuadratureConfig::new(0.0, 4096).is_err());
        assert!(QuadratureConfig::new(1e-8, 8).is_err());
        let bad = QuadratureConfig { rel_tol: 1e-10, max_nodes: 4096, truncation_u: 5.0 };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn k0_total_integral_is_half_pi() {
        let v = integrate_k0_weighted(|_| 0.0, &QuadratureConfig::default()).unwrap();
        assert!((v - PI / 2.0).abs() < 1e-11);
    }

    #[test]
    fn polynomial_gk_is_exact() {
        let mut budget = 1000;
        let mut f = |x: f64| x.powi(6) - 3.0 * x * x;
        let (v, _) = adaptive(&mut f, -1.0, 2.0, 1e-14, &mut budget).unwrap();
        let exact = (128.0 + 1.0) / 7.0 - (8.0 + 1.0);
        assert!((v - exact).abs() < 1e-13);
    }

    #[test]
    fn growing_integrand_is_rejected() {
        let err = integrate_k0_weighted(|u| 1.5 * u, &QuadratureConfig::default()).unwrap_err();
        assert!(matches!(err, Error::NoConvergence { .. }));
    }

    #[test]
    fn tiny_budget_reports_exhaustion() {
        let cfg = QuadratureConfig { max_nodes: 16, ..QuadratureConfig::default() };
        assert!(integrate_k0_weighted(|_| 0.0, &cfg).is_err());
    }
}
