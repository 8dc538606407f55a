//! Self-checks grouped into suites. Each check records the measured
//! quantity, the limit it is held to and the resulting margin.

use std::f64::consts::PI;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alpha::{self, alpha_bounds, alpha_transcendental, corner_x0, solve_ivp};
use crate::crosszeros::{self, eval_cross, first_zeros};
use crate::error::{Error, Result};
use crate::pleijel::pleijel_estimate;
use crate::specfun::{bessel_jy, nicholson_check, watson_laplace, watson_laplace_quadrature, QuadratureConfig};
use crate::willis::{derivative_by_differences, f_k, f_limit, willis_derivative, ScaledPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Bounds,
    Convergence,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identities" => Ok(Suite::Identities),
            "bounds" => Ok(Suite::Bounds),
            "convergence" => Ok(Suite::Convergence),
            "all" => Ok(Suite::All),
            other => Err(Error::domain("Suite", format!("unknown suite '{other}'"))),
        }
    }
}

/// How a measured value relates to its limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// value ≤ limit
    AtMost,
    /// value < limit
    Below,
    /// value > limit
    Above,
    /// value ≥ limit
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub value: f64,
    pub limit: f64,
    pub relation: Relation,
    /// Distance to failure, positive when the check passes strictly.
    pub margin: f64,
    pub passed: bool,
}

impl Check {
    fn new(suite: Suite, name: impl Into<String>, value: f64, relation: Relation, limit: f64) -> Self {
        let margin = match relation {
            Relation::AtMost | Relation::Below => limit - value,
            Relation::AtLeast | Relation::Above => value - limit,
        };
        let passed = match relation {
            Relation::AtMost | Relation::AtLeast => margin >= 0.0,
            Relation::Below | Relation::Above => margin > 0.0,
        };
        Check { suite, name: name.into(), value, limit, relation, margin, passed }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn run(suite: Suite) -> Result<Report> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        checks.extend(identities()?);
    }
    if matches!(suite, Suite::Bounds | Suite::All) {
        checks.extend(bounds()?);
    }
    if matches!(suite, Suite::Convergence | Suite::All) {
        checks.extend(convergence()?);
    }
    Ok(Report { checks })
}

pub const WRONSKIAN_ORDERS: [f64; 5] = [0.0, 0.3, 1.0, 2.7, 10.0];
pub const WRONSKIAN_ARGS: [f64; 4] = [0.1, 1.0, 10.0, 100.0];
pub const NICHOLSON_POINTS: [(f64, f64); 6] = [(0.0, 5.0), (1.0, 10.0), (0.5, 2.0), (2.7, 3.0), (10.0, 10.5), (0.3, 100.0)];
pub const WATSON_POINTS: [f64; 6] = [-0.9, -0.5, 0.0, 0.5, 0.9, 0.99];
pub const WILLIS_ORDERS: [f64; 4] = [0.3, 1.0, 2.5, 7.0];
pub const WILLIS_RADII: [f64; 3] = [1.5, 2.0, 4.0];
pub const WILLIS_INDICES: [usize; 3] = [1, 3, 10];
pub const BOUND_ORDERS: [f64; 6] = [0.0, 0.5, 1.0, 2.5, 5.0, 10.3];
pub const BOUND_RADII: [f64; 4] = [1.1, 1.5, 2.0, 4.0];
pub const BOUND_MAX_K: usize = 20;
pub const HALF_ORDER_RADII: [f64; 3] = [1.5, 2.0, 4.0];
pub const HALF_ORDER_MAX_K: usize = 50;
pub const ALPHA_RADII: [f64; 5] = [1.1, 1.5, 2.0, 4.0, 10.0];
pub const TABLE: [(f64, f64); 7] = [
    (1.05, 0.636367),
    (1.1, 0.635656),
    (1.5, 0.619308),
    (2.0, 0.58654),
    (4.0, 0.492055),
    (6.0, 0.474482),
    (10.0, 0.465961),
];
pub const PLEIJEL_ENDPOINTS: (f64, f64) = (0.4613019, 0.6366198);

/// |W − 2/(πx)| / (2/(πx)) for W = J Y' − J' Y.
pub fn wronskian_error(nu: f64, x: f64) -> Result<f64> {
    let b = bessel_jy(nu, x)?;
    let expected = 2.0 / (PI * x);
    Ok(((b.j * b.yp - b.jp * b.y) - expected).abs() / expected)
}

/// Largest relative deviation of a_{1/2,k} from πk/(R−1), k = 1..=k_max.
pub fn half_order_error(r: f64, k_max: usize, tol: f64) -> Result<f64> {
    let zs = first_zeros(0.5, r, k_max, tol)?;
    Ok(zs
        .iter()
        .map(|z| {
            let exact = PI * z.k as f64 / (r - 1.0);
            (z.value - exact).abs() / exact
        })
        .fold(0.0, f64::max))
}

/// Largest relative deviation of the ODE curve from the closed-form solver
/// at `points` evenly spaced abscissae in (0, x_max], plus the corner error.
pub fn dual_solver_discrepancy(r: f64, tol: f64, points: usize) -> Result<(f64, f64)> {
    let x_max = alpha::default_x_max(r)?;
    let curve = solve_ivp(r, x_max, tol)?;
    let mut worst: f64 = 0.0;
    for i in 1..=points {
        let x = x_max * i as f64 / points as f64;
        let d = (curve.eval(x)? - alpha_transcendental(r, x, 1e-3 * tol)?).abs();
        worst = worst.max(d);
    }
    Ok((worst, (curve.x0 - corner_x0(r)?).abs()))
}

fn identities() -> Result<Vec<Check>> {
    let s = Suite::Identities;
    let q = QuadratureConfig::default();
    let mut out = Vec::new();
    for &nu in &WRONSKIAN_ORDERS {
        for &x in &WRONSKIAN_ARGS {
            out.push(Check::new(s, format!("wronskian nu={nu} x={x}"), wronskian_error(nu, x)?, Relation::AtMost, 1e-10));
        }
    }
    for &(nu, x) in &NICHOLSON_POINTS {
        out.push(Check::new(s, format!("nicholson nu={nu} x={x}"), nicholson_check(nu, x, &q)?, Relation::AtMost, 1e-8));
    }
    for &a in &WATSON_POINTS {
        let closed = watson_laplace(a)?;
        let quad = watson_laplace_quadrature(a, &q)?;
        out.push(Check::new(s, format!("watson a={a}"), ((quad - closed) / closed).abs(), Relation::AtMost, 1e-10));
    }
    for &(r, z) in &[(2.0, 0.7), (2.0, PI / 2.0), (1.5, 3.3), (4.0, 10.1)] {
        let f = eval_cross(0.5, r, z)?;
        let closed = -(2.0 / (PI * z * r.sqrt())) * ((r - 1.0) * z).sin();
        out.push(Check::new(s, format!("half-order cross R={r} z={z}"), ((f - closed) / closed).abs(), Relation::AtMost, 1e-10));
    }
    for &r in &HALF_ORDER_RADII {
        let e = half_order_error(r, HALF_ORDER_MAX_K, 1e-13)?;
        out.push(Check::new(s, format!("half-order zeros R={r} k<=50"), e, Relation::AtMost, 1e-10));
    }
    let grid: Vec<(f64, f64, usize)> = WILLIS_ORDERS
        .iter()
        .flat_map(|&nu| WILLIS_RADII.iter().flat_map(move |&r| WILLIS_INDICES.iter().map(move |&k| (nu, r, k))))
        .collect();
    let willis_checks = grid
        .par_iter()
        .map(|&(nu, r, k)| {
            let a = crosszeros::zero(nu, r, k, 1e-13)?.value;
            let d = willis_derivative(nu, r, a, &q)?;
            let fd = derivative_by_differences(nu, r, k)?;
            Ok(Check::new(s, format!("willis nu={nu} R={r} k={k}"), ((d - fd) / fd).abs(), Relation::AtMost, 1e-5))
        })
        .collect::<Result<Vec<_>>>()?;
    out.extend(willis_checks);
    for &r in &ALPHA_RADII {
        let (d, corner) = dual_solver_discrepancy(r, alpha::DEFAULT_TOL, 20)?;
        out.push(Check::new(s, format!("alpha solvers R={r}"), d, Relation::AtMost, 1e-6));
        out.push(Check::new(s, format!("alpha corner R={r}"), corner, Relation::AtMost, 1e-7));
    }
    Ok(out)
}

fn bounds() -> Result<Vec<Check>> {
    let s = Suite::Bounds;
    let tol = crosszeros::DEFAULT_TOL;
    let grid: Vec<(f64, f64)> =
        BOUND_ORDERS.iter().flat_map(|&nu| BOUND_RADII.iter().map(move |&r| (nu, r))).collect();
    let per_pair = grid
        .par_iter()
        .map(|&(nu, r)| {
            let base = first_zeros(0.0, r, BOUND_MAX_K, tol)?;
            let zs = if nu == 0.0 { base.clone() } else { first_zeros(nu, r, BOUND_MAX_K, tol)? };
            let mut v = Vec::new();
            for (z, z0) in zs.iter().zip(&base) {
                let rep = crosszeros::bound_report(nu, r, z.k, z.value, z0.value);
                let tag = format!("nu={nu} R={r} k={}", z.k);
                // The lower bound is an identity at ν = 0.
                let rel = if nu == 0.0 { Relation::AtLeast } else { Relation::Above };
                v.push(Check::new(s, format!("lower {tag}"), rep.zero, rel, rep.lower));
                v.push(Check::new(s, format!("upper {tag}"), rep.zero, Relation::Below, rep.upper));
                if nu == 0.0 {
                    v.push(Check::new(s, format!("order-zero upper {tag}"), rep.zero, Relation::Below, PI * z.k as f64 / (r - 1.0)));
                }
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out: Vec<Check> = per_pair.into_iter().flatten().collect();

    for &r in &ALPHA_RADII {
        let x_max = alpha::default_x_max(r)?;
        for i in 1..=20 {
            let x = x_max * f64::from(i) / 20.0;
            let a = alpha_transcendental(r, x, 1e-13)?;
            let b = alpha_bounds(r, x)?;
            let tag = format!("R={r} x={x:.4}");
            out.push(Check::new(s, format!("alpha lower {tag}"), a, Relation::Above, b.lower));
            out.push(Check::new(s, format!("alpha iota upper {tag}"), a, Relation::Below, b.upper_iota));
            out.push(Check::new(s, format!("iota vs linear {tag}"), b.upper_iota, Relation::AtMost, b.upper_linear));
        }
    }

    let q = QuadratureConfig::default();
    for &(x, y) in &[(0.0, PI), (0.5, 1.0), (1.0, 2.0), (2.0, 1.5), (3.0, 2.0), (1.0, 0.9)] {
        let p = ScaledPoint::new(x, y, 2.0)?;
        let limit = f_limit(&p)?;
        let tag = format!("x={x} y={y}");
        for k in [1u32, 4, 16, 64] {
            out.push(Check::new(s, format!("F_k majorant k={k} {tag}"), f_k(&p, k, &q)?, Relation::Below, p.majorant()));
        }
        if x > 0.0 {
            out.push(Check::new(s, format!("F lower {tag}"), limit, Relation::Above, x / (4.0 * y)));
            if p.in_e1() {
                out.push(Check::new(s, format!("F above 1/R {tag}"), limit, Relation::Above, 0.5));
                out.push(Check::new(s, format!("F below y/x {tag}"), limit, Relation::Below, y / x));
            }
        }
    }
    Ok(out)
}

fn convergence() -> Result<Vec<Check>> {
    let s = Suite::Convergence;
    let r = 2.0;
    let tol = crosszeros::DEFAULT_TOL;
    let mut out = Vec::new();
    for &x in &[0.5, 1.0, 2.0, 5.0] {
        let target = alpha_transcendental(r, x, 1e-13)?;
        let err = |k: usize| -> Result<f64> {
            let kf = k as f64;
            Ok((crosszeros::zero(kf * x, r, k, tol)?.value / kf - target).abs())
        };
        let (e8, e64) = (err(8)?, err(64)?);
        out.push(Check::new(s, format!("limit curve x={x} err(64) < err(8)"), e64, Relation::Below, e8));
    }
    let scaled = [8usize, 16, 32, 64, 128]
        .iter()
        .map(|&k| {
            let a = crosszeros::zero(0.0, r, k, 1e-12)?.value;
            Ok(k as f64 * (a / k as f64 - PI / (r - 1.0)).abs())
        })
        .collect::<Result<Vec<_>>>()?;
    for (i, v) in scaled.iter().enumerate().skip(1) {
        out.push(Check::new(s, format!("order-zero rate k={}", 8 << i), *v, Relation::AtMost, scaled[0]));
    }

    let q = QuadratureConfig::default();
    let points = [(0.5, 1.0), (1.0, 2.0), (2.0, 3.0), (0.5, 3.0), (2.0, 1.5), (3.0, 2.0), (4.0, 3.0), (1.5, 1.0)];
    for &(x, y) in &points {
        let p = ScaledPoint::new(x, y, r)?;
        let limit = f_limit(&p)?;
        let e4 = (f_k(&p, 4, &q)? - limit).abs();
        let e64 = (f_k(&p, 64, &q)? - limit).abs();
        out.push(Check::new(s, format!("F_k x={x} y={y} err(64) < err(4)"), e64, Relation::Below, e4));
    }

    for &(r, want) in &TABLE {
        let p = pleijel_estimate(r, 1e-6)?;
        out.push(Check::new(s, format!("pleijel R={r}"), (p.pleijel_value - want).abs(), Relation::AtMost, 5e-4));
        if r == 1.05 || r == 10.0 {
            out.push(Check::new(s, format!("pleijel R={r} above lower endpoint"), p.pleijel_value, Relation::Above, PLEIJEL_ENDPOINTS.0));
            out.push(Check::new(s, format!("pleijel R={r} below upper endpoint"), p.pleijel_value, Relation::Below, PLEIJEL_ENDPOINTS.1));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations() {
        assert!(Check::new(Suite::All, "a", 1.0, Relation::AtMost, 1.0).passed);
        assert!(!Check::new(Suite::All, "b", 1.0, Relation::Below, 1.0).passed);
        assert!(Check::new(Suite::All, "c", 2.0, Relation::Above, 1.0).passed);
        assert_eq!(Check::new(Suite::All, "d", 0.5, Relation::AtMost, 1.0).margin, 0.5);
    }

    #[test]
    fn suite_names() {
        assert_eq!("bounds".parse::<Suite>().unwrap(), Suite::Bounds);
        assert!("everything".parse::<Suite>().is_err());
    }
}
