//! One line per acceptance criterion; exits non-zero if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use annulus_core::alpha::{self, alpha_transcendental, corner_x0, solve_ivp};
use annulus_core::crosszeros::{first_zeros, mccann_bound, upper_bound, zero, DEFAULT_TOL};
use annulus_core::pleijel::{nodal_ratio_series, pleijel_estimate};
use annulus_core::specfun::{bessel_jy, nicholson_check, watson_laplace, watson_laplace_quadrature, QuadratureConfig};
use annulus_core::willis::{derivative_by_differences, willis_derivative};
use annulus_core::Result;

const TABLE: [(f64, f64); 7] = [
    (1.05, 0.636367),
    (1.1, 0.635656),
    (1.5, 0.619308),
    (2.0, 0.58654),
    (4.0, 0.492055),
    (6.0, 0.474482),
    (10.0, 0.465961),
];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Result<Outcome> {
    Ok(Outcome { passed, detail })
}

fn table_reproduction() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for (r, want) in TABLE {
        worst = worst.max((pleijel_estimate(r, 1e-6)?.pleijel_value - want).abs());
    }
    outcome(worst <= 5e-4, format!("max |computed - table| = {worst:.2e} (limit 5e-4)"))
}

fn half_integer_exactness() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for r in [1.5, 2.0, 4.0] {
        for z in first_zeros(0.5, r, 50, 1e-13)? {
            let exact = PI * z.k as f64 / (r - 1.0);
            worst = worst.max((z.value - exact).abs() / exact);
        }
    }
    outcome(worst <= 1e-10, format!("max relative error = {worst:.2e} (limit 1e-10)"))
}

fn bound_suite() -> Result<Outcome> {
    let mut min_lower = f64::INFINITY;
    let mut min_lower_zero_order = f64::INFINITY;
    let mut min_upper = f64::INFINITY;
    let mut min_order0 = f64::INFINITY;
    let mut count = 0;
    for r in [1.1, 1.5, 2.0, 4.0] {
        let base = first_zeros(0.0, r, 20, DEFAULT_TOL)?;
        for nu in [0.0, 0.5, 1.0, 2.5, 5.0, 10.3] {
            let zs = if nu == 0.0 { base.clone() } else { first_zeros(nu, r, 20, DEFAULT_TOL)? };
            for (z, z0) in zs.iter().zip(&base) {
                let lower = z.value - mccann_bound(z0.value, nu, r);
                if nu == 0.0 {
                    min_lower_zero_order = min_lower_zero_order.min(lower);
                    min_order0 = min_order0.min(PI * z.k as f64 / (r - 1.0) - z.value);
                } else {
                    min_lower = min_lower.min(lower);
                }
                min_upper = min_upper.min(upper_bound(nu, r, z.k) - z.value);
                count += 1;
            }
        }
    }
    let passed = min_lower > 0.0 && min_lower_zero_order >= 0.0 && min_upper > 0.0 && min_order0 > 0.0;
    outcome(
        passed,
        format!(
            "{count} zeros; min margins: lower {min_lower:.2e} (nu>0), lower {min_lower_zero_order:.1e} (nu=0, identity), upper {min_upper:.2e}, order-zero {min_order0:.2e}"
        ),
    )
}

fn willis_formula() -> Result<Outcome> {
    let q = QuadratureConfig::default();
    let mut worst: f64 = 0.0;
    for nu in [0.3, 1.0, 2.5, 7.0] {
        for r in [1.5, 2.0, 4.0] {
            for k in [1, 3, 10] {
                let a = zero(nu, r, k, 1e-13)?.value;
                let d = willis_derivative(nu, r, a, &q)?;
                let fd = derivative_by_differences(nu, r, k)?;
                worst = worst.max(((d - fd) / fd).abs());
            }
        }
    }
    outcome(worst <= 1e-5, format!("max relative disagreement = {worst:.2e} (limit 1e-5)"))
}

fn identity_suite() -> Result<Outcome> {
    let q = QuadratureConfig::default();
    let mut wr: f64 = 0.0;
    for nu in [0.0, 0.3, 1.0, 2.7, 10.0] {
        for x in [0.1, 1.0, 10.0, 100.0] {
            let b = bessel_jy(nu, x)?;
            let w = 2.0 / (PI * x);
            wr = wr.max(((b.j * b.yp - b.jp * b.y) - w).abs() / w);
        }
    }
    let mut ni: f64 = 0.0;
    for (nu, x) in [(0.0, 5.0), (1.0, 10.0), (0.5, 2.0), (0.0, 0.1), (2.7, 3.0), (10.0, 10.5), (0.3, 100.0)] {
        ni = ni.max(nicholson_check(nu, x, &q)?);
    }
    let mut wa: f64 = 0.0;
    for a in [-0.9, -0.5, 0.0, 0.5, 0.9, 0.99] {
        let closed = watson_laplace(a)?;
        wa = wa.max(((watson_laplace_quadrature(a, &q)? - closed) / closed).abs());
    }
    outcome(
        wr <= 1e-10 && ni <= 1e-8 && wa <= 1e-10,
        format!("wronskian {wr:.2e} (1e-10), nicholson {ni:.2e} (1e-8), watson {wa:.2e} (1e-10)"),
    )
}

fn limit_convergence() -> Result<Outcome> {
    let r = 2.0;
    let mut ok = true;
    let mut parts = Vec::new();
    for x in [0.5, 1.0, 2.0, 5.0] {
        let target = alpha_transcendental(r, x, 1e-13)?;
        let err = |k: usize| -> Result<f64> { Ok((zero(k as f64 * x, r, k, DEFAULT_TOL)?.value / k as f64 - target).abs()) };
        let (e8, e64) = (err(8)?, err(64)?);
        ok &= e64 < e8;
        parts.push(format!("x={x}: {e8:.1e}->{e64:.1e}"));
    }
    let scaled = [8usize, 16, 32, 64, 128]
        .iter()
        .map(|&k| Ok(k as f64 * (zero(0.0, r, k, 1e-12)?.value / k as f64 - PI / (r - 1.0)).abs()))
        .collect::<Result<Vec<f64>>>()?;
    let bounded = scaled.iter().all(|v| *v <= scaled[0]);
    ok &= bounded;
    parts.push(format!("x=0: k*err {:.2e}..{:.2e}", scaled[0], scaled[scaled.len() - 1]));
    outcome(ok, parts.join("; "))
}

fn dual_solvers() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    let mut corner: f64 = 0.0;
    for r in [1.1, 1.5, 2.0, 4.0, 10.0] {
        let x_max = alpha::default_x_max(r)?;
        let curve = solve_ivp(r, x_max, alpha::DEFAULT_TOL)?;
        corner = corner.max((curve.x0 - corner_x0(r)?).abs());
        for i in 1..=20 {
            let x = x_max * f64::from(i) / 20.0;
            worst = worst.max((curve.eval(x)? - alpha_transcendental(r, x, 1e-13)?).abs());
        }
    }
    outcome(
        worst <= 1e-6 && corner <= 1e-7,
        format!("max discrepancy {worst:.2e} (1e-6), corner error {corner:.2e} (1e-7)"),
    )
}

fn nodal_statistics() -> Result<Outcome> {
    let series = nodal_ratio_series(2.0, 19000, 19500, DEFAULT_TOL)?;
    let max = series.iter().map(|p| p.1).fold(0.0, f64::max);
    let all_below_one = series.iter().all(|p| p.1 <= 1.0);
    let below_bound = series.iter().filter(|p| p.1 < 0.58654).count();
    outcome(
        all_below_one && (0.5..=0.69166).contains(&max) && series.len() == 501,
        format!("window 19000..19500: max ratio {max:.4} in [0.5, 0.69166], {below_bound}/501 below 0.58654"),
    )
}

fn endpoint_sandwich() -> Result<Outcome> {
    let (lo, hi) = (0.4613019, 0.6366198);
    let v: Vec<f64> = [1.05, 10.0].iter().map(|&r| pleijel_estimate(r, 1e-6).map(|p| p.pleijel_value)).collect::<Result<_>>()?;
    outcome(v.iter().all(|&p| p > lo && p < hi), format!("R=1.05: {:.6}, R=10: {:.6} in ({lo}, {hi})", v[0], v[1]))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<Outcome>); 9] = [
        ("table reproduction", table_reproduction),
        ("half-integer exactness", half_integer_exactness),
        ("bound suite", bound_suite),
        ("willis formula", willis_formula),
        ("identity suite", identity_suite),
        ("limit-curve convergence", limit_convergence),
        ("dual alpha solvers", dual_solvers),
        ("nodal statistics", nodal_statistics),
        ("endpoint sandwich", endpoint_sandwich),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (status, detail) = match run() {
            Ok(o) if o.passed => ("PASS", o.detail),
            Ok(o) => ("FAIL", o.detail),
            Err(e) => ("FAIL", format!("error: {e}")),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("criterion {} [{status}] {name}: {detail} ({:.2?})", i + 1, start.elapsed());
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
