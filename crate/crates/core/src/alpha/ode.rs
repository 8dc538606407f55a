//! Dormand–Prince 5(4) integration of a scalar ODE with a sign-change event.

use crate::error::{Error, Result};
use crate::roots::refine_bracket;

const C: [f64; 6] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0];
const A: [[f64; 5]; 6] = [
    [0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0],
];
const B: [f64; 6] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0];
// Fifth- minus fourth-order weights; the seventh stage is f at the new point.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

/// One step from (x, y) of size h: (new y, local error estimate). Non-finite
/// slopes propagate as NaN so the caller can reject the step.
fn dp_step<F: FnMut(f64, f64) -> f64>(f: &mut F, x: f64, y: f64, h: f64) -> (f64, f64) {
    let mut k = [0.0; 7];
    for s in 0..6 {
        let mut ys = y;
        for j in 0..s {
            ys += h * A[s][j] * k[j];
        }
        k[s] = f(x + C[s] * h, ys);
    }
    let mut y_new = y;
    for s in 0..6 {
        y_new += h * B[s] * k[s];
    }
    k[6] = f(x + h, y_new);
    let err: f64 = h * (0..7).map(|s| E[s] * k[s]).sum::<f64>();
    (y_new, err.abs())
}

/// Settings for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub(crate) struct Settings {
    /// Absolute local error allowed per step.
    pub atol: f64,
    /// Largest step.
    pub h_max: f64,
}

/// Result of one integration leg.
#[derive(Debug, Clone)]
pub(crate) struct Leg {
    /// Accepted points, starting with the initial point.
    pub points: Vec<(f64, f64)>,
    /// Set when the event function reached zero before `x_end`; that point
    /// is also the last entry of `points`.
    pub event: Option<(f64, f64)>,
}

/// Integrates y' = f(x, y) from (x_start, y_start) to x_end. If `event` is
/// given, integration stops at the first point where event(x, y) changes
/// sign from positive, located by re-stepping from the last accepted point.
pub(crate) fn integrate<F, G>(
    mut f: F,
    x_start: f64,
    y_start: f64,
    x_end: f64,
    settings: Settings,
    mut event: Option<G>,
) -> Result<Leg>
where
    F: FnMut(f64, f64) -> f64,
    G: FnMut(f64, f64) -> f64,
{
    let mut points = vec![(x_start, y_start)];
    let (mut x, mut y) = (x_start, y_start);
    if !(x_end > x_start) {
        return Ok(Leg { points, event: None });
    }
    let mut h = settings.h_max.min(1e-2 * (x_end - x_start));
    let mut g_prev = event.as_mut().map(|g| g(x, y));
    while x < x_end {
        let last = x_end - x <= h * (1.0 + 1e-12);
        let step = if last { x_end - x } else { h };
        let (y_new, err) = dp_step(&mut f, x, y, step);
        let ratio = err / settings.atol;
        if !y_new.is_finite() || !err.is_finite() || ratio > 1.0 {
            h = if ratio.is_finite() { step * (0.9 * ratio.powf(-0.2)).max(0.1) } else { 0.25 * step };
            if h < 1e-14 * x.abs().max(1.0) {
                return Err(Error::StepUnderflow { x });
            }
            continue;
        }
        let x_new = if last { x_end } else { x + step };
        if let (Some(g), Some(gp)) = (event.as_mut(), g_prev) {
            let g_new = g(x_new, y_new);
            if gp > 0.0 && g_new <= 0.0 {
                let (xe, ye) = locate_event(&mut f, g, x, y, step, settings.atol)?;
                points.push((xe, ye));
                return Ok(Leg { points, event: Some((xe, ye)) });
            }
            g_prev = Some(g_new);
        }
        x = x_new;
        y = y_new;
        points.push((x, y));
        let grow = if ratio > 0.0 { 0.9 * ratio.powf(-0.2) } else { 5.0 };
        h = (step * grow.clamp(0.2, 5.0)).min(settings.h_max);
    }
    Ok(Leg { points, event: None })
}

fn locate_event<F, G>(f: &mut F, g: &mut G, x: f64, y: f64, h: f64, atol: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64, f64) -> f64,
    G: FnMut(f64, f64) -> f64,
{
    let hit = refine_bracket(
        |s| {
            let (ys, _) = dp_step(f, x, y, s);
            Ok(g(x + s, ys))
        },
        0.0,
        h,
        (1e-3 * atol).max(f64::EPSILON * h),
    )?;
    let s = hit.root;
    let (ys, _) = dp_step(f, x, y, s);
    Ok((x + s, ys))
}
