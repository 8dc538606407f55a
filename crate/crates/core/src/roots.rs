//! Scalar root bracketing and golden-section search.

use crate::error::{Error, Result};

/// A root enclosed by a sign-change interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracketed {
    pub root: f64,
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
}

/// Refines a sign-change bracket [lo, hi] of `f` until its width is at most
/// `tol`, returning the midpoint of the final bracket.
///
/// Each step tries an Illinois-modified secant point and falls back to
/// bisection whenever the bracket failed to halve over the previous two
/// steps, so the enclosure shrinks at least geometrically.
pub fn refine_bracket<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<Bracketed>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    if fa == 0.0 {
        return Ok(Bracketed { root: a, lo: a, hi: a, iterations: 0 });
    }
    if fb == 0.0 {
        return Ok(Bracketed { root: b, lo: b, hi: b, iterations: 0 });
    }
    if fa.signum() == fb.signum() || !fa.is_finite() || !fb.is_finite() {
        return Err(Error::NoBracket { lo: a, hi: b });
    }

    // Width below which the bracket cannot shrink further in f64.
    let floor = 4.0 * f64::EPSILON * a.abs().max(b.abs());
    let tol = tol.max(floor);
    let mut side = 0i8;
    let mut widths = [b - a, b - a];
    let mut iterations = 0;
    while b - a > tol {
        iterations += 1;
        if iterations > 400 {
            return Err(Error::NoConvergence { what: "refine_bracket", detail: format!("[{a}, {b}]") });
        }
        let width = b - a;
        let mut x = if width > 0.5 * widths[0] {
            0.5 * (a + b)
        } else {
            (a * fb - b * fa) / (fb - fa)
        };
        // Keep the trial point strictly inside, away from the endpoints.
        let guard = 0.01 * width;
        if !(x > a + guard && x < b - guard) {
            x = x.clamp(a + guard, b - guard);
        }
        widths = [widths[1], width];
        let fx = f(x)?;
        if fx == 0.0 {
            return Ok(Bracketed { root: x, lo: x, hi: x, iterations });
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
            if side == -1 {
                fb *= 0.5;
            }
            side = -1;
        } else {
            b = x;
            fb = fx;
            if side == 1 {
                fa *= 0.5;
            }
            side = 1;
        }
    }
    Ok(Bracketed { root: 0.5 * (a + b), lo: a, hi: b, iterations })
}

/// Maximises a unimodal `f` on [lo, hi] by golden-section search to width `tol`.
/// Returns (argmax, max).
pub fn golden_max<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    let floor = 4.0 * f64::EPSILON * a.abs().max(b.abs());
    let tol = tol.max(floor);
    let mut iterations = 0;
    while b - a > tol {
        iterations += 1;
        if iterations > 500 {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
    }
    Ok(if fc >= fd { (c, fc) } else { (d, fd) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt2() {
        let r = refine_bracket(|x| Ok(x * x - 2.0), 0.0, 2.0, 1e-14).unwrap();
        assert!((r.root - 2f64.sqrt()).abs() < 1e-14);
        assert!(r.lo <= r.root && r.root <= r.hi);
        assert!(r.hi - r.lo <= 1e-14);
        assert!(r.iterations < 30);
    }

    #[test]
    fn flat_then_steep_still_converges() {
        let f = |x: f64| Ok((x - 0.3).powi(9) + 1e-12 * (x - 0.3));
        let r = refine_bracket(f, -1.0, 1.0, 1e-12).unwrap();
        assert!((r.root - 0.3).abs() < 1e-12);
    }

    #[test]
    fn rejects_no_sign_change() {
        assert!(matches!(refine_bracket(|x| Ok(x * x + 1.0), -1.0, 1.0, 1e-8), Err(Error::NoBracket { .. })));
    }

    #[test]
    fn exact_zero_endpoint() {
        let r = refine_bracket(|x| Ok(x - 1.0), 1.0, 3.0, 1e-12).unwrap();
        assert_eq!(r.root, 1.0);
    }

    #[test]
    fn tolerance_below_ulp_is_clamped() {
        let r = refine_bracket(|x| Ok(x - 1000.1), 1000.0, 1001.0, 1e-20).unwrap();
        assert!((r.root - 1000.1).abs() < 1e-12);
    }

    #[test]
    fn golden_finds_parabola_peak() {
        let (x, v) = golden_max(|x| Ok(-(x - 1.25) * (x - 1.25) + 3.0), 0.0, 4.0, 1e-10).unwrap();
        assert!((x - 1.25).abs() < 1e-6);
        assert!((v - 3.0).abs() < 1e-15);
    }
}
