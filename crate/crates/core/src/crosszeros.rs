//! The Bessel cross-product f_{ν,R}(z) = J_ν(Rz)Y_ν(z) − J_ν(z)Y_ν(Rz) and its
//! positive zeros a_{ν,k}.
//!
//! Zeros are located by scanning the normalised cross-product
//! f / (M_ν(z)·M_ν(Rz)), M² = J² + Y², for sign changes. Writing
//! J_ν + iY_ν = M e^{iθ}, the normalised value is sin(θ(z) − θ(Rz)) and the
//! phase gap θ(Rz) − θ(z) grows monotonically with slope below √(R² − 1),
//! so a step of π/(4√(R² − 1)) advances it by at most about π/4 and cannot
//! skip a zero.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::refine_bracket;
use crate::specfun::bessel_jy;

/// Smallest supported argument; Y_ν diverges at 0.
pub const Z_MIN: f64 = 1e-8;

/// Default absolute tolerance on zeros.
pub const DEFAULT_TOL: f64 = 1e-10;

/// One computed zero a_{ν,k} of f_{ν,R}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossZero {
    pub nu: f64,
    #[serde(rename = "R")]
    pub r: f64,
    pub k: usize,
    pub value: f64,
    /// |f_{ν,R}(value)|
    pub residual: f64,
    /// Final sign-change interval.
    pub bracket: (f64, f64),
}

fn check_params(func: &'static str, nu: f64, r: f64) -> Result<()> {
    if !nu.is_finite() || nu < 0.0 {
        return Err(Error::domain(func, format!("nu must be finite and >= 0, got {nu}")));
    }
    if !r.is_finite() || !(r > 1.0) {
        return Err(Error::domain(func, format!("R must be finite and > 1, got {r}")));
    }
    Ok(())
}

fn check_arg(func: &'static str, z: f64) -> Result<()> {
    if !z.is_finite() || z < Z_MIN {
        return Err(Error::domain(func, format!("z must be finite and >= {Z_MIN}, got {z}")));
    }
    Ok(())
}

/// f_{ν,R}(z) = J_ν(Rz)Y_ν(z) − J_ν(z)Y_ν(Rz).
pub fn eval_cross(nu: f64, r: f64, z: f64) -> Result<f64> {
    check_params("eval_cross", nu, r)?;
    check_arg("eval_cross", z)?;
    let inner = bessel_jy(nu, z)?;
    let outer = bessel_jy(nu, r * z)?;
    Ok(outer.j * inner.y - inner.j * outer.y)
}

/// f_{ν,R}(z) / (M_ν(z) M_ν(Rz)), bounded by 1 in magnitude and of the same
/// sign as f.
pub fn eval_cross_normalized(nu: f64, r: f64, z: f64) -> Result<f64> {
    check_params("eval_cross_normalized", nu, r)?;
    check_arg("eval_cross_normalized", z)?;
    normalized_unchecked(nu, r, z)
}

fn normalized_unchecked(nu: f64, r: f64, z: f64) -> Result<f64> {
    let inner = bessel_jy(nu, z)?;
    let outer = bessel_jy(nu, r * z)?;
    let (mi, mo) = (inner.modulus(), outer.modulus());
    if !mi.is_finite() || !mo.is_finite() || mi == 0.0 || mo == 0.0 {
        return Err(Error::domain(
            "eval_cross_normalized",
            format!("Bessel values out of double range at nu = {nu}, z = {z}"),
        ));
    }
    Ok((outer.j / mo) * (inner.y / mi) - (inner.j / mi) * (outer.y / mo))
}

/// Scan step used for sign-change detection.
pub fn scan_step(r: f64) -> f64 {
    PI / (4.0 * (r * r - 1.0).sqrt())
}

/// πk/(R−1) + πν/(2R), the strict upper bound on a_{ν,k}.
pub fn upper_bound(nu: f64, r: f64, k: usize) -> f64 {
    PI * k as f64 / (r - 1.0) + PI * nu / (2.0 * r)
}

/// √(a_{0,k}² + ν²/R²), the lower bound on a_{ν,k} given a_{0,k}.
pub fn mccann_bound(a0k: f64, nu: f64, r: f64) -> f64 {
    (a0k * a0k + nu * nu / (r * r)).sqrt()
}

/// A point strictly below a_{ν,1} from which sign changes are counted.
fn scan_start(nu: f64, r: f64, a01: f64) -> f64 {
    if nu == 0.0 {
        Z_MIN
    } else {
        (mccann_bound(a01, nu, r) - scan_step(r)).max(Z_MIN)
    }
}

/// Sign-change intervals of the normalised cross-product on [start, end],
/// sampled at `step`. Stops after `max_count` intervals.
fn scan_intervals(nu: f64, r: f64, start: f64, end: f64, step: f64, max_count: usize) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    let mut z0 = start;
    let mut f0 = normalized_unchecked(nu, r, z0)?;
    let mut i = 0usize;
    while z0 < end && out.len() < max_count {
        i += 1;
        let z1 = (start + i as f64 * step).min(end);
        let f1 = normalized_unchecked(nu, r, z1)?;
        if f0 == 0.0 {
            // Landed exactly on a zero: widen to the neighbouring samples.
            out.push((z0 - 0.5 * step, z1));
        } else if f1 != 0.0 && f0.signum() != f1.signum() {
            out.push((z0, z1));
        }
        z0 = z1;
        f0 = f1;
    }
    Ok(out)
}

/// Sign-change scan with the half-step recount check: if the count at step
/// h disagrees with the count at h/2 over the same range, retry at h/2.
fn certified_intervals(nu: f64, r: f64, start: f64, end: f64, max_count: usize) -> Result<Vec<(f64, f64)>> {
    let mut step = scan_step(r);
    for _ in 0..6 {
        let coarse = scan_intervals(nu, r, start, end, step, max_count)?;
        let stop = coarse.last().map_or(end, |iv| iv.1);
        let fine = scan_intervals(nu, r, start, stop, 0.5 * step, usize::MAX)?;
        if fine.len() == coarse.len() {
            return Ok(coarse);
        }
        step *= 0.5;
    }
    Err(Error::NoConvergence {
        what: "sign-change scan",
        detail: format!("scan counts never stabilised for nu = {nu}, R = {r}"),
    })
}

fn polish(nu: f64, r: f64, k: usize, interval: (f64, f64), tol: f64) -> Result<CrossZero> {
    let b = refine_bracket(|z| normalized_unchecked(nu, r, z), interval.0, interval.1, tol)?;
    let residual = eval_cross(nu, r, b.root)?.abs();
    Ok(CrossZero { nu, r, k, value: b.root, residual, bracket: (b.lo, b.hi) })
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::domain("crosszeros", format!("tol must be > 0, got {tol}")));
    }
    Ok(())
}

/// a_{0,1}, needed to start scans for ν > 0 below the first zero.
fn first_zero_order0(r: f64, tol: f64) -> Result<f64> {
    Ok(zero(0.0, r, 1, tol)?.value)
}

/// The k-th positive zero a_{ν,k} of f_{ν,R}, to absolute accuracy `tol`.
pub fn zero(nu: f64, r: f64, k: usize, tol: f64) -> Result<CrossZero> {
    check_params("zero", nu, r)?;
    check_tol(tol)?;
    if k == 0 {
        return Err(Error::domain("zero", "k must be >= 1"));
    }
    let a01 = if nu == 0.0 { 0.0 } else { first_zero_order0(r, tol)? };
    zero_from(nu, r, k, tol, a01)
}

fn zero_from(nu: f64, r: f64, k: usize, tol: f64, a01: f64) -> Result<CrossZero> {
    let start = scan_start(nu, r, a01);
    let upper = upper_bound(nu, r, k);
    let intervals = certified_intervals(nu, r, start, upper, k)?;
    if intervals.len() < k {
        return Err(Error::MissingZeros { expected: k, found: intervals.len(), upper });
    }
    polish(nu, r, k, intervals[k - 1], tol)
}

/// The first `count` zeros a_{ν,1}, …, a_{ν,count}.
pub fn first_zeros(nu: f64, r: f64, count: usize, tol: f64) -> Result<Vec<CrossZero>> {
    check_params("first_zeros", nu, r)?;
    check_tol(tol)?;
    if count == 0 {
        return Ok(Vec::new());
    }
    let a01 = if nu == 0.0 { 0.0 } else { first_zero_order0(r, tol)? };
    let upper = upper_bound(nu, r, count);
    let intervals = certified_intervals(nu, r, scan_start(nu, r, a01), upper, count)?;
    if intervals.len() < count {
        return Err(Error::MissingZeros { expected: count, found: intervals.len(), upper });
    }
    intervals
        .par_iter()
        .enumerate()
        .map(|(i, &iv)| polish(nu, r, i + 1, iv, tol))
        .collect()
}

/// All zeros a_{ν,k} ≤ `limit`, in increasing order with consecutive k.
pub fn zeros_up_to(nu: f64, r: f64, limit: f64, tol: f64) -> Result<Vec<CrossZero>> {
    check_params("zeros_up_to", nu, r)?;
    check_tol(tol)?;
    if !(limit > 0.0) || !limit.is_finite() {
        return Err(Error::domain("zeros_up_to", format!("limit must be > 0, got {limit}")));
    }
    let a01 = if nu == 0.0 { 0.0 } else { first_zero_order0(r, tol)? };
    zeros_up_to_from(nu, r, limit, tol, a01)
}

pub(crate) fn zeros_up_to_from(nu: f64, r: f64, limit: f64, tol: f64, a01: f64) -> Result<Vec<CrossZero>> {
    let start = scan_start(nu, r, a01);
    if limit <= start {
        return Ok(Vec::new());
    }
    // Every k with upper_bound(ν, R, k) ≤ limit has a_{ν,k} < limit.
    let guaranteed = (((limit - PI * nu / (2.0 * r)) * (r - 1.0) / PI).floor().max(0.0)) as usize;
    let intervals = certified_intervals(nu, r, start, limit, usize::MAX)?;
    if intervals.len() < guaranteed {
        return Err(Error::MissingZeros { expected: guaranteed, found: intervals.len(), upper: limit });
    }
    let mut zeros = intervals
        .par_iter()
        .enumerate()
        .map(|(i, &iv)| polish(nu, r, i + 1, iv, tol))
        .collect::<Result<Vec<_>>>()?;
    zeros.retain(|z| z.value <= limit);
    Ok(zeros)
}

/// Both sides of the zero bounds, with margins (positive when satisfied).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub nu: f64,
    #[serde(rename = "R")]
    pub r: f64,
    pub k: usize,
    pub zero: f64,
    /// √(a_{0,k}² + ν²/R²)
    pub lower: f64,
    /// zero − lower; exactly 0 for ν = 0.
    pub lower_margin: f64,
    /// πk/(R−1) + πν/(2R)
    pub upper: f64,
    /// upper − zero
    pub upper_margin: f64,
    /// πk/(R−1) − a_{0,k}, reported for ν = 0 only.
    pub order0_margin: Option<f64>,
}

impl BoundReport {
    /// All bounds satisfied: the lower bound with equality allowed at ν = 0,
    /// the upper bounds strictly.
    pub fn holds(&self) -> bool {
        let lower_ok = if self.nu == 0.0 { self.lower_margin >= 0.0 } else { self.lower_margin > 0.0 };
        lower_ok && self.upper_margin > 0.0 && self.order0_margin.map_or(true, |m| m > 0.0)
    }
}

/// Evaluates the lower bound √(a_{0,k}² + ν²/R²), the upper bound
/// πk/(R−1) + πν/(2R), and for ν = 0 the bound a_{0,k} < πk/(R−1).
pub fn check_bounds(nu: f64, r: f64, k: usize, tol: f64) -> Result<BoundReport> {
    let a0k = zero(0.0, r, k, tol)?;
    let z = if nu == 0.0 { a0k } else { zero_from(nu, r, k, tol, zero(0.0, r, 1, tol)?.value)? };
    Ok(bound_report(nu, r, k, z.value, a0k.value))
}

/// Bound margins for a zero `zero` = a_{ν,k} given a_{0,k}.
pub fn bound_report(nu: f64, r: f64, k: usize, zero: f64, a0k: f64) -> BoundReport {
    let lower = mccann_bound(a0k, nu, r);
    let upper = upper_bound(nu, r, k);
    BoundReport {
        nu,
        r,
        k,
        zero,
        lower,
        lower_margin: zero - lower,
        upper,
        upper_margin: upper - zero,
        order0_margin: (nu == 0.0).then(|| PI * k as f64 / (r - 1.0) - a0k),
    }
}
