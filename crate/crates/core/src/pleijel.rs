//! Dirichlet spectrum of the annulus 1 < |x| < R, nodal counts of the
//! separated eigenfunctions, and the Pleijel value 8/(R²−1)·sup x/α(x)².

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alpha::{self, AlphaCurve};
use crate::crosszeros::{self, mccann_bound};
use crate::error::{Error, Result};
use crate::roots::golden_max;

/// Nodal domains of the eigenfunction with angular index ν and radial
/// index n: n rings for ν = 0, otherwise 2ν sectors in each of n rings.
pub fn nodal_count(nu: u32, n: u32) -> u64 {
    if nu == 0 {
        u64::from(n)
    } else {
        2 * u64::from(nu) * u64::from(n)
    }
}

/// One eigenvalue a_{ν,n}² at global position `k`. An entry with ν ≥ 1
/// stands for a cos/sin pair and appears at two consecutive positions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub k: usize,
    pub nu: u32,
    pub n: u32,
    pub zero: f64,
    pub eigenvalue: f64,
    pub multiplicity: u8,
    pub nodal_count: u64,
}

#[derive(Debug, Clone, Copy)]
struct Mode {
    nu: u32,
    n: u32,
    zero: f64,
}

impl Mode {
    fn eigenvalue(&self) -> f64 {
        self.zero * self.zero
    }
}

fn check_r(func: &'static str, r: f64) -> Result<()> {
    if !r.is_finite() || !(r > 1.0) {
        return Err(Error::domain(func, format!("R must be finite and > 1, got {r}")));
    }
    Ok(())
}

/// Every mode with eigenvalue ≤ `cutoff`, sorted by (eigenvalue, ν, n).
fn modes_below(r: f64, cutoff: f64, tol: f64) -> Result<Vec<Mode>> {
    let limit = cutoff.sqrt();
    let a01 = crosszeros::zero(0.0, r, 1, tol)?.value;
    if a01 > limit {
        return Ok(Vec::new());
    }
    // a_{ν,1} ≥ √(a_{0,1}² + ν²/R²), so larger orders have nothing below the cutoff.
    let nu_max = (r * ((limit - a01) * (limit + a01)).sqrt()).floor() as u32;
    let per_order = (0..=nu_max)
        .into_par_iter()
        .map(|nu| {
            let nuf = f64::from(nu);
            if mccann_bound(a01, nuf, r) > limit {
                return Ok(Vec::new());
            }
            let zeros = crosszeros::zeros_up_to_from(nuf, r, limit, tol, a01)?;
            Ok(zeros.into_iter().map(|z| Mode { nu, n: z.k as u32, zero: z.value }).collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let mut modes: Vec<Mode> = per_order.into_iter().flatten().filter(|m| m.eigenvalue() <= cutoff).collect();
    modes.sort_by(|a, b| {
        a.eigenvalue().total_cmp(&b.eigenvalue()).then(a.nu.cmp(&b.nu)).then(a.n.cmp(&b.n))
    });
    Ok(modes)
}

fn flatten(modes: &[Mode], count: usize) -> Vec<SpectrumEntry> {
    let mut out = Vec::with_capacity(count.min(2 * modes.len()));
    for m in modes {
        let multiplicity = if m.nu == 0 { 1 } else { 2 };
        for _ in 0..multiplicity {
            if out.len() == count {
                return out;
            }
            out.push(SpectrumEntry {
                k: out.len() + 1,
                nu: m.nu,
                n: m.n,
                zero: m.zero,
                eigenvalue: m.eigenvalue(),
                multiplicity,
                nodal_count: nodal_count(m.nu, m.n),
            });
        }
    }
    out
}

/// All eigenvalues ≤ `cutoff`, one row per global index.
pub fn spectrum_below(r: f64, cutoff: f64, tol: f64) -> Result<Vec<SpectrumEntry>> {
    check_r("spectrum_below", r)?;
    if !(cutoff > 0.0) || !cutoff.is_finite() {
        return Err(Error::domain("spectrum_below", format!("cutoff must be > 0, got {cutoff}")));
    }
    Ok(flatten(&modes_below(r, cutoff, tol)?, usize::MAX))
}

/// λ at which the two-term Weyl count (R²−1)λ/4 − (R+1)√λ/2 reaches `count`.
fn weyl_cutoff(r: f64, count: usize) -> f64 {
    let a = (r * r - 1.0) / 4.0;
    let b = (r + 1.0) / 2.0;
    let s = (b + (b * b + 4.0 * a * count as f64).sqrt()) / (2.0 * a);
    s * s
}

/// The first `count` eigenvalues, one row per global index k = 1..=count.
pub fn enumerate_spectrum(r: f64, count: usize, tol: f64) -> Result<Vec<SpectrumEntry>> {
    check_r("enumerate_spectrum", r)?;
    if count == 0 {
        return Err(Error::domain("enumerate_spectrum", "count must be >= 1"));
    }
    let mut cutoff = 1.05 * weyl_cutoff(r, count) + 10.0;
    for _ in 0..20 {
        let modes = modes_below(r, cutoff, tol)?;
        let total: usize = modes.iter().map(|m| if m.nu == 0 { 1 } else { 2 }).sum();
        if total >= count {
            return Ok(flatten(&modes, count));
        }
        cutoff *= 1.25;
    }
    Err(Error::NoConvergence {
        what: "enumerate_spectrum",
        detail: format!("fewer than {count} eigenvalues below {cutoff}"),
    })
}

/// (k, nodal count / k) for the global indices k_from..=k_to.
pub fn nodal_ratio_series(r: f64, k_from: usize, k_to: usize, tol: f64) -> Result<Vec<(usize, f64)>> {
    if k_from == 0 || k_from > k_to {
        return Err(Error::domain("nodal_ratio_series", format!("need 1 <= k_from <= k_to, got {k_from}..{k_to}")));
    }
    let spectrum = enumerate_spectrum(r, k_to, tol)?;
    Ok(spectrum[k_from - 1..]
        .iter()
        .map(|e| (e.k, e.nodal_count as f64 / e.k as f64))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PleijelEstimate {
    #[serde(rename = "R")]
    pub r: f64,
    pub x_star: f64,
    /// x*/α(x*)²
    pub sup_value: f64,
    /// 8/(R²−1)·sup_value
    pub pleijel_value: f64,
    /// Always set: eigenvalues of multiplicity above two cannot be ruled
    /// out, so the value is certified only as a lower bound.
    pub is_lower_bound_only: bool,
    /// Right end of the α curve used in the search.
    pub x_max: f64,
}

const GRID_POINTS: usize = 200;
const ENLARGEMENTS: usize = 3;

/// Maximises x/α(x)² over the sampled range of `curve`: a log-spaced grid
/// from 1e−3·x₀, then golden-section refinement around the best point.
/// Returns None when the best grid point is the right end.
fn sup_on_curve(curve: &AlphaCurve, tol: f64) -> Result<Option<(f64, f64)>> {
    let x_max = curve.x_max();
    let g = |x: f64| -> Result<f64> {
        let a = curve.eval(x)?;
        Ok(x / (a * a))
    };
    let lo = (1e-3 * curve.x0).min(1e-3 * x_max);
    let ratio = (x_max / lo).ln() / (GRID_POINTS - 1) as f64;
    let grid: Vec<f64> = (0..GRID_POINTS).map(|i| (lo.ln() + ratio * i as f64).exp().min(x_max)).collect();
    let values = grid.iter().map(|&x| g(x)).collect::<Result<Vec<_>>>()?;
    let best = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap_or(Ordering::Equal))
        .map(|(i, _)| i)
        .expect("grid is non-empty");
    if best == GRID_POINTS - 1 {
        return Ok(None);
    }
    let a = grid[best.saturating_sub(1)];
    let b = grid[best + 1];
    Ok(Some(golden_max(g, a, b, tol)?))
}

/// The Pleijel value of the annulus with outer radius R.
pub fn pleijel_estimate(r: f64, tol: f64) -> Result<PleijelEstimate> {
    check_r("pleijel_estimate", r)?;
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::domain("pleijel_estimate", format!("tol must be > 0, got {tol}")));
    }
    let curve_tol = tol.min(alpha::DEFAULT_TOL);
    let mut x_max = alpha::default_x_max(r)?;
    for _ in 0..=ENLARGEMENTS {
        let curve = alpha::solve_ivp(r, x_max, curve_tol)?;
        if let Some((x_star, sup_value)) = sup_on_curve(&curve, tol)? {
            return Ok(PleijelEstimate {
                r,
                x_star,
                sup_value,
                pleijel_value: 8.0 / ((r - 1.0) * (r + 1.0)) * sup_value,
                is_lower_bound_only: true,
                x_max,
            });
        }
        x_max *= 4.0;
    }
    Err(Error::NoConvergence {
        what: "pleijel_estimate",
        detail: format!("maximum of x/alpha(x)^2 still at the right end x = {x_max} for R = {r}"),
    })
}
