//! Bessel functions of real order: J_ν, Y_ν (ν ≥ 0, x > 0) and K₀.
//!
//! J and Y are evaluated together by Steed's method: a continued fraction
//! (CF1) for J'_ν/J_ν run downward to a reduced order μ, then either
//! Temme's series (x < 2) or the complex continued fraction CF2 (x ≥ 2)
//! for Y_μ, Y_{μ+1}, normalised through the Wronskian. Y is recurred
//! upward from μ to ν, which is the stable direction.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const EPS: f64 = 1.0e-16;
const FPMIN: f64 = 1.0e-300;
const RESCALE_AT: f64 = 1.0e250;
const XMIN: f64 = 2.0;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Taylor coefficients of 1/Γ(1+μ) about μ = 0.
const RGAMMA1P: [f64; 26] = [
    1.0,
    0.577_215_664_901_532_860_6,
    -0.655_878_071_520_253_881_1,
    -0.042_002_635_034_095_235_53,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_75,
    -0.009_621_971_527_876_973_562,
    0.007_218_943_246_663_099_542,
    -0.001_165_167_591_859_065_112,
    -0.000_215_241_674_114_950_972_8,
    0.000_128_050_282_388_116_186_2,
    -0.000_020_134_854_780_788_238_66,
    -0.000_001_250_493_482_142_670_657,
    0.000_001_133_027_231_981_695_882,
    -2.056_338_416_977_607_103e-7,
    6.116_095_104_481_415_818e-9,
    5.002_007_644_469_222_930e-9,
    -1.181_274_570_487_020_145e-9,
    1.043_426_711_691_100_510e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783e-14,
    -5.348_122_539_423_017_982e-15,
    1.226_778_628_238_260_790e-15,
    -1.181_259_301_697_458_770e-16,
];

/// J_ν, Y_ν and their derivatives at one (ν, x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselJY {
    pub j: f64,
    pub y: f64,
    pub jp: f64,
    pub yp: f64,
}

impl BesselJY {
    /// J² + Y², the squared modulus.
    pub fn modulus_sq(&self) -> f64 {
        self.j * self.j + self.y * self.y
    }

    /// √(J² + Y²) without intermediate overflow.
    pub fn modulus(&self) -> f64 {
        self.j.hypot(self.y)
    }
}

fn check_order(func: &'static str, nu: f64) -> Result<()> {
    if !nu.is_finite() || nu < 0.0 {
        return Err(Error::domain(func, format!("order must be finite and >= 0, got {nu}")));
    }
    Ok(())
}

/// J_ν(x) for ν ≥ 0, x ≥ 0.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check_order("bessel_j", nu)?;
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain("bessel_j", format!("argument must be finite and >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    Ok(bessel_jy(nu, x)?.j)
}

/// Y_ν(x) for ν ≥ 0, x > 0.
pub fn bessel_y(nu: f64, x: f64) -> Result<f64> {
    check_order("bessel_y", nu)?;
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain("bessel_y", format!("argument must be finite and > 0, got {x}")));
    }
    Ok(bessel_jy(nu, x)?.y)
}

/// 1/Γ(1+μ), 1/Γ(1−μ) and Temme's auxiliary combinations
/// gam1 = (1/Γ(1−μ) − 1/Γ(1+μ))/(2μ), gam2 = (1/Γ(1−μ) + 1/Γ(1+μ))/2.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let mut odd = 0.0; // Σ_{j odd} c_j μ^{j-1}
    let mut even = 0.0; // Σ_{j even} c_j μ^j
    let mu2 = mu * mu;
    for (i, &c) in RGAMMA1P.iter().enumerate().rev() {
        if i % 2 == 0 {
            even = even * mu2 + c;
        } else {
            odd = odd * mu2 + c;
        }
    }
    // Horner above builds Σ c_{2m} μ^{2m} and Σ c_{2m+1} μ^{2m}.
    let gam1 = -odd;
    let gam2 = even;
    let gampl = gam2 - mu * gam1;
    let gammi = gam2 + mu * gam1;
    (gam1, gam2, gampl, gammi)
}

/// J_ν(x), Y_ν(x), J'_ν(x), Y'_ν(x) for ν ≥ 0, x > 0.
pub fn bessel_jy(nu: f64, x: f64) -> Result<BesselJY> {
    check_order("bessel_jy", nu)?;
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain("bessel_jy", format!("argument must be finite and > 0, got {x}")));
    }

    let nl = if x < XMIN {
        (nu + 0.5).floor()
    } else {
        (nu - x + 1.5).floor().max(0.0)
    };
    let nl_steps = nl as usize;
    let mu = nu - nl;
    let mu2 = mu * mu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1: J'_ν / J_ν by modified Lentz.
    let maxit = 20_000 + 4 * x as usize;
    let mut isign = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for i in 1..=maxit {
        // b_i = 2(ν+i)/x, formed directly: accumulating 2/x loses ~i ulps.
        let b = 2.0 * (nu + i as f64) * xi;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            what: "bessel_jy CF1",
            detail: format!("nu = {nu}, x = {x}"),
        });
    }

    // Downward recurrence of the unnormalised J from ν to μ.
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let mut rjl1 = rjl;
    let mut rjp1 = rjpl;
    for l in (1..=nl_steps).rev() {
        let order = mu + l as f64;
        let rjtemp = order * xi * rjl + rjpl;
        rjpl = (order - 1.0) * xi * rjtemp - rjl;
        rjl = rjtemp;
        if rjl.abs() > RESCALE_AT {
            rjl /= RESCALE_AT;
            rjpl /= RESCALE_AT;
            rjl1 /= RESCALE_AT;
            rjp1 /= RESCALE_AT;
        }
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let (rjmu, mut rymu, mut ry1);
    if x < XMIN {
        // Temme's series for Y_μ, Y_{μ+1}.
        let x2 = 0.5 * x;
        let pimu = PI * mu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = mu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
        let mut ff = 2.0 / PI * fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let e = e.exp();
        let mut p = e / (gampl * PI);
        let mut q = 1.0 / (e * PI * gammi);
        let pimu2 = 0.5 * pimu;
        let fact3 = if pimu2.abs() < EPS { 1.0 } else { pimu2.sin() / pimu2 };
        let r = PI * pimu2 * fact3 * fact3;
        let mut c = 1.0;
        let d = -x2 * x2;
        let mut sum = ff + r * q;
        let mut sum1 = p;
        let mut converged = false;
        for i in 1..=10_000 {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - mu2);
            c *= d / fi;
            p /= fi - mu;
            q /= fi + mu;
            let del = c * (ff + r * q);
            sum += del;
            let del1 = c * p - fi * del;
            sum1 += del1;
            if del.abs() < (1.0 + sum.abs()) * EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence {
                what: "bessel_jy Temme series",
                detail: format!("nu = {nu}, x = {x}"),
            });
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        let rymup = mu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2: p + iq = (J'_μ + iY'_μ)/(J_μ + iY_μ), Steed's algorithm.
        let mut a = 0.25 - mu2;
        let mut p = -0.5 * xi;
        let mut q = 1.0;
        let br = 2.0 * x;
        let mut bi = 2.0;
        let mut fact = a * xi / (p * p + q * q);
        let mut cr = br + q * fact;
        let mut ci = bi + p * fact;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let mut dlr = cr * dr - ci * di;
        let mut dli = cr * di + ci * dr;
        let mut temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        let mut converged = false;
        for i in 2..=100_000 {
            a += 2.0 * (i - 1) as f64;
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if dr.abs() + di.abs() < FPMIN {
                dr = FPMIN;
            }
            fact = a / (cr * cr + ci * ci);
            cr = br + cr * fact;
            ci = bi - ci * fact;
            if cr.abs() + ci.abs() < FPMIN {
                cr = FPMIN;
            }
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (dlr - 1.0).abs() + dli.abs() < EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence {
                what: "bessel_jy CF2",
                detail: format!("nu = {nu}, x = {x}"),
            });
        }
        let gam = (p - f) / q;
        let mag = (w / ((p - f) * gam + q)).sqrt();
        rjmu = mag.copysign(rjl);
        rymu = rjmu * gam;
        let rymup = rymu * (p + q / gam);
        ry1 = mu * xi * rymu - rymup;
    }

    let scale = rjmu / rjl;
    let j = rjl1 * scale;
    let jp = rjp1 * scale;
    for i in 1..=nl_steps {
        let rytemp = (mu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    let y = rymu;
    let yp = nu * xi * rymu - ry1;
    Ok(BesselJY { j, y, jp, yp })
}

/// e^x K₀(x) for x > 0 (no domain check).
pub(crate) fn k0_scaled_unchecked(x: f64) -> f64 {
    if x <= XMIN {
        k0_series(x) * x.exp()
    } else {
        k0_cf2_scaled(x)
    }
}

fn k0_series(x: f64) -> f64 {
    // K₀ = −(ln(x/2) + γ) I₀ + Σ_{k≥1} (x²/4)^k/(k!)² H_k
    let t = 0.25 * x * x;
    let mut term = 1.0;
    let mut i0 = 1.0;
    let mut tail = 0.0;
    let mut harmonic = 0.0;
    for k in 1..200 {
        let fk = k as f64;
        term *= t / (fk * fk);
        harmonic += 1.0 / fk;
        i0 += term;
        tail += term * harmonic;
        if term * harmonic < EPS * tail.abs().max(f64::MIN_POSITIVE) && term < EPS * i0 {
            break;
        }
    }
    -((0.5 * x).ln() + EULER_GAMMA) * i0 + tail
}

/// Steed's CF2 for K₀, returning e^x K₀(x); valid for x ≥ 2.
fn k0_cf2_scaled(x: f64) -> f64 {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..=10_000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    (PI / (2.0 * x)).sqrt() / s
}

/// K₀(x), the modified Bessel function of the second kind of order zero.
pub fn bessel_k0(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain("bessel_k0", format!("argument must be finite and > 0, got {x}")));
    }
    if x <= XMIN {
        Ok(k0_series(x))
    } else {
        Ok(k0_cf2_scaled(x) * (-x).exp())
    }
}
