//! Shape-preserving cubic Hermite interpolation.

/// Value at `x` of the cubic Hermite piece on [x0, x1] with end values
/// y0, y1 and end slopes d0, d1, after Fritsch–Carlson limiting of the slopes
/// so that monotone data yields a monotone piece.
pub(crate) fn monotone_hermite(x0: f64, x1: f64, y0: f64, y1: f64, d0: f64, d1: f64, x: f64) -> f64 {
    let h = x1 - x0;
    if h <= 0.0 {
        return y0;
    }
    let secant = (y1 - y0) / h;
    let (mut d0, mut d1) = (d0, d1);
    if secant == 0.0 {
        d0 = 0.0;
        d1 = 0.0;
    } else {
        let a = d0 / secant;
        let b = d1 / secant;
        if a < 0.0 {
            d0 = 0.0;
        }
        if b < 0.0 {
            d1 = 0.0;
        }
        let (a, b) = (a.max(0.0), b.max(0.0));
        let norm = a * a + b * b;
        if norm > 9.0 {
            let tau = 3.0 / norm.sqrt();
            d0 = tau * a * secant;
            d1 = tau * b * secant;
        }
    }
    let t = (x - x0) / h;
    let t2 = t * t;
    let t3 = t2 * t;
    let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    let h10 = t3 - 2.0 * t2 + t;
    let h01 = -2.0 * t3 + 3.0 * t2;
    let h11 = t3 - t2;
    h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1
}
