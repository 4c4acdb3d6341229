//! Faddeeva function and the complex complementary error function.
//!
//! The core evaluator follows the Poppe-Wijers scheme: a Taylor series near
//! the origin, Gautschi's truncated Laplace continued fraction in the
//! intermediate region, and the plain continued fraction far out.

use num_complex::Complex64;

use crate::error::{Result, VhError};

const TWO_OVER_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;
const MAX_EXP: f64 = 708.5;

/// `w(z) = exp(-z^2) erfc(-iz)`.
///
/// In the lower half plane the reflection `w(z) = 2 exp(-z^2) - w(-z)` is
/// applied; if `exp(-z^2)` is not representable an overflow error is returned.
pub fn faddeeva_w(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(VhError::Domain(format!("faddeeva_w: non-finite argument {z}")));
    }
    if z.im >= 0.0 {
        return Ok(w_upper(z));
    }
    let zz = z * z;
    if -zz.re > MAX_EXP {
        return Err(VhError::Overflow(format!(
            "exp(-z^2) overflows at z = {z}; use the scaled path"
        )));
    }
    Ok(2.0 * (-zz).exp() - w_upper(-z))
}

/// `w(z)` for `Im z >= 0`.
pub(crate) fn w_upper(z: Complex64) -> Complex64 {
    debug_assert!(z.im >= 0.0);
    let xabs = z.re.abs();
    let yabs = z.im;
    let (u, v) = if xabs.max(yabs) > 1.0e150 {
        // w ~ i / (sqrt(pi) z), written to avoid squaring
        let r = 1.0 / (std::f64::consts::PI.sqrt() * Complex64::new(xabs, yabs));
        let iw = Complex64::new(0.0, 1.0) * r;
        (iw.re, iw.im)
    } else {
        w_first_quadrant(xabs, yabs)
    };
    if z.re < 0.0 { Complex64::new(u, -v) } else { Complex64::new(u, v) }
}

fn w_first_quadrant(xabs: f64, yabs: f64) -> (f64, f64) {
    let x = xabs / 6.3;
    let y = yabs / 4.4;
    let mut qrho = x * x + y * y;
    let xquad = xabs * xabs - yabs * yabs;
    let yquad = 2.0 * xabs * yabs;

    if qrho < 0.085264 {
        // power series of erf, multiplied back by exp(-z^2)
        qrho = (1.0 - 0.85 * y) * qrho.sqrt();
        let n = (6.0 + 72.0 * qrho).round() as usize;
        let mut j = 2 * n + 1;
        let mut xsum = 1.0 / j as f64;
        let mut ysum = 0.0;
        for i in (1..=n).rev() {
            j -= 2;
            let fi = i as f64;
            let xaux = (xsum * xquad - ysum * yquad) / fi;
            ysum = (xsum * yquad + ysum * xquad) / fi;
            xsum = xaux + 1.0 / j as f64;
        }
        let u1 = -TWO_OVER_SQRT_PI * (xsum * yabs + ysum * xabs) + 1.0;
        let v1 = TWO_OVER_SQRT_PI * (xsum * xabs - ysum * yabs);
        let daux = (-xquad).exp();
        let u2 = daux * yquad.cos();
        let v2 = -daux * yquad.sin();
        return (u1 * u2 - v1 * v2, u1 * v2 + v1 * u2);
    }

    let (h, kapn, nu) = if qrho > 1.0 {
        let rho = qrho.sqrt();
        (0.0, 0usize, (3.0 + 1442.0 / (26.0 * rho + 77.0)) as usize)
    } else {
        let q = (1.0 - y) * (1.0 - qrho).sqrt();
        (1.88 * q, (7.0 + 34.0 * q).round() as usize, (16.0 + 26.0 * q).round() as usize)
    };
    let h2 = 2.0 * h;
    let use_h = h > 0.0;
    let mut qlambda = if use_h { h2.powi(kapn as i32) } else { 0.0 };
    let (mut rx, mut ry, mut sx, mut sy) = (0.0, 0.0, 0.0, 0.0);
    for n in (0..=nu).rev() {
        let np1 = (n + 1) as f64;
        let tx = yabs + h + np1 * rx;
        let ty = xabs - np1 * ry;
        let c = 0.5 / (tx * tx + ty * ty);
        rx = c * tx;
        ry = c * ty;
        if use_h && n <= kapn {
            let tx = qlambda + sx;
            sx = rx * tx - ry * sy;
            sy = ry * tx + rx * sy;
            qlambda /= h2;
        }
    }
    let (mut u, v) = if use_h {
        (TWO_OVER_SQRT_PI * sx, TWO_OVER_SQRT_PI * sy)
    } else {
        (TWO_OVER_SQRT_PI * rx, TWO_OVER_SQRT_PI * ry)
    };
    if yabs == 0.0 {
        u = (-xabs * xabs).exp();
    }
    (u, v)
}

/// `erfc(z) * exp(q)` without forming either factor separately.
///
/// For `Re z >= 0` this is `exp(q - z^2) w(iz)`; otherwise the reflection
/// `erfc(z) = 2 - erfc(-z)` gives `2 exp(q) - exp(q - z^2) w(-iz)`.
/// Both exponentials are only evaluated once combined, so large cancelling
/// exponents never overflow.
pub fn erfc_times_exp(z: Complex64, q: Complex64) -> Result<Complex64> {
    let i = Complex64::new(0.0, 1.0);
    let e = q - z * z;
    if z.re >= 0.0 {
        Ok(checked_exp(e)? * w_upper(i * z))
    } else {
        Ok(2.0 * checked_exp(q)? - checked_exp(e)? * w_upper(-i * z))
    }
}

/// `exp(z)` with an overflow error instead of an infinity.
pub fn checked_exp(z: Complex64) -> Result<Complex64> {
    if z.re > MAX_EXP {
        return Err(VhError::Overflow(format!("exp overflows at exponent {z}")));
    }
    if z.re < -745.2 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(z.exp())
}

/// Complex complementary error function.
pub fn erfc_complex(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(VhError::Domain(format!("erfc_complex: non-finite argument {z}")));
    }
    erfc_times_exp(z, Complex64::new(0.0, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn w_at_origin_is_one() {
        let w = faddeeva_w(c(0.0, 0.0)).unwrap();
        assert!((w - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn w_on_imaginary_axis() {
        // e * erfc(1)
        let w = faddeeva_w(c(0.0, 1.0)).unwrap();
        assert!(rel(w, c(0.427_583_576_155_807, 0.0)) < 1e-13);
    }

    #[test]
    fn far_real_axis_matches_leading_asymptote() {
        let x = 1.0e6;
        let w = faddeeva_w(c(x, 0.0)).unwrap();
        let asym = c(0.0, 1.0) / (std::f64::consts::PI.sqrt() * x);
        assert!(rel(w, asym) < 1e-9);
    }

    #[test]
    fn lower_half_plane_overflow_is_reported() {
        assert!(matches!(faddeeva_w(c(0.0, -40.0)), Err(VhError::Overflow(_))));
        assert!(faddeeva_w(c(30.0, -5.0)).is_ok());
    }

    #[test]
    fn erfc_real_values() {
        assert!((erfc_complex(c(1.0, 0.0)).unwrap().re - 0.157_299_207_050_285_13).abs() < 1e-15);
        assert!((erfc_complex(c(0.0, 0.0)).unwrap() - c(1.0, 0.0)).norm() < 1e-16);
    }

    #[test]
    fn erfc_reflection_at_sample_point() {
        let z = c(0.3, 0.7);
        let s = erfc_complex(z).unwrap() + erfc_complex(-z).unwrap();
        assert!((s - c(2.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn erfc_large_imaginary_part_stays_finite_when_representable() {
        // |erfc| ~ exp(y^2 - x^2): x = y + 0.01 keeps it of order one
        let z = c(1.0e4 + 0.01, 1.0e4);
        let v = erfc_complex(z).unwrap();
        assert!(v.re.is_finite() && v.im.is_finite());
        assert!(matches!(erfc_complex(c(1.0, 1.0e4)), Err(VhError::Overflow(_))));
    }
}
