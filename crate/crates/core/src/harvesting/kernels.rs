//! Gaussian-switching time integrals in units where `T = 1`.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::specfun::faddeeva_w;
#[cfg(test)]
use crate::specfun::erfc_times_exp;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Ordered double time integral summed over both orderings,
/// `int dt1 int^{t1} dt2 [e^{i(Oa t1 + Ob t2)} chi_a(t1) chi_b(t2) + (a <-> b)] e^{-ik(t1-t2)}`,
/// for `chi_nu(t) = exp(-(t - t_nu)^2 / T^2)`.
///
/// The result underflows to zero once `T (Oa + Ob)` is a few tens; use
/// [`time_integral_scaled`] for the same quantity without that factor.
pub fn time_integral_closed(omega_a: f64, omega_b: f64, k: f64, t_a: f64, t_b: f64, t_width: f64) -> Result<Complex64> {
    if !(t_width > 0.0 && t_width.is_finite()) {
        return domain(format!("time_integral_closed: T = {t_width} must be positive"));
    }
    let s = (omega_a + omega_b) * t_width;
    let scaled = time_integral_scaled(
        omega_a * t_width,
        omega_b * t_width,
        k * t_width,
        t_a / t_width,
        t_b / t_width,
    )?;
    Ok(scaled * (-s * s / 8.0).exp() * t_width * t_width)
}

/// `exp((Oa + Ob)^2 / 8)` times the time integral at `T = 1`.
///
/// Follows the closed form with the two erfc terms folded into Faddeeva
/// functions so that no intermediate exponential overflows.
pub fn time_integral_scaled(omega_a: f64, omega_b: f64, k: f64, t_a: f64, t_b: f64) -> Result<Complex64> {
    if !(omega_a.is_finite() && omega_b.is_finite() && k.is_finite() && t_a.is_finite() && t_b.is_finite()) {
        return domain("time_integral: non-finite input");
    }
    // the integral is symmetric under exchanging the two atoms
    let (oa, ob, ta, tb) = if t_b >= t_a { (omega_a, omega_b, t_a, t_b) } else { (omega_b, omega_a, t_b, t_a) };
    let t = tb - ta;
    let delta = 0.5 * (oa - ob);
    let sigma = oa + ob;
    let z1 = c(delta - k, t) / SQRT_2;
    let z2 = c(delta + k, t) / SQRT_2;
    let pre = c(-0.5 * t * t, 0.5 * sigma * (ta + tb)).exp();
    let wpart = pre * (faddeeva_w(z1)? - faddeeva_w(z2)?);
    let gauss = c(-0.5 * (k + delta) * (k + delta), oa * ta + ob * tb - k * t).exp() * 2.0;
    Ok((wpart + gauss) * (0.5 * PI))
}

/// The part of [`time_integral_scaled`] that decays only algebraically in
/// `k`, continued to complex `k`. Requires `t_b >= t_a` after the caller's
/// ordering, which is enforced here by the same swap.
pub(crate) fn time_integral_algebraic(omega_a: f64, omega_b: f64, k: Complex64, t_a: f64, t_b: f64) -> Complex64 {
    let (oa, ob, ta, tb) = if t_b >= t_a { (omega_a, omega_b, t_a, t_b) } else { (omega_b, omega_a, t_b, t_a) };
    let t = tb - ta;
    let delta = 0.5 * (oa - ob);
    let sigma = oa + ob;
    let z1 = (c(delta, t) - k) / SQRT_2;
    let z2 = (c(delta, t) + k) / SQRT_2;
    let pre = c(-0.5 * t * t, 0.5 * sigma * (ta + tb)).exp();
    let w1 = faddeeva_w(z1).unwrap_or(Complex64::new(f64::NAN, f64::NAN));
    let w2 = faddeeva_w(z2).unwrap_or(Complex64::new(f64::NAN, f64::NAN));
    pre * (w1 - w2) * (0.5 * PI)
}

/// Bracket form for equal gaps: `(pi/2) e^{i Omega (t_a + t_b)}` times the
/// fused kernel `e^{-k^2/2} [E(k, t) + E(k, -t)]`, all at `T = 1` and with
/// `e^{-Omega^2/2}` removed.
pub(crate) fn equal_gap_bracket(omega: f64, k: f64, t_a: f64, t_b: f64) -> Result<Complex64> {
    let kern = crate::specfun::scaled_time_kernel(k, t_b - t_a, 1.0, 0.0)?;
    Ok(kern * c(0.0, omega * (t_a + t_b)).exp() * (0.5 * PI))
}

/// `chi_hat_a(Oa + k) conj(chi_hat_b(Ob + k))` with `e^{-(Oa^2 + Ob^2)/4}` removed (`T = 1`).
pub(crate) fn cross_time_factor(omega_a: f64, omega_b: f64, k: f64, t_a: f64, t_b: f64) -> Complex64 {
    let re = -0.5 * (omega_a + omega_b) * k - 0.5 * k * k;
    let im = (omega_a + k) * t_a - (omega_b + k) * t_b;
    c(re, im).exp() * PI
}

/// `|chi_hat(Omega + k)|^2` with `e^{-Omega^2/2}` removed (`T = 1`).
pub(crate) fn local_time_factor(omega: f64, k: f64) -> f64 {
    PI * (-omega * k - 0.5 * k * k).exp()
}

#[cfg(test)]
fn erfc_form(omega_a: f64, omega_b: f64, k: f64, t_a: f64, t_b: f64) -> Result<Complex64> {
    // literal transcription of the printed two-erfc closed form at T = 1,
    // shifted by (Oa + Ob)^2 / 8
    let t = t_b - t_a;
    let d2 = omega_a - omega_b;
    let z1 = c(2.0 * t, 2.0 * k - d2) / (2.0 * SQRT_2);
    let z2 = c(-2.0 * t, 2.0 * k + d2) / (2.0 * SQRT_2);
    let s = omega_a + omega_b;
    let p = c(
        (-2.0 * k * k + 2.0 * k * d2 - (omega_a * omega_a + omega_b * omega_b)) / 4.0 + s * s / 8.0,
        k * t + t_b * s - t * omega_a,
    );
    let q2 = p - c(k * d2, 2.0 * k * t);
    Ok((erfc_times_exp(z1, p)? + erfc_times_exp(z2, q2)?) * (0.5 * PI))
}
