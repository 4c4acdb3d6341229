//! Special functions and quadrature for Gaussian-damped momentum integrals.

mod bessel;
pub mod contour;
mod faddeeva;
pub mod quad;

use num_complex::Complex64;

pub use bessel::spherical_bessel_j;
pub(crate) use bessel::{j0_plus_j2, sph_j};
pub use faddeeva::{checked_exp, erfc_complex, erfc_times_exp, faddeeva_w};
pub use quad::{QuadratureResult, Tolerance};

use crate::error::{domain, Result};

/// Complex number type used throughout the crate.
pub type ComplexValue = Complex64;

/// `exp(-T^2 (Omega^2 + k^2)/2) [E(k, t) + E(k, -t)]` with
/// `E(k, t) = exp(i k t) erfc((i T^2 k + t)/(sqrt(2) T))`.
///
/// Written as `e^{-(T^2 Omega^2 + t^2/T^2)/2} [w(z1) - w(z2)]` plus a
/// Gaussian remainder, so the `T^2 k^2 / 2` exponents cancel exactly
/// rather than in floating point.
pub fn scaled_time_kernel(k: f64, t_ba: f64, t_width: f64, omega: f64) -> Result<Complex64> {
    if !(t_width > 0.0) {
        return domain(format!("scaled_time_kernel: T = {t_width} must be positive"));
    }
    if !(k.is_finite() && t_ba.is_finite() && omega.is_finite()) {
        return domain("scaled_time_kernel: non-finite input");
    }
    let tau = t_ba.abs();
    let s = std::f64::consts::SQRT_2 * t_width;
    let kt2 = t_width * t_width * k;
    let z1 = Complex64::new(-kt2, tau) / s;
    let z2 = Complex64::new(kt2, tau) / s;
    let damp = -0.5 * (t_width * t_width * omega * omega + (tau / t_width).powi(2));
    let gauss = Complex64::new(-0.5 * t_width * t_width * (omega * omega + k * k), -k * tau).exp() * 2.0;
    Ok((faddeeva_w(z1)? - faddeeva_w(z2)?) * damp.exp() + gauss)
}

/// Integrand of the form `f(k)` on `[0, inf)` carrying Gaussian damping
/// `exp(-damping_width (k - damping_center)^2)`.
pub struct DampedKernelSpec<F: Fn(f64) -> Complex64> {
    pub damping_width: f64,
    pub damping_center: f64,
    /// Lengths `L` for which the integrand oscillates like `exp(i k L)`.
    pub oscillation_lengths: Vec<f64>,
    /// Additional breakpoints (scales of non-oscillatory structure).
    pub extra_breaks: Vec<f64>,
    pub integrand: F,
    pub tolerance: Tolerance,
}

impl<F: Fn(f64) -> Complex64> DampedKernelSpec<F> {
    pub fn new(damping_width: f64, integrand: F) -> Self {
        DampedKernelSpec {
            damping_width,
            damping_center: 0.0,
            oscillation_lengths: Vec::new(),
            extra_breaks: Vec::new(),
            integrand,
            tolerance: Tolerance::default(),
        }
    }

    /// Point past which the damping factor has fallen below `1e-300` of its
    /// largest value on `[0, inf)`.
    pub fn k_max(&self) -> f64 {
        let c = self.damping_center;
        let below = c.min(0.0);
        c + (below * below + 690.8 / self.damping_width).sqrt()
    }
}

/// Integrate a damped kernel over `[0, inf)`.
pub fn integrate_damped<F: Fn(f64) -> Complex64>(spec: &DampedKernelSpec<F>) -> Result<QuadratureResult<Complex64>> {
    if !(spec.damping_width > 0.0) {
        return domain("integrate_damped: damping_width must be positive");
    }
    if spec.oscillation_lengths.iter().any(|&l| !(l > 0.0)) {
        return domain("integrate_damped: oscillation lengths must be positive");
    }
    let kmax = spec.k_max();
    if kmax <= 0.0 {
        return Ok(QuadratureResult { value: Complex64::new(0.0, 0.0), abs_error_estimate: 0.0, evaluations: 1 });
    }
    let longest = spec.oscillation_lengths.iter().cloned().fold(0.0, f64::max);
    let width = if longest > 0.0 { std::f64::consts::PI / longest } else { kmax };
    let mut breaks = quad::uniform_breaks(0.0, kmax, width);
    breaks.extend(spec.extra_breaks.iter().filter(|&&b| b > 0.0 && b < kmax));
    let width_scale = 1.0 / spec.damping_width.sqrt();
    let c = spec.damping_center;
    for j in -3i32..=3 {
        let b = c + j as f64 * width_scale;
        if b > 0.0 && b < kmax {
            breaks.push(b);
        }
    }
    if c < 0.0 {
        // exponential decay away from k = 0 on the scale 1/(2 w |c|)
        let scale = 1.0 / (2.0 * spec.damping_width * c.abs());
        breaks.extend((1..=8).map(|m| m as f64 * scale).filter(|&b| b < kmax));
    }
    quad::integrate_panels(&spec.integrand, &quad::merge_breaks(breaks), spec.tolerance)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(f: impl Fn(f64) -> f64) -> impl Fn(f64) -> Complex64 {
        move |k| Complex64::new(f(k), 0.0)
    }

    #[test]
    fn gaussian_moment() {
        let spec = DampedKernelSpec::new(1.0, real(|k: f64| (-k * k).exp()));
        let r = integrate_damped(&spec).unwrap();
        assert!((r.value.re - 0.886_226_925_452_758).abs() < 1e-12);
        assert!(r.abs_error_estimate <= 1e-12);
    }

    #[test]
    fn cubic_moment() {
        let spec = DampedKernelSpec::new(1.0, real(|k: f64| k.powi(3) * (-k * k).exp()));
        let r = integrate_damped(&spec).unwrap();
        assert!((r.value.re - 0.5).abs() < 1e-12);
    }

    #[test]
    fn rejects_invalid_spec() {
        let spec = DampedKernelSpec::new(0.0, real(|k: f64| k));
        assert!(integrate_damped(&spec).is_err());
        let mut spec = DampedKernelSpec::new(1.0, real(|k: f64| k));
        spec.oscillation_lengths.push(-1.0);
        assert!(integrate_damped(&spec).is_err());
    }

    #[test]
    fn kernel_at_zero_delay_has_unit_real_part_before_damping() {
        for &k in &[0.0, 0.5, 3.0, 9.0] {
            let v = scaled_time_kernel(k, 0.0, 1.0, 0.0).unwrap();
            let undamped = v * (0.5 * k * k).exp();
            assert!((undamped.re - 2.0).abs() < 1e-12, "k={k}: {undamped}");
        }
    }

    #[test]
    fn kernel_matches_erfc_products() {
        for &(k, t, tw, om) in &[(0.3, 1.2, 1.0, 0.5), (2.0, -0.7, 1.3, 2.0), (5.0, 4.0, 0.8, 0.0), (0.0, 2.0, 1.0, 1.0)] {
            let base = -0.5 * tw * tw * (om * om + k * k);
            let mut direct = Complex64::new(0.0, 0.0);
            for tt in [t, -t] {
                let z = Complex64::new(tt, tw * tw * k) / (std::f64::consts::SQRT_2 * tw);
                direct += erfc_times_exp(z, Complex64::new(base, k * tt)).unwrap();
            }
            let v = scaled_time_kernel(k, t, tw, om).unwrap();
            assert!((v - direct).norm() <= 1e-13 * direct.norm(), "{k} {t}: {v} vs {direct}");
        }
    }

    #[test]
    fn kernel_is_smooth_at_large_momentum() {
        // second differences must follow the curvature, not rounding noise
        let f = |k: f64| scaled_time_kernel(k, 10.0, 1.0, 0.0).unwrap();
        for &k in &[1.0e4, 1.8e4, 3.3e4] {
            let h = 1e-3;
            let d2 = (f(k + h) + f(k - h) - 2.0 * f(k)).norm() / f(k).norm();
            assert!(d2 < 1e-12, "k={k}: {d2}");
        }
    }

    #[test]
    fn kernel_is_finite_far_out() {
        let v = scaled_time_kernel(200.0, 3.0, 1.0, 1.0).unwrap();
        assert!(v.re.is_finite() && v.im.is_finite());
        assert!(scaled_time_kernel(1.0, 0.0, 0.0, 1.0).is_err());
    }
}
