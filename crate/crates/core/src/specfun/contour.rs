//! Semi-infinite oscillatory integrals whose integrand decays only
//! algebraically.
//!
//! The integral over `[0, inf)` is split at `k0`. The head `[0, k0]` is done on
//! the real axis. Past `k0` the integrand is supplied as a sum of channels
//! `exp(i beta k) h(k)` with `h` analytic and slowly varying; each channel is
//! moved onto the vertical ray `k0 + i sgn(beta) y`, where the exponential
//! decays like `exp(-|beta| y)`. Channels with too small a `beta` stay on the
//! real axis up to `k_cap`.

use num_complex::Complex64;

use super::quad::{integrate_panels, merge_breaks, uniform_breaks, QuadratureResult, Tolerance};
use crate::error::Result;

/// Ray length in units of `1/|beta|`; `exp(-46)` is below double resolution.
pub const RAY_DECAY: f64 = 46.0;

pub struct TailChannel<'a> {
    pub beta: f64,
    pub h: Box<dyn Fn(Complex64) -> Complex64 + 'a>,
}

impl<'a> TailChannel<'a> {
    pub fn new(beta: f64, h: impl Fn(Complex64) -> Complex64 + 'a) -> Self {
        TailChannel { beta, h: Box::new(h) }
    }
}

pub struct TailProblem<'a, F: Fn(f64) -> Complex64> {
    /// Full integrand on the real axis, used on `[0, k0]`.
    pub head: F,
    /// Sorted breakpoints of the head, starting at 0 and ending at `k0`.
    pub head_breaks: Vec<f64>,
    pub channels: Vec<TailChannel<'a>>,
    /// Channels with `|beta|` below this stay on the real axis.
    pub min_ray_beta: f64,
    /// Upper limit for real-axis channels.
    pub k_cap: f64,
}

/// Ray length needed for a given `|beta|`.
pub fn ray_length(beta: f64) -> f64 {
    RAY_DECAY / beta.abs()
}

fn add(acc: &mut QuadratureResult<Complex64>, r: QuadratureResult<Complex64>) {
    acc.value += r.value;
    acc.abs_error_estimate += r.abs_error_estimate;
    acc.evaluations += r.evaluations;
}

pub fn integrate_with_tail<F: Fn(f64) -> Complex64>(
    problem: &TailProblem<'_, F>,
    tol: Tolerance,
) -> Result<QuadratureResult<Complex64>> {
    let pieces = 1 + problem.channels.len();
    let part_tol = Tolerance { atol: tol.atol / pieces as f64, ..tol };
    let k0 = *problem.head_breaks.last().expect("head breaks");
    let mut acc = integrate_panels(&problem.head, &problem.head_breaks, part_tol)?;
    for ch in &problem.channels {
        let beta = ch.beta;
        if beta.abs() >= problem.min_ray_beta {
            let s = beta.signum();
            let len = ray_length(beta);
            let phase0 = Complex64::new(0.0, beta * k0).exp();
            let f = |y: f64| {
                let k = Complex64::new(k0, s * y);
                Complex64::new(0.0, s) * phase0 * (-beta.abs() * y).exp() * (ch.h)(k)
            };
            let breaks = uniform_breaks(0.0, len, 1.0 / beta.abs());
            add(&mut acc, integrate_panels(f, &breaks, part_tol)?);
        } else if problem.k_cap > k0 {
            let f = |k: f64| Complex64::new(0.0, beta * k).exp() * (ch.h)(Complex64::new(k, 0.0));
            let mut breaks = geometric_breaks(k0, problem.k_cap, 1.25);
            if beta != 0.0 {
                breaks.extend(uniform_breaks(k0, problem.k_cap, std::f64::consts::PI / beta.abs()));
            }
            add(&mut acc, integrate_panels(f, &merge_breaks(breaks), part_tol)?);
        }
    }
    Ok(acc)
}

/// Geometric breakpoints from `a > 0` to `b` with the given ratio.
pub fn geometric_breaks(a: f64, b: f64, ratio: f64) -> Vec<f64> {
    let mut out = vec![a];
    let mut x = a;
    while x * ratio < b {
        x *= ratio;
        out.push(x);
    }
    out.push(b);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // int_0^inf sin(k)/(k+1) dk = Ci(1) sin(1) + (pi/2 - Si(1)) cos(1)
    #[test]
    fn sine_over_linear() {
        let exact = 0.621_449_624_235_813_3;
        let problem = TailProblem {
            head: |k: f64| Complex64::new(k.sin() / (k + 1.0), 0.0),
            head_breaks: uniform_breaks(0.0, 60.0, 1.0),
            channels: vec![
                TailChannel::new(1.0, |k: Complex64| Complex64::new(0.0, -0.5) / (k + 1.0)),
                TailChannel::new(-1.0, |k: Complex64| Complex64::new(0.0, 0.5) / (k + 1.0)),
            ],
            min_ray_beta: 1e-3,
            k_cap: 0.0,
        };
        let r = integrate_with_tail(&problem, Tolerance::new(1e-15, 1e-13)).unwrap();
        assert!((r.value.re - exact).abs() < 1e-12, "{}", r.value);
        assert!(r.value.im.abs() < 1e-12);
    }
}
