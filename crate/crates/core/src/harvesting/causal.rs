//! Second route to the non-local term through the split of the time
//! ordering `theta(t1 - t2) = (1 + sgn(t1 - t2)) / 2`.
//!
//! The symmetric half is a product of single-atom Fourier transforms. The
//! sign half only involves the field commutator, whose smeared form `S(D)`
//! has a closed form localized around the light cone `|D| = d`:
//!
//! `M = -kappa int g A (C(k) + C(-k))/2 dk + i kappa int_0^inf S(D) (C(D) + C(-D)) dD`
//!
//! with `C(k) = chi_a(Oa + k) chi_b(Ob - k)` in frequency space and
//! `C(D) = int du chi_a(u + D) chi_b(u) e^{i(Oa (u + D) + Ob u)}` in time.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::jet::Jet;
use super::{cropped, DetectorPair, ModelKind, Reduced};
use crate::atoms::SwitchingKind;
use crate::error::{domain, Result};
use crate::specfun::quad::{integrate_panels, merge_breaks, uniform_breaks};
use crate::specfun::{integrate_damped, DampedKernelSpec, QuadratureResult, Tolerance};

/// Smallest `d / a0` accepted by the split route.
pub const MIN_SEPARATION_RATIO: f64 = 50.0;

/// Half-width of the light-cone window in units of `a0`.
const WINDOW: f64 = 60.0;

/// `S(D) = int_0^inf k^n / (4 a^2 k^2 + 9)^6 A(k d) sin(k D) dk` for `d > 0`.
pub fn commutator_kernel(model: ModelKind, a: f64, d: f64, delta: f64) -> Result<f64> {
    if !(a > 0.0 && d > 0.0 && delta.is_finite()) {
        return domain("commutator_kernel: need a > 0, d > 0 and finite D");
    }
    if delta == 0.0 {
        return Ok(0.0);
    }
    let sign = delta.signum();
    let x = delta.abs();
    let b = 1.5 / a;
    let near = (x - d).abs();
    let far = x + d;
    let v = match model {
        ModelKind::EmDipole => {
            let q = |r: f64, e: f64| {
                let a2 = a * a;
                let poly = 2240.0 * a2 * a2 * a2
                    + r * (3360.0 * a2 * a2 * a + 560.0 * a2 * a2 * e
                        + r * (2240.0 * a2 * a2 + 840.0 * a2 * a * e
                            + r * (840.0 * a2 * a + 540.0 * a2 * e
                                + r * (180.0 * a2 + 180.0 * a * e + r * (18.0 * a + 27.0 * e)))));
                (-b * r).exp() * poly
            };
            let s = (x - d).signum();
            PI / (4_299_816_960.0 * a.powi(7) * d.powi(3)) * (q(near, -s * d) - q(far, d))
        }
        ModelKind::UdwScalar => {
            let u = |r: f64| {
                (-b * r).exp()
                    * (160.0 * a.powi(5) + r * (240.0 * a.powi(4) + r * (r * (-180.0 * a * a + r * (-90.0 * a + 27.0 * r)))))
            };
            PI / (3_822_059_520.0 * a.powi(10) * d) * (u(near) - u(far))
        }
        ModelKind::UdwDerivative => {
            let w = |r: f64| {
                (-b * r).exp()
                    * (160.0 * a.powi(5)
                        + r * (240.0 * a.powi(4)
                            + r * (-240.0 * a.powi(3) + r * (-540.0 * a * a + r * (270.0 * a - 27.0 * r)))))
            };
            PI / (1_698_693_120.0 * a.powi(12) * d) * (w(near) - w(far))
        }
    };
    Ok(sign * v)
}

/// Both halves of the non-local term and their sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitNonlocal {
    pub symmetric: Complex64,
    pub causal: Complex64,
    pub total: Complex64,
    pub abs_error_estimate: f64,
}

/// Reduced symmetric integral `int g A (C(k) + C(-k))/2 dk` for Gaussian switching,
/// with `e^{-Sigma^2/8}` removed.
fn symmetric_gaussian(r: &Reduced, tol: Tolerance) -> Result<QuadratureResult<Complex64>> {
    let delta = 0.5 * (r.oa - r.ob);
    let t = r.tb - r.ta;
    let phase0 = r.oa * r.ta + r.ob * r.tb;
    let integrand = |k: f64| {
        let plus = Complex64::new(-0.5 * (k + delta).powi(2), phase0 - k * t).exp();
        let minus = Complex64::new(-0.5 * (k - delta).powi(2), phase0 + k * t).exp();
        (plus + minus) * (0.5 * PI * r.g(k) * r.kernel(k))
    };
    let mut spec = DampedKernelSpec::new(0.5, integrand);
    spec.damping_center = delta.abs();
    spec.oscillation_lengths = [r.d, t.abs()].into_iter().filter(|&l| l > 0.0).collect();
    spec.extra_breaks = vec![r.k_form()];
    spec.tolerance = tol;
    integrate_damped(&spec)
}

/// Series of `C(D)` around `D = x0` for Gaussian switching, with `e^{-Sigma^2/8}` removed.
fn overlap_gaussian(r: &Reduced, x0: f64) -> Jet {
    let sigma = r.oa + r.ob;
    let delta = 0.5 * (r.oa - r.ob);
    let t = r.tb - r.ta;
    let y = Jet::linear(c(x0 + t, 0.0), c(1.0, 0.0));
    let phase = Jet::linear(c(0.0, 0.5 * sigma * (r.ta + r.tb) + delta * x0), c(0.0, delta));
    ((y * y).scale(c(-0.5, 0.0)) + phase).exp().scale(c((PI / 2.0).sqrt(), 0.0))
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Series around `x0` of `9^6 int_0^inf cos(k x) / (4 a^2 k^2 + 9)^6 dk`, a bump
/// of width `a` and unit-free area `pi`.
pub(crate) fn bump_jet(a: f64, x0: f64) -> Jet {
    const COEF: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
    let beta = 1.5 / a;
    let s = if x0 >= 0.0 { 1.0 } else { -1.0 };
    let u = Jet::linear(c(s * x0, 0.0), c(s, 0.0));
    let z = u.scale(c(2.0 * beta, 0.0));
    let mut poly = Jet::constant(c(COEF[5], 0.0));
    for &cm in COEF[..5].iter().rev() {
        poly = poly * z + Jet::constant(c(cm, 0.0));
    }
    u.scale(c(-beta, 0.0)).exp() * poly.scale(c(PI * beta / (120.0 * 2048.0), 0.0))
}

/// `S(D)` as a combination of derivatives of the bump: `sum_j c_j F^(n_j)(D - d)`
/// plus the mirror terms at `D + d`, which are dropped since `d >> a`.
fn bump_terms(model: ModelKind, d: f64) -> Vec<(f64, usize)> {
    match model {
        ModelKind::EmDipole => vec![(1.5 / d.powi(3), 0), (1.5 / (d * d), 1)],
        ModelKind::UdwScalar => vec![(0.5 / d, 4)],
        ModelKind::UdwDerivative => vec![(-0.5 / d, 6)],
    }
}

/// `int_0^inf 9^6 S(D) W(D) dD` over the light-cone window.
///
/// `window(x, reference)` returns the series of `W` around `x` using the
/// smooth branch that holds at `reference`; `kinks` are the points where `W`
/// changes branch. The derivatives of the bump are moved onto `W` piece by
/// piece, so the large, nearly cancelling kernel never enters the quadrature.
pub(crate) fn causal_integral(
    r: &Reduced,
    window: impl Fn(f64, f64) -> Jet,
    kinks: &[f64],
    tol: Tolerance,
) -> Result<QuadratureResult<Complex64>> {
    let lo = (r.d - WINDOW * r.a).max(0.0);
    let hi = r.d + WINDOW * r.a;
    let terms = bump_terms(r.model, r.d);
    let mut edges = vec![lo, hi];
    edges.extend(kinks.iter().copied().filter(|&x| x > lo && x < hi));
    let edges = merge_breaks(edges);
    let mut total = QuadratureResult { value: c(0.0, 0.0), abs_error_estimate: 0.0, evaluations: 0 };
    for piece in edges.windows(2) {
        let (p, q) = (piece[0], piece[1]);
        let mid = 0.5 * (p + q);
        // boundary terms of the repeated integration by parts
        for (x, sign) in [(q, 1.0), (p, -1.0)] {
            let f = bump_jet(r.a, x - r.d);
            let w = window(x, mid);
            for &(coef, n) in &terms {
                for m in 0..n {
                    let alt = if m % 2 == 0 { 1.0 } else { -1.0 };
                    total.value += f.derivative(n - 1 - m) * w.derivative(m) * (sign * alt * coef);
                }
            }
        }
        let integrand = |x: f64| {
            let f = bump_jet(r.a, x - r.d).0[0];
            let w = window(x, mid);
            terms
                .iter()
                .map(|&(coef, n)| w.derivative(n) * f * (coef * if n % 2 == 0 { 1.0 } else { -1.0 }))
                .sum::<Complex64>()
        };
        let mut breaks = uniform_breaks(p, q, 0.5 * r.a);
        if r.d > p && r.d < q {
            breaks.push(r.d);
        }
        let res = integrate_panels(integrand, &merge_breaks(breaks), tol)?;
        total.value += res.value;
        total.abs_error_estimate += res.abs_error_estimate;
        total.evaluations += res.evaluations;
    }
    Ok(total)
}

fn check_separation(r: &Reduced) -> Result<()> {
    if r.d < MIN_SEPARATION_RATIO * r.a {
        return domain(format!(
            "the split route needs d >= {MIN_SEPARATION_RATIO} a0 (d / a0 = {})",
            r.d / r.a
        ));
    }
    Ok(())
}

pub(crate) fn split_gaussian(r: &Reduced, tol: Tolerance) -> Result<SplitNonlocal> {
    check_separation(r)?;
    let sym = symmetric_gaussian(r, tol)?;
    let window = |x: f64, _: f64| overlap_gaussian(r, x) + overlap_gaussian(r, -x).reflect();
    let causal = causal_integral(r, window, &[], tol)?;
    Ok(assemble(r, sym, causal))
}

pub(crate) fn assemble(r: &Reduced, sym: QuadratureResult<Complex64>, causal: QuadratureResult<Complex64>) -> SplitNonlocal {
    let sigma = r.oa + r.ob;
    let factor = r.coupling2 * r.kappa * r.ang * (-sigma * sigma / 8.0).exp();
    let symmetric = -sym.value * factor;
    let causal_v = Complex64::i() * causal.value * factor;
    SplitNonlocal {
        symmetric,
        causal: causal_v,
        total: symmetric + causal_v,
        abs_error_estimate: (sym.abs_error_estimate + causal.abs_error_estimate) * factor.abs(),
    }
}

/// Non-local term through the symmetric / commutator split. Works for both
/// switching kinds; needs `d >= 50 a0`.
pub fn nonlocal_term_split(pair: &DetectorPair) -> Result<SplitNonlocal> {
    let r = pair.reduced()?;
    match pair.switching {
        SwitchingKind::Gaussian => split_gaussian(&r, pair.tolerance),
        SwitchingKind::CroppedGaussian { crop_sigmas } => {
            check_separation(&r)?;
            cropped::split_nonlocal(&r, crop_sigmas, pair.tolerance)
        }
    }
}
