//! Gaussian switching cut off at `|t - t_nu| = c T`.
//!
//! The Fourier transform of the cropped profile is the Gaussian one minus two
//! edge pieces carrying `e^{-c^2}`:
//!
//! `chi(w) = e^{i w t0} sqrt(pi) e^{-w^2/4} + e^{-c^2} sum_pm e^{i w (t0 pm c)} p_pm(w)`
//!
//! with `p_pm(w) = -(sqrt(pi)/2) w(pm w/2 + i c)`. The edge pieces decay only
//! like `1/w`, so every momentum integral gets contour tails for the
//! edge-times-edge products. The non-local term goes through the
//! symmetric / commutator split, where the time overlap of two cropped
//! profiles has a closed form in Faddeeva functions.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use super::causal::{assemble, causal_integral, SplitNonlocal};
use super::jet::{faddeeva_jet, Jet};
use super::{real_part, scaled, Reduced, Which};
use crate::error::{domain, Result};
use crate::specfun::contour::{integrate_with_tail, TailChannel, TailProblem, RAY_DECAY};
use crate::specfun::quad::{merge_breaks, uniform_breaks};
use crate::specfun::{faddeeva_w, QuadratureResult, Tolerance};

/// Largest exponent allowed for the rescaling factors.
const MAX_LOG_SCALE: f64 = 650.0;

/// Smallest `|beta|` moved onto a ray.
const MIN_RAY_BETA: f64 = 0.25;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn nan() -> Complex64 {
    c(f64::NAN, f64::NAN)
}

fn w(z: Complex64) -> Complex64 {
    faddeeva_w(z).unwrap_or_else(|_| nan())
}

/// Edge pieces `[p_-(w), p_+(w)]`.
fn edge_pieces(omega: Complex64, half: f64) -> [Complex64; 2] {
    let s = -0.5 * PI.sqrt();
    [s * w(-omega / 2.0 + c(0.0, half)), s * w(omega / 2.0 + c(0.0, half))]
}

/// Transform of the profile `e^{-(t - t0)^2}` cropped to `|t - t0| <= half`.
#[cfg(test)]
fn cropped_transform(omega: f64, t0: f64, half: f64) -> Complex64 {
    let g = c(-0.25 * omega * omega, omega * t0).exp() * PI.sqrt();
    g + edge_sum(c(omega, 0.0), t0, half) * (-half * half).exp()
}

fn edge_sum(omega: Complex64, t0: f64, half: f64) -> Complex64 {
    let [pm, pp] = edge_pieces(omega, half);
    (Complex64::i() * omega * (t0 - half)).exp() * pm + (Complex64::i() * omega * (t0 + half)).exp() * pp
}

/// `chi(a + s k)` for one atom's cropped profile.
#[derive(Debug, Clone, Copy)]
struct Factor {
    a: f64,
    s: f64,
    t0: f64,
}

impl Factor {
    fn omega(&self, k: f64) -> f64 {
        self.a + self.s * k
    }

    /// Complex log of the Gaussian part.
    fn gauss_log(&self, k: f64) -> Complex64 {
        let om = self.omega(k);
        c(0.5 * PI.ln() - 0.25 * om * om, om * self.t0)
    }
}

#[derive(Debug, Clone, Copy)]
struct Product {
    weight: f64,
    f1: Factor,
    f2: Factor,
}

/// `int_0^inf g(k) A(k d) e^{r0} sum_p weight_p chi_1(a_1 + s_1 k) chi_2(a_2 + s_2 k) dk`.
/// With `with_kernel = false` the spatial kernel is replaced by one.
fn product_integral(
    r: &Reduced,
    products: &[Product],
    half: f64,
    r0: f64,
    with_kernel: bool,
    tol: Tolerance,
) -> Result<QuadratureResult<Complex64>> {
    if r0 > MAX_LOG_SCALE {
        return domain(format!(
            "cropped switching: gap too large for the rescaled integrals (exponent {r0:.1} > {MAX_LOG_SCALE})"
        ));
    }
    let c2 = half * half;
    let d = if with_kernel { r.d } else { 0.0 };
    let head = |k: f64| {
        let mut acc = c(0.0, 0.0);
        for p in products {
            let g1 = p.f1.gauss_log(k);
            let g2 = p.f2.gauss_log(k);
            let x1 = edge_sum(c(p.f1.omega(k), 0.0), p.f1.t0, half);
            let x2 = edge_sum(c(p.f2.omega(k), 0.0), p.f2.t0, half);
            let v = (r0 + g1 + g2).exp()
                + (r0 - c2 + g1).exp() * x2
                + (r0 - c2 + g2).exp() * x1
                + (r0 - 2.0 * c2).exp() * x1 * x2;
            acc += v * p.weight;
        }
        let kern = if d > 0.0 { r.kernel(k) } else { 1.0 };
        acc * (r.g(k) * kern)
    };

    // edge-by-edge channels of the tail
    struct Spec {
        beta: f64,
        weight: f64,
        f1: Factor,
        f2: Factor,
        e1: usize,
        e2: usize,
        side: Option<usize>,
    }
    let mut specs = Vec::new();
    for p in products {
        for e1 in 0..2 {
            for e2 in 0..2 {
                let edge = |e: usize, f: &Factor| f.t0 + if e == 0 { -half } else { half };
                let base = p.f1.s * edge(e1, &p.f1) + p.f2.s * edge(e2, &p.f2);
                let sides: &[Option<usize>] = if d > 0.0 { &[Some(0), Some(1)] } else { &[None] };
                for &side in sides {
                    let beta = base
                        + match side {
                            Some(0) => d,
                            Some(_) => -d,
                            None => 0.0,
                        };
                    specs.push(Spec { beta, weight: p.weight, f1: p.f1, f2: p.f2, e1, e2, side });
                }
            }
        }
    }
    let min_ray = MIN_RAY_BETA.max(2.0 * RAY_DECAY * r.a);
    let y_max = specs
        .iter()
        .filter(|s| s.beta.abs() >= min_ray)
        .map(|s| RAY_DECAY / s.beta.abs())
        .fold(0.0, f64::max);
    let beta_max = specs.iter().map(|s| s.beta.abs()).fold(0.0, f64::max);
    let a_max = products.iter().flat_map(|p| [p.f1.a.abs(), p.f2.a.abs()]).fold(0.0, f64::max);
    let k0 = a_max + 2.0 * ((half + 0.5 * y_max).powi(2) + 60.0).sqrt() + 1.0;

    let mut breaks = uniform_breaks(0.0, k0, (PI / (beta_max + 1.0)).min(0.5));
    if r.k_form() < k0 {
        breaks.push(r.k_form());
    }
    let scale = (r0 - 2.0 * c2).exp();
    let channels = specs
        .iter()
        .map(|s| {
            let edge = |e: usize, f: &Factor| f.t0 + if e == 0 { -half } else { half };
            let phase = c(0.0, s.f1.a * edge(s.e1, &s.f1) + s.f2.a * edge(s.e2, &s.f2)).exp();
            let pre = phase * (scale * s.weight);
            let (f1, f2, e1, e2, side) = (s.f1, s.f2, s.e1, s.e2, s.side);
            TailChannel::new(s.beta, move |k: Complex64| {
                let p1 = edge_pieces(f1.a + f1.s * k, half)[e1];
                let p2 = edge_pieces(f2.a + f2.s * k, half)[e2];
                let a = match side {
                    Some(i) => r.model.spatial_kernel_channels(k * d)[i],
                    None => c(1.0, 0.0),
                };
                pre * r.g_complex(k) * a * p1 * p2
            })
        })
        .collect();
    let problem = TailProblem {
        head: &head,
        head_breaks: merge_breaks(breaks),
        channels,
        min_ray_beta: min_ray,
        k_cap: 100.0 / r.a,
    };
    integrate_with_tail(&problem, tol)
}

pub(crate) fn local_term(r: &Reduced, which: Which, crop_sigmas: f64, tol: Tolerance) -> Result<QuadratureResult<f64>> {
    let half = crop_sigmas / SQRT_2;
    let (omega, t0) = match which {
        Which::A => (r.oa, r.ta),
        Which::B => (r.ob, r.tb),
    };
    let p = Product {
        weight: 1.0,
        f1: Factor { a: omega, s: 1.0, t0 },
        f2: Factor { a: -omega, s: -1.0, t0 },
    };
    let r0 = 0.5 * omega * omega;
    let res = product_integral(r, &[p], half, r0, false, tol)?;
    Ok(real_part(scaled(res, r.coupling2 * r.kappa * (-r0).exp())))
}

pub(crate) fn cross_noise_term(r: &Reduced, crop_sigmas: f64, tol: Tolerance) -> Result<QuadratureResult<Complex64>> {
    let half = crop_sigmas / SQRT_2;
    let p = Product {
        weight: 1.0,
        f1: Factor { a: r.oa, s: 1.0, t0: r.ta },
        f2: Factor { a: -r.ob, s: -1.0, t0: r.tb },
    };
    let r0 = 0.25 * (r.oa * r.oa + r.ob * r.ob);
    let res = product_integral(r, &[p], half, r0, true, tol)?;
    Ok(scaled(res, r.coupling2 * r.kappa * r.ang * (-r0).exp()))
}

/// Series of `C(D) e^{Sigma^2/8}` around `D = x0` for two cropped profiles,
/// on the branch of the overlap interval that holds at `reference`.
pub(crate) fn overlap_jet(r: &Reduced, x0: f64, reference: f64, half: f64) -> Jet {
    let one = c(1.0, 0.0);
    let zero = c(0.0, 0.0);
    // interval ends as (value at x0, slope in D) on the reference branch
    let lo = if r.tb - half >= r.ta - reference - half {
        (r.tb - half, 0.0)
    } else {
        (r.ta - x0 - half, -1.0)
    };
    let hi = if r.tb + half <= r.ta - reference + half {
        (r.tb + half, 0.0)
    } else {
        (r.ta - x0 + half, -1.0)
    };
    let ref_lo = (r.tb - half).max(r.ta - reference - half);
    let ref_hi = (r.tb + half).min(r.ta - reference + half);
    if ref_lo >= ref_hi {
        return Jet::zero();
    }
    let sigma = r.oa + r.ob;
    let t = r.tb - r.ta;
    let q = sigma / (2.0 * SQRT_2);
    let m0 = 0.5 * (r.ta + r.tb - x0);
    let y = Jet::linear(c(x0 + t, 0.0), one);
    // gap + i Sigma m + i Oa D
    let base = (y * y).scale(c(-0.5, 0.0))
        + Jet::linear(c(0.0, sigma * m0 + r.oa * x0), c(0.0, r.oa - 0.5 * sigma));
    let end_term = |(e0, slope): (f64, f64)| {
        let v0 = SQRT_2 * (e0 - m0);
        let dv = SQRT_2 * (slope + 0.5);
        let z = Jet::linear(c(v0, -q), c(dv, 0.0));
        let s = if v0 >= 0.0 { 1.0 } else { -1.0 };
        let wz = faddeeva_jet(c(s * q, s * v0), c(0.0, s * dv));
        let tail = (base - z * z).exp() * wz;
        let step = if v0 < 0.0 { base.exp().scale(c(2.0, 0.0)) } else { Jet::constant(zero) };
        step + tail.scale(c(s, 0.0))
    };
    (end_term(lo) - end_term(hi)).scale(c(PI.sqrt() / (2.0 * SQRT_2), 0.0))
}

/// `C(D) e^{Sigma^2/8}` for two cropped profiles.
#[cfg(test)]
fn cropped_overlap(r: &Reduced, delta_t: f64, half: f64) -> Complex64 {
    overlap_jet(r, delta_t, delta_t, half).0[0]
}

pub(crate) fn split_nonlocal(r: &Reduced, crop_sigmas: f64, tol: Tolerance) -> Result<SplitNonlocal> {
    let half = crop_sigmas / SQRT_2;
    let products = [
        Product {
            weight: 0.5,
            f1: Factor { a: r.oa, s: -1.0, t0: r.ta },
            f2: Factor { a: r.ob, s: 1.0, t0: r.tb },
        },
        Product {
            weight: 0.5,
            f1: Factor { a: r.ob, s: -1.0, t0: r.tb },
            f2: Factor { a: r.oa, s: 1.0, t0: r.ta },
        },
    ];
    let sigma = r.oa + r.ob;
    let sym = product_integral(r, &products, half, sigma * sigma / 8.0, true, tol)?;
    let t = r.tb - r.ta;
    let kinks = [-t, -t + 2.0 * half, -t - 2.0 * half, t, t - 2.0 * half, t + 2.0 * half];
    let window =
        |x: f64, reference: f64| overlap_jet(r, x, reference, half) + overlap_jet(r, -x, -reference, half).reflect();
    let causal = causal_integral(r, window, &kinks, tol)?;
    Ok(assemble(r, sym, causal))
}

pub(crate) fn nonlocal_term(r: &Reduced, crop_sigmas: f64, tol: Tolerance) -> Result<QuadratureResult<Complex64>> {
    if r.d < super::causal::MIN_SEPARATION_RATIO * r.a {
        return domain(format!(
            "cropped switching needs d >= {} a0 for the non-local term",
            super::causal::MIN_SEPARATION_RATIO
        ));
    }
    let s = split_nonlocal(r, crop_sigmas, tol)?;
    Ok(QuadratureResult { value: s.total, abs_error_estimate: s.abs_error_estimate, evaluations: 0 })
}
