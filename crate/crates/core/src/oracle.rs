//! Brute-force validators for the closed forms used by the engine.
//!
//! Every oracle here is written against the defining integral, with its own
//! Gauss-Legendre rule, its own spherical Bessel functions and its own
//! momentum quadrature, so that a pass is an independent confirmation.
//! [`run_all`] executes all of them on fixed grids and seeds.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::angular::{gaunt_integral, polarization_completeness, rotate_harmonic, spherical_harmonic, EulerAngles, HarmonicIndex};
use crate::atoms::{radial_overlap, wavefunction_overlap_log10, AtomSpec};
use crate::error::{domain, Result};
use crate::survey::{PointParams, ScanSettings};
use crate::harvesting::{
    assemble_state, commutator_kernel, compute_terms, cross_noise_term, em_decomposition_identity, local_term,
    nonlocal_term, nonlocal_term_split, positivity_report, term_integrands, time_integral_scaled, DetectorPair,
    ModelKind, Which,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Outcome of one oracle family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub name: String,
    /// Closed-form value at the worst point of the family.
    pub closed_form: Complex64,
    pub brute_force: Complex64,
    /// Largest relative deviation over the family.
    pub rel_err: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Integrand evaluations spent by the brute-force side.
    pub budget: u64,
}

/// Value of a brute-force integral with its convergence status.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BruteForce<V> {
    pub value: V,
    pub converged: bool,
    pub evaluations: u64,
}

/// Relative perturbation applied to the closed-form side of one family,
/// used to confirm that the family is sensitive.
#[derive(Debug, Clone, PartialEq)]
pub struct Mutation {
    pub family: String,
    pub relative: f64,
}

// ---------------------------------------------------------------------------
// quadrature

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * z * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            if n == 1 {
                p0 = 1.0;
                p1 = z;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

struct Rule {
    x: Vec<f64>,
    w: Vec<f64>,
}

impl Rule {
    fn new(n: usize) -> Self {
        let (x, w) = gauss_legendre(n);
        Rule { x, w }
    }

    fn integrate(&self, f: &mut impl FnMut(f64) -> Complex64, a: f64, b: f64) -> Complex64 {
        let h = 0.5 * (b - a);
        let m = 0.5 * (b + a);
        let mut s = Complex64::new(0.0, 0.0);
        for (x, w) in self.x.iter().zip(&self.w) {
            s += f(m + h * x) * *w;
        }
        s * h
    }
}

const PANEL_ORDER: usize = 12;

fn composite(f: &mut impl FnMut(f64) -> Complex64, breaks: &[f64], rule: &Rule) -> Complex64 {
    breaks.windows(2).map(|p| rule.integrate(f, p[0], p[1])).sum()
}

fn split(breaks: &[f64], pieces: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity((breaks.len() - 1) * pieces + 1);
    for p in breaks.windows(2) {
        for j in 0..pieces {
            out.push(p[0] + (p[1] - p[0]) * j as f64 / pieces as f64);
        }
    }
    out.push(*breaks.last().unwrap());
    out
}

fn uniform(a: f64, b: f64, width: f64) -> Vec<f64> {
    let n = ((b - a) / width).ceil().max(1.0) as usize;
    (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect()
}

/// Halves every panel until two successive sums agree to `rel`.
fn refine(mut f: impl FnMut(f64) -> Complex64, breaks: &[f64], rel: f64, max_doublings: usize) -> BruteForce<Complex64> {
    let rule = Rule::new(PANEL_ORDER);
    let mut evals = 0u64;
    let mut counted = |x: f64| {
        evals += 1;
        f(x)
    };
    let mut b = breaks.to_vec();
    let mut prev = composite(&mut counted, &b, &rule);
    let mut converged = false;
    for _ in 0..max_doublings {
        b = split(&b, 2);
        let next = composite(&mut counted, &b, &rule);
        let done = (next - prev).norm() <= rel * next.norm() || next.norm() == 0.0;
        prev = next;
        if done {
            converged = true;
            break;
        }
    }
    BruteForce { value: prev, converged, evaluations: evals }
}

// ---------------------------------------------------------------------------
// elementary functions written out independently of `specfun`

/// Spherical Bessel `j_l` for `l <= 4`.
fn bessel_j(l: u32, x: f64) -> f64 {
    let x = x.abs();
    if x < 2.0 {
        let mut df = 1.0;
        for i in 1..=l {
            df *= (2 * i + 1) as f64;
        }
        let mut term = x.powi(l as i32) / df;
        let mut sum = term;
        for m in 1..40 {
            term *= -0.5 * x * x / (m as f64 * (2 * l + 2 * m + 1) as f64);
            sum += term;
        }
        return sum;
    }
    let (s, co) = x.sin_cos();
    match l {
        0 => s / x,
        1 => s / (x * x) - co / x,
        2 => (3.0 / x.powi(3) - 1.0 / x) * s - 3.0 * co / (x * x),
        3 => (15.0 / x.powi(4) - 6.0 / (x * x)) * s - (15.0 / x.powi(3) - 1.0 / x) * co,
        4 => (105.0 / x.powi(5) - 45.0 / x.powi(3) + 1.0 / x) * s - (105.0 / x.powi(4) - 10.0 / (x * x)) * co,
        _ => f64::NAN,
    }
}

/// Angular kernel of each model after the sphere integral, written from the
/// printed integrands.
fn angular_kernel(model: ModelKind, x: f64) -> f64 {
    match model {
        ModelKind::EmDipole => bessel_j(0, x) + bessel_j(2, x),
        _ => bessel_j(0, x),
    }
}

/// Printed constant and powers: `C`, the power of `a0` and of `k`.
fn printed_constants(model: ModelKind) -> (f64, i32, i32) {
    match model {
        ModelKind::EmDipole => (49152.0, 2, 3),
        ModelKind::UdwScalar => (32768.0, 4, 5),
        ModelKind::UdwDerivative => (32768.0, 4, 7),
    }
}

/// `C / pi^2 a^p k^n / (4 a^2 k^2 + 9)^6`.
fn momentum_weight(model: ModelKind, a: f64, k: f64) -> f64 {
    let (cst, p, n) = printed_constants(model);
    cst / (PI * PI) * a.powi(p) * k.powi(n) / (4.0 * a * a * k * k + 9.0).powi(6)
}

// ---------------------------------------------------------------------------
// time integrals

/// `s -> exp(-(z - tc)^2 + i w z - e)` on the line `z = s + i y`, where `e`
/// is chosen so that the modulus is exactly `exp(-(s - tc)^2)`.
fn shifted_factor(w: f64, tc: f64, y: f64) -> impl Fn(f64) -> Complex64 {
    let e = y * y - w * y;
    move |s: f64| {
        let z = c(s, y) - tc;
        (-(z * z) + c(-w * y, w * s) - e).exp()
    }
}

/// `int ds1 f1(s1) int_{-inf}^{s1} ds2 f2(s2)` on a panel grid, with the
/// inner integral accumulated panel by panel.
fn ordered_pass(f1: &impl Fn(f64) -> Complex64, f2: &impl Fn(f64) -> Complex64, breaks: &[f64], rule: &Rule) -> Complex64 {
    let mut cum = Complex64::new(0.0, 0.0);
    let mut total = Complex64::new(0.0, 0.0);
    let mut f2m = |s: f64| f2(s);
    for p in breaks.windows(2) {
        let (a, b) = (p[0], p[1]);
        let h = 0.5 * (b - a);
        let m = 0.5 * (a + b);
        for (x, w) in rule.x.iter().zip(&rule.w) {
            let s1 = m + h * x;
            let inner = cum + rule.integrate(&mut f2m, a, s1);
            total += f1(s1) * inner * (*w * h);
        }
        cum += rule.integrate(&mut f2m, a, b);
    }
    total
}

/// One time ordering, `X` at the later time: `int du int dv` of the literal
/// integrand at `t1 = v + u/2`, `t2 = v - u/2` over `u > 0`, times
/// `exp(Sigma^2 / 8)`.
///
/// `v` runs on the line `Im v = Sigma / 4`. The `u` contour leaves the
/// origin vertically to `-iY`, `Y = k - (OX - OY)/2`, and continues
/// horizontally; along it no piece is larger than the final value.
fn ordering_bruteforce(ox: f64, oy: f64, k: f64, tx: f64, ty: f64, level: u32, rule: &Rule) -> (Complex64, u64) {
    let sigma = ox + oy;
    let y_corner = k - 0.5 * (ox - oy);
    let centre = tx - ty;
    let integrand = |t1: Complex64, t2: Complex64| {
        let e = -(t1 - tx) * (t1 - tx) - (t2 - ty) * (t2 - ty) + Complex64::i() * (ox * t1 + oy * t2 - k * (t1 - t2));
        (e + sigma * sigma / 8.0).exp()
    };
    let refine_breaks = |b: Vec<f64>| (0..level).fold(b, |acc, _| split(&acc, 2));
    let vmid = 0.5 * (tx + ty);
    let vbreaks = refine_breaks(uniform(vmid - 6.0, vmid + 6.0, 1.0));
    let vy = 0.25 * sigma;
    let mut evals = 0u64;
    let mut along_v = |u: Complex64| -> Complex64 {
        let mut g = |v: f64| {
            evals += 1;
            let vc = c(v, vy);
            integrand(vc + 0.5 * u, vc - 0.5 * u)
        };
        composite(&mut g, &vbreaks, rule)
    };
    // vertical leg, u = -i tau
    let vert_width = (1.0 / (centre.abs() + 1.0)).min(0.25);
    let vert = if y_corner != 0.0 {
        let b = refine_breaks(uniform(0.0, y_corner.abs(), vert_width).into_iter().map(|x| x * y_corner.signum()).collect());
        let mut f = |tau: f64| along_v(c(0.0, -tau)) * c(0.0, -1.0);
        composite(&mut f, &b, rule)
    } else {
        Complex64::new(0.0, 0.0)
    };
    let xmax = centre.max(0.0) + 15.0;
    let hb = refine_breaks(uniform(0.0, xmax, 0.25));
    let mut f = |x: f64| along_v(c(x, -y_corner));
    let horiz = composite(&mut f, &hb, rule);
    (vert + horiz, evals)
}

/// Ordered double time integral at `T = 1`, multiplied by
/// `exp((Oa + Ob)^2 / 8)`: the quantity returned by
/// [`time_integral_scaled`].
///
/// The triangle `t2 < t1` is integrated in the coordinates
/// `u = t1 - t2 > 0`, `v = (t1 + t2) / 2` with both contours deformed so
/// that no cancellation exceeds the size of the result; the panels are
/// halved until two passes agree to `1e-11`.
pub fn time_integral_bruteforce_scaled(omega_a: f64, omega_b: f64, k: f64, t_a: f64, t_b: f64) -> BruteForce<Complex64> {
    let rule = Rule::new(PANEL_ORDER);
    let mut evaluations = 0u64;
    let mut pass = |level: u32| {
        let (p, e1) = ordering_bruteforce(omega_a, omega_b, k, t_a, t_b, level, &rule);
        let (q, e2) = ordering_bruteforce(omega_b, omega_a, k, t_b, t_a, level, &rule);
        evaluations += e1 + e2;
        p + q
    };
    let mut prev = pass(0);
    for level in 1..=4 {
        let next = pass(level);
        if (next - prev).norm() <= 1e-11 * next.norm() {
            return BruteForce { value: next, converged: true, evaluations };
        }
        prev = next;
    }
    BruteForce { value: prev, converged: false, evaluations }
}

/// Same quantity as [`time_integral_bruteforce_scaled`] by a cheaper
/// scheme that only holds its relative accuracy while the result is not
/// much smaller than one.
///
/// Both times are moved onto the line `Im t = (Oa + Ob) / 4`, which takes
/// out the Gaussian suppression exactly; the triangle `t2 < t1` is then
/// integrated over a box of ten switching widths around both centres with a
/// cumulative inner integral, halving the panels until two passes agree to
/// `1e-11`.
pub fn triangle_bruteforce_scaled(omega_a: f64, omega_b: f64, k: f64, t_a: f64, t_b: f64) -> BruteForce<Complex64> {
    let y = 0.25 * (omega_a + omega_b);
    let reach = 10.0 / SQRT_2;
    let lo = t_a.min(t_b) - reach;
    let hi = t_a.max(t_b) + reach;
    let freq = (omega_a - k).abs().max((omega_b - k).abs()).max((omega_a + k).abs()).max((omega_b + k).abs());
    let rule = Rule::new(PANEL_ORDER);
    let orderings = [
        (shifted_factor(omega_a - k, t_a, y), shifted_factor(omega_b + k, t_b, y)),
        (shifted_factor(omega_b - k, t_b, y), shifted_factor(omega_a + k, t_a, y)),
    ];
    let pass = |breaks: &[f64]| -> Complex64 { orderings.iter().map(|(f1, f2)| ordered_pass(f1, f2, breaks, &rule)).sum() };
    let mut breaks = uniform(lo, hi, (4.0 / (freq + 1.0)).min(0.5));
    let per_pass = |b: &[f64]| 2 * (b.len() as u64 - 1) * (PANEL_ORDER * (2 * PANEL_ORDER + 1)) as u64;
    let mut evaluations = per_pass(&breaks);
    let mut prev = pass(&breaks);
    for _ in 0..6 {
        breaks = split(&breaks, 2);
        evaluations += per_pass(&breaks);
        let next = pass(&breaks);
        if (next - prev).norm() <= 1e-11 * next.norm() {
            return BruteForce { value: next, converged: true, evaluations };
        }
        prev = next;
    }
    BruteForce { value: prev, converged: false, evaluations }
}

/// Ordered double time integral for switching width `T`, by direct
/// quadrature. Companion of [`crate::harvesting::time_integral_closed`].
pub fn time_integral_bruteforce(
    omega_a: f64,
    omega_b: f64,
    k: f64,
    t_a: f64,
    t_b: f64,
    t_width: f64,
) -> Result<BruteForce<Complex64>> {
    if !(t_width > 0.0 && t_width.is_finite()) {
        return domain(format!("time_integral_bruteforce: T = {t_width} must be positive"));
    }
    let mut r = time_integral_bruteforce_scaled(
        omega_a * t_width,
        omega_b * t_width,
        k * t_width,
        t_a / t_width,
        t_b / t_width,
    );
    let s = (omega_a + omega_b) * t_width;
    r.value *= (-s * s / 8.0).exp() * t_width * t_width;
    Ok(r)
}

/// `int e^{-(t - tc)^2} e^{i w t} dt` at `T = 1`.
///
/// The line is shifted up only far enough to leave a residual oscillation
/// of frequency at most 4, so the quadrature still sees a genuine Fourier
/// integral.
pub fn fourier_bruteforce(w: f64, tc: f64) -> Complex64 {
    let y = w.signum() * (0.5 * w.abs() - 2.0).max(0.0);
    let f = shifted_factor(w, tc, y);
    let rule = Rule::new(PANEL_ORDER);
    let breaks = uniform(tc - 10.0 / SQRT_2, tc + 10.0 / SQRT_2, 0.25);
    let mut g = |s: f64| f(s);
    composite(&mut g, &breaks, &rule) * (y * y - w * y).exp()
}

// ---------------------------------------------------------------------------
// harvesting terms

/// Local term of one atom (`T = 1`, unit coupling): momentum quadrature of
/// the printed integrand with the switching transform done by quadrature.
pub fn local_bruteforce(model: ModelKind, a: f64, omega: f64) -> BruteForce<Complex64> {
    let kmax = (omega * omega + 180.0).sqrt() - omega + 10.0;
    let f = |k: f64| {
        let chi = fourier_bruteforce(omega + k, 0.0);
        Complex64::new(momentum_weight(model, a, k) * chi.norm_sqr(), 0.0)
    };
    refine(f, &uniform(0.0, kmax, 0.5), 1e-11, 6)
}

/// Cross-noise term `L_AB` (`T = 1`, unit coupling, axis cosine `ang`).
pub fn cross_noise_bruteforce(model: ModelKind, a: f64, d: f64, ang: f64, oa: f64, ob: f64, ta: f64, tb: f64) -> BruteForce<Complex64> {
    let sigma = 0.5 * (oa + ob);
    let kmax = (sigma * sigma + 180.0).sqrt() - sigma + 10.0;
    let f = |k: f64| {
        let chi = fourier_bruteforce(oa + k, ta) * fourier_bruteforce(ob + k, tb).conj();
        chi * (ang * momentum_weight(model, a, k) * angular_kernel(model, k * d))
    };
    let width = (PI / (4.0 * (d + (ta - tb).abs() + 1.0))).min(0.5);
    refine(f, &uniform(0.0, kmax, width), 1e-11, 6)
}

/// Time-symmetric half of `M` (`T = 1`, unit coupling): the momentum
/// integral of `(J(k) + J(-k)) / 2` with `J` from the two-dimensional time
/// quadrature.
pub fn nonlocal_symmetric_bruteforce(model: ModelKind, a: f64, d: f64, ang: f64, oa: f64, ob: f64, ta: f64, tb: f64) -> BruteForce<Complex64> {
    let delta = 0.5 * (oa - ob).abs();
    let kmax = delta + 13.0;
    let sigma = oa + ob;
    let evals = std::cell::Cell::new(0u64);
    let converged = std::cell::Cell::new(true);
    let f = |k: f64| {
        let p = triangle_bruteforce_scaled(oa, ob, k, ta, tb);
        let m = triangle_bruteforce_scaled(oa, ob, -k, ta, tb);
        evals.set(evals.get() + p.evaluations + m.evaluations);
        converged.set(converged.get() && p.converged && m.converged);
        (p.value + m.value) * (0.5 * ang * momentum_weight(model, a, k) * angular_kernel(model, k * d))
    };
    let width = (PI / (4.0 * (d + (ta - tb).abs() + 1.0))).min(0.5);
    let mut r = refine(f, &uniform(0.0, kmax, width), 1e-10, 4);
    r.value *= -(-sigma * sigma / 8.0).exp();
    r.converged &= converged.get();
    r.evaluations = evals.get();
    r
}

/// `int_0^inf k^n / (4 a^2 k^2 + 9)^6 A(k d) sin(k D) dk` by direct quadrature.
pub fn commutator_bruteforce(model: ModelKind, a: f64, d: f64, delta: f64) -> BruteForce<Complex64> {
    let (_, _, n) = printed_constants(model);
    let f = |k: f64| Complex64::new(k.powi(n) / (4.0 * a * a * k * k + 9.0).powi(6) * angular_kernel(model, k * d) * (k * delta).sin(), 0.0);
    let width = (PI / (2.0 * (d + delta.abs()))).min(0.25 / a);
    let mut breaks = uniform(0.0, 20.0 / a, width);
    let mut tail = 20.0 / a;
    while tail < 400.0 / a {
        let next = (tail * 1.5).min(400.0 / a);
        breaks.extend(uniform(tail, next, width).into_iter().skip(1));
        tail = next;
    }
    refine(f, &breaks, 1e-11, 3)
}

// ---------------------------------------------------------------------------
// angular and atomic parts

/// `int f(theta, phi) dOmega` with Gauss-Legendre in `cos theta` and the
/// trapezoid rule in `phi`, `n` points each.
pub fn sphere_integral(mut f: impl FnMut(f64, f64) -> Complex64, n: usize) -> Complex64 {
    let (x, w) = gauss_legendre(n);
    let dphi = 2.0 * PI / n as f64;
    let mut s = Complex64::new(0.0, 0.0);
    for (u, wu) in x.iter().zip(&w) {
        let theta = u.acos();
        for j in 0..n {
            s += f(theta, j as f64 * dphi) * (*wu * dphi);
        }
    }
    s
}

/// Sphere integral of a product of up to five spherical harmonics, each
/// possibly conjugated.
pub fn sphere_quadrature(indices: &[HarmonicIndex]) -> Result<Complex64> {
    if indices.is_empty() || indices.len() > 5 || indices.iter().any(|h| h.l > 3) {
        return domain("sphere_quadrature: need one to five harmonics with l <= 3");
    }
    let mut failure = None;
    let v = sphere_integral(
        |theta, phi| {
            let mut p = Complex64::new(1.0, 0.0);
            for h in indices {
                match spherical_harmonic(h.l, h.m, theta, phi) {
                    Ok(y) => p *= if h.conjugated { y.conj() } else { y },
                    Err(e) => failure = Some(e),
                }
            }
            p
        },
        64,
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(v),
    }
}

/// `int_0^{60 a0} r^3 R_21(r) R_10(r) j_l(k r) dr`.
pub fn radial_bruteforce(l: u32, k: f64, a0: f64) -> Result<f64> {
    if l > 4 || !(a0 > 0.0) || !(k >= 0.0) {
        return domain("radial_bruteforce: need l <= 4, a0 > 0 and k >= 0");
    }
    let r10 = |r: f64| 2.0 * a0.powf(-1.5) * (-r / a0).exp();
    let r21 = |r: f64| a0.powf(-1.5) / 24f64.sqrt() * (r / a0) * (-0.5 * r / a0).exp();
    let f = |r: f64| Complex64::new(r.powi(3) * r21(r) * r10(r) * bessel_j(l, k * r), 0.0);
    let width = if k > 0.0 { a0.min(PI / k) } else { a0 };
    Ok(refine(f, &uniform(0.0, 60.0 * a0, width), 1e-13, 4).value.re)
}

/// `Y_lm` evaluated at the direction expressed in the rotated frame, using
/// the explicit rotation matrix of `angles`.
pub fn rotation_bruteforce(l: u32, m: i32, angles: EulerAngles, direction: [f64; 3]) -> Result<Complex64> {
    if l > 2 {
        return domain("rotation_bruteforce: need l <= 2");
    }
    let r = angles.rotation_matrix();
    let mut v = [0.0; 3];
    for (i, vi) in v.iter_mut().enumerate() {
        *vi = (0..3).map(|j| r[j][i] * direction[j]).sum();
    }
    let (theta, phi) = direction_angles(v);
    spherical_harmonic(l, m, theta, phi)
}

fn direction_angles(v: [f64; 3]) -> (f64, f64) {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    ((v[2] / n).clamp(-1.0, 1.0).acos(), v[1].atan2(v[0]))
}

/// `(1 / 4 pi) int (zA . (1 - k k) . zB) e^{i k.x} dOmega_k` for a unit
/// momentum scaled by `k`.
pub fn em_angular_bruteforce(za: [f64; 3], zb: [f64; 3], x: [f64; 3], k: f64) -> Complex64 {
    let dot = |p: [f64; 3], q: [f64; 3]| p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
    sphere_integral(
        |theta, phi| {
            let n = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
            let proj = dot(za, zb) - dot(za, n) * dot(zb, n);
            c(0.0, k * dot(n, x)).exp() * proj
        },
        96,
    ) / (4.0 * PI)
}

/// Overlap of two hydrogen 1s orbitals `d` apart, by quadrature over the
/// radius around one nucleus and the distance to the other.
pub fn orbital_overlap_bruteforce(d: f64, a0: f64) -> f64 {
    let rule = Rule::new(PANEL_ORDER);
    let psi2 = 1.0 / (PI * a0.powi(3));
    let mut outer = |r: f64| {
        let lo = (r - d).abs();
        let hi = r + d;
        let mut g = |v: f64| Complex64::new((-v / a0).exp() * v, 0.0);
        let inner = composite(&mut g, &uniform(lo, hi, a0), &rule);
        // dOmega = 2 pi v dv / (r d)
        Complex64::new(2.0 * PI * r * r * (-r / a0).exp() / (r * d), 0.0) * inner
    };
    let mut breaks = uniform(0.0, d, a0);
    breaks.extend(uniform(d, d + 60.0 * a0, a0).into_iter().skip(1));
    (composite(&mut outer, &breaks, &rule) * psi2).re
}

// ---------------------------------------------------------------------------
// families

struct Family {
    name: &'static str,
    tolerance: f64,
    run: fn() -> Vec<Sample>,
}

/// One comparison: closed form, brute force, the scale below which the
/// error is measured absolutely, and the brute-force cost.
struct Sample {
    closed: Complex64,
    brute: Complex64,
    floor: f64,
    budget: u64,
    converged: bool,
}

impl Sample {
    fn new(closed: Complex64, brute: BruteForce<Complex64>, floor: f64) -> Self {
        Sample { closed, brute: brute.value, floor, budget: brute.evaluations, converged: brute.converged }
    }

    fn plain(closed: Complex64, brute: Complex64, floor: f64) -> Self {
        Sample { closed, brute, floor, budget: 0, converged: true }
    }

    fn failed() -> Self {
        let nan = c(f64::NAN, f64::NAN);
        Sample { closed: nan, brute: nan, floor: 0.0, budget: 0, converged: false }
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn time_kernel_grid() -> Vec<Sample> {
    let mut out = Vec::new();
    for i in 0..10 {
        for j in 0..10 {
            let k = 20.0 * i as f64 / 9.0;
            let t = 12.0 * j as f64 / 9.0;
            let (oa, ob) = if (i + j) % 2 == 0 { (1.0, 1.0) } else { (1.7, 0.6) };
            let ta = -0.3;
            match time_integral_scaled(oa, ob, k, ta, ta + t) {
                Ok(cf) => out.push(Sample::new(cf, time_integral_bruteforce_scaled(oa, ob, k, ta, ta + t), 0.0)),
                Err(_) => out.push(Sample::failed()),
            }
        }
    }
    out
}

fn time_kernel_schemes() -> Vec<Sample> {
    [(1.0, 1.0, 0.7, 0.0, 1.5), (1.7, 0.6, 2.0, -0.5, 0.5), (3.0, 2.0, -1.2, 0.0, 2.0)]
        .iter()
        .map(|&(oa, ob, k, ta, tb)| {
            let t = triangle_bruteforce_scaled(oa, ob, k, ta, tb);
            let mut s = Sample::new(t.value, time_integral_bruteforce_scaled(oa, ob, k, ta, tb), 0.0);
            s.budget += t.evaluations;
            s.converged &= t.converged;
            s
        })
        .collect()
}

fn time_kernel_elementary() -> Vec<Sample> {
    // at k = 0 the two orderings tile the plane: a product of Gaussian transforms
    [(1.0, 1.0, 0.0, 0.0), (2.0, 2.0, -1.0, 2.5), (1.5, 0.5, 0.3, 1.1)]
        .iter()
        .map(|&(oa, ob, ta, tb)| {
            let s: f64 = oa + ob;
            let exact = c(s * s / 8.0 - 0.25 * (oa * oa + ob * ob), oa * ta + ob * tb).exp() * PI;
            Sample::new(exact, time_integral_bruteforce_scaled(oa, ob, 0.0, ta, tb), 0.0)
        })
        .collect()
}

fn time_translation() -> Vec<Sample> {
    // a common shift of both centres changes only the phase
    [(1.2, 1.2, 0.8, 0.0, 2.0), (1.4, 0.9, 1.5, -1.0, 0.5)]
        .iter()
        .map(|&(oa, ob, k, ta, tb)| {
            let a = time_integral_bruteforce_scaled(oa, ob, k, ta, tb);
            let b = time_integral_bruteforce_scaled(oa, ob, k, ta + 3.7, tb + 3.7);
            let mut s = Sample::new(real(a.value.norm()), b, 0.0);
            s.brute = real(b.value.norm());
            s.budget += a.evaluations;
            s.converged &= a.converged;
            s
        })
        .collect()
}

fn time_kernel_physical() -> Vec<Sample> {
    // the unscaled form with a switching width different from one
    let t_width = 2.5;
    let (oa, ob, k, ta, tb) = (0.4, 0.4, 0.3, 0.0, 2.0);
    match (crate::harvesting::time_integral_closed(oa, ob, k, ta, tb, t_width), time_integral_bruteforce(oa, ob, k, ta, tb, t_width)) {
        (Ok(cf), Ok(bf)) => vec![Sample::new(cf, bf, 0.0)],
        _ => vec![Sample::failed()],
    }
}

fn harmonics() -> Vec<Sample> {
    let h = HarmonicIndex::new;
    let hc = HarmonicIndex::conj;
    let sets: Vec<Vec<HarmonicIndex>> = vec![
        vec![hc(2, 1), h(2, 1)],
        vec![h(1, 0), h(1, 0), h(2, 0)],
        vec![hc(2, 1), h(1, 1), h(1, 0)],
        vec![h(1, 1), h(1, -1), h(2, 0), h(2, 0)],
        vec![hc(3, 2), h(1, 1), h(2, 1), h(0, 0)],
        vec![h(1, 1), h(1, 0), h(2, -1), h(1, 0), h(1, 0)],
        vec![hc(1, 0), h(1, 0), h(1, 1), h(1, -1), h(2, 0)],
        // selection rule: the m values do not cancel
        vec![h(1, 1), h(1, 0), h(2, 0)],
        vec![h(2, 2), h(1, 1), h(1, 0), h(1, 0)],
    ];
    let mut out: Vec<Sample> = sets
        .iter()
        .map(|s| {
            let closed = if s.len() == 2 {
                // normalization
                Ok(1.0)
            } else {
                gaunt_integral(s)
            };
            match (closed, sphere_quadrature(s)) {
                (Ok(cf), Ok(bf)) => Sample::plain(real(cf), bf, 1.0),
                _ => Sample::failed(),
            }
        })
        .collect();
    for l1 in 0..=3u32 {
        for l2 in l1..=3u32 {
            for l3 in l2..=3u32 {
                for m1 in -(l1 as i32)..=l1 as i32 {
                    for m2 in -(l2 as i32)..=l2 as i32 {
                        let m3 = -(m1 + m2);
                        if m3.unsigned_abs() > l3 {
                            continue;
                        }
                        let set = [h(l1, m1), h(l2, m2), h(l3, m3)];
                        match (gaunt_integral(&set), sphere_quadrature(&set)) {
                            (Ok(cf), Ok(bf)) => out.push(Sample::plain(real(cf), bf, 1.0)),
                            _ => out.push(Sample::failed()),
                        }
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 0..80 {
        let mut set = Vec::new();
        let mut msum = 0;
        let len = 4 + n % 2;
        for i in 0..len {
            let l = rng.random_range(0..=3u32);
            let m = if i + 1 < len {
                rng.random_range(-(l as i32)..=l as i32)
            } else {
                (-msum).clamp(-(l as i32), l as i32)
            };
            msum += m;
            set.push(h(l, m));
        }
        match (gaunt_integral(&set), sphere_quadrature(&set)) {
            (Ok(cf), Ok(bf)) => out.push(Sample::plain(real(cf), bf, 1.0)),
            _ => out.push(Sample::failed()),
        }
    }
    out
}

fn radial() -> Vec<Sample> {
    let a0 = 0.7;
    let mut out = vec![Sample::plain(real(128.0 * 6f64.sqrt() / 243.0 * a0), real(radial_bruteforce(0, 0.0, a0).unwrap_or(f64::NAN)), 0.0)];
    let mut cases: Vec<(u32, f64)> = Vec::new();
    for l in 0..=4 {
        cases.extend([0.0, 0.3, 1.0, 2.5, 10.0].iter().map(|&ak| (l, ak)));
    }
    for l in [0, 2] {
        cases.extend((0..50).map(|i| (l, 10f64.powf(-3.0 + 6.0 * i as f64 / 49.0))));
    }
    for (l, ak) in cases {
        let k = ak / a0;
        match (radial_overlap(l, k, a0), radial_bruteforce(l, k, a0)) {
            (Ok(cf), Ok(bf)) => out.push(Sample::plain(real(cf), real(bf), 1e-3 * a0)),
            _ => out.push(Sample::failed()),
        }
    }
    out
}

fn rotations() -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut cases = vec![
        (EulerAngles::IDENTITY, [0.3, -0.4, 0.8]),
        (EulerAngles { psi: 0.0, theta: PI / 2.0, phi: 0.0 }, [0.6, 0.0, 0.8]),
    ];
    for _ in 0..100 {
        let angles = EulerAngles {
            psi: rng.random_range(0.0..2.0 * PI),
            theta: rng.random_range(0.0..PI),
            phi: rng.random_range(0.0..2.0 * PI),
        };
        let v = [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)];
        cases.push((angles, v));
    }
    let mut out = Vec::new();
    for (angles, v) in cases {
        let (theta, phi) = direction_angles(v);
        for l in 0..=2u32 {
            for m in -(l as i32)..=l as i32 {
                match (rotate_harmonic(l, m, angles, theta, phi), rotation_bruteforce(l, m, angles, v)) {
                    (Ok(cf), Ok(bf)) => out.push(Sample::plain(cf, bf, 1.0)),
                    _ => out.push(Sample::failed()),
                }
            }
        }
    }
    out
}

fn polarization() -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut out = Vec::new();
    for _ in 0..1000 {
        let k = [rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)];
        let n2: f64 = k.iter().map(|x| x * x).sum();
        let Ok(p) = polarization_completeness(k) else {
            out.push(Sample::failed());
            continue;
        };
        for a in 0..3 {
            for b in 0..3 {
                let delta = if a == b { 1.0 } else { 0.0 };
                out.push(Sample::plain(real(p[a][b]), real(delta - k[a] * k[b] / n2), 1.0));
            }
        }
    }
    out
}

fn em_angular() -> Vec<Sample> {
    let x = [1.0, 0.0, 0.0];
    let mut out = Vec::new();
    for &kd in &[0.0, 0.7, 3.1, 9.5] {
        // orbitals along the separation
        let bf = em_angular_bruteforce(x, x, x, kd);
        out.push(Sample::plain(real(2.0 / 3.0 * ModelKind::EmDipole.spatial_kernel(kd)), bf, 1.0));
        // one orbital along the separation, the other across it
        let bf = em_angular_bruteforce(x, [0.0, 1.0, 0.0], x, kd);
        out.push(Sample::plain(real(0.0), bf, 1.0));
        // scalar models
        let bf = sphere_integral(|theta, _| c(0.0, kd * theta.cos()).exp(), 96) / (4.0 * PI);
        out.push(Sample::plain(real(ModelKind::UdwScalar.spatial_kernel(kd)), bf, 1.0));
    }
    out
}

fn test_pair(model: ModelKind, a: f64, omega: f64, d: f64, t: f64) -> DetectorPair {
    let atom_a = AtomSpec::new(a, omega, 1.0);
    let mut atom_b = atom_a;
    atom_b.position = [d, 0.0, 0.0];
    atom_b.switching_center = t;
    DetectorPair::new(atom_a, atom_b, model)
}

fn local_terms() -> Vec<Sample> {
    let mut out = Vec::new();
    for model in ModelKind::ALL {
        for &(a, omega) in &[(0.001, 1.0), (0.001 / 12.0, 12.0), (0.05, 2.0)] {
            let pair = test_pair(model, a, omega, 1.0, 0.0);
            match local_term(&pair, Which::A) {
                Ok(cf) => out.push(Sample::new(real(cf.value), local_bruteforce(model, a, omega), 0.0)),
                Err(_) => out.push(Sample::failed()),
            }
        }
    }
    out
}

fn cross_noise() -> Vec<Sample> {
    let mut out = Vec::new();
    for model in ModelKind::ALL {
        for &(a, omega, d, t) in &[(0.001, 1.0, 1.0, 1.0), (0.01, 2.0, 3.0, 0.5), (0.001, 1.0, 0.0, 0.0)] {
            let pair = test_pair(model, a, omega, d, t);
            match cross_noise_term(&pair) {
                Ok(cf) => out.push(Sample::new(cf.value, cross_noise_bruteforce(model, a, d, 1.0, omega, omega, 0.0, t), 0.0)),
                Err(_) => out.push(Sample::failed()),
            }
        }
    }
    out
}

fn nonlocal_symmetric() -> Vec<Sample> {
    let mut out = Vec::new();
    for &(model, a, omega, d, t) in &[
        (ModelKind::UdwScalar, 0.001, 1.0, 0.05, 0.0),
        (ModelKind::EmDipole, 0.001, 2.0, 1.5, 1.0),
        (ModelKind::UdwDerivative, 0.01, 1.0, 2.0, 2.5),
    ] {
        let pair = test_pair(model, a, omega, d, t);
        match nonlocal_term_split(&pair) {
            Ok(cf) => out.push(Sample::new(cf.symmetric, nonlocal_symmetric_bruteforce(model, a, d, 1.0, omega, omega, 0.0, t), 0.0)),
            Err(_) => out.push(Sample::failed()),
        }
    }
    out
}

fn nonlocal_routes() -> Vec<Sample> {
    let mut out = Vec::new();
    for model in ModelKind::ALL {
        for &(a, omega, d, t) in &[(0.001, 1.0, 1.0, 1.0), (0.001 / 12.0, 12.0, 11.0, 10.0), (0.001, 2.0, 4.0, 0.0)] {
            let pair = test_pair(model, a, omega, d, t);
            match (nonlocal_term(&pair), nonlocal_term_split(&pair)) {
                (Ok(p), Ok(s)) => out.push(Sample::plain(p.value, s.total, 0.0)),
                _ => out.push(Sample::failed()),
            }
        }
    }
    out
}

fn commutator() -> Vec<Sample> {
    let (a, d) = (0.05, 2.5);
    let mut out = Vec::new();
    for model in ModelKind::ALL {
        for &x in &[-3.0, -0.7, 0.0, 1.3, 4.0] {
            let delta = d + x * a;
            match commutator_kernel(model, a, d, delta) {
                Ok(cf) => out.push(Sample::new(real(cf), commutator_bruteforce(model, a, d, delta), 0.0)),
                Err(_) => out.push(Sample::failed()),
            }
        }
    }
    out
}

fn orbital_overlap() -> Vec<Sample> {
    [0.5, 2.0, 5.0]
        .iter()
        .map(|&d| match wavefunction_overlap_log10(d, 1.0) {
            Ok(lg) => Sample::plain(real(10f64.powf(lg)), real(orbital_overlap_bruteforce(d, 1.0)), 0.0),
            Err(_) => Sample::failed(),
        })
        .collect()
}

const FAMILIES: &[Family] = &[
    Family { name: "time_kernel", tolerance: 1e-8, run: time_kernel_grid },
    Family { name: "time_kernel_schemes", tolerance: 1e-9, run: time_kernel_schemes },
    Family { name: "time_kernel_k0", tolerance: 1e-10, run: time_kernel_elementary },
    Family { name: "time_kernel_width", tolerance: 1e-8, run: time_kernel_physical },
    Family { name: "time_translation", tolerance: 1e-9, run: time_translation },
    Family { name: "gaunt", tolerance: 1e-10, run: harmonics },
    Family { name: "radial_overlap", tolerance: 1e-11, run: radial },
    Family { name: "rotation", tolerance: 1e-12, run: rotations },
    Family { name: "polarization", tolerance: 1e-14, run: polarization },
    Family { name: "em_angular", tolerance: 1e-10, run: em_angular },
    Family { name: "orbital_overlap", tolerance: 1e-10, run: orbital_overlap },
    Family { name: "local_term", tolerance: 1e-8, run: local_terms },
    Family { name: "cross_noise", tolerance: 1e-8, run: cross_noise },
    Family { name: "nonlocal_symmetric", tolerance: 1e-8, run: nonlocal_symmetric },
    Family { name: "commutator_kernel", tolerance: 1e-8, run: commutator },
    Family { name: "nonlocal_routes", tolerance: 1e-7, run: nonlocal_routes },
];

fn point(model: ModelKind, omega_t: f64, d: f64, tba: f64, theta: f64) -> Result<DetectorPair> {
    let p = PointParams { omega_t, d_over_t: d, tba_over_t: tba, theta, ..PointParams::default() };
    p.pair(model, &ScanSettings::default())
}

fn orientation_law() -> Vec<Sample> {
    let m_abs = |theta: f64| point(ModelKind::EmDipole, 1.0, 1.0, 1.0, theta).and_then(|p| nonlocal_term(&p)).map(|m| m.value.norm());
    let Ok(m0) = m_abs(0.0) else {
        return vec![Sample::failed()];
    };
    let mut out: Vec<Sample> = [PI / 6.0, PI / 4.0, PI / 3.0]
        .iter()
        .map(|&theta| match m_abs(theta) {
            Ok(m) => Sample::plain(real(m), real(m0 * theta.cos().abs()), 0.0),
            Err(_) => Sample::failed(),
        })
        .collect();
    // perpendicular orbitals: the clamped negativity must vanish exactly
    let n = point(ModelKind::EmDipole, 1.0, 1.0, 1.0, PI / 2.0)
        .and_then(|p| compute_terms(&p))
        .and_then(|t| assemble_state(&t))
        .map(|s| s.negativity);
    out.push(match n {
        Ok(n) => Sample::plain(real(n), real(0.0), f64::MIN_POSITIVE),
        Err(_) => Sample::failed(),
    });
    out
}

fn positivity() -> Vec<Sample> {
    let mut out = Vec::new();
    for &d in &[0.5, 3.5, 6.5, 9.5, 12.5] {
        for &tba in &[0.0, 3.0, 6.0, 9.0, 12.0] {
            let report = point(ModelKind::EmDipole, 12.0, d, tba, 0.0).and_then(|p| compute_terms(&p)).map(|t| positivity_report(&t, 1.0));
            out.push(match report {
                Ok(r) => Sample::plain(real(if r.passes() { 0.0 } else { 1.0 }), real(0.0), 1.0),
                Err(_) => Sample::failed(),
            });
        }
    }
    out
}

fn derivative_ratio() -> Vec<Sample> {
    let (Ok(scalar), Ok(derivative)) =
        (point(ModelKind::UdwScalar, 1.0, 1.3, 0.8, 0.0), point(ModelKind::UdwDerivative, 1.0, 1.3, 0.8, 0.0))
    else {
        return vec![Sample::failed()];
    };
    let mut out = Vec::new();
    for i in 0..40 {
        let k = 0.05 * 400f64.powf(i as f64 / 39.0);
        match (term_integrands(&scalar, k), term_integrands(&derivative, k)) {
            (Ok(s), Ok(d)) => {
                out.push(Sample::plain(real(d.local), real(k * k * s.local), 0.0));
                out.push(Sample::plain(d.nonlocal, k * k * s.nonlocal, 0.0));
            }
            _ => out.push(Sample::failed()),
        }
    }
    out
}

fn decomposition() -> Vec<Sample> {
    let a0 = 1.0;
    let mut out = Vec::new();
    for i in 0..100 {
        let k = 10f64.powf(-3.0 + 6.0 * i as f64 / 99.0);
        let x = 1.7 * k;
        let u = k * k;
        let printed = 49152.0 / (4.0 * u + 9.0).powi(6);
        match em_decomposition_identity(k, a0, x) {
            Ok(e) => {
                out.push(Sample::plain(real(e.local_total), real(printed), 0.0));
                let kernel = bessel_j(0, x) + bessel_j(2, x);
                out.push(Sample::plain(real(e.nonlocal_total), real(printed * kernel), printed * 1e-3));
            }
            Err(_) => out.push(Sample::failed()),
        }
    }
    out
}

fn locality() -> Vec<Sample> {
    let reference = point(ModelKind::EmDipole, 3.0, 1.0, 1.0, 0.0).and_then(|p| local_term(&p, Which::A)).map(|l| l.value);
    let Ok(l0) = reference else {
        return vec![Sample::failed()];
    };
    let mut out = Vec::new();
    for &d in &[0.0, 2.0, 7.5, 20.0] {
        for &tba in &[0.0, 4.0, 11.0] {
            let l = point(ModelKind::EmDipole, 3.0, d, tba, 0.7).and_then(|p| compute_terms(&p));
            out.push(match l {
                Ok(t) => Sample::plain(real(t.l_aa), real(l0), 0.0),
                Err(_) => Sample::failed(),
            });
        }
    }
    out
}

const INVARIANTS: &[Family] = &[
    Family { name: "orientation_law", tolerance: 1e-9, run: orientation_law },
    Family { name: "positivity", tolerance: 0.0, run: positivity },
    Family { name: "derivative_ratio", tolerance: 1e-12, run: derivative_ratio },
    Family { name: "decomposition_identity", tolerance: 1e-12, run: decomposition },
    Family { name: "locality", tolerance: 1e-12, run: locality },
];

/// Engine-level properties checked alongside the oracles. These have no
/// closed form to perturb, so they take no mutation.
pub fn invariant_suites() -> Vec<OracleReport> {
    INVARIANTS.par_iter().map(|f| evaluate(f, None)).collect()
}

/// Names of all oracle families, in report order.
pub fn family_names() -> Vec<&'static str> {
    FAMILIES.iter().map(|f| f.name).collect()
}

fn evaluate(family: &Family, mutation: Option<&Mutation>) -> OracleReport {
    let factor = match mutation {
        Some(m) if m.family == family.name => 1.0 + m.relative,
        _ => 1.0,
    };
    let samples = (family.run)();
    let mut worst = OracleReport {
        name: family.name.to_string(),
        closed_form: c(f64::NAN, f64::NAN),
        brute_force: c(f64::NAN, f64::NAN),
        rel_err: 0.0,
        tolerance: family.tolerance,
        pass: !samples.is_empty(),
        budget: 0,
    };
    for s in &samples {
        let closed = s.closed * factor;
        let mut rel = (closed - s.brute).norm() / s.brute.norm().max(s.floor);
        if !rel.is_finite() || !s.converged {
            rel = f64::INFINITY;
        }
        worst.budget += s.budget;
        if rel >= worst.rel_err || worst.closed_form.is_nan() {
            worst.rel_err = worst.rel_err.max(rel);
            worst.closed_form = closed;
            worst.brute_force = s.brute;
        }
    }
    worst.pass &= worst.rel_err <= family.tolerance;
    worst
}

/// Runs one family by name.
pub fn run_family(name: &str, mutation: Option<&Mutation>) -> Result<OracleReport> {
    match FAMILIES.iter().find(|f| f.name == name) {
        Some(f) => Ok(evaluate(f, mutation)),
        None => domain(format!("unknown oracle family {name}")),
    }
}

/// Runs every oracle family, optionally with one closed form perturbed.
pub fn run_all_with(mutation: Option<&Mutation>) -> Vec<OracleReport> {
    FAMILIES.par_iter().map(|f| evaluate(f, mutation)).collect()
}

/// Runs every oracle family on its fixed grid.
pub fn run_all() -> Vec<OracleReport> {
    run_all_with(None)
}
