//! Angular-momentum algebra: 3j symbols, Wigner D functions, spherical
//! harmonics and integrals of products of harmonics.
//!
//! Euler angles `(psi, theta, phi)` describe atom B's frame relative to atom
//! A's. B's axes, written in A's frame, are the columns of
//! `Rz(-psi) Ry(-theta) Rz(-phi)`; B's z axis is therefore
//! `(-sin theta cos psi, sin theta sin psi, cos theta)`. With this choice
//! `D^1_{00} = cos theta` and the rotated `l = 1, m = 0` harmonic has the
//! angular factor `cos t cos theta - sin t sin theta cos(psi + p)` at the
//! direction `(t, p)`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThreeJ {
    pub l1: u32,
    pub l2: u32,
    pub l3: u32,
    pub m1: i32,
    pub m2: i32,
    pub m3: i32,
}

impl ThreeJ {
    pub fn new(l: [u32; 3], m: [i32; 3]) -> Self {
        ThreeJ { l1: l[0], l2: l[1], l3: l[2], m1: m[0], m2: m[1], m3: m[2] }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EulerAngles {
    pub psi: f64,
    pub theta: f64,
    pub phi: f64,
}

impl EulerAngles {
    pub const IDENTITY: EulerAngles = EulerAngles { psi: 0.0, theta: 0.0, phi: 0.0 };

    pub fn new(psi: f64, theta: f64, phi: f64) -> Self {
        EulerAngles { psi, theta, phi }
    }

    /// Columns are B's axes expressed in A's frame.
    pub fn rotation_matrix(&self) -> [[f64; 3]; 3] {
        matmul(matmul(rot_z(-self.psi), rot_y(-self.theta)), rot_z(-self.phi))
    }

    /// Angles of a rotation matrix built as in [`EulerAngles::rotation_matrix`].
    pub fn from_rotation_matrix(r: &[[f64; 3]; 3]) -> Self {
        let beta = r[2][2].clamp(-1.0, 1.0).acos();
        let (alpha, gamma) = if beta.sin().abs() > 1e-12 {
            (r[1][2].atan2(r[0][2]), r[2][1].atan2(-r[2][0]))
        } else {
            // gimbal lock: only alpha + gamma (or alpha - gamma) is defined
            (r[1][0].atan2(r[0][0]) * if r[2][2] > 0.0 { 1.0 } else { -1.0 }, 0.0)
        };
        EulerAngles { psi: -alpha, theta: -beta, phi: -gamma }
    }

    /// B's z axis in A's frame.
    pub fn z_axis(&self) -> [f64; 3] {
        let r = self.rotation_matrix();
        [r[0][2], r[1][2], r[2][2]]
    }
}

pub(crate) fn rot_z(a: f64) -> [[f64; 3]; 3] {
    let (s, c) = a.sin_cos();
    [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]
}

pub(crate) fn rot_y(a: f64) -> [[f64; 3]; 3] {
    let (s, c) = a.sin_cos();
    [[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]]
}

pub(crate) fn matmul(a: [[f64; 3]; 3], b: [[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HarmonicIndex {
    pub l: u32,
    pub m: i32,
    pub conjugated: bool,
}

impl HarmonicIndex {
    pub fn new(l: u32, m: i32) -> Self {
        HarmonicIndex { l, m, conjugated: false }
    }

    pub fn conj(l: u32, m: i32) -> Self {
        HarmonicIndex { l, m, conjugated: true }
    }

    /// Rewrite as an unconjugated harmonic: `Y*_{lm} = (-1)^m Y_{l,-m}`.
    fn plain(self) -> (u32, i32, f64) {
        if self.conjugated { (self.l, -self.m, parity(self.m)) } else { (self.l, self.m, 1.0) }
    }
}

fn parity(n: i32) -> f64 {
    if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 }
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Wigner 3j symbol from the Racah sum with exact rational arithmetic.
pub fn wigner_3j(t: ThreeJ) -> f64 {
    let (j1, j2, j3) = (t.l1 as i64, t.l2 as i64, t.l3 as i64);
    let (m1, m2, m3) = (t.m1 as i64, t.m2 as i64, t.m3 as i64);
    if m1.abs() > j1 || m2.abs() > j2 || m3.abs() > j3 {
        return 0.0;
    }
    if m1 + m2 + m3 != 0 || j3 > j1 + j2 || j3 < (j1 - j2).abs() {
        return 0.0;
    }
    if m1 == 0 && m2 == 0 && m3 == 0 && (j1 + j2 + j3) % 2 == 1 {
        return 0.0;
    }
    let kmin = 0.max(j2 - j3 - m1).max(j1 - j3 + m2);
    let kmax = (j1 + j2 - j3).min(j1 - m1).min(j2 + m2);
    let mut sum = BigRational::zero();
    for k in kmin..=kmax {
        let den = factorial(k)
            * factorial(j3 - j2 + k + m1)
            * factorial(j3 - j1 + k - m2)
            * factorial(j1 + j2 - j3 - k)
            * factorial(j1 - k - m1)
            * factorial(j2 - k + m2);
        let term = BigRational::new(BigInt::one(), den);
        if k % 2 == 0 { sum += term } else { sum -= term }
    }
    if sum.is_zero() {
        return 0.0;
    }
    let tri = BigRational::new(
        factorial(j1 + j2 - j3) * factorial(j1 - j2 + j3) * factorial(-j1 + j2 + j3),
        factorial(j1 + j2 + j3 + 1),
    );
    let fact = [j1 + m1, j1 - m1, j2 + m2, j2 - m2, j3 + m3, j3 - m3]
        .iter()
        .fold(BigInt::one(), |acc, &n| acc * factorial(n));
    let square = &sum * &sum * tri * BigRational::from_integer(fact);
    let magnitude = square.to_f64().expect("finite rational").sqrt();
    let sign = if sum.is_negative() { -1.0 } else { 1.0 } * parity((j1 - j2 - m3) as i32);
    sign * magnitude
}

fn factorial_f(n: i64) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Small Wigner d function `d^l_{mu m}(beta)` in the standard convention.
pub(crate) fn small_d(l: i32, mu: i32, m: i32, beta: f64) -> f64 {
    if mu < m {
        return parity(m - mu) * small_d(l, m, mu, beta);
    }
    // mu >= m: terminating 2F1(mu - l, -m - l; mu - m + 1; -tan^2(beta/2))
    let (s, c) = (0.5 * beta).sin_cos();
    let norm = (factorial_f((l - m) as i64) * factorial_f((l + mu) as i64)
        / (factorial_f((l + m) as i64) * factorial_f((l - mu) as i64)))
    .sqrt()
        / factorial_f((mu - m) as i64);
    let (a, b, cc) = ((mu - l) as f64, (-m - l) as f64, (mu - m + 1) as f64);
    let nmax = (l - mu).min(l + m);
    let mut coeff = 1.0;
    let mut sum = 0.0;
    for n in 0..=nmax {
        if n > 0 {
            let k = (n - 1) as f64;
            coeff *= (a + k) * (b + k) / ((cc + k) * n as f64) * -1.0;
        }
        // cos^(2l+m-mu) * tan^(2n) written without dividing by cos
        let pc = 2 * l + m - mu - 2 * n;
        sum += coeff * c.powi(pc) * s.powi(2 * n);
    }
    norm * (-s).powi(mu - m) * sum
}

/// `D^l_{mu m}` for the Euler convention documented at module level.
pub fn wigner_d(l: u32, mu: i32, m: i32, angles: EulerAngles) -> Result<Complex64> {
    let li = l as i32;
    if mu.abs() > li || m.abs() > li {
        return domain(format!("wigner_D: |mu|, |m| must not exceed l (l={l}, mu={mu}, m={m})"));
    }
    let phase = Complex64::from_polar(1.0, mu as f64 * angles.psi + m as f64 * angles.phi);
    Ok(phase * small_d(li, mu, m, -angles.theta))
}

/// Associated Legendre function with the Condon-Shortley phase, `m >= 0`.
fn legendre_p(l: i32, m: i32, x: f64) -> f64 {
    let mut pmm = 1.0;
    if m > 0 {
        let somx2 = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();
        let mut fact = 1.0;
        for _ in 0..m {
            pmm *= -fact * somx2;
            fact += 2.0;
        }
    }
    if l == m {
        return pmm;
    }
    let mut pmmp1 = x * (2 * m + 1) as f64 * pmm;
    if l == m + 1 {
        return pmmp1;
    }
    let mut pll = 0.0;
    for ll in (m + 2)..=l {
        pll = (x * (2 * ll - 1) as f64 * pmmp1 - (ll + m - 1) as f64 * pmm) / (ll - m) as f64;
        pmm = pmmp1;
        pmmp1 = pll;
    }
    pll
}

/// Orthonormal spherical harmonic `Y_lm(theta, phi)`.
pub fn spherical_harmonic(l: u32, m: i32, theta: f64, phi: f64) -> Result<Complex64> {
    let li = l as i32;
    if m.abs() > li {
        return domain(format!("spherical_harmonic: |m| = {} exceeds l = {l}", m.abs()));
    }
    Ok(ylm(li, m, theta, phi))
}

pub(crate) fn ylm(l: i32, m: i32, theta: f64, phi: f64) -> Complex64 {
    let am = m.abs();
    let norm = ((2 * l + 1) as f64 / (4.0 * PI) * factorial_f((l - am) as i64) / factorial_f((l + am) as i64)).sqrt();
    let v = Complex64::from_polar(norm * legendre_p(l, am, theta.cos()), am as f64 * phi);
    if m >= 0 { v } else { parity(am) * v.conj() }
}

/// Atom B's harmonic `Y^B_lm` evaluated at a direction given in A's frame.
pub fn rotate_harmonic(l: u32, m: i32, angles: EulerAngles, theta: f64, phi: f64) -> Result<Complex64> {
    let li = l as i32;
    if m.abs() > li {
        return domain(format!("rotate_harmonic: |m| = {} exceeds l = {l}", m.abs()));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for mu in -li..=li {
        sum += ylm(li, mu, theta, phi) * wigner_d(l, mu, m, angles)?;
    }
    Ok(sum)
}

fn tj(l1: u32, l2: u32, l3: u32, m1: i32, m2: i32, m3: i32) -> f64 {
    wigner_3j(ThreeJ::new([l1, l2, l3], [m1, m2, m3]))
}

fn gaunt3(a: (u32, i32), b: (u32, i32), c: (u32, i32)) -> f64 {
    let pre = (((2 * a.0 + 1) * (2 * b.0 + 1) * (2 * c.0 + 1)) as f64 / (4.0 * PI)).sqrt();
    pre * tj(a.0, b.0, c.0, 0, 0, 0) * tj(a.0, b.0, c.0, a.1, b.1, c.1)
}

/// `int Y*_1 Y_2 Y*_3 Y_4 dOmega`, summed over the coupled momentum.
fn gaunt4(h: [(u32, i32); 4]) -> f64 {
    let [(l1, m1), (l2, m2), (l3, m3), (l4, m4)] = h;
    if m1 + m3 != m2 + m4 {
        return 0.0;
    }
    let mu = -(m2 + m4);
    let pre = ((2 * l1 + 1) as f64 * (2 * l2 + 1) as f64 * (2 * l3 + 1) as f64 * (2 * l4 + 1) as f64).sqrt();
    let lo = l1.abs_diff(l3).max(l2.abs_diff(l4));
    let hi = (l1 + l3).min(l2 + l4);
    (lo..=hi.max(lo))
        .filter(|&lam| lam <= hi)
        .map(|lam| {
            (2 * lam + 1) as f64 / (4.0 * PI)
                * tj(l1, l3, lam, 0, 0, 0)
                * tj(l1, l3, lam, -m1, -m3, -mu)
                * tj(l2, l4, lam, 0, 0, 0)
                * tj(l2, l4, lam, m2, m4, mu)
        })
        .sum::<f64>()
        * pre
}

/// `int Y_1 Y_2 Y_3 Y_4 Y_5 dOmega` by coupling (1,2) and (4,5) first.
fn gaunt5(h: [(u32, i32); 5]) -> f64 {
    let [(l1, m1), (l2, m2), (l3, m3), (l4, m4), (l5, m5)] = h;
    if m1 + m2 + m3 + m4 + m5 != 0 {
        return 0.0;
    }
    let pre = ((2 * l1 + 1) as f64
        * (2 * l2 + 1) as f64
        * (2 * l3 + 1) as f64
        * (2 * l4 + 1) as f64
        * (2 * l5 + 1) as f64
        / (4.0 * PI))
        .sqrt();
    // the middle coupling carries (-1)^{m3}, from Y*_{LM} = (-1)^M Y_{L,-M}
    let phase = parity(m3);
    let mut total = 0.0;
    for lam in l1.abs_diff(l2)..=(l1 + l2) {
        let a = tj(l1, l2, lam, 0, 0, 0) * tj(l1, l2, lam, m1, m2, -m1 - m2);
        if a == 0.0 {
            continue;
        }
        for lamp in l4.abs_diff(l5)..=(l4 + l5) {
            let b = tj(l4, l5, lamp, 0, 0, 0) * tj(l4, l5, lamp, m4, m5, -m4 - m5);
            if b == 0.0 {
                continue;
            }
            let c = tj(l3, lamp, lam, 0, 0, 0) * tj(l3, lamp, lam, m3, m4 + m5, m1 + m2);
            total += (2 * lam + 1) as f64 * (2 * lamp + 1) as f64 / (4.0 * PI) * a * b * c;
        }
    }
    phase * pre * total
}

/// Integral over the unit sphere of a product of 3, 4 or 5 harmonics.
pub fn gaunt_integral(indices: &[HarmonicIndex]) -> Result<f64> {
    for h in indices {
        if h.m.unsigned_abs() > h.l {
            return domain(format!("gaunt_integral: |m| exceeds l in {h:?}"));
        }
    }
    match indices.len() {
        3 => {
            let p: Vec<(u32, i32, f64)> = indices.iter().map(|h| h.plain()).collect();
            let sign: f64 = p.iter().map(|x| x.2).product();
            Ok(sign * gaunt3((p[0].0, p[0].1), (p[1].0, p[1].1), (p[2].0, p[2].1)))
        }
        4 => {
            // bring slots 1 and 3 to conjugated form, 2 and 4 to plain form
            let mut sign = 1.0;
            let mut h = [(0u32, 0i32); 4];
            for (i, x) in indices.iter().enumerate() {
                let want_conj = i % 2 == 0;
                let m = if x.conjugated == want_conj {
                    x.m
                } else {
                    sign *= parity(x.m);
                    -x.m
                };
                h[i] = (x.l, m);
            }
            Ok(sign * gaunt4(h))
        }
        5 => {
            let p: Vec<(u32, i32, f64)> = indices.iter().map(|h| h.plain()).collect();
            let sign: f64 = p.iter().map(|x| x.2).product();
            let h = [(p[0].0, p[0].1), (p[1].0, p[1].1), (p[2].0, p[2].1), (p[3].0, p[3].1), (p[4].0, p[4].1)];
            Ok(sign * gaunt5(h))
        }
        n => domain(format!("gaunt_integral: {n} harmonics, expected 3, 4 or 5")),
    }
}

/// `sum over the two transverse polarisations of e e^T` for wave vector `k`.
pub fn polarization_completeness(k: [f64; 3]) -> Result<[[f64; 3]; 3]> {
    let n = (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]).sqrt();
    if !(n > 0.0) || !n.is_finite() {
        return domain("polarization_completeness: k must be a finite non-zero vector");
    }
    let kh = [k[0] / n, k[1] / n, k[2] / n];
    // seed with the coordinate axis least aligned with k
    let i = (0..3).min_by(|&a, &b| kh[a].abs().total_cmp(&kh[b].abs())).unwrap();
    let mut seed = [0.0; 3];
    seed[i] = 1.0;
    let e1 = normalize(cross(kh, seed));
    let e2 = cross(kh, e1);
    let mut out = [[0.0; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            out[a][b] = e1[a] * e1[b] + e2[a] * e2[b];
        }
    }
    Ok(out)
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn normalize(a: [f64; 3]) -> [f64; 3] {
    let n = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
    [a[0] / n, a[1] / n, a[2] / n]
}
