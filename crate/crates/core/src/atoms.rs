//! Hydrogenlike orbitals, smearing functions and switching.
//!
//! Lengths and times share one unit (c = 1). Positions passed to the
//! smearing functions are relative to the atom's centre.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::angular::{rotate_harmonic, ylm, EulerAngles};
use crate::error::{domain, Result};
use crate::specfun::quad::{integrate_panels, uniform_breaks, Tolerance};
use crate::specfun::sph_j;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AtomSpec {
    pub a0: f64,
    pub omega: f64,
    pub position: [f64; 3],
    pub switching_center: f64,
    pub switching_width: f64,
    pub orientation: EulerAngles,
}

impl AtomSpec {
    pub fn new(a0: f64, omega: f64, switching_width: f64) -> Self {
        AtomSpec {
            a0,
            omega,
            position: [0.0; 3],
            switching_center: 0.0,
            switching_width,
            orientation: EulerAngles::IDENTITY,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a0 > 0.0 && self.a0.is_finite()) {
            return domain(format!("a0 = {} must be positive", self.a0));
        }
        if !(self.omega > 0.0 && self.omega.is_finite()) {
            return domain(format!("Omega = {} must be positive", self.omega));
        }
        if !(self.switching_width > 0.0 && self.switching_width.is_finite()) {
            return domain(format!("T = {} must be positive", self.switching_width));
        }
        if !(self.switching_center.is_finite() && self.position.iter().all(|p| p.is_finite())) {
            return domain("atom position and switching centre must be finite");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orbital {
    pub n: u32,
    pub l: u32,
    pub m: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TransitionSpec {
    pub ground: Orbital,
    pub excited: Orbital,
}

impl TransitionSpec {
    /// 1s to 2p_z, the dipole transition.
    pub const EM: TransitionSpec =
        TransitionSpec { ground: Orbital { n: 1, l: 0, m: 0 }, excited: Orbital { n: 2, l: 1, m: 0 } };
    /// 1s to 2s, used by both scalar models.
    pub const SCALAR: TransitionSpec =
        TransitionSpec { ground: Orbital { n: 1, l: 0, m: 0 }, excited: Orbital { n: 2, l: 0, m: 0 } };

    pub fn is_dipole(&self) -> bool {
        *self == Self::EM
    }

    pub fn is_scalar(&self) -> bool {
        *self == Self::SCALAR
    }

    pub fn validate(&self) -> Result<()> {
        if self.is_dipole() || self.is_scalar() {
            Ok(())
        } else {
            domain(format!("unsupported transition {:?} -> {:?}", self.ground, self.excited))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
pub enum SwitchingKind {
    #[default]
    Gaussian,
    CroppedGaussian { crop_sigmas: f64 },
}

impl SwitchingKind {
    pub const DEFAULT_CROP_SIGMAS: f64 = 8.0;

    pub fn cropped() -> Self {
        SwitchingKind::CroppedGaussian { crop_sigmas: Self::DEFAULT_CROP_SIGMAS }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            SwitchingKind::Gaussian => Ok(()),
            SwitchingKind::CroppedGaussian { crop_sigmas } if crop_sigmas > 0.0 && crop_sigmas.is_finite() => Ok(()),
            SwitchingKind::CroppedGaussian { crop_sigmas } => {
                domain(format!("crop_sigmas = {crop_sigmas} must be positive"))
            }
        }
    }

    /// Half-width of the support in units of `T`, infinite for the plain Gaussian.
    pub fn crop_half_width(&self) -> f64 {
        match *self {
            SwitchingKind::Gaussian => f64::INFINITY,
            SwitchingKind::CroppedGaussian { crop_sigmas } => crop_sigmas / SQRT_2,
        }
    }
}

/// Hydrogenlike radial function `R_nl(r)`.
pub fn radial_r(n: u32, l: u32, r: f64, a0: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return domain(format!("radial_R: r = {r} must be non-negative"));
    }
    if !(a0 > 0.0) {
        return domain(format!("radial_R: a0 = {a0} must be positive"));
    }
    let s = r / a0;
    let norm = a0.powf(-1.5);
    match (n, l) {
        (1, 0) => Ok(2.0 * norm * (-s).exp()),
        (2, 1) => Ok(norm / 24f64.sqrt() * s * (-0.5 * s).exp()),
        (2, 0) => Ok(norm / SQRT_2 * (1.0 - 0.5 * s) * (-0.5 * s).exp()),
        _ => domain(format!("radial_R: (n, l) = ({n}, {l}) not supported")),
    }
}

fn spherical_coords(x: [f64; 3]) -> (f64, f64, f64) {
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    let theta = if r > 0.0 { (x[2] / r).clamp(-1.0, 1.0).acos() } else { 0.0 };
    let phi = x[1].atan2(x[0]);
    (r, theta, phi)
}

/// `psi_e*(x) x psi_g(x)` for the dipole transition, with the excited
/// orbital oriented by `atom.orientation` and expressed in A's frame.
pub fn smearing_vector(atom: &AtomSpec, transition: TransitionSpec, x: [f64; 3]) -> Result<[Complex64; 3]> {
    if !transition.is_dipole() {
        return domain("smearing_vector needs the 1s -> 2p_z transition; use smearing_scalar");
    }
    let (r, theta, phi) = spherical_coords(x);
    let radial = radial_r(2, 1, r, atom.a0)? * radial_r(1, 0, r, atom.a0)?;
    let y_g = ylm(0, 0, theta, phi);
    let y_e = rotate_harmonic(1, 0, atom.orientation, theta, phi)?;
    let s = radial * y_e.conj() * y_g;
    Ok([s * x[0], s * x[1], s * x[2]])
}

/// `psi_e*(x) psi_g(x)` for the 1s -> 2s transition.
pub fn smearing_scalar(atom: &AtomSpec, x: [f64; 3]) -> f64 {
    let a = atom.a0;
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    (-1.5 * r / a).exp() * (2.0 - r / a) / (4.0 * PI * a.powi(3) * SQRT_2)
}

/// Switching function of an atom at time `t`.
pub fn switching(kind: SwitchingKind, t: f64, atom: &AtomSpec) -> f64 {
    let s = (t - atom.switching_center) / atom.switching_width;
    if s.abs() > kind.crop_half_width() {
        return 0.0;
    }
    (-s * s).exp()
}

/// `int_0^inf r^3 R_21(r) R_10(r) j_l(k r) dr`.
pub fn radial_overlap(l: u32, k: f64, a0: f64) -> Result<f64> {
    if !(a0 > 0.0) || !(k >= 0.0) {
        return domain(format!("radial_overlap: need a0 > 0 and k >= 0, got a0 = {a0}, k = {k}"));
    }
    let u = a0 * a0 * k * k;
    let c = 4.0 * u + 9.0;
    let den = c * c * c * c;
    match l {
        0 => Ok(384.0 * 6f64.sqrt() * a0 * (9.0 - 4.0 * u) / den),
        2 => Ok(3072.0 * 6f64.sqrt() * a0 * u / den),
        1 | 3 | 4 => radial_overlap_quadrature(l, k, a0),
        _ => domain(format!("radial_overlap: l = {l} not supported")),
    }
}

/// Direct quadrature of the radial overlap, valid for any `l <= 4`.
pub fn radial_overlap_quadrature(l: u32, k: f64, a0: f64) -> Result<f64> {
    if l > 4 {
        return domain(format!("radial_overlap: l = {l} not supported"));
    }
    let pre = 2.0 / 24f64.sqrt() / a0.powi(4);
    let f = |r: f64| Complex64::new(pre * r.powi(4) * (-1.5 * r / a0).exp() * sph_j(l, k * r), 0.0);
    let rmax = 60.0 * a0;
    let width = if k > 0.0 { (PI / k).min(a0) } else { a0 };
    let res = integrate_panels(f, &uniform_breaks(0.0, rmax, width), Tolerance::new(1e-300, 1e-13))?;
    Ok(res.value.re)
}

/// `log10` of the overlap of two 1s orbitals whose centres are `d` apart.
pub fn wavefunction_overlap_log10(d: f64, a0: f64) -> Result<f64> {
    if !(d >= 0.0) || !(a0 > 0.0) {
        return domain(format!("wavefunction_overlap_log10: need d >= 0 and a0 > 0, got d = {d}, a0 = {a0}"));
    }
    let r = d / a0;
    Ok((-r + (1.0 + r + r * r / 3.0).ln()) / std::f64::consts::LN_10)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom() -> AtomSpec {
        AtomSpec::new(1.3, 1.0, 1.0)
    }

    #[test]
    fn printed_dipole_smearing_on_axis() {
        let a = atom();
        let f = smearing_vector(&a, TransitionSpec::EM, [0.0, 0.0, a.a0]).unwrap();
        let expect = (-1.5f64).exp() / (4.0 * PI * a.a0 * a.a0 * SQRT_2);
        assert!(f[0].norm() < 1e-16 && f[1].norm() < 1e-16);
        assert!((f[2].re - expect).abs() < 1e-15 * expect);
    }

    #[test]
    fn perpendicular_b_vanishes_on_axis() {
        let mut b = atom();
        b.orientation = EulerAngles::new(0.0, PI / 2.0, 0.0);
        let f = smearing_vector(&b, TransitionSpec::EM, [0.0, 0.0, 0.7]).unwrap();
        assert!(f.iter().all(|c| c.norm() < 1e-16));
    }

    #[test]
    fn dipole_smearing_is_even() {
        let a = atom();
        let x = [0.3, -0.8, 0.45];
        let f = smearing_vector(&a, TransitionSpec::EM, x).unwrap();
        let g = smearing_vector(&a, TransitionSpec::EM, [-0.3, 0.8, -0.45]).unwrap();
        for i in 0..3 {
            assert!((f[i] - g[i]).norm() < 1e-15);
        }
    }

    #[test]
    fn scalar_node_and_origin() {
        let a = atom();
        assert!(smearing_scalar(&a, [0.0, 2.0 * a.a0, 0.0]).abs() < 1e-18);
        let v = smearing_scalar(&a, [0.0; 3]);
        assert!((v - 1.0 / (2.0 * SQRT_2 * PI * a.a0.powi(3))).abs() < 1e-15);
        assert!(smearing_vector(&a, TransitionSpec::SCALAR, [0.0; 3]).is_err());
    }

    #[test]
    fn switching_values() {
        let a = AtomSpec { switching_center: 2.0, ..atom() };
        assert_eq!(switching(SwitchingKind::Gaussian, 2.0, &a), 1.0);
        assert!((switching(SwitchingKind::Gaussian, 3.0, &a) - (-1f64).exp()).abs() < 1e-16);
        let edge = 2.0 + 8.01 / SQRT_2;
        assert_eq!(switching(SwitchingKind::cropped(), edge, &a), 0.0);
        assert!(switching(SwitchingKind::cropped(), 2.0 + 7.99 / SQRT_2, &a) > 0.0);
    }

    #[test]
    fn radial_functions() {
        assert!(radial_r(2, 0, 2.0, 1.0).unwrap().abs() < 1e-300);
        assert!(radial_r(3, 0, 1.0, 1.0).is_err());
        assert!(radial_r(1, 0, -1.0, 1.0).is_err());
        assert_eq!(radial_overlap(2, 0.0, 1.0).unwrap(), 0.0);
        let v = radial_overlap(0, 0.0, 2.0).unwrap();
        assert!((v - 128.0 * 6f64.sqrt() / 243.0 * 2.0).abs() < 1e-14);
    }

    #[test]
    fn overlap_log() {
        assert_eq!(wavefunction_overlap_log10(0.0, 1.0).unwrap(), 0.0);
        let v = wavefunction_overlap_log10(1e4, 1.0).unwrap();
        assert!((v / -4342.94 - 1.0).abs() < 0.01);
    }
}
