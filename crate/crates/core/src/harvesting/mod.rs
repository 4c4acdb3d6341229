//! Second-order harvesting terms, the two-atom density matrix and its
//! entanglement.
//!
//! All integrals are evaluated in units where the switching width `T` is 1.
//! Each momentum integral is computed in a reduced form: the model constant,
//! the Bohr-radius power, `9^-6` from the form-factor denominator and the
//! leading Gaussian suppression in the gap are pulled out, leaving
//! `g(k) = k^n (9 / (4 a^2 k^2 + 9))^6` times a kernel of order one. The
//! absolute quadrature tolerance applies to those reduced integrals.
//!
//! ```
//! use vh_core::atoms::AtomSpec;
//! use vh_core::harvesting::{compute_terms, assemble_state, DetectorPair, ModelKind};
//!
//! let a = AtomSpec::new(0.001 / 12.0, 12.0, 1.0);
//! let mut b = a;
//! b.position = [4.0, 0.0, 0.0];
//! b.switching_center = 1.0;
//! let pair = DetectorPair::new(a, b, ModelKind::EmDipole);
//! let state = assemble_state(&compute_terms(&pair).unwrap()).unwrap();
//! assert!(state.negativity >= 0.0);
//! ```

mod causal;
mod cropped;
mod jet;
mod kernels;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::atoms::{AtomSpec, SwitchingKind, TransitionSpec};
use crate::error::{domain, Result, VhError};
use crate::specfun::contour::{geometric_breaks, integrate_with_tail, TailChannel, TailProblem, RAY_DECAY};
use crate::specfun::quad::{integrate_panels, merge_breaks, uniform_breaks};
use crate::specfun::{integrate_damped, j0_plus_j2, sph_j, DampedKernelSpec, QuadratureResult, Tolerance};

pub use causal::{commutator_kernel, nonlocal_term_split, SplitNonlocal};
pub use kernels::{time_integral_closed, time_integral_scaled};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelKind {
    EmDipole,
    UdwScalar,
    UdwDerivative,
}

impl ModelKind {
    pub const ALL: [ModelKind; 3] = [ModelKind::EmDipole, ModelKind::UdwScalar, ModelKind::UdwDerivative];

    pub fn transition(self) -> TransitionSpec {
        match self {
            ModelKind::EmDipole => TransitionSpec::EM,
            _ => TransitionSpec::SCALAR,
        }
    }

    /// Numerical prefactor of the local term times `pi`.
    pub fn prefactor(self) -> f64 {
        match self {
            ModelKind::EmDipole => 49152.0,
            _ => 32768.0,
        }
    }

    /// Power of `a0` multiplying the integrals.
    pub fn a0_power(self) -> i32 {
        match self {
            ModelKind::EmDipole => 2,
            _ => 4,
        }
    }

    /// Power of `k` in the local-term integrand.
    pub fn k_power(self) -> i32 {
        match self {
            ModelKind::EmDipole => 3,
            ModelKind::UdwScalar => 5,
            ModelKind::UdwDerivative => 7,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::EmDipole => "em",
            ModelKind::UdwScalar => "udw",
            ModelKind::UdwDerivative => "udw-derivative",
        }
    }

    /// Spatial kernel `A(x)` of the non-local terms, `x = k d`.
    pub fn spatial_kernel(self, x: f64) -> f64 {
        match self {
            ModelKind::EmDipole => j0_plus_j2(x),
            _ => sph_j(0, x),
        }
    }

    /// Split `A(x) = a_+(x) e^{ix} + a_-(x) e^{-ix}` for complex `x`.
    pub(crate) fn spatial_kernel_channels(self, x: Complex64) -> [Complex64; 2] {
        let i = Complex64::i();
        match self {
            ModelKind::EmDipole => {
                let c = -1.5 / (x * x * x);
                [c * (x + i), c * (x - i)]
            }
            _ => {
                let c = 1.0 / (2.0 * i * x);
                [c, -c]
            }
        }
    }
}

impl std::str::FromStr for ModelKind {
    type Err = VhError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "em" | "em_dipole" | "em-dipole" | "dipole" => Ok(ModelKind::EmDipole),
            "udw" | "udw_scalar" | "scalar" => Ok(ModelKind::UdwScalar),
            "udw-derivative" | "udw_derivative" | "derivative" | "udwd" => Ok(ModelKind::UdwDerivative),
            _ => domain(format!("unknown model '{s}' (expected em, udw or udw-derivative)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Which {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DetectorPair {
    pub atom_a: AtomSpec,
    pub atom_b: AtomSpec,
    pub model: ModelKind,
    pub coupling: f64,
    pub switching: SwitchingKind,
    pub tolerance: Tolerance,
}

/// Tolerance used by the engine on its reduced integrals.
pub const DEFAULT_TOLERANCE: Tolerance = Tolerance { atol: 1e-20, rtol: 1e-10, max_intervals: 200_000 };

impl DetectorPair {
    pub fn new(atom_a: AtomSpec, atom_b: AtomSpec, model: ModelKind) -> Self {
        DetectorPair {
            atom_a,
            atom_b,
            model,
            coupling: 1.0,
            switching: SwitchingKind::Gaussian,
            tolerance: DEFAULT_TOLERANCE,
        }
    }

    pub fn separation(&self) -> f64 {
        let p = self.atom_a.position;
        let q = self.atom_b.position;
        ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2) + (p[2] - q[2]).powi(2)).sqrt()
    }

    /// Cosine of the angle between the two orbitals' symmetry axes.
    pub fn axis_cosine(&self) -> f64 {
        let za = self.atom_a.orientation.z_axis();
        let zb = self.atom_b.orientation.z_axis();
        za[0] * zb[0] + za[1] * zb[1] + za[2] * zb[2]
    }

    pub fn validate(&self) -> Result<()> {
        self.atom_a.validate()?;
        self.atom_b.validate()?;
        self.switching.validate()?;
        if !(self.coupling.is_finite()) {
            return domain("coupling must be finite");
        }
        if self.atom_a.a0 != self.atom_b.a0 || self.atom_a.switching_width != self.atom_b.switching_width {
            return domain("both atoms must share a0 and the switching width T");
        }
        Ok(())
    }

    pub(crate) fn reduced(&self) -> Result<Reduced> {
        self.validate()?;
        let t = self.atom_a.switching_width;
        let ang = match self.model {
            ModelKind::EmDipole => self.axis_cosine(),
            _ => 1.0,
        };
        let a = self.atom_a.a0 / t;
        Ok(Reduced {
            a,
            d: self.separation() / t,
            ta: self.atom_a.switching_center / t,
            tb: self.atom_b.switching_center / t,
            oa: self.atom_a.omega * t,
            ob: self.atom_b.omega * t,
            ang,
            model: self.model,
            coupling2: self.coupling * self.coupling,
            kappa: self.model.prefactor() / (PI * PI) * a.powi(self.model.a0_power()) * 9f64.powi(-6),
        })
    }
}

/// Dimensionless parameters with `T = 1`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Reduced {
    pub a: f64,
    pub d: f64,
    pub ta: f64,
    pub tb: f64,
    pub oa: f64,
    pub ob: f64,
    pub ang: f64,
    pub model: ModelKind,
    pub coupling2: f64,
    /// `prefactor / pi^2 * a^p * 9^-6`
    pub kappa: f64,
}

impl Reduced {
    /// `g(k) = k^n (9 / (4 a^2 k^2 + 9))^6`.
    pub fn g(&self, k: f64) -> f64 {
        let r = 9.0 / (4.0 * self.a * self.a * k * k + 9.0);
        k.powi(self.model.k_power()) * r.powi(6)
    }

    pub fn g_complex(&self, k: Complex64) -> Complex64 {
        let r = 9.0 / (4.0 * self.a * self.a * k * k + 9.0);
        k.powi(self.model.k_power()) * r.powi(6)
    }

    pub fn kernel(&self, k: f64) -> f64 {
        self.model.spatial_kernel(k * self.d)
    }

    /// Scale of the form-factor cutoff.
    pub fn k_form(&self) -> f64 {
        1.5 / self.a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
pub struct TermErrors {
    pub l_aa: f64,
    pub l_bb: f64,
    pub l_ab: f64,
    pub m: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HarvestTerms {
    pub l_aa: f64,
    pub l_bb: f64,
    pub l_ab: Complex64,
    pub m: Complex64,
    pub quadrature_errors: TermErrors,
}

impl HarvestTerms {
    pub fn total_error(&self) -> f64 {
        let e = self.quadrature_errors;
        e.l_aa + e.l_bb + e.l_ab + e.m
    }
}

fn scaled(r: QuadratureResult<Complex64>, factor: f64) -> QuadratureResult<Complex64> {
    QuadratureResult { value: r.value * factor, abs_error_estimate: r.abs_error_estimate * factor.abs(), evaluations: r.evaluations }
}

fn real_part(r: QuadratureResult<Complex64>) -> QuadratureResult<f64> {
    QuadratureResult { value: r.value.re, abs_error_estimate: r.abs_error_estimate, evaluations: r.evaluations }
}

/// Reduced local integral `int g(k) pi e^{-Omega k - k^2/2} dk`.
pub(crate) fn local_reduced(r: &Reduced, omega: f64, tol: Tolerance) -> Result<QuadratureResult<Complex64>> {
    let integrand = |k: f64| Complex64::new(r.g(k) * kernels::local_time_factor(omega, k), 0.0);
    let mut spec = DampedKernelSpec::new(0.5, integrand);
    spec.damping_center = -omega;
    spec.extra_breaks = vec![r.k_form(), r.model.k_power() as f64 / omega.max(1e-3)];
    spec.tolerance = tol;
    integrate_damped(&spec)
}

/// Vacuum excitation probability `L_nu nu` of one atom.
pub fn local_term(pair: &DetectorPair, which: Which) -> Result<QuadratureResult<f64>> {
    let r = pair.reduced()?;
    let omega = match which {
        Which::A => r.oa,
        Which::B => r.ob,
    };
    if let SwitchingKind::CroppedGaussian { crop_sigmas } = pair.switching {
        return cropped::local_term(&r, which, crop_sigmas, pair.tolerance);
    }
    let res = local_reduced(&r, omega, pair.tolerance)?;
    let factor = r.coupling2 * r.kappa * (-0.5 * omega * omega).exp();
    Ok(real_part(scaled(res, factor)))
}

/// Cross-noise term `L_AB`.
pub fn cross_noise_term(pair: &DetectorPair) -> Result<QuadratureResult<Complex64>> {
    let r = pair.reduced()?;
    if let SwitchingKind::CroppedGaussian { crop_sigmas } = pair.switching {
        return cropped::cross_noise_term(&r, crop_sigmas, pair.tolerance);
    }
    let sigma = r.oa + r.ob;
    let integrand =
        |k: f64| kernels::cross_time_factor(r.oa, r.ob, k, r.ta, r.tb) * (r.g(k) * r.kernel(k));
    let mut spec = DampedKernelSpec::new(0.5, integrand);
    spec.damping_center = -0.5 * sigma;
    spec.oscillation_lengths = [r.d, (r.ta - r.tb).abs()].into_iter().filter(|&l| l > 0.0).collect();
    spec.extra_breaks = vec![r.k_form(), r.model.k_power() as f64 / sigma.max(1e-3)];
    spec.tolerance = pair.tolerance;
    let res = integrate_damped(&spec)?;
    let factor = r.coupling2 * r.kappa * r.ang * (-0.25 * (r.oa * r.oa + r.ob * r.ob)).exp();
    Ok(scaled(res, factor))
}

/// Upper limit for real-axis integration when no contour shift is used.
pub(crate) fn k_cap(r: &Reduced) -> f64 {
    1000.0 / r.a
}

/// Reduced non-local integral `int g(k) A(k d) J(k) dk` with
/// `J = e^{Sigma^2/8}` times the time integral.
pub(crate) fn nonlocal_reduced(r: &Reduced, tol: Tolerance) -> Result<QuadratureResult<Complex64>> {
    let t = (r.tb - r.ta).abs();
    let delta = 0.5 * (r.oa - r.ob).abs();
    let equal = r.oa == r.ob;
    let time = |k: f64| -> Result<Complex64> {
        if equal {
            kernels::equal_gap_bracket(r.oa, k, r.ta, r.tb)
        } else {
            kernels::time_integral_scaled(r.oa, r.ob, k, r.ta, r.tb)
        }
    };
    let failure = std::cell::Cell::new(None);
    let head = |k: f64| match time(k) {
        Ok(j) => j * (r.g(k) * r.kernel(k)),
        Err(e) => {
            failure.set(Some(e));
            Complex64::new(f64::NAN, f64::NAN)
        }
    };
    let osc = r.d.max(t).max(1.0);
    let use_rays = r.d > 0.0 && RAY_DECAY / r.d <= 0.5 / r.a;
    let y = if use_rays { RAY_DECAY / r.d } else { 0.0 };
    let k0 = delta + (t + 12.0).max(((y + t).powi(2) + 150.0).sqrt());
    let result = if use_rays {
        let mut breaks = uniform_breaks(0.0, k0, (PI / osc).min(1.0));
        if r.k_form() < k0 {
            breaks.push(r.k_form());
        }
        let channel = |sign: usize| {
            move |k: Complex64| {
                let a = r.model.spatial_kernel_channels(k * r.d)[sign];
                r.g_complex(k) * a * kernels::time_integral_algebraic(r.oa, r.ob, k, r.ta, r.tb)
            }
        };
        let problem = TailProblem {
            head: &head,
            head_breaks: merge_breaks(breaks),
            channels: vec![TailChannel::new(r.d, channel(0)), TailChannel::new(-r.d, channel(1))],
            min_ray_beta: 0.0,
            k_cap: 0.0,
        };
        integrate_with_tail(&problem, tol)
    } else {
        let cap = k_cap(r);
        let mut breaks = uniform_breaks(0.0, k0.min(cap), (PI / osc).min(1.0));
        breaks.extend(geometric_breaks(k0.min(cap), cap, 1.25));
        if r.d > 0.0 {
            breaks.extend(uniform_breaks(k0.min(cap), cap, PI / r.d));
        }
        breaks.push(r.k_form());
        integrate_panels(&head, &merge_breaks(breaks), tol)
    };
    if let Some(e) = failure.take() {
        return Err(e);
    }
    result
}

/// Non-local correlation term `M`, including its phase.
pub fn nonlocal_term(pair: &DetectorPair) -> Result<QuadratureResult<Complex64>> {
    let r = pair.reduced()?;
    if let SwitchingKind::CroppedGaussian { crop_sigmas } = pair.switching {
        return cropped::nonlocal_term(&r, crop_sigmas, pair.tolerance);
    }
    let res = nonlocal_reduced(&r, pair.tolerance)?;
    let sigma = r.oa + r.ob;
    let factor = -r.coupling2 * r.kappa * r.ang * (-sigma * sigma / 8.0).exp();
    Ok(scaled(res, factor))
}

/// Integrands of `L_AA` and `M` at momentum `k` (in units of `1/T`), with
/// all prefactors applied, so that each term is the `k` integral of its entry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TermIntegrands {
    pub local: f64,
    pub nonlocal: Complex64,
}

/// Gaussian switching only.
pub fn term_integrands(pair: &DetectorPair, k: f64) -> Result<TermIntegrands> {
    if !(k >= 0.0) || !k.is_finite() {
        return domain("term_integrands: need finite k >= 0");
    }
    if pair.switching != SwitchingKind::Gaussian {
        return domain("term_integrands: defined for Gaussian switching only");
    }
    let r = pair.reduced()?;
    let local = r.coupling2 * r.kappa * (-0.5 * r.oa * r.oa).exp() * r.g(k) * kernels::local_time_factor(r.oa, k);
    let sigma = r.oa + r.ob;
    let time = kernels::time_integral_scaled(r.oa, r.ob, k, r.ta, r.tb)?;
    let nonlocal = -r.coupling2 * r.kappa * r.ang * (-sigma * sigma / 8.0).exp() * r.g(k) * r.kernel(k) * time;
    Ok(TermIntegrands { local, nonlocal })
}

/// All four second-order terms of a pair.
pub fn compute_terms(pair: &DetectorPair) -> Result<HarvestTerms> {
    let laa = local_term(pair, Which::A)?;
    let lbb = if pair.atom_a.omega == pair.atom_b.omega {
        laa
    } else {
        local_term(pair, Which::B)?
    };
    let lab = cross_noise_term(pair)?;
    let m = nonlocal_term(pair)?;
    Ok(HarvestTerms {
        l_aa: laa.value,
        l_bb: lbb.value,
        l_ab: lab.value,
        m: m.value,
        quadrature_errors: TermErrors {
            l_aa: laa.abs_error_estimate,
            l_bb: lbb.abs_error_estimate,
            l_ab: lab.abs_error_estimate,
            m: m.abs_error_estimate,
        },
    })
}

/// Density matrix in the basis `{gg, eg, ge, ee}` and its entanglement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoQubitState {
    pub rho: [[Complex64; 4]; 4],
    /// Leading-order negativity before clamping at zero.
    pub negativity_leading: f64,
    pub negativity: f64,
    pub concurrence: f64,
}

/// `N2 = -(L_AA + L_BB - sqrt((L_AA - L_BB)^2 + 4 |M|^2)) / 2`.
pub fn leading_negativity(l_aa: f64, l_bb: f64, m_abs: f64) -> f64 {
    -0.5 * (l_aa + l_bb - (l_aa - l_bb).hypot(2.0 * m_abs))
}

pub fn assemble_state(terms: &HarvestTerms) -> Result<TwoQubitState> {
    let HarvestTerms { l_aa, l_bb, l_ab, m, .. } = *terms;
    if ![l_aa, l_bb, l_ab.re, l_ab.im, m.re, m.im].iter().all(|v| v.is_finite()) {
        return domain("assemble_state: non-finite terms");
    }
    if l_aa + l_bb > 1.0 {
        return Err(VhError::Perturbative(l_aa + l_bb));
    }
    let z = Complex64::new(0.0, 0.0);
    let re = |x: f64| Complex64::new(x, 0.0);
    let rho = [
        [re(1.0 - l_aa - l_bb), z, z, m.conj()],
        [z, re(l_aa), l_ab, z],
        [z, l_ab.conj(), re(l_bb), z],
        [m, z, z, z],
    ];
    let n2 = leading_negativity(l_aa, l_bb, m.norm());
    let negativity = n2.max(0.0);
    // X-state concurrence; equals twice the negativity for identical atoms
    let concurrence = 2.0 * (m.norm() - l_aa.sqrt() * l_bb.sqrt()).max(0.0);
    Ok(TwoQubitState { rho, negativity_leading: n2, negativity, concurrence })
}

/// Leading-order eigenvalues of the density matrix and the positivity checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub e1: f64,
    /// Informational only: vanishes at second order.
    pub e2: f64,
    pub e3: f64,
    pub e4: f64,
    /// `L_AA L_BB - |L_AB|^2` divided by the square of the largest of the three.
    pub cross_bound_margin: f64,
    pub tolerance: f64,
    pub locals_nonnegative: bool,
    pub cross_bound_holds: bool,
    pub e3_nonnegative: bool,
    pub e4_nonnegative: bool,
}

impl PositivityReport {
    pub fn passes(&self) -> bool {
        self.locals_nonnegative && self.cross_bound_holds && self.e3_nonnegative && self.e4_nonnegative
    }
}

/// Evaluates the eigenvalues with the terms rescaled by `coupling^2`; checks
/// allow ten times the summed quadrature error.
pub fn positivity_report(terms: &HarvestTerms, coupling: f64) -> PositivityReport {
    let e2c = coupling * coupling;
    let laa = e2c * terms.l_aa;
    let lbb = e2c * terms.l_bb;
    let lab = e2c * terms.l_ab.norm();
    let m = e2c * terms.m.norm();
    let tol = 10.0 * e2c * terms.total_error();
    let one = 1.0 - laa - lbb;
    let root = one.hypot(2.0 * m);
    let inner = (laa - lbb).hypot(2.0 * lab);
    // the quadratic margin is formed on rescaled terms so it cannot underflow
    let scale = laa.abs().max(lbb.abs()).max(lab);
    let unit = if scale > 0.0 { scale } else { 1.0 };
    let margin = (laa / unit) * (lbb / unit) - (lab / unit) * (lab / unit);
    PositivityReport {
        e1: 0.5 * (one + root),
        e2: 0.5 * (one - root),
        e3: 0.5 * (laa + lbb + inner),
        e4: 0.5 * (laa + lbb - inner),
        cross_bound_margin: margin,
        tolerance: tol,
        locals_nonnegative: laa >= -tol && lbb >= -tol,
        cross_bound_holds: margin >= -4.0 * tol / unit,
        e3_nonnegative: 0.5 * (laa + lbb + inner) >= -tol,
        e4_nonnegative: 0.5 * (laa + lbb - inner) >= -tol,
    }
}

/// Per-`k` integrands of the identity part, the `k (x) k` part and their
/// difference, for the local and the non-local term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EmDecomposition {
    pub local_identity: f64,
    pub local_dyadic: f64,
    pub local_total: f64,
    pub nonlocal_identity: f64,
    pub nonlocal_dyadic: f64,
    pub nonlocal_total: f64,
}

/// Radial and angular reduction of the dipole kernels at momentum `k`,
/// without the `k^3` measure, the time integrals and the common
/// `a0^2 / pi` factors. The non-local parts are evaluated at `k d = x`.
pub fn em_decomposition_identity(k: f64, a0: f64, x: f64) -> Result<EmDecomposition> {
    if !(k >= 0.0) || !(a0 > 0.0) || !(x >= 0.0) {
        return domain("em_decomposition_identity: need k >= 0, a0 > 0 and x >= 0");
    }
    let u = a0 * a0 * k * k;
    let c8 = (4.0 * u + 9.0).powi(8);
    let dyadic_radial = 24576.0 * (20.0 * u - 9.0).powi(2);
    let local_identity = 663552.0 * (16.0 * u * u - 8.0 * u + 9.0) / c8;
    let local_dyadic = dyadic_radial / c8;
    let j0 = sph_j(0, x);
    let j2 = sph_j(2, x);
    let nonlocal_identity = (663552.0 * (16.0 * u * u - 8.0 * u + 9.0) * j0 - 2359296.0 * u * (8.0 * u - 9.0) * j2) / c8;
    let nonlocal_dyadic = dyadic_radial * (j0 - 2.0 * j2) / c8;
    Ok(EmDecomposition {
        local_identity,
        local_dyadic,
        local_total: local_identity - local_dyadic,
        nonlocal_identity,
        nonlocal_dyadic,
        nonlocal_total: nonlocal_identity - nonlocal_dyadic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negativity_arithmetic() {
        assert!((leading_negativity(0.3, 0.3, 0.5) - 0.2).abs() < 1e-15);
        assert!((leading_negativity(0.5, 0.5, 0.1) + 0.4).abs() < 1e-15);
        let t = HarvestTerms {
            l_aa: 0.5,
            l_bb: 0.5,
            l_ab: Complex64::new(0.0, 0.0),
            m: Complex64::new(0.1, 0.0),
            quadrature_errors: TermErrors::default(),
        };
        assert_eq!(assemble_state(&t).unwrap().negativity, 0.0);
        let bad = HarvestTerms { l_aa: 0.6, ..t };
        assert!(matches!(assemble_state(&bad), Err(VhError::Perturbative(_))));
    }

    #[test]
    fn degenerate_e4() {
        let t = HarvestTerms {
            l_aa: 0.01,
            l_bb: 0.01,
            l_ab: Complex64::new(0.0, 0.01),
            m: Complex64::new(0.0, 0.0),
            quadrature_errors: TermErrors::default(),
        };
        let p = positivity_report(&t, 1.0);
        assert!(p.e4.abs() < 1e-18);
        let v = HarvestTerms { l_ab: Complex64::new(0.02, 0.0), ..t };
        assert!(!positivity_report(&v, 1.0).passes());
    }
}
