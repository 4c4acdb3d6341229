//! Parameter sweeps over the dimensionless groups `a0 Omega`, `Omega T`,
//! `d / T`, `t_BA / T` and the Euler angles of atom B, and the catalogue of
//! orientations that maximize harvesting.
//!
//! Every point is evaluated with `T = 1`, atom A at the origin with the
//! identity orientation and atom B on A's `z` axis, so the separation runs
//! along A's orbital axis.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::angular::EulerAngles;
use crate::atoms::{AtomSpec, SwitchingKind};
use crate::error::{domain, Result, VhError};
use crate::harvesting::{assemble_state, compute_terms, DetectorPair, ModelKind, DEFAULT_TOLERANCE};
use crate::specfun::Tolerance;

/// Default resolution of the two-dimensional maps.
pub const MAP_RESOLUTION: usize = 40;
/// Default resolution of the one-dimensional curves.
pub const CURVE_RESOLUTION: usize = 200;
/// Half-width of the light-cone band, `8 T / sqrt 2`.
pub const LIGHTCONE_HALF_WIDTH: f64 = 8.0 / SQRT_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Param {
    A0Omega,
    OmegaT,
    DOverT,
    TbaOverT,
    Psi,
    Theta,
    Phi,
}

impl Param {
    pub const ALL: [Param; 7] =
        [Param::A0Omega, Param::OmegaT, Param::DOverT, Param::TbaOverT, Param::Psi, Param::Theta, Param::Phi];

    pub fn name(self) -> &'static str {
        match self {
            Param::A0Omega => "a0_omega",
            Param::OmegaT => "omega_t",
            Param::DOverT => "d_over_t",
            Param::TbaOverT => "tba_over_t",
            Param::Psi => "psi",
            Param::Theta => "theta",
            Param::Phi => "phi",
        }
    }

    pub fn parse(s: &str) -> Result<Param> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        Param::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| VhError::Domain(format!("unknown parameter {s}")))
    }
}

/// One point in parameter space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointParams {
    pub a0_omega: f64,
    pub omega_t: f64,
    pub d_over_t: f64,
    pub tba_over_t: f64,
    pub psi: f64,
    pub theta: f64,
    pub phi: f64,
}

impl Default for PointParams {
    fn default() -> Self {
        PointParams { a0_omega: 0.001, omega_t: 1.0, d_over_t: 1.0, tba_over_t: 1.0, psi: 0.0, theta: 0.0, phi: 0.0 }
    }
}

impl PointParams {
    pub fn get(&self, p: Param) -> f64 {
        match p {
            Param::A0Omega => self.a0_omega,
            Param::OmegaT => self.omega_t,
            Param::DOverT => self.d_over_t,
            Param::TbaOverT => self.tba_over_t,
            Param::Psi => self.psi,
            Param::Theta => self.theta,
            Param::Phi => self.phi,
        }
    }

    pub fn set(&mut self, p: Param, v: f64) {
        match p {
            Param::A0Omega => self.a0_omega = v,
            Param::OmegaT => self.omega_t = v,
            Param::DOverT => self.d_over_t = v,
            Param::TbaOverT => self.tba_over_t = v,
            Param::Psi => self.psi = v,
            Param::Theta => self.theta = v,
            Param::Phi => self.phi = v,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("a0_omega", self.a0_omega), ("omega_t", self.omega_t)] {
            if !(v > 0.0 && v.is_finite()) {
                return domain(format!("{name} = {v} must be positive"));
            }
        }
        if !(self.d_over_t >= 0.0 && self.d_over_t.is_finite()) {
            return domain(format!("d_over_t = {} must be non-negative", self.d_over_t));
        }
        if ![self.tba_over_t, self.psi, self.theta, self.phi].iter().all(|v| v.is_finite()) {
            return domain("time delay and angles must be finite");
        }
        Ok(())
    }

    pub fn orientation(&self) -> EulerAngles {
        EulerAngles { psi: self.psi, theta: self.theta, phi: self.phi }
    }

    /// Pair of identical atoms at these parameters, in units `T = 1`.
    pub fn pair(&self, model: ModelKind, settings: &ScanSettings) -> Result<DetectorPair> {
        self.validate()?;
        let omega = self.omega_t;
        let atom_a = AtomSpec::new(self.a0_omega / omega, omega, 1.0);
        let mut atom_b = atom_a;
        atom_b.position = [0.0, 0.0, self.d_over_t];
        atom_b.switching_center = self.tba_over_t;
        atom_b.orientation = self.orientation();
        let mut pair = DetectorPair::new(atom_a, atom_b, model);
        pair.switching = settings.switching;
        pair.tolerance = settings.tolerance;
        Ok(pair)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub param: Param,
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl Axis {
    pub fn linear(param: Param, min: f64, max: f64, count: usize) -> Self {
        Axis { param, min, max, count, spacing: Spacing::Linear }
    }

    pub fn log(param: Param, min: f64, max: f64, count: usize) -> Self {
        Axis { param, min, max, count, spacing: Spacing::Log }
    }

    pub fn validate(&self) -> Result<()> {
        if self.count < 2 {
            return domain(format!("axis {}: count must be at least 2", self.param.name()));
        }
        if !(self.min.is_finite() && self.max.is_finite()) {
            return domain(format!("axis {}: bounds must be finite", self.param.name()));
        }
        if self.spacing == Spacing::Log && !(self.min > 0.0 && self.max > 0.0) {
            return domain(format!("axis {}: log spacing needs positive bounds", self.param.name()));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.count;
        (0..n)
            .map(|i| {
                let f = i as f64 / (n - 1) as f64;
                if i == 0 {
                    return self.min;
                }
                if i == n - 1 {
                    return self.max;
                }
                match self.spacing {
                    Spacing::Linear => self.min + (self.max - self.min) * f,
                    Spacing::Log => (self.min.ln() + (self.max.ln() - self.min.ln()) * f).exp(),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanGrid {
    pub axes: Vec<Axis>,
    pub fixed: PointParams,
    pub model: ModelKind,
}

impl ScanGrid {
    pub fn validate(&self) -> Result<()> {
        if self.axes.is_empty() {
            return domain("scan grid needs at least one axis");
        }
        for (i, a) in self.axes.iter().enumerate() {
            a.validate()?;
            if self.axes[..i].iter().any(|b| b.param == a.param) {
                return domain(format!("axis {} appears twice", a.param.name()));
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.axes.iter().map(|a| a.count).product()
    }

    /// Grid points in canonical order: the first axis varies slowest.
    pub fn points(&self) -> Vec<(Vec<f64>, PointParams)> {
        let values: Vec<Vec<f64>> = self.axes.iter().map(Axis::values).collect();
        let mut out = Vec::with_capacity(self.size());
        for flat in 0..self.size() {
            let mut rem = flat;
            let mut coords = vec![0.0; self.axes.len()];
            for i in (0..self.axes.len()).rev() {
                coords[i] = values[i][rem % self.axes[i].count];
                rem /= self.axes[i].count;
            }
            let mut p = self.fixed;
            for (a, v) in self.axes.iter().zip(&coords) {
                p.set(a.param, *v);
            }
            out.push((coords, p));
        }
        out
    }
}

/// Numerical settings shared by every point of a scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanSettings {
    pub switching: SwitchingKind,
    pub tolerance: Tolerance,
    /// A point counts as harvesting when `N > threshold_factor * error`.
    pub threshold_factor: f64,
}

impl Default for ScanSettings {
    fn default() -> Self {
        ScanSettings { switching: SwitchingKind::Gaussian, tolerance: DEFAULT_TOLERANCE, threshold_factor: 10.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub coordinates: Vec<f64>,
    pub l_aa: f64,
    pub l_ab_abs: f64,
    pub m_abs: f64,
    pub n2: f64,
    pub n: f64,
    pub concurrence: f64,
    /// Summed quadrature error of the four terms.
    pub quad_error: f64,
    pub harvestable: bool,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanMetadata {
    pub model: ModelKind,
    pub axes: Vec<Axis>,
    pub fixed: PointParams,
    pub settings: ScanSettings,
    pub version: String,
    /// Seconds since the Unix epoch; kept out of the CSV so reruns are
    /// byte-identical.
    pub timestamp: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    pub rows: Vec<ScanRow>,
    pub metadata: ScanMetadata,
}

/// Float formatting used in every data file: 17 significant digits.
pub fn fmt_float(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

impl ScanResult {
    pub fn column_names(&self) -> Vec<String> {
        let mut cols: Vec<String> = self.metadata.axes.iter().map(|a| a.param.name().to_string()).collect();
        for c in ["L_aa", "L_ab_abs", "M_abs", "N2", "N", "concurrence", "quad_error", "harvestable", "converged"] {
            cols.push(c.into());
        }
        cols
    }

    /// `#` header lines with the model, fixed parameters, tolerances and
    /// version, then one comma-separated line per row.
    pub fn to_csv(&self) -> String {
        let m = &self.metadata;
        let mut s = String::new();
        let _ = writeln!(s, "# model: {}", m.model.name());
        let fixed: Vec<String> = Param::ALL
            .iter()
            .filter(|p| !m.axes.iter().any(|a| a.param == **p))
            .map(|p| format!("{}={}", p.name(), fmt_float(m.fixed.get(*p))))
            .collect();
        let _ = writeln!(s, "# fixed: {}", fixed.join(" "));
        let axes: Vec<String> = m
            .axes
            .iter()
            .map(|a| {
                let sp = if a.spacing == Spacing::Log { "log" } else { "linear" };
                format!("{}[{},{},{},{}]", a.param.name(), fmt_float(a.min), fmt_float(a.max), a.count, sp)
            })
            .collect();
        let _ = writeln!(s, "# axes: {}", axes.join(" "));
        let sw = match m.settings.switching {
            SwitchingKind::Gaussian => "gaussian".to_string(),
            SwitchingKind::CroppedGaussian { crop_sigmas } => format!("cropped({})", fmt_float(crop_sigmas)),
        };
        let _ = writeln!(s, "# switching: {sw}");
        let _ = writeln!(
            s,
            "# tolerance: rel={} abs={} threshold_factor={}",
            fmt_float(m.settings.tolerance.rtol),
            fmt_float(m.settings.tolerance.atol),
            fmt_float(m.settings.threshold_factor)
        );
        let _ = writeln!(s, "# version: {}", m.version);
        s.push_str(&self.column_names().join(","));
        s.push('\n');
        for r in &self.rows {
            let mut fields: Vec<String> = r.coordinates.iter().map(|x| fmt_float(*x)).collect();
            for x in [r.l_aa, r.l_ab_abs, r.m_abs, r.n2, r.n, r.concurrence, r.quad_error] {
                fields.push(fmt_float(x));
            }
            fields.push(u8::from(r.harvestable).to_string());
            fields.push(u8::from(r.converged).to_string());
            s.push_str(&fields.join(","));
            s.push('\n');
        }
        s
    }

    pub fn all_converged(&self) -> bool {
        self.rows.iter().all(|r| r.converged)
    }
}

/// Evaluates one point; quadrature failures give a row flagged as not converged.
pub fn evaluate_point(model: ModelKind, coordinates: Vec<f64>, p: &PointParams, settings: &ScanSettings) -> Result<ScanRow> {
    let pair = p.pair(model, settings)?;
    let nan = f64::NAN;
    let failed = |coordinates: Vec<f64>| ScanRow {
        coordinates,
        l_aa: nan,
        l_ab_abs: nan,
        m_abs: nan,
        n2: nan,
        n: nan,
        concurrence: nan,
        quad_error: nan,
        harvestable: false,
        converged: false,
    };
    let terms = match compute_terms(&pair) {
        Ok(t) => t,
        Err(VhError::NonConvergence { .. }) => return Ok(failed(coordinates)),
        Err(e) => return Err(e),
    };
    let state = assemble_state(&terms)?;
    let err = terms.total_error();
    Ok(ScanRow {
        coordinates,
        l_aa: terms.l_aa,
        l_ab_abs: terms.l_ab.norm(),
        m_abs: terms.m.norm(),
        n2: state.negativity_leading,
        n: state.negativity,
        concurrence: state.concurrence,
        quad_error: err,
        harvestable: state.negativity > settings.threshold_factor * err,
        converged: true,
    })
}

fn now() -> u64 {
    std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

/// Evaluates every grid point, in parallel on the current rayon pool; rows
/// come back in canonical grid order.
pub fn run_scan(grid: &ScanGrid, settings: &ScanSettings) -> Result<ScanResult> {
    grid.validate()?;
    settings.switching.validate()?;
    let rows: Result<Vec<ScanRow>> = grid
        .points()
        .into_par_iter()
        .map(|(coords, p)| evaluate_point(grid.model, coords, &p, settings))
        .collect();
    Ok(ScanResult {
        rows: rows?,
        metadata: ScanMetadata {
            model: grid.model,
            axes: grid.axes.clone(),
            fixed: grid.fixed,
            settings: *settings,
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: now(),
        },
    })
}

/// Negativity against the relative orientation angle `theta` (EM only).
pub fn orientation_scan(fixed: PointParams, theta_axis: Axis, settings: &ScanSettings) -> Result<ScanResult> {
    if theta_axis.param != Param::Theta {
        return domain("orientation_scan: the axis must be theta");
    }
    let grid = ScanGrid { axes: vec![theta_axis], fixed, model: ModelKind::EmDipole };
    run_scan(&grid, settings)
}

/// Negativity and the harvestable flag over (`Omega T`, `d / T`) at fixed
/// `t_BA / T`.
pub fn harvestability_map(
    model: ModelKind,
    omega_axis: Axis,
    distance_axis: Axis,
    fixed: PointParams,
    settings: &ScanSettings,
) -> Result<ScanResult> {
    if omega_axis.param != Param::OmegaT || distance_axis.param != Param::DOverT {
        return domain("harvestability_map: axes must be omega_t and d_over_t");
    }
    let grid = ScanGrid { axes: vec![omega_axis, distance_axis], fixed, model };
    run_scan(&grid, settings)
}

/// Negativity over (`d / T`, `t_BA / T`) at fixed `Omega T`.
pub fn spacetime_map(
    model: ModelKind,
    distance_axis: Axis,
    delay_axis: Axis,
    fixed: PointParams,
    settings: &ScanSettings,
) -> Result<ScanResult> {
    if distance_axis.param != Param::DOverT || delay_axis.param != Param::TbaOverT {
        return domain("spacetime_map: axes must be d_over_t and tba_over_t");
    }
    let grid = ScanGrid { axes: vec![distance_axis, delay_axis], fixed, model };
    run_scan(&grid, settings)
}

/// Light-cone band edges `t_BA -+ 8 T / sqrt 2` in units of `T`.
pub fn lightcone_band(tba_over_t: f64) -> (f64, f64) {
    (tba_over_t - LIGHTCONE_HALF_WIDTH, tba_over_t + LIGHTCONE_HALF_WIDTH)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelComparison {
    pub distances: Vec<f64>,
    /// One scan per model, in [`ModelKind::ALL`] order; the EM orbitals are parallel.
    pub results: Vec<ScanResult>,
}

impl ModelComparison {
    /// Largest distance at which the model harvests, if any.
    pub fn reach(&self, model: ModelKind) -> Option<f64> {
        let res = self.results.iter().find(|r| r.metadata.model == model)?;
        res.rows.iter().filter(|r| r.harvestable).map(|r| r.coordinates[0]).reduce(f64::max)
    }

    /// `d_over_t` followed by `N` and `N2` for each model.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        if let Some(first) = self.results.first() {
            let m = &first.metadata;
            let _ = writeln!(
                s,
                "# fixed: a0_omega={} omega_t={} tba_over_t={} theta={}",
                fmt_float(m.fixed.a0_omega),
                fmt_float(m.fixed.omega_t),
                fmt_float(m.fixed.tba_over_t),
                fmt_float(0.0)
            );
            let _ = writeln!(s, "# tolerance: rel={} abs={}", fmt_float(m.settings.tolerance.rtol), fmt_float(m.settings.tolerance.atol));
            let _ = writeln!(s, "# version: {}", m.version);
        }
        let mut cols = vec!["d_over_t".to_string()];
        for r in &self.results {
            cols.push(format!("N_{}", r.metadata.model.name().replace('-', "_")));
        }
        for r in &self.results {
            cols.push(format!("N2_{}", r.metadata.model.name().replace('-', "_")));
        }
        s.push_str(&cols.join(","));
        s.push('\n');
        for (i, d) in self.distances.iter().enumerate() {
            let mut fields = vec![fmt_float(*d)];
            fields.extend(self.results.iter().map(|r| fmt_float(r.rows[i].n)));
            fields.extend(self.results.iter().map(|r| fmt_float(r.rows[i].n2)));
            s.push_str(&fields.join(","));
            s.push('\n');
        }
        s
    }
}

/// Negativity against distance for all three models at shared settings.
pub fn model_comparison(distance_axis: Axis, fixed: PointParams, settings: &ScanSettings) -> Result<ModelComparison> {
    if distance_axis.param != Param::DOverT {
        return domain("model_comparison: the axis must be d_over_t");
    }
    let mut fixed = fixed;
    fixed.psi = 0.0;
    fixed.theta = 0.0;
    fixed.phi = 0.0;
    let results = ModelKind::ALL
        .iter()
        .map(|&model| run_scan(&ScanGrid { axes: vec![distance_axis], fixed, model }, settings))
        .collect::<Result<Vec<_>>>()?;
    Ok(ModelComparison { distances: distance_axis.values(), results })
}

/// The 96 Euler triples of maximal harvesting:
/// `(pi/4 + n pi/2, t1, pi/4 + m pi/2)`, `(pi/4 + n pi/2, pi - t1, pi/4 + m pi/2)`,
/// `(p1 + n pi/2, t2, l pi/2 - p1)` and `(p2 + n pi/2, t2, l pi/2 - p2)` for
/// `n, m = 0..3`, `l = 1..8`, with `cos t1 = 1/3`, `cos t2 = -2/3`,
/// `tan p1 = 1/2` and `tan p2 = 2`.
pub fn optimal_orientations() -> Vec<EulerAngles> {
    let t1 = (1.0f64 / 3.0).acos();
    let t2 = (-2.0f64 / 3.0).acos();
    let p1 = 0.5f64.atan();
    let p2 = 2.0f64.atan();
    let mut out: Vec<EulerAngles> = Vec::with_capacity(96);
    let mut push = |e: EulerAngles| {
        let same = |a: f64, b: f64| (a - b).abs() < 1e-12;
        if !out.iter().any(|o| same(o.psi, e.psi) && same(o.theta, e.theta) && same(o.phi, e.phi)) {
            out.push(e);
        }
    };
    for theta in [t1, PI - t1] {
        for n in 0..4 {
            for m in 0..4 {
                push(EulerAngles {
                    psi: FRAC_PI_4 + n as f64 * FRAC_PI_2,
                    theta,
                    phi: FRAC_PI_4 + m as f64 * FRAC_PI_2,
                });
            }
        }
    }
    for p in [p1, p2] {
        for n in 0..4 {
            for l in 1..=8 {
                push(EulerAngles { psi: p + n as f64 * FRAC_PI_2, theta: t2, phi: l as f64 * FRAC_PI_2 - p });
            }
        }
    }
    out
}

/// Sum of the absolute projections of B's axes on A's axes.
pub fn projection_objective(angles: EulerAngles) -> f64 {
    angles.rotation_matrix().iter().flatten().map(|x| x.abs()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_values() {
        let a = Axis::log(Param::OmegaT, 0.1, 10.0, 3);
        let v = a.values();
        assert!((v[1] - 1.0).abs() < 1e-15 && v[0] == 0.1 && (v[2] - 10.0).abs() < 1e-14);
        assert!(Axis::linear(Param::Theta, 0.0, 1.0, 1).validate().is_err());
    }

    #[test]
    fn canonical_order() {
        let grid = ScanGrid {
            axes: vec![Axis::linear(Param::DOverT, 1.0, 2.0, 2), Axis::linear(Param::TbaOverT, 0.0, 3.0, 3)],
            fixed: PointParams::default(),
            model: ModelKind::UdwScalar,
        };
        let pts = grid.points();
        assert_eq!(pts.len(), 6);
        assert_eq!(pts[0].0, vec![1.0, 0.0]);
        assert_eq!(pts[1].0, vec![1.0, 1.5]);
        assert_eq!(pts[3].0, vec![2.0, 0.0]);
        assert_eq!(pts[4].1.tba_over_t, 1.5);
        assert_eq!(pts[4].1.d_over_t, 2.0);
    }

    #[test]
    fn first_optimal_orientation() {
        let all = optimal_orientations();
        assert_eq!(all.len(), 96);
        let e = all[0];
        assert!((e.psi - FRAC_PI_4).abs() < 1e-15 && (e.theta - 1.2310).abs() < 1e-4 && (e.phi - FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn optimal_orientations_beat_identity() {
        let base = projection_objective(EulerAngles::IDENTITY);
        assert!((base - 3.0).abs() < 1e-15);
        for e in optimal_orientations() {
            assert!(projection_objective(e) >= base);
        }
    }

    #[test]
    fn csv_shape() {
        let grid = ScanGrid {
            axes: vec![Axis::linear(Param::DOverT, 1.0, 2.0, 2), Axis::linear(Param::TbaOverT, 0.0, 1.0, 2)],
            fixed: PointParams::default(),
            model: ModelKind::UdwScalar,
        };
        let res = run_scan(&grid, &ScanSettings::default()).unwrap();
        let csv = res.to_csv();
        let data: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(data.len(), 5);
        assert!(data[0].starts_with("d_over_t,tba_over_t,L_aa"));
        for r in &res.rows {
            assert_eq!(r.n, r.n2.max(0.0));
        }
    }
}
