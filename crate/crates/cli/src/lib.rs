//! The `vh` command line: single points, scans, figure data and the self-check.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use vh_core::atoms::SwitchingKind;
use vh_core::harvesting::{assemble_state, compute_terms, ModelKind, DEFAULT_TOLERANCE};
use vh_core::oracle::{self, Mutation, OracleReport};
use vh_core::survey::{
    self, fmt_float, lightcone_band, Axis, Param, PointParams, ScanGrid, ScanResult, ScanSettings, Spacing,
    CURVE_RESOLUTION, LIGHTCONE_HALF_WIDTH, MAP_RESOLUTION,
};
use vh_core::VhError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NONCONVERGENCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "vh", version, about = "Entanglement harvesting with hydrogenoid atoms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one parameter point.
    Compute(ComputeArgs),
    /// Evaluate a rectangular grid of points.
    Scan(ScanArgs),
    /// Write the data and a gnuplot script for one of the figures.
    Figure(FigureArgs),
    /// Run every oracle family and invariant suite.
    Selfcheck(SelfcheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Switching {
    Gaussian,
    Cropped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureName {
    Fig3,
    Fig4,
    Fig5a,
    Fig5b,
    Fig7,
}

impl FigureName {
    pub fn name(self) -> &'static str {
        match self {
            FigureName::Fig3 => "fig3",
            FigureName::Fig4 => "fig4",
            FigureName::Fig5a => "fig5a",
            FigureName::Fig5b => "fig5b",
            FigureName::Fig7 => "fig7",
        }
    }
}

fn parse_model(s: &str) -> Result<ModelKind, String> {
    s.parse::<ModelKind>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    /// Atomic radius times the gap, `a0 Omega`.
    #[arg(long = "a0-omega", env = "VH_A0_OMEGA", default_value_t = 0.001, allow_negative_numbers = true)]
    pub a0_omega: f64,
    /// Gap times the switching width, `Omega T`.
    #[arg(long = "omega-T", env = "VH_OMEGA_T", default_value_t = 1.0, allow_negative_numbers = true)]
    pub omega_t: f64,
    /// Separation `d / T`.
    #[arg(long = "d", env = "VH_D", default_value_t = 1.0, allow_negative_numbers = true)]
    pub d: f64,
    /// Delay of B's switching, `t_BA / T`.
    #[arg(long = "tba", env = "VH_TBA", default_value_t = 1.0, allow_negative_numbers = true)]
    pub tba: f64,
    #[arg(long, env = "VH_PSI", default_value_t = 0.0, allow_negative_numbers = true)]
    pub psi: f64,
    #[arg(long, env = "VH_THETA", default_value_t = 0.0, allow_negative_numbers = true)]
    pub theta: f64,
    #[arg(long, env = "VH_PHI", default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi: f64,
}

impl PointArgs {
    pub fn params(&self) -> PointParams {
        PointParams {
            a0_omega: self.a0_omega,
            omega_t: self.omega_t,
            d_over_t: self.d,
            tba_over_t: self.tba,
            psi: self.psi,
            theta: self.theta,
            phi: self.phi,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct NumericArgs {
    #[arg(long = "tol-rel", env = "VH_TOL_REL", default_value_t = DEFAULT_TOLERANCE.rtol, allow_negative_numbers = true)]
    pub tol_rel: f64,
    #[arg(long = "tol-abs", env = "VH_TOL_ABS", default_value_t = DEFAULT_TOLERANCE.atol, allow_negative_numbers = true)]
    pub tol_abs: f64,
    /// Cap on adaptive subdivisions per integral.
    #[arg(long = "max-intervals", env = "VH_MAX_INTERVALS", default_value_t = DEFAULT_TOLERANCE.max_intervals)]
    pub max_intervals: usize,
    #[arg(long, env = "VH_SWITCHING", value_enum, default_value_t = Switching::Gaussian)]
    pub switching: Switching,
    /// Half width of the cropped switching in standard deviations.
    #[arg(long = "crop-sigmas", env = "VH_CROP_SIGMAS", default_value_t = 8.0, allow_negative_numbers = true)]
    pub crop_sigmas: f64,
    /// A point harvests when `N` exceeds this multiple of its quadrature error.
    #[arg(long = "threshold-factor", env = "VH_THRESHOLD_FACTOR", default_value_t = 10.0, allow_negative_numbers = true)]
    pub threshold_factor: f64,
}

impl NumericArgs {
    pub fn settings(&self) -> Result<ScanSettings, VhError> {
        for (name, v) in [("--tol-rel", self.tol_rel), ("--tol-abs", self.tol_abs), ("--threshold-factor", self.threshold_factor)] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(VhError::Domain(format!("{name} must be a finite non-negative number")));
            }
        }
        let switching = match self.switching {
            Switching::Gaussian => SwitchingKind::Gaussian,
            Switching::Cropped => SwitchingKind::CroppedGaussian { crop_sigmas: self.crop_sigmas },
        };
        switching.validate()?;
        let mut tolerance = DEFAULT_TOLERANCE;
        tolerance.rtol = self.tol_rel;
        tolerance.atol = self.tol_abs;
        tolerance.max_intervals = self.max_intervals;
        Ok(ScanSettings { switching, tolerance, threshold_factor: self.threshold_factor })
    }
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    /// em, udw or udw-derivative.
    #[arg(long, env = "VH_MODEL", value_parser = parse_model)]
    pub model: ModelKind,
    #[command(flatten)]
    pub point: PointArgs,
    #[command(flatten)]
    pub numeric: NumericArgs,
    #[arg(long, env = "VH_FORMAT", value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    #[arg(long, env = "VH_MODEL", value_parser = parse_model)]
    pub model: ModelKind,
    /// `name=min:max:count[:log]`, e.g. `d_over_t=0:25:40`; repeat for more axes.
    #[arg(long = "axis", required = true, value_parser = parse_axis)]
    pub axes: Vec<Axis>,
    #[command(flatten)]
    pub point: PointArgs,
    #[command(flatten)]
    pub numeric: NumericArgs,
    #[arg(long, env = "VH_FORMAT", value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long, short, env = "VH_OUTPUT")]
    pub output: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, env = "VH_THREADS", default_value_t = 0)]
    pub threads: usize,
    /// Exit with status 3 if any point fails to converge.
    #[arg(long, env = "VH_STRICT")]
    pub strict: bool,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    #[arg(value_enum)]
    pub name: FigureName,
    /// Directory for `<name>.csv` and `<name>.plt`.
    #[arg(long = "out-dir", env = "VH_OUT_DIR", default_value = ".")]
    pub out_dir: PathBuf,
    #[arg(long = "a0-omega", env = "VH_A0_OMEGA", allow_negative_numbers = true)]
    pub a0_omega: Option<f64>,
    #[arg(long = "omega-T", env = "VH_OMEGA_T", allow_negative_numbers = true)]
    pub omega_t: Option<f64>,
    #[arg(long = "tba", env = "VH_TBA", allow_negative_numbers = true)]
    pub tba: Option<f64>,
    /// Points per axis; defaults to 40 for maps and 200 for curves.
    #[arg(long, env = "VH_RESOLUTION")]
    pub resolution: Option<usize>,
    #[command(flatten)]
    pub numeric: NumericArgs,
    #[arg(long, env = "VH_THREADS", default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SelfcheckArgs {
    /// Perturb the closed form of one oracle family.
    #[arg(long, env = "VH_MUTATE")]
    pub mutate: Option<String>,
    #[arg(long = "mutation-size", env = "VH_MUTATION_SIZE", default_value_t = 1e-6, allow_negative_numbers = true)]
    pub mutation_size: f64,
    #[arg(long, env = "VH_FORMAT", value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// Parses `name=min:max:count[:log]`.
pub fn parse_axis(s: &str) -> Result<Axis, String> {
    let (name, spec) = s.split_once('=').ok_or_else(|| format!("axis '{s}': expected name=min:max:count[:log]"))?;
    let param = Param::parse(name).map_err(|e| e.to_string())?;
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 && parts.len() != 4 {
        return Err(format!("axis '{s}': expected name=min:max:count[:log]"));
    }
    let num = |x: &str| x.trim().parse::<f64>().map_err(|_| format!("axis '{s}': bad number '{x}'"));
    let min = num(parts[0])?;
    let max = num(parts[1])?;
    let count = parts[2].trim().parse::<usize>().map_err(|_| format!("axis '{s}': bad count '{}'", parts[2]))?;
    let spacing = match parts.get(3).map(|x| x.trim()) {
        None | Some("lin") | Some("linear") => Spacing::Linear,
        Some("log") => Spacing::Log,
        Some(other) => return Err(format!("axis '{s}': unknown spacing '{other}'")),
    };
    let axis = Axis { param, min, max, count, spacing };
    axis.validate().map_err(|e| e.to_string())?;
    Ok(axis)
}

/// Parses arguments and runs the command; returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let mut out = std::io::stdout().lock();
    match execute(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &VhError) -> i32 {
    match e {
        VhError::NonConvergence { .. } => EXIT_NONCONVERGENCE,
        _ => EXIT_USAGE,
    }
}

fn io_error(path: &Path, e: std::io::Error) -> VhError {
    VhError::Domain(format!("cannot write {}: {e}", path.display()))
}

/// Runs a parsed command, writing its report to `out`.
pub fn execute(command: Command, out: &mut dyn std::io::Write) -> Result<i32, VhError> {
    match command {
        Command::Compute(a) => cmd_compute(&a, out),
        Command::Scan(a) => cmd_scan(&a, out),
        Command::Figure(a) => cmd_figure(&a, out),
        Command::Selfcheck(a) => cmd_selfcheck(&a, out),
    }
}

fn emit(out: &mut dyn std::io::Write, text: &str) -> Result<(), VhError> {
    out.write_all(text.as_bytes()).map_err(|e| VhError::Domain(format!("cannot write output: {e}")))
}

fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> Result<R, VhError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| VhError::Domain(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

pub fn cmd_compute(a: &ComputeArgs, out: &mut dyn std::io::Write) -> Result<i32, VhError> {
    let settings = a.numeric.settings()?;
    let p = a.point.params();
    let pair = p.pair(a.model, &settings)?;
    let terms = compute_terms(&pair)?;
    let state = assemble_state(&terms)?;
    let e = terms.quadrature_errors;
    let fields: [(&str, f64); 11] = [
        ("L_aa", terms.l_aa),
        ("L_bb", terms.l_bb),
        ("L_ab_abs", terms.l_ab.norm()),
        ("M_abs", terms.m.norm()),
        ("N2", state.negativity_leading),
        ("N", state.negativity),
        ("concurrence", state.concurrence),
        ("err_L_aa", e.l_aa),
        ("err_L_bb", e.l_bb),
        ("err_L_ab", e.l_ab),
        ("err_M", e.m),
    ];
    let text = match a.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "# model: {}", a.model.name());
            let _ = writeln!(
                s,
                "# params: a0_omega={} omega_t={} d_over_t={} tba_over_t={} psi={} theta={} phi={}",
                fmt_float(p.a0_omega),
                fmt_float(p.omega_t),
                fmt_float(p.d_over_t),
                fmt_float(p.tba_over_t),
                fmt_float(p.psi),
                fmt_float(p.theta),
                fmt_float(p.phi)
            );
            let _ = writeln!(s, "# version: {}", env!("CARGO_PKG_VERSION"));
            let names: Vec<&str> = fields.iter().map(|f| f.0).collect();
            let values: Vec<String> = fields.iter().map(|f| fmt_float(f.1)).collect();
            let _ = writeln!(s, "{}", names.join(","));
            let _ = writeln!(s, "{}", values.join(","));
            s
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("model".into(), json!(a.model.name()));
            obj.insert("params".into(), serde_json::to_value(p).unwrap_or_default());
            for (k, v) in fields {
                obj.insert(k.into(), json!(v));
            }
            format!("{}\n", serde_json::Value::Object(obj))
        }
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

pub fn cmd_scan(a: &ScanArgs, out: &mut dyn std::io::Write) -> Result<i32, VhError> {
    let settings = a.numeric.settings()?;
    let grid = ScanGrid { axes: a.axes.clone(), fixed: a.point.params(), model: a.model };
    grid.validate()?;
    let result = with_threads(a.threads, || survey::run_scan(&grid, &settings))??;
    let text = match a.format {
        Format::Csv => result.to_csv(),
        Format::Json => serde_json::to_string_pretty(&result).map_err(|e| VhError::Domain(e.to_string()))? + "\n",
    };
    match &a.output {
        Some(path) => std::fs::write(path, text).map_err(|e| io_error(path, e))?,
        None => emit(out, &text)?,
    }
    let failed = result.rows.iter().filter(|r| !r.converged).count();
    if failed > 0 {
        eprintln!("warning: {failed} of {} points did not converge", result.rows.len());
        if a.strict {
            return Ok(EXIT_NONCONVERGENCE);
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_selfcheck(a: &SelfcheckArgs, out: &mut dyn std::io::Write) -> Result<i32, VhError> {
    let mutation = match &a.mutate {
        Some(family) => {
            if !oracle::family_names().contains(&family.as_str()) {
                return Err(VhError::Domain(format!(
                    "unknown oracle family '{family}' (known: {})",
                    oracle::family_names().join(", ")
                )));
            }
            Some(Mutation { family: family.clone(), relative: a.mutation_size })
        }
        None => None,
    };
    let mut reports = oracle::run_all_with(mutation.as_ref());
    reports.extend(oracle::invariant_suites());
    let all_pass = reports.iter().all(|r| r.pass);
    let text = match a.format {
        Format::Csv => report_table(&reports),
        Format::Json => serde_json::to_string_pretty(&reports).map_err(|e| VhError::Domain(e.to_string()))? + "\n",
    };
    emit(out, &text)?;
    Ok(if all_pass { EXIT_OK } else { EXIT_FAILED })
}

fn report_table(reports: &[OracleReport]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<24} {:>12} {:>10} {:>14}  status", "check", "rel_err", "tolerance", "evaluations");
    for r in reports {
        let _ = writeln!(
            s,
            "{:<24} {:>12.3e} {:>10.1e} {:>14}  {}",
            r.name,
            r.rel_err,
            r.tolerance,
            r.budget,
            if r.pass { "PASS" } else { "FAIL" }
        );
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    let _ = writeln!(s, "{} checks, {} failed", reports.len(), failed);
    s
}

// ---------------------------------------------------------------------------
// figures

/// CSV text and gnuplot script of one figure.
pub struct FigureFiles {
    pub csv: String,
    pub plot: String,
}

pub fn cmd_figure(a: &FigureArgs, out: &mut dyn std::io::Write) -> Result<i32, VhError> {
    let settings = a.numeric.settings()?;
    let files = with_threads(a.threads, || build_figure(a, &settings))??;
    std::fs::create_dir_all(&a.out_dir).map_err(|e| io_error(&a.out_dir, e))?;
    let name = a.name.name();
    let csv_path = a.out_dir.join(format!("{name}.csv"));
    let plt_path = a.out_dir.join(format!("{name}.plt"));
    std::fs::write(&csv_path, files.csv).map_err(|e| io_error(&csv_path, e))?;
    std::fs::write(&plt_path, files.plot).map_err(|e| io_error(&plt_path, e))?;
    emit(out, &format!("wrote {}\nwrote {}\n", csv_path.display(), plt_path.display()))?;
    Ok(EXIT_OK)
}

fn resolution(a: &FigureArgs, default: usize) -> Result<usize, VhError> {
    match a.resolution {
        Some(n) if n < 2 => Err(VhError::Domain("--resolution must be at least 2".into())),
        Some(n) => Ok(n),
        None => Ok(default),
    }
}

fn base_params(a: &FigureArgs, omega_t: f64, tba: f64) -> PointParams {
    PointParams {
        a0_omega: a.a0_omega.unwrap_or(0.001),
        omega_t: a.omega_t.unwrap_or(omega_t),
        tba_over_t: a.tba.unwrap_or(tba),
        ..PointParams::default()
    }
}

fn header(name: &str, p: &PointParams, settings: &ScanSettings) -> String {
    let switching = match settings.switching {
        SwitchingKind::Gaussian => "gaussian".to_string(),
        SwitchingKind::CroppedGaussian { crop_sigmas } => format!("cropped({})", fmt_float(crop_sigmas)),
    };
    format!(
        "# figure: {name}\n# fixed: a0_omega={} omega_t={} tba_over_t={}\n# switching: {switching}\n# tolerance: rel={} abs={} threshold_factor={}\n# version: {}\n",
        fmt_float(p.a0_omega),
        fmt_float(p.omega_t),
        fmt_float(p.tba_over_t),
        fmt_float(settings.tolerance.rtol),
        fmt_float(settings.tolerance.atol),
        fmt_float(settings.threshold_factor),
        env!("CARGO_PKG_VERSION")
    )
}

fn plot_preamble(name: &str) -> String {
    format!("set datafile separator ','\nset terminal pngcairo size 900,650\nset output '{name}.png'\n")
}

pub fn build_figure(a: &FigureArgs, settings: &ScanSettings) -> Result<FigureFiles, VhError> {
    match a.name {
        FigureName::Fig3 => fig3(a, settings),
        FigureName::Fig4 => fig4(a, settings),
        FigureName::Fig5a => fig5(a, settings, false),
        FigureName::Fig5b => fig5(a, settings, true),
        FigureName::Fig7 => fig7(a, settings),
    }
}

/// Negativity against `theta` at light contact for three separations.
fn fig3(a: &FigureArgs, settings: &ScanSettings) -> Result<FigureFiles, VhError> {
    let n = resolution(a, CURVE_RESOLUTION)?;
    let base = base_params(a, 1.0, 1.0);
    let distances = [1.0, 1.15, 1.25];
    let mut csv = header("fig3", &base, settings);
    csv.push_str("d_over_t,theta,N2,N\n");
    for &d in &distances {
        let mut p = base;
        p.d_over_t = d;
        p.tba_over_t = d;
        let res = survey::orientation_scan(p, Axis::linear(Param::Theta, 0.0, std::f64::consts::PI, n), settings)?;
        for r in &res.rows {
            let _ = writeln!(csv, "{},{},{},{}", fmt_float(d), fmt_float(r.coordinates[0]), fmt_float(r.n2), fmt_float(r.n));
        }
    }
    let mut plot = plot_preamble("fig3");
    plot.push_str("set xlabel 'theta'\nset ylabel 'N'\nset logscale y\nset xrange [0:pi]\n");
    let styles = ["lc rgb 'blue' dt 1", "lc rgb 'red' dt 2", "lc rgb 'dark-green' dt 4"];
    let curves: Vec<String> = distances
        .iter()
        .zip(styles)
        .map(|(d, st)| format!("'fig3.csv' using 2:(abs($1-{d})<1e-9 ? $4 : 1/0) with lines {st} title 'd/T={d}'"))
        .collect();
    let _ = writeln!(plot, "plot {}", curves.join(", \\\n     "));
    Ok(FigureFiles { csv, plot })
}

fn lightcone_arrows(tba: f64, vertical: bool) -> String {
    let (lo, hi) = lightcone_band(tba);
    let mut s = String::new();
    for x in [lo, hi] {
        if vertical {
            let _ = writeln!(s, "set arrow from {x}, graph 0 to {x}, graph 1 nohead dt 2 lc rgb 'black'");
        } else {
            let _ = writeln!(s, "set arrow from graph 0, first {x} to graph 1, first {x} nohead dt 2 lc rgb 'black'");
        }
    }
    s
}

/// Binary harvestability over (`d / T`, `Omega T`) at `t_BA / T = 10`.
fn fig4(a: &FigureArgs, settings: &ScanSettings) -> Result<FigureFiles, VhError> {
    let n = resolution(a, MAP_RESOLUTION)?;
    let base = base_params(a, 1.0, 10.0);
    let res = survey::harvestability_map(
        ModelKind::EmDipole,
        Axis::linear(Param::OmegaT, 0.5, 30.0, n),
        Axis::linear(Param::DOverT, 0.0, 25.0, n),
        base,
        settings,
    )?;
    let mut csv = header("fig4", &base, settings);
    csv.push_str("omega_t,d_over_t,N,harvestable\n");
    for r in &res.rows {
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            fmt_float(r.coordinates[0]),
            fmt_float(r.coordinates[1]),
            fmt_float(r.n),
            u8::from(r.harvestable)
        );
    }
    let mut plot = plot_preamble("fig4");
    plot.push_str("set xlabel 'd/T'\nset ylabel 'Omega T'\nset palette defined (0 'light-grey', 1 'dark-red')\nset cbrange [0:1]\nunset colorbox\n");
    plot.push_str(&lightcone_arrows(base.tba_over_t, true));
    plot.push_str("plot 'fig4.csv' using 2:1:4 with points pt 5 ps 1.2 palette notitle\n");
    Ok(FigureFiles { csv, plot })
}

/// Negativity over (`d / T`, `t_BA / T`) at `Omega T = 12`; the zoom shows
/// the spacelike corner with lines at `d = t_BA + n sigma`.
fn fig5(a: &FigureArgs, settings: &ScanSettings, zoom: bool) -> Result<FigureFiles, VhError> {
    let n = resolution(a, MAP_RESOLUTION)?;
    let name = if zoom { "fig5b" } else { "fig5a" };
    let base = base_params(a, 12.0, 0.0);
    let (d_axis, t_axis) = if zoom {
        (Axis::linear(Param::DOverT, 5.0, 8.0, n), Axis::linear(Param::TbaOverT, 0.0, 2.0, n))
    } else {
        (Axis::linear(Param::DOverT, 0.0, 20.0, n), Axis::linear(Param::TbaOverT, 0.0, 20.0, n))
    };
    let res = survey::spacetime_map(ModelKind::EmDipole, d_axis, t_axis, base, settings)?;
    csv_map(name, &base, settings, &res).map(|csv| {
        let mut plot = plot_preamble(name);
        plot.push_str("set xlabel 'd/T'\nset ylabel 't_BA/T'\nset cblabel 'N'\n");
        if zoom {
            let sigma = std::f64::consts::FRAC_1_SQRT_2;
            plot.push_str("set logscale cb\nset xrange [5:8]\nset yrange [0:2]\n");
            for k in 7..=11 {
                let off = k as f64 * sigma;
                let _ = writeln!(plot, "set arrow from {off}, 0 to {}, 2 nohead dt 2 lc rgb 'white'", off + 2.0);
            }
        } else {
            let w = LIGHTCONE_HALF_WIDTH;
            let _ = writeln!(plot, "set arrow from {w}, 0 to 20, {} nohead dt 2 lc rgb 'white'", 20.0 - w);
            let _ = writeln!(plot, "set arrow from 0, {w} to {}, 20 nohead dt 2 lc rgb 'white'", 20.0 - w);
            plot.push_str("set xrange [0:20]\nset yrange [0:20]\n");
        }
        let _ = writeln!(plot, "plot '{name}.csv' using 1:2:($3 > 0 ? $3 : 1/0) with points pt 5 ps 1.2 palette notitle");
        FigureFiles { csv, plot }
    })
}

fn csv_map(name: &str, base: &PointParams, settings: &ScanSettings, res: &ScanResult) -> Result<String, VhError> {
    let mut csv = header(name, base, settings);
    csv.push_str("d_over_t,tba_over_t,N,N2,harvestable\n");
    for r in &res.rows {
        let _ = writeln!(
            csv,
            "{},{},{},{},{}",
            fmt_float(r.coordinates[0]),
            fmt_float(r.coordinates[1]),
            fmt_float(r.n),
            fmt_float(r.n2),
            u8::from(r.harvestable)
        );
    }
    Ok(csv)
}

/// Negativity against distance for the three models.
fn fig7(a: &FigureArgs, settings: &ScanSettings) -> Result<FigureFiles, VhError> {
    let n = resolution(a, CURVE_RESOLUTION)?;
    let base = base_params(a, 13.0, 10.0);
    let cmp = survey::model_comparison(Axis::linear(Param::DOverT, 0.0, 25.0, n), base, settings)?;
    let mut csv = header("fig7", &base, settings);
    let body = cmp.to_csv();
    csv.push_str(&body.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect::<String>());
    let mut plot = plot_preamble("fig7");
    plot.push_str("set xlabel 'd/T'\nset ylabel 'N'\nset logscale y\n");
    plot.push_str(&lightcone_arrows(base.tba_over_t, true));
    plot.push_str(
        "plot 'fig7.csv' using 1:2 with lines lc rgb 'blue' dt 1 title 'EM', \\\n     \
         'fig7.csv' using 1:3 with lines lc rgb 'red' dt 2 title 'UdW', \\\n     \
         'fig7.csv' using 1:4 with lines lc rgb 'purple' dt 3 title 'UdW derivative'\n",
    );
    Ok(FigureFiles { csv, plot })
}
