//! Adaptive Gauss-Kronrod (10/21) quadrature on finite panels.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, VhError};

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_600_525_478_380,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Outcome of a quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult<V> {
    pub value: V,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

/// Absolute and relative tolerances plus a subdivision budget.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub atol: f64,
    pub rtol: f64,
    pub max_intervals: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { atol: 1e-16, rtol: 1e-10, max_intervals: 20_000 }
    }
}

impl Tolerance {
    pub fn new(atol: f64, rtol: f64) -> Self {
        Tolerance { atol, rtol, ..Default::default() }
    }

    pub fn target(&self, value: f64) -> f64 {
        self.atol.max(self.rtol * value)
    }
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
    floor: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn scaled_error(diff: f64, resasc: f64, resabs: f64) -> (f64, f64) {
    let mut err = diff;
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    let floor = 4.0 * f64::EPSILON * resabs;
    (err.max(floor), floor)
}

fn gk21<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut resk = fc * WGK[10];
    let mut resg = Complex64::new(0.0, 0.0);
    let mut resabs = [fc.re.abs() * WGK[10], fc.im.abs() * WGK[10]];
    let mut fv1 = [Complex64::new(0.0, 0.0); 10];
    let mut fv2 = [Complex64::new(0.0, 0.0); 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        let s = f1 + f2;
        resk += s * WGK[j];
        if j % 2 == 1 {
            resg += s * WG[j / 2];
        }
        resabs[0] += WGK[j] * (f1.re.abs() + f2.re.abs());
        resabs[1] += WGK[j] * (f1.im.abs() + f2.im.abs());
    }
    let mean = resk * 0.5;
    let mut resasc = [WGK[10] * (fc.re - mean.re).abs(), WGK[10] * (fc.im - mean.im).abs()];
    for j in 0..10 {
        resasc[0] += WGK[j] * ((fv1[j].re - mean.re).abs() + (fv2[j].re - mean.re).abs());
        resasc[1] += WGK[j] * ((fv1[j].im - mean.im).abs() + (fv2[j].im - mean.im).abs());
    }
    let h = half.abs();
    let diff = (resk - resg) * half;
    let (er, fr) = scaled_error(diff.re.abs(), resasc[0] * h, resabs[0] * h);
    let (ei, fi) = scaled_error(diff.im.abs(), resasc[1] * h, resabs[1] * h);
    Segment { a, b, value: resk * half, error: er.hypot(ei), floor: fr.hypot(fi) }
}

fn resum(heap: &BinaryHeap<Segment>) -> (Complex64, f64) {
    heap.iter().fold((Complex64::new(0.0, 0.0), 0.0), |(v, e), s| (v + s.value, e + s.error))
}

/// Globally adaptive GK21 over the union of the given panels.
///
/// `breaks` must be sorted; consecutive entries delimit the initial panels.
pub fn integrate_panels<F>(mut f: F, breaks: &[f64], tol: Tolerance) -> Result<QuadratureResult<Complex64>>
where
    F: FnMut(f64) -> Complex64,
{
    let mut heap = BinaryHeap::new();
    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut evals = 0;
    for w in breaks.windows(2) {
        if w[1] > w[0] {
            let s = gk21(&mut f, w[0], w[1]);
            evals += 21;
            total += s.value;
            err += s.error;
            heap.push(s);
        }
    }
    if heap.is_empty() {
        return Ok(QuadratureResult { value: total, abs_error_estimate: 0.0, evaluations: 1 });
    }
    let mut intervals = heap.len();
    while err > tol.target(total.norm()) {
        if !total.re.is_finite() || !total.im.is_finite() {
            return Err(VhError::NonConvergence { value: f64::NAN, error: f64::INFINITY });
        }
        if intervals % 512 == 0 {
            // running sums keep the rounding of large early estimates
            (total, err) = resum(&heap);
            if err <= tol.target(total.norm()) {
                break;
            }
        }
        if intervals >= tol.max_intervals.max(breaks.len() + 8) {
            (total, err) = resum(&heap);
            if err <= tol.target(total.norm()) {
                break;
            }
            return Err(VhError::NonConvergence { value: total.norm(), error: err });
        }
        let worst = heap.pop().expect("non-empty heap");
        if worst.error <= worst.floor * (1.0 + 1e-9) {
            // every remaining segment is at its rounding floor
            heap.push(worst);
            break;
        }
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            // cannot split further in floating point
            return Err(VhError::NonConvergence { value: total.norm(), error: err });
        }
        let l = gk21(&mut f, worst.a, mid);
        let r = gk21(&mut f, mid, worst.b);
        evals += 42;
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        intervals += 1;
    }
    let (value, error) = resum(&heap);
    Ok(QuadratureResult { value, abs_error_estimate: error, evaluations: evals })
}

/// Adaptive integral of a real function over `[a, b]`.
pub fn integrate_real<F>(mut f: F, a: f64, b: f64, tol: Tolerance) -> Result<QuadratureResult<f64>>
where
    F: FnMut(f64) -> f64,
{
    let r = integrate_panels(|x| Complex64::new(f(x), 0.0), &[a, b], tol)?;
    Ok(QuadratureResult { value: r.value.re, abs_error_estimate: r.abs_error_estimate, evaluations: r.evaluations })
}

/// Breakpoints on `[a, b]` spaced no wider than `width`.
pub fn uniform_breaks(a: f64, b: f64, width: f64) -> Vec<f64> {
    let n = (((b - a) / width).ceil() as usize).clamp(1, 5_000_000);
    (0..=n).map(|i| if i == n { b } else { a + (b - a) * i as f64 / n as f64 }).collect()
}

/// Merge sorted breakpoint lists, dropping near-duplicates.
pub fn merge_breaks(mut all: Vec<f64>) -> Vec<f64> {
    all.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::with_capacity(all.len());
    for x in all {
        if let Some(&last) = out.last() {
            if x - last <= 1e-12 * x.abs().max(1.0) {
                continue;
            }
        }
        out.push(x);
    }
    out
}
