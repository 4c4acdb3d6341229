use crate::error::{domain, Result};

/// Spherical Bessel function `j_l(x)` for `l` in `0..=4`, `x >= 0`.
pub fn spherical_bessel_j(l: u32, x: f64) -> Result<f64> {
    if l > 4 {
        return domain(format!("spherical_bessel_j: l = {l} outside 0..=4"));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return domain(format!("spherical_bessel_j: x = {x} must be finite and >= 0"));
    }
    Ok(sph_j(l, x))
}

/// Unchecked evaluation used on hot paths.
pub(crate) fn sph_j(l: u32, x: f64) -> f64 {
    if x < 2.0 {
        series(l, x)
    } else if x >= l as f64 {
        upward(l, x)
    } else {
        miller(l, x)
    }
}

fn series(l: u32, x: f64) -> f64 {
    // x^l/(2l+1)!! * sum_n (-x^2/2)^n / (n! (2l+3)(2l+5)...(2l+2n+1))
    let mut lead = 1.0;
    for i in 0..l {
        lead *= x / (2 * i + 3) as f64;
    }
    let h = -0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 1..40 {
        term *= h / (n as f64 * (2 * l + 2 * n + 1) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

fn upward(l: u32, x: f64) -> f64 {
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    if l == 0 {
        return j0;
    }
    let mut jm = j0;
    let mut j = s / (x * x) - c / x;
    for n in 1..l {
        let next = (2 * n + 1) as f64 / x * j - jm;
        jm = j;
        j = next;
    }
    j
}

fn miller(l: u32, x: f64) -> f64 {
    // downward recurrence normalised with sum_n (2n+1) j_n^2 = 1
    let start = l as usize + 30;
    let mut jp = 0.0;
    let mut j = 1e-30;
    let mut out = 0.0;
    let mut j1 = 0.0;
    let mut norm = 0.0;
    for n in (1..=start).rev() {
        let prev = (2 * n + 1) as f64 / x * j - jp;
        norm += (2 * n + 1) as f64 * j * j;
        jp = j;
        j = prev;
        if n - 1 == l as usize {
            out = j;
        }
        if n == 2 {
            j1 = j;
        }
    }
    norm += j * j;
    let scale = 1.0 / norm.sqrt();
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    let sign = if j0.abs() > 0.1 {
        j0.signum() * j.signum()
    } else {
        (s / (x * x) - c / x).signum() * j1.signum()
    };
    sign * out * scale
}

/// `j_0(x) + j_2(x) = 3 j_1(x) / x`, the dipole-dipole angular kernel.
pub(crate) fn j0_plus_j2(x: f64) -> f64 {
    if x < 0.5 {
        let x2 = x * x;
        // 1 - x^2/10 + x^4/280 - x^6/15120 + x^8/1330560 - ...
        1.0 - x2 / 10.0 * (1.0 - x2 / 28.0 * (1.0 - x2 / 54.0 * (1.0 - x2 / 88.0 * (1.0 - x2 / 130.0))))
    } else {
        sph_j(0, x) + sph_j(2, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_at_zero() {
        assert_eq!(spherical_bessel_j(0, 0.0).unwrap(), 1.0);
        assert_eq!(spherical_bessel_j(2, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn j0_zero_at_pi() {
        assert!(spherical_bessel_j(0, std::f64::consts::PI).unwrap().abs() < 1e-16);
    }

    #[test]
    fn j2_at_one() {
        let v = spherical_bessel_j(2, 1.0).unwrap();
        assert!((v - 0.062_035_052_011_373_86).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(spherical_bessel_j(5, 1.0).is_err());
        assert!(spherical_bessel_j(1, -1.0).is_err());
    }

    #[test]
    fn branches_agree_at_switch_points() {
        for l in 0..=4 {
            for &x in &[2.0f64, 3.0, 4.0] {
                let a = series(l, x);
                let b = miller(l, x);
                assert!((a - b).abs() <= 1e-13 * a.abs().max(1e-300), "l={l} x={x} {a} {b}");
            }
        }
    }

    #[test]
    fn dipole_kernel_series_matches_direct() {
        for &x in &[0.1, 0.3, 0.49] {
            let direct = 3.0 * upward(1, x) / x;
            assert!((j0_plus_j2(x) - direct).abs() < 1e-12);
        }
    }
}
