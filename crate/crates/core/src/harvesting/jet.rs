//! Truncated Taylor series in one real variable with complex coefficients.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::specfun::faddeeva_w;

/// Number of stored coefficients; derivatives up to order `ORDER - 1`.
pub(crate) const ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Jet(pub [Complex64; ORDER]);

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

impl Jet {
    pub fn zero() -> Self {
        Jet([ZERO; ORDER])
    }

    pub fn constant(c: Complex64) -> Self {
        let mut j = Self::zero();
        j.0[0] = c;
        j
    }

    /// `c0 + c1 h`.
    pub fn linear(c0: Complex64, c1: Complex64) -> Self {
        let mut j = Self::constant(c0);
        j.0[1] = c1;
        j
    }

    pub fn scale(mut self, s: Complex64) -> Self {
        for c in &mut self.0 {
            *c *= s;
        }
        self
    }

    pub fn exp(self) -> Self {
        let mut f = Self::zero();
        f.0[0] = self.0[0].exp();
        for k in 1..ORDER {
            let mut acc = ZERO;
            for j in 1..=k {
                acc += self.0[j] * f.0[k - j] * j as f64;
            }
            f.0[k] = acc / k as f64;
        }
        f
    }

    /// Series of `f(-x)` from that of `f(x)`.
    pub fn reflect(mut self) -> Self {
        for (k, c) in self.0.iter_mut().enumerate() {
            if k % 2 == 1 {
                *c = -*c;
            }
        }
        self
    }

    /// `n`-th derivative at the expansion point.
    pub fn derivative(&self, n: usize) -> Complex64 {
        let fact: f64 = (1..=n).map(|i| i as f64).product();
        self.0[n] * fact
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(mut self, o: Jet) -> Jet {
        for (a, b) in self.0.iter_mut().zip(o.0) {
            *a += b;
        }
        self
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        self + (-o)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        let mut r = Jet::zero();
        for i in 0..ORDER {
            for j in 0..ORDER - i {
                r.0[i + j] += self.0[i] * o.0[j];
            }
        }
        r
    }
}

/// Series of `w(z0 + slope h)` from `w' = -2 z w + 2i/sqrt(pi)`.
pub(crate) fn faddeeva_jet(z0: Complex64, slope: Complex64) -> Jet {
    let w0 = faddeeva_w(z0).unwrap_or(Complex64::new(f64::NAN, f64::NAN));
    let mut d = [ZERO; ORDER];
    d[0] = w0;
    if ORDER > 1 {
        d[1] = -2.0 * z0 * w0 + Complex64::new(0.0, 2.0 / PI.sqrt());
    }
    for n in 1..ORDER - 1 {
        d[n + 1] = -2.0 * z0 * d[n] - 2.0 * n as f64 * d[n - 1];
    }
    let mut out = Jet::zero();
    let mut p = Complex64::new(1.0, 0.0);
    let mut fact = 1.0;
    for n in 0..ORDER {
        if n > 0 {
            p *= slope;
            fact *= n as f64;
        }
        out.0[n] = d[n] * p / fact;
    }
    out
}
