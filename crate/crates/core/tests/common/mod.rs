//! Reference computations that share no code with the library: tanh-sinh
//! quadrature of the defining integral, plain bisection, and Euler
//! summation of the alternating coefficient series.

#![allow(dead_code)]

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

/// Tanh-sinh quadrature on `[0, 1]`, halving the step until two successive
/// levels agree to `tol`.
pub fn tanh_sinh<F: Fn(f64) -> Complex64>(f: F, tol: f64) -> Complex64 {
    let t_max = 3.5;
    let eval = |h: f64, odd_only: bool| -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        let n = (t_max / h).ceil() as i64;
        for k in -n..=n {
            if odd_only && k % 2 == 0 {
                continue;
            }
            let t = k as f64 * h;
            let u = FRAC_PI_2 * t.sinh();
            let x = 0.5 + 0.5 * u.tanh();
            let w = 0.5 * FRAC_PI_2 * t.cosh() / (u.cosh() * u.cosh());
            if x <= 0.0 || x >= 1.0 || w == 0.0 {
                continue;
            }
            sum += f(x) * w;
        }
        sum
    };
    let mut h = 0.5;
    let mut total = eval(h, false);
    let mut estimate = total * h;
    for _ in 0..12 {
        h /= 2.0;
        total += eval(h, true);
        let next = total * h;
        if (next - estimate).norm() < tol {
            return next;
        }
        estimate = next;
    }
    estimate
}

/// `f̃(z) = z ∫₀¹ (1 + t^{1−β} z)/(1 − t^{1−β} z) dt`, or the closed form at `β = 1`.
pub fn ftilde_oracle(beta: f64, z: Complex64) -> Complex64 {
    if beta == 1.0 {
        return z * (1.0 + z) / (1.0 - z);
    }
    let e = 1.0 - beta;
    z * tanh_sinh(
        |t| {
            let w = t.powf(e) * z;
            (1.0 + w) / (1.0 - w)
        },
        1e-14,
    )
}

pub fn ftilde_oracle_real(beta: f64, x: f64) -> f64 {
    ftilde_oracle(beta, Complex64::new(x, 0.0)).re
}

/// Plain bisection to bracket width `tol`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut f_lo = f(lo);
    assert!(f_lo * f(hi) < 0.0, "no sign change on [{lo}, {hi}]");
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if (fm < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `f̃(−1) = −1 + Σ_{n≥2} (−1)ⁿ 2/(n − (n−1)β)`, summed by repeatedly
/// averaging consecutive partial sums.
pub fn ftilde_minus1_euler(beta: f64) -> f64 {
    const TERMS: usize = 64;
    let mut partial = Vec::with_capacity(TERMS);
    let mut s = -1.0;
    for n in 2..2 + TERMS {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        s += sign * 2.0 / (n as f64 - (n as f64 - 1.0) * beta);
        partial.push(s);
    }
    while partial.len() > 1 {
        partial = partial.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    partial[0]
}

/// Largest `|aₙ|` bound, `2/(n − (n−1)β)`, written out independently.
pub fn coeff_max(beta: f64, n: usize) -> f64 {
    2.0 / (n as f64 - (n as f64 - 1.0) * beta)
}
