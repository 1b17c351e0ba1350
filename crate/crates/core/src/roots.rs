//! Bracketed root finding: regula-falsi (secant on the bracket) steps with a
//! bisection fallback whenever a secant step fails to halve the bracket.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct RootOptions {
    pub residual_tol: f64,
    pub width_tol: f64,
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self {
            residual_tol: 1e-10,
            width_tol: 1e-12,
            max_iter: 200,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub residual: f64,
    /// Final bracket; the function changes sign across it and `lo < x < hi`.
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
}

/// Finds a root of `f` in `[lo, hi]`, which must bracket a sign change.
pub fn find_root<F>(f: F, lo: f64, hi: f64, opts: RootOptions, label: &str) -> Result<Root>
where
    F: Fn(f64) -> Result<f64>,
{
    let (mut a, mut b) = (lo, hi);
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    if !(a < b) || fa.signum() == fb.signum() || fa == 0.0 || fb == 0.0 {
        return Err(Error::NoRoot {
            equation: label.to_string(),
            lo,
            hi,
        });
    }

    let mut last_was_secant = false;
    let mut width_before_secant = b - a;

    for iter in 1..=opts.max_iter {
        let width = b - a;
        let secant = b - fb * (b - a) / (fb - fa);
        let stalled = last_was_secant && width > 0.5 * width_before_secant;
        let use_secant = !stalled && secant.is_finite() && a < secant && secant < b && width > opts.width_tol;
        let x = if use_secant { secant } else { 0.5 * (a + b) };
        if !(a < x && x < b) {
            // bracket has collapsed to adjacent floats
            let (x, fx) = if fa.abs() < fb.abs() { (a, fa) } else { (b, fb) };
            return Err(Error::Precision(format!(
                "{label}: bracket exhausted at {x} with residual {fx:.3e}"
            )));
        }
        if use_secant && !last_was_secant {
            width_before_secant = width;
        }
        last_was_secant = use_secant;

        let fx = f(x)?;
        // report the bracket x was drawn from, which holds it strictly inside
        let (lo_prev, hi_prev) = (a, b);
        if fx == 0.0 {
            return Ok(Root {
                x,
                residual: 0.0,
                lo: lo_prev,
                hi: hi_prev,
                iterations: iter,
            });
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        if fx.abs() <= opts.residual_tol && b - a <= opts.width_tol {
            return Ok(Root {
                x,
                residual: fx,
                lo: lo_prev,
                hi: hi_prev,
                iterations: iter,
            });
        }
    }
    Err(Error::Precision(format!(
        "{label}: no convergence in {} iterations, bracket [{a}, {b}]",
        opts.max_iter
    )))
}
