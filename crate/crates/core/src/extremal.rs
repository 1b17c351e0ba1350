//! The extremal functions of `A_β`.
//!
//! `f̃(z) = z(−1 + 2 ₂F₁[1, b; b + 1; z])` with `b = 1/(1 − β)` has the
//! largest possible coefficients `2/(n − (n − 1)β)`. The other three are the
//! witnesses used for the functional bounds:
//!
//! * `f̃₁(z) = −i f̃(iz)`, coefficients `2iⁿ⁻¹/(n − (n − 1)β)`;
//! * `f̃₂`, generated by `(1 + z³)/(1 − z³)`;
//! * `f̃₃`, generated by `(1 − z²)/(1 − cz + z²)` with
//!   `c = √((2β² − 8β + 7)/(2 − β²))`.

use num_complex::Complex64;

use crate::carath::{to_abeta_coeffs, BetaParam, CoeffSeq, HerglotzMeasure};
use crate::error::{domain, Error, Result};
use crate::quad;
use crate::series;

/// Radius up to which `f̃` is summed as a power series.
pub const SERIES_RADIUS: f64 = 0.95;
/// Accuracy used when callers do not ask for one.
pub const DEFAULT_TOL: f64 = 1e-12;
const MAX_PANELS: usize = 4000;
const MAX_TERMS: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtremalId {
    Ftilde,
    Ftilde1,
    Ftilde2,
    Ftilde3,
}

impl ExtremalId {
    pub const ALL: [ExtremalId; 4] = [Self::Ftilde, Self::Ftilde1, Self::Ftilde2, Self::Ftilde3];

    pub fn name(self) -> &'static str {
        match self {
            Self::Ftilde => "ftilde",
            Self::Ftilde1 => "ftilde1",
            Self::Ftilde2 => "ftilde2",
            Self::Ftilde3 => "ftilde3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMethod {
    Series,
    Quadrature,
    /// `z(1 + z)/(1 − z)` at `β = 1`.
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub abs_error_bound: f64,
    pub method: EvalMethod,
}

/// `2/(n − (n − 1)β)`: the n-th coefficient of `f̃`. Returns 1 for `n = 1`
/// and 0 for `n = 0`, so the full Taylor sequence is covered.
pub fn ftilde_coeff(beta: BetaParam, n: usize) -> f64 {
    match n {
        0 => 0.0,
        1 => 1.0,
        _ => 2.0 / beta.coeff_scale(n),
    }
}

/// Evaluates `f̃(z)` for `|z| ≤ 1`, `z ≠ 1`, to absolute accuracy `tol`.
///
/// Inside `|z| ≤ 0.95` the Taylor series is summed until an explicit
/// geometric tail bound plus a first-order rounding bound fall below `tol`.
/// Outside, `f̃(z) = z(1 + 2z ∫₀¹ b uᵇ/(1 − zu) du)`, the `u = t^{1−β}` form
/// of the defining integral with its constant part split off, goes to
/// adaptive Gauss–Kronrod.
pub fn ftilde_eval(beta: BetaParam, z: Complex64, tol: f64) -> Result<EvalResult> {
    if !(z.norm() <= 1.0) {
        return Err(domain(format!("ftilde_eval needs |z| <= 1, got |z| = {}", z.norm())));
    }
    if z == Complex64::new(1.0, 0.0) {
        return Err(domain("ftilde has a pole at z = 1"));
    }
    if !(tol > 0.0) {
        return Err(domain("tolerance must be positive"));
    }
    if beta.get() == 1.0 {
        let value = z * (1.0 + z) / (1.0 - z);
        return Ok(EvalResult {
            value,
            abs_error_bound: 4.0 * f64::EPSILON * value.norm(),
            method: EvalMethod::ClosedForm,
        });
    }
    if z.norm() <= SERIES_RADIUS {
        ftilde_series(beta, z, tol)
    } else {
        ftilde_quadrature(beta, z, tol)
    }
}

/// Series evaluation, usable for any `|z| < 1`. Exposed so callers can cross
/// check the two evaluation routes.
pub fn ftilde_series(beta: BetaParam, z: Complex64, tol: f64) -> Result<EvalResult> {
    let r = z.norm();
    if !(r < 1.0) {
        return Err(domain("series evaluation needs |z| < 1"));
    }
    if r == 0.0 {
        return Ok(EvalResult {
            value: z,
            abs_error_bound: 0.0,
            method: EvalMethod::Series,
        });
    }
    // Neumaier-compensated sum of z + Σ cₙ zⁿ
    let mut sum = z;
    let mut comp = Complex64::new(0.0, 0.0);
    let mut power = z;
    let mut weighted_abs = r;
    let mut rpow = r;
    for n in 2..=MAX_TERMS {
        power *= z;
        rpow *= r;
        let cn = ftilde_coeff(beta, n);
        let term = power * cn;
        let t = sum + term;
        comp.re += if sum.re.abs() >= term.re.abs() {
            (sum.re - t.re) + term.re
        } else {
            (term.re - t.re) + sum.re
        };
        comp.im += if sum.im.abs() >= term.im.abs() {
            (sum.im - t.im) + term.im
        } else {
            (term.im - t.im) + sum.im
        };
        sum = t;
        weighted_abs += n as f64 * cn * rpow;

        // coefficients decrease in n, so the tail is dominated by a geometric series
        let tail = ftilde_coeff(beta, n + 1) * rpow * r / (1.0 - r);
        let rounding = 4.0 * f64::EPSILON * weighted_abs;
        if tail + rounding <= tol {
            return Ok(EvalResult {
                value: sum + comp,
                abs_error_bound: tail + rounding,
                method: EvalMethod::Series,
            });
        }
        if rounding > tol {
            break;
        }
    }
    Err(Error::Precision(format!(
        "series for ftilde at |z| = {r} cannot reach tolerance {tol:.1e}"
    )))
}

/// Quadrature evaluation, usable for any `|z| ≤ 1`, `z ≠ 1`.
pub fn ftilde_quadrature(beta: BetaParam, z: Complex64, tol: f64) -> Result<EvalResult> {
    let beta = beta.require_below_one("quadrature evaluation of ftilde")?;
    if z == Complex64::new(1.0, 0.0) || !(z.norm() <= 1.0) {
        return Err(domain("quadrature evaluation needs |z| <= 1 and z != 1"));
    }
    let b = 1.0 / (1.0 - beta.get());
    let scale = 2.0 * z.norm_sqr();
    if scale == 0.0 {
        return Ok(EvalResult {
            value: z,
            abs_error_bound: 0.0,
            method: EvalMethod::Quadrature,
        });
    }
    let integrand = |u: f64| b * u.powf(b) / (1.0 - z * u);
    let q = quad::integrate(integrand, 0.0, 1.0, 0.5 * tol / scale, MAX_PANELS)?;
    let value = z * (1.0 + 2.0 * z * q.value);
    let abs_error_bound = scale * q.abs_error + 4.0 * f64::EPSILON * value.norm();
    if abs_error_bound > tol {
        return Err(Error::Precision(format!(
            "quadrature for ftilde at z = {z} reached {abs_error_bound:.3e}, asked {tol:.1e}"
        )));
    }
    Ok(EvalResult {
        value,
        abs_error_bound,
        method: EvalMethod::Quadrature,
    })
}

/// `f̃(−1) = −1 + 2 ∫₀¹ b uᵇ/(1 + u) du` (≤ 0), with `f̃(−1) = 0` at `β = 1`.
pub fn ftilde_at_minus1(beta: BetaParam) -> Result<f64> {
    if beta.get() == 1.0 {
        return Ok(0.0);
    }
    let b = 1.0 / (1.0 - beta.get());
    let q = quad::integrate(
        |u| Complex64::new(b * u.powf(b) / (1.0 + u), 0.0),
        0.0,
        1.0,
        1e-14,
        MAX_PANELS,
    )?;
    Ok(-1.0 + 2.0 * q.value.re)
}

/// Coefficients `a₂..a_M` of the requested extremal function.
pub fn extremal_coeffs(id: ExtremalId, beta: BetaParam, m: usize) -> Result<CoeffSeq> {
    let count = m.saturating_sub(1);
    let zero = Complex64::new(0.0, 0.0);
    let p: Vec<Complex64> = match id {
        ExtremalId::Ftilde => vec![Complex64::new(2.0, 0.0); count],
        ExtremalId::Ftilde1 => (1..=count)
            .map(|k| match k % 4 {
                0 => Complex64::new(2.0, 0.0),
                1 => Complex64::new(0.0, 2.0),
                2 => Complex64::new(-2.0, 0.0),
                _ => Complex64::new(0.0, -2.0),
            })
            .collect(),
        ExtremalId::Ftilde2 => (1..=count)
            .map(|k| if k % 3 == 0 { Complex64::new(2.0, 0.0) } else { zero })
            .collect(),
        ExtremalId::Ftilde3 => {
            let c = ftilde3_parameter(beta)?;
            let num = [Complex64::new(1.0, 0.0), zero, Complex64::new(-1.0, 0.0)];
            let den = [
                Complex64::new(1.0, 0.0),
                Complex64::new(-c, 0.0),
                Complex64::new(1.0, 0.0),
            ];
            let q = series::divide(&num, &den, count + 1)?;
            q[1..].to_vec()
        }
    };
    Ok(to_abeta_coeffs(beta, &p))
}

/// The atomic measure generating each extremal function: a point mass at 0
/// (`f̃`) or `π/2` (`f̃₁`), three equal atoms at the cube roots of unity
/// (`f̃₂`), and two equal atoms at `±arccos(c/2)` (`f̃₃`).
pub fn extremal_measure(id: ExtremalId, beta: BetaParam) -> Result<HerglotzMeasure> {
    use std::f64::consts::{FRAC_PI_2, TAU};
    match id {
        ExtremalId::Ftilde => Ok(HerglotzMeasure::point_mass(0.0)),
        ExtremalId::Ftilde1 => Ok(HerglotzMeasure::point_mass(FRAC_PI_2)),
        ExtremalId::Ftilde2 => HerglotzMeasure::new((0..3).map(|k| (k as f64 * TAU / 3.0, 1.0 / 3.0))),
        ExtremalId::Ftilde3 => {
            let phi = (ftilde3_parameter(beta)? / 2.0).acos();
            HerglotzMeasure::new([(phi, 0.5), (-phi, 0.5)])
        }
    }
}

/// `c = √((2β² − 8β + 7)/(2 − β²))`, the middle coefficient of the `f̃₃`
/// generator. Equals the minimizing `p₁` of the lower Hermitian-Toeplitz bound.
pub fn ftilde3_parameter(beta: BetaParam) -> Result<f64> {
    let b = beta.get();
    let c = ((2.0 * b * b - 8.0 * b + 7.0) / (2.0 - b * b)).sqrt();
    if !(c <= 2.0) {
        return Err(domain(format!("ftilde3 parameter c = {c} exceeds 2")));
    }
    Ok(c)
}
