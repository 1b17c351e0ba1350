//! Bohr and Bohr–Rogosinski radii of `A_β`.
//!
//! Both radii are roots of equations built from `f̃` on `[0, 1)`:
//!
//! * Bohr: `rᵐ + f̃(r) − r + f̃(−1) = 0`;
//! * Bohr–Rogosinski: `f̃(rᵐ) + f̃(r) − f̂(r) + f̃(−1) = 0`, where `f̂` is the
//!   Taylor polynomial of `f̃` of degree `N − 1` (`f̂ = 0` for `N = 1`).
//!
//! Each left side is a positive-coefficient series minus a positive
//! constant, hence strictly increasing in `r`, so the root is unique.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::carath::BetaParam;
use crate::error::{domain, Error, Result};
use crate::extremal::{ftilde_at_minus1, ftilde_coeff, ftilde_eval, DEFAULT_TOL};
use crate::roots::{find_root, RootOptions};

/// Largest Rogosinski tail index accepted.
pub const MAX_TAIL_INDEX: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RadiusEquation {
    Bohr { m: u32 },
    Rogosinski { m: u32, tail: usize },
}

impl RadiusEquation {
    pub fn label(&self) -> String {
        match self {
            Self::Bohr { m } => format!("BOHR({m})"),
            Self::Rogosinski { m, tail } => format!("ROGOSINSKI({m}, {tail})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusResult {
    pub radius: f64,
    pub residual: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
    pub equation: RadiusEquation,
}

/// `−f̃(−1)`, a lower bound for the distance from 0 to the boundary of
/// `f(D)` for every `f ∈ A_β`.
pub fn distance_lower(beta: BetaParam) -> Result<f64> {
    let beta = beta.require_below_one("distance_lower")?;
    Ok(-ftilde_at_minus1(beta)?)
}

fn ftilde_real(beta: BetaParam, r: f64) -> Result<f64> {
    Ok(ftilde_eval(beta, Complex64::new(r, 0.0), DEFAULT_TOL)?.value.re)
}

/// `Σ_{n<N} f̃ₙ rⁿ`, zero for `N = 1`.
fn partial_sum(beta: BetaParam, r: f64, tail: usize) -> f64 {
    (1..tail).map(|n| ftilde_coeff(beta, n) * r.powi(n as i32)).sum()
}

/// Left side of the equation at `r`.
pub fn equation_value(beta: BetaParam, equation: RadiusEquation, r: f64) -> Result<f64> {
    let beta = beta.require_below_one("radius equation")?;
    let offset = ftilde_at_minus1(beta)?;
    equation_with_offset(beta, equation, r, offset)
}

fn equation_with_offset(beta: BetaParam, equation: RadiusEquation, r: f64, offset: f64) -> Result<f64> {
    match equation {
        RadiusEquation::Bohr { m } => Ok(r.powi(m as i32) + ftilde_real(beta, r)? - r + offset),
        RadiusEquation::Rogosinski { m, tail } => {
            Ok(ftilde_real(beta, r.powi(m as i32))? + ftilde_real(beta, r)? - partial_sum(beta, r, tail) + offset)
        }
    }
}

/// Smallest positive root of `rᵐ + f̃(r) − r + f̃(−1) = 0`.
pub fn bohr_radius(beta: BetaParam, m: u32) -> Result<RadiusResult> {
    if m == 0 {
        return Err(domain("bohr_radius needs m >= 1"));
    }
    solve(beta, RadiusEquation::Bohr { m })
}

/// Root of `f̃(rᵐ) + f̃(r) − f̂(r) + f̃(−1) = 0` with `f̂` the degree `N − 1`
/// Taylor polynomial of `f̃`.
pub fn rogosinski_radius(beta: BetaParam, m: u32, tail: usize) -> Result<RadiusResult> {
    if m == 0 || tail == 0 {
        return Err(domain("rogosinski_radius needs m >= 1 and N >= 1"));
    }
    if tail > MAX_TAIL_INDEX {
        return Err(Error::Limit(format!("N = {tail} exceeds {MAX_TAIL_INDEX}")));
    }
    solve(beta, RadiusEquation::Rogosinski { m, tail })
}

fn solve(beta: BetaParam, equation: RadiusEquation) -> Result<RadiusResult> {
    let beta = beta.require_below_one("radii")?;
    let offset = ftilde_at_minus1(beta)?;
    if !(offset < 0.0) {
        return Err(Error::Precision(format!("f~(-1) = {offset} is not negative")));
    }
    let g = |r: f64| equation_with_offset(beta, equation, r, offset);
    let label = equation.label();

    // g(0) = f̃(−1) < 0; walk the upper end toward 1 until g turns positive
    let mut hi = 0.5;
    let mut g_hi = g(hi)?;
    while g_hi <= 0.0 {
        hi = 0.5 * (1.0 + hi);
        if hi >= 1.0 - 1e-12 {
            return Err(Error::NoRoot {
                equation: label,
                lo: 0.0,
                hi,
            });
        }
        g_hi = g(hi)?;
    }
    check_increasing(&g, hi, &label)?;

    let root = find_root(g, 0.0, hi, RootOptions::default(), &label)?;
    Ok(RadiusResult {
        radius: root.x,
        residual: root.residual,
        bracket: (root.lo, root.hi),
        iterations: root.iterations,
        equation,
    })
}

// Uniqueness guard: the equation must increase across the initial bracket.
fn check_increasing<G: Fn(f64) -> Result<f64>>(g: &G, hi: f64, label: &str) -> Result<()> {
    const STEPS: usize = 16;
    let mut prev = g(0.0)?;
    for i in 1..=STEPS {
        let v = g(hi * i as f64 / STEPS as f64)?;
        if !(v > prev) {
            return Err(Error::Precision(format!(
                "{label} is not increasing on [0, {hi}]; root may not be unique"
            )));
        }
        prev = v;
    }
    Ok(())
}

/// Which radius a curve tabulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    Bohr,
    Rogosinski { tail: usize },
}

/// Radii over a strictly increasing `β` grid in `[0, 1)`, computed in
/// parallel and returned in grid order. The radius column must come out
/// strictly decreasing.
pub fn radius_curve(m: u32, kind: CurveKind, grid: &[f64]) -> Result<Vec<(f64, RadiusResult)>> {
    if grid.is_empty() {
        return Err(domain("radius_curve needs a non-empty beta grid"));
    }
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(domain("radius_curve needs a strictly increasing beta grid"));
    }
    let betas = grid
        .iter()
        .map(|&b| BetaParam::new(b).and_then(|b| b.require_below_one("radius_curve")))
        .collect::<Result<Vec<_>>>()?;

    let rows = betas
        .par_iter()
        .map(|&b| {
            let r = match kind {
                CurveKind::Bohr => bohr_radius(b, m),
                CurveKind::Rogosinski { tail } => rogosinski_radius(b, m, tail),
            }?;
            Ok((b.get(), r))
        })
        .collect::<Result<Vec<_>>>()?;

    if let Some(w) = rows.windows(2).find(|w| !(w[1].1.radius < w[0].1.radius)) {
        return Err(Error::Precision(format!(
            "radius curve not decreasing between beta = {} and {}",
            w[0].0, w[1].0
        )));
    }
    Ok(rows)
}
