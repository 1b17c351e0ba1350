//! Coefficient functionals of a normalized function `z + a₂z² + …`.
//!
//! All functionals return the signed (complex) value; callers take the
//! modulus where a bound is stated for it. `a₁ = 1` throughout.

use num_complex::Complex64;

use crate::carath::CoeffSeq;
use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionalKind {
    /// `aₙaₙ₊₂ − μaₙ₊₁²`; the Hankel determinant `H₂(n)` at `μ = 1`.
    H2,
    /// `aₙ² − aₙ₊₁²`.
    T2N,
    /// `1 − 2a₂² + 2a₂²a₃ − a₃²`, the non-conjugated Toeplitz `T₃(1)`.
    T31Toeplitz,
    /// `1 − 2|a₂|² + 2Re(a₂²ā₃) − |a₃|²`, real.
    T31Hermitian,
    /// `aₙaₘ − aₙ₊ₘ₋₁`.
    Zalcman,
    /// `aₙ₊₁ᴺ − aₙᴺ`.
    CoeffDiff,
}

/// Parameters a functional may use; unused fields are ignored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalParams {
    pub n: usize,
    pub m: usize,
    pub mu: f64,
    pub power: u32,
}

impl Default for FunctionalParams {
    fn default() -> Self {
        Self {
            n: 2,
            m: 3,
            mu: 1.0,
            power: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalValue {
    pub kind: FunctionalKind,
    pub params: FunctionalParams,
    pub value: Complex64,
}

impl FunctionalValue {
    pub fn modulus(&self) -> f64 {
        self.value.norm()
    }
}

pub fn evaluate(kind: FunctionalKind, a: &CoeffSeq, params: FunctionalParams) -> Result<FunctionalValue> {
    let value = match kind {
        FunctionalKind::H2 => hankel2(a, params.n, params.mu)?,
        FunctionalKind::T2N => hermitian_t2n(a, params.n)?,
        FunctionalKind::T31Toeplitz => toeplitz3(a)?,
        FunctionalKind::T31Hermitian => Complex64::new(hermitian_t31(a)?, 0.0),
        FunctionalKind::Zalcman => zalcman(a, params.n, params.m)?,
        FunctionalKind::CoeffDiff => coeff_diff_power(a, params.n, params.power)?,
    };
    Ok(FunctionalValue { kind, params, value })
}

/// `aₙaₙ₊₂ − μaₙ₊₁²` for `n ≥ 1`, `μ ≥ 0`.
pub fn hankel2(a: &CoeffSeq, n: usize, mu: f64) -> Result<Complex64> {
    if n == 0 {
        return Err(domain("hankel2 needs n >= 1"));
    }
    if !(mu >= 0.0) || !mu.is_finite() {
        return Err(domain(format!("hankel2 needs a finite mu >= 0, got {mu}")));
    }
    let an1 = a.a(n + 1)?;
    Ok(a.a(n)? * a.a(n + 2)? - mu * an1 * an1)
}

/// `T₃(1) = 1 − 2a₂² + 2a₂²a₃ − a₃²`.
pub fn toeplitz3(a: &CoeffSeq) -> Result<Complex64> {
    let a2 = a.a(2)?;
    let a3 = a.a(3)?;
    let a2sq = a2 * a2;
    Ok(1.0 - 2.0 * a2sq + 2.0 * a2sq * a3 - a3 * a3)
}

/// `T₃,₁ = 1 − 2|a₂|² + 2Re(a₂²ā₃) − |a₃|²`.
pub fn hermitian_t31(a: &CoeffSeq) -> Result<f64> {
    let a2 = a.a(2)?;
    let a3 = a.a(3)?;
    Ok(1.0 - 2.0 * a2.norm_sqr() + 2.0 * (a2 * a2 * a3.conj()).re - a3.norm_sqr())
}

/// `T₂,ₙ = aₙ² − aₙ₊₁²`.
pub fn hermitian_t2n(a: &CoeffSeq, n: usize) -> Result<Complex64> {
    if n == 0 {
        return Err(domain("T_{2,n} needs n >= 1"));
    }
    let an = a.a(n)?;
    let an1 = a.a(n + 1)?;
    Ok(an * an - an1 * an1)
}

/// `Jₘ,ₙ = aₙaₘ − aₙ₊ₘ₋₁`.
pub fn zalcman(a: &CoeffSeq, n: usize, m: usize) -> Result<Complex64> {
    if n == 0 || m == 0 {
        return Err(domain("zalcman needs n, m >= 1"));
    }
    Ok(a.a(n)? * a.a(m)? - a.a(n + m - 1)?)
}

/// `aₙ₊₁ᴺ − aₙᴺ`.
pub fn coeff_diff_power(a: &CoeffSeq, n: usize, power: u32) -> Result<Complex64> {
    if n == 0 || power == 0 {
        return Err(domain("coeff_diff_power needs n >= 1 and N >= 1"));
    }
    Ok(a.a(n + 1)?.powu(power) - a.a(n)?.powu(power))
}
