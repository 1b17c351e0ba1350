//! Truncated formal power series over `Complex64`.

use num_complex::Complex64;

use crate::error::{domain, Result};

/// Coefficients `c₀..c_{len−1}` of `num / den` by long division.
///
/// Requires `den[0] ≠ 0`. Missing trailing coefficients of either input are
/// treated as zero.
pub fn divide(num: &[Complex64], den: &[Complex64], len: usize) -> Result<Vec<Complex64>> {
    let lead = *den.first().ok_or_else(|| domain("empty denominator series"))?;
    if lead.norm() == 0.0 {
        return Err(domain("denominator series has zero constant term"));
    }
    let zero = Complex64::new(0.0, 0.0);
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = num.get(k).copied().unwrap_or(zero);
        for j in 1..=k.min(den.len().saturating_sub(1)) {
            acc -= den[j] * out[k - j];
        }
        out.push(acc / lead);
    }
    Ok(out)
}
