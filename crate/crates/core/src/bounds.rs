//! Closed-form right-hand sides of the coefficient, functional, and growth
//! estimates for `A_β`, each as a function of `β` and its side parameters.

use crate::carath::BetaParam;
use crate::error::{domain, Result};
use crate::extremal::{ftilde_eval, DEFAULT_TOL};
use num_complex::Complex64;

/// `β₀ = (10 − √10)/9`, the root of `9β² − 20β + 10` in `[0, 1]` where the
/// upper Hermitian-Toeplitz bound switches branch.
pub fn hermitian_break() -> f64 {
    (10.0 - 10f64.sqrt()) / 9.0
}

/// Whether a bound is known to be attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sharpness {
    /// Claimed sharp; no witness has been checked yet.
    SharpClaimed,
    /// An extremal witness reproduces the value to `1e−9`.
    SharpVerified,
    /// No witness attains the value.
    AttainmentOpen,
}

impl Sharpness {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::SharpClaimed => "SHARP_CLAIMED",
            Self::SharpVerified => "SHARP_VERIFIED",
            Self::AttainmentOpen => "ATTAINMENT_OPEN",
        }
    }
}

/// Which side of the functional the bound controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `functional ≤ bound` (for moduli and for the signed upper estimate).
    Upper,
    /// `functional ≥ bound`.
    Lower,
}

/// Every estimate the library knows, with its side parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Theorem {
    /// `|aₙ| ≤ 2/(n − (n − 1)β)`.
    Coeff { n: usize },
    /// `|aₙaₙ₊₂ − μaₙ₊₁²|`.
    HankelMu { n: usize, mu: f64 },
    /// `|H₂(n)|`.
    H2 { n: usize },
    /// `|J₂,₃|`.
    Zalcman23,
    /// `|T₂,ₙ|`.
    Toeplitz2 { n: usize },
    /// `|T₃(1)|`.
    Toeplitz3,
    /// `T₃,₁ ≤ …`.
    T31Upper,
    /// `T₃,₁ ≥ …`.
    T31Lower,
    /// `|aₙ₊₁ᴺ − aₙᴺ|` on `A_β(p)`.
    CoeffDiff { n: usize, power: u32, p: f64 },
    /// `|f(z)| ≥ −f̃(−r)`.
    GrowthLower { r: f64 },
    /// `|f(z)| ≤ f̃(r)`.
    GrowthUpper { r: f64 },
    /// `Re f(z)/z ≥ −f̃(−r)/r`.
    ReFzLower { r: f64 },
    /// `Re f(z)/z ≤ f̃(r)/r`.
    ReFzUpper { r: f64 },
}

impl Theorem {
    pub fn id(&self) -> &'static str {
        match self {
            Self::Coeff { .. } => "coeff",
            Self::HankelMu { .. } => "hankel-mu",
            Self::H2 { .. } => "h2",
            Self::Zalcman23 => "zalcman",
            Self::Toeplitz2 { .. } => "toeplitz2",
            Self::Toeplitz3 => "toeplitz3",
            Self::T31Upper => "t31-upper",
            Self::T31Lower => "t31-lower",
            Self::CoeffDiff { .. } => "coeff-diff",
            Self::GrowthLower { .. } => "growth-lower",
            Self::GrowthUpper { .. } => "growth-upper",
            Self::ReFzLower { .. } => "re-fz-lower",
            Self::ReFzUpper { .. } => "re-fz-upper",
        }
    }

    pub fn side(&self) -> Side {
        match self {
            Self::T31Lower | Self::GrowthLower { .. } | Self::ReFzLower { .. } => Side::Lower,
            _ => Side::Upper,
        }
    }

    /// The right-hand side at `beta`.
    pub fn bound(&self, beta: BetaParam) -> Result<f64> {
        match *self {
            Self::Coeff { n } => coeff_bound(beta, n),
            Self::HankelMu { n, mu } => hankel_mu_bound(beta, n, mu),
            Self::H2 { n } => hankel2_bound(beta, n),
            Self::Zalcman23 => Ok(zalcman_bound(beta)),
            Self::Toeplitz2 { n } => toeplitz2_bound(beta, n),
            Self::Toeplitz3 => Ok(toeplitz3_abs_bound(beta)),
            Self::T31Upper => Ok(hermitian_t31_upper(beta)),
            Self::T31Lower => Ok(hermitian_t31_lower(beta)),
            Self::CoeffDiff { n, power, p } => coeff_diff_bound(beta, n, power, p),
            Self::GrowthLower { r } => growth_envelope(beta, r).map(|e| e.0),
            Self::GrowthUpper { r } => growth_envelope(beta, r).map(|e| e.1),
            Self::ReFzLower { r } => re_fz_envelope(beta, r).map(|e| e.0),
            Self::ReFzUpper { r } => re_fz_envelope(beta, r).map(|e| e.1),
        }
    }

    /// Sharpness before any witness is checked: the Hankel-μ family is open,
    /// and the coefficient-difference bound is only claimed at `p = 2`
    /// (`β < 1`) or at `p = −2` with odd `N` (`β = 1`).
    pub fn claimed_sharpness(&self, beta: BetaParam) -> Sharpness {
        match *self {
            Self::HankelMu { .. } | Self::H2 { .. } => Sharpness::AttainmentOpen,
            Self::CoeffDiff { power, p, .. } => {
                let claimed = if beta.get() < 1.0 {
                    p == 2.0
                } else {
                    p == -2.0 && power % 2 == 1
                };
                if claimed {
                    Sharpness::SharpClaimed
                } else {
                    Sharpness::AttainmentOpen
                }
            }
            _ => Sharpness::SharpClaimed,
        }
    }
}

/// A bound evaluated at one `β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundValue {
    pub theorem: Theorem,
    pub beta: BetaParam,
    pub value: f64,
    pub sharp: Sharpness,
}

impl BoundValue {
    /// Evaluates the bound with its claimed sharpness; see
    /// [`crate::verify::certify`] for witness-checked status.
    pub fn evaluate(theorem: Theorem, beta: BetaParam) -> Result<Self> {
        Ok(Self {
            theorem,
            beta,
            value: theorem.bound(beta)?,
            sharp: theorem.claimed_sharpness(beta),
        })
    }
}

fn require_n(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        Err(domain(format!("{what} needs n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

/// `2/(n − (n − 1)β)`, `n ≥ 2`.
pub fn coeff_bound(beta: BetaParam, n: usize) -> Result<f64> {
    require_n(n, 2, "coeff_bound")?;
    Ok(2.0 / beta.coeff_scale(n))
}

/// `4/((n − (n−1)β)(n + 2 − (n+1)β)) + 4μ/(n + 1 − nβ)²`.
pub fn hankel_mu_bound(beta: BetaParam, n: usize, mu: f64) -> Result<f64> {
    require_n(n, 1, "hankel_mu_bound")?;
    if !(mu >= 0.0) || !mu.is_finite() {
        return Err(domain(format!("hankel_mu_bound needs a finite mu >= 0, got {mu}")));
    }
    let s0 = beta.coeff_scale(n);
    let s1 = beta.coeff_scale(n + 1);
    let s2 = beta.coeff_scale(n + 2);
    Ok(4.0 / (s0 * s2) + 4.0 * mu / (s1 * s1))
}

/// Closed form of `hankel_mu_bound` at `μ = 1`:
/// `4((2n² − 1)β² − (4n² + 4n − 2)β + 2n² + 4n + 1) / ((n − (n−1)β)(n + 2 − (n+1)β)(n + 1 − nβ)²)`.
pub fn hankel2_bound(beta: BetaParam, n: usize) -> Result<f64> {
    require_n(n, 1, "hankel2_bound")?;
    let b = beta.get();
    let nf = n as f64;
    let num =
        4.0 * ((2.0 * nf * nf - 1.0) * b * b - (4.0 * nf * nf + 4.0 * nf - 2.0) * b + 2.0 * nf * nf + 4.0 * nf + 1.0);
    let s1 = beta.coeff_scale(n + 1);
    Ok(num / (beta.coeff_scale(n) * beta.coeff_scale(n + 2) * s1 * s1))
}

/// `2/(4 − 3β)`.
pub fn zalcman_bound(beta: BetaParam) -> f64 {
    2.0 / (4.0 - 3.0 * beta.get())
}

/// `4(1/(n − (n−1)β)² + 1/(n + 1 − nβ)²)`, `n ≥ 1`.
pub fn toeplitz2_bound(beta: BetaParam, n: usize) -> Result<f64> {
    require_n(n, 1, "toeplitz2_bound")?;
    let s0 = beta.coeff_scale(n);
    let s1 = beta.coeff_scale(n + 1);
    Ok(4.0 * (1.0 / (s0 * s0) + 1.0 / (s1 * s1)))
}

/// `(4β⁴ − 28β³ + 101β² − 196β + 140)/((3 − 2β)²(β − 2)²)`.
pub fn toeplitz3_abs_bound(beta: BetaParam) -> f64 {
    let b = beta.get();
    let num = (((4.0 * b - 28.0) * b + 101.0) * b - 196.0) * b + 140.0;
    let d1 = 3.0 - 2.0 * b;
    let d2 = b - 2.0;
    num / (d1 * d1 * d2 * d2)
}

/// `1` for `β ≤ β₀`, else `(4β⁴ − 28β³ + 37β² − 4β − 4)/((3 − 2β)²(2 − β)²)`.
pub fn hermitian_t31_upper(beta: BetaParam) -> f64 {
    let b = beta.get();
    if b <= hermitian_break() {
        return 1.0;
    }
    let num = (((4.0 * b - 28.0) * b + 37.0) * b - 4.0) * b - 4.0;
    let d1 = 3.0 - 2.0 * b;
    let d2 = 2.0 - b;
    num / (d1 * d1 * d2 * d2)
}

/// `1 − (4β − 9)/(β⁴ − 4β³ + 2β² + 8β − 8)`. The denominator stays in
/// `[−8, −1]` on `[0, 1]`.
pub fn hermitian_t31_lower(beta: BetaParam) -> f64 {
    let b = beta.get();
    let den = (((b - 4.0) * b + 2.0) * b + 8.0) * b - 8.0;
    1.0 - (4.0 * b - 9.0) / den
}

/// Bound on `|aₙ₊₁ᴺ − aₙᴺ|` over `A_β(p)`, `p ∈ [−2, 2]`, `n ≥ 2`.
///
/// With `σ = (n − (n−1)β)ᴺ` and `μ = (n + 1 − nβ)ᴺ`:
/// for `β < 1`,
/// `2(σⁿ − μⁿ)(2ᴺ⁻¹σ² + 2ᴺ⁻¹μ² − σμpᴺ)/((σ − μ)σμⁿ⁺¹) + σⁿ|2ᴺμ − σpᴺ|/(σμⁿ⁺¹)`;
/// for `β = 1`, `2ᴺ√(2 − 2¹⁻ᴺpᴺ)/σ`.
pub fn coeff_diff_bound(beta: BetaParam, n: usize, power: u32, p: f64) -> Result<f64> {
    require_n(n, 2, "coeff_diff_bound")?;
    if power == 0 {
        return Err(domain("coeff_diff_bound needs N >= 1"));
    }
    if !(-2.0..=2.0).contains(&p) {
        return Err(domain(format!("coeff_diff_bound needs p in [-2, 2], got {p}")));
    }
    let exp = power as i32;
    let sigma = beta.coeff_scale(n).powi(exp);
    let two_n = 2f64.powi(exp);
    let p_n = p.powi(exp);

    if beta.get() == 1.0 {
        let radicand = 2.0 - 2.0 * p_n / two_n;
        if radicand < -1e-12 {
            return Err(domain(format!("negative radicand {radicand} in coeff_diff_bound")));
        }
        return Ok(two_n * radicand.max(0.0).sqrt() / sigma);
    }

    let mu = beta.coeff_scale(n + 1).powi(exp);
    // (σⁿ − μⁿ)/(σ − μ) summed termwise to avoid cancellation as β → 1
    let geometric: f64 = (0..n).map(|k| sigma.powi(k as i32) * mu.powi((n - 1 - k) as i32)).sum();
    let mu_pow = mu.powi(n as i32 + 1);
    let half = two_n / 2.0;
    let first = 2.0 * geometric * (half * sigma * sigma + half * mu * mu - sigma * mu * p_n) / (sigma * mu_pow);
    let second = sigma.powi(n as i32) * (two_n * mu - sigma * p_n).abs() / (sigma * mu_pow);
    Ok(first + second)
}

/// `(−f̃(−r), f̃(r))`, the sharp envelope of `|f(z)|` on `|z| = r`.
pub fn growth_envelope(beta: BetaParam, r: f64) -> Result<(f64, f64)> {
    if !(0.0..1.0).contains(&r) {
        return Err(domain(format!("growth_envelope needs r in [0, 1), got {r}")));
    }
    let upper = ftilde_eval(beta, Complex64::new(r, 0.0), DEFAULT_TOL)?.value.re;
    let lower = -ftilde_eval(beta, Complex64::new(-r, 0.0), DEFAULT_TOL)?.value.re;
    Ok((lower, upper))
}

/// `(−f̃(−r)/r, f̃(r)/r)`, the envelope of `Re f(z)/z` on `|z| = r`.
pub fn re_fz_envelope(beta: BetaParam, r: f64) -> Result<(f64, f64)> {
    if !(r > 0.0 && r < 1.0) {
        return Err(domain(format!("re_fz_envelope needs r in (0, 1), got {r}")));
    }
    let (lo, hi) = growth_envelope(beta, r)?;
    Ok((lo / r, hi / r))
}
