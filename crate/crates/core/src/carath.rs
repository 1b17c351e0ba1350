//! Carathéodory-class data and its image in `A_β`.
//!
//! A function `p(z) = 1 + p₁z + p₂z² + …` with positive real part is realized
//! here as a finite mixture of Möbius kernels `(1 + e^{iθ}z)/(1 − e^{iθ}z)`,
//! i.e. an atomic Herglotz measure. Its coefficients are exact:
//! `pₙ = 2 Σₖ λₖ e^{inθₖ}`. A member `f` of `A_β` is tied to `p` through
//! `β f(z)/z + (1 − β) f'(z) = p(z)`, which on coefficients reads
//! `(n − (n − 1)β) aₙ = pₙ₋₁`.

use std::f64::consts::TAU;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, Error, Result};
use crate::extremal;

/// Weight-sum tolerance for a valid measure.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;
/// Eigenvalue floor used by [`psd_check`].
pub const PSD_EIG_TOL: f64 = 1e-10;
/// Retry cap for the constrained sampler.
pub const SAMPLER_RETRY_CAP: usize = 100;
/// Accuracy of the realized `p₁` under [`SampleConstraint::RealP1`].
pub const REAL_P1_TOL: f64 = 1e-9;

/// Filtration parameter `β ∈ [0, 1]`.
///
/// `β = 0` is the bounded-turning class `Re f' > 0`; `β = 1` is
/// `Re f(z)/z > 0`. Operations that degenerate at `β = 1` say so in their own
/// docs.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BetaParam(f64);

impl BetaParam {
    pub fn new(beta: f64) -> Result<Self> {
        if beta.is_finite() && (0.0..=1.0).contains(&beta) {
            Ok(Self(beta))
        } else {
            Err(domain(format!("beta must lie in [0, 1], got {beta}")))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// `n − (n − 1)β`, the factor relating `aₙ` to `pₙ₋₁`.
    #[inline]
    pub fn coeff_scale(self, n: usize) -> f64 {
        let n = n as f64;
        n - (n - 1.0) * self.0
    }

    /// Rejects `β = 1` for operations whose construction degenerates there.
    pub fn require_below_one(self, what: &str) -> Result<Self> {
        if self.0 < 1.0 {
            Ok(self)
        } else {
            Err(domain(format!("{what} requires beta < 1, got beta = 1")))
        }
    }
}

impl TryFrom<f64> for BetaParam {
    type Error = Error;

    fn try_from(beta: f64) -> Result<Self> {
        Self::new(beta)
    }
}

/// A point mass of a Herglotz measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    /// Angle in `[0, 2π)`.
    pub theta: f64,
    pub weight: f64,
}

/// A probability measure on the unit circle with finitely many atoms.
#[derive(Debug, Clone, PartialEq)]
pub struct HerglotzMeasure {
    atoms: Vec<Atom>,
}

impl HerglotzMeasure {
    /// Builds a measure from `(theta, weight)` pairs. Angles are reduced into
    /// `[0, 2π)`; weights must be nonnegative and sum to one within
    /// [`WEIGHT_SUM_TOL`].
    pub fn new(atoms: impl IntoIterator<Item = (f64, f64)>) -> Result<Self> {
        let atoms: Vec<Atom> = atoms
            .into_iter()
            .map(|(theta, weight)| Atom {
                theta: normalize_angle(theta),
                weight,
            })
            .collect();
        if atoms.is_empty() {
            return Err(domain("measure needs at least one atom"));
        }
        if let Some(a) = atoms
            .iter()
            .find(|a| !a.theta.is_finite() || !a.weight.is_finite() || a.weight < 0.0)
        {
            return Err(domain(format!(
                "atom ({}, {}) must have a finite angle and a finite nonnegative weight",
                a.theta, a.weight
            )));
        }
        let total: f64 = atoms.iter().map(|a| a.weight).sum();
        if (total - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(domain(format!("weights sum to {total}, expected 1")));
        }
        Ok(Self { atoms })
    }

    /// The kernel `(1 + z)/(1 − z)` rotated to `e^{iθ}`.
    pub fn point_mass(theta: f64) -> Self {
        Self {
            atoms: vec![Atom {
                theta: normalize_angle(theta),
                weight: 1.0,
            }],
        }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// `p(z) = Σₖ λₖ (1 + e^{iθₖ}z)/(1 − e^{iθₖ}z)` for `|z| < 1`.
    pub fn eval_p(&self, z: Complex64) -> Complex64 {
        self.atoms
            .iter()
            .map(|a| {
                let w = Complex64::from_polar(1.0, a.theta) * z;
                a.weight * (1.0 + w) / (1.0 - w)
            })
            .sum()
    }
}

fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Libera–Zlotkiewicz parameters `(p₁, x, z)` with `|p₁| ≤ 2`, `|x| ≤ 1`, `|z| ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiberaTriple {
    p1: Complex64,
    x: Complex64,
    z: Complex64,
}

impl LiberaTriple {
    pub fn new(p1: Complex64, x: Complex64, z: Complex64) -> Result<Self> {
        const SLACK: f64 = 1e-12;
        if !(p1.norm() <= 2.0 + SLACK) {
            return Err(domain(format!("|p1| must be at most 2, got {}", p1.norm())));
        }
        if !(x.norm() <= 1.0 + SLACK) || !(z.norm() <= 1.0 + SLACK) {
            return Err(domain("|x| and |z| must be at most 1"));
        }
        Ok(Self { p1, x, z })
    }

    pub fn p1(&self) -> Complex64 {
        self.p1
    }
    pub fn x(&self) -> Complex64 {
        self.x
    }
    pub fn z(&self) -> Complex64 {
        self.z
    }
}

/// Taylor coefficients `a₂, …, a_M` of a normalized `f ∈ A_β` (`a₁ = 1` implicit).
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffSeq {
    beta: BetaParam,
    coeffs: Vec<Complex64>,
}

impl CoeffSeq {
    /// `coeffs[0]` is `a₂`.
    pub fn new(beta: BetaParam, coeffs: Vec<Complex64>) -> Self {
        Self { beta, coeffs }
    }

    pub fn beta(&self) -> BetaParam {
        self.beta
    }

    /// Largest index `M` with `a_M` stored (1 for an empty sequence).
    pub fn max_index(&self) -> usize {
        self.coeffs.len() + 1
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `aₙ`, with `a₁ = 1`.
    pub fn a(&self, n: usize) -> Result<Complex64> {
        match n {
            0 => Err(domain("coefficient index starts at 1")),
            1 => Ok(Complex64::new(1.0, 0.0)),
            _ => self.coeffs.get(n - 2).copied().ok_or(Error::Length {
                needed: n,
                available: self.max_index(),
            }),
        }
    }

    /// Recovers `p₁, …, p_{M−1}` through `pₙ₋₁ = (n − (n − 1)β) aₙ`.
    pub fn to_carath(&self) -> Vec<Complex64> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a * self.beta.coeff_scale(i + 2))
            .collect()
    }
}

/// `p₁, …, p_M` of the measure: `pₙ = 2 Σₖ λₖ e^{inθₖ}`.
pub fn carath_coeffs(mu: &HerglotzMeasure, m: usize) -> Result<Vec<Complex64>> {
    if m == 0 {
        return Err(domain("M must be at least 1"));
    }
    let mut out = vec![Complex64::new(0.0, 0.0); m];
    for atom in &mu.atoms {
        for (k, slot) in out.iter_mut().enumerate() {
            let phase = Complex64::from_polar(1.0, (k + 1) as f64 * atom.theta);
            *slot += 2.0 * atom.weight * phase;
        }
    }
    Ok(out)
}

/// `(p₂, p₃)` from the Libera–Zlotkiewicz parametrization.
///
/// The expansion is stated for `p₁ = c ∈ [0, 2]`; a complex `p₁ = c e^{iφ}`
/// is handled by rotation, which multiplies `pₙ` by `e^{inφ}`.
pub fn libera_expand(t: &LiberaTriple) -> (Complex64, Complex64) {
    let LiberaTriple { p1, x, z } = *t;
    let c = p1.norm();
    let turn = if c > 0.0 { p1 / c } else { Complex64::new(1.0, 0.0) };
    let rest = 4.0 - c * c;
    let p2 = (c * c + x * rest) / 2.0;
    let p3 = (c * c * c + 2.0 * x * c * rest - x * x * c * rest + 2.0 * z * (1.0 - x.norm_sqr()) * rest) / 4.0;
    (p2 * turn * turn, p3 * turn * turn * turn)
}

/// Carathéodory–Toeplitz test: is the Hermitian Toeplitz matrix with diagonal
/// 2 and superdiagonals `p₁, …, p_M` positive semidefinite (eigenvalues
/// `≥ −1e−10`)?
pub fn psd_check(p: &[Complex64]) -> bool {
    if p.is_empty() || p.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return false;
    }
    let dim = p.len() + 1;
    let entry = |j: usize, k: usize| -> Complex64 {
        match k.cmp(&j) {
            std::cmp::Ordering::Equal => Complex64::new(2.0, 0.0),
            std::cmp::Ordering::Greater => p[k - j - 1],
            std::cmp::Ordering::Less => p[j - k - 1].conj(),
        }
    };
    let m = DMatrix::from_fn(dim, dim, entry);
    let eig = SymmetricEigen::new(m);
    eig.eigenvalues.iter().all(|&l| l >= -PSD_EIG_TOL)
}

/// `aₙ = pₙ₋₁ / (n − (n − 1)β)` for `n = 2, …, M` where `p` holds `p₁..p_{M−1}`.
///
/// The caller is responsible for `p` being Carathéodory data (see
/// [`psd_check`]); no check is made here.
pub fn to_abeta_coeffs(beta: BetaParam, p: &[Complex64]) -> CoeffSeq {
    let coeffs = p
        .iter()
        .enumerate()
        .map(|(i, pk)| pk / beta.coeff_scale(i + 2))
        .collect();
    CoeffSeq::new(beta, coeffs)
}

/// Optional restriction on sampled measures.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum SampleConstraint {
    #[default]
    None,
    /// `p₁` real and equal to the target in `[−2, 2]` (the class `A_β(p)`).
    RealP1(f64),
}

/// Draws a random atomic measure.
///
/// `K` free atoms get uniform angles and Dirichlet(1) weights. Under
/// [`SampleConstraint::RealP1`] the free part is mixed with a compensating
/// pair of atoms placed symmetrically about the direction of the residual
/// first moment, so that `p₁` lands on the target.
pub fn sample_measure(seed: u64, k: usize, constraint: SampleConstraint) -> Result<HerglotzMeasure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_measure_with(&mut rng, k, constraint)
}

/// As [`sample_measure`], drawing from a caller-owned generator.
pub fn sample_measure_with<R: Rng + ?Sized>(
    rng: &mut R,
    k: usize,
    constraint: SampleConstraint,
) -> Result<HerglotzMeasure> {
    if k == 0 {
        return Err(domain("atom count K must be at least 1"));
    }
    let target = match constraint {
        SampleConstraint::None => return Ok(free_atoms(rng, k)),
        SampleConstraint::RealP1(t) if t.is_finite() && (-2.0..=2.0).contains(&t) => t,
        SampleConstraint::RealP1(t) => return Err(domain(format!("real_p1 target must lie in [-2, 2], got {t}"))),
    };

    let mut last_reason = String::new();
    for _ in 0..SAMPLER_RETRY_CAP {
        let free = free_atoms(rng, k);
        match compensate(rng, &free, target) {
            Ok(mu) => return Ok(mu),
            Err(reason) => last_reason = reason,
        }
    }
    Err(Error::ConstraintInfeasible {
        retries: SAMPLER_RETRY_CAP,
        reason: last_reason,
    })
}

fn free_atoms<R: Rng + ?Sized>(rng: &mut R, k: usize) -> HerglotzMeasure {
    let mut atoms: Vec<Atom> = (0..k)
        .map(|_| {
            let theta = rng.gen_range(0.0..TAU);
            // Exp(1) draws normalize to a flat Dirichlet sample
            let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            Atom { theta, weight: -u.ln() }
        })
        .collect();
    let total: f64 = atoms.iter().map(|a| a.weight).sum();
    for a in &mut atoms {
        a.weight /= total;
    }
    HerglotzMeasure { atoms }
}

/// Mixes `(1 − w)·free + w·pair` so that the first moment equals `target/2`.
fn compensate<R: Rng + ?Sized>(
    rng: &mut R,
    free: &HerglotzMeasure,
    target: f64,
) -> std::result::Result<HerglotzMeasure, String> {
    let s: Complex64 = free
        .atoms
        .iter()
        .map(|a| a.weight * Complex64::from_polar(1.0, a.theta))
        .sum();
    let goal = Complex64::new(target / 2.0, 0.0);
    let d = goal - s;

    // feasible w satisfy |d + w s| <= w, an interval [w_min, 1]
    let a = 1.0 - s.norm_sqr();
    let b = (d * s.conj()).re;
    let c = d.norm_sqr();
    let disc = (b * b + a * c).max(0.0).sqrt();
    let w_min = if c == 0.0 {
        0.0
    } else if b <= 0.0 {
        c / (disc - b)
    } else if a > 0.0 {
        (b + disc) / a
    } else {
        return Err("free atoms leave no feasible mixing weight".into());
    };
    if !w_min.is_finite() || w_min > 1.0 + 1e-12 {
        return Err(format!("mixing weight {w_min} outside [0, 1]"));
    }
    let w_min = w_min.clamp(0.0, 1.0);
    let w = if w_min >= 1.0 {
        1.0
    } else {
        w_min + rng.gen_range(0.0..1.0) * (1.0 - w_min)
    };

    let atoms = if w == 0.0 {
        free.atoms.clone()
    } else {
        let moment = (goal - (1.0 - w) * s) / w;
        let radius = moment.norm();
        if radius > 1.0 + 1e-12 {
            return Err(format!("compensating moment {radius} exceeds 1"));
        }
        let centre = if radius > 0.0 { moment.arg() } else { 0.0 };
        let spread = radius.min(1.0).acos();
        let mut atoms: Vec<Atom> = free
            .atoms
            .iter()
            .map(|a| Atom {
                theta: a.theta,
                weight: a.weight * (1.0 - w),
            })
            .filter(|a| a.weight > 0.0)
            .collect();
        for theta in [centre + spread, centre - spread] {
            atoms.push(Atom {
                theta: normalize_angle(theta),
                weight: w / 2.0,
            });
        }
        atoms
    };

    let total: f64 = atoms.iter().map(|a| a.weight).sum();
    let mu = HerglotzMeasure::new(atoms.iter().map(|a| (a.theta, a.weight / total))).map_err(|e| e.to_string())?;
    let p1 = carath_coeffs(&mu, 1).map_err(|e| e.to_string())?[0];
    if p1.im.abs() > REAL_P1_TOL || (p1.re - target).abs() > REAL_P1_TOL {
        return Err(format!("realized p1 = {p1} misses target {target}"));
    }
    Ok(mu)
}

/// `f(z) = z ∫₀¹ p(t^{1−β} z) dt` for the function generated by `mu`.
///
/// Each kernel integrates to a rotated copy of `f̃`, so the value is
/// `Σₖ λₖ e^{−iθₖ} f̃(e^{iθₖ} z)`. At `β = 1` this is `z p(z)`.
pub fn eval_f(beta: BetaParam, mu: &HerglotzMeasure, z: Complex64) -> Result<Complex64> {
    if !(z.norm() < 1.0) {
        return Err(domain(format!("eval_f needs |z| < 1, got |z| = {}", z.norm())));
    }
    if beta.get() == 1.0 {
        return Ok(z * mu.eval_p(z));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for atom in &mu.atoms {
        let rot = Complex64::from_polar(1.0, atom.theta);
        let v = extremal::ftilde_eval(beta, rot * z, extremal::DEFAULT_TOL)?;
        acc += atom.weight * rot.conj() * v.value;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn beta_param_rejects_outside_unit_interval() {
        assert!(BetaParam::new(-0.01).is_err());
        assert!(BetaParam::new(1.0001).is_err());
        assert!(BetaParam::new(f64::NAN).is_err());
        assert!(BetaParam::new(0.0).is_ok());
        assert!(BetaParam::new(1.0).is_ok());
        assert!(BetaParam::new(1.0).unwrap().require_below_one("x").is_err());
    }

    #[test]
    fn measure_validation() {
        assert!(HerglotzMeasure::new([(0.0, 0.5), (1.0, 0.5)]).is_ok());
        assert!(HerglotzMeasure::new([(0.0, 0.5), (1.0, 0.4)]).is_err());
        assert!(HerglotzMeasure::new([(0.0, 1.5), (1.0, -0.5)]).is_err());
        assert!(HerglotzMeasure::new(Vec::<(f64, f64)>::new()).is_err());
        let mu = HerglotzMeasure::new([(-PI / 2.0, 1.0)]).unwrap();
        assert!((mu.atoms()[0].theta - 1.5 * PI).abs() < 1e-15);
    }

    #[test]
    fn carath_coeffs_examples() {
        let p = carath_coeffs(&HerglotzMeasure::point_mass(0.0), 3).unwrap();
        assert_eq!(p, vec![c(2.0, 0.0); 3]);

        let mu = HerglotzMeasure::new([(0.0, 0.5), (PI, 0.5)]).unwrap();
        let p = carath_coeffs(&mu, 2).unwrap();
        assert!(close(p[0], c(0.0, 0.0), 1e-15));
        assert!(close(p[1], c(2.0, 0.0), 1e-15));

        let p = carath_coeffs(&HerglotzMeasure::point_mass(PI / 2.0), 3).unwrap();
        assert!(close(p[0], c(0.0, 2.0), 1e-15));
        assert!(close(p[1], c(-2.0, 0.0), 1e-15));
        assert!(close(p[2], c(0.0, -2.0), 1e-15));

        assert!(carath_coeffs(&mu, 0).is_err());
    }

    #[test]
    fn libera_examples() {
        let any = c(0.3, -0.4);
        let t = LiberaTriple::new(c(2.0, 0.0), any, any).unwrap();
        let (p2, p3) = libera_expand(&t);
        assert!(close(p2, c(2.0, 0.0), 1e-15) && close(p3, c(2.0, 0.0), 1e-15));

        let t = LiberaTriple::new(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        let (p2, p3) = libera_expand(&t);
        assert!(close(p2, c(2.0, 0.0), 1e-15) && close(p3, c(0.0, 0.0), 1e-15));

        let t = LiberaTriple::new(c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        let (p2, p3) = libera_expand(&t);
        assert!(close(p2, c(0.0, 0.0), 1e-15) && close(p3, c(2.0, 0.0), 1e-15));

        assert!(LiberaTriple::new(c(2.1, 0.0), any, any).is_err());
        assert!(LiberaTriple::new(c(1.0, 0.0), c(1.0, 0.1), any).is_err());
    }

    #[test]
    fn psd_examples() {
        assert!(psd_check(&[c(2.0, 0.0); 3]));
        assert!(!psd_check(&[c(3.0, 0.0)]));
        // atoms at 0 and π with weight ½ each
        assert!(psd_check(&[c(0.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)]));
        // atoms at ±π/2 give (0, −2, 0)
        assert!(psd_check(&[c(0.0, 0.0), c(-2.0, 0.0), c(0.0, 0.0)]));
        // |p₂| ≤ 2 alone is not enough: p₁ = 2 forces p₂ = 2
        assert!(!psd_check(&[c(2.0, 0.0), c(0.0, 0.0)]));
        assert!(!psd_check(&[]));
    }

    #[test]
    fn to_abeta_examples() {
        let b0 = BetaParam::new(0.0).unwrap();
        let a = to_abeta_coeffs(b0, &[c(2.0, 0.0), c(2.0, 0.0)]);
        assert!(close(a.a(2).unwrap(), c(1.0, 0.0), 1e-15));
        assert!(close(a.a(3).unwrap(), c(2.0 / 3.0, 0.0), 1e-15));

        let b1 = BetaParam::new(1.0).unwrap();
        let a = to_abeta_coeffs(b1, &[c(2.0, 0.0), c(2.0, 0.0)]);
        assert_eq!(a.as_slice(), &[c(2.0, 0.0), c(2.0, 0.0)]);

        let bh = BetaParam::new(0.5).unwrap();
        let a = to_abeta_coeffs(bh, &[c(0.0, 2.0), c(-2.0, 0.0)]);
        assert!(close(a.a(2).unwrap(), c(0.0, 4.0 / 3.0), 1e-15));
        assert!(close(a.a(3).unwrap(), c(-1.0, 0.0), 1e-15));
        assert_eq!(a.a(1).unwrap(), c(1.0, 0.0));
        assert!(matches!(
            a.a(4),
            Err(Error::Length {
                needed: 4,
                available: 3
            })
        ));
    }

    #[test]
    fn sampler_examples() {
        let mu = sample_measure(42, 1, SampleConstraint::None).unwrap();
        let total: f64 = mu.atoms().iter().map(|a| a.weight).sum();
        assert_eq!(mu.atoms().len(), 1);
        assert!((total - 1.0).abs() <= WEIGHT_SUM_TOL);

        for seed in 0..20 {
            let mu = sample_measure(seed, 1, SampleConstraint::RealP1(2.0)).unwrap();
            let mass_near_zero: f64 = mu
                .atoms()
                .iter()
                .filter(|a| a.theta.min(TAU - a.theta) < 1e-6)
                .map(|a| a.weight)
                .sum();
            assert!((mass_near_zero - 1.0).abs() < 1e-9, "seed {seed}: {mu:?}");
        }

        let mu = sample_measure(7, 3, SampleConstraint::RealP1(0.5)).unwrap();
        let p1 = carath_coeffs(&mu, 1).unwrap()[0];
        assert!(p1.im.abs() <= 1e-9);
        assert!((p1.re - 0.5).abs() <= 1e-9);

        assert!(sample_measure(1, 0, SampleConstraint::None).is_err());
        assert!(sample_measure(1, 2, SampleConstraint::RealP1(2.5)).is_err());
    }

    #[test]
    fn sampler_is_deterministic() {
        let a = sample_measure(99, 4, SampleConstraint::RealP1(-1.3)).unwrap();
        let b = sample_measure(99, 4, SampleConstraint::RealP1(-1.3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn eval_f_examples() {
        let b = BetaParam::new(0.3).unwrap();
        let kernel = HerglotzMeasure::point_mass(0.0);
        let r = c(0.4, 0.0);
        let direct = extremal::ftilde_eval(b, r, 1e-14).unwrap().value;
        assert!(close(eval_f(b, &kernel, r).unwrap(), direct, 1e-12));

        let mu = sample_measure(3, 3, SampleConstraint::None).unwrap();
        assert_eq!(eval_f(b, &mu, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));

        let b0 = BetaParam::new(0.0).unwrap();
        let mu = HerglotzMeasure::new([(0.0, 0.5), (PI, 0.5)]).unwrap();
        let ft = |r: f64| -r - 2.0 * (1.0 - r).ln();
        let expect = 0.5 * ft(0.5) - 0.5 * ft(-0.5);
        assert!((eval_f(b0, &mu, c(0.5, 0.0)).unwrap() - expect).norm() < 1e-12);

        assert!(eval_f(b0, &mu, c(1.0, 0.0)).is_err());
    }

    #[test]
    fn eval_f_at_beta_one_is_z_times_p() {
        let b1 = BetaParam::new(1.0).unwrap();
        let mu = sample_measure(5, 3, SampleConstraint::None).unwrap();
        let z = c(0.3, -0.5);
        let expect = z * mu.eval_p(z);
        assert!(close(eval_f(b1, &mu, z).unwrap(), expect, 1e-15));
        // the rotated-kernel sum agrees with z·p(z) as β → 1
        let near = BetaParam::new(1.0 - 1e-9).unwrap();
        assert!(close(eval_f(near, &mu, z).unwrap(), expect, 1e-7));
    }
}
