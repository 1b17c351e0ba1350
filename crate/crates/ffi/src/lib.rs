//! C ABI for `abeta-core`.
//!
//! Every function returns an [`AbetaStatus`]; results go through out
//! pointers. On failure a message is stored per thread and can be read with
//! [`abeta_last_error_message`]. Measures and coefficient sequences are
//! opaque heap handles released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use abeta_core::bounds::{Sharpness, Theorem};
use abeta_core::carath::{self, BetaParam, CoeffSeq, HerglotzMeasure, SampleConstraint};
use abeta_core::extremal::{self, ExtremalId};
use abeta_core::{functionals, radii, verify, Error};
use num_complex::Complex64;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbetaStatus {
    Ok = 0,
    Domain = 1,
    Length = 2,
    NoRoot = 3,
    Limit = 4,
    ConstraintInfeasible = 5,
    Precision = 6,
    NullPointer = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbetaSharpness {
    SharpClaimed = 0,
    SharpVerified = 1,
    AttainmentOpen = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbetaExtremal {
    Ftilde = 0,
    Ftilde1 = 1,
    Ftilde2 = 2,
    Ftilde3 = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbetaFunctional {
    /// `a_n a_{n+2} - mu a_{n+1}^2`
    Hankel = 0,
    /// `a_n^2 - a_{n+1}^2`
    T2n = 1,
    /// `1 - 2a_2^2 + 2a_2^2 a_3 - a_3^2`
    T3Toeplitz = 2,
    /// Hermitian `T_{3,1}`, real
    T31Hermitian = 3,
    /// `a_n a_m - a_{n+m-1}`
    Zalcman = 4,
    /// `a_{n+1}^N - a_n^N`
    CoeffDiff = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbetaTheoremKind {
    Coeff = 0,
    HankelMu = 1,
    H2 = 2,
    Zalcman23 = 3,
    Toeplitz2 = 4,
    Toeplitz3 = 5,
    T31Upper = 6,
    T31Lower = 7,
    CoeffDiff = 8,
    GrowthLower = 9,
    GrowthUpper = 10,
    ReFzLower = 11,
    ReFzUpper = 12,
}

/// A theorem and its side parameters; fields a theorem does not use are ignored.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct AbetaTheoremSpec {
    pub kind: AbetaTheoremKind,
    pub n: usize,
    pub mu: f64,
    pub power: u32,
    pub p: f64,
    pub r: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct AbetaRadius {
    pub radius: f64,
    pub residual: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub iterations: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct AbetaVerifyResult {
    pub max_observed: f64,
    pub bound: f64,
    pub attainment_gap: f64,
    pub violations: usize,
    pub sharp: AbetaSharpness,
}

/// Opaque atomic Herglotz measure.
pub struct AbetaMeasure(HerglotzMeasure);

/// Opaque coefficient sequence `a_2..a_M`.
pub struct AbetaCoeffSeq(CoeffSeq);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> AbetaStatus {
    match e {
        Error::Domain(_) => AbetaStatus::Domain,
        Error::Length { .. } => AbetaStatus::Length,
        Error::NoRoot { .. } => AbetaStatus::NoRoot,
        Error::Limit(_) => AbetaStatus::Limit,
        Error::ConstraintInfeasible { .. } => AbetaStatus::ConstraintInfeasible,
        Error::Precision(_) => AbetaStatus::Precision,
    }
}

enum Fail {
    Lib(Error),
    Null(&'static str),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard<F: FnOnce() -> Result<(), Fail>>(f: F) -> AbetaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AbetaStatus::Ok,
        Ok(Err(Fail::Lib(e))) => {
            let status = status_of(&e);
            set_error(e.to_string());
            status
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer passed for {what}"));
            AbetaStatus::NullPointer
        }
        Err(_) => {
            set_error("internal panic".into());
            AbetaStatus::Panic
        }
    }
}

fn non_null<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    // SAFETY: the caller promises `p` is null or points to a live `T`.
    unsafe { p.as_ref() }.ok_or(Fail::Null(what))
}

fn write<T>(out: *mut T, value: T, what: &'static str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null(what));
    }
    // SAFETY: non-null and, per the API contract, writable.
    unsafe { out.write(value) };
    Ok(())
}

fn sharp(s: Sharpness) -> AbetaSharpness {
    match s {
        Sharpness::SharpClaimed => AbetaSharpness::SharpClaimed,
        Sharpness::SharpVerified => AbetaSharpness::SharpVerified,
        Sharpness::AttainmentOpen => AbetaSharpness::AttainmentOpen,
    }
}

fn theorem(spec: &AbetaTheoremSpec) -> Theorem {
    let AbetaTheoremSpec { n, mu, power, p, r, .. } = *spec;
    match spec.kind {
        AbetaTheoremKind::Coeff => Theorem::Coeff { n },
        AbetaTheoremKind::HankelMu => Theorem::HankelMu { n, mu },
        AbetaTheoremKind::H2 => Theorem::H2 { n },
        AbetaTheoremKind::Zalcman23 => Theorem::Zalcman23,
        AbetaTheoremKind::Toeplitz2 => Theorem::Toeplitz2 { n },
        AbetaTheoremKind::Toeplitz3 => Theorem::Toeplitz3,
        AbetaTheoremKind::T31Upper => Theorem::T31Upper,
        AbetaTheoremKind::T31Lower => Theorem::T31Lower,
        AbetaTheoremKind::CoeffDiff => Theorem::CoeffDiff { n, power, p },
        AbetaTheoremKind::GrowthLower => Theorem::GrowthLower { r },
        AbetaTheoremKind::GrowthUpper => Theorem::GrowthUpper { r },
        AbetaTheoremKind::ReFzLower => Theorem::ReFzLower { r },
        AbetaTheoremKind::ReFzUpper => Theorem::ReFzUpper { r },
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn abeta_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a measure from `len` angles and weights (weights summing to 1).
///
/// # Safety
/// `thetas` and `weights` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_measure_new(
    thetas: *const f64,
    weights: *const f64,
    len: usize,
    out: *mut *mut AbetaMeasure,
) -> AbetaStatus {
    guard(|| {
        if len > 0 && (thetas.is_null() || weights.is_null()) {
            return Err(Fail::Null("thetas/weights"));
        }
        let pairs: Vec<(f64, f64)> = if len == 0 {
            Vec::new()
        } else {
            // SAFETY: both arrays hold `len` doubles per the contract above.
            let (t, w) = unsafe {
                (
                    std::slice::from_raw_parts(thetas, len),
                    std::slice::from_raw_parts(weights, len),
                )
            };
            t.iter().copied().zip(w.iter().copied()).collect()
        };
        let mu = HerglotzMeasure::new(pairs)?;
        write(out, Box::into_raw(Box::new(AbetaMeasure(mu))), "out")
    })
}

/// Samples a measure with `k` free atoms. With `constrain_p1` set, `p_1` is
/// forced to the real value `p1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_measure_sample(
    seed: u64,
    k: usize,
    constrain_p1: bool,
    p1: f64,
    out: *mut *mut AbetaMeasure,
) -> AbetaStatus {
    guard(|| {
        let c = if constrain_p1 {
            SampleConstraint::RealP1(p1)
        } else {
            SampleConstraint::None
        };
        let mu = carath::sample_measure(seed, k, c)?;
        write(out, Box::into_raw(Box::new(AbetaMeasure(mu))), "out")
    })
}

/// Measure generating one of the extremal functions.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_measure_extremal(
    id: AbetaExtremal,
    beta: f64,
    out: *mut *mut AbetaMeasure,
) -> AbetaStatus {
    guard(|| {
        let mu = extremal::extremal_measure(extremal_id(id), BetaParam::new(beta)?)?;
        write(out, Box::into_raw(Box::new(AbetaMeasure(mu))), "out")
    })
}

/// # Safety
/// `m` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abeta_measure_free(m: *mut AbetaMeasure) {
    if !m.is_null() {
        // SAFETY: created by Box::into_raw in this crate.
        drop(unsafe { Box::from_raw(m) });
    }
}

/// Number of atoms in the measure.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_measure_len(m: *const AbetaMeasure, out: *mut usize) -> AbetaStatus {
    guard(|| write(out, non_null(m, "measure")?.0.atoms().len(), "out"))
}

/// `f(z)` for the member of `A_beta` generated by `m`, `|z| < 1`.
///
/// # Safety
/// `m` must be a live handle; `out_re` and `out_im` writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_measure_eval_f(
    m: *const AbetaMeasure,
    beta: f64,
    z_re: f64,
    z_im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> AbetaStatus {
    guard(|| {
        let v = carath::eval_f(
            BetaParam::new(beta)?,
            &non_null(m, "measure")?.0,
            Complex64::new(z_re, z_im),
        )?;
        write(out_re, v.re, "out_re")?;
        write(out_im, v.im, "out_im")
    })
}

/// Coefficients `a_2..a_max_index` of the function generated by `m`.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_coeffs_from_measure(
    m: *const AbetaMeasure,
    beta: f64,
    max_index: usize,
    out: *mut *mut AbetaCoeffSeq,
) -> AbetaStatus {
    guard(|| {
        let beta = BetaParam::new(beta)?;
        if max_index < 2 {
            return Err(Error::Domain("max_index must be at least 2".into()).into());
        }
        let p = carath::carath_coeffs(&non_null(m, "measure")?.0, max_index - 1)?;
        let seq = carath::to_abeta_coeffs(beta, &p);
        write(out, Box::into_raw(Box::new(AbetaCoeffSeq(seq))), "out")
    })
}

fn extremal_id(id: AbetaExtremal) -> ExtremalId {
    match id {
        AbetaExtremal::Ftilde => ExtremalId::Ftilde,
        AbetaExtremal::Ftilde1 => ExtremalId::Ftilde1,
        AbetaExtremal::Ftilde2 => ExtremalId::Ftilde2,
        AbetaExtremal::Ftilde3 => ExtremalId::Ftilde3,
    }
}

/// Coefficients `a_2..a_max_index` of an extremal function.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_coeffs_extremal(
    id: AbetaExtremal,
    beta: f64,
    max_index: usize,
    out: *mut *mut AbetaCoeffSeq,
) -> AbetaStatus {
    guard(|| {
        let seq = extremal::extremal_coeffs(extremal_id(id), BetaParam::new(beta)?, max_index)?;
        write(out, Box::into_raw(Box::new(AbetaCoeffSeq(seq))), "out")
    })
}

/// # Safety
/// `s` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abeta_coeffs_free(s: *mut AbetaCoeffSeq) {
    if !s.is_null() {
        // SAFETY: created by Box::into_raw in this crate.
        drop(unsafe { Box::from_raw(s) });
    }
}

/// Largest stored coefficient index.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_coeffs_max_index(s: *const AbetaCoeffSeq, out: *mut usize) -> AbetaStatus {
    guard(|| write(out, non_null(s, "coeffs")?.0.max_index(), "out"))
}

/// `a_n`, with `a_1 = 1`.
///
/// # Safety
/// `s` must be a live handle; `out_re` and `out_im` writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_coeffs_get(
    s: *const AbetaCoeffSeq,
    n: usize,
    out_re: *mut f64,
    out_im: *mut f64,
) -> AbetaStatus {
    guard(|| {
        let v = non_null(s, "coeffs")?.0.a(n)?;
        write(out_re, v.re, "out_re")?;
        write(out_im, v.im, "out_im")
    })
}

/// Evaluates a coefficient functional. `n`, `m`, `mu` and `power` are read
/// only by the functionals that use them.
///
/// # Safety
/// `s` must be a live handle; `out_re` and `out_im` writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_functional(
    s: *const AbetaCoeffSeq,
    kind: AbetaFunctional,
    n: usize,
    m: usize,
    mu: f64,
    power: u32,
    out_re: *mut f64,
    out_im: *mut f64,
) -> AbetaStatus {
    guard(|| {
        let a = &non_null(s, "coeffs")?.0;
        let v = match kind {
            AbetaFunctional::Hankel => functionals::hankel2(a, n, mu)?,
            AbetaFunctional::T2n => functionals::hermitian_t2n(a, n)?,
            AbetaFunctional::T3Toeplitz => functionals::toeplitz3(a)?,
            AbetaFunctional::T31Hermitian => Complex64::new(functionals::hermitian_t31(a)?, 0.0),
            AbetaFunctional::Zalcman => functionals::zalcman(a, n, m)?,
            AbetaFunctional::CoeffDiff => functionals::coeff_diff_power(a, n, power)?,
        };
        write(out_re, v.re, "out_re")?;
        write(out_im, v.im, "out_im")
    })
}

/// Value of a bound at `beta` and its witness-checked sharpness.
///
/// # Safety
/// `out_value` and `out_sharp` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_bound(
    spec: AbetaTheoremSpec,
    beta: f64,
    out_value: *mut f64,
    out_sharp: *mut AbetaSharpness,
) -> AbetaStatus {
    guard(|| {
        let v = verify::certify(theorem(&spec), BetaParam::new(beta)?)?;
        write(out_value, v.value, "out_value")?;
        write(out_sharp, sharp(v.sharp), "out_sharp")
    })
}

/// `ftilde(z)` for `|z| <= 1`, `z != 1`, with an absolute error bound.
///
/// # Safety
/// The out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_ftilde(
    beta: f64,
    z_re: f64,
    z_im: f64,
    tol: f64,
    out_re: *mut f64,
    out_im: *mut f64,
    out_err: *mut f64,
) -> AbetaStatus {
    guard(|| {
        let v = extremal::ftilde_eval(BetaParam::new(beta)?, Complex64::new(z_re, z_im), tol)?;
        write(out_re, v.value.re, "out_re")?;
        write(out_im, v.value.im, "out_im")?;
        write(out_err, v.abs_error_bound, "out_err")
    })
}

fn radius_out(r: radii::RadiusResult) -> AbetaRadius {
    AbetaRadius {
        radius: r.radius,
        residual: r.residual,
        bracket_lo: r.bracket.0,
        bracket_hi: r.bracket.1,
        iterations: r.iterations,
    }
}

/// Bohr radius for `0 <= beta < 1`, `m >= 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_bohr_radius(beta: f64, m: u32, out: *mut AbetaRadius) -> AbetaStatus {
    guard(|| {
        let r = radii::bohr_radius(BetaParam::new(beta)?, m)?;
        write(out, radius_out(r), "out")
    })
}

/// Bohr-Rogosinski radius for `0 <= beta < 1`, `m >= 1`, `1 <= tail <= 64`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_rogosinski_radius(beta: f64, m: u32, tail: usize, out: *mut AbetaRadius) -> AbetaStatus {
    guard(|| {
        let r = radii::rogosinski_radius(BetaParam::new(beta)?, m, tail)?;
        write(out, radius_out(r), "out")
    })
}

/// Samples `n_samples` functions plus the extremal witnesses against a bound.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abeta_verify_bound(
    spec: AbetaTheoremSpec,
    beta: f64,
    n_samples: usize,
    seed: u64,
    out: *mut AbetaVerifyResult,
) -> AbetaStatus {
    guard(|| {
        let r = verify::verify_bound(theorem(&spec), BetaParam::new(beta)?, n_samples, seed)?;
        write(
            out,
            AbetaVerifyResult {
                max_observed: r.max_observed,
                bound: r.bound,
                attainment_gap: r.attainment_gap,
                violations: r.violations,
                sharp: sharp(r.sharp),
            },
            "out",
        )
    })
}
