//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if
//! any criterion fails.

mod common;

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use abeta_core::bounds::{
    coeff_bound, coeff_diff_bound, hermitian_t31_lower, hermitian_t31_upper, toeplitz2_bound, toeplitz3_abs_bound,
    Sharpness, Theorem,
};
use abeta_core::carath::{carath_coeffs, to_abeta_coeffs};
use abeta_core::extremal::{extremal_coeffs, ftilde_at_minus1, ftilde_quadrature, ftilde_series, ExtremalId};
use abeta_core::functionals::{coeff_diff_power, hermitian_t2n, hermitian_t31, toeplitz3, zalcman};
use abeta_core::radii::bohr_radius;
use abeta_core::verify::{
    ftilde_min_angle, registry, scan_zalcman_surface, verify_bound, verify_growth, verify_t31_lower_surface,
    DEFAULT_BETA_GRID, DEFAULT_GROWTH_RADII, VALIDITY_TOL,
};
use abeta_core::{BetaParam, HerglotzMeasure};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn beta(b: f64) -> BetaParam {
    BetaParam::new(b).expect("beta in [0, 1]")
}

fn nine_point_grid() -> Vec<f64> {
    (0..=8).map(|k| k as f64 / 8.0).collect()
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn table1() -> Outcome {
    const PUBLISHED: [(f64, f64); 7] = [
        (0.1, 0.267139),
        (0.2, 0.24766),
        (0.3, 0.22655),
        (0.5, 0.178366),
        (0.7, 0.119726),
        (0.8, 0.085113),
        (0.9, 0.0457777),
    ];
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut flagged = Vec::new();
    for (b, published) in PUBLISHED {
        let r = bohr_radius(beta(b), 1).map_err(|e| e.to_string())?.radius;
        let delta = r - published;
        worst = worst.max(delta.abs());
        if delta.abs() > 1e-4 {
            flagged.push(format!("beta {b}: computed {r:.7} published {published}"));
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let mut detail = format!("max |delta| = {worst:.2e}, {elapsed:.3} s");
    if !flagged.is_empty() {
        detail = format!("{detail}; discrepancies: {}", flagged.join("; "));
    }
    check(flagged.is_empty() && elapsed < 1.0, detail)
}

fn beta_zero_values() -> Outcome {
    let b = beta(0.0);
    let errs = [
        (toeplitz3_abs_bound(b) - 35.0 / 9.0).abs(),
        (hermitian_t31_upper(b) - 1.0).abs(),
        (hermitian_t31_lower(b) + 0.125).abs(),
    ];
    let worst = errs.iter().cloned().fold(0.0, f64::max);
    check(
        worst <= 1e-12,
        format!("T3 35/9, T31 in [-1/8, 1]; max error {worst:.1e}"),
    )
}

fn attainment() -> Outcome {
    let mut worst_coeff: f64 = 0.0;
    let mut worst_t: f64 = 0.0;
    let mut worst_j: f64 = 0.0;
    let mut worst_h: f64 = 0.0;
    let e = |x: abeta_core::Error| x.to_string();
    for b in nine_point_grid() {
        let bp = beta(b);
        let a = extremal_coeffs(ExtremalId::Ftilde, bp, 8).map_err(e)?;
        for n in 2..=8 {
            worst_coeff = worst_coeff.max((a.a(n).map_err(e)?.norm() - coeff_bound(bp, n).map_err(e)?).abs());
        }
        let a1 = extremal_coeffs(ExtremalId::Ftilde1, bp, 8).map_err(e)?;
        for n in 2..=6 {
            let gap = hermitian_t2n(&a1, n).map_err(e)?.norm() - toeplitz2_bound(bp, n).map_err(e)?;
            worst_t = worst_t.max(gap.abs());
        }
        worst_t = worst_t.max((toeplitz3(&a1).map_err(e)?.norm() - toeplitz3_abs_bound(bp)).abs());
        let a2 = extremal_coeffs(ExtremalId::Ftilde2, bp, 4).map_err(e)?;
        worst_j = worst_j.max((zalcman(&a2, 2, 3).map_err(e)?.norm() - 2.0 / (4.0 - 3.0 * b)).abs());
        let a3 = extremal_coeffs(ExtremalId::Ftilde3, bp, 4).map_err(e)?;
        worst_h = worst_h.max((hermitian_t31(&a3).map_err(e)? - hermitian_t31_lower(bp)).abs());
    }
    check(
        worst_coeff <= 1e-9 && worst_t <= 1e-9 && worst_j <= 1e-12 && worst_h <= 1e-9,
        format!(
            "9-point grid: coeff {worst_coeff:.1e}, T2,n (n=2..6) and T3 {worst_t:.1e}, J23 {worst_j:.1e}, T31 lower {worst_h:.1e}"
        ),
    )
}

fn validity_sweep() -> Outcome {
    const SAMPLES: usize = 10_000;
    let start = Instant::now();
    let theorems = registry();
    let mut violations = 0;
    let mut cells = 0;
    let mut failing = Vec::new();
    for (i, th) in theorems.iter().enumerate() {
        for (j, &b) in DEFAULT_BETA_GRID.iter().enumerate() {
            let seed = 1000 * i as u64 + j as u64;
            let report = verify_bound(*th, beta(b), SAMPLES, seed).map_err(|e| e.to_string())?;
            cells += 1;
            if report.violations > 0 {
                violations += report.violations;
                failing.push(format!("{} {:?} beta {b}", th.id(), th));
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let mut detail =
        format!("{cells} cells x {SAMPLES} samples, {violations} violations at tol {VALIDITY_TOL:.0e}, {elapsed:.1} s");
    if !failing.is_empty() {
        detail = format!("{detail}; {}", failing.join("; "));
    }
    check(violations == 0 && elapsed < 60.0, detail)
}

fn surfaces() -> Outcome {
    let mut worst_z: f64 = 0.0;
    for b in [0.0, 0.25, 0.5, 0.75] {
        let m = scan_zalcman_surface(beta(b), 400).map_err(|e| e.to_string())?;
        let err = (m.value - 2.0 / (4.0 - 3.0 * b)).abs().max(m.p.abs()).max(m.rho.abs());
        worst_z = worst_z.max(err);
    }
    let mut worst_t: f64 = 0.0;
    let mut monotone_failures = 0;
    for b in DEFAULT_BETA_GRID {
        let rep = verify_t31_lower_surface(beta(b)).map_err(|e| e.to_string())?;
        let p2 = ((2.0 * b * b - 8.0 * b + 7.0) / (2.0 - b * b)).sqrt();
        let err = (rep.argmin - p2)
            .abs()
            .max((rep.critical_point - p2).abs())
            .max((rep.min_value - hermitian_t31_lower(beta(b))).abs());
        worst_t = worst_t.max(err);
        monotone_failures += rep.monotone_failures;
    }
    check(
        worst_z <= 1e-6 && worst_t <= 1e-6 && monotone_failures == 0,
        format!("Zalcman max error {worst_z:.1e}; T31 critical point and minimum error {worst_t:.1e}, {monotone_failures} monotonicity failures"),
    )
}

fn coeff_diff_sharpness() -> Outcome {
    let e = |x: abeta_core::Error| x.to_string();
    let mut worst_collapse: f64 = 0.0;
    let mut worst_attain: f64 = 0.0;
    for b in nine_point_grid().into_iter().filter(|&b| b < 1.0) {
        let bp = beta(b);
        let a = extremal_coeffs(ExtremalId::Ftilde, bp, 6).map_err(e)?;
        for n in 2..=4 {
            for power in 1..=3u32 {
                let sigma = (n as f64 - (n as f64 - 1.0) * b).powi(power as i32);
                let mu = (n as f64 + 1.0 - n as f64 * b).powi(power as i32);
                let closed = 2f64.powi(power as i32) * (mu - sigma) / (sigma * mu);
                worst_collapse = worst_collapse.max((coeff_diff_bound(bp, n, power, 2.0).map_err(e)? - closed).abs());
                worst_attain = worst_attain.max((coeff_diff_power(&a, n, power).map_err(e)?.norm() - closed).abs());
            }
        }
    }
    let one = beta(1.0);
    let reflected = to_abeta_coeffs(one, &carath_coeffs(&HerglotzMeasure::point_mass(PI), 6).map_err(e)?);
    let mut worst_reflect: f64 = 0.0;
    for n in 2..=4 {
        for power in [1u32, 3] {
            let target = 2f64.powi(power as i32 + 1);
            worst_reflect = worst_reflect
                .max((coeff_diff_power(&reflected, n, power).map_err(e)?.norm() - target).abs())
                .max((coeff_diff_bound(one, n, power, -2.0).map_err(e)? - target).abs());
        }
    }
    check(
        worst_collapse <= 1e-12 && worst_attain <= 1e-12 && worst_reflect <= 1e-12,
        format!("p = 2 collapse {worst_collapse:.1e}, attained by f~ {worst_attain:.1e}; beta = 1, p = -2, f~(-z) {worst_reflect:.1e}"),
    )
}

fn growth() -> Outcome {
    let mut violations = 0;
    for (j, &b) in DEFAULT_BETA_GRID.iter().enumerate() {
        let rep = verify_growth(beta(b), 1000, 77 + j as u64, &DEFAULT_GROWTH_RADII).map_err(|e| e.to_string())?;
        violations += rep.violations;
    }
    let cell = 2.0 * PI / 720.0;
    let mut off_pi = Vec::new();
    for b in [0.0, 0.25, 0.5, 0.75] {
        for r in [0.3, 0.6, 0.9] {
            let theta = ftilde_min_angle(beta(b), r, 720).map_err(|e| e.to_string())?;
            if (theta - PI).abs() > cell {
                off_pi.push(format!("beta {b} r {r}: {theta}"));
            }
        }
    }
    check(
        violations == 0 && off_pi.is_empty(),
        format!(
            "1000 samples x 8 radii x 32 angles per beta: {violations} violations; minimum of |f~| off pi: {off_pi:?}"
        ),
    )
}

fn evaluators() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst_eval: f64 = 0.0;
    for _ in 0..50 {
        let b: f64 = rng.gen_range(0.0..1.0);
        let z = Complex64::from_polar(rng.gen_range(0.0..0.95), rng.gen_range(0.0..2.0 * PI));
        let s = ftilde_series(beta(b), z, 1e-12).map_err(|e| e.to_string())?.value;
        let q = ftilde_quadrature(beta(b), z, 1e-12).map_err(|e| e.to_string())?.value;
        worst_eval = worst_eval.max((s - q).norm());
    }
    let mut worst_euler: f64 = 0.0;
    for b in nine_point_grid() {
        let lib = ftilde_at_minus1(beta(b)).map_err(|e| e.to_string())?;
        worst_euler = worst_euler.max((lib - common::ftilde_minus1_euler(b)).abs());
    }
    check(
        worst_eval <= 1e-10 && worst_euler <= 1e-10,
        format!("series vs quadrature {worst_eval:.1e} on 50 points; f~(-1) vs Euler sum {worst_euler:.1e} on 9 betas"),
    )
}

fn hankel_gap() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for th in registry()
        .into_iter()
        .filter(|t| matches!(t, Theorem::HankelMu { .. } | Theorem::H2 { .. }))
    {
        let rep = verify_bound(th, beta(0.0), 10_000, 5).map_err(|e| e.to_string())?;
        let open = rep.sharp == Sharpness::AttainmentOpen;
        ok &= rep.violations == 0 && (!open || rep.note.is_some());
        if open {
            lines.push(format!("{:?} gap {:.3e}", th, rep.attainment_gap));
        }
    }
    let note = registry()
        .into_iter()
        .find(|t| matches!(t, Theorem::HankelMu { .. }))
        .and_then(|t| verify_bound(t, beta(0.0), 10, 5).ok())
        .and_then(|r| r.note)
        .unwrap_or("");
    ok &= !lines.is_empty() && !note.is_empty();
    check(ok, format!("beta 0: {}; note: {note}", lines.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("table 1 reproduction", table1),
        ("beta = 0 specializations", beta_zero_values),
        ("extremal attainment", attainment),
        ("validity sweep", validity_sweep),
        ("surface checks", surfaces),
        ("coefficient-difference sharpness", coeff_diff_sharpness),
        ("growth envelope", growth),
        ("evaluator cross-validation", evaluators),
        ("Hankel gap report", hankel_gap),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
