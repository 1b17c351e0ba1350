//! Randomized invariants of the measure sampler, the coefficient map and
//! the estimates in the registry.

use abeta_core::bounds::Side;
use abeta_core::carath::{
    carath_coeffs, libera_expand, psd_check, sample_measure, to_abeta_coeffs, LiberaTriple, SampleConstraint,
};
use abeta_core::extremal::{ftilde_eval, DEFAULT_TOL};
use abeta_core::functionals::{hermitian_t31, zalcman};
use abeta_core::verify::{observe, registry};
use abeta_core::{BetaParam, HerglotzMeasure};
use num_complex::Complex64;
use proptest::prelude::*;

fn unit_disk() -> impl Strategy<Value = Complex64> {
    (0.0..=1.0f64, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn rotate(mu: &HerglotzMeasure, phi: f64) -> HerglotzMeasure {
    HerglotzMeasure::new(mu.atoms().iter().map(|a| (a.theta + phi, a.weight))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sampled_sequences_are_positive(seed in any::<u64>(), k in 1usize..=4) {
        let mu = sample_measure(seed, k, SampleConstraint::None).unwrap();
        let p = carath_coeffs(&mu, 6).unwrap();
        prop_assert!(psd_check(&p));
        prop_assert!(p.iter().all(|c| c.norm() <= 2.0 + 1e-12));
    }

    #[test]
    fn real_p1_constraint_is_met(seed in any::<u64>(), k in 2usize..=4, t in -2.0..=2.0f64) {
        let mu = sample_measure(seed, k, SampleConstraint::RealP1(t)).unwrap();
        let p1 = carath_coeffs(&mu, 1).unwrap()[0];
        prop_assert!((p1.re - t).abs() <= 1e-9 && p1.im.abs() <= 1e-9, "p1 = {p1}, target {t}");
        let w: f64 = mu.atoms().iter().map(|a| a.weight).sum();
        prop_assert!((w - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn libera_output_is_positive(t in unit_disk(), x in unit_disk(), z in unit_disk()) {
        let p1 = 2.0 * t;
        let (p2, p3) = libera_expand(&LiberaTriple::new(p1, x, z).unwrap());
        prop_assert!(psd_check(&[p1, p2, p3]));
    }

    #[test]
    fn libera_expansion_commutes_with_rotation(c in 0.0..=2.0f64, phi in 0.0..std::f64::consts::TAU, x in unit_disk(), z in unit_disk()) {
        let turn = Complex64::from_polar(1.0, phi);
        let (q2, q3) = libera_expand(&LiberaTriple::new(Complex64::new(c, 0.0), x, z).unwrap());
        let (p2, p3) = libera_expand(&LiberaTriple::new(c * turn, x, z).unwrap());
        prop_assert!((p2 - q2 * turn * turn).norm() < 1e-12);
        prop_assert!((p3 - q3 * turn * turn * turn).norm() < 1e-12);
    }

    #[test]
    fn rotation_leaves_moduli_alone(seed in any::<u64>(), k in 1usize..=4, phi in 0.0..std::f64::consts::TAU, b in 0.0..=1.0f64) {
        let beta = BetaParam::new(b).unwrap();
        let mu = sample_measure(seed, k, SampleConstraint::None).unwrap();
        let a = to_abeta_coeffs(beta, &carath_coeffs(&mu, 5).unwrap());
        let ar = to_abeta_coeffs(beta, &carath_coeffs(&rotate(&mu, phi), 5).unwrap());
        for n in 2..=6 {
            prop_assert!((a.a(n).unwrap().norm() - ar.a(n).unwrap().norm()).abs() < 1e-12);
        }
        prop_assert!((zalcman(&a, 2, 3).unwrap().norm() - zalcman(&ar, 2, 3).unwrap().norm()).abs() < 1e-12);
        prop_assert!((hermitian_t31(&a).unwrap() - hermitian_t31(&ar).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn registry_estimates_hold(seed in any::<u64>(), k in 1usize..=4, b in 0.0..=1.0f64) {
        let beta = BetaParam::new(b).unwrap();
        for th in registry() {
            let constraint = match th {
                abeta_core::bounds::Theorem::CoeffDiff { p, .. } => SampleConstraint::RealP1(p),
                _ => SampleConstraint::None,
            };
            let k = if matches!(constraint, SampleConstraint::RealP1(_)) { k.max(2) } else { k };
            let mu = sample_measure(seed, k, constraint).unwrap();
            let v = observe(&th, beta, &mu).unwrap();
            let bound = th.bound(beta).unwrap();
            match th.side() {
                Side::Upper => prop_assert!(v <= bound + 1e-9, "{} at beta {b}: {v} > {bound}", th.id()),
                Side::Lower => prop_assert!(v >= bound - 1e-9, "{} at beta {b}: {v} < {bound}", th.id()),
            }
        }
    }

    #[test]
    fn ftilde_is_real_on_real_axis_and_conjugate_symmetric(b in 0.0..=1.0f64, z in unit_disk()) {
        let beta = BetaParam::new(b).unwrap();
        let z = z * 0.98;
        let w = ftilde_eval(beta, z, DEFAULT_TOL).unwrap().value;
        let wc = ftilde_eval(beta, z.conj(), DEFAULT_TOL).unwrap().value;
        prop_assert!((w.conj() - wc).norm() < 1e-10);
        let x = ftilde_eval(beta, Complex64::new(z.re, 0.0), DEFAULT_TOL).unwrap().value;
        prop_assert!(x.im.abs() < 1e-12);
    }
}
