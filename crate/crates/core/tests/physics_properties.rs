//! Structural and physical invariants of the model, the steady state and the
//! correlation measures over random parameter draws.

mod support;

use cavmag_core::measures::{
    log_negativity, log_negativity_one_vs_two, min_residual_contangle, reduce, reduce_positions, residual_contangle,
    steady_state_covariance, symplectic_eigenvalues, symplectic_form, ModeId, PartialTransposeMask, MONOGAMY_TOL,
};
use cavmag_core::model::{diffusion_matrix, drift_matrix, noise_moments};
use cavmag_core::numerics::{eig_general, integrate_lyapunov_ode, symmetric_eigenvalues, Matrix};
use cavmag_core::steady_state::lyapunov_residual;
use cavmag_core::{full_report, solve_lyapunov, stability, PhysicalParams};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{arb_params, cavity_swap, random_params, MHZ};

#[test]
fn solver_agrees_with_ode_oracle_on_100_configs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..100 {
        let p = random_params(&mut rng);
        let m = drift_matrix(&p).unwrap();
        let d = diffusion_matrix(&p).unwrap();
        let v = solve_lyapunov(&m, &d).unwrap();
        let res = lyapunov_residual(m.matrix(), v.matrix(), d.matrix());
        assert!(res <= 1e-9 * d.matrix().norm_inf(), "draw {i}: residual {res:e}");
        let kmin = p.kappa_1.min(p.kappa_2).min(p.kappa_m);
        let ode = integrate_lyapunov_ode(m.matrix(), d.matrix(), 25.0 / kmin, 0.05 / m.matrix().norm_inf()).unwrap();
        let diff = ode.max_abs_diff(v.matrix());
        assert!(diff <= 1e-8, "draw {i}: solver vs ODE {diff:e}");
    }
}

#[test]
fn defaults_agree_with_ode_oracle() {
    let p = PhysicalParams::default();
    let m = drift_matrix(&p).unwrap();
    let d = diffusion_matrix(&p).unwrap();
    let v = solve_lyapunov(&m, &d).unwrap();
    let ode = integrate_lyapunov_ode(m.matrix(), d.matrix(), 40.0 / p.kappa_m, 0.05 / m.matrix().norm_inf()).unwrap();
    assert!(ode.max_abs_diff(v.matrix()) <= 1e-8);
}

#[test]
fn passivity_over_1000_draws() {
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    for _ in 0..1000 {
        let p = random_params(&mut rng);
        let m = drift_matrix(&p).unwrap();
        let rep = stability(&m).unwrap();
        let kmin = p.kappa_1.min(p.kappa_2).min(p.kappa_m);
        assert!(rep.stable);
        assert!(
            rep.max_real_part <= -kmin + 1e-9 * m.matrix().norm_inf(),
            "{} vs {}",
            rep.max_real_part,
            -kmin
        );
    }
}

#[test]
fn drift_splits_into_decay_and_hamiltonian_part() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let omega = symplectic_form(3);
    for _ in 0..100 {
        let p = random_params(&mut rng);
        let m = drift_matrix(&p).unwrap().into_matrix();
        let decay = Matrix::from_diagonal(&[p.kappa_m, p.kappa_m, p.kappa_1, p.kappa_1, p.kappa_2, p.kappa_2]);
        let a = &m + &decay;
        // A = Ω·H with H = −Ω·A symmetric
        let h = (&omega * &a).scale(-1.0);
        assert!(h.is_symmetric(0.0), "{h:?}");
        assert_eq!(&omega * &h, a);
    }
}

#[test]
fn cavity_swap_permutes_model_and_state() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let perm = cavity_swap();
    for _ in 0..50 {
        let p = random_params(&mut rng);
        let q = p.swapped_cavities();
        let conj = |x: &Matrix| &(&perm * x) * &perm.transpose();
        let (m, ms) = (drift_matrix(&p).unwrap(), drift_matrix(&q).unwrap());
        let (d, ds) = (diffusion_matrix(&p).unwrap(), diffusion_matrix(&q).unwrap());
        assert_eq!(conj(m.matrix()), *ms.matrix());
        assert_eq!(conj(d.matrix()), *ds.matrix());
        let v = steady_state_covariance(&p).unwrap();
        let vs = steady_state_covariance(&q).unwrap();
        assert!(conj(v.matrix()).max_abs_diff(vs.matrix()) < 1e-10 * v.matrix().max_abs().max(1.0));
        let rep = full_report(&p).unwrap().measures.unwrap();
        let reps = full_report(&q).unwrap().measures.unwrap();
        let a = rep.swap_cavities();
        let pairs = [
            (a.e_n.c1c2, reps.e_n.c1c2),
            (a.e_n.mc1, reps.e_n.mc1),
            (a.e_n.mc2, reps.e_n.mc2),
            (a.e_n_one_vs_two.m, reps.e_n_one_vs_two.m),
            (a.e_n_one_vs_two.c1, reps.e_n_one_vs_two.c1),
            (a.e_n_one_vs_two.c2, reps.e_n_one_vs_two.c2),
            (a.r_tau_min, reps.r_tau_min),
            (a.steering.c1_c2, reps.steering.c1_c2),
            (a.steering.c2_c1, reps.steering.c2_c1),
            (a.steering.m_c1, reps.steering.m_c1),
            (a.steering.c2_m, reps.steering.c2_m),
        ];
        for (x, y) in pairs {
            assert!((x - y).abs() < 1e-10, "{x} vs {y}");
        }
    }
}

#[test]
fn squeezing_moments_saturate_bound() {
    for i in 0..=3000 {
        let r = i as f64 / 1000.0;
        let nm = noise_moments(r, 1.0, 0.0).unwrap();
        let lhs = nm.big_m * nm.big_m;
        let rhs = nm.big_n * (nm.big_n + 1.0);
        assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(f64::MIN_POSITIVE), "r={r}");
    }
}

#[test]
fn magnon_occupation_monotone() {
    let w = 2.0 * std::f64::consts::PI * 10e9;
    let mut last = 0.0;
    for i in 1..200 {
        let n = noise_moments(0.0, w, i as f64 * 0.02).unwrap().n_m;
        assert!(n > last);
        last = n;
    }
    let mut last = f64::INFINITY;
    for i in 1..200 {
        let n = noise_moments(0.0, w * i as f64 / 50.0, 0.5).unwrap().n_m;
        assert!(n < last);
        last = n;
    }
}

#[test]
fn decoupled_cavities_keep_bath_entanglement_only() {
    for r in [0.1, 0.4, 0.9] {
        let p = PhysicalParams {
            gamma_1: 0.0,
            gamma_2: 0.0,
            kappa_2: 2.0 * PhysicalParams::default().kappa_1,
            r,
            ..Default::default()
        };
        let rep = full_report(&p).unwrap();
        let m = rep.measures.unwrap();
        assert_eq!(m.e_n.mc1, 0.0);
        assert_eq!(m.e_n.mc2, 0.0);
        assert_eq!(
            m.steering.m_c1 + m.steering.c1_m + m.steering.m_c2 + m.steering.c2_m,
            0.0
        );
        let nm = noise_moments(r, p.omega_m, p.temperature).unwrap();
        let c = 2.0 * (p.kappa_1 * p.kappa_2).sqrt() / (p.kappa_1 + p.kappa_2);
        let eta = (2.0 * nm.big_n + 1.0) / 2.0 - nm.big_m * c;
        let want = (-(2.0 * eta).ln()).max(0.0);
        assert!((m.e_n.c1c2 - want).abs() < 1e-10, "r={r}: {} vs {want}", m.e_n.c1c2);
        let dec = stability(&drift_matrix(&p).unwrap()).unwrap();
        assert!(dec.stable);
    }
}

#[test]
fn two_point_r_sweep_endpoints() {
    let zero = full_report(&PhysicalParams {
        r: 0.0,
        ..Default::default()
    })
    .unwrap()
    .measures
    .unwrap();
    assert_eq!([zero.e_n.c1c2, zero.e_n.mc1, zero.e_n.mc2], [0.0; 3]);
    assert_eq!(zero.r_tau_min, 0.0);
    let on = full_report(&PhysicalParams::default()).unwrap().measures.unwrap();
    assert!(on.e_n.c1c2 > 0.0);
}

fn sym_psd_min(a: &Matrix) -> f64 {
    symmetric_eigenvalues(a).unwrap()[0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn diffusion_is_psd(p in arb_params()) {
        let d = diffusion_matrix(&p).unwrap().into_matrix();
        prop_assert!(d.is_symmetric(0.0));
        prop_assert!(sym_psd_min(&d) >= -1e-10 * d.norm_inf());
    }

    #[test]
    fn bath_is_a_legal_quantum_state(p in arb_params()) {
        // D + iΩK ≥ 0, checked through the real embedding [[D, −ΩK], [ΩK, D]]
        let d = diffusion_matrix(&p).unwrap().into_matrix();
        let k = Matrix::from_diagonal(&[p.kappa_m, p.kappa_m, p.kappa_1, p.kappa_1, p.kappa_2, p.kappa_2]);
        let b = &symplectic_form(3) * &k;
        let mut big = Matrix::zeros(12, 12);
        for i in 0..6 {
            for j in 0..6 {
                big[(i, j)] = d[(i, j)];
                big[(i + 6, j + 6)] = d[(i, j)];
                big[(i, j + 6)] = -b[(i, j)];
                big[(i + 6, j)] = b[(i, j)];
            }
        }
        prop_assert!(sym_psd_min(&big) >= -1e-10 * d.norm_inf());
    }

    #[test]
    fn steady_state_is_physical_and_monogamous(p in arb_params()) {
        let v = steady_state_covariance(&p).unwrap();
        let nu = symplectic_eigenvalues(v.matrix()).unwrap();
        prop_assert!(nu[0] >= 0.5 - 1e-9, "ν⁻ = {}", nu[0]);
        for focus in ModeId::ALL {
            let r = residual_contangle(&v, focus).unwrap();
            prop_assert!(r >= -MONOGAMY_TOL, "{focus:?}: {r:e}");
            prop_assert!(log_negativity_one_vs_two(&v, focus).unwrap() >= 0.0);
        }
        prop_assert!(min_residual_contangle(&v).unwrap() >= 0.0);
    }

    #[test]
    fn transposed_spectra_are_imaginary(p in arb_params()) {
        let v = steady_state_covariance(&p).unwrap();
        let scale = v.matrix().norm_inf();
        for pos in 0..3 {
            let mask = PartialTransposeMask::flip(3, pos).unwrap();
            let vt = mask.apply(v.matrix()).unwrap();
            let spec = eig_general(&(&symplectic_form(3) * &vt)).unwrap();
            prop_assert!(spec.max_abs_real() <= 1e-9 * scale);
        }
    }

    #[test]
    fn steering_implies_entanglement(p in arb_params()) {
        let m = full_report(&p).unwrap().measures.unwrap();
        use ModeId::*;
        for (a, b) in [(Cavity1, Cavity2), (Magnon, Cavity1), (Magnon, Cavity2)] {
            let z = m.steering.get(a, b).unwrap().max(m.steering.get(b, a).unwrap());
            if z > 0.0 {
                prop_assert!(m.e_n.get(a, b).unwrap() > 0.0);
            }
        }
    }

    #[test]
    fn no_squeezing_no_correlations(p in arb_params()) {
        let p = PhysicalParams { r: 0.0, ..p };
        let m = full_report(&p).unwrap().measures.unwrap();
        prop_assert_eq!(m.r_tau_min, 0.0);
        prop_assert_eq!([m.e_n.c1c2, m.e_n.mc1, m.e_n.mc2], [0.0; 3]);
    }

    #[test]
    fn reduction_composes(p in arb_params()) {
        use ModeId::*;
        let v = steady_state_covariance(&p).unwrap();
        let two = reduce(&v, &[Cavity2, Magnon]).unwrap();
        let one = reduce_positions(&two, &[1]).unwrap();
        prop_assert_eq!(one, reduce(&v, &[Magnon]).unwrap());
        let swapped = reduce_positions(&two, &[1, 0]).unwrap();
        prop_assert_eq!(swapped, reduce(&v, &[Magnon, Cavity2]).unwrap());
        let e = log_negativity(&reduce(&v, &[Cavity1, Cavity2]).unwrap()).unwrap();
        prop_assert!(e >= 0.0);
    }
}

#[test]
fn decoupled_spectrum_formula() {
    let p = PhysicalParams {
        gamma_1: 0.0,
        gamma_2: 0.0,
        delta_1: 3.0 * MHZ,
        delta_2: -7.0 * MHZ,
        delta_m: 1.5 * MHZ,
        kappa_2: 2.0 * MHZ,
        ..Default::default()
    };
    let spec = stability(&drift_matrix(&p).unwrap()).unwrap().spectrum;
    let want = [
        (-p.kappa_m, p.delta_m),
        (-p.kappa_1, p.delta_1),
        (-p.kappa_2, p.delta_2),
    ];
    for (re, im) in want {
        for s in [im, -im] {
            assert!(spec
                .values()
                .iter()
                .any(|z| (z.re - re).abs() < 1e-6 && (z.im - s).abs() < 1e-6));
        }
    }
}
