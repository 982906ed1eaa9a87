#![allow(dead_code)]

use std::f64::consts::PI;

use cavmag_core::numerics::Matrix;
use cavmag_core::PhysicalParams;
use proptest::prelude::*;
use rand::Rng;

/// 2π·1 MHz in rad/s.
pub const MHZ: f64 = 2.0 * PI * 1e6;

/// Valid parameters over a range wide enough to leave the default regime,
/// narrow enough that the RK4 oracle stays cheap.
pub fn random_params<R: Rng>(rng: &mut R) -> PhysicalParams {
    PhysicalParams {
        kappa_1: rng.gen_range(0.5..10.0) * MHZ,
        kappa_2: rng.gen_range(0.5..10.0) * MHZ,
        kappa_m: rng.gen_range(0.5..5.0) * MHZ,
        gamma_1: rng.gen_range(0.0..25.0) * MHZ,
        gamma_2: rng.gen_range(0.0..25.0) * MHZ,
        delta_1: rng.gen_range(-25.0..25.0) * MHZ,
        delta_2: rng.gen_range(-25.0..25.0) * MHZ,
        delta_m: rng.gen_range(-25.0..25.0) * MHZ,
        r: rng.gen_range(0.0..1.5),
        temperature: rng.gen_range(0.0..1.0),
        ..PhysicalParams::default()
    }
}

prop_compose! {
    pub fn arb_params()(
        k1 in 0.5..10.0f64, k2 in 0.5..10.0f64, km in 0.5..5.0f64,
        g1 in 0.0..25.0f64, g2 in 0.0..25.0f64,
        d1 in -25.0..25.0f64, d2 in -25.0..25.0f64, dm in -25.0..25.0f64,
        r in 0.0..1.5f64, t in 0.0..1.0f64,
    ) -> PhysicalParams {
        PhysicalParams {
            kappa_1: k1 * MHZ,
            kappa_2: k2 * MHZ,
            kappa_m: km * MHZ,
            gamma_1: g1 * MHZ,
            gamma_2: g2 * MHZ,
            delta_1: d1 * MHZ,
            delta_2: d2 * MHZ,
            delta_m: dm * MHZ,
            r,
            temperature: t,
            ..PhysicalParams::default()
        }
    }
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let data: Vec<f64> = (0..n * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    Matrix::from_row_slice(n, n, &data).unwrap()
}

/// Permutation exchanging the two cavity modes of a 6×6 CM or drift.
pub fn cavity_swap() -> Matrix {
    let perm = [0, 1, 4, 5, 2, 3];
    let mut p = Matrix::zeros(6, 6);
    for (i, &j) in perm.iter().enumerate() {
        p[(i, j)] = 1.0;
    }
    p
}
