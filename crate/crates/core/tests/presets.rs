//! Figure presets checked against a literal table of fixed parameters,
//! axes and columns.

use cavmag_core::model::hz_to_angular;
use cavmag_core::sweep::{AxisParam, AxisSpec, Quantity, DEFAULT_1D_COUNT as N1, DEFAULT_2D_COUNT as N2};
use cavmag_core::{figure_preset, run_sweep, FigureId, PhysicalParams, SweepSpec};

use AxisParam::*;
use Quantity::*;

struct Row {
    id: FigureId,
    /// (Δ₁, Δ₂, Δ_m) in units of κ_c
    detunings: (f64, f64, f64),
    axes: &'static [(AxisParam, f64, f64, usize)],
    quantities: &'static [Quantity],
}

const STEER: &[Quantity] = &[SteerC1C2, SteerC2C1, SteerMC1, SteerC1M, SteerMC2, SteerC2M];
const ECM: &[Quantity] = &[EMc1, EMc2, EMcMax];
const SIDEBAND: (f64, f64, f64) = (-2.0, 2.0, 2.0);
const RESONANCE: (f64, f64, f64) = (0.0, 0.0, 0.0);

#[rustfmt::skip]
const TABLE: &[Row] = &[
    Row { id: FigureId::Fig2a, detunings: RESONANCE, axes: &[(Delta1, -5.0, 5.0, N2), (Delta2, -5.0, 5.0, N2)], quantities: &[ECc] },
    Row { id: FigureId::Fig2b, detunings: RESONANCE, axes: &[(Delta1, -5.0, 5.0, N2), (DeltaM, -5.0, 5.0, N2)], quantities: &[ECc] },
    Row { id: FigureId::Fig2c, detunings: (0.0, 0.0, 2.0), axes: &[(Delta1, -5.0, 5.0, N2), (Delta2, -5.0, 5.0, N2)], quantities: ECM },
    Row { id: FigureId::Fig2d, detunings: (0.0, 2.0, 0.0), axes: &[(Delta1, -5.0, 5.0, N2), (DeltaM, -5.0, 5.0, N2)], quantities: ECM },
    Row { id: FigureId::Fig3a, detunings: RESONANCE, axes: &[(R, 0.0, 1.0, N2), (GammaRatio, 0.0, 2.0, N2)], quantities: &[ECc] },
    Row { id: FigureId::Fig3b, detunings: SIDEBAND, axes: &[(R, 0.0, 1.0, N2), (GammaRatio, 0.0, 2.0, N2)], quantities: ECM },
    Row { id: FigureId::Fig4a, detunings: RESONANCE, axes: &[(R, 0.0, 1.0, N2), (Temperature, 0.0, 3.0, N2)], quantities: &[ECc] },
    Row { id: FigureId::Fig4b, detunings: SIDEBAND, axes: &[(R, 0.0, 1.0, N2), (Temperature, 0.0, 1.0, N2)], quantities: ECM },
    Row { id: FigureId::Fig5a, detunings: (0.0, 0.0, 2.0), axes: &[(Delta1, -5.0, 5.0, N2), (Delta2, -5.0, 5.0, N2)], quantities: &[RMin] },
    Row { id: FigureId::Fig5b, detunings: (0.0, 2.0, 0.0), axes: &[(Delta1, -5.0, 5.0, N2), (DeltaM, -5.0, 5.0, N2)], quantities: &[RMin] },
    Row { id: FigureId::Fig5c, detunings: SIDEBAND, axes: &[(R, 0.0, 1.0, N2), (Temperature, 0.0, 0.6, N2)], quantities: &[RMin] },
    Row { id: FigureId::Fig5d, detunings: SIDEBAND, axes: &[(R, 0.0, 1.0, N2), (GammaRatio, 0.0, 2.0, N2)], quantities: &[RMin] },
    Row { id: FigureId::Fig6a, detunings: RESONANCE, axes: &[(Delta1, -5.0, 5.0, N2), (DeltaM, -5.0, 5.0, N2)], quantities: STEER },
    Row { id: FigureId::Fig6b, detunings: RESONANCE, axes: &[(R, 0.0, 1.0, N2), (Temperature, 0.0, 3.0, N2)], quantities: STEER },
    Row { id: FigureId::Fig6c, detunings: RESONANCE, axes: &[(R, 0.0, 1.0, N2), (GammaRatio, 0.0, 2.0, N2)], quantities: STEER },
    Row { id: FigureId::Fig7a, detunings: RESONANCE, axes: &[(GammaRatio, 0.0, 2.0, N1)], quantities: &[SteerC1C2, SteerC2C1, AsymC1c2, ECc] },
    Row { id: FigureId::Fig7b, detunings: RESONANCE, axes: &[(KappaRatio, 0.1, 1.9, N1)], quantities: &[SteerC1C2, SteerC2C1, AsymC1c2, ECc] },
    Row { id: FigureId::Fig8a, detunings: RESONANCE, axes: &[(Delta1, -10.0, 10.0, N2), (Delta2, -10.0, 10.0, N2)], quantities: &[MaxRealEig] },
    Row { id: FigureId::Fig8b, detunings: RESONANCE, axes: &[(Delta1, -10.0, 10.0, N2), (DeltaM, -10.0, 10.0, N2)], quantities: &[MaxRealEig] },
];

#[test]
fn every_preset_matches_the_table() {
    assert_eq!(TABLE.len(), FigureId::ALL.len());
    for row in TABLE {
        let spec = figure_preset(row.id);
        let b = spec.base;
        let kc = b.kappa_1;
        // shared defaults
        assert_eq!(b.kappa_1, hz_to_angular(5e6), "{}", row.id);
        assert_eq!(b.kappa_2, hz_to_angular(5e6), "{}", row.id);
        assert_eq!(b.kappa_m, hz_to_angular(1e6), "{}", row.id);
        assert_eq!(b.gamma_1, 4.0 * kc, "{}", row.id);
        assert_eq!(b.gamma_2, 4.0 * kc, "{}", row.id);
        assert_eq!(b.r, 0.4, "{}", row.id);
        assert_eq!(b.temperature, 0.02, "{}", row.id);
        assert_eq!(b.omega_m, hz_to_angular(10e9), "{}", row.id);
        let (d1, d2, dm) = row.detunings;
        assert_eq!(
            (b.delta_1 / kc, b.delta_2 / kc, b.delta_m / kc),
            (d1, d2, dm),
            "{}",
            row.id
        );
        let axes: Vec<AxisSpec> = row.axes.iter().map(|&(p, a, z, n)| AxisSpec::new(p, a, z, n)).collect();
        assert_eq!(spec.axes, axes, "{}", row.id);
        assert_eq!(spec.quantities, row.quantities, "{}", row.id);
        assert!(!spec.description.is_empty());
    }
}

#[test]
fn fig2a_grid_is_symmetric_under_cavity_exchange() {
    let spec = figure_preset(FigureId::Fig2a).with_resolution(&[21]).unwrap();
    let res = run_sweep(&spec).unwrap();
    let e = res.column(ECc).unwrap();
    for i in 0..21 {
        for j in 0..21 {
            let a = e[i * 21 + j].unwrap();
            let b = e[j * 21 + i].unwrap();
            assert!((a - b).abs() < 1e-10, "({i},{j}): {a} vs {b}");
        }
    }
}

#[test]
fn stability_preset_is_stable_everywhere() {
    let spec = figure_preset(FigureId::Fig8a).with_resolution(&[5]).unwrap();
    let res = run_sweep(&spec).unwrap();
    assert!(res.rows.iter().all(|r| r.stable && r.values[0].unwrap() < 0.0));
}

#[test]
fn invalid_spec_is_rejected_before_evaluation() {
    let spec = SweepSpec {
        base: PhysicalParams {
            r: -1.0,
            ..Default::default()
        },
        axes: vec![AxisSpec::new(Temperature, -1.0, 1.0, 3)],
        quantities: vec![ECc],
        description: String::new(),
    };
    let err = run_sweep(&spec).unwrap_err().to_string();
    assert!(err.contains("base") && err.contains("temperature"), "{err}");
}
