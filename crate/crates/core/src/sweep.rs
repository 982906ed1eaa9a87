//! One- and two-dimensional parameter grids over [`full_report`], plus named
//! presets for each published figure panel.
//!
//! Grid points are independent; [`evaluate_point`] is exposed so callers can
//! evaluate them in any order or in parallel and assemble the result with
//! [`SweepResult::from_rows`]. Row order is always row-major in axis index.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::measures::{full_report, CorrelationReport};
use crate::model::{drift_matrix, PhysicalParams};
use crate::steady_state::stability;

/// Default resolution of two-dimensional presets.
pub const DEFAULT_2D_COUNT: usize = 101;
/// Default resolution of one-dimensional presets.
pub const DEFAULT_1D_COUNT: usize = 401;

/// Swept parameter. Detunings are in units of `κ_c = κ₁` of the base point,
/// temperature in kelvin, ratios hold the denominator fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum AxisParam {
    #[cfg_attr(feature = "serde", serde(rename = "delta_1"))]
    Delta1,
    #[cfg_attr(feature = "serde", serde(rename = "delta_2"))]
    Delta2,
    #[cfg_attr(feature = "serde", serde(rename = "delta_m"))]
    DeltaM,
    #[cfg_attr(feature = "serde", serde(rename = "r"))]
    R,
    #[cfg_attr(feature = "serde", serde(rename = "temperature"))]
    Temperature,
    /// `Γ₂/Γ₁` with `Γ₁` fixed.
    #[cfg_attr(feature = "serde", serde(rename = "gamma_ratio"))]
    GammaRatio,
    /// `κ₂/κ₁` with `κ₁` fixed.
    #[cfg_attr(feature = "serde", serde(rename = "kappa_ratio"))]
    KappaRatio,
}

impl AxisParam {
    pub const ALL: [AxisParam; 7] = [
        AxisParam::Delta1,
        AxisParam::Delta2,
        AxisParam::DeltaM,
        AxisParam::R,
        AxisParam::Temperature,
        AxisParam::GammaRatio,
        AxisParam::KappaRatio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxisParam::Delta1 => "delta_1",
            AxisParam::Delta2 => "delta_2",
            AxisParam::DeltaM => "delta_m",
            AxisParam::R => "r",
            AxisParam::Temperature => "temperature",
            AxisParam::GammaRatio => "gamma_ratio",
            AxisParam::KappaRatio => "kappa_ratio",
        }
    }

    /// Writes `value` (axis units) into `target`, normalizing against `base`.
    pub fn apply(self, base: &PhysicalParams, value: f64, target: &mut PhysicalParams) {
        let kc = base.kappa_c();
        match self {
            AxisParam::Delta1 => target.delta_1 = value * kc,
            AxisParam::Delta2 => target.delta_2 = value * kc,
            AxisParam::DeltaM => target.delta_m = value * kc,
            AxisParam::R => target.r = value,
            AxisParam::Temperature => target.temperature = value,
            AxisParam::GammaRatio => target.gamma_2 = value * base.gamma_1,
            AxisParam::KappaRatio => target.kappa_2 = value * base.kappa_1,
        }
    }
}

impl fmt::Display for AxisParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxisParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AxisParam::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::domain("axis", format!("unknown parameter `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct AxisSpec {
    pub parameter: AxisParam,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl AxisSpec {
    pub fn new(parameter: AxisParam, start: f64, stop: f64, count: usize) -> Self {
        AxisSpec {
            parameter,
            start,
            stop,
            count,
        }
    }

    /// Evenly spaced values. Weighting both ends keeps endpoints and
    /// midpoints exact.
    pub fn value(&self, i: usize) -> f64 {
        let n = (self.count - 1) as f64;
        let i = i as f64;
        (self.start * (n - i) + self.stop * i) / n
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.value(i)).collect()
    }

    fn issues(&self, out: &mut Vec<String>) {
        let name = self.parameter.name();
        if !(self.start.is_finite() && self.stop.is_finite()) {
            out.push(format!("{name}: bounds must be finite"));
        } else if self.start >= self.stop {
            out.push(format!("{name}: start {} must be below stop {}", self.start, self.stop));
        }
        if self.count < 2 {
            out.push(format!("{name}: count must be at least 2, got {}", self.count));
        }
        let nonneg = matches!(
            self.parameter,
            AxisParam::R | AxisParam::Temperature | AxisParam::GammaRatio
        );
        if nonneg && self.start < 0.0 {
            out.push(format!("{name}: values must be non-negative"));
        }
        if self.parameter == AxisParam::KappaRatio && self.start <= 0.0 {
            out.push(format!("{name}: values must be positive"));
        }
    }
}

/// Column of a sweep result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Quantity {
    ECc,
    EMc1,
    EMc2,
    EMcMax,
    #[cfg_attr(feature = "serde", serde(rename = "e_m_c1c2"))]
    EMC1c2,
    #[cfg_attr(feature = "serde", serde(rename = "e_c1_mc2"))]
    EC1Mc2,
    #[cfg_attr(feature = "serde", serde(rename = "e_c2_mc1"))]
    EC2Mc1,
    RMin,
    RM,
    #[cfg_attr(feature = "serde", serde(rename = "r_c1"))]
    RC1,
    #[cfg_attr(feature = "serde", serde(rename = "r_c2"))]
    RC2,
    #[cfg_attr(feature = "serde", serde(rename = "steer_c1_c2"))]
    SteerC1C2,
    #[cfg_attr(feature = "serde", serde(rename = "steer_c2_c1"))]
    SteerC2C1,
    #[cfg_attr(feature = "serde", serde(rename = "steer_m_c1"))]
    SteerMC1,
    #[cfg_attr(feature = "serde", serde(rename = "steer_c1_m"))]
    SteerC1M,
    #[cfg_attr(feature = "serde", serde(rename = "steer_m_c2"))]
    SteerMC2,
    #[cfg_attr(feature = "serde", serde(rename = "steer_c2_m"))]
    SteerC2M,
    #[cfg_attr(feature = "serde", serde(rename = "asym_c1c2"))]
    AsymC1c2,
    #[cfg_attr(feature = "serde", serde(rename = "asym_mc1"))]
    AsymMc1,
    #[cfg_attr(feature = "serde", serde(rename = "asym_mc2"))]
    AsymMc2,
    MaxRealEig,
    MinSymplectic,
}

impl Quantity {
    pub const ALL: [Quantity; 22] = [
        Quantity::ECc,
        Quantity::EMc1,
        Quantity::EMc2,
        Quantity::EMcMax,
        Quantity::EMC1c2,
        Quantity::EC1Mc2,
        Quantity::EC2Mc1,
        Quantity::RMin,
        Quantity::RM,
        Quantity::RC1,
        Quantity::RC2,
        Quantity::SteerC1C2,
        Quantity::SteerC2C1,
        Quantity::SteerMC1,
        Quantity::SteerC1M,
        Quantity::SteerMC2,
        Quantity::SteerC2M,
        Quantity::AsymC1c2,
        Quantity::AsymMc1,
        Quantity::AsymMc2,
        Quantity::MaxRealEig,
        Quantity::MinSymplectic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::ECc => "e_cc",
            Quantity::EMc1 => "e_mc1",
            Quantity::EMc2 => "e_mc2",
            Quantity::EMcMax => "e_mc_max",
            Quantity::EMC1c2 => "e_m_c1c2",
            Quantity::EC1Mc2 => "e_c1_mc2",
            Quantity::EC2Mc1 => "e_c2_mc1",
            Quantity::RMin => "r_min",
            Quantity::RM => "r_m",
            Quantity::RC1 => "r_c1",
            Quantity::RC2 => "r_c2",
            Quantity::SteerC1C2 => "steer_c1_c2",
            Quantity::SteerC2C1 => "steer_c2_c1",
            Quantity::SteerMC1 => "steer_m_c1",
            Quantity::SteerC1M => "steer_c1_m",
            Quantity::SteerMC2 => "steer_m_c2",
            Quantity::SteerC2M => "steer_c2_m",
            Quantity::AsymC1c2 => "asym_c1c2",
            Quantity::AsymMc1 => "asym_mc1",
            Quantity::AsymMc2 => "asym_mc2",
            Quantity::MaxRealEig => "max_real_eig",
            Quantity::MinSymplectic => "min_symplectic",
        }
    }

    /// Value in a report; `None` when the point is unstable and the quantity
    /// needs the steady state.
    pub fn extract(self, report: &CorrelationReport) -> Option<f64> {
        if self == Quantity::MaxRealEig {
            return Some(report.stability.max_real_part);
        }
        let m = report.measures.as_ref()?;
        Some(match self {
            Quantity::ECc => m.e_n.c1c2,
            Quantity::EMc1 => m.e_n.mc1,
            Quantity::EMc2 => m.e_n.mc2,
            Quantity::EMcMax => m.e_mc_max(),
            Quantity::EMC1c2 => m.e_n_one_vs_two.m,
            Quantity::EC1Mc2 => m.e_n_one_vs_two.c1,
            Quantity::EC2Mc1 => m.e_n_one_vs_two.c2,
            Quantity::RMin => m.r_tau_min,
            Quantity::RM => m.residuals.m,
            Quantity::RC1 => m.residuals.c1,
            Quantity::RC2 => m.residuals.c2,
            Quantity::SteerC1C2 => m.steering.c1_c2,
            Quantity::SteerC2C1 => m.steering.c2_c1,
            Quantity::SteerMC1 => m.steering.m_c1,
            Quantity::SteerC1M => m.steering.c1_m,
            Quantity::SteerMC2 => m.steering.m_c2,
            Quantity::SteerC2M => m.steering.c2_m,
            Quantity::AsymC1c2 => m.asymmetry.c1c2,
            Quantity::AsymMc1 => m.asymmetry.mc1,
            Quantity::AsymMc2 => m.asymmetry.mc2,
            Quantity::MinSymplectic => m.min_symplectic_eigenvalue,
            Quantity::MaxRealEig => unreachable!(),
        })
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::domain("quantity", format!("unknown quantity `{s}`")))
    }
}

/// A sweep: base point, one or two axes, requested columns.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepSpec {
    pub base: PhysicalParams,
    pub axes: Vec<AxisSpec>,
    pub quantities: Vec<Quantity>,
    #[cfg_attr(feature = "serde", serde(default))]
    pub description: String,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let mut issues = Vec::new();
        if let Err(e) = self.base.validate() {
            issues.push(format!("base: {e}"));
        }
        if self.axes.is_empty() || self.axes.len() > 2 {
            issues.push(format!("axes: expected 1 or 2, got {}", self.axes.len()));
        }
        for a in &self.axes {
            a.issues(&mut issues);
        }
        if self.axes.len() == 2 && self.axes[0].parameter == self.axes[1].parameter {
            issues.push(format!("axes: parameter {} used twice", self.axes[0].parameter));
        }
        if self.quantities.is_empty() {
            issues.push("quantities: at least one is required".to_string());
        }
        if issues.is_empty() {
            Ok(())
        } else {
            Err(Error::domain("sweep spec", issues.join("; ")))
        }
    }

    /// Number of grid points.
    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.count).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Replaces axis counts; a single count applies to every axis.
    pub fn with_resolution(mut self, counts: &[usize]) -> Result<Self> {
        match counts.len() {
            0 => {}
            1 => self.axes.iter_mut().for_each(|a| a.count = counts[0]),
            n if n == self.axes.len() => {
                for (a, &c) in self.axes.iter_mut().zip(counts) {
                    a.count = c;
                }
            }
            n => {
                return Err(Error::domain(
                    "grid",
                    format!("{n} counts given for {} axes", self.axes.len()),
                ))
            }
        }
        Ok(self)
    }

    /// Per-axis indices of a flat row-major index.
    pub fn grid_index(&self, flat: usize) -> Vec<usize> {
        let mut idx = alloc::vec![0; self.axes.len()];
        let mut rem = flat;
        for (k, a) in self.axes.iter().enumerate().rev() {
            idx[k] = rem % a.count;
            rem /= a.count;
        }
        idx
    }

    /// Axis values and physical parameters at a flat index.
    pub fn point(&self, flat: usize) -> (Vec<f64>, PhysicalParams) {
        let idx = self.grid_index(flat);
        let mut p = self.base;
        let values: Vec<f64> = self
            .axes
            .iter()
            .zip(&idx)
            .map(|(a, &i)| {
                let v = a.value(i);
                a.parameter.apply(&self.base, v, &mut p);
                v
            })
            .collect();
        (values, p)
    }

    pub fn columns(&self) -> Vec<String> {
        self.axes
            .iter()
            .map(|a| a.parameter.name().to_string())
            .chain(self.quantities.iter().map(|q| q.name().to_string()))
            .chain(core::iter::once("stable".to_string()))
            .collect()
    }

    fn stability_only(&self) -> bool {
        self.quantities.iter().all(|&q| q == Quantity::MaxRealEig)
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GridRow {
    pub index: Vec<usize>,
    pub axes: Vec<f64>,
    /// Aligned with `SweepSpec::quantities`; `None` at unstable points.
    pub values: Vec<Option<f64>>,
    pub stable: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepResult {
    pub spec: SweepSpec,
    pub columns: Vec<String>,
    pub rows: Vec<GridRow>,
}

impl SweepResult {
    /// Assembles rows evaluated in any order; they are sorted by grid index.
    pub fn from_rows(spec: SweepSpec, mut rows: Vec<GridRow>) -> Result<SweepResult> {
        if rows.len() != spec.len() {
            return Err(Error::dimension(
                "sweep result",
                format!("{} rows", spec.len()),
                format!("{}", rows.len()),
            ));
        }
        rows.sort_by(|a, b| a.index.cmp(&b.index));
        Ok(SweepResult {
            columns: spec.columns(),
            spec,
            rows,
        })
    }

    /// Column of a quantity, `None` entries at unstable points.
    pub fn column(&self, q: Quantity) -> Option<Vec<Option<f64>>> {
        let k = self.spec.quantities.iter().position(|&x| x == q)?;
        Some(self.rows.iter().map(|r| r.values[k]).collect())
    }
}

/// Evaluates the grid point at `flat`. Instability is flagged, not an error.
pub fn evaluate_point(spec: &SweepSpec, flat: usize) -> Result<GridRow> {
    let index = spec.grid_index(flat);
    let (axes, p) = spec.point(flat);
    let (values, stable) = if spec.stability_only() {
        let rep = stability(&drift_matrix(&p)?)?;
        (
            spec.quantities.iter().map(|_| Some(rep.max_real_part)).collect(),
            rep.stable,
        )
    } else {
        let rep = full_report(&p)?;
        (
            spec.quantities.iter().map(|q| q.extract(&rep)).collect(),
            rep.is_stable(),
        )
    };
    Ok(GridRow {
        index,
        axes,
        values,
        stable,
    })
}

/// Sequential sweep. See the `cavmag` crate for a parallel runner with
/// identical output.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    let rows = (0..spec.len())
        .map(|i| evaluate_point(spec, i))
        .collect::<Result<Vec<_>>>()?;
    SweepResult::from_rows(spec.clone(), rows)
}

/// Figure panels with a preset sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum FigureId {
    Fig2a,
    Fig2b,
    Fig2c,
    Fig2d,
    Fig3a,
    Fig3b,
    Fig4a,
    Fig4b,
    Fig5a,
    Fig5b,
    Fig5c,
    Fig5d,
    Fig6a,
    Fig6b,
    Fig6c,
    Fig7a,
    Fig7b,
    Fig8a,
    Fig8b,
}

impl FigureId {
    pub const ALL: [FigureId; 19] = [
        FigureId::Fig2a,
        FigureId::Fig2b,
        FigureId::Fig2c,
        FigureId::Fig2d,
        FigureId::Fig3a,
        FigureId::Fig3b,
        FigureId::Fig4a,
        FigureId::Fig4b,
        FigureId::Fig5a,
        FigureId::Fig5b,
        FigureId::Fig5c,
        FigureId::Fig5d,
        FigureId::Fig6a,
        FigureId::Fig6b,
        FigureId::Fig6c,
        FigureId::Fig7a,
        FigureId::Fig7b,
        FigureId::Fig8a,
        FigureId::Fig8b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureId::Fig2a => "fig2a",
            FigureId::Fig2b => "fig2b",
            FigureId::Fig2c => "fig2c",
            FigureId::Fig2d => "fig2d",
            FigureId::Fig3a => "fig3a",
            FigureId::Fig3b => "fig3b",
            FigureId::Fig4a => "fig4a",
            FigureId::Fig4b => "fig4b",
            FigureId::Fig5a => "fig5a",
            FigureId::Fig5b => "fig5b",
            FigureId::Fig5c => "fig5c",
            FigureId::Fig5d => "fig5d",
            FigureId::Fig6a => "fig6a",
            FigureId::Fig6b => "fig6b",
            FigureId::Fig6c => "fig6c",
            FigureId::Fig7a => "fig7a",
            FigureId::Fig7b => "fig7b",
            FigureId::Fig8a => "fig8a",
            FigureId::Fig8b => "fig8b",
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigureId::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let valid: Vec<&str> = FigureId::ALL.iter().map(|f| f.name()).collect();
            Error::domain("figure", format!("unknown id `{s}`; valid ids: {}", valid.join(", ")))
        })
    }
}

/// Detunings `Δ_m = −Δ₁ = Δ₂ = 2κ_c`, where the cavities sit on the magnon
/// sidebands.
pub fn sideband_params() -> PhysicalParams {
    let base = PhysicalParams::default();
    let kc = base.kappa_c();
    PhysicalParams {
        delta_1: -2.0 * kc,
        delta_2: 2.0 * kc,
        delta_m: 2.0 * kc,
        ..base
    }
}

const DETUNING_WINDOW: (f64, f64) = (-5.0, 5.0);
const STABILITY_WINDOW: (f64, f64) = (-10.0, 10.0);
const R_WINDOW: (f64, f64) = (0.0, 1.0);
const GAMMA_RATIO_WINDOW: (f64, f64) = (0.0, 2.0);
const KAPPA_RATIO_WINDOW: (f64, f64) = (0.1, 1.9);

fn axis2(p: AxisParam, (a, b): (f64, f64)) -> AxisSpec {
    AxisSpec::new(p, a, b, DEFAULT_2D_COUNT)
}

fn axis1(p: AxisParam, (a, b): (f64, f64)) -> AxisSpec {
    AxisSpec::new(p, a, b, DEFAULT_1D_COUNT)
}

/// Sweep reproducing one figure panel.
pub fn figure_preset(id: FigureId) -> SweepSpec {
    use AxisParam::*;
    use Quantity::*;
    let defaults = PhysicalParams::default();
    let kc = defaults.kappa_c();
    let with = |f: &dyn Fn(&mut PhysicalParams)| {
        let mut p = defaults;
        f(&mut p);
        p
    };
    let e_cm = alloc::vec![EMc1, EMc2, EMcMax];
    let all_steering = alloc::vec![SteerC1C2, SteerC2C1, SteerMC1, SteerC1M, SteerMC2, SteerC2M];
    let (base, axes, quantities, description): (PhysicalParams, Vec<AxisSpec>, Vec<Quantity>, &str) = match id {
        FigureId::Fig2a => (
            defaults,
            alloc::vec![axis2(Delta1, DETUNING_WINDOW), axis2(Delta2, DETUNING_WINDOW)],
            alloc::vec![ECc],
            "E_cc vs Δ1/κc, Δ2/κc with Δm = 0; window ±5κc",
        ),
        FigureId::Fig2b => (
            defaults,
            alloc::vec![axis2(Delta1, DETUNING_WINDOW), axis2(DeltaM, DETUNING_WINDOW)],
            alloc::vec![ECc],
            "E_cc vs Δ1/κc, Δm/κc with Δ2 = 0; window ±5κc",
        ),
        FigureId::Fig2c => (
            with(&|p| p.delta_m = 2.0 * kc),
            alloc::vec![axis2(Delta1, DETUNING_WINDOW), axis2(Delta2, DETUNING_WINDOW)],
            e_cm,
            "E_cm (both cavities and max) vs Δ1/κc, Δ2/κc with Δm = 2κc; window ±5κc",
        ),
        FigureId::Fig2d => (
            with(&|p| p.delta_2 = 2.0 * kc),
            alloc::vec![axis2(Delta1, DETUNING_WINDOW), axis2(DeltaM, DETUNING_WINDOW)],
            e_cm,
            "E_cm (both cavities and max) vs Δ1/κc, Δm/κc with Δ2 = 2κc; window ±5κc",
        ),
        FigureId::Fig3a => (
            defaults,
            alloc::vec![axis2(R, R_WINDOW), axis2(GammaRatio, GAMMA_RATIO_WINDOW)],
            alloc::vec![ECc],
            "E_cc vs r and Γ2/Γ1 (Γ1 = 4κc fixed) at resonance; r in [0, 1], ratio in [0, 2]",
        ),
        FigureId::Fig3b => (
            sideband_params(),
            alloc::vec![axis2(R, R_WINDOW), axis2(GammaRatio, GAMMA_RATIO_WINDOW)],
            e_cm,
            "E_cm vs r and Γ2/Γ1 (Γ1 = 4κc fixed) with Δm = −Δ1 = Δ2 = 2κc; r in [0, 1], ratio in [0, 2]",
        ),
        FigureId::Fig4a => (
            defaults,
            alloc::vec![axis2(R, R_WINDOW), axis2(Temperature, (0.0, 3.0))],
            alloc::vec![ECc],
            "E_cc vs r and T at resonance; r in [0, 1], T in [0, 3] K",
        ),
        FigureId::Fig4b => (
            sideband_params(),
            alloc::vec![axis2(R, R_WINDOW), axis2(Temperature, (0.0, 1.0))],
            e_cm,
            "E_cm vs r and T with Δm = −Δ1 = Δ2 = 2κc; r in [0, 1], T in [0, 1] K",
        ),
        FigureId::Fig5a => (
            with(&|p| p.delta_m = 2.0 * kc),
            alloc::vec![axis2(Delta1, DETUNING_WINDOW), axis2(Delta2, DETUNING_WINDOW)],
            alloc::vec![RMin],
            "R_min vs Δ1/κc, Δ2/κc with Δm = 2κc; window ±5κc",
        ),
        FigureId::Fig5b => (
            with(&|p| p.delta_2 = 2.0 * kc),
            alloc::vec![axis2(Delta1, DETUNING_WINDOW), axis2(DeltaM, DETUNING_WINDOW)],
            alloc::vec![RMin],
            "R_min vs Δ1/κc, Δm/κc with Δ2 = 2κc; window ±5κc",
        ),
        FigureId::Fig5c => (
            sideband_params(),
            alloc::vec![axis2(R, R_WINDOW), axis2(Temperature, (0.0, 0.6))],
            alloc::vec![RMin],
            "R_min vs r and T with Δm = −Δ1 = Δ2 = 2κc; r in [0, 1], T in [0, 0.6] K",
        ),
        FigureId::Fig5d => (
            sideband_params(),
            alloc::vec![axis2(R, R_WINDOW), axis2(GammaRatio, GAMMA_RATIO_WINDOW)],
            alloc::vec![RMin],
            "R_min vs r and Γ2/Γ1 with Δm = −Δ1 = Δ2 = 2κc; r in [0, 1], ratio in [0, 2]",
        ),
        FigureId::Fig6a => (
            defaults,
            alloc::vec![axis2(Delta1, DETUNING_WINDOW), axis2(DeltaM, DETUNING_WINDOW)],
            all_steering,
            "steering vs Δ1/κc, Δm/κc with Δ2 = 0, r = 0.4; window ±5κc",
        ),
        FigureId::Fig6b => (
            defaults,
            alloc::vec![axis2(R, R_WINDOW), axis2(Temperature, (0.0, 3.0))],
            all_steering,
            "steering vs r and T at resonance; r in [0, 1], T in [0, 3] K",
        ),
        FigureId::Fig6c => (
            defaults,
            alloc::vec![axis2(R, R_WINDOW), axis2(GammaRatio, GAMMA_RATIO_WINDOW)],
            all_steering,
            "steering vs r and Γ2/Γ1 (Γ1 = 4κc fixed) at resonance; r in [0, 1], ratio in [0, 2]",
        ),
        FigureId::Fig7a => (
            defaults,
            alloc::vec![axis1(GammaRatio, GAMMA_RATIO_WINDOW)],
            alloc::vec![SteerC1C2, SteerC2C1, AsymC1c2, ECc],
            "cavity steering, asymmetry and E_cc vs Γ2/Γ1 with κ1 = κ2 at resonance; ratio in [0, 2]",
        ),
        FigureId::Fig7b => (
            defaults,
            alloc::vec![axis1(KappaRatio, KAPPA_RATIO_WINDOW)],
            alloc::vec![SteerC1C2, SteerC2C1, AsymC1c2, ECc],
            "cavity steering, asymmetry and E_cc vs κ2/κ1 with Γ2 = Γ1 at resonance; ratio in [0.1, 1.9]",
        ),
        FigureId::Fig8a => (
            defaults,
            alloc::vec![axis2(Delta1, STABILITY_WINDOW), axis2(Delta2, STABILITY_WINDOW)],
            alloc::vec![MaxRealEig],
            "max Re λ of the drift vs Δ1/κc, Δ2/κc with Δm = 0; window ±10κc",
        ),
        FigureId::Fig8b => (
            defaults,
            alloc::vec![axis2(Delta1, STABILITY_WINDOW), axis2(DeltaM, STABILITY_WINDOW)],
            alloc::vec![MaxRealEig],
            "max Re λ of the drift vs Δ1/κc, Δm/κc with Δ2 = 0; window ±10κc",
        ),
    };
    SweepSpec {
        base,
        axes,
        quantities,
        description: description.to_string(),
    }
}
