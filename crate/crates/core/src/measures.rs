//! Gaussian correlation quantifiers computed from a covariance matrix.
//!
//! Every measure here works in the vacuum-variance-`1/2` normalization, so
//! the separability boundary of the partially transposed state sits at a
//! symplectic eigenvalue of exactly `1/2`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use libm::log;

use crate::error::{Error, Result};
use crate::model::{diffusion_matrix, drift_matrix, PhysicalParams};
use crate::numerics::{determinant, eig_general, Matrix};
use crate::steady_state::{solve_lyapunov, stability, CovarianceMatrix, StabilityReport};

/// Slack on the Heisenberg bound before a CM is declared unphysical.
pub const PHYSICALITY_SLACK: f64 = 1e-6;
/// Residual contangles in `[-MONOGAMY_TOL, 0)` are numerical zeros.
pub const MONOGAMY_TOL: f64 = 1e-9;
/// Negativities and steerings at or below this are round-off and read as 0.
/// A separable state at the boundary `2η⁻ = 1` otherwise reports ~1e-16.
pub const MEASURE_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum ModeId {
    #[cfg_attr(feature = "serde", serde(rename = "m"))]
    Magnon,
    #[cfg_attr(feature = "serde", serde(rename = "c1"))]
    Cavity1,
    #[cfg_attr(feature = "serde", serde(rename = "c2"))]
    Cavity2,
}

impl ModeId {
    pub const ALL: [ModeId; 3] = [ModeId::Magnon, ModeId::Cavity1, ModeId::Cavity2];

    /// Position of the mode in the global ordering `(m, c1, c2)`.
    #[inline]
    pub fn index(self) -> usize {
        match self {
            ModeId::Magnon => 0,
            ModeId::Cavity1 => 1,
            ModeId::Cavity2 => 2,
        }
    }

    /// Quadrature rows `(x, y)` of the mode in a 6×6 CM.
    #[inline]
    pub fn quadratures(self) -> (usize, usize) {
        (2 * self.index(), 2 * self.index() + 1)
    }

    pub fn label(self) -> &'static str {
        match self {
            ModeId::Magnon => "m",
            ModeId::Cavity1 => "c1",
            ModeId::Cavity2 => "c2",
        }
    }

    /// The two modes other than `self`, in global order.
    pub fn others(self) -> (ModeId, ModeId) {
        match self {
            ModeId::Magnon => (ModeId::Cavity1, ModeId::Cavity2),
            ModeId::Cavity1 => (ModeId::Magnon, ModeId::Cavity2),
            ModeId::Cavity2 => (ModeId::Magnon, ModeId::Cavity1),
        }
    }
}

/// `Ω = ⊕ J`, `J = [[0, 1], [-1, 0]]`, for `modes` modes.
pub fn symplectic_form(modes: usize) -> Matrix {
    let mut omega = Matrix::zeros(2 * modes, 2 * modes);
    for k in 0..modes {
        omega[(2 * k, 2 * k + 1)] = 1.0;
        omega[(2 * k + 1, 2 * k)] = -1.0;
    }
    omega
}

/// Diagonal `±1` matrix flipping the momentum quadrature of one mode.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialTransposeMask {
    signs: Vec<f64>,
}

impl PartialTransposeMask {
    /// Flips the `y` quadrature of the mode at `position` among `modes`.
    pub fn flip(modes: usize, position: usize) -> Result<Self> {
        if position >= modes {
            return Err(Error::domain(
                "partial transpose",
                format!("mode position {position} out of range for {modes} modes"),
            ));
        }
        let mut signs = alloc::vec![1.0; 2 * modes];
        signs[2 * position + 1] = -1.0;
        Ok(PartialTransposeMask { signs })
    }

    pub fn signs(&self) -> &[f64] {
        &self.signs
    }

    pub fn as_matrix(&self) -> Matrix {
        Matrix::from_diagonal(&self.signs)
    }

    /// `ϱ·V·ϱ`.
    pub fn apply(&self, v: &Matrix) -> Result<Matrix> {
        if v.rows() != self.signs.len() || !v.is_square() {
            return Err(Error::dimension(
                "partial transpose",
                format!("{0}x{0}", self.signs.len()),
                v.shape_str(),
            ));
        }
        let mut out = v.clone();
        for i in 0..v.rows() {
            for j in 0..v.cols() {
                out[(i, j)] *= self.signs[i] * self.signs[j];
            }
        }
        Ok(out)
    }
}

/// Symplectic eigenvalues `ν` of a `2n×2n` CM, ascending, from the `±iν`
/// spectrum of `Ω·V`.
pub fn symplectic_eigenvalues(v: &Matrix) -> Result<Vec<f64>> {
    if !v.is_square() || v.rows() % 2 != 0 {
        return Err(Error::dimension(
            "symplectic_eigenvalues",
            "2n x 2n matrix",
            v.shape_str(),
        ));
    }
    let n = v.rows() / 2;
    let spectrum = eig_general(&(&symplectic_form(n) * v))?;
    let mut nu: Vec<f64> = spectrum.values().iter().map(|z| z.im.abs()).collect();
    nu.sort_by(f64::total_cmp);
    // each ν appears twice, as +iν and −iν
    Ok(nu.chunks(2).map(|pair| 0.5 * (pair[0] + pair[1])).collect())
}

fn check_physical(v: &Matrix, what: &'static str) -> Result<()> {
    let nu_min = symplectic_eigenvalues(v)?[0];
    if nu_min < 0.5 - PHYSICALITY_SLACK {
        return Err(Error::Unphysical { what, value: nu_min });
    }
    Ok(())
}

/// Sub-CM on mode positions `positions` (in that order).
pub fn reduce_positions(v: &CovarianceMatrix, positions: &[usize]) -> Result<CovarianceMatrix> {
    if positions.is_empty() {
        return Err(Error::domain("modes", "at least one mode is required"));
    }
    for (k, &p) in positions.iter().enumerate() {
        if p >= v.modes() {
            return Err(Error::dimension(
                "reduce",
                format!("mode position < {}", v.modes()),
                p.to_string(),
            ));
        }
        if positions[..k].contains(&p) {
            return Err(Error::domain("modes", format!("mode position {p} listed twice")));
        }
    }
    let idx: Vec<usize> = positions.iter().flat_map(|&p| [2 * p, 2 * p + 1]).collect();
    CovarianceMatrix::new(v.matrix().select(&idx))
}

/// Reduced CM of the given modes of a three-mode state.
pub fn reduce(v: &CovarianceMatrix, modes: &[ModeId]) -> Result<CovarianceMatrix> {
    let pos: Vec<usize> = modes.iter().map(|m| m.index()).collect();
    reduce_positions(v, &pos)
}

fn floored(x: f64) -> f64 {
    if x > MEASURE_FLOOR {
        x
    } else {
        0.0
    }
}

fn neg_log_twice(eta: f64) -> f64 {
    floored(-log(2.0 * eta))
}

/// Smallest symplectic eigenvalue of the CM with the `y` quadrature of the
/// mode at `position` flipped.
fn transposed_min_symplectic(v: &Matrix, position: usize) -> Result<f64> {
    let mask = PartialTransposeMask::flip(v.rows() / 2, position)?;
    Ok(symplectic_eigenvalues(&mask.apply(v)?)?[0])
}

/// Two-mode logarithmic negativity `max(0, −ln 2η⁻)`.
pub fn log_negativity(v4: &CovarianceMatrix) -> Result<f64> {
    if v4.modes() != 2 {
        return Err(Error::dimension("log_negativity", "4x4 CM", v4.matrix().shape_str()));
    }
    check_physical(v4.matrix(), "two-mode CM")?;
    Ok(neg_log_twice(transposed_min_symplectic(v4.matrix(), 0)?))
}

/// One-mode-versus-two-modes logarithmic negativity `E_{focus|rest}`.
pub fn log_negativity_one_vs_two(v: &CovarianceMatrix, focus: ModeId) -> Result<f64> {
    if v.modes() != 3 {
        return Err(Error::dimension(
            "log_negativity_one_vs_two",
            "6x6 CM",
            v.matrix().shape_str(),
        ));
    }
    check_physical(v.matrix(), "three-mode CM")?;
    Ok(neg_log_twice(transposed_min_symplectic(v.matrix(), focus.index())?))
}

/// Pairwise log-negativity between two modes of a three-mode CM.
pub fn pair_log_negativity(v: &CovarianceMatrix, a: ModeId, b: ModeId) -> Result<f64> {
    log_negativity(&reduce(v, &[a, b])?)
}

/// `E²_{u|vw} − E²_{u|v} − E²_{u|w}`, unclamped.
pub fn residual_contangle(v: &CovarianceMatrix, focus: ModeId) -> Result<f64> {
    let (b, c) = focus.others();
    let whole = log_negativity_one_vs_two(v, focus)?;
    let eb = pair_log_negativity(v, focus, b)?;
    let ec = pair_log_negativity(v, focus, c)?;
    Ok(whole * whole - eb * eb - ec * ec)
}

/// Minimum residual contangle over the three one-vs-two splittings.
///
/// Values in `[-1e-9, 0)` are reported as zero; anything more negative is
/// returned unchanged so monogamy violations stay visible.
pub fn min_residual_contangle(v: &CovarianceMatrix) -> Result<f64> {
    let mut min = f64::INFINITY;
    for focus in ModeId::ALL {
        min = min.min(residual_contangle(v, focus)?);
    }
    Ok(clamp_monogamy(min))
}

fn clamp_monogamy(x: f64) -> f64 {
    if (-MONOGAMY_TOL..0.0).contains(&x) {
        0.0
    } else {
        x
    }
}

/// `½ ln det(ν)`.
fn renyi2(nu: &Matrix, what: &'static str) -> Result<f64> {
    let det = determinant(nu)?;
    if det <= 0.0 {
        return Err(Error::Unphysical { what, value: det });
    }
    Ok(0.5 * log(det))
}

/// Gaussian steering `ζ_{steerer|steered} = max(0, S(2V_steerer) − S(2V_pair))`,
/// with `S(ν) = ½ ln det ν`.
pub fn gaussian_steering(v: &CovarianceMatrix, steerer: ModeId, steered: ModeId) -> Result<f64> {
    if steerer == steered {
        return Err(Error::domain("steering", "steerer and steered mode must differ"));
    }
    let pair = reduce(v, &[steerer, steered])?;
    let local = reduce(v, &[steerer])?;
    let s_local = renyi2(&local.matrix().scale(2.0), "steerer reduced CM")?;
    let s_pair = renyi2(&pair.matrix().scale(2.0), "two-mode CM")?;
    Ok(floored(s_local - s_pair))
}

/// `|ζ_{a|b} − ζ_{b|a}|`.
pub fn steering_asymmetry(v: &CovarianceMatrix, a: ModeId, b: ModeId) -> Result<f64> {
    Ok((gaussian_steering(v, a, b)? - gaussian_steering(v, b, a)?).abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum SteeringClass {
    NoWay,
    OneWay,
    TwoWay,
}

impl SteeringClass {
    pub fn classify(forward: f64, backward: f64) -> SteeringClass {
        match (forward > 0.0, backward > 0.0) {
            (false, false) => SteeringClass::NoWay,
            (true, true) => SteeringClass::TwoWay,
            _ => SteeringClass::OneWay,
        }
    }
}

/// A value per unordered mode pair.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PairValues {
    pub c1c2: f64,
    pub mc1: f64,
    pub mc2: f64,
}

impl PairValues {
    pub fn get(&self, a: ModeId, b: ModeId) -> Option<f64> {
        use ModeId::*;
        match (a, b) {
            (Cavity1, Cavity2) | (Cavity2, Cavity1) => Some(self.c1c2),
            (Magnon, Cavity1) | (Cavity1, Magnon) => Some(self.mc1),
            (Magnon, Cavity2) | (Cavity2, Magnon) => Some(self.mc2),
            _ => None,
        }
    }

    fn swap_cavities(&self) -> PairValues {
        PairValues {
            c1c2: self.c1c2,
            mc1: self.mc2,
            mc2: self.mc1,
        }
    }
}

/// A value per one-vs-two splitting, keyed by the single mode.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FocusValues {
    #[cfg_attr(feature = "serde", serde(rename = "m|c1c2"))]
    pub m: f64,
    #[cfg_attr(feature = "serde", serde(rename = "c1|mc2"))]
    pub c1: f64,
    #[cfg_attr(feature = "serde", serde(rename = "c2|mc1"))]
    pub c2: f64,
}

impl FocusValues {
    pub fn get(&self, focus: ModeId) -> f64 {
        match focus {
            ModeId::Magnon => self.m,
            ModeId::Cavity1 => self.c1,
            ModeId::Cavity2 => self.c2,
        }
    }

    fn swap_cavities(&self) -> FocusValues {
        FocusValues {
            m: self.m,
            c1: self.c2,
            c2: self.c1,
        }
    }
}

/// Directional steering for all six ordered pairs, keyed `steerer|steered`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DirectionalValues {
    #[cfg_attr(feature = "serde", serde(rename = "m|c1"))]
    pub m_c1: f64,
    #[cfg_attr(feature = "serde", serde(rename = "c1|m"))]
    pub c1_m: f64,
    #[cfg_attr(feature = "serde", serde(rename = "m|c2"))]
    pub m_c2: f64,
    #[cfg_attr(feature = "serde", serde(rename = "c2|m"))]
    pub c2_m: f64,
    #[cfg_attr(feature = "serde", serde(rename = "c1|c2"))]
    pub c1_c2: f64,
    #[cfg_attr(feature = "serde", serde(rename = "c2|c1"))]
    pub c2_c1: f64,
}

impl DirectionalValues {
    pub fn get(&self, steerer: ModeId, steered: ModeId) -> Option<f64> {
        use ModeId::*;
        match (steerer, steered) {
            (Magnon, Cavity1) => Some(self.m_c1),
            (Cavity1, Magnon) => Some(self.c1_m),
            (Magnon, Cavity2) => Some(self.m_c2),
            (Cavity2, Magnon) => Some(self.c2_m),
            (Cavity1, Cavity2) => Some(self.c1_c2),
            (Cavity2, Cavity1) => Some(self.c2_c1),
            _ => None,
        }
    }

    pub fn class(&self, a: ModeId, b: ModeId) -> Option<SteeringClass> {
        Some(SteeringClass::classify(self.get(a, b)?, self.get(b, a)?))
    }

    fn swap_cavities(&self) -> DirectionalValues {
        DirectionalValues {
            m_c1: self.m_c2,
            c1_m: self.c2_m,
            m_c2: self.m_c1,
            c2_m: self.c1_m,
            c1_c2: self.c2_c1,
            c2_c1: self.c1_c2,
        }
    }
}

/// Everything computed from a stable steady state.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Measures {
    pub e_n: PairValues,
    pub e_n_one_vs_two: FocusValues,
    /// Raw residual contangles, keyed by the single mode of the splitting.
    pub residuals: FocusValues,
    pub r_tau_min: f64,
    pub steering: DirectionalValues,
    pub asymmetry: PairValues,
    /// Smallest symplectic eigenvalue of the full CM.
    pub min_symplectic_eigenvalue: f64,
}

impl Measures {
    pub fn from_covariance(v: &CovarianceMatrix) -> Result<Measures> {
        use ModeId::*;
        let min_symplectic_eigenvalue = symplectic_eigenvalues(v.matrix())?[0];
        if min_symplectic_eigenvalue < 0.5 - PHYSICALITY_SLACK {
            return Err(Error::Unphysical {
                what: "steady-state CM",
                value: min_symplectic_eigenvalue,
            });
        }
        let e_n = PairValues {
            c1c2: pair_log_negativity(v, Cavity1, Cavity2)?,
            mc1: pair_log_negativity(v, Magnon, Cavity1)?,
            mc2: pair_log_negativity(v, Magnon, Cavity2)?,
        };
        let e_n_one_vs_two = FocusValues {
            m: log_negativity_one_vs_two(v, Magnon)?,
            c1: log_negativity_one_vs_two(v, Cavity1)?,
            c2: log_negativity_one_vs_two(v, Cavity2)?,
        };
        // reuse the pairwise values rather than recomputing per focus
        let sq = |x: f64| x * x;
        let residuals = FocusValues {
            m: sq(e_n_one_vs_two.m) - sq(e_n.mc1) - sq(e_n.mc2),
            c1: sq(e_n_one_vs_two.c1) - sq(e_n.mc1) - sq(e_n.c1c2),
            c2: sq(e_n_one_vs_two.c2) - sq(e_n.mc2) - sq(e_n.c1c2),
        };
        let r_tau_min = clamp_monogamy(residuals.m.min(residuals.c1).min(residuals.c2));
        let steering = DirectionalValues {
            m_c1: gaussian_steering(v, Magnon, Cavity1)?,
            c1_m: gaussian_steering(v, Cavity1, Magnon)?,
            m_c2: gaussian_steering(v, Magnon, Cavity2)?,
            c2_m: gaussian_steering(v, Cavity2, Magnon)?,
            c1_c2: gaussian_steering(v, Cavity1, Cavity2)?,
            c2_c1: gaussian_steering(v, Cavity2, Cavity1)?,
        };
        let asymmetry = PairValues {
            c1c2: (steering.c1_c2 - steering.c2_c1).abs(),
            mc1: (steering.m_c1 - steering.c1_m).abs(),
            mc2: (steering.m_c2 - steering.c2_m).abs(),
        };
        Ok(Measures {
            e_n,
            e_n_one_vs_two,
            residuals,
            r_tau_min,
            steering,
            asymmetry,
            min_symplectic_eigenvalue,
        })
    }

    /// Larger of the two cavity-magnon negativities.
    pub fn e_mc_max(&self) -> f64 {
        self.e_n.mc1.max(self.e_n.mc2)
    }

    /// The same measures with cavity labels 1 and 2 exchanged.
    pub fn swap_cavities(&self) -> Measures {
        Measures {
            e_n: self.e_n.swap_cavities(),
            e_n_one_vs_two: self.e_n_one_vs_two.swap_cavities(),
            residuals: self.residuals.swap_cavities(),
            r_tau_min: self.r_tau_min,
            steering: self.steering.swap_cavities(),
            asymmetry: self.asymmetry.swap_cavities(),
            min_symplectic_eigenvalue: self.min_symplectic_eigenvalue,
        }
    }
}

/// All quantifiers at one parameter point. `measures` is absent when the
/// drift is unstable.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CorrelationReport {
    pub params: PhysicalParams,
    pub stability: StabilityReport,
    #[cfg_attr(feature = "serde", serde(flatten))]
    pub measures: Option<Measures>,
}

impl CorrelationReport {
    pub fn is_stable(&self) -> bool {
        self.stability.stable
    }
}

fn point_context(p: &PhysicalParams) -> alloc::string::String {
    let kc = p.kappa_c();
    format!(
        "Δ1={:.4}κc Δ2={:.4}κc Δm={:.4}κc Γ1={:.4}κc Γ2={:.4}κc κ2/κ1={:.4} r={} T={}K",
        p.delta_1 / kc,
        p.delta_2 / kc,
        p.delta_m / kc,
        p.gamma_1 / kc,
        p.gamma_2 / kc,
        p.kappa_2 / p.kappa_1,
        p.r,
        p.temperature
    )
}

/// Stability, steady state and every measure at one parameter point.
pub fn full_report(p: &PhysicalParams) -> Result<CorrelationReport> {
    let run = || -> Result<CorrelationReport> {
        let drift = drift_matrix(p)?;
        let stab = stability(&drift)?;
        if !stab.stable {
            return Ok(CorrelationReport {
                params: *p,
                stability: stab,
                measures: None,
            });
        }
        let v = solve_lyapunov(&drift, &diffusion_matrix(p)?)?;
        Ok(CorrelationReport {
            params: *p,
            stability: stab,
            measures: Some(Measures::from_covariance(&v)?),
        })
    };
    run().map_err(|e| Error::AtPoint {
        context: point_context(p),
        source: alloc::boxed::Box::new(e),
    })
}

/// Steady-state CM of a parameter point (stability-gated).
pub fn steady_state_covariance(p: &PhysicalParams) -> Result<CovarianceMatrix> {
    solve_lyapunov(&drift_matrix(p)?, &diffusion_matrix(p)?)
}
