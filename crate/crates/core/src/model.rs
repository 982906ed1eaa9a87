//! Physical parameters and the linearized fluctuation model.
//!
//! Quadrature ordering throughout the crate is
//! `(δx, δy, δX₁, δY₁, δX₂, δY₂)`: magnon first, then cavity 1 and cavity 2.
//! Quadratures carry a `1/√2`, so the vacuum variance is `1/2`.
//!
//! All rates and detunings are angular frequencies in rad/s.

use core::f64::consts::PI;

use libm::{cosh, expm1, sinh, sqrt};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::Matrix;

/// Reduced Planck constant, J·s (CODATA 2018, exact).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Boltzmann constant, J/K (CODATA 2018, exact).
pub const K_B: f64 = 1.380_649e-23;

/// Converts a frequency given as `ω/2π` in Hz to rad/s.
#[inline]
pub fn hz_to_angular(f: f64) -> f64 {
    2.0 * PI * f
}

/// System inputs. Detunings are measured from the squeezed-drive frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct PhysicalParams {
    pub kappa_1: f64,
    pub kappa_2: f64,
    pub kappa_m: f64,
    pub gamma_1: f64,
    pub gamma_2: f64,
    pub delta_1: f64,
    pub delta_2: f64,
    pub delta_m: f64,
    /// Squeezing parameter of the two-mode squeezed vacuum.
    pub r: f64,
    /// Magnon frequency; only enters the thermal occupation.
    pub omega_m: f64,
    /// Bath temperature in kelvin.
    pub temperature: f64,
}

impl Default for PhysicalParams {
    /// κ_c/2π = 5 MHz, κ_m/2π = 1 MHz, Γ₁ = Γ₂ = 4κ_c, r = 0.4,
    /// ω_m/2π = 10 GHz, T = 20 mK, all detunings zero.
    fn default() -> Self {
        let kappa_c = hz_to_angular(5e6);
        PhysicalParams {
            kappa_1: kappa_c,
            kappa_2: kappa_c,
            kappa_m: hz_to_angular(1e6),
            gamma_1: 4.0 * kappa_c,
            gamma_2: 4.0 * kappa_c,
            delta_1: 0.0,
            delta_2: 0.0,
            delta_m: 0.0,
            r: 0.4,
            omega_m: hz_to_angular(10e9),
            temperature: 0.02,
        }
    }
}

impl PhysicalParams {
    /// Normalization rate for detuning and coupling axes (`κ_c ≡ κ₁`).
    #[inline]
    pub fn kappa_c(&self) -> f64 {
        self.kappa_1
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("kappa_1", self.kappa_1),
            ("kappa_2", self.kappa_2),
            ("kappa_m", self.kappa_m),
            ("gamma_1", self.gamma_1),
            ("gamma_2", self.gamma_2),
            ("delta_1", self.delta_1),
            ("delta_2", self.delta_2),
            ("delta_m", self.delta_m),
            ("r", self.r),
            ("omega_m", self.omega_m),
            ("temperature", self.temperature),
        ];
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(Error::domain(name, "must be finite"));
            }
        }
        for (name, v) in [
            ("kappa_1", self.kappa_1),
            ("kappa_2", self.kappa_2),
            ("kappa_m", self.kappa_m),
            ("omega_m", self.omega_m),
        ] {
            if v <= 0.0 {
                return Err(Error::domain(name, alloc::format!("must be positive, got {v}")));
            }
        }
        for (name, v) in [
            ("gamma_1", self.gamma_1),
            ("gamma_2", self.gamma_2),
            ("r", self.r),
            ("temperature", self.temperature),
        ] {
            if v < 0.0 {
                return Err(Error::domain(name, alloc::format!("must be non-negative, got {v}")));
            }
        }
        Ok(())
    }

    /// The same system with the cavity labels 1 and 2 exchanged.
    pub fn swapped_cavities(&self) -> PhysicalParams {
        PhysicalParams {
            kappa_1: self.kappa_2,
            kappa_2: self.kappa_1,
            gamma_1: self.gamma_2,
            gamma_2: self.gamma_1,
            delta_1: self.delta_2,
            delta_2: self.delta_1,
            ..*self
        }
    }
}

/// Bath moments: squeezed photon number `N`, squeezed cross-correlation `M`,
/// thermal magnon occupation `n_m`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NoiseMoments {
    pub big_n: f64,
    pub big_m: f64,
    pub n_m: f64,
}

/// `N = sinh² r`, `M = sinh r cosh r`, `n_m = 1/(exp(ħω_m/k_B T) − 1)`.
///
/// `T = 0` returns `n_m = 0` exactly.
pub fn noise_moments(r: f64, omega_m: f64, temperature: f64) -> Result<NoiseMoments> {
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::domain("r", alloc::format!("must be non-negative, got {r}")));
    }
    if !(omega_m > 0.0 && omega_m.is_finite()) {
        return Err(Error::domain(
            "omega_m",
            alloc::format!("must be positive, got {omega_m}"),
        ));
    }
    if !(temperature >= 0.0 && temperature.is_finite()) {
        return Err(Error::domain(
            "temperature",
            alloc::format!("must be non-negative, got {temperature}"),
        ));
    }
    let (s, c) = (sinh(r), cosh(r));
    let n_m = if temperature == 0.0 {
        0.0
    } else {
        1.0 / expm1(HBAR * omega_m / (K_B * temperature))
    };
    Ok(NoiseMoments {
        big_n: s * s,
        big_m: s * c,
        n_m,
    })
}

/// Drift matrix of the quadrature fluctuations.
#[derive(Debug, Clone, PartialEq)]
pub struct DriftMatrix(Matrix);

impl DriftMatrix {
    /// Wraps an arbitrary 6×6 drift, e.g. for testing the stability gate.
    pub fn from_matrix(m: Matrix) -> Result<Self> {
        if m.rows() != 6 || m.cols() != 6 {
            return Err(Error::dimension("drift", "6x6", m.shape_str()));
        }
        Ok(DriftMatrix(m))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }
}

/// Noise-correlation matrix entering the Lyapunov equation.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffusionMatrix(Matrix);

impl DiffusionMatrix {
    pub fn from_matrix(m: Matrix) -> Result<Self> {
        if m.rows() != 6 || m.cols() != 6 {
            return Err(Error::dimension("diffusion", "6x6", m.shape_str()));
        }
        if !m.is_symmetric(1e-12 * m.max_abs().max(1.0)) {
            return Err(Error::domain("diffusion", "matrix must be symmetric"));
        }
        Ok(DiffusionMatrix(m))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }
}

pub fn drift_matrix(p: &PhysicalParams) -> Result<DriftMatrix> {
    p.validate()?;
    let (km, k1, k2) = (p.kappa_m, p.kappa_1, p.kappa_2);
    let (g1, g2) = (p.gamma_1, p.gamma_2);
    let (dm, d1, d2) = (p.delta_m, p.delta_1, p.delta_2);
    #[rustfmt::skip]
    let m = Matrix::from_rows([
        [-km,  dm,  0.0,  g1,  0.0,  g2],
        [-dm, -km, -g1,   0.0, -g2,  0.0],
        [0.0,  g1, -k1,   d1,  0.0,  0.0],
        [-g1,  0.0, -d1, -k1,  0.0,  0.0],
        [0.0,  g2,  0.0,  0.0, -k2,  d2],
        [-g2,  0.0, 0.0,  0.0, -d2, -k2],
    ])?;
    Ok(DriftMatrix(m))
}

pub fn diffusion_matrix(p: &PhysicalParams) -> Result<DiffusionMatrix> {
    p.validate()?;
    let nm = noise_moments(p.r, p.omega_m, p.temperature)?;
    let mag = p.kappa_m * (2.0 * nm.n_m + 1.0);
    let c1 = p.kappa_1 * (2.0 * nm.big_n + 1.0);
    let c2 = p.kappa_2 * (2.0 * nm.big_n + 1.0);
    let x = 2.0 * nm.big_m * sqrt(p.kappa_1 * p.kappa_2);
    #[rustfmt::skip]
    let d = Matrix::from_rows([
        [mag, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, mag, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, c1,  0.0, x,   0.0],
        [0.0, 0.0, 0.0, c1,  0.0, -x],
        [0.0, 0.0, x,   0.0, c2,  0.0],
        [0.0, 0.0, 0.0, -x,  0.0, c2],
    ])?;
    Ok(DiffusionMatrix(d))
}

/// Coefficients of the homogeneous mean-value equations, rows and columns
/// ordered `(⟨m⟩, ⟨c₁⟩, ⟨c₂⟩)`.
fn mean_value_coefficients(p: &PhysicalParams) -> [[Complex64; 3]; 3] {
    let i = Complex64::i();
    let z = Complex64::new(0.0, 0.0);
    [
        [Complex64::new(p.kappa_m, p.delta_m), i * p.gamma_1, i * p.gamma_2],
        [i * p.gamma_1, Complex64::new(p.kappa_1, p.delta_1), z],
        [i * p.gamma_2, z, Complex64::new(p.kappa_2, p.delta_2)],
    ]
}

fn det3(a: &[[Complex64; 3]; 3]) -> Complex64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Residual of the mean-value equations at `(⟨m⟩, ⟨c₁⟩, ⟨c₂⟩)`.
pub fn mean_value_residual(p: &PhysicalParams, means: &[Complex64; 3]) -> [Complex64; 3] {
    let a = mean_value_coefficients(p);
    let mut out = [Complex64::new(0.0, 0.0); 3];
    for (row, o) in a.iter().zip(out.iter_mut()) {
        *o = row.iter().zip(means).map(|(c, x)| c * x).sum();
    }
    out
}

/// Steady-state amplitudes `(⟨m⟩, ⟨c₁⟩, ⟨c₂⟩)`.
///
/// The squeezed vacuum carries no coherent amplitude, so the mean-value
/// equations are homogeneous and the unique solution is zero unless their
/// determinant vanishes.
pub fn steady_state_means(p: &PhysicalParams) -> Result<[Complex64; 3]> {
    p.validate()?;
    let a = mean_value_coefficients(p);
    let scale = a.iter().flat_map(|r| r.iter()).map(|c| c.norm()).fold(0.0, f64::max);
    if det3(&a).norm() <= 1e-12 * scale * scale * scale {
        return Err(Error::Degenerate {
            what: "mean-value equations have a non-trivial solution",
        });
    }
    Ok([Complex64::new(0.0, 0.0); 3])
}
