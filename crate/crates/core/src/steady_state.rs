//! Steady-state covariance matrix and drift stability.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::model::{DiffusionMatrix, DriftMatrix};
use crate::numerics::{eig_general, kron, solve_linear, ComplexSpectrum, Matrix};

/// Relative residual accepted for `M·V + V·Mᵀ + D = 0`.
pub const LYAPUNOV_RTOL: f64 = 1e-9;

/// Symmetric steady-state covariance matrix, vacuum variance `1/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct CovarianceMatrix(Matrix);

impl CovarianceMatrix {
    /// Wraps a symmetric matrix with an even number of rows.
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() || m.rows() % 2 != 0 {
            return Err(Error::dimension(
                "covariance",
                "square matrix of even size",
                m.shape_str(),
            ));
        }
        if !m.is_symmetric(1e-10 * m.max_abs().max(1.0)) {
            return Err(Error::domain("covariance", "matrix is not symmetric"));
        }
        Ok(CovarianceMatrix(m.symmetrized()))
    }

    /// `n`-mode vacuum, `I/2`.
    pub fn vacuum(modes: usize) -> Self {
        CovarianceMatrix(Matrix::identity(2 * modes).scale(0.5))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn modes(&self) -> usize {
        self.0.rows() / 2
    }
}

/// Drift spectrum summary. `stable` holds iff every eigenvalue has a
/// strictly negative real part.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StabilityReport {
    pub max_real_part: f64,
    pub spectrum: ComplexSpectrum,
    pub stable: bool,
}

pub fn stability(m: &DriftMatrix) -> Result<StabilityReport> {
    let spectrum = eig_general(m.matrix())?;
    let max_real_part = spectrum.max_real_part();
    Ok(StabilityReport {
        max_real_part,
        spectrum,
        stable: max_real_part < 0.0,
    })
}

/// `‖M·V + V·Mᵀ + D‖∞` as a max-abs entry.
pub fn lyapunov_residual(m: &Matrix, v: &Matrix, d: &Matrix) -> f64 {
    let mt = m.transpose();
    (&(&(m * v) + &(v * &mt)) + d).max_abs()
}

/// Solves `M·V + V·Mᵀ = −D` for the steady-state covariance matrix.
///
/// Column-stacking gives `(I ⊗ M + M ⊗ I)·vec(V) = −vec(D)`, a dense
/// `n²×n²` system solved by LU. Refuses drifts that are not Hurwitz.
pub fn solve_lyapunov(m: &DriftMatrix, d: &DiffusionMatrix) -> Result<CovarianceMatrix> {
    let report = stability(m)?;
    if !report.stable {
        return Err(Error::Unstable {
            max_real_part: report.max_real_part,
        });
    }
    solve_lyapunov_matrix(m.matrix(), d.matrix())
}

/// Matrix-level Lyapunov solve without the stability gate.
pub(crate) fn solve_lyapunov_matrix(m: &Matrix, d: &Matrix) -> Result<CovarianceMatrix> {
    if !m.is_square() || d.rows() != m.rows() || d.cols() != m.cols() {
        return Err(Error::dimension("solve_lyapunov", m.shape_str(), d.shape_str()));
    }
    if !d.is_symmetric(1e-12 * d.max_abs().max(1.0)) {
        return Err(Error::domain("diffusion", "matrix must be symmetric"));
    }
    let n = m.rows();
    let eye = Matrix::identity(n);
    let system = &kron(&eye, m) + &kron(m, &eye);
    // column-major vec(D)
    let rhs: Vec<f64> = (0..n * n).map(|k| -d[(k % n, k / n)]).collect();
    let x = solve_linear(&system, &rhs).map_err(|e| match e {
        Error::Singular { .. } => Error::Degenerate {
            what: "Kronecker-sum Lyapunov system is singular",
        },
        other => other,
    })?;
    let mut v = Matrix::zeros(n, n);
    for (k, val) in x.into_iter().enumerate() {
        v[(k % n, k / n)] = val;
    }
    let v = v.symmetrized();
    let residual = lyapunov_residual(m, &v, d);
    if residual > LYAPUNOV_RTOL * d.norm_inf().max(f64::MIN_POSITIVE) {
        return Err(Error::NoConvergence {
            op: "solve_lyapunov",
            detail: alloc::format!("residual {residual:e} above tolerance"),
        });
    }
    Ok(CovarianceMatrix(v))
}
