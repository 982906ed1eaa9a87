use libm::ceil;

use super::{eig_general, Matrix};
use crate::error::{Error, Result};

/// Largest admissible `‖M‖∞·dt` for the fixed-step integrator.
const MAX_STEP_NORM: f64 = 0.1;

/// Integrates `dV/dt = M·V + V·Mᵀ + D` from `V(0) = 0` to `t_end` with the
/// classical fourth-order Runge-Kutta scheme.
///
/// The step is `dt` shortened so that an integer number of steps lands on
/// `t_end`. `M` must be Hurwitz stable and `‖M‖∞·dt ≤ 0.1`.
///
/// Used as an independent check on the algebraic Lyapunov solve: the RK4 map
/// for this affine equation has the exact steady state as its fixed point, so
/// long integrations converge to it without step-size bias.
pub fn integrate_lyapunov_ode(m: &Matrix, d: &Matrix, t_end: f64, dt: f64) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::dimension(
            "integrate_lyapunov_ode",
            "square drift",
            m.shape_str(),
        ));
    }
    if d.rows() != m.rows() || d.cols() != m.cols() {
        return Err(Error::dimension("integrate_lyapunov_ode", m.shape_str(), d.shape_str()));
    }
    if !d.is_symmetric(1e-12 * d.max_abs().max(1.0)) {
        return Err(Error::domain("diffusion", "matrix must be symmetric"));
    }
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::domain("dt", alloc::format!("must be positive, got {dt}")));
    }
    if !(t_end >= 0.0 && t_end.is_finite()) {
        return Err(Error::domain(
            "t_end",
            alloc::format!("must be non-negative, got {t_end}"),
        ));
    }
    let max_re = eig_general(m)?.max_real_part();
    if max_re >= 0.0 {
        return Err(Error::Unstable { max_real_part: max_re });
    }
    let limit = MAX_STEP_NORM / m.norm_inf();
    if dt > limit {
        return Err(Error::StepSize { dt, limit });
    }

    let steps = ceil(t_end / dt) as usize;
    let mut v = Matrix::zeros(m.rows(), m.cols());
    if steps == 0 {
        return Ok(v);
    }
    let h = t_end / steps as f64;
    let mt = m.transpose();
    let rhs = |v: &Matrix| -> Matrix { &(&(m * v) + &(v * &mt)) + d };
    for _ in 0..steps {
        let k1 = rhs(&v);
        let k2 = rhs(&(&v + &k1.scale(0.5 * h)));
        let k3 = rhs(&(&v + &k2.scale(0.5 * h)));
        let k4 = rhs(&(&v + &k3.scale(h)));
        let incr = &(&k1 + &k2.scale(2.0)) + &(&k3.scale(2.0) + &k4);
        v = &v + &incr.scale(h / 6.0);
    }
    Ok(v.symmetrized())
}
