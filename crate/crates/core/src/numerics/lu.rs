use alloc::vec::Vec;

use super::Matrix;
use crate::error::{Error, Result};

/// Relative pivot threshold below which a matrix is treated as singular.
const PIVOT_RTOL: f64 = 1e-14;

/// LU factorization with partial pivoting, `P·A = L·U`, packed in place.
#[derive(Debug, Clone)]
pub struct Lu {
    lu: Matrix,
    perm: Vec<usize>,
    sign: f64,
}

impl Lu {
    /// Factorizes `a`, failing when a pivot drops below `1e-14·‖A‖∞`.
    pub fn new(a: &Matrix) -> Result<Lu> {
        let lu = Lu::factor(a)?;
        let threshold = PIVOT_RTOL * a.norm_inf();
        let n = a.rows();
        for k in 0..n {
            let p = lu.lu[(k, k)];
            if p.abs() <= threshold {
                return Err(Error::Singular { op: "lu", pivot: p });
            }
        }
        Ok(lu)
    }

    fn factor(a: &Matrix) -> Result<Lu> {
        if !a.is_square() {
            return Err(Error::dimension("lu", "square matrix", a.shape_str()));
        }
        let n = a.rows();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        for k in 0..n {
            let (piv, _) =
                (k..n)
                    .map(|i| (i, lu[(i, k)].abs()))
                    .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if piv != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(piv, j)];
                    lu[(piv, j)] = tmp;
                }
                perm.swap(k, piv);
                sign = -sign;
            }
            let d = lu[(k, k)];
            if d == 0.0 {
                continue;
            }
            for i in k + 1..n {
                let f = lu[(i, k)] / d;
                lu[(i, k)] = f;
                if f != 0.0 {
                    for j in k + 1..n {
                        lu[(i, j)] -= f * lu[(k, j)];
                    }
                }
            }
        }
        Ok(Lu { lu, perm, sign })
    }

    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.lu.rows();
        if b.len() != n {
            return Err(Error::dimension(
                "solve_linear",
                alloc::format!("rhs of length {n}"),
                alloc::format!("{}", b.len()),
            ));
        }
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let s: f64 = (0..i).map(|j| self.lu[(i, j)] * x[j]).sum();
            x[i] -= s;
        }
        for i in (0..n).rev() {
            let s: f64 = (i + 1..n).map(|j| self.lu[(i, j)] * x[j]).sum();
            x[i] = (x[i] - s) / self.lu[(i, i)];
        }
        Ok(x)
    }

    pub fn determinant(&self) -> f64 {
        (0..self.lu.rows()).map(|i| self.lu[(i, i)]).product::<f64>() * self.sign
    }
}

/// Solves `A·x = b` by partial-pivoting LU.
pub fn solve_linear(a: &Matrix, b: &[f64]) -> Result<Vec<f64>> {
    if b.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite {
            what: "right-hand side",
        });
    }
    Lu::new(a)?.solve(b)
}

/// Determinant; exactly singular matrices give `0.0` rather than an error.
pub fn determinant(a: &Matrix) -> Result<f64> {
    Ok(Lu::factor(a)?.determinant())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_diagonal() {
        let b = [3.0, -1.0, 2.5];
        assert_eq!(solve_linear(&Matrix::identity(3), &b).unwrap(), b.to_vec());
        let x = solve_linear(&Matrix::from_diagonal(&[2.0, 4.0]), &[2.0, 8.0]).unwrap();
        assert_eq!(x, [1.0, 2.0]);
    }

    #[test]
    fn singular_is_rejected() {
        let a = Matrix::from_rows([[1.0, 2.0], [2.0, 4.0]]).unwrap();
        assert!(matches!(solve_linear(&a, &[1.0, 1.0]), Err(Error::Singular { .. })));
        assert_eq!(determinant(&a).unwrap(), 0.0);
    }

    #[test]
    fn shape_errors() {
        let a = Matrix::from_row_slice(2, 3, &[1.0; 6]).unwrap();
        assert!(matches!(solve_linear(&a, &[1.0, 1.0]), Err(Error::Dimension { .. })));
        assert!(matches!(
            solve_linear(&Matrix::identity(2), &[1.0]),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn determinant_with_pivoting() {
        let a = Matrix::from_rows([[0.0, 1.0], [1.0, 0.0]]).unwrap();
        assert_eq!(determinant(&a).unwrap(), -1.0);
        let b = Matrix::from_rows([[2.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 4.0]]).unwrap();
        assert!((determinant(&b).unwrap() - 18.0).abs() < 1e-12);
    }
}
