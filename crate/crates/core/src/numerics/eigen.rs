//! Eigenvalues of small dense matrices.
//!
//! General matrices go through diagonal balancing, reduction to upper
//! Hessenberg form by stabilized elimination, and the Francis double-shift
//! QR iteration. Symmetric matrices use cyclic Jacobi rotations.

use alloc::vec;
use alloc::vec::Vec;

use libm::{fabs, sqrt};
use num_complex::Complex64;

use super::Matrix;
use crate::error::{Error, Result};

const MAX_QR_ITERATIONS: usize = 60;
const MAX_JACOBI_SWEEPS: usize = 100;

/// Eigenvalues of a real matrix. Complex values come in conjugate pairs.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComplexSpectrum {
    values: Vec<Complex64>,
}

impl ComplexSpectrum {
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max_real_part(&self) -> f64 {
        self.values.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max)
    }

    /// Smallest `|Im λ|` over the spectrum.
    pub fn min_abs_imag(&self) -> f64 {
        self.values.iter().map(|z| z.im.abs()).fold(f64::INFINITY, f64::min)
    }

    pub fn max_abs_real(&self) -> f64 {
        self.values.iter().map(|z| z.re.abs()).fold(0.0, f64::max)
    }

    pub fn sum(&self) -> Complex64 {
        self.values.iter().sum()
    }

    pub fn product(&self) -> Complex64 {
        self.values.iter().product()
    }
}

impl From<Vec<Complex64>> for ComplexSpectrum {
    fn from(values: Vec<Complex64>) -> Self {
        ComplexSpectrum { values }
    }
}

/// 1-based square scratch array, matching the textbook formulation of the
/// Hessenberg QR sweep.
struct Work {
    n: usize,
    a: Vec<f64>,
}

impl Work {
    fn new(m: &Matrix) -> Work {
        let n = m.rows();
        let mut a = vec![0.0; (n + 1) * (n + 1)];
        for i in 0..n {
            for j in 0..n {
                a[(i + 1) * (n + 1) + j + 1] = m[(i, j)];
            }
        }
        Work { n, a }
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * (self.n + 1) + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * (self.n + 1) + j] = v;
    }

    #[inline]
    fn add(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * (self.n + 1) + j] += v;
    }

    fn swap(&mut self, (i1, j1): (usize, usize), (i2, j2): (usize, usize)) {
        let w = self.n + 1;
        self.a.swap(i1 * w + j1, i2 * w + j2);
    }

    fn balance(&mut self) {
        const RADIX: f64 = 2.0;
        const SQRDX: f64 = RADIX * RADIX;
        let n = self.n;
        let mut done = false;
        while !done {
            done = true;
            for i in 1..=n {
                let mut r = 0.0;
                let mut c = 0.0;
                for j in 1..=n {
                    if j != i {
                        c += fabs(self.get(j, i));
                        r += fabs(self.get(i, j));
                    }
                }
                if c == 0.0 || r == 0.0 {
                    continue;
                }
                let s = c + r;
                let mut f = 1.0;
                let mut g = r / RADIX;
                while c < g {
                    f *= RADIX;
                    c *= SQRDX;
                }
                g = r * RADIX;
                while c > g {
                    f /= RADIX;
                    c /= SQRDX;
                }
                if (c + r) / f < 0.95 * s {
                    done = false;
                    let g = 1.0 / f;
                    for j in 1..=n {
                        self.set(i, j, self.get(i, j) * g);
                        self.set(j, i, self.get(j, i) * f);
                    }
                }
            }
        }
    }

    fn reduce_to_hessenberg(&mut self) {
        let n = self.n;
        for m in 2..n {
            let mut x = 0.0;
            let mut piv = m;
            for j in m..=n {
                if fabs(self.get(j, m - 1)) > fabs(x) {
                    x = self.get(j, m - 1);
                    piv = j;
                }
            }
            if piv != m {
                for j in (m - 1)..=n {
                    self.swap((piv, j), (m, j));
                }
                for j in 1..=n {
                    self.swap((j, piv), (j, m));
                }
            }
            if x != 0.0 {
                for i in (m + 1)..=n {
                    let mut y = self.get(i, m - 1);
                    if y != 0.0 {
                        y /= x;
                        self.set(i, m - 1, y);
                        for j in m..=n {
                            self.add(i, j, -y * self.get(m, j));
                        }
                        for j in 1..=n {
                            self.add(j, m, y * self.get(j, i));
                        }
                    }
                }
            }
        }
        for i in 1..=n {
            for j in 1..i.saturating_sub(1) {
                self.set(i, j, 0.0);
            }
        }
    }

    fn hessenberg_qr(&mut self) -> Result<Vec<Complex64>> {
        let n = self.n;
        let mut wr = vec![0.0; n + 1];
        let mut wi = vec![0.0; n + 1];
        let mut anorm = 0.0;
        for i in 1..=n {
            for j in i.saturating_sub(1).max(1)..=n {
                anorm += fabs(self.get(i, j));
            }
        }
        let mut nn = n;
        let mut t = 0.0;
        let (mut p, mut q, mut r): (f64, f64, f64);
        let (mut x, mut y, mut z, mut w);
        while nn >= 1 {
            let mut its = 0;
            loop {
                let mut l = nn;
                while l >= 2 {
                    let mut s = fabs(self.get(l - 1, l - 1)) + fabs(self.get(l, l));
                    if s == 0.0 {
                        s = anorm;
                    }
                    if fabs(self.get(l, l - 1)) + s == s {
                        self.set(l, l - 1, 0.0);
                        break;
                    }
                    l -= 1;
                }
                x = self.get(nn, nn);
                if l == nn {
                    wr[nn] = x + t;
                    wi[nn] = 0.0;
                    nn -= 1;
                } else {
                    y = self.get(nn - 1, nn - 1);
                    w = self.get(nn, nn - 1) * self.get(nn - 1, nn);
                    if l == nn - 1 {
                        p = 0.5 * (y - x);
                        q = p * p + w;
                        z = sqrt(fabs(q));
                        x += t;
                        if q >= 0.0 {
                            z = p + sign(z, p);
                            wr[nn - 1] = x + z;
                            wr[nn] = x + z;
                            if z != 0.0 {
                                wr[nn] = x - w / z;
                            }
                            wi[nn - 1] = 0.0;
                            wi[nn] = 0.0;
                        } else {
                            wr[nn - 1] = x + p;
                            wr[nn] = x + p;
                            wi[nn - 1] = -z;
                            wi[nn] = z;
                        }
                        nn -= 2;
                    } else {
                        if its == MAX_QR_ITERATIONS {
                            return Err(Error::NoConvergence {
                                op: "eig_general",
                                detail: alloc::format!("no deflation of row {nn} after {MAX_QR_ITERATIONS} QR sweeps"),
                            });
                        }
                        if its % 10 == 0 && its > 0 {
                            // exceptional shift
                            t += x;
                            for i in 1..=nn {
                                self.add(i, i, -x);
                            }
                            let s = fabs(self.get(nn, nn - 1)) + fabs(self.get(nn - 1, nn - 2));
                            x = 0.75 * s;
                            y = x;
                            w = -0.4375 * s * s;
                        }
                        its += 1;
                        let mut m = nn - 2;
                        loop {
                            z = self.get(m, m);
                            r = x - z;
                            let s = y - z;
                            p = (r * s - w) / self.get(m + 1, m) + self.get(m, m + 1);
                            q = self.get(m + 1, m + 1) - z - r - s;
                            r = self.get(m + 2, m + 1);
                            let s = fabs(p) + fabs(q) + fabs(r);
                            p /= s;
                            q /= s;
                            r /= s;
                            if m == l {
                                break;
                            }
                            let u = fabs(self.get(m, m - 1)) * (fabs(q) + fabs(r));
                            let v = fabs(p) * (fabs(self.get(m - 1, m - 1)) + fabs(z) + fabs(self.get(m + 1, m + 1)));
                            if u + v == v {
                                break;
                            }
                            m -= 1;
                        }
                        for i in (m + 2)..=nn {
                            self.set(i, i - 2, 0.0);
                            if i != m + 2 {
                                self.set(i, i - 3, 0.0);
                            }
                        }
                        let mut k = m;
                        while k < nn {
                            if k != m {
                                p = self.get(k, k - 1);
                                q = self.get(k + 1, k - 1);
                                r = 0.0;
                                if k != nn - 1 {
                                    r = self.get(k + 2, k - 1);
                                }
                                x = fabs(p) + fabs(q) + fabs(r);
                                if x != 0.0 {
                                    p /= x;
                                    q /= x;
                                    r /= x;
                                }
                            }
                            let s = sign(sqrt(p * p + q * q + r * r), p);
                            if s != 0.0 {
                                if k == m {
                                    if l != m {
                                        self.set(k, k - 1, -self.get(k, k - 1));
                                    }
                                } else {
                                    self.set(k, k - 1, -s * x);
                                }
                                p += s;
                                x = p / s;
                                y = q / s;
                                z = r / s;
                                q /= p;
                                r /= p;
                                for j in k..=nn {
                                    p = self.get(k, j) + q * self.get(k + 1, j);
                                    if k != nn - 1 {
                                        p += r * self.get(k + 2, j);
                                        self.add(k + 2, j, -p * z);
                                    }
                                    self.add(k + 1, j, -p * y);
                                    self.add(k, j, -p * x);
                                }
                                let mmin = if nn < k + 3 { nn } else { k + 3 };
                                for i in l..=mmin {
                                    p = x * self.get(i, k) + y * self.get(i, k + 1);
                                    if k != nn - 1 {
                                        p += z * self.get(i, k + 2);
                                        self.add(i, k + 2, -p * r);
                                    }
                                    self.add(i, k + 1, -p * q);
                                    self.add(i, k, -p);
                                }
                            }
                            k += 1;
                        }
                    }
                }
                if nn < 2 || l + 1 >= nn {
                    break;
                }
            }
        }
        Ok((1..=n).map(|i| Complex64::new(wr[i], wi[i])).collect())
    }
}

#[inline]
fn sign(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        fabs(a)
    } else {
        -fabs(a)
    }
}

/// All eigenvalues of a square real matrix.
///
/// Output is ordered by decreasing real part, then decreasing imaginary part.
pub fn eig_general(a: &Matrix) -> Result<ComplexSpectrum> {
    if !a.is_square() {
        return Err(Error::dimension("eig_general", "square matrix", a.shape_str()));
    }
    if !a.all_finite() {
        return Err(Error::NonFinite { what: "matrix" });
    }
    let n = a.rows();
    let mut values = if n == 1 {
        vec![Complex64::new(a[(0, 0)], 0.0)]
    } else {
        let mut work = Work::new(a);
        work.balance();
        work.reduce_to_hessenberg();
        work.hessenberg_qr()?
    };
    values.sort_by(|u, v| v.re.total_cmp(&u.re).then(v.im.total_cmp(&u.im)));
    Ok(ComplexSpectrum { values })
}

/// Eigenvalues of a symmetric matrix in ascending order.
///
/// Only the lower triangle is read.
pub fn symmetric_eigenvalues(a: &Matrix) -> Result<Vec<f64>> {
    if !a.is_square() {
        return Err(Error::dimension(
            "symmetric_eigenvalues",
            "square matrix",
            a.shape_str(),
        ));
    }
    let n = a.rows();
    let mut s = a.clone();
    for i in 0..n {
        for j in 0..i {
            s[(j, i)] = s[(i, j)];
        }
    }
    let scale = s.max_abs();
    if scale == 0.0 {
        return Ok(vec![0.0; n]);
    }
    for _ in 0..MAX_JACOBI_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| s[(i, j)] * s[(i, j)])
            .sum();
        if sqrt(off) <= 1e-15 * scale {
            let mut d: Vec<f64> = (0..n).map(|i| s[(i, i)]).collect();
            d.sort_by(f64::total_cmp);
            return Ok(d);
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = s[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (s[(q, q)] - s[(p, p)]) / (2.0 * apq);
                let t = sign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0));
                let c = 1.0 / sqrt(t * t + 1.0);
                let sn = t * c;
                for k in 0..n {
                    let skp = s[(k, p)];
                    let skq = s[(k, q)];
                    s[(k, p)] = c * skp - sn * skq;
                    s[(k, q)] = sn * skp + c * skq;
                }
                for k in 0..n {
                    let spk = s[(p, k)];
                    let sqk = s[(q, k)];
                    s[(p, k)] = c * spk - sn * sqk;
                    s[(q, k)] = sn * spk + c * sqk;
                }
            }
        }
    }
    Err(Error::NoConvergence {
        op: "symmetric_eigenvalues",
        detail: alloc::format!("off-diagonal mass remains after {MAX_JACOBI_SWEEPS} sweeps"),
    })
}
