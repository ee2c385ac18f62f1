//! Small dense n-by-n tensors (n = 2 or 3) with the Frobenius pairing.
//!
//! These back the constitutive-law certification machinery; the grid solver
//! works on flat component arrays and never touches this type.

use std::ops::{Add, Mul, Sub};

/// A real n-by-n tensor, n in {2, 3}. Entries beyond `n` stay zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tensor2 {
    n: usize,
    a: [[f64; 3]; 3],
}

impl Tensor2 {
    pub fn zeros(n: usize) -> Self {
        assert!(n == 2 || n == 3, "tensor dimension must be 2 or 3");
        Tensor2 { n, a: [[0.0; 3]; 3] }
    }

    pub fn identity(n: usize) -> Self {
        let mut t = Tensor2::zeros(n);
        for i in 0..n {
            t.a[i][i] = 1.0;
        }
        t
    }

    pub fn from_rows(rows: &[&[f64]]) -> Self {
        let n = rows.len();
        let mut t = Tensor2::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "tensor rows must be square");
            for (j, &v) in row.iter().enumerate() {
                t.a[i][j] = v;
            }
        }
        t
    }

    /// 2x2 shorthand.
    pub fn mat2(a11: f64, a12: f64, a21: f64, a22: f64) -> Self {
        Tensor2::from_rows(&[&[a11, a12], &[a21, a22]])
    }

    pub fn diag(entries: &[f64]) -> Self {
        let mut t = Tensor2::zeros(entries.len());
        for (i, &v) in entries.iter().enumerate() {
            t.a[i][i] = v;
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        assert!(i < self.n && j < self.n);
        self.a[i][j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Tensor2::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.a[i][j] = self.a[j][i];
            }
        }
        t
    }

    /// Symmetric part `(Q + Q^T) / 2`.
    pub fn symmetrize(&self) -> Self {
        let mut t = Tensor2::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.a[i][j] = 0.5 * (self.a[i][j] + self.a[j][i]);
            }
        }
        t
    }

    /// Frobenius inner product `sum_ij Q_ij P_ij`.
    pub fn dot(&self, other: &Tensor2) -> f64 {
        debug_assert_eq!(self.n, other.n);
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                s += self.a[i][j] * other.a[i][j];
            }
        }
        s
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Matrix product.
    pub fn matmul(&self, other: &Tensor2) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut t = Tensor2::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut s = 0.0;
                for k in 0..self.n {
                    s += self.a[i][k] * other.a[k][j];
                }
                t.a[i][j] = s;
            }
        }
        t
    }

    /// Conjugation `R Q R^T` by a rotation (or any) matrix.
    pub fn rotate(&self, r: &Tensor2) -> Self {
        r.matmul(self).matmul(&r.transpose())
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if (self.a[i][j] - self.a[j][i]).abs() > tol {
                    return false;
                }
            }
        }
        true
    }
}

impl Add for Tensor2 {
    type Output = Tensor2;
    fn add(self, rhs: Tensor2) -> Tensor2 {
        debug_assert_eq!(self.n, rhs.n);
        let mut t = self;
        for i in 0..t.n {
            for j in 0..t.n {
                t.a[i][j] += rhs.a[i][j];
            }
        }
        t
    }
}

impl Sub for Tensor2 {
    type Output = Tensor2;
    fn sub(self, rhs: Tensor2) -> Tensor2 {
        debug_assert_eq!(self.n, rhs.n);
        let mut t = self;
        for i in 0..t.n {
            for j in 0..t.n {
                t.a[i][j] -= rhs.a[i][j];
            }
        }
        t
    }
}

impl Mul<Tensor2> for f64 {
    type Output = Tensor2;
    fn mul(self, rhs: Tensor2) -> Tensor2 {
        let mut t = rhs;
        for i in 0..t.n {
            for j in 0..t.n {
                t.a[i][j] *= self;
            }
        }
        t
    }
}

/// Planar rotation by `theta`, embedded in dimension `n` (acts on the first
/// two axes when n = 3).
pub fn rotation(n: usize, theta: f64) -> Tensor2 {
    let (s, c) = theta.sin_cos();
    let mut r = Tensor2::identity(n);
    r.set(0, 0, c);
    r.set(0, 1, -s);
    r.set(1, 0, s);
    r.set(1, 1, c);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetrize_definition() {
        let q = Tensor2::mat2(0.0, 1.0, 0.0, 0.0);
        assert_eq!(q.symmetrize(), Tensor2::mat2(0.0, 0.5, 0.5, 0.0));

        let q = Tensor2::mat2(1.0, 2.0, 4.0, 3.0);
        assert_eq!(q.symmetrize(), Tensor2::mat2(1.0, 3.0, 3.0, 3.0));
    }

    #[test]
    fn symmetrize_fixes_symmetric_tensors() {
        let q = Tensor2::mat2(1.0, -0.3, -0.3, 2.0);
        assert_eq!(q.symmetrize(), q);
        // Idempotent bit for bit.
        let r = Tensor2::mat2(0.1, 0.7, -2.0, 0.4).symmetrize();
        assert_eq!(r.symmetrize(), r);
    }

    #[test]
    fn symmetrized_output_is_symmetric_exactly() {
        let q = Tensor2::from_rows(&[&[1.0, 2.0, 3.0], &[-1.0, 0.5, 4.0], &[9.0, -2.0, 0.0]]);
        let s = q.symmetrize();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(s.get(i, j), s.get(j, i));
            }
        }
    }

    #[test]
    fn frobenius_product_positive_definite() {
        let q = Tensor2::mat2(1.0, -2.0, 0.5, 3.0);
        assert!(q.dot(&q) > 0.0);
        assert_eq!(Tensor2::zeros(2).dot(&Tensor2::zeros(2)), 0.0);
        let p = Tensor2::mat2(0.0, 1.0, 1.0, 0.0);
        assert_eq!(q.dot(&p), p.dot(&q));
    }

    #[test]
    fn rotation_is_orthogonal() {
        for &n in &[2usize, 3] {
            let r = rotation(n, 0.7);
            let rrt = r.matmul(&r.transpose());
            for i in 0..n {
                for j in 0..n {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!((rrt.get(i, j) - expect).abs() < 1e-15);
                }
            }
        }
    }
}
