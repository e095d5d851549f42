//! Complex-adjoint (symplectic) image of quaternionic matrices.
//!
//! With `q = (w + x i) + (y + z i) j`, a matrix splits as `M = M1 + M2 j`
//! and is represented by the `2n x 2m` complex block matrix
//!
//! ```text
//! [  M1        M2      ]
//! [ -conj(M2)  conj(M1) ]
//! ```
//!
//! The map is a homomorphism of unital *-algebras. A vector `x = x1 + x2 j`
//! is carried to the first block column `(x1; -conj(x2))`.

use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{check_len, Error, Result};
use crate::qlinalg::{QMatrix, QVector};
use crate::quaternion::Quaternion;

/// Relative tolerance on the block-symmetry residual accepted by [`unembed`].
pub const TOL_STRUCT: f64 = 1e-10;

/// Dense complex matrix, row-major. Produced by [`embed`] but also used as
/// general complex workspace by the eigensolver.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexAdjoint {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexAdjoint {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        check_len(rows * cols, data.len())?;
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn matmul(&self, other: &ComplexAdjoint) -> Result<ComplexAdjoint> {
        check_len(self.cols, other.rows)?;
        let mut out = ComplexAdjoint::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other[(l, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        check_len(self.cols, x.len())?;
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn conj_transpose(&self) -> ComplexAdjoint {
        let mut out = ComplexAdjoint::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn add(&self, other: &ComplexAdjoint) -> Result<ComplexAdjoint> {
        check_len(self.data.len(), other.data.len())?;
        Ok(ComplexAdjoint {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &ComplexAdjoint) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).norm()))
    }

    /// Frobenius norm of the failure of the quaternionic block symmetry:
    /// `X21 + conj(X12)` and `X22 − conj(X11)` should both vanish.
    /// Infinite when the shape is not `2n x 2m`.
    pub fn structure_residual(&self) -> f64 {
        if !self.rows.is_multiple_of(2) || !self.cols.is_multiple_of(2) {
            return f64::INFINITY;
        }
        let (n, m) = (self.rows / 2, self.cols / 2);
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..m {
                acc += (self[(n + i, j)] + self[(i, m + j)].conj()).norm_sqr();
                acc += (self[(n + i, m + j)] - self[(i, j)].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }
}

impl Index<(usize, usize)> for ComplexAdjoint {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexAdjoint {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

pub fn embed(m: &QMatrix) -> ComplexAdjoint {
    let (n, k) = (m.rows(), m.cols());
    let mut x = ComplexAdjoint::zeros(2 * n, 2 * k);
    for i in 0..n {
        for j in 0..k {
            let (a, b) = m[(i, j)].to_complex_pair();
            x[(i, j)] = a;
            x[(i, k + j)] = b;
            x[(n + i, j)] = -b.conj();
            x[(n + i, k + j)] = a.conj();
        }
    }
    x
}

/// Left inverse of [`embed`]. Averages the redundant blocks after checking
/// that the block symmetry holds to `TOL_STRUCT · ‖X‖_F`.
pub fn unembed(x: &ComplexAdjoint) -> Result<QMatrix> {
    unembed_with_tol(x, TOL_STRUCT)
}

pub fn unembed_with_tol(x: &ComplexAdjoint, tol: f64) -> Result<QMatrix> {
    let residual = x.structure_residual();
    if residual.is_nan() || residual > tol * x.frobenius_norm() {
        return Err(Error::StructureViolation { residual });
    }
    let (n, k) = (x.rows() / 2, x.cols() / 2);
    let mut m = QMatrix::zeros(n, k);
    for i in 0..n {
        for j in 0..k {
            let a = (x[(i, j)] + x[(n + i, k + j)].conj()) * 0.5;
            let b = (x[(i, k + j)] - x[(n + i, j)].conj()) * 0.5;
            m[(i, j)] = Quaternion::from_complex_pair(a, b);
        }
    }
    Ok(m)
}

/// `x = x1 + x2 j  ↦  (x1; −conj(x2))`.
pub fn embed_vector(x: &QVector) -> Vec<Complex64> {
    let n = x.len();
    let mut out = vec![Complex64::new(0.0, 0.0); 2 * n];
    for (k, q) in x.iter().enumerate() {
        let (a, b) = q.to_complex_pair();
        out[k] = a;
        out[n + k] = -b.conj();
    }
    out
}

/// Inverse of [`embed_vector`]; any `2n` complex vector is accepted.
pub fn unembed_vector(c: &[Complex64]) -> QVector {
    let n = c.len() / 2;
    (0..n)
        .map(|k| Quaternion::from_complex_pair(c[k], -c[n + k].conj()))
        .collect()
}
