use std::ops::{Add, Index, IndexMut, Mul, Sub};

use crate::error::{check_len, Error, Result};
use crate::qlinalg::QVector;
use crate::quaternion::Quaternion;

/// Dense `rows x cols` quaternionic matrix, row-major. Acts on column
/// vectors from the left, so `M(x q) = (M x) q`.
#[derive(Debug, Clone, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QMatrix {
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Quaternion>) -> Result<Self> {
        check_len(rows * cols, data.len())?;
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Quaternion::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Quaternion::ONE)
    }

    /// `q · I_n`.
    pub fn scalar(n: usize, q: Quaternion) -> Self {
        Self::diag(&vec![q; n])
    }

    pub fn diag(d: &[Quaternion]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (k, q) in d.iter().enumerate() {
            m[(k, k)] = *q;
        }
        m
    }

    pub fn real_diag(d: &[f64]) -> Self {
        Self::diag(&d.iter().map(|&x| Quaternion::real(x)).collect::<Vec<_>>())
    }

    /// Matrix whose `k`-th column is `columns[k]`. All columns must share
    /// a length; an empty slice gives an `n x 0` matrix only if `rows` is
    /// known, so it is rejected.
    pub fn from_columns(columns: &[QVector]) -> Result<Self> {
        let first = columns.first().ok_or(Error::BadDimension(0))?;
        let rows = first.len();
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            check_len(rows, c.len())?;
            for i in 0..rows {
                m[(i, j)] = c[i];
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Quaternion] {
        &self.data
    }

    pub fn column(&self, j: usize) -> QVector {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn columns(&self) -> Vec<QVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// `(M x)_k = Σ_l M_kl x_l`.
    pub fn matvec(&self, x: &QVector) -> Result<QVector> {
        check_len(self.cols, x.len())?;
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(x.iter())
                    .map(|(a, b)| *a * *b)
                    .sum()
            })
            .collect())
    }

    pub fn matmul(&self, other: &QMatrix) -> Result<QMatrix> {
        check_len(self.cols, other.rows)?;
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a == Quaternion::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other[(l, j)];
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> QMatrix {
        let mut out = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// `(M + M†) / 2`.
    pub fn symmetrized(&self) -> Result<QMatrix> {
        check_len(self.rows, self.cols)?;
        let d = self.dagger();
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(d.data.iter())
                .map(|(a, b)| (*a + *b) * 0.5)
                .collect(),
        })
    }

    pub fn scaled(&self, s: f64) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|q| *q * s).collect(),
        }
    }

    /// Every entry multiplied by `q` on the right.
    pub fn mul_right(&self, q: Quaternion) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| *a * q).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖M − M†‖_F / ‖M‖_F`, zero for the zero matrix.
    pub fn hermitian_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let norm = self.frobenius_norm();
        if norm == 0.0 {
            return 0.0;
        }
        let d = self.dagger();
        let diff: f64 = self
            .data
            .iter()
            .zip(d.data.iter())
            .map(|(a, b)| (*a - *b).norm_sqr())
            .sum();
        diff.sqrt() / norm
    }

    pub fn max_abs_diff(&self, other: &QMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(other.data.iter())
            .fold(0.0_f64, |m, (a, b)| m.max(a.max_abs_diff(*b)))
    }

    fn zip_with(
        &self,
        other: &QMatrix,
        f: impl Fn(Quaternion, Quaternion) -> Quaternion,
    ) -> QMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix shape mismatch"
        );
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| f(*a, *b))
                .collect(),
        }
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;
    fn index(&self, (i, j): (usize, usize)) -> &Quaternion {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Quaternion {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Add<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn add(self, r: &QMatrix) -> QMatrix {
        self.zip_with(r, |a, b| a + b)
    }
}

impl<'a> Sub<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn sub(self, r: &QMatrix) -> QMatrix {
        self.zip_with(r, |a, b| a - b)
    }
}

/// Panics on a shape mismatch; use [`QMatrix::matmul`] for the checked form.
impl<'a> Mul<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn mul(self, r: &QMatrix) -> QMatrix {
        self.matmul(r).expect("matrix shape mismatch")
    }
}
