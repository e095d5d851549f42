use std::ops::{Add, Index, IndexMut, Sub};

use crate::error::{check_len, Result};
use crate::quaternion::Quaternion;

/// Vector in the right quaternionic module `H^n`; scalars act on the right.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct QVector(Vec<Quaternion>);

impl QVector {
    pub fn new(entries: Vec<Quaternion>) -> Self {
        Self(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![Quaternion::ZERO; n])
    }

    /// Standard basis vector `e_k` (zero-based `k`).
    pub fn basis(n: usize, k: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[k] = Quaternion::ONE;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Quaternion] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Quaternion> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Quaternion> {
        self.0.iter()
    }

    /// `Σ_k conj(self_k) other_k`; conjugate-linear in the left slot and
    /// right-linear in the right slot.
    pub fn inner(&self, other: &QVector) -> Result<Quaternion> {
        check_len(self.len(), other.len())?;
        Ok(self
            .0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.conj() * *b)
            .sum())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|q| q.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Right scalar multiplication `u q`.
    pub fn mul_right(&self, q: Quaternion) -> QVector {
        Self(self.0.iter().map(|a| *a * q).collect())
    }

    /// Left scalar multiplication `q u`. Not a module operation; used for
    /// building test data such as `q·Identity`.
    pub fn mul_left(&self, q: Quaternion) -> QVector {
        Self(self.0.iter().map(|a| q * *a).collect())
    }

    pub fn scaled(&self, s: f64) -> QVector {
        Self(self.0.iter().map(|a| *a * s).collect())
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|q| q.is_finite())
    }

    pub fn max_abs_diff(&self, other: &QVector) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(0.0_f64, |m, (a, b)| m.max(a.max_abs_diff(*b)))
    }
}

impl From<Vec<Quaternion>> for QVector {
    fn from(v: Vec<Quaternion>) -> Self {
        Self(v)
    }
}

impl FromIterator<Quaternion> for QVector {
    fn from_iter<I: IntoIterator<Item = Quaternion>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl Index<usize> for QVector {
    type Output = Quaternion;
    fn index(&self, i: usize) -> &Quaternion {
        &self.0[i]
    }
}

impl IndexMut<usize> for QVector {
    fn index_mut(&mut self, i: usize) -> &mut Quaternion {
        &mut self.0[i]
    }
}

impl<'a> Add<&'a QVector> for &'a QVector {
    type Output = QVector;
    fn add(self, r: &QVector) -> QVector {
        assert_eq!(self.len(), r.len(), "vector length mismatch");
        self.0
            .iter()
            .zip(r.0.iter())
            .map(|(a, b)| *a + *b)
            .collect()
    }
}

impl<'a> Sub<&'a QVector> for &'a QVector {
    type Output = QVector;
    fn sub(self, r: &QVector) -> QVector {
        assert_eq!(self.len(), r.len(), "vector length mismatch");
        self.0
            .iter()
            .zip(r.0.iter())
            .map(|(a, b)| *a - *b)
            .collect()
    }
}
