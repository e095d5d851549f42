//! Seeded Gaussian generators for quaternions, vectors, matrices, frames
//! and unitaries.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::frames::Frame;
use crate::qlinalg::{QMatrix, QVector};
use crate::quaternion::Quaternion;

/// Quaternion with four independent standard normal components.
pub fn gaussian_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    Quaternion::new(
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
    )
}

pub fn gaussian_qvector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> QVector {
    (0..n).map(|_| gaussian_quaternion(rng)).collect()
}

/// Uniform on the unit sphere of `H^n` (normalized Gaussian over the `4n`
/// real coordinates).
pub fn unit_qvector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> QVector {
    loop {
        let v = gaussian_qvector(rng, n);
        let norm = v.norm();
        if norm > 0.0 {
            return v.scaled(1.0 / norm);
        }
    }
}

pub fn gaussian_qmatrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> QMatrix {
    let data = (0..rows * cols).map(|_| gaussian_quaternion(rng)).collect();
    QMatrix::from_row_major(rows, cols, data).expect("shape matches data length")
}

/// `m` Gaussian vectors in `H^n`.
pub fn gaussian_frame<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Frame {
    let vectors = (0..m).map(|_| gaussian_qvector(rng, n)).collect();
    Frame::new(n, vectors).expect("generated vectors share the ambient dimension")
}

/// Quaternionic unitary from Gram–Schmidt on the columns of a Gaussian
/// matrix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> QMatrix {
    let mut basis: Vec<QVector> = Vec::with_capacity(n);
    while basis.len() < n {
        let mut v = gaussian_qvector(rng, n);
        for _ in 0..2 {
            for u in &basis {
                let c = u.inner(&v).expect("same length");
                v = &v - &u.mul_right(c);
            }
        }
        let norm = v.norm();
        if norm > 1e-8 {
            basis.push(v.scaled(1.0 / norm));
        }
    }
    QMatrix::from_columns(&basis).expect("n >= 1 columns of length n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let w = random_unitary(&mut rng, 5);
        let id = QMatrix::identity(5);
        assert!((&w.dagger() * &w).max_abs_diff(&id) <= 1e-12);
        assert!((&w * &w.dagger()).max_abs_diff(&id) <= 1e-12);
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = gaussian_qvector(&mut ChaCha8Rng::seed_from_u64(9), 4);
        let b = gaussian_qvector(&mut ChaCha8Rng::seed_from_u64(9), 4);
        assert_eq!(a, b);
        let u = unit_qvector(&mut ChaCha8Rng::seed_from_u64(9), 4);
        assert!((u.norm() - 1.0).abs() < 1e-15);
    }
}
