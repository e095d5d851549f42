//! Right-quaternionic vectors and matrices, the complex-adjoint embedding,
//! and the Hermitian spectral routines used by the frame computations.

pub mod eigen;
pub mod embed;
mod matrix;
mod vector;

pub use eigen::{herm_eig, mat_fn, min_positive_singular_value, op_norm, HermEig, MatFn};
pub use embed::{embed, embed_vector, unembed, unembed_vector, ComplexAdjoint};
pub use matrix::QMatrix;
pub use vector::QVector;
