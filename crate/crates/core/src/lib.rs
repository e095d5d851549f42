//! Frame theory on finite-dimensional right quaternionic Hilbert spaces.
//!
//! The crate is organized bottom-up:
//!
//! - [`quaternion`]: the scalar algebra.
//! - [`qlinalg`]: vectors and matrices over the quaternions, the
//!   complex-adjoint embedding and a Hermitian Jacobi eigensolver.
//! - [`frames`]: frame operators, optimal bounds, canonical duals,
//!   Parseval-ization, reconstruction and the standard example families.
//! - [`perturbation`]: Paley–Wiener type stability certificates.
//! - [`cli`]: the `qframe` command-line front end and its file format.

pub mod cli;
pub mod error;
pub mod frames;
pub mod perturbation;
pub mod qlinalg;
pub mod quaternion;
pub mod random;

pub use error::{Error, Result};
pub use frames::{Frame, FrameReport};
pub use perturbation::{PerturbReport, PerturbStatus};
pub use qlinalg::{QMatrix, QVector};
pub use quaternion::Quaternion;
