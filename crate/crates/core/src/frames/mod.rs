//! Finite frames in `H^n`: synthesis, analysis and frame operators, optimal
//! bounds, canonical duals, Parseval-ization and reconstruction.
//!
//! A frame is an ordered family `{u_i}` of `m` vectors with
//! `A‖u‖² ≤ Σ|⟨u_i|u⟩|² ≤ B‖u‖²`. With `U` the `n x m` synthesis matrix,
//! the frame operator is `S = U U†` and the optimal bounds are its extreme
//! eigenvalues.

mod examples;

pub use examples::{gen_example, onb, ExampleKind};

use serde::Serialize;

use crate::error::{check_len, Error, Result};
use crate::qlinalg::eigen::embedded_eig;
use crate::qlinalg::{herm_eig, mat_fn, op_norm, MatFn, QMatrix, QVector};
use crate::quaternion::Quaternion;

/// A family is a frame when `λ_min(S) > FRAME_THRESHOLD · λ_max(S)`.
pub const FRAME_THRESHOLD: f64 = 1e-10;
/// Default relative tolerance for the tight and Parseval flags.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    dim: usize,
    vectors: Vec<QVector>,
}

/// Optimal bounds and classification of a family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrameReport {
    #[serde(rename = "A")]
    pub lower: f64,
    #[serde(rename = "B")]
    pub upper: f64,
    pub is_frame: bool,
    pub is_tight: bool,
    pub is_parseval: bool,
    pub is_exact: bool,
    /// `B / A`; infinite (serialized as `null`) when not a frame.
    pub condition: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction {
    pub u_hat: QVector,
    /// `‖u − u_hat‖ / ‖u‖`, or the absolute error when `u = 0`.
    pub residual: f64,
}

/// Whether the synthesis operator is onto, with the bounds
/// `(‖T†‖⁻², ‖T‖²)` when it is.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Surjectivity {
    pub is_onto: bool,
    pub lower: f64,
    pub upper: f64,
}

impl Frame {
    pub fn new(dim: usize, vectors: Vec<QVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::BadDimension(0));
        }
        if vectors.is_empty() {
            return Err(Error::InvalidArgument(
                "a frame needs at least one vector".into(),
            ));
        }
        for v in &vectors {
            check_len(dim, v.len())?;
        }
        Ok(Self { dim, vectors })
    }

    /// The columns of `u` as a family in `H^rows`.
    pub fn from_synthesis(u: &QMatrix) -> Result<Self> {
        Self::new(u.rows(), u.columns())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vectors `m`.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[QVector] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<QVector> {
        self.vectors
    }

    /// `n x m` matrix with `u_i` as column `i`.
    pub fn synthesis_matrix(&self) -> QMatrix {
        QMatrix::from_columns(&self.vectors).expect("validated on construction")
    }

    /// `Σ_i u_i q_i`.
    pub fn synthesis(&self, coeffs: &QVector) -> Result<QVector> {
        check_len(self.len(), coeffs.len())?;
        let mut out = QVector::zeros(self.dim);
        for (u, q) in self.vectors.iter().zip(coeffs.iter()) {
            for k in 0..self.dim {
                out[k] += u[k] * *q;
            }
        }
        Ok(out)
    }

    /// `{⟨u_i|u⟩}_i`.
    pub fn analysis(&self, u: &QVector) -> Result<QVector> {
        check_len(self.dim, u.len())?;
        self.vectors.iter().map(|ui| ui.inner(u)).collect()
    }

    /// `Σ_i |⟨u_i|u⟩|²`.
    pub fn frame_sum(&self, u: &QVector) -> Result<f64> {
        Ok(self.analysis(u)?.norm_sqr())
    }

    /// `S = U U†`, symmetrized.
    pub fn frame_operator(&self) -> QMatrix {
        let u = self.synthesis_matrix();
        (&u * &u.dagger()).symmetrized().expect("square")
    }

    pub fn frame_bounds(&self) -> Result<FrameReport> {
        self.frame_bounds_with_tol(DEFAULT_TOL)
    }

    /// Bounds and flags, with `tol` governing the tight and Parseval tests.
    pub fn frame_bounds_with_tol(&self, tol: f64) -> Result<FrameReport> {
        let eig = herm_eig(&self.frame_operator())?;
        let lower = eig.min();
        let upper = eig.max().max(0.0);
        let is_frame = is_frame_spectrum(lower, upper);
        let is_tight = is_frame && (upper - lower).abs() <= tol * upper;
        let is_parseval = is_tight && (lower - 1.0).abs() <= tol;
        Ok(FrameReport {
            lower,
            upper,
            is_frame,
            is_tight,
            is_parseval,
            is_exact: is_frame && self.len() == self.dim,
            condition: if is_frame {
                upper / lower
            } else {
                f64::INFINITY
            },
            tolerance: tol,
        })
    }

    /// Exactness from the definition: a frame that stops being one when any
    /// single vector is removed.
    pub fn is_exact_by_removal(&self) -> Result<bool> {
        if !self.frame_bounds()?.is_frame {
            return Ok(false);
        }
        for k in 0..self.len() {
            let rest: Vec<QVector> = self
                .vectors
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, v)| v.clone())
                .collect();
            if rest.is_empty() {
                continue;
            }
            if Frame::new(self.dim, rest)?.frame_bounds()?.is_frame {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `‖U‖²`, the optimal Bessel bound.
    pub fn bessel_bound(&self) -> Result<f64> {
        Ok(op_norm(&self.synthesis_matrix())?.powi(2))
    }

    /// `{W u_i}` for a `dim x dim` matrix `W`.
    pub fn map(&self, w: &QMatrix) -> Result<Frame> {
        check_len(self.dim, w.cols())?;
        let vectors = self
            .vectors
            .iter()
            .map(|v| w.matvec(v))
            .collect::<Result<Vec<_>>>()?;
        Frame::new(w.rows(), vectors)
    }

    fn require_frame(&self) -> Result<QMatrix> {
        let report = self.frame_bounds()?;
        if !report.is_frame {
            return Err(Error::NotAFrame {
                lower: report.lower,
                upper: report.upper,
            });
        }
        Ok(self.frame_operator())
    }

    /// `{S⁻¹ u_i}`, with bounds `1/B` and `1/A`.
    pub fn canonical_dual(&self) -> Result<Frame> {
        let s = self.require_frame()?;
        self.map(&mat_fn(&s, MatFn::Inverse)?)
    }

    /// `{S^{-1/2} u_i}`, a Parseval frame.
    pub fn parsevalize(&self) -> Result<Frame> {
        let s = self.require_frame()?;
        self.map(&mat_fn(&s, MatFn::InvSqrt)?)
    }

    /// `u_hat = Σ_i (S⁻¹ u_i) ⟨u_i|u⟩`.
    pub fn reconstruct(&self, u: &QVector) -> Result<Reconstruction> {
        check_len(self.dim, u.len())?;
        let dual = self.canonical_dual()?;
        let coeffs = self.analysis(u)?;
        let u_hat = dual.synthesis(&coeffs)?;
        let err = (u - &u_hat).norm();
        let norm = u.norm();
        Ok(Reconstruction {
            residual: if norm > 0.0 { err / norm } else { err },
            u_hat,
        })
    }

    /// `{u_i q_i}`.
    pub fn scale(&self, scalars: &[Quaternion]) -> Result<Frame> {
        check_len(self.len(), scalars.len())?;
        if let Some(index) = scalars.iter().position(|q| q.abs() == 0.0) {
            return Err(Error::ZeroScalar { index });
        }
        let vectors = self
            .vectors
            .iter()
            .zip(scalars)
            .map(|(v, q)| v.mul_right(*q))
            .collect();
        Frame::new(self.dim, vectors)
    }

    /// `T† = U† S⁻¹`, the right inverse of the synthesis operator.
    pub fn pseudo_inverse(&self) -> Result<QMatrix> {
        let s = self.require_frame()?;
        let inv = mat_fn(&s, MatFn::Inverse)?;
        self.synthesis_matrix().dagger().matmul(&inv)
    }

    pub fn surjectivity_check(&self) -> Result<Surjectivity> {
        let upper = self.bessel_bound()?;
        let ce = embedded_eig(&self.frame_operator())?;
        let lmax = *ce.values.last().unwrap();
        let rank = ce
            .values
            .iter()
            .filter(|&&l| lmax > 0.0 && l > FRAME_THRESHOLD * lmax)
            .count();
        if rank < 2 * self.dim {
            return Ok(Surjectivity {
                is_onto: false,
                lower: 0.0,
                upper,
            });
        }
        let pinv_norm = op_norm(&self.pseudo_inverse()?)?;
        Ok(Surjectivity {
            is_onto: true,
            lower: pinv_norm.powi(-2),
            upper,
        })
    }
}

/// `(min |q_i|, max |q_i|)` of a scalar sequence.
pub fn scalar_range(scalars: &[Quaternion]) -> (f64, f64) {
    scalars.iter().fold((f64::INFINITY, 0.0_f64), |(a, b), q| {
        let m = q.abs();
        (a.min(m), b.max(m))
    })
}

pub(crate) fn is_frame_spectrum(lower: f64, upper: f64) -> bool {
    upper > 0.0 && lower > FRAME_THRESHOLD * upper
}
