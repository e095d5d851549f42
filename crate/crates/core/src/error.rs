use thiserror::Error;

/// Errors produced by the quaternionic linear algebra and frame routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a zero quaternion")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("complex matrix lost its quaternionic block structure (residual {residual:e})")]
    StructureViolation { residual: f64 },
    #[error("matrix is not Hermitian (relative residual {residual:e})")]
    NotHermitian { residual: f64 },
    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },
    #[error("matrix is not positive definite (smallest eigenvalue {min_eigenvalue:e})")]
    NotPositiveDefinite { min_eigenvalue: f64 },
    #[error("family is not a frame (lower bound {lower:e}, upper bound {upper:e})")]
    NotAFrame { lower: f64, upper: f64 },
    #[error("scalar at position {index} has zero modulus")]
    ZeroScalar { index: usize },
    #[error("bad dimension {0}")]
    BadDimension(usize),
    #[error("perturbation is inadmissible: lambda + mu / sqrt(A) = {0} >= 1")]
    InadmissiblePerturbation(f64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for failures of the numerics rather than of the input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::StructureViolation { .. }
                | Error::ConvergenceFailure { .. }
                | Error::NotPositiveDefinite { .. }
                | Error::NotHermitian { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
