//! Spectral engine: cyclic complex Jacobi on the complex-adjoint image of a
//! Hermitian quaternionic matrix, plus the matrix functions built on it.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qlinalg::embed::{embed, unembed, unembed_vector, ComplexAdjoint};
use crate::qlinalg::{QMatrix, QVector};

/// Relative Hermiticity tolerance accepted by the spectral routines.
pub const TOL_HERM: f64 = 1e-10;
/// Positive-definiteness threshold relative to the largest eigenvalue.
pub const TOL_PD: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 30;
/// Off-diagonal Frobenius norm at which a Jacobi run counts as converged,
/// relative to the Frobenius norm of the input.
pub const JACOBI_TOL: f64 = 1e-13;

/// Eigen-decomposition of a complex Hermitian matrix. `values` ascend and
/// column `k` of `vectors` belongs to `values[k]`.
#[derive(Debug, Clone)]
pub struct ComplexEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexAdjoint,
}

/// Quaternionic eigenpairs `M v_k = v_k λ_k`, `λ_k` ascending.
#[derive(Debug, Clone)]
pub struct HermEig {
    pub values: Vec<f64>,
    pub vectors: Vec<QVector>,
}

impl HermEig {
    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        *self.values.last().unwrap()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatFn {
    Inverse,
    Sqrt,
    InvSqrt,
}

impl MatFn {
    fn apply(self, x: f64) -> f64 {
        match self {
            MatFn::Inverse => 1.0 / x,
            MatFn::Sqrt => x.sqrt(),
            MatFn::InvSqrt => 1.0 / x.sqrt(),
        }
    }
}

/// Cyclic Jacobi for a complex Hermitian matrix. Each rotation first
/// removes the phase of the pivot, then applies the real symmetric
/// rotation that annihilates it.
pub fn jacobi_hermitian(a: &ComplexAdjoint) -> Result<ComplexEigen> {
    let n = a.rows();
    assert_eq!(n, a.cols(), "jacobi_hermitian needs a square matrix");
    let mut a = a.clone();
    let mut v = ComplexAdjoint::zeros(n, n);
    for k in 0..n {
        v[(k, k)] = Complex64::new(1.0, 0.0);
        a[(k, k)] = Complex64::new(a[(k, k)].re, 0.0);
    }
    let threshold = JACOBI_TOL * a.frobenius_norm();

    let mut converged = false;
    for sweep in 0..=MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            converged = true;
            break;
        }
        if sweep == MAX_SWEEPS {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::ConvergenceFailure { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = ComplexAdjoint::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            vectors[(r, dst)] = v[(r, src)];
        }
    }
    Ok(ComplexEigen { values, vectors })
}

fn off_diagonal_norm(a: &ComplexAdjoint) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn rotate(a: &mut ComplexAdjoint, v: &mut ComplexAdjoint, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let phase_c = phase.conj();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * mag);
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;
    let n = a.rows();

    // A <- A G, with G = diag(1, conj(phase)) * [[c, s], [-s, c]]
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * phase_c * s;
        a[(k, q)] = akp * s + akq * phase_c * c;
    }
    // A <- G^H A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * phase * s;
        a[(q, k)] = apk * s + aqk * phase * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(app - t * mag, 0.0);
    a[(q, q)] = Complex64::new(aqq + t * mag, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * phase_c * s;
        v[(k, q)] = vkp * s + vkq * phase_c * c;
    }
}

fn hermitian_input(m: &QMatrix) -> Result<QMatrix> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    let residual = m.hermitian_residual();
    if residual.is_nan() || residual > TOL_HERM {
        return Err(Error::NotHermitian { residual });
    }
    m.symmetrized()
}

/// Full complex eigen-decomposition of `embed(M)` for Hermitian `M`.
/// Every eigenvalue of `M` appears twice.
pub fn embedded_eig(m: &QMatrix) -> Result<ComplexEigen> {
    let m = hermitian_input(m)?;
    jacobi_hermitian(&embed(&m))
}

/// Eigenvalues and orthonormal eigenvectors of a Hermitian quaternionic
/// matrix.
pub fn herm_eig(m: &QMatrix) -> Result<HermEig> {
    let n = m.rows();
    let sym = hermitian_input(m)?;
    let ce = jacobi_hermitian(&embed(&sym))?;
    let values: Vec<f64> = ce.values.iter().step_by(2).copied().collect();

    // Each eigenvalue of M shows up as a pair {emb(v), emb(v j)}. Walk the
    // complex eigenvectors in ascending order and keep those that are not
    // (quaternionically) spanned by what was already kept.
    let candidates: Vec<QVector> = (0..2 * n)
        .map(|k| {
            let col: Vec<Complex64> = (0..2 * n).map(|r| ce.vectors[(r, k)]).collect();
            unembed_vector(&col)
        })
        .collect();
    let mut kept: Vec<QVector> = Vec::with_capacity(n);
    let mut used = vec![false; 2 * n];
    for threshold in [0.5, 0.1, 1e-3, 1e-6] {
        for (k, cand) in candidates.iter().enumerate() {
            if kept.len() == n {
                break;
            }
            if used[k] {
                continue;
            }
            let mut r = cand.clone();
            // twice for numerical orthogonality
            for _ in 0..2 {
                for u in &kept {
                    let coeff = u.inner(&r)?;
                    r = &r - &u.mul_right(coeff);
                }
            }
            let norm = r.norm();
            if norm > threshold {
                used[k] = true;
                kept.push(r.scaled(1.0 / norm));
            }
        }
    }
    if kept.len() < n {
        return Err(Error::ConvergenceFailure { sweeps: MAX_SWEEPS });
    }

    let mut with_rayleigh: Vec<(f64, QVector)> = kept
        .into_iter()
        .map(|v| {
            let mv = sym.matvec(&v).expect("square");
            (v.inner(&mv).expect("same length").w, v)
        })
        .collect();
    with_rayleigh.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(HermEig {
        values,
        vectors: with_rayleigh.into_iter().map(|(_, v)| v).collect(),
    })
}

/// Spectral matrix function of a Hermitian positive-definite matrix.
pub fn mat_fn(m: &QMatrix, f: MatFn) -> Result<QMatrix> {
    let ce = embedded_eig(m)?;
    let n2 = ce.values.len();
    let lmin = ce.values[0];
    let lmax = ce.values[n2 - 1];
    if !(lmax > 0.0 && lmin > TOL_PD * lmax) {
        return Err(Error::NotPositiveDefinite {
            min_eigenvalue: lmin,
        });
    }
    let fvals: Vec<f64> = ce.values.iter().map(|&l| f.apply(l)).collect();
    let mut x = ComplexAdjoint::zeros(n2, n2);
    for i in 0..n2 {
        for j in 0..n2 {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, fk) in fvals.iter().enumerate() {
                acc += ce.vectors[(i, k)] * ce.vectors[(j, k)].conj() * *fk;
            }
            x[(i, j)] = acc;
        }
    }
    unembed(&x)?.symmetrized()
}

/// Largest singular value, `√λ_max(M† M)`.
pub fn op_norm(m: &QMatrix) -> Result<f64> {
    let gram = gram(m)?;
    Ok(herm_eig(&gram)?.max().max(0.0).sqrt())
}

/// Smallest singular value above `rel_tol · σ_max`, i.e. the smallest
/// singular value of `M` restricted to the orthogonal complement of its
/// kernel. Zero for the zero matrix.
pub fn min_positive_singular_value(m: &QMatrix, rel_tol: f64) -> Result<f64> {
    let gram = gram(m)?;
    let eig = herm_eig(&gram)?;
    let lmax = eig.max();
    if lmax <= 0.0 {
        return Ok(0.0);
    }
    Ok(eig
        .values
        .iter()
        .copied()
        .find(|&l| l > rel_tol * lmax)
        .unwrap_or(lmax)
        .sqrt())
}

/// The smaller of `M M†` and `M† M`; both carry the nonzero squared
/// singular values of `M`.
fn gram(m: &QMatrix) -> Result<QMatrix> {
    let g = if m.rows() <= m.cols() {
        m.matmul(&m.dagger())?
    } else {
        m.dagger().matmul(m)?
    };
    g.symmetrized()
}
