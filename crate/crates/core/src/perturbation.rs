//! Paley–Wiener stability of frames.
//!
//! A family `{v_i}` close to a frame `{u_i}` (bounds `A`, `B`) in the sense
//!
//! ```text
//! ‖Σ (u_i − v_i) q_i‖ ≤ λ ‖Σ u_i q_i‖ + μ (Σ |q_i|²)^{1/2}
//! ```
//!
//! with `λ + μ/√A < 1` is again a frame, with bounds
//! `A(1 − (λ + μ/√A))²` and `B(1 + (λ + μ/√B))²`.
//!
//! The inequality ranges over all coefficient sequences, so
//! [`check_condition`] works in three tiers: a deterministic spectral
//! certificate that is sufficient, a seeded sampler that can only
//! falsify, and `Undetermined` when neither applies.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{check_len, Error, Result};
use crate::frames::{is_frame_spectrum, Frame, FRAME_THRESHOLD};
use crate::qlinalg::{herm_eig, op_norm, QMatrix, QVector};
use crate::quaternion::Quaternion;
use crate::random::unit_qvector;

/// Relative slack for comparisons against the perturbation inequality.
pub const VIOLATION_TOL: f64 = 1e-9;
pub const DEFAULT_SAMPLES: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PerturbStatus {
    Certified,
    Falsified,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerturbReport {
    pub lambda: f64,
    pub mu: f64,
    /// `λ + μ/√A < 1` with `A` the lower bound of the unperturbed frame.
    pub admissible: bool,
    pub status: PerturbStatus,
    /// Coefficients at which the inequality fails, when falsified.
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<QVector>,
    /// Bounds guaranteed for the perturbed family; present only when admissible.
    pub predicted_a: Option<f64>,
    pub predicted_b: Option<f64>,
    /// Spectral bounds of the perturbed family.
    pub exact_a: f64,
    pub exact_b: f64,
    /// Spectral bounds of the unperturbed family.
    pub base_a: f64,
    pub base_b: f64,
}

fn serialize_witness<S: serde::Serializer>(
    w: &Option<QVector>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match w {
        Some(v) => s.collect_seq(v.iter().map(|q| q.to_array())),
        None => s.serialize_none(),
    }
}

/// `λ + μ/√A`.
pub fn admissibility_margin(a: f64, lambda: f64, mu: f64) -> f64 {
    lambda + mu / a.sqrt()
}

/// Bounds guaranteed for the perturbed family.
pub fn predicted_bounds(a: f64, b: f64, lambda: f64, mu: f64) -> Result<(f64, f64)> {
    if !(a > 0.0 && b >= a) {
        return Err(Error::InvalidArgument(format!(
            "frame bounds must satisfy 0 < A <= B, got A = {a}, B = {b}"
        )));
    }
    if !(lambda >= 0.0 && mu >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "lambda and mu must be nonnegative, got {lambda}, {mu}"
        )));
    }
    let margin = admissibility_margin(a, lambda, mu);
    if margin >= 1.0 {
        return Err(Error::InadmissiblePerturbation(margin));
    }
    let lower = a * (1.0 - margin).powi(2);
    let upper = b * (1.0 + lambda + mu / b.sqrt()).powi(2);
    Ok((lower, upper))
}

struct Pair {
    u: QMatrix,
    d: QMatrix,
    base_a: f64,
    base_b: f64,
    exact_a: f64,
    exact_b: f64,
}

impl Pair {
    fn new(u_frame: &Frame, v_frame: &Frame) -> Result<Self> {
        check_len(u_frame.dim(), v_frame.dim())?;
        check_len(u_frame.len(), v_frame.len())?;
        let u = u_frame.synthesis_matrix();
        let d = &u - &v_frame.synthesis_matrix();
        let base = herm_eig(&u_frame.frame_operator())?;
        let exact = herm_eig(&v_frame.frame_operator())?;
        Ok(Self {
            u,
            d,
            base_a: base.min(),
            base_b: base.max().max(0.0),
            exact_a: exact.min(),
            exact_b: exact.max().max(0.0),
        })
    }

    fn base_is_frame(&self) -> bool {
        is_frame_spectrum(self.base_a, self.base_b)
    }

    fn report(
        &self,
        lambda: f64,
        mu: f64,
        status: PerturbStatus,
        witness: Option<QVector>,
    ) -> PerturbReport {
        let admissible =
            self.base_is_frame() && admissibility_margin(self.base_a, lambda, mu) < 1.0;
        let predicted = if admissible {
            predicted_bounds(self.base_a, self.base_b, lambda, mu).ok()
        } else {
            None
        };
        PerturbReport {
            lambda,
            mu,
            admissible,
            status,
            witness,
            predicted_a: predicted.map(|p| p.0),
            predicted_b: predicted.map(|p| p.1),
            exact_a: self.exact_a,
            exact_b: self.exact_b,
            base_a: self.base_a,
            base_b: self.base_b,
        }
    }

    /// `lhs − rhs` of the perturbation inequality at `q`.
    fn excess(&self, q: &QVector, lambda: f64, mu: f64) -> (f64, f64) {
        let lhs = self.d.matvec(q).expect("column count").norm();
        let rhs = lambda * self.u.matvec(q).expect("column count").norm() + mu * q.norm();
        (lhs, rhs)
    }
}

fn violates(lhs: f64, rhs: f64) -> bool {
    lhs - rhs > VIOLATION_TOL * lhs.max(1.0)
}

/// Certificate with `λ = 0` and `μ = ‖U − V‖`, which satisfies the
/// inequality by definition of the operator norm. Admissible iff
/// `μ < √A`; the predicted bounds are then `(√A − μ)²` and `(√B + μ)²`.
pub fn deviation_certificate(u_frame: &Frame, v_frame: &Frame) -> Result<PerturbReport> {
    let pair = Pair::new(u_frame, v_frame)?;
    let mu = op_norm(&pair.d)?;
    Ok(pair.report(0.0, mu, PerturbStatus::Certified, None))
}

/// Tests the perturbation inequality for the given `(λ, μ)`.
///
/// Evaluates it at `samples` seeded points of the unit sphere of `H^m`
/// (sample `k` draws from its own ChaCha stream, so results do not depend
/// on evaluation order) and at the right-singular vectors of `U − V` and of
/// `U`. Any violation falsifies, with the worst point as witness. Otherwise
/// the report is certified when the spectral sufficient condition holds.
pub fn check_condition(
    u_frame: &Frame,
    v_frame: &Frame,
    lambda: f64,
    mu: f64,
    samples: usize,
    seed: u64,
) -> Result<PerturbReport> {
    if !(lambda >= 0.0 && mu >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "lambda and mu must be nonnegative, got {lambda}, {mu}"
        )));
    }
    let pair = Pair::new(u_frame, v_frame)?;
    let m = u_frame.len();

    let mut candidates: Vec<QVector> = Vec::new();
    candidates.extend(right_singular_vectors(&pair.d)?);
    candidates.extend(right_singular_vectors(&pair.u)?);
    for k in 0..samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k as u64);
        candidates.push(unit_qvector(&mut rng, m));
    }

    let mut worst: Option<(f64, QVector)> = None;
    for q in candidates {
        let (lhs, rhs) = pair.excess(&q, lambda, mu);
        if violates(lhs, rhs) {
            let excess = lhs - rhs;
            if worst.as_ref().is_none_or(|(e, _)| excess > *e) {
                worst = Some((excess, q));
            }
        }
    }
    if let Some((_, q)) = worst {
        return Ok(pair.report(lambda, mu, PerturbStatus::Falsified, Some(q)));
    }

    let status = if spectral_certificate(&pair, lambda, mu)? {
        PerturbStatus::Certified
    } else {
        PerturbStatus::Undetermined
    };
    Ok(pair.report(lambda, mu, status, None))
}

/// Sufficient condition for the inequality to hold everywhere.
///
/// Split `q = q_r + q_k` along `ker U` and its orthogonal complement, with
/// `α = ‖D P_r‖`, `β = ‖D P_k‖` and `σ` the smallest nonzero singular value
/// of `U`. Then `‖D q‖ ≤ α‖q_r‖ + β‖q_k‖` and `‖U q‖ ≥ σ‖q_r‖`, so the
/// inequality holds when `hypot(max(α − λσ, 0), β) ≤ μ`. When `ker U` is
/// trivial this reduces to `‖D‖ ≤ λσ + μ`. The plain bound `‖D‖ ≤ μ` is
/// also accepted.
fn spectral_certificate(pair: &Pair, lambda: f64, mu: f64) -> Result<bool> {
    let d_norm = op_norm(&pair.d)?;
    let slack = |x: f64| 1e-12 * x.max(1.0);
    if d_norm <= mu + slack(d_norm) {
        return Ok(true);
    }

    let m = pair.u.cols();
    let gram = pair.u.dagger().matmul(&pair.u)?;
    let eig = herm_eig(&gram)?;
    let lmax = eig.max();
    if lmax <= 0.0 {
        return Ok(false);
    }
    let cut = FRAME_THRESHOLD * lmax;
    let mut p_range = QMatrix::zeros(m, m);
    let mut sigma_sq = f64::INFINITY;
    for (l, v) in eig.values.iter().zip(&eig.vectors) {
        if *l > cut {
            sigma_sq = sigma_sq.min(*l);
            for r in 0..m {
                for c in 0..m {
                    p_range[(r, c)] += v[r] * v[c].conj();
                }
            }
        }
    }
    let p_kernel = &QMatrix::identity(m) - &p_range;
    let alpha = op_norm(&pair.d.matmul(&p_range)?)?;
    let beta = op_norm(&pair.d.matmul(&p_kernel)?)?;
    let sigma = sigma_sq.sqrt();
    let needed = (alpha - lambda * sigma).max(0.0).hypot(beta);
    Ok(needed <= mu + slack(needed))
}

fn right_singular_vectors(m: &QMatrix) -> Result<Vec<QVector>> {
    let gram = m.dagger().matmul(m)?.symmetrized()?;
    Ok(herm_eig(&gram)?.vectors)
}

/// `U` the basis of `H^n` and `v_i = e_i + e_{i+1 mod n} p`.
pub fn circulant_example(n: usize, p: Quaternion) -> Result<(Frame, Frame)> {
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    let u = crate::frames::onb(n);
    let vectors = (0..n)
        .map(|i| {
            let mut v = QVector::basis(n, i);
            v[(i + 1) % n] += p;
            v
        })
        .collect();
    Ok((u, Frame::new(n, vectors)?))
}
