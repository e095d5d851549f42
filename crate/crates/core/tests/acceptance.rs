//! Acceptance criteria, one pass/fail line each. Exits nonzero if any fail.

use std::process::ExitCode;

use qframe::frames::{gen_example, ExampleKind};
use qframe::perturbation::{circulant_example, deviation_certificate};
use qframe::qlinalg::{embed, herm_eig, mat_fn, op_norm, MatFn};
use qframe::random::{
    gaussian_frame, gaussian_qmatrix, gaussian_quaternion, gaussian_qvector, unit_qvector,
};
use qframe::{Frame, QMatrix, QVector, Quaternion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

const CORPUS_SIZE: usize = 50;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

/// 50 seeded full-rank Gaussian frames with n ≤ 6 and m ≤ 12.
fn corpus() -> Vec<Frame> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00F2_A3E5);
    let mut out = Vec::with_capacity(CORPUS_SIZE);
    while out.len() < CORPUS_SIZE {
        let n = rng.random_range(2..=6);
        let m = rng.random_range(n..=12);
        let f = gaussian_frame(&mut rng, n, m);
        if f.frame_bounds().unwrap().is_frame {
            out.push(f);
        }
    }
    out
}

fn criterion_1() -> Outcome {
    for n in [2, 3, 8] {
        let r = gen_example(ExampleKind::DupOnb, n)
            .map_err(|e| e.to_string())?
            .frame_bounds()
            .map_err(|e| e.to_string())?;
        ensure(
            (r.lower - 2.0).abs() <= 1e-10 && (r.upper - 2.0).abs() <= 1e-10,
            || format!("n = {n}: bounds ({}, {})", r.lower, r.upper),
        )?;
        ensure(r.is_tight && !r.is_exact, || {
            format!("n = {n}: flags {r:?}")
        })?;
    }
    Ok("dup_onb(2, 3, 8): A = B = 2, tight, not exact".into())
}

fn criterion_2() -> Outcome {
    for n in [2, 4, 6] {
        let r = gen_example(ExampleKind::Multiplicity, n)
            .unwrap()
            .frame_bounds()
            .unwrap();
        ensure(
            (r.lower - 1.0).abs() <= 1e-10 && (r.upper - 1.0).abs() <= 1e-10,
            || format!("n = {n}: bounds ({}, {})", r.lower, r.upper),
        )?;
    }
    Ok("multiplicity(2, 4, 6): A = B = 1".into())
}

fn criterion_3() -> Outcome {
    for n in [2, 3, 5, 8] {
        let f = gen_example(ExampleKind::Onb, n).unwrap();
        let r = f.frame_bounds().unwrap();
        ensure(
            (r.lower - 1.0).abs() <= 1e-10 && (r.upper - 1.0).abs() <= 1e-10 && r.is_exact,
            || format!("n = {n}: {r:?}"),
        )?;
        for k in 0..n {
            let rest: Vec<QVector> = f
                .vectors()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, v)| v.clone())
                .collect();
            let r = Frame::new(n, rest).unwrap().frame_bounds().unwrap();
            ensure(!r.is_frame, || {
                format!("n = {n}: removing e_{k} leaves a frame")
            })?;
        }
        ensure(f.is_exact_by_removal().unwrap(), || {
            format!("n = {n}: removal check disagrees")
        })?;
    }
    Ok("onb(2, 3, 5, 8): exact; every single removal breaks the frame".into())
}

fn criterion_4(corpus: &[Frame]) -> Outcome {
    let mut worst = 0.0_f64;
    for (k, f) in corpus.iter().enumerate() {
        let r = f.frame_bounds().unwrap();
        let dual = f.canonical_dual().unwrap();
        let d = dual.frame_bounds().unwrap();
        let e = rel_err(d.lower, 1.0 / r.upper).max(rel_err(d.upper, 1.0 / r.lower));
        worst = worst.max(e);
        ensure(e <= 1e-8, || format!("frame {k}: dual bounds off by {e:e}"))?;

        let inv = mat_fn(&f.frame_operator(), MatFn::Inverse).unwrap();
        let e = (&dual.frame_operator() - &inv).frobenius_norm() / inv.frobenius_norm();
        worst = worst.max(e);
        ensure(e <= 1e-8, || {
            format!("frame {k}: dual frame operator off by {e:e}")
        })?;

        let back = dual.canonical_dual().unwrap();
        for (a, b) in f.vectors().iter().zip(back.vectors()) {
            let e = (a - b).norm() / a.norm().max(1.0);
            worst = worst.max(e);
            ensure(e <= 1e-8, || {
                format!("frame {k}: dual of dual off by {e:e}")
            })?;
        }
    }
    Ok(format!(
        "{} frames, worst relative error {worst:.2e}",
        corpus.len()
    ))
}

fn criterion_5(corpus: &[Frame]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0_f64;
    for (k, f) in corpus.iter().enumerate() {
        let p = f.parsevalize().unwrap();
        let e = (&p.frame_operator() - &QMatrix::identity(f.dim())).frobenius_norm();
        worst = worst.max(e);
        ensure(e <= 1e-8, || format!("frame {k}: ‖S − I‖ = {e:e}"))?;
        for _ in 0..100 {
            let u = gaussian_qvector(&mut rng, f.dim());
            let e = (p.frame_sum(&u).unwrap() - u.norm_sqr()).abs() / u.norm_sqr();
            worst = worst.max(e);
            ensure(e <= 1e-8, || {
                format!("frame {k}: Parseval identity off by {e:e}")
            })?;
        }
    }
    Ok(format!(
        "{} frames x 100 vectors, worst error {worst:.2e}",
        corpus.len()
    ))
}

fn criterion_6(corpus: &[Frame]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0_f64;
    for (k, f) in corpus.iter().enumerate() {
        for _ in 0..20 {
            let u = gaussian_qvector(&mut rng, f.dim());
            let r = f.reconstruct(&u).unwrap().residual;
            worst = worst.max(r);
            ensure(r <= 1e-9, || format!("frame {k}: residual {r:e}"))?;
        }
    }
    Ok(format!(
        "{} frames x 20 vectors, worst residual {worst:.2e}",
        corpus.len()
    ))
}

fn criterion_7(corpus: &[Frame]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0_f64;
    for (k, f) in corpus.iter().enumerate() {
        let r = f.frame_bounds().unwrap();
        for _ in 0..200 {
            let u = unit_qvector(&mut rng, f.dim());
            let s = f.frame_sum(&u).unwrap();
            ensure(r.lower - 1e-9 <= s && s <= r.upper + 1e-9, || {
                format!("frame {k}: sum {s} outside [{}, {}]", r.lower, r.upper)
            })?;
        }
        let eig = herm_eig(&f.frame_operator()).unwrap();
        let lo = rel_err(f.frame_sum(&eig.vectors[0]).unwrap(), r.lower);
        let hi = rel_err(f.frame_sum(eig.vectors.last().unwrap()).unwrap(), r.upper);
        worst = worst.max(lo).max(hi);
        ensure(lo <= 1e-7 && hi <= 1e-7, || {
            format!("frame {k}: extremes off by {lo:e}, {hi:e}")
        })?;
    }
    Ok(format!(
        "{} frames x 200 unit vectors; extremes attained to {worst:.2e}",
        corpus.len()
    ))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut pairs = 0;
    let mut min_slack = f64::INFINITY;
    while pairs < 50 {
        let n = rng.random_range(2..=6);
        let m = rng.random_range(n..=12);
        let u = gaussian_frame(&mut rng, n, m);
        let a = u.frame_bounds().unwrap().lower;
        if a <= 1e-6 {
            continue;
        }
        let e = gaussian_qmatrix(&mut rng, n, m);
        let target = rng.random_range(0.05..0.95) * a.sqrt();
        let e = e.scaled(target / op_norm(&e).unwrap());
        let v = Frame::from_synthesis(&(&u.synthesis_matrix() + &e)).unwrap();
        let r = deviation_certificate(&u, &v).unwrap();
        ensure(r.admissible, || {
            format!(
                "pair {pairs}: mu = {} not below sqrt(A) = {}",
                r.mu,
                a.sqrt()
            )
        })?;
        let lower = (r.base_a.sqrt() - r.mu).powi(2);
        let upper = (r.base_b.sqrt() + r.mu).powi(2);
        ensure(r.exact_a >= lower - 1e-8, || {
            format!("pair {pairs}: exact A {} < {lower}", r.exact_a)
        })?;
        ensure(r.exact_b <= upper + 1e-8, || {
            format!("pair {pairs}: exact B {} > {upper}", r.exact_b)
        })?;
        min_slack = min_slack.min(r.exact_a - lower).min(upper - r.exact_b);
        pairs += 1;
    }
    Ok(format!(
        "{pairs} pairs bracketed, smallest slack {min_slack:.2e}"
    ))
}

fn criterion_9() -> Outcome {
    let (_, v) = circulant_example(4, Quaternion::real(0.5)).unwrap();
    let r = v.frame_bounds().unwrap();
    // |1 + p ω|² over ω ∈ {1, i, −1, −i}: 2.25, 1.25, 0.25, 1.25
    ensure(
        (r.lower - 0.25).abs() <= 1e-10 && (r.upper - 2.25).abs() <= 1e-10,
        || format!("p = 0.5: bounds ({}, {})", r.lower, r.upper),
    )?;
    let (_, v) = circulant_example(4, Quaternion::ONE).unwrap();
    let r = v.frame_bounds().unwrap();
    ensure(r.lower <= 1e-10 && !r.is_frame, || format!("p = 1: {r:?}"))?;
    Ok(format!(
        "p = 0.5 -> (0.25, 2.25); p = 1 -> lambda_min = {:.1e}, not a frame",
        r.lower
    ))
}

fn criterion_10(corpus: &[Frame]) -> Outcome {
    let (one, i, j, k) = (Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K);
    let table = [
        (i * i, -one),
        (j * j, -one),
        (k * k, -one),
        (i * j, k),
        (j * i, -k),
        (j * k, i),
        (k * j, -i),
        (k * i, j),
        (i * k, -j),
    ];
    ensure(table.iter().all(|(a, b)| a == b), || {
        "multiplication table".into()
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst = 0.0_f64;
    for t in 0..1000 {
        let p = gaussian_quaternion(&mut rng);
        let q = gaussian_quaternion(&mut rng);
        let e = rel_err((p * q).abs(), p.abs() * q.abs());
        worst = worst.max(e);
        ensure(e <= 1e-11, || format!("instance {t}: |pq| off by {e:e}"))?;

        let m = gaussian_qmatrix(&mut rng, 3, 3);
        let n = gaussian_qmatrix(&mut rng, 3, 3);
        let mn = &m * &n;
        let scale = embed(&mn).frobenius_norm();
        let e = embed(&mn).max_abs_diff(&embed(&m).matmul(&embed(&n)).unwrap()) / scale;
        worst = worst.max(e);
        ensure(e <= 1e-11, || {
            format!("instance {t}: embed(MN) off by {e:e}")
        })?;
        let e = embed(&(&m + &n)).max_abs_diff(&embed(&m).add(&embed(&n)).unwrap());
        ensure(e <= 1e-11, || {
            format!("instance {t}: embed(M+N) off by {e:e}")
        })?;
        let e = embed(&m.dagger()).max_abs_diff(&embed(&m).conj_transpose());
        ensure(e <= 1e-11, || {
            format!("instance {t}: embed(M†) off by {e:e}")
        })?;

        // adjoint identities
        let e = mn.dagger().max_abs_diff(&(&n.dagger() * &m.dagger())) / mn.frobenius_norm();
        worst = worst.max(e);
        ensure(e <= 1e-11, || format!("instance {t}: (MN)† off by {e:e}"))?;
        ensure(m.dagger().dagger() == m, || {
            format!("instance {t}: (M†)† != M")
        })?;
    }
    let id = QMatrix::identity(5);
    ensure(id.dagger() == id, || "I† != I".into())?;

    let mut worst_res = 0.0_f64;
    for (c, f) in corpus.iter().enumerate() {
        let s = f.frame_operator();
        let eig = herm_eig(&s).unwrap();
        let norm = eig.max();
        for (l, v) in eig.values.iter().zip(&eig.vectors) {
            let r = (&s.matvec(v).unwrap() - &v.scaled(*l)).norm() / norm;
            worst_res = worst_res.max(r);
            ensure(r <= 1e-9, || format!("frame {c}: eigen residual {r:e}"))?;
        }
    }
    Ok(format!(
        "1000 instances, worst algebra error {worst:.2e}; Jacobi residual {worst_res:.2e}"
    ))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: Vec<(&str, Check)> = vec![
        ("dup_onb tight non-exact, A = B = 2", Box::new(criterion_1)),
        ("multiplicity family is Parseval", Box::new(criterion_2)),
        ("basis is exact", Box::new(criterion_3)),
        ("canonical dual", Box::new(|| criterion_4(&corpus))),
        ("Parseval-ization", Box::new(|| criterion_5(&corpus))),
        ("reconstruction", Box::new(|| criterion_6(&corpus))),
        (
            "frame inequality attainment",
            Box::new(|| criterion_7(&corpus)),
        ),
        ("perturbation bracketing", Box::new(criterion_8)),
        ("circulant failure case", Box::new(criterion_9)),
        (
            "algebra, embedding and eigensolver",
            Box::new(|| criterion_10(&corpus)),
        ),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
