//! The `qframe` command-line front end.
//!
//! Exit codes: 0 success or affirmative verdict, 1 usage or schema error,
//! 2 negative mathematical verdict, 3 numerical failure, 4 undetermined.
//! Reports are JSON documents on standard output.

pub mod file;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::error::Error;
use crate::frames::{gen_example, ExampleKind, Frame, DEFAULT_TOL};
use crate::perturbation::{
    check_condition, circulant_example, deviation_certificate, PerturbStatus, DEFAULT_SAMPLES,
};
use crate::quaternion::Quaternion;
use crate::random::gaussian_frame;

pub use file::{read_frame, write_frame, FrameFile};

/// Largest relative residual `reconstruct` accepts as a success.
pub const RECONSTRUCT_TOL: f64 = 1e-8;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_UNDETERMINED: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("malformed frame file: {0}")]
    Schema(String),
    #[error("io error: {0}")]
    Io(String),
    #[error(transparent)]
    Math(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Schema(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Math(e) if e.is_numerical() => EXIT_NUMERICAL,
            CliError::Math(Error::NotAFrame { .. } | Error::InadmissiblePerturbation(_)) => {
                EXIT_NEGATIVE
            }
            CliError::Math(_) => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qframe",
    version,
    about = "Frames on finite-dimensional right quaternionic Hilbert spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimal frame bounds and classification of a frame file
    Analyze {
        path: PathBuf,
        /// Relative tolerance for the tight and Parseval flags
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Canonical dual frame {S^-1 u_i}
    Dual {
        path: PathBuf,
        /// Output file; the frame is printed to stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parseval frame {S^-1/2 u_i}
    Parsevalize {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reconstruct a vector from its frame coefficients
    Reconstruct {
        path: PathBuf,
        /// Target vector as a JSON list of [w, x, y, z] entries, or a path to
        /// a file holding one
        #[arg(long)]
        vector: String,
    },
    /// Check a perturbed family against a frame
    ///
    /// Without --lambda/--mu the deviation certificate (lambda = 0,
    /// mu = ||U - V||) is reported.
    Perturb {
        path_u: PathBuf,
        path_v: PathBuf,
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long)]
        mu: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Write one of the built-in families
    Gen {
        kind: GenKind,
        #[arg(long)]
        n: usize,
        /// Circulant weight, either a real number or "w,x,y,z"
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum GenKind {
    DupOnb,
    Shifted,
    Multiplicity,
    Onb,
    Circulant,
    Random,
}

#[derive(Serialize)]
struct ReconstructReport {
    residual: f64,
    u_hat: Vec<[f64; 4]>,
    tolerance: f64,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "qframe: {e}");
            e.exit_code()
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| CliError::Io(e.to_string()))
}

fn emit_frame(
    frame: &Frame,
    out_path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    match out_path {
        Some(p) => {
            write_frame(frame, p)?;
            emit(out, &frame.frame_bounds()?)?;
        }
        None => {
            write!(out, "{}", FrameFile::from_frame(frame).to_json())
                .map_err(|e| CliError::Io(e.to_string()))?;
        }
    }
    Ok(EXIT_OK)
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Analyze { path, tol } => {
            if !(*tol >= 0.0 && tol.is_finite()) {
                return Err(CliError::Usage(format!(
                    "--tol must be a nonnegative number, got {tol}"
                )));
            }
            let frame = read_frame(path)?;
            let report = frame.frame_bounds_with_tol(*tol)?;
            emit(out, &report)?;
            Ok(if report.is_frame {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Dual {
            path,
            out: out_path,
        } => {
            let dual = read_frame(path)?.canonical_dual()?;
            emit_frame(&dual, out_path.as_deref(), out)
        }
        Command::Parsevalize {
            path,
            out: out_path,
        } => {
            let p = read_frame(path)?.parsevalize()?;
            emit_frame(&p, out_path.as_deref(), out)
        }
        Command::Reconstruct { path, vector } => {
            let frame = read_frame(path)?;
            let u = parse_vector_arg(vector)?;
            if u.len() != frame.dim() {
                return Err(CliError::Usage(format!(
                    "vector has {} entries but the frame lives in dimension {}",
                    u.len(),
                    frame.dim()
                )));
            }
            let r = frame.reconstruct(&u)?;
            emit(
                out,
                &ReconstructReport {
                    residual: r.residual,
                    u_hat: r.u_hat.iter().map(|q| q.to_array()).collect(),
                    tolerance: RECONSTRUCT_TOL,
                },
            )?;
            Ok(if r.residual <= RECONSTRUCT_TOL {
                EXIT_OK
            } else {
                EXIT_NUMERICAL
            })
        }
        Command::Perturb {
            path_u,
            path_v,
            lambda,
            mu,
            samples,
            seed,
        } => {
            let u = read_frame(path_u)?;
            let v = read_frame(path_v)?;
            if u.dim() != v.dim() || u.len() != v.len() {
                return Err(CliError::Usage(format!(
                    "shape mismatch: U is {}x{}, V is {}x{}",
                    u.dim(),
                    u.len(),
                    v.dim(),
                    v.len()
                )));
            }
            let report = match (lambda, mu) {
                (None, None) => deviation_certificate(&u, &v)?,
                _ => {
                    let seed = match (seed, samples) {
                        (Some(s), _) => *s,
                        (None, 0) => 0,
                        (None, _) => {
                            return Err(CliError::Usage(
                                "--seed is required when --samples > 0".into(),
                            ))
                        }
                    };
                    check_condition(
                        &u,
                        &v,
                        lambda.unwrap_or(0.0),
                        mu.unwrap_or(0.0),
                        *samples,
                        seed,
                    )?
                }
            };
            emit(out, &report)?;
            Ok(match report.status {
                PerturbStatus::Falsified => EXIT_NEGATIVE,
                _ if !report.admissible => EXIT_NEGATIVE,
                PerturbStatus::Certified => EXIT_OK,
                PerturbStatus::Undetermined => EXIT_UNDETERMINED,
            })
        }
        Command::Gen {
            kind,
            n,
            p,
            out: out_path,
            seed,
        } => {
            let frame = generate(*kind, *n, p.as_deref(), *seed)?;
            match out_path {
                Some(path) => write_frame(&frame, path)?,
                None => write!(out, "{}", FrameFile::from_frame(&frame).to_json())
                    .map_err(|e| CliError::Io(e.to_string()))?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn generate(
    kind: GenKind,
    n: usize,
    p: Option<&str>,
    seed: Option<u64>,
) -> Result<Frame, CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    let example = |k| gen_example(k, n).map_err(CliError::from);
    match kind {
        GenKind::DupOnb => example(ExampleKind::DupOnb),
        GenKind::Shifted => example(ExampleKind::Shifted),
        GenKind::Multiplicity => example(ExampleKind::Multiplicity),
        GenKind::Onb => example(ExampleKind::Onb),
        GenKind::Circulant => {
            let p = p.ok_or_else(|| CliError::Usage("circulant needs --p".into()))?;
            Ok(circulant_example(n, parse_quaternion(p)?)?.1)
        }
        GenKind::Random => {
            let seed = seed.ok_or_else(|| CliError::Usage("random needs --seed".into()))?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(gaussian_frame(&mut rng, n, 2 * n))
        }
    }
}

/// `"0.5"` or `"w,x,y,z"`.
pub fn parse_quaternion(s: &str) -> Result<Quaternion, CliError> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(format!("bad quaternion {s:?}: {e}")))?;
    let q = match parts.as_slice() {
        [w] => Quaternion::real(*w),
        [w, x, y, z] => Quaternion::new(*w, *x, *y, *z),
        _ => {
            return Err(CliError::Usage(format!(
                "bad quaternion {s:?}: expected 1 or 4 components"
            )))
        }
    };
    if !q.is_finite() {
        return Err(CliError::Usage(format!("bad quaternion {s:?}: not finite")));
    }
    Ok(q)
}

fn parse_vector_arg(arg: &str) -> Result<crate::qlinalg::QVector, CliError> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_owned()
    } else {
        std::fs::read_to_string(arg).map_err(|e| CliError::Io(format!("{arg}: {e}")))?
    };
    let entries: Vec<[f64; 4]> =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad --vector: {e}")))?;
    file::parse_quaternions(&entries).map_err(|e| CliError::Usage(format!("bad --vector: {e}")))
}
