//! JSON frame files.
//!
//! ```json
//! { "dim": 2, "vectors": [ [[1, 0, 0, 0], [0, 0, 0, 0]], ... ] }
//! ```
//!
//! Each vector lists `dim` quaternions as `[w, x, y, z]`. Numbers are
//! written in shortest round-trip form, so write-then-read is bit exact.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::frames::Frame;
use crate::qlinalg::QVector;
use crate::quaternion::Quaternion;

use super::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameFile {
    pub dim: usize,
    pub vectors: Vec<Vec<[f64; 4]>>,
}

impl FrameFile {
    pub fn from_frame(frame: &Frame) -> Self {
        Self {
            dim: frame.dim(),
            vectors: frame
                .vectors()
                .iter()
                .map(|v| v.iter().map(|q| q.to_array()).collect())
                .collect(),
        }
    }

    pub fn to_frame(&self) -> Result<Frame, CliError> {
        if self.dim == 0 {
            return Err(CliError::Schema("dim must be positive".into()));
        }
        if self.vectors.is_empty() {
            return Err(CliError::Schema("at least one vector is required".into()));
        }
        let mut vectors = Vec::with_capacity(self.vectors.len());
        for (i, v) in self.vectors.iter().enumerate() {
            if v.len() != self.dim {
                return Err(CliError::Schema(format!(
                    "vector {i} has {} entries, expected {}",
                    v.len(),
                    self.dim
                )));
            }
            vectors.push(
                parse_quaternions(v).map_err(|e| CliError::Schema(format!("vector {i}: {e}")))?,
            );
        }
        Frame::new(self.dim, vectors).map_err(|e| CliError::Schema(e.to_string()))
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))
    }

    /// One vector per line.
    pub fn to_json(&self) -> String {
        let vectors: Vec<String> = self
            .vectors
            .iter()
            .map(|v| {
                format!(
                    "    {}",
                    serde_json::to_string(v).expect("finite numbers serialize")
                )
            })
            .collect();
        format!(
            "{{\n  \"dim\": {},\n  \"vectors\": [\n{}\n  ]\n}}\n",
            self.dim,
            vectors.join(",\n")
        )
    }
}

pub(crate) fn parse_quaternions(v: &[[f64; 4]]) -> Result<QVector, String> {
    v.iter()
        .enumerate()
        .map(|(k, c)| {
            let q = Quaternion::from(*c);
            if q.is_finite() {
                Ok(q)
            } else {
                Err(format!("entry {k} is not finite"))
            }
        })
        .collect()
}

pub fn read_frame(path: &Path) -> Result<Frame, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    FrameFile::parse(&text)?.to_frame()
}

pub fn write_frame(frame: &Frame, path: &Path) -> Result<(), CliError> {
    fs::write(path, FrameFile::from_frame(frame).to_json())
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
