use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::frames::Frame;
use crate::qlinalg::QVector;

/// The four standard families built from an orthonormal basis `e_1..e_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleKind {
    /// Every basis vector listed twice: tight with bound 2, not exact.
    DupOnb,
    /// `{e_1, e_1, e_2, ..., e_n}`: bounds 1 and 2, neither tight nor exact.
    Shifted,
    /// `k` copies of `e_k / √k` for `k = 1..n`: Parseval.
    Multiplicity,
    /// The basis itself: exact and Parseval.
    Onb,
}

impl ExampleKind {
    pub const ALL: [ExampleKind; 4] = [
        ExampleKind::DupOnb,
        ExampleKind::Shifted,
        ExampleKind::Multiplicity,
        ExampleKind::Onb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExampleKind::DupOnb => "dup_onb",
            ExampleKind::Shifted => "shifted",
            ExampleKind::Multiplicity => "multiplicity",
            ExampleKind::Onb => "onb",
        }
    }
}

impl fmt::Display for ExampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExampleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ExampleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown example kind {s:?}")))
    }
}

pub fn gen_example(kind: ExampleKind, n: usize) -> Result<Frame> {
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    let e = |k: usize| QVector::basis(n, k);
    let vectors: Vec<QVector> = match kind {
        ExampleKind::DupOnb => (0..n).flat_map(|k| [e(k), e(k)]).collect(),
        ExampleKind::Shifted => std::iter::once(e(0)).chain((0..n).map(e)).collect(),
        ExampleKind::Multiplicity => (1..=n)
            .flat_map(|k| {
                let v = e(k - 1).scaled(1.0 / (k as f64).sqrt());
                std::iter::repeat_n(v, k)
            })
            .collect(),
        ExampleKind::Onb => (0..n).map(e).collect(),
    };
    Frame::new(n, vectors)
}

/// The orthonormal basis of `H^n`.
pub fn onb(n: usize) -> Frame {
    Frame::new(n, (0..n).map(|k| QVector::basis(n, k)).collect())
        .expect("basis vectors have length n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(gen_example(ExampleKind::DupOnb, 3).unwrap().len(), 6);
        assert_eq!(gen_example(ExampleKind::Shifted, 3).unwrap().len(), 4);
        assert_eq!(gen_example(ExampleKind::Multiplicity, 4).unwrap().len(), 10);
        assert_eq!(gen_example(ExampleKind::Onb, 5).unwrap().len(), 5);
    }

    #[test]
    fn rejects_small_dimension() {
        for kind in ExampleKind::ALL {
            assert_eq!(gen_example(kind, 1), Err(Error::BadDimension(1)));
        }
    }

    #[test]
    fn names_round_trip() {
        for kind in ExampleKind::ALL {
            assert_eq!(kind.name().parse::<ExampleKind>().unwrap(), kind);
        }
        assert!("circulant".parse::<ExampleKind>().is_err());
    }
}
