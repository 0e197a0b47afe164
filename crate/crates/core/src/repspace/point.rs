//! Dimension vectors, points of `Rep(A, α)` and tangent vectors.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ncalg::{qf, Q};
use crate::quiver::{DoubleQuiver, Vertex};

use super::matrix::Matrix;

/// Draws tried before giving up on a point with all `I + X(c)X(c*)` invertible.
pub const MAX_RETRIES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("dimension at vertex {0} must be at least 1")]
    ZeroDimension(Vertex),
    #[error("no dimension given for vertex {0}")]
    MissingVertex(Vertex),
    #[error("vertex {0} is not in the quiver")]
    UnknownVertex(Vertex),
    #[error("bad dimension vector {0:?}; expected v:n,...")]
    Parse(String),
    #[error("no invertible point after {0} draws")]
    RetriesExhausted(usize),
    #[error("expected {expected} tangent vectors, got {got}")]
    Arity { expected: usize, got: usize },
}

/// Block sizes `α(p)`, with the offsets of each block in `⊕_p k^{α(p)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionVector {
    alpha: BTreeMap<Vertex, usize>,
}

impl DimensionVector {
    pub fn new(dq: &DoubleQuiver, alpha: BTreeMap<Vertex, usize>) -> Result<Self, RepError> {
        for (&v, &n) in &alpha {
            if !dq.vertices().contains(&v) {
                return Err(RepError::UnknownVertex(v));
            }
            if n == 0 {
                return Err(RepError::ZeroDimension(v));
            }
        }
        if let Some(&v) = dq.vertices().iter().find(|v| !alpha.contains_key(v)) {
            return Err(RepError::MissingVertex(v));
        }
        Ok(DimensionVector { alpha })
    }

    pub fn uniform(dq: &DoubleQuiver, n: usize) -> Result<Self, RepError> {
        Self::new(dq, dq.vertices().iter().map(|&v| (v, n)).collect())
    }

    /// Parses `1:2,2:2`.
    pub fn parse(s: &str, dq: &DoubleQuiver) -> Result<Self, RepError> {
        let err = || RepError::Parse(s.to_string());
        let mut alpha = BTreeMap::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (v, n) = part.split_once(':').ok_or_else(err)?;
            let v: Vertex = v.trim().parse().map_err(|_| err())?;
            let n: usize = n.trim().parse().map_err(|_| err())?;
            alpha.insert(v, n);
        }
        Self::new(dq, alpha)
    }

    pub fn dim(&self, p: Vertex) -> usize {
        self.alpha[&p]
    }

    pub fn total(&self) -> usize {
        self.alpha.values().sum()
    }

    pub fn offset(&self, p: Vertex) -> usize {
        self.alpha.range(..p).map(|(_, n)| n).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.alpha.iter().map(|(&v, &n)| (v, n))
    }
}

/// A coordinate `X(c)_{ij}` on `Rep(A, α)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coord {
    pub arrow: usize,
    pub i: usize,
    pub j: usize,
}

/// Coordinates in arrow order, then row-major.
pub fn coordinates(dq: &DoubleQuiver, alpha: &DimensionVector) -> Vec<Coord> {
    let mut out = Vec::new();
    for c in 0..dq.num_arrows() {
        for i in 0..alpha.dim(dq.tail(c)) {
            for j in 0..alpha.dim(dq.head(c)) {
                out.push(Coord { arrow: c, i, j });
            }
        }
    }
    out
}

/// One matrix per arrow of the double quiver, shaped `α(t(c)) × α(h(c))`.
/// Used both for points and for tangent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowMatrices {
    pub alpha: DimensionVector,
    pub x: Vec<Matrix>,
}

pub type TangentAssignment = ArrowMatrices;

impl ArrowMatrices {
    pub fn zero(dq: &DoubleQuiver, alpha: &DimensionVector) -> Self {
        let x = (0..dq.num_arrows())
            .map(|c| Matrix::zeros(alpha.dim(dq.tail(c)), alpha.dim(dq.head(c))))
            .collect();
        ArrowMatrices { alpha: alpha.clone(), x }
    }

    /// The unit tangent vector along a coordinate.
    pub fn unit(dq: &DoubleQuiver, alpha: &DimensionVector, k: Coord) -> Self {
        let mut t = Self::zero(dq, alpha);
        t.x[k.arrow].set(k.i, k.j, qf(1, 1));
        t
    }

    pub fn random<R: Rng>(dq: &DoubleQuiver, alpha: &DimensionVector, rng: &mut R) -> Self {
        let mut t = Self::zero(dq, alpha);
        for m in &mut t.x {
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    m.set(i, j, small_rational(rng));
                }
            }
        }
        t
    }

    pub fn coord(&self, k: Coord) -> &Q {
        self.x[k.arrow].get(k.i, k.j)
    }
}

fn small_rational<R: Rng>(rng: &mut R) -> Q {
    qf(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

/// A point with the inverses `(I + X(c)X(c*))^{-1}` cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPoint {
    pub x: ArrowMatrices,
    pub inv: Vec<Matrix>,
    pub retries: usize,
}

impl MatrixPoint {
    pub fn new(dq: &DoubleQuiver, x: ArrowMatrices) -> Option<Self> {
        let inv = (0..dq.num_arrows())
            .map(|c| {
                let n = x.alpha.dim(dq.tail(c));
                (&Matrix::identity(n) + &(&x.x[c] * &x.x[c ^ 1])).inverse()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(MatrixPoint { x, inv, retries: 0 })
    }

    pub fn alpha(&self) -> &DimensionVector {
        &self.x.alpha
    }
}

/// A seeded point with small rational entries, redrawn until every
/// `I + X(c)X(c*)` is invertible.
pub fn random_point(dq: &DoubleQuiver, alpha: &DimensionVector, seed: u64) -> Result<MatrixPoint, RepError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for retries in 0..MAX_RETRIES {
        let x = ArrowMatrices::random(dq, alpha, &mut rng);
        if let Some(mut pt) = MatrixPoint::new(dq, x) {
            pt.retries = retries;
            return Ok(pt);
        }
    }
    Err(RepError::RetriesExhausted(MAX_RETRIES))
}
