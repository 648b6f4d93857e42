//! Projective spaces over finite fields and their orthogonality graphs.

use thiserror::Error;

use crate::field::{make_field_of_size, prime_power, Element, FieldError, FieldSpec};
use crate::graph::Graph;

/// Default ceiling on the number of projective points.
pub const DEFAULT_POINT_LIMIT: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("Overflow: {0} projective points exceed the configured limit")]
    Overflow(u128),
    #[error("BadDimension: {0}")]
    BadDimension(String),
}

/// Gaussian count `[k]_q = (q^k - 1)/(q - 1)`, the number of points of PG(k-1, q).
pub fn gaussian_count(q: u64, k: u32) -> u128 {
    (0..k).map(|i| (q as u128).pow(i)).sum()
}

/// A nonzero vector normalized so that its first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<Element>,
}

impl ProjectivePoint {
    /// Normalizes a nonzero vector; `None` for the zero vector.
    pub fn normalize(field: &FieldSpec, coords: &[Element]) -> Option<Self> {
        let lead = *coords.iter().find(|&&c| c != 0)?;
        let scale = field.inv(lead)?;
        Some(ProjectivePoint {
            coords: coords.iter().map(|&c| field.mul(c, scale)).collect(),
        })
    }

    pub fn coords(&self) -> &[Element] {
        &self.coords
    }

    pub fn pivot(&self) -> usize {
        self.coords
            .iter()
            .position(|&c| c != 0)
            .expect("projective points are nonzero")
    }
}

/// All points of PG(n-1, q), grouped by pivot position (first nonzero
/// coordinate) ascending, then lexicographically by coordinates.
pub fn projective_points(
    field: &FieldSpec,
    n: usize,
) -> Result<Vec<ProjectivePoint>, GeometryError> {
    projective_points_with_limit(field, n, DEFAULT_POINT_LIMIT)
}

pub fn projective_points_with_limit(
    field: &FieldSpec,
    n: usize,
    limit: usize,
) -> Result<Vec<ProjectivePoint>, GeometryError> {
    if n == 0 {
        return Err(GeometryError::BadDimension("need n >= 1".into()));
    }
    let q = field.size();
    let count = gaussian_count(q as u64, n as u32);
    if count > limit as u128 {
        return Err(GeometryError::Overflow(count));
    }
    let mut points = Vec::with_capacity(count as usize);
    for pivot in 0..n {
        let free = n - pivot - 1;
        for code in 0..(q as u64).pow(free as u32) {
            let mut coords = vec![0 as Element; n];
            coords[pivot] = 1;
            // First free coordinate is the most significant digit.
            let mut rest = code;
            for c in coords[pivot + 1..].iter_mut().rev() {
                *c = (rest % q as u64) as Element;
                rest /= q as u64;
            }
            points.push(ProjectivePoint { coords });
        }
    }
    Ok(points)
}

/// Orthogonality graph `O^n_q`: projective points of F^n, distinct points
/// joined when their dot product vanishes. Vertex `i` is `projective_points()[i]`.
pub fn orthogonality_graph(field: &FieldSpec, n: usize) -> Result<Graph, GeometryError> {
    if n < 3 {
        return Err(GeometryError::BadDimension(
            "orthogonality graphs need n >= 3".into(),
        ));
    }
    let points = projective_points(field, n)?;
    let mut edges = Vec::new();
    for (i, x) in points.iter().enumerate() {
        for (j, y) in points.iter().enumerate().skip(i + 1) {
            if field.dot(x.coords(), y.coords()) == 0 {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(points.len(), &edges).expect("indices in range"))
}

/// The polarity graph `ER_q = O^3_q`.
pub fn er_graph(q: u64) -> Result<Graph, GeometryError> {
    orthogonality_graph(&make_field_of_size(q)?, 3)
}

pub fn ortho_graph(n: usize, q: u64) -> Result<Graph, GeometryError> {
    orthogonality_graph(&make_field_of_size(q)?, n)
}

/// Indices of the isotropic points (`x · x = 0`).
pub fn isotropic_points(field: &FieldSpec, points: &[ProjectivePoint]) -> Vec<usize> {
    points
        .iter()
        .enumerate()
        .filter(|(_, x)| field.dot(x.coords(), x.coords()) == 0)
        .map(|(i, _)| i)
        .collect()
}

/// Strongly regular parameters `(v, k, λ, μ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SrgParams {
    pub v: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
}

impl SrgParams {
    pub fn new(v: i64, k: i64, lambda: i64, mu: i64) -> Self {
        SrgParams { v, k, lambda, mu }
    }

    /// The counting identity `k(k − λ − 1) = (v − k − 1)μ`.
    pub fn is_feasible(&self) -> bool {
        self.v > 0
            && self.k >= 0
            && self.lambda >= 0
            && self.mu >= 0
            && self.k * (self.k - self.lambda - 1) == (self.v - self.k - 1) * self.mu
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({} {} {} {})", self.v, self.k, self.lambda, self.mu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivedPrediction {
    Srg {
        params: SrgParams,
        epsilon: i8,
    },
    /// Even dimension over a field of even order.
    NotPredicted,
}

/// Predicted parameters of the derived graph of `O^n_q`.
///
/// Odd `n ≥ 5`: `([n-1], [n-2]-1, [n-3]-2, [n-3])`. Even `n ≥ 4`, odd `q`: the
/// same shifted by `ε q^{n/2-1}` (and `ε q^{n/2-2}` for μ), with
/// `ε = σ(-1)^{n/2}`. Even `n`, even `q`: not predicted.
pub fn predicted_derived_srg(q: u64, n: u32) -> Result<DerivedPrediction, GeometryError> {
    prime_power(q)?;
    if n < 4 || (n % 2 == 1 && n < 5) {
        return Err(GeometryError::BadDimension(format!(
            "no prediction for n = {n}"
        )));
    }
    let g = |k: u32| gaussian_count(q, k) as i64;
    let qi = q as i64;
    if n % 2 == 1 {
        return Ok(DerivedPrediction::Srg {
            params: SrgParams::new(g(n - 1), g(n - 2) - 1, g(n - 3) - 2, g(n - 3)),
            epsilon: 1,
        });
    }
    if q.is_multiple_of(2) {
        return Ok(DerivedPrediction::NotPredicted);
    }
    // σ(-1) = 1 iff -1 is a square in GF(q) iff q ≡ 1 (mod 4).
    let sigma_minus_one: i64 = if q % 4 == 1 { 1 } else { -1 };
    let eps = sigma_minus_one.pow(n / 2);
    let shift = eps * qi.pow(n / 2 - 1);
    let params = SrgParams::new(
        g(n - 1) + shift,
        g(n - 2) - 1 + shift,
        g(n - 3) - 2 + shift,
        g(n - 3) + eps * qi.pow(n / 2 - 2),
    );
    Ok(DerivedPrediction::Srg {
        params,
        epsilon: eps as i8,
    })
}

/// Measures `(v, k, λ, μ)` if the graph is strongly regular.
pub fn measure_srg(g: &Graph) -> Option<SrgParams> {
    let n = g.order();
    if n == 0 || !g.is_regular() {
        return None;
    }
    let k = g.degree(0);
    let mut lambda = None;
    let mut mu = None;
    let mut marks = vec![false; n];
    for u in 0..n {
        for &w in g.neighbors(u) {
            marks[w] = true;
        }
        for v in u + 1..n {
            let common = g.neighbors(v).iter().filter(|&&w| marks[w]).count();
            let slot = if marks[v] { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                _ => {}
            }
        }
        for &w in g.neighbors(u) {
            marks[w] = false;
        }
    }
    Some(SrgParams::new(
        n as i64,
        k as i64,
        lambda.unwrap_or(0) as i64,
        mu.unwrap_or(0) as i64,
    ))
}
