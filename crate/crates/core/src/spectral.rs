//! Laplacian spectra.
//!
//! The full spectrum of `L = D − A` comes from a dense cyclic Jacobi solver.
//! Target graphs have at most a few hundred vertices and every eigenvalue feeds
//! the invariant checks, so no sparse or iterative method is used.

use thiserror::Error;

use crate::graph::Graph;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("EmptyGraph: the graph has no vertices")]
    EmptyGraph,
    #[error("NoEdges: the graph has no edges, so λ_max = 0")]
    NoEdges,
    #[error("NoConvergence: Jacobi sweeps did not converge within {0} rotations")]
    NoConvergence(usize),
    #[error("LengthMismatch: function has {got} values, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
}

/// Which value of λ_max the bounds should use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LambdaMode {
    /// The largest eigenvalue from the full spectrum.
    #[default]
    Exact,
    /// The certified estimate [`lambda_max_upper`], no eigensolve.
    Upper,
}

/// Ascending Laplacian eigenvalues with the absolute off-diagonal threshold
/// at which the solver stopped.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    values: Vec<T>,
    tolerance: T,
}

impl<T: Scalar> Spectrum<T> {
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn tolerance(&self) -> T {
        self.tolerance
    }

    pub fn lambda_max(&self) -> T {
        self.values.last().copied().unwrap_or_else(T::zero)
    }

    pub fn sum(&self) -> T {
        self.values.iter().fold(T::zero(), |acc, &x| acc + x)
    }

    /// Number of eigenvalues within `eps` of zero.
    pub fn zero_multiplicity(&self, eps: T) -> usize {
        self.values.iter().filter(|x| x.abs() <= eps).count()
    }
}

/// A real-valued function on the vertices of a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexFunction<T>(Vec<T>);

impl<T: Scalar> VertexFunction<T> {
    pub fn new(values: Vec<T>) -> Self {
        VertexFunction(values)
    }

    pub fn constant(order: usize, value: T) -> Self {
        VertexFunction(vec![value; order])
    }

    pub fn values(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `⟨f, f⟩`.
    pub fn norm_squared(&self) -> T {
        self.0.iter().fold(T::zero(), |acc, &x| acc + x * x)
    }

    fn check_len(&self, g: &Graph) -> Result<(), SpectralError> {
        if self.0.len() != g.order() {
            return Err(SpectralError::LengthMismatch {
                expected: g.order(),
                got: self.0.len(),
            });
        }
        Ok(())
    }
}

/// Dense row-major Laplacian.
pub fn laplacian_matrix<T: Scalar>(g: &Graph) -> Vec<T> {
    let n = g.order();
    let mut m = vec![T::zero(); n * n];
    for v in 0..n {
        m[v * n + v] = T::from_count(g.degree(v));
    }
    for &(u, v) in g.edges() {
        m[u * n + v] = -T::one();
        m[v * n + u] = -T::one();
    }
    m
}

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
///
/// Stops once every off-diagonal magnitude is below
/// `T::OFF_DIAGONAL_TOL · (1 + max|a_ij|)`; gives up after `100 n²` rotations.
/// Returns the unsorted diagonal and the absolute threshold used.
pub fn symmetric_eigenvalues<T: Scalar>(
    mut a: Vec<T>,
    n: usize,
) -> Result<(Vec<T>, T), SpectralError> {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    let scale = a.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    let threshold = T::OFF_DIAGONAL_TOL * (T::one() + scale);
    let budget = 100 * n * n;
    let mut rotations = 0;
    let two = T::lit(2.0);

    loop {
        let mut converged = true;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < threshold {
                    continue;
                }
                converged = false;
                if rotations == budget {
                    return Err(SpectralError::NoConvergence(budget));
                }
                rotations += 1;

                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                let theta = (aqq - app) / (two * apq);
                let t = if theta == T::zero() {
                    T::one()
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = T::zero();
                a[q * n + p] = T::zero();
            }
        }
        if converged {
            break;
        }
    }
    Ok(((0..n).map(|i| a[i * n + i]).collect(), threshold))
}

pub fn laplacian_spectrum<T: Scalar>(g: &Graph) -> Result<Spectrum<T>, SpectralError> {
    let n = g.order();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let (mut values, tolerance) = symmetric_eigenvalues(laplacian_matrix::<T>(g), n)?;
    let upper = T::from_count(n);
    let slack = upper * tolerance;
    for x in &mut values {
        if *x < T::zero() && *x > -slack {
            *x = T::zero();
        } else if *x > upper && *x < upper + slack {
            *x = upper;
        }
    }
    values.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
    Ok(Spectrum { values, tolerance })
}

pub fn lambda_max<T: Scalar>(g: &Graph) -> Result<T, SpectralError> {
    if g.edge_count() == 0 {
        return Err(if g.order() == 0 {
            SpectralError::EmptyGraph
        } else {
            SpectralError::NoEdges
        });
    }
    Ok(laplacian_spectrum::<T>(g)?.lambda_max())
}

/// `min(n, max_{uv ∈ E} deg u + deg v)`, a certified upper bound on λ_max.
pub fn lambda_max_upper<T: Scalar>(g: &Graph) -> Result<T, SpectralError> {
    let edge_max = g
        .edges()
        .iter()
        .map(|&(u, v)| g.degree(u) + g.degree(v))
        .max()
        .ok_or(SpectralError::NoEdges)?;
    Ok(T::from_count(edge_max.min(g.order())))
}

pub fn lambda_for<T: Scalar>(g: &Graph, mode: LambdaMode) -> Result<T, SpectralError> {
    match mode {
        LambdaMode::Exact => lambda_max(g),
        LambdaMode::Upper => lambda_max_upper(g),
    }
}

/// `⟨Lf, f⟩` as the sum of squared edge differentials.
pub fn quadratic_form<T: Scalar>(g: &Graph, f: &VertexFunction<T>) -> Result<T, SpectralError> {
    f.check_len(g)?;
    let x = f.values();
    Ok(g.edges().iter().fold(T::zero(), |acc, &(u, v)| {
        let d = x[u] - x[v];
        acc + d * d
    }))
}

/// `(Lf)(v) = deg(v) f(v) − Σ_{w ~ v} f(w)`.
pub fn apply_laplacian<T: Scalar>(
    g: &Graph,
    f: &VertexFunction<T>,
) -> Result<VertexFunction<T>, SpectralError> {
    f.check_len(g)?;
    let x = f.values();
    let out = (0..g.order())
        .map(|v| {
            let around = g.neighbors(v).iter().fold(T::zero(), |acc, &w| acc + x[w]);
            T::from_count(g.degree(v)) * x[v] - around
        })
        .collect();
    Ok(VertexFunction(out))
}

/// `⟨Lf, f⟩` through the dense Laplacian matrix.
pub fn quadratic_form_dense<T: Scalar>(
    g: &Graph,
    f: &VertexFunction<T>,
) -> Result<T, SpectralError> {
    f.check_len(g)?;
    let n = g.order();
    let m = laplacian_matrix::<T>(g);
    let x = f.values();
    let mut total = T::zero();
    for i in 0..n {
        let row = (0..n).fold(T::zero(), |acc, j| acc + m[i * n + j] * x[j]);
        total = total + row * x[i];
    }
    Ok(total)
}
