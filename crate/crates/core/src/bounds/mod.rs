//! Spectral upper bounds on the independence number α.
//!
//! With `n` vertices, maximum/minimum degree `Δ`/`δ`, a value `λ ≥ λ_max` of
//! the largest Laplacian eigenvalue, and a certified bound `α′` on the
//! independence number of the derived graph:
//!
//! * Hoffman-type: `n(1 − δ/λ)`
//! * relative: `n(1 − Δ/λ) + α′(Δ − δ)/(λ − δ)`
//! * explicit average-degree bound:
//!   `(n/2)[(1 − Δ/λ) + √((1 − Δ/λ)² + 4α′(Δ − δ)/(nλ))]`
//! * basic: `n − δ`
//!
//! For `α′ ≤ n(1 − δ/λ)` these are ordered relative ≤ explicit ≤ Hoffman-type,
//! with equality throughout when the inequality is tight or the graph is regular.

mod product;
mod report;

pub use product::{product_bounds, vizing_lower, FactorAlphas, ProductBounds};
pub use report::{build_report, BoundEntry, BoundReport};

use thiserror::Error;

use crate::geometry::SrgParams;
use crate::graph::{Graph, GraphError, VertexSubset};
use crate::scalar::Scalar;
use crate::spectral::{lambda_for, LambdaMode, SpectralError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("BadInputs: {0}")]
    BadInputs(String),
    #[error("NoEdges: spectral bounds need at least one edge")]
    NoEdges,
    #[error("NotIndependent: the vertex set contains an edge")]
    NotIndependent,
    #[error("EmptySubset: the vertex set is empty")]
    EmptySubset,
    #[error("Infeasible: {0} are not feasible connected strongly regular parameters")]
    Infeasible(SrgParams),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// The quantities every bound formula is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundInputs<T> {
    pub n: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub lambda: T,
    pub alpha_prime: usize,
    pub lambda_is_exact: bool,
}

impl<T: Scalar> BoundInputs<T> {
    /// Checks `n ≥ 1`, `δ ≤ Δ < λ` and `α′ ≤ n`.
    pub fn new(
        n: usize,
        max_degree: usize,
        min_degree: usize,
        lambda: T,
        alpha_prime: usize,
        lambda_is_exact: bool,
    ) -> Result<Self, BoundsError> {
        if n == 0 {
            return Err(BoundsError::BadInputs("n must be at least 1".into()));
        }
        if min_degree > max_degree {
            return Err(BoundsError::BadInputs(format!(
                "δ = {min_degree} exceeds Δ = {max_degree}"
            )));
        }
        if !lambda.is_finite() || lambda <= T::from_count(max_degree) {
            return Err(BoundsError::BadInputs(format!(
                "λ = {lambda} must exceed Δ = {max_degree}"
            )));
        }
        if alpha_prime > n {
            return Err(BoundsError::BadInputs(format!(
                "α′ = {alpha_prime} exceeds n = {n}"
            )));
        }
        Ok(BoundInputs {
            n,
            max_degree,
            min_degree,
            lambda,
            alpha_prime,
            lambda_is_exact,
        })
    }

    /// Inputs read off a graph with at least one edge. `alpha_prime` is capped
    /// at the number of vertices of non-maximal degree.
    pub fn from_graph(
        g: &Graph,
        mode: LambdaMode,
        alpha_prime: usize,
    ) -> Result<Self, BoundsError> {
        if g.edge_count() == 0 {
            return Err(BoundsError::NoEdges);
        }
        let profile = g.degrees()?;
        let lambda = lambda_for::<T>(g, mode)?;
        let alpha_prime = alpha_prime.min(profile.non_maximal_count());
        Self::new(
            g.order(),
            profile.max_degree,
            profile.min_degree,
            lambda,
            alpha_prime,
            mode == LambdaMode::Exact,
        )
    }

    pub fn with_lambda(self, lambda: T) -> Result<Self, BoundsError> {
        Self::new(
            self.n,
            self.max_degree,
            self.min_degree,
            lambda,
            self.alpha_prime,
            false,
        )
    }

    pub fn with_alpha_prime(self, alpha_prime: usize) -> Result<Self, BoundsError> {
        Self::new(
            self.n,
            self.max_degree,
            self.min_degree,
            self.lambda,
            alpha_prime,
            self.lambda_is_exact,
        )
    }

    fn parts(&self) -> (T, T, T, T, T) {
        (
            T::from_count(self.n),
            T::from_count(self.max_degree),
            T::from_count(self.min_degree),
            self.lambda,
            T::from_count(self.alpha_prime),
        )
    }

    pub fn hoffman_type(&self) -> T {
        let (n, _, delta, lambda, _) = self.parts();
        n * (T::one() - delta / lambda)
    }

    pub fn relative(&self) -> T {
        let (n, max, min, lambda, alpha_prime) = self.parts();
        let value = n * (T::one() - max / lambda) + alpha_prime * (max - min) / (lambda - min);
        debug_assert!(
            (value - self.gain_form()).abs() <= T::FLOOR_SLACK * (T::one() + value.abs()),
            "relative bound disagrees with its gain form"
        );
        value
    }

    /// The relative bound written as the Hoffman-type bound minus a gain:
    /// `H − (Δ − δ)/(λ − δ) · (H − α′)` with `H = n(1 − δ/λ)`.
    pub fn gain_form(&self) -> T {
        let (_, max, min, lambda, alpha_prime) = self.parts();
        let h = self.hoffman_type();
        h - (max - min) / (lambda - min) * (h - alpha_prime)
    }

    pub fn gn_explicit(&self) -> T {
        let (n, max, min, lambda, alpha_prime) = self.parts();
        let base = T::one() - max / lambda;
        let four = T::lit(4.0);
        let radicand = base * base + four * alpha_prime * (max - min) / (n * lambda);
        n / T::lit(2.0) * (base + radicand.sqrt())
    }

    pub fn basic(&self) -> T {
        T::from_count(self.n - self.min_degree)
    }

    /// `α′ < n(1 − δ/λ)`: the condition under which the relative bound
    /// strictly improves the Hoffman-type bound on an irregular graph.
    pub fn derived_gap(&self) -> T {
        self.hoffman_type() - T::from_count(self.alpha_prime)
    }
}

/// Average-degree bound `n(1 − avgdeg(U)/λ)` for an independent set `U`,
/// with the flag `|U| ≤ bound` (within the floor slack).
pub fn average_degree_check<T: Scalar>(
    g: &Graph,
    u: &VertexSubset,
    lambda: T,
) -> Result<(T, bool), BoundsError> {
    if u.is_empty() {
        return Err(BoundsError::EmptySubset);
    }
    if !crate::exact::is_independent(g, u)? {
        return Err(BoundsError::NotIndependent);
    }
    let degree_sum: usize = u.members().iter().map(|&v| g.degree(v)).sum();
    let avg = T::from_count(degree_sum) / T::from_count(u.len());
    let bound = T::from_count(g.order()) * (T::one() - avg / lambda);
    Ok((bound, T::from_count(u.len()) <= bound + T::FLOOR_SLACK))
}

/// How the α′ of one recursion level was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaPrimeSource {
    /// Regular graph: the derived graph has no vertices.
    NoDerived,
    /// Derived graph without edges: α′ is its order.
    Edgeless,
    /// Regular derived graph: floor of its Hoffman-type bound.
    RegularHoffman,
    /// Floor of the recursive relative bound on the derived graph.
    Recursive,
    /// Capped by the derived graph's order.
    OrderCap,
    /// Capped by the floor of this graph's own Hoffman-type bound.
    HoffmanCap,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RecursionLevel<T> {
    pub order: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub lambda: T,
    pub alpha_prime: usize,
    pub source: AlphaPrimeSource,
    pub value: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RecursiveBound<T> {
    pub value: T,
    pub inputs: BoundInputs<T>,
    /// Outermost graph first.
    pub levels: Vec<RecursionLevel<T>>,
}

/// The relative bound with α′ certified on the chain of derived graphs.
///
/// At each level α′ is the smallest of: the derived order, the floor of the
/// level's own Hoffman-type bound, and the derived graph's certificate
/// (its order if edgeless, its Hoffman floor if regular, otherwise this
/// procedure applied to it). In [`LambdaMode::Upper`] every level uses the
/// cheap λ estimate, which is valid because the bound is increasing in λ on
/// `[λ_max, ∞)` once α′ ≤ n(1 − δ/λ_max).
pub fn recursive_relative<T: Scalar>(
    g: &Graph,
    mode: LambdaMode,
) -> Result<RecursiveBound<T>, BoundsError> {
    if g.edge_count() == 0 {
        return Err(BoundsError::NoEdges);
    }
    let mut levels = Vec::new();
    let inputs = certify(g, mode, &mut levels)?;
    levels.reverse();
    Ok(RecursiveBound {
        value: inputs.relative(),
        inputs,
        levels,
    })
}

fn certify<T: Scalar>(
    g: &Graph,
    mode: LambdaMode,
    levels: &mut Vec<RecursionLevel<T>>,
) -> Result<BoundInputs<T>, BoundsError> {
    let base = BoundInputs::<T>::from_graph(g, mode, 0)?;
    let (derived, _) = g.derived_graph()?;

    let (mut alpha_prime, mut source) = if derived.order() == 0 {
        (0, AlphaPrimeSource::NoDerived)
    } else if derived.edge_count() == 0 {
        (derived.order(), AlphaPrimeSource::Edgeless)
    } else if derived.is_regular() {
        let h = BoundInputs::<T>::from_graph(&derived, mode, 0)?.hoffman_type();
        (h.certified_floor(), AlphaPrimeSource::RegularHoffman)
    } else {
        let inner = certify(&derived, mode, levels)?;
        (
            inner.relative().certified_floor(),
            AlphaPrimeSource::Recursive,
        )
    };
    if derived.order() < alpha_prime {
        alpha_prime = derived.order();
        source = AlphaPrimeSource::OrderCap;
    }
    let hoffman_cap = base.hoffman_type().certified_floor();
    if hoffman_cap < alpha_prime {
        alpha_prime = hoffman_cap;
        source = AlphaPrimeSource::HoffmanCap;
    }

    let inputs = base.with_alpha_prime(alpha_prime)?;
    levels.push(RecursionLevel {
        order: g.order(),
        edge_count: g.edge_count(),
        max_degree: inputs.max_degree,
        min_degree: inputs.min_degree,
        lambda: inputs.lambda,
        alpha_prime,
        source,
        value: inputs.relative(),
    });
    Ok(inputs)
}

/// Adjacency-side Hoffman ratio bound `v(−θ_min)/(k − θ_min)` of a connected
/// strongly regular graph, with `θ_min` computed from the parameters.
pub fn srg_hoffman<T: Scalar>(p: SrgParams) -> Result<T, BoundsError> {
    if !p.is_feasible() || p.mu < 1 {
        return Err(BoundsError::Infeasible(p));
    }
    let f = |x: i64| T::from_i64(x).expect("parameter representable");
    let diff = f(p.lambda - p.mu);
    let theta_min = (diff - (diff * diff + T::lit(4.0) * f(p.k - p.mu)).sqrt()) / T::lit(2.0);
    Ok(f(p.v) * (-theta_min) / (f(p.k) - theta_min))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, path};
    use crate::geometry::er_graph;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-7
    }

    #[test]
    fn input_validation() {
        assert!(BoundInputs::new(0, 1, 1, 2.0f64, 0, true).is_err());
        assert!(BoundInputs::new(4, 1, 2, 3.0f64, 0, true).is_err());
        assert!(BoundInputs::new(4, 2, 1, 2.0f64, 0, true).is_err());
        assert!(BoundInputs::new(4, 2, 1, f64::NAN, 0, true).is_err());
        assert!(BoundInputs::new(4, 2, 1, 3.0f64, 5, true).is_err());
        assert!(matches!(
            BoundInputs::<f64>::from_graph(&Graph::edgeless(3), LambdaMode::Exact, 0),
            Err(BoundsError::NoEdges)
        ));
    }

    #[test]
    fn path_p4() {
        let i = BoundInputs::new(4, 2, 1, 2.0 + SQRT2, 2, true).unwrap();
        assert!(close(i.hoffman_type(), 2.8284271));
        assert_eq!(i.hoffman_type().certified_floor(), 2);
        assert!(close(i.relative(), 2.4852814));
        assert!(i.relative() < 4.0 / 2.0 + 2.0 / 3.0);
        assert_eq!(i.basic(), 3.0);
    }

    #[test]
    fn er3_hoffman() {
        let i = BoundInputs::new(13, 4, 3, 4.0 + 3f64.sqrt(), 4, true).unwrap();
        assert!(close(i.hoffman_type(), 1.0 + 3.0 * 3f64.sqrt()));
    }

    #[test]
    fn complete_graph_hoffman() {
        let i = BoundInputs::new(4, 3, 3, 4.0f64, 0, true).unwrap();
        assert!(close(i.hoffman_type(), 1.0));
        let k5 = BoundInputs::<f64>::from_graph(&complete(5), LambdaMode::Exact, 0).unwrap();
        assert_eq!(k5.basic(), 1.0);
    }

    #[test]
    fn wheel_relative() {
        let i = BoundInputs::new(5, 4, 3, 5.0f64, 2, true).unwrap();
        assert!(close(i.relative(), 2.0));
        // 1 + α − α/(n − δ) with the base C4: α = 2, n = 4, δ = 2.
        assert!(close(i.relative(), 1.0 + 2.0 - 2.0 / 2.0));
        assert_eq!(i.relative().certified_floor(), 2);
    }

    #[test]
    fn regular_collapse() {
        let i = BoundInputs::new(6, 2, 2, 4.0f64, 0, true).unwrap();
        assert_eq!(i.relative(), i.hoffman_type());
        assert!(close(i.gn_explicit(), i.hoffman_type()));
        assert!(close(i.hoffman_type(), 3.0));
    }

    #[test]
    fn er2_ordering() {
        let i = BoundInputs::new(7, 3, 2, 3.0 + SQRT2, 3, true).unwrap();
        assert!(close(i.gn_explicit(), 3.5738127));
        assert!(close(i.relative(), 3.4852814));
        assert!(close(i.hoffman_type(), 3.8284271));
        assert!(i.relative() < i.gn_explicit() && i.gn_explicit() < i.hoffman_type());
        assert_eq!(i.basic(), 5.0);
    }

    #[test]
    fn cone_over_p3_gn() {
        // Cone over P3: n = 4, Δ = 3, δ = 2, λ = 4, α′ = α(P3) = 2.
        let i = BoundInputs::new(4, 3, 2, 4.0f64, 2, true).unwrap();
        assert!(close(i.gn_explicit(), 0.5 * (1.0 + 9f64.sqrt())));
    }

    #[test]
    fn average_degree_examples() {
        let p4 = path(4);
        let lambda = 2.0 + SQRT2;
        let (b, holds) =
            average_degree_check(&p4, &VertexSubset::new(4, vec![0, 3]).unwrap(), lambda).unwrap();
        assert!(close(b, 2.8284271) && holds);
        let (b, holds) =
            average_degree_check(&p4, &VertexSubset::new(4, vec![1]).unwrap(), lambda).unwrap();
        assert!(close(b, 1.6568542) && holds);
        let (b, holds) =
            average_degree_check(&complete(3), &VertexSubset::new(3, vec![0]).unwrap(), 3.0)
                .unwrap();
        assert!(close(b, 1.0) && holds);

        let err = average_degree_check(&p4, &VertexSubset::new(4, vec![1, 2]).unwrap(), lambda);
        assert_eq!(err, Err(BoundsError::NotIndependent));
        let err = average_degree_check(&p4, &VertexSubset::new(4, vec![]).unwrap(), lambda);
        assert_eq!(err, Err(BoundsError::EmptySubset));
    }

    #[test]
    fn recursion_examples() {
        let r = recursive_relative::<f64>(&path(4), LambdaMode::Exact).unwrap();
        assert!(close(r.value, 2.4852814));
        assert_eq!(r.levels.len(), 1);
        assert_eq!(r.levels[0].source, AlphaPrimeSource::Edgeless);

        let r = recursive_relative::<f64>(&er_graph(2).unwrap(), LambdaMode::Exact).unwrap();
        let want = 7.0 * (1.0 - 3.0 / (3.0 + SQRT2)) + 3.0 / (1.0 + SQRT2);
        assert!(close(r.value, want));
        assert_eq!(r.value.certified_floor(), 3);

        let r = recursive_relative::<f64>(&cycle(6), LambdaMode::Exact).unwrap();
        assert!(close(r.value, 3.0));
        assert_eq!(r.value.certified_floor(), 3);
        assert_eq!(r.levels[0].source, AlphaPrimeSource::NoDerived);

        assert!(matches!(
            recursive_relative::<f64>(&Graph::edgeless(2), LambdaMode::Exact),
            Err(BoundsError::NoEdges)
        ));
    }

    #[test]
    fn recursion_descends_two_levels() {
        // Cone over a star K_{1,3} ∪ K_2: the derived graph is irregular with edges.
        let base = complete_bipartite(1, 3).disjoint_union(&path(2));
        let g = base.cone().unwrap();
        let r = recursive_relative::<f64>(&g, LambdaMode::Exact).unwrap();
        assert!(r.levels.len() >= 2, "{:?}", r.levels);
        assert_eq!(r.levels[0].order, g.order());
        let alpha = crate::exact::max_independent_set(&g, 1_000_000).alpha;
        assert!(r.value.certified_floor() >= alpha);
    }

    #[test]
    fn srg_hoffman_examples() {
        assert!(close(
            srg_hoffman::<f64>(SrgParams::new(15, 6, 1, 3)).unwrap(),
            5.0
        ));
        assert!(close(
            srg_hoffman::<f64>(SrgParams::new(16, 6, 2, 2)).unwrap(),
            4.0
        ));
        let c5 = srg_hoffman::<f64>(SrgParams::new(5, 2, 0, 1)).unwrap();
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!(close(c5, 5.0 * golden / (2.0 + golden)));
        assert_eq!(c5.certified_floor(), 2);
        assert!(matches!(
            srg_hoffman::<f64>(SrgParams::new(10, 3, 0, 2)),
            Err(BoundsError::Infeasible(_))
        ));
        assert!(matches!(
            srg_hoffman::<f64>(SrgParams::new(6, 2, 1, 0)),
            Err(BoundsError::Infeasible(_))
        ));
    }
}
