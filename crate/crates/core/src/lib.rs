//! Spectral upper bounds on the independence number of a graph.
//!
//! The crate computes the Hoffman-type bound `n(1 − δ/λ_max)`, the relative
//! bound that refines it through the derived graph (the subgraph induced by
//! the vertices of non-maximal degree), the explicit average-degree bound and
//! their cartesian-product variants. Alongside sit generators for the graph
//! families the bounds are tested on (paths, cones, complete split graphs,
//! finite-field orthogonality graphs), a dense Laplacian eigensolver and an
//! exact branch-and-bound oracle.
//!
//! The numeric modules are generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix `f64`.

pub mod bounds;
pub mod edgelist;
pub mod exact;
pub mod field;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod scalar;
pub mod spectral;

pub use bounds::{
    average_degree_check, build_report, product_bounds, recursive_relative, srg_hoffman,
    vizing_lower, AlphaPrimeSource, BoundsError, FactorAlphas,
};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use exact::{is_independent, max_independent_set, ExactResult, DEFAULT_NODE_BUDGET};
pub use field::{make_field, FieldError, FieldSpec};
pub use generators::{generate_family, Family};
pub use geometry::{
    er_graph, measure_srg, ortho_graph, orthogonality_graph, predicted_derived_srg,
    projective_points, DerivedPrediction, GeometryError, ProjectivePoint, SrgParams,
};
pub use graph::{DegreeProfile, Graph, GraphError, VertexSubset};
pub use scalar::Scalar;
pub use spectral::{
    lambda_max, lambda_max_upper, laplacian_spectrum, quadratic_form, LambdaMode, SpectralError,
};

pub type Spectrum = spectral::Spectrum<f64>;
pub type VertexFunction = spectral::VertexFunction<f64>;
pub type BoundInputs = bounds::BoundInputs<f64>;
pub type BoundReport = bounds::BoundReport<f64>;
pub type BoundEntry = bounds::BoundEntry<f64>;
pub type RecursiveBound = bounds::RecursiveBound<f64>;
pub type RecursionLevel = bounds::RecursionLevel<f64>;
pub type ProductBounds = bounds::ProductBounds<f64>;
