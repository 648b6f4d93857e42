use super::{BoundEntry, BoundInputs, BoundsError};
use crate::graph::Graph;
use crate::scalar::Scalar;
use crate::spectral::{lambda_for, LambdaMode};

/// Certified independence numbers (or upper bounds) for the factors and
/// their derived graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorAlphas {
    pub alpha_g: usize,
    pub alpha_h: usize,
    pub alpha_derived_g: usize,
    pub alpha_derived_h: usize,
}

/// Bounds on `α(g □ h)` assembled from factor data.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductBounds<T> {
    /// `min(α(g)·n_h, α(h)·n_g)`.
    pub viz: usize,
    /// `n_g n_h · min(1 − δ_g/λ_g, 1 − δ_h/λ_h)`.
    pub hofone: T,
    /// Hoffman-type bound of the product, `n_g n_h (1 − (δ_g+δ_h)/(λ_g+λ_h))`.
    pub hoftwo: T,
    /// Relative bound of the product with α′ from the Leibniz estimate.
    pub relprod: T,
    /// `α(g′□h) + α(g□h′)`, each estimated as a viz-style product, capped at
    /// the order of the product's derived graph.
    pub derived_alpha: usize,
    /// `λ_g + λ_h`.
    pub lambda: T,
}

impl<T: Scalar> ProductBounds<T> {
    pub fn entries(&self) -> Vec<BoundEntry<T>> {
        vec![
            BoundEntry::new("viz", T::from_count(self.viz)),
            BoundEntry::new("hofone", self.hofone),
            BoundEntry::new("hoftwo", self.hoftwo),
            BoundEntry::new("relprod", self.relprod),
        ]
    }
}

pub fn product_bounds<T: Scalar>(
    g: &Graph,
    h: &Graph,
    alphas: FactorAlphas,
    mode: LambdaMode,
) -> Result<ProductBounds<T>, BoundsError> {
    if g.edge_count() == 0 || h.edge_count() == 0 {
        return Err(BoundsError::NoEdges);
    }
    let (pg, ph) = (g.degrees()?, h.degrees()?);
    let (lg, lh) = (lambda_for::<T>(g, mode)?, lambda_for::<T>(h, mode)?);
    let (ng, nh) = (g.order(), h.order());
    let (dg, dh) = (pg.non_maximal_count(), ph.non_maximal_count());

    let viz = (alphas.alpha_g * nh).min(alphas.alpha_h * ng);
    let ratio = |min: usize, lambda: T| T::one() - T::from_count(min) / lambda;
    let total = T::from_count(ng * nh);
    let hofone = total * ratio(pg.min_degree, lg).min(ratio(ph.min_degree, lh));

    let lambda = lg + lh;
    let derived_order = ng * nh - (ng - dg) * (nh - dh);
    let leibniz = (alphas.alpha_derived_g * nh).min(alphas.alpha_h * dg)
        + (alphas.alpha_g * dh).min(alphas.alpha_derived_h * ng);
    let derived_alpha = leibniz.min(derived_order);

    let inputs = BoundInputs::new(
        ng * nh,
        pg.max_degree + ph.max_degree,
        pg.min_degree + ph.min_degree,
        lambda,
        derived_alpha,
        mode == LambdaMode::Exact,
    )?;
    Ok(ProductBounds {
        viz,
        hofone,
        hoftwo: inputs.hoffman_type(),
        relprod: inputs.relative(),
        derived_alpha,
        lambda,
    })
}

/// `α(g)α(h) + min(n_g − α(g), n_h − α(h))`, a lower bound on `α(g □ h)`.
pub fn vizing_lower(g: &Graph, h: &Graph, alpha_g: usize, alpha_h: usize) -> usize {
    alpha_g * alpha_h + (g.order() - alpha_g).min(h.order() - alpha_h)
}
