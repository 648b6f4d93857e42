use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar used by the spectral and bound computations.
///
/// Implemented for `f32` and `f64`. The associated constants carry the
/// precision-dependent thresholds so the algorithms stay scalar-agnostic.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Relative off-diagonal threshold at which the Jacobi sweeps stop.
    const OFF_DIAGONAL_TOL: Self;
    /// Slack added before flooring a bound value.
    const FLOOR_SLACK: Self;

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable as a float")
    }

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }

    /// `⌊self + FLOOR_SLACK⌋`, saturating at zero.
    fn certified_floor(self) -> usize {
        (self + Self::FLOOR_SLACK)
            .floor()
            .max(Self::zero())
            .to_usize()
            .unwrap_or(usize::MAX)
    }
}

impl Scalar for f64 {
    const OFF_DIAGONAL_TOL: Self = 1e-10;
    const FLOOR_SLACK: Self = 1e-9;
}

impl Scalar for f32 {
    const OFF_DIAGONAL_TOL: Self = 1e-5;
    const FLOOR_SLACK: Self = 1e-4;
}
