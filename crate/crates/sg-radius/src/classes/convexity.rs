//! Radius of convexity of order alpha for sigmoid starlike functions.

use num_complex::Complex64;

use super::{ClassId, FunctionClass, ParamKey, ParamSet, RadiusKind, Touch};
use crate::domain::sigmoid;
use crate::Error;

/// `1 + z f0''(z)/f0'(z)` for the extremal sigmoid starlike function `f0`:
/// `sigmoid(z) + z/(e^z + 1)`.
///
/// Entire except at the sigmoid poles `(2k+1) i pi`, so unconditionally
/// defined on the closed unit disk.
pub fn convexity_functional(z: Complex64) -> Complex64 {
    let s = sigmoid(z).expect("no sigmoid pole on the unit disk");
    s + z / (z.exp() + Complex64::new(1.0, 0.0))
}

/// Largest disk on which every sigmoid starlike function is convex of order
/// alpha: smallest positive root of `e^r (r + alpha) - 2 + alpha = 0`.
pub struct ConvexityOrder;

impl FunctionClass for ConvexityOrder {
    fn id(&self) -> ClassId {
        ClassId::ConvexityOrder
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::RootEquation
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        if !p.alpha.is_finite() || !(0.0..1.0).contains(&p.alpha) {
            return Err(Error::InvalidParams {
                class: self.id(),
                reason: format!("need alpha in [0, 1), got {}", p.alpha),
            });
        }
        Ok(())
    }

    fn defining_equation(&self, p: &ParamSet, r: f64) -> f64 {
        r.exp() * (r + p.alpha) - 2.0 + p.alpha
    }

    /// `zf0'/f0` for the extremal: the modified sigmoid itself. The convexity
    /// sweep uses [`convexity_functional`] instead; this is the class's
    /// subordination target.
    fn extremal_q(&self, _p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        sigmoid(z)
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Left
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[ParamKey::Alpha]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        [0.0, 0.25, 0.5, 0.75].into_iter().map(ParamSet::with_alpha).collect()
    }
}
