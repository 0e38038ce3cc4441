//! The two-parameter Janowski family and its order-alpha slice.

use num_complex::Complex64;
use std::f64::consts::E;

use super::{validate_n, ClassId, FunctionClass, ParamKey, ParamSet, RadiusKind, Touch};
use crate::complex::powz;
use crate::domain::SG_HALF_WIDTH;
use crate::Error;

/// `zf'/f` subordinate to `(1+Az^n)/(1+Bz^n)`, `-1 <= B < A <= 1`.
///
/// The radius is `min{1, rho^{1/n}}` with `rho = (e-1)/(A(1+e)-2B)` for
/// `B >= 0` and `rho = (e-1)/(A(1+e)-2Be)` for `B < 0`; the min is part of the
/// statement, so this is the one class whose value may clamp to 1.
pub struct Janowski;

pub(super) fn janowski_rho(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        (E - 1.0) / (a * (1.0 + E) - 2.0 * b)
    } else {
        (E - 1.0) / (a * (1.0 + E) - 2.0 * b * E)
    }
}

fn validate_ab(class: ClassId, a: f64, b: f64) -> Result<(), Error> {
    if !a.is_finite() || !b.is_finite() || !(-1.0 <= b && b < a && a <= 1.0) {
        return Err(Error::InvalidParams {
            class,
            reason: format!("need -1 <= B < A <= 1, got A={a} B={b}"),
        });
    }
    Ok(())
}

pub(super) fn janowski_q(a: f64, b: f64, n: u32, z: Complex64) -> Result<Complex64, Error> {
    let zn = powz(z, n);
    let denom = Complex64::new(1.0, 0.0) + b * zn;
    if denom.norm_sqr() < 1e-24 {
        return Err(Error::Pole { what: "janowski extremal", z });
    }
    Ok((Complex64::new(1.0, 0.0) + a * zn) / denom)
}

/// Disk-fit gap: deviation radius of the subordination disk minus the largest
/// admissible radius at its center. Independent of the factored closed form.
pub(super) fn janowski_gap(a: f64, b: f64, n: u32, r: f64) -> f64 {
    let rho = r.powi(n as i32);
    let rho2 = rho * rho;
    let center = (1.0 - a * b * rho2) / (1.0 - b * b * rho2);
    let dev = (a - b) * rho / (1.0 - b * b * rho2);
    dev - (SG_HALF_WIDTH - (center - 1.0).abs())
}

impl FunctionClass for Janowski {
    fn id(&self) -> ClassId {
        ClassId::Janowski
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        validate_ab(self.id(), p.a, p.b)?;
        validate_n(self.id(), p.n)
    }

    fn defining_equation(&self, p: &ParamSet, r: f64) -> f64 {
        janowski_gap(p.a, p.b, p.n, r)
    }

    fn closed_form(&self, p: &ParamSet) -> Result<f64, Error> {
        Ok(janowski_rho(p.a, p.b).powf(1.0 / p.n as f64).min(1.0))
    }

    fn extremal_q(&self, p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        janowski_q(p.a, p.b, p.n, z)
    }

    fn touch(&self, p: &ParamSet) -> Touch {
        if p.b < 0.0 {
            Touch::Right
        } else if p.b == 0.0 {
            Touch::Both
        } else {
            Touch::Left
        }
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[ParamKey::A, ParamKey::B, ParamKey::N]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        let pairs = [(1.0, -1.0), (1.0, 0.0), (0.5, -0.5), (0.5, 0.25)];
        let mut out = Vec::new();
        for (a, b) in pairs {
            for n in 1..=3 {
                out.push(ParamSet::with_janowski(a, b, n));
            }
        }
        out
    }
}

/// Starlike of order alpha: the `A = 1-2alpha`, `B = -1` Janowski slice, so
/// the radius delegates to [`Janowski`] and the two agree bit-for-bit.
pub struct StarlikeAlpha;

fn starlike_as_janowski(p: &ParamSet) -> ParamSet {
    ParamSet::with_janowski(1.0 - 2.0 * p.alpha, -1.0, 1)
}

impl FunctionClass for StarlikeAlpha {
    fn id(&self) -> ClassId {
        ClassId::StarlikeAlpha
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
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
        let j = starlike_as_janowski(p);
        janowski_gap(j.a, j.b, j.n, r)
    }

    fn closed_form(&self, p: &ParamSet) -> Result<f64, Error> {
        Janowski.closed_form(&starlike_as_janowski(p))
    }

    fn extremal_q(&self, p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        let j = starlike_as_janowski(p);
        janowski_q(j.a, j.b, j.n, z)
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Right
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[ParamKey::Alpha]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        [0.0, 0.25, 0.5, 0.75].into_iter().map(ParamSet::with_alpha).collect()
    }
}
