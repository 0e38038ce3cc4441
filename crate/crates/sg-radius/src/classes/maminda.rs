//! Classes defined by a Ma-Minda subordination target: the extremal `zf'/f`
//! equals the target itself, so each entry stores the target as its extremal
//! map together with the scalar deviation bound the radius comes from.

use num_complex::Complex64;
use std::f64::consts::{E, SQRT_2};

use super::{ClassId, FunctionClass, ParamKey, ParamSet, RadiusKind, Touch};
use crate::complex::principal_sqrt;
use crate::domain::SG_HALF_WIDTH;
use crate::Error;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Upper end of the admissible alpha interval for [`LemniscateAlpha`].
pub const LEM_ALPHA_SUP: f64 = (3.0 + E) / (2.0 * (1.0 + E));
/// Upper end of the admissible alpha interval for [`ExpAlpha`].
pub const EXP_ALPHA_SUP: f64 = E / (1.0 + E);

fn validate_alpha_below(class: ClassId, alpha: f64, sup: f64) -> Result<(), Error> {
    if !alpha.is_finite() || !(0.0 <= alpha && alpha < sup) {
        return Err(Error::InvalidParams {
            class,
            reason: format!("need alpha in [0, {sup}), got {alpha}"),
        });
    }
    Ok(())
}

fn no_params(_p: &ParamSet) -> Result<(), Error> {
    Ok(())
}

fn alpha_grid(sup: f64) -> Vec<ParamSet> {
    [0.0, 0.25, 0.5, 0.75 * sup].into_iter().map(ParamSet::with_alpha).collect()
}

/// Target `1 + z/(1 - alpha z^2)`, `alpha` in `[0, 1)`.
pub struct Bs;

impl FunctionClass for Bs {
    fn id(&self) -> ClassId {
        ClassId::Bs
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        validate_alpha_below(self.id(), p.alpha, 1.0)
    }

    fn defining_equation(&self, p: &ParamSet, r: f64) -> f64 {
        r / (1.0 - p.alpha * r * r) - SG_HALF_WIDTH
    }

    fn closed_form(&self, p: &ParamSet) -> Result<f64, Error> {
        let s = (1.0 + E) * (1.0 + E) + 4.0 * p.alpha * (E - 1.0) * (E - 1.0);
        Ok(2.0 * (E - 1.0) / ((1.0 + E) + s.sqrt()))
    }

    fn extremal_q(&self, p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        let denom = ONE - p.alpha * z * z;
        if denom.norm_sqr() < 1e-24 {
            return Err(Error::Pole { what: "bs target", z });
        }
        Ok(ONE + z / denom)
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Both
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[ParamKey::Alpha]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        alpha_grid(1.0)
    }
}

/// Target `alpha + (1-alpha) sqrt(1+z)`, `alpha` in `[0, (3+e)/(2(1+e)))`.
pub struct LemniscateAlpha;

impl FunctionClass for LemniscateAlpha {
    fn id(&self) -> ClassId {
        ClassId::LemniscateAlpha
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        validate_alpha_below(self.id(), p.alpha, LEM_ALPHA_SUP)
    }

    fn defining_equation(&self, p: &ParamSet, r: f64) -> f64 {
        // deviation of the target at z = -r; has no root once alpha exceeds
        // 2/(1+e), where the published closed form stops being attained
        (1.0 - p.alpha) * (1.0 - (1.0 - r).max(0.0).sqrt()) - SG_HALF_WIDTH
    }

    fn closed_form(&self, p: &ParamSet) -> Result<f64, Error> {
        let u = 1.0 - p.alpha;
        Ok((E - 1.0) * (3.0 + E - 2.0 * p.alpha * (1.0 + E)) / (u * u * (1.0 + E) * (1.0 + E)))
    }

    fn extremal_q(&self, p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        Ok(p.alpha + (1.0 - p.alpha) * principal_sqrt(ONE + z))
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Left
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[ParamKey::Alpha]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        alpha_grid(LEM_ALPHA_SUP)
    }
}

/// Target `alpha + (1-alpha) e^z`, `alpha` in `[0, e/(1+e))`.
pub struct ExpAlpha;

impl FunctionClass for ExpAlpha {
    fn id(&self) -> ClassId {
        ClassId::ExpAlpha
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        validate_alpha_below(self.id(), p.alpha, EXP_ALPHA_SUP)
    }

    fn defining_equation(&self, p: &ParamSet, r: f64) -> f64 {
        (1.0 - p.alpha) * (r.exp() - 1.0) - SG_HALF_WIDTH
    }

    fn closed_form(&self, p: &ParamSet) -> Result<f64, Error> {
        Ok(((2.0 * E - p.alpha * (1.0 + E)) / ((1.0 + E) * (1.0 - p.alpha))).ln())
    }

    fn extremal_q(&self, p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        Ok(p.alpha + (1.0 - p.alpha) * z.exp())
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Right
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[ParamKey::Alpha]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        alpha_grid(EXP_ALPHA_SUP)
    }
}

/// Target `sqrt(2) - (sqrt(2)-1) sqrt((1-z)/(1+2(sqrt(2)-1)z))`.
pub struct Rl;

impl FunctionClass for Rl {
    fn id(&self) -> ClassId {
        ClassId::Rl
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        no_params(p)
    }

    fn defining_equation(&self, _p: &ParamSet, r: f64) -> f64 {
        let b = 2.0 * (SQRT_2 - 1.0);
        let dev = 1.0 - (SQRT_2 - (SQRT_2 - 1.0) * ((1.0 + r) / (1.0 - b * r)).sqrt());
        dev - SG_HALF_WIDTH
    }

    fn closed_form(&self, _p: &ParamSet) -> Result<f64, Error> {
        Ok((4.0 * SQRT_2 - 7.0 * E - 5.0) * (E - 1.0)
            / (32.0 * SQRT_2 - 7.0 * E * E + 6.0 * E * (4.0 * SQRT_2 - 5.0) - 47.0))
    }

    fn extremal_q(&self, _p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        let denom = ONE + 2.0 * (SQRT_2 - 1.0) * z;
        if denom.norm_sqr() < 1e-24 {
            return Err(Error::Pole { what: "rl target", z });
        }
        Ok(SQRT_2 - (SQRT_2 - 1.0) * principal_sqrt((ONE - z) / denom))
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Left
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        vec![ParamSet::default()]
    }
}

/// Target `1 + 4z/3 + 2z^2/3`.
pub struct Cardioid;

impl FunctionClass for Cardioid {
    fn id(&self) -> ClassId {
        ClassId::Cardioid
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        no_params(p)
    }

    fn defining_equation(&self, _p: &ParamSet, r: f64) -> f64 {
        2.0 * (r * r + 2.0 * r) / 3.0 - SG_HALF_WIDTH
    }

    fn closed_form(&self, _p: &ParamSet) -> Result<f64, Error> {
        Ok(-1.0 + ((5.0 * E - 1.0) / (2.0 + 2.0 * E)).sqrt())
    }

    fn extremal_q(&self, _p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        Ok(ONE + 4.0 * z / 3.0 + 2.0 * z * z / 3.0)
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Right
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        vec![ParamSet::default()]
    }
}

/// Target `1 + z(k+z)/(k(k-z))` with `k = sqrt(2)+1`.
pub struct RationalR;

const K: f64 = SQRT_2 + 1.0;

impl FunctionClass for RationalR {
    fn id(&self) -> ClassId {
        ClassId::Rational
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        no_params(p)
    }

    fn defining_equation(&self, _p: &ParamSet, r: f64) -> f64 {
        r * (K + r) / (K * (K - r)) - SG_HALF_WIDTH
    }

    fn closed_form(&self, _p: &ParamSet) -> Result<f64, Error> {
        Ok((((2.0 * SQRT_2 + 3.0) * (2.0 * E * E - 1.0)).sqrt() - (SQRT_2 + 1.0) * E) / (1.0 + E))
    }

    fn extremal_q(&self, _p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        let denom = K * (K - z);
        if denom.norm_sqr() < 1e-24 {
            return Err(Error::Pole { what: "rational target", z });
        }
        Ok(ONE + z * (K + z) / denom)
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Right
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        vec![ParamSet::default()]
    }
}

/// Target `z + sqrt(1+z^2)`.
pub struct Crescent;

impl FunctionClass for Crescent {
    fn id(&self) -> ClassId {
        ClassId::Crescent
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        no_params(p)
    }

    fn defining_equation(&self, _p: &ParamSet, r: f64) -> f64 {
        r + (1.0 + r * r).sqrt() - 1.0 - SG_HALF_WIDTH
    }

    fn closed_form(&self, _p: &ParamSet) -> Result<f64, Error> {
        Ok((-1.0 - 2.0 * E + 3.0 * E * E) / (4.0 * E + 4.0 * E * E))
    }

    fn extremal_q(&self, _p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        Ok(z + principal_sqrt(ONE + z * z))
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Right
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        vec![ParamSet::default()]
    }
}

/// Target `1 + z e^z`; radius is the smallest positive root of
/// `(e+1) r e^r = e-1`.
pub struct Pe;

impl FunctionClass for Pe {
    fn id(&self) -> ClassId {
        ClassId::Pe
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::RootEquation
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        no_params(p)
    }

    fn defining_equation(&self, _p: &ParamSet, r: f64) -> f64 {
        (E + 1.0) * r * r.exp() - (E - 1.0)
    }

    fn extremal_q(&self, _p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        Ok(ONE + z * z.exp())
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Right
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        vec![ParamSet::default()]
    }
}

/// Target `1 + z - z^3/3`; radius is the smallest positive root of
/// `(e+1)(3r + r^3) = 3(e-1)`. No extremal function is exhibited for this
/// bound, so sharpness is left to the oracle as a finding.
pub struct Nephroid;

impl FunctionClass for Nephroid {
    fn id(&self) -> ClassId {
        ClassId::Nephroid
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::RootEquation
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        no_params(p)
    }

    fn defining_equation(&self, _p: &ParamSet, r: f64) -> f64 {
        (E + 1.0) * (3.0 * r + r * r * r) - 3.0 * (E - 1.0)
    }

    fn extremal_q(&self, _p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        Ok(ONE + z - z * z * z / 3.0)
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Unclaimed
    }

    fn sharpness_claimed(&self) -> bool {
        false
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        vec![ParamSet::default()]
    }
}

/// Target `1 + sin z`; radius `log((sqrt(2(1+e^2)) + e - 1)/(1+e))` from the
/// bound `|sin z| <= sinh r`. As for [`Nephroid`], sharpness is a finding.
pub struct Sine;

impl FunctionClass for Sine {
    fn id(&self) -> ClassId {
        ClassId::Sine
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        no_params(p)
    }

    fn defining_equation(&self, _p: &ParamSet, r: f64) -> f64 {
        r.sinh() - SG_HALF_WIDTH
    }

    fn closed_form(&self, _p: &ParamSet) -> Result<f64, Error> {
        Ok((((2.0 * (1.0 + E * E)).sqrt() + E - 1.0) / (1.0 + E)).ln())
    }

    fn extremal_q(&self, _p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        Ok(ONE + z.sin())
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Unclaimed
    }

    fn sharpness_claimed(&self) -> bool {
        false
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        vec![ParamSet::default()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radius::compute_radius;

    fn value(class: &dyn FunctionClass, p: &ParamSet) -> f64 {
        compute_radius(class, p).unwrap().value
    }

    #[test]
    fn bs_frozen_values() {
        assert!((value(&Bs, &ParamSet::with_alpha(0.0)) - SG_HALF_WIDTH).abs() < 1e-15);
        let cases = [
            (0.25, 0.43977368901335751),
            (0.5, 0.42113737322244908),
            (0.75, 0.40520930699246366),
        ];
        for (alpha, want) in cases {
            assert!((value(&Bs, &ParamSet::with_alpha(alpha)) - want).abs() < 1e-14);
        }
        assert!(Bs.validate(&ParamSet::with_alpha(1.0)).is_err());
    }

    #[test]
    fn lemniscate_frozen_values() {
        let cases = [
            (0.0, 0.71068204748594693),
            (0.25, 0.85266394463278586),
            (0.5, 0.99425956090374867),
        ];
        for (alpha, want) in cases {
            assert!((value(&LemniscateAlpha, &ParamSet::with_alpha(alpha)) - want).abs() < 1e-14);
        }
        assert!(LemniscateAlpha.validate(&ParamSet::with_alpha(LEM_ALPHA_SUP)).is_err());
        assert!(LemniscateAlpha.validate(&ParamSet::with_alpha(0.76)).is_ok());
    }

    #[test]
    fn lemniscate_peaks_at_exactly_one() {
        // the closed form attains 1 at alpha = 2/(1+e) and stays <= 1 on the
        // whole admissible interval
        let peak = 2.0 / (1.0 + E);
        let v = value(&LemniscateAlpha, &ParamSet::with_alpha(peak));
        assert!((v - 1.0).abs() < 1e-12, "{v}");
        for k in 1..25 {
            let alpha = LEM_ALPHA_SUP * k as f64 / 25.0;
            assert!(value(&LemniscateAlpha, &ParamSet::with_alpha(alpha)) <= 1.0);
        }
    }

    #[test]
    fn exp_frozen_values() {
        let cases = [
            (0.0, 0.37988549304172248),
            (0.25, 0.48005061983314965),
            (0.5, 0.65452812992187751),
        ];
        for (alpha, want) in cases {
            assert!((value(&ExpAlpha, &ParamSet::with_alpha(alpha)) - want).abs() < 1e-14);
        }
        assert!(ExpAlpha.validate(&ParamSet::with_alpha(EXP_ALPHA_SUP)).is_err());
    }

    #[test]
    fn parameterless_constants() {
        assert!((value(&Rl, &ParamSet::default()) - 0.73830927372330937).abs() < 1e-14);
        assert!((value(&Cardioid, &ParamSet::default()) - 0.3012208636084862).abs() < 1e-14);
        assert!((value(&RationalR, &ParamSet::default()) - 0.64513060048183943).abs() < 1e-14);
        assert!((value(&Crescent, &ParamSet::default()) - 0.3890887183371443).abs() < 1e-14);
        assert!((value(&Sine, &ParamSet::default()) - 0.44707440271423576).abs() < 1e-14);
    }

    #[test]
    fn root_constants() {
        let pe = compute_radius(&Pe, &ParamSet::default()).unwrap();
        assert!((pe.value - 0.33167197940577416).abs() < 1e-12);
        assert!(pe.residual <= 1e-12);
        let ne = compute_radius(&Nephroid, &ParamSet::default()).unwrap();
        assert!((ne.value - 0.43473049731694737).abs() < 1e-12);
        assert!(ne.residual <= 1e-12);
    }

    #[test]
    fn targets_are_normalized() {
        let z0 = Complex64::new(0.0, 0.0);
        let p = ParamSet::default();
        let all: [&dyn FunctionClass; 10] = [
            &Bs, &LemniscateAlpha, &ExpAlpha, &Rl, &Cardioid, &RationalR, &Crescent, &Pe,
            &Nephroid, &Sine,
        ];
        for class in all {
            let q0 = class.extremal_q(&p, z0).unwrap();
            assert!((q0 - Complex64::new(1.0, 0.0)).norm() < 1e-15, "{}", class.id());
        }
        // entire target evaluated at the boundary point used as a spot value
        let pe1 = Pe.extremal_q(&p, Complex64::new(1.0, 0.0)).unwrap();
        assert!((pe1.re - (1.0 + E)).abs() < 1e-14 && pe1.im == 0.0);
    }

    #[test]
    fn rl_target_is_continuous_on_its_radius_circle() {
        let r = value(&Rl, &ParamSet::default());
        let samples = 4096;
        let mut prev = Rl
            .extremal_q(&ParamSet::default(), Complex64::from_polar(r, 0.0))
            .unwrap();
        for k in 1..=samples {
            let t = std::f64::consts::TAU * k as f64 / samples as f64;
            let q = Rl
                .extremal_q(&ParamSet::default(), Complex64::from_polar(r, t))
                .unwrap();
            assert!((q - prev).norm() < 0.05, "jump at t = {t}");
            prev = q;
        }
    }
}
