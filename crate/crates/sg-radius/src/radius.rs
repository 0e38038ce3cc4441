//! Radius extraction: closed-form dispatch and the shared bracketed root
//! engine.

use serde::Serialize;

use crate::classes::{ClassId, FunctionClass, ParamSet, RadiusKind, RenderedParams};
use crate::Error;

/// How a [`RadiusResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "closed-form")]
    ClosedForm,
    #[serde(rename = "root")]
    Root,
    #[serde(rename = "oracle")]
    Oracle,
}

/// A computed radius with the parameters it was computed for. `residual`
/// holds `|defining equation|` at the returned root for root methods and 0
/// for closed forms.
#[derive(Debug, Clone, Serialize)]
pub struct RadiusResult {
    pub class: ClassId,
    pub params: RenderedParams,
    pub value: f64,
    pub method: Method,
    pub residual: f64,
}

const ROOT_WIDTH: f64 = 1e-14;
const ROOT_RESIDUAL: f64 = 1e-12;

/// Root of `f` on `[lo, hi]` given a sign change: bisection with a secant
/// step whenever the previous step at least halved the bracket, falling back
/// to bisection otherwise. Converges to bracket width `1e-14` with residual
/// at most `1e-12` for the equations used here.
pub fn solve_bracketed<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<f64, Error> {
    let (mut lo, mut hi) = (lo, hi);
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NoBracket { lo, hi });
    }
    let mut fhi = fhi;
    let mut width_prev = hi - lo;
    let mut try_secant = true;
    for _ in 0..500 {
        if hi - lo <= ROOT_WIDTH {
            break;
        }
        let mut x = if try_secant {
            (lo * fhi - hi * flo) / (fhi - flo)
        } else {
            0.5 * (lo + hi)
        };
        if !x.is_finite() || x <= lo || x >= hi {
            x = 0.5 * (lo + hi);
        }
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        try_secant = (hi - lo) <= 0.5 * width_prev;
        width_prev = hi - lo;
    }
    Ok(0.5 * (lo + hi))
}

/// Radius of `class` at `p` by whichever method the class declares.
///
/// Closed forms are checked against the `(0, 1]` contract: values within a
/// few ulp above 1 (the admissible-parameter boundary cases) normalize to 1,
/// anything further out is a transcription bug and surfaces as an error.
pub fn compute_radius(class: &dyn FunctionClass, p: &ParamSet) -> Result<RadiusResult, Error> {
    class.validate(p)?;
    let params = class.rendered_params(p);
    match class.radius_kind() {
        RadiusKind::ClosedForm => {
            let mut value = class.closed_form(p)?;
            if value > 1.0 {
                if value <= 1.0 + 1e-12 {
                    value = 1.0;
                } else {
                    return Err(Error::FormulaOutOfRange { class: class.id(), value });
                }
            }
            if !(value > 0.0) {
                return Err(Error::FormulaOutOfRange { class: class.id(), value });
            }
            Ok(RadiusResult {
                class: class.id(),
                params,
                value,
                method: Method::ClosedForm,
                residual: 0.0,
            })
        }
        RadiusKind::RootEquation => {
            let f = |r: f64| class.defining_equation(p, r);
            let value = solve_bracketed(f, 1e-15, 1.0 - 1e-15)?;
            let residual = f(value).abs();
            debug_assert!(residual <= ROOT_RESIDUAL, "residual {residual}");
            Ok(RadiusResult {
                class: class.id(),
                params,
                value,
                method: Method::Root,
                residual,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::ClassRegistry;
    use std::f64::consts::E;

    #[test]
    fn bracketed_examples() {
        let r = solve_bracketed(|r| r - 0.5, 0.0, 1.0).unwrap();
        assert!((r - 0.5).abs() < 1e-14);
        let r = solve_bracketed(|r| (E + 1.0) * r * r.exp() - (E - 1.0), 0.0, 1.0).unwrap();
        assert!((r - 0.33167197940577416).abs() < 1e-12);
        let r = solve_bracketed(|r| r * r - 2.0, 1.0, 2.0).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-14);
    }

    #[test]
    fn endpoint_roots_return_immediately() {
        assert_eq!(solve_bracketed(|r| r, 0.0, 1.0).unwrap(), 0.0);
        assert_eq!(solve_bracketed(|r| r - 1.0, 0.0, 1.0).unwrap(), 1.0);
    }

    #[test]
    fn missing_sign_change_is_an_error() {
        assert!(matches!(
            solve_bracketed(|r| r + 1.0, 0.0, 1.0),
            Err(Error::NoBracket { .. })
        ));
    }

    #[test]
    fn registry_method_dispatch() {
        let reg = ClassRegistry::standard();
        let p = ParamSet::default();
        assert!(reg.closed_form_radius(ClassId::Cardioid, &p).is_ok());
        assert!(matches!(
            reg.closed_form_radius(ClassId::Pe, &p),
            Err(Error::WrongMethod { .. })
        ));
        assert!(reg.root_radius(ClassId::Pe, &p).is_ok());
        assert!(matches!(
            reg.root_radius(ClassId::Cardioid, &p),
            Err(Error::WrongMethod { .. })
        ));
        // the kind-agnostic entry point accepts both
        assert_eq!(reg.radius(ClassId::Pe, &p).unwrap().method, Method::Root);
        assert_eq!(
            reg.radius(ClassId::Cardioid, &p).unwrap().method,
            Method::ClosedForm
        );
    }

    #[test]
    fn results_serialize_with_the_documented_shape() {
        let reg = ClassRegistry::standard();
        let r = reg.radius(ClassId::Pe, &ParamSet::default()).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["class"], "pe");
        assert_eq!(json["method"], "root");
        assert!(json["params"].as_object().unwrap().is_empty());
        assert!(json["value"].as_f64().unwrap() > 0.0);
        let r = reg
            .radius(ClassId::Janowski, &ParamSet::with_janowski(1.0, -1.0, 2))
            .unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["params"]["A"], 1.0);
        assert_eq!(json["params"]["B"], -1.0);
        assert_eq!(json["params"]["n"], 2);
    }
}
