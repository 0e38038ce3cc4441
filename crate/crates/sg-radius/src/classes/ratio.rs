//! Classes characterized by ratios against an auxiliary function: the four
//! G-families, close-to-starlike functions, the `f/z` family, and the
//! bounded-real-part family. All radii reduce to a quadratic (or linear)
//! equation in `rho = r^n`.

use num_complex::Complex64;
use std::f64::consts::E;

use super::{validate_n, ClassId, FunctionClass, ParamKey, ParamSet, RadiusKind, Touch};
use crate::complex::powz;
use crate::domain::SG_HALF_WIDTH;
use crate::Error;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Positive root of `a2 rho^2 + a1 rho + a0` with `a2, a1 > 0 > a0`, in the
/// cancellation-free form `2(-a0)/(a1 + sqrt(a1^2 - 4 a2 a0))`.
fn positive_quad_root(a2: f64, a1: f64, a0: f64) -> f64 {
    debug_assert!(a2 > 0.0 && a1 > 0.0 && a0 < 0.0);
    2.0 * (-a0) / (a1 + (a1 * a1 - 4.0 * a2 * a0).sqrt())
}

fn nth_root(rho: f64, n: u32) -> f64 {
    rho.powf(1.0 / n as f64)
}

fn n_grid() -> Vec<ParamSet> {
    (1..=3).map(ParamSet::with_n).collect()
}

fn guarded_div(num: Complex64, denom: Complex64, what: &'static str, z: Complex64) -> Result<Complex64, Error> {
    if denom.norm_sqr() < 1e-24 {
        return Err(Error::Pole { what, z });
    }
    Ok(num / denom)
}

/// `f/g` and `g/z` both of positive real part. Extremal
/// `q = 1 + 4n z^n/(1 - z^{2n})`.
pub struct G1;

impl FunctionClass for G1 {
    fn id(&self) -> ClassId {
        ClassId::G1
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        validate_n(self.id(), p.n)
    }

    fn defining_equation(&self, p: &ParamSet, r: f64) -> f64 {
        let rho = r.powi(p.n as i32);
        let nn = p.n as f64;
        (E - 1.0) * rho * rho + 4.0 * nn * (E + 1.0) * rho - (E - 1.0)
    }

    fn closed_form(&self, p: &ParamSet) -> Result<f64, Error> {
        let nn = p.n as f64;
        Ok(nth_root(
            positive_quad_root(E - 1.0, 4.0 * nn * (E + 1.0), -(E - 1.0)),
            p.n,
        ))
    }

    fn extremal_q(&self, p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        let zn = powz(z, p.n);
        let nn = p.n as f64;
        Ok(ONE + guarded_div(4.0 * nn * zn, ONE - zn * zn, "g1 extremal", z)?)
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Both
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[ParamKey::N]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        n_grid()
    }
}

// G2 and G3 share one quadratic; keeping a single helper makes their radii
// agree bit-for-bit.
fn g23_rho(n: u32) -> f64 {
    let nn = n as f64;
    positive_quad_root(nn * (E + 1.0) + E - 1.0, 3.0 * nn * (E + 1.0), -(E - 1.0))
}

fn g23_equation(n: u32, r: f64) -> f64 {
    let rho = r.powi(n as i32);
    let nn = n as f64;
    (nn * (E + 1.0) + E - 1.0) * rho * rho + 3.0 * nn * (E + 1.0) * rho - (E - 1.0)
}

/// `f/g` of positive real part, `g/z` of real part above one half. Extremal
/// `q = (1 + 3n z^n + (n-1) z^{2n})/(1 - z^{2n})`.
pub struct G2;

impl FunctionClass for G2 {
    fn id(&self) -> ClassId {
        ClassId::G2
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        validate_n(self.id(), p.n)
    }

    fn defining_equation(&self, p: &ParamSet, r: f64) -> f64 {
        g23_equation(p.n, r)
    }

    fn closed_form(&self, p: &ParamSet) -> Result<f64, Error> {
        Ok(nth_root(g23_rho(p.n), p.n))
    }

    fn extremal_q(&self, p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        let zn = powz(z, p.n);
        let nn = p.n as f64;
        guarded_div(
            ONE + 3.0 * nn * zn + (nn - 1.0) * zn * zn,
            ONE - zn * zn,
            "g2 extremal",
            z,
        )
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Right
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[ParamKey::N]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        n_grid()
    }
}

/// `|f/g - 1| < 1` with `g/z` of positive real part. Same radius as [`G2`];
/// the extremal `q = 1 + 2n z^n/(1+z^n) + n z^n/(1-z^n)` touches on the other
/// side.
pub struct G3;

impl FunctionClass for G3 {
    fn id(&self) -> ClassId {
        ClassId::G3
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        validate_n(self.id(), p.n)
    }

    fn defining_equation(&self, p: &ParamSet, r: f64) -> f64 {
        g23_equation(p.n, r)
    }

    fn closed_form(&self, p: &ParamSet) -> Result<f64, Error> {
        Ok(nth_root(g23_rho(p.n), p.n))
    }

    fn extremal_q(&self, p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        let zn = powz(z, p.n);
        let nn = p.n as f64;
        let a = guarded_div(2.0 * nn * zn, ONE + zn, "g3 extremal", z)?;
        let b = guarded_div(nn * zn, ONE - zn, "g3 extremal", z)?;
        Ok(ONE + a + b)
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Left
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[ParamKey::N]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        n_grid()
    }
}

/// `|f/g - 1| < 1` with `g` convex. Extremal
/// `q = 1 + n z^n/(1+z^n) + z^n/(1-z^n)`.
pub struct G4;

impl FunctionClass for G4 {
    fn id(&self) -> ClassId {
        ClassId::G4
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        validate_n(self.id(), p.n)
    }

    fn defining_equation(&self, p: &ParamSet, r: f64) -> f64 {
        let rho = r.powi(p.n as i32);
        let nn = p.n as f64;
        ((1.0 + E) * nn - 2.0) * rho * rho + (nn + 1.0) * (1.0 + E) * rho + (1.0 - E)
    }

    fn closed_form(&self, p: &ParamSet) -> Result<f64, Error> {
        let nn = p.n as f64;
        Ok(nth_root(
            positive_quad_root((1.0 + E) * nn - 2.0, (nn + 1.0) * (1.0 + E), 1.0 - E),
            p.n,
        ))
    }

    fn extremal_q(&self, p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        let zn = powz(z, p.n);
        let nn = p.n as f64;
        let a = guarded_div(nn * zn, ONE + zn, "g4 extremal", z)?;
        let b = guarded_div(zn, ONE - zn, "g4 extremal", z)?;
        Ok(ONE + a + b)
    }

    fn touch(&self, p: &ParamSet) -> Touch {
        if p.n == 1 {
            Touch::Both
        } else {
            Touch::Left
        }
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[ParamKey::N]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        n_grid()
    }
}

/// How the close-to-starlike extremal is read. The printed extremal carries a
/// `(1-z)` power where every identity in its derivation needs `(1-z^n)`; both
/// readings coincide at `n = 1` and the oracle arbitrates above that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CsReading {
    /// Denominator `(1-z^n)^{(n+2-2alpha)/n}`; the reading consistent with
    /// `f/g = (1+z^n)/(1-z^n)`.
    #[default]
    DenominatorZn,
    /// Denominator `(1-z)^{(n+2-2alpha)/n}`, read literally.
    DenominatorZ,
}

/// Close-to-starlike of type alpha: `f/g` of positive real part against a
/// starlike `g` of order alpha.
#[derive(Default)]
pub struct CloseToStarlike {
    pub reading: CsReading,
}

impl CloseToStarlike {
    pub fn with_reading(reading: CsReading) -> Self {
        CloseToStarlike { reading }
    }
}

impl FunctionClass for CloseToStarlike {
    fn id(&self) -> ClassId {
        ClassId::CloseToStarlike
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
        validate_n(self.id(), p.n)
    }

    fn defining_equation(&self, p: &ParamSet, r: f64) -> f64 {
        // disk-fit gap, independent of the solved quadratic
        let rho = r.powi(p.n as i32);
        let rho2 = rho * rho;
        let center = (1.0 + (1.0 - 2.0 * p.alpha) * rho2) / (1.0 - rho2);
        let dev = 2.0 * (1.0 + p.n as f64 - p.alpha) * rho / (1.0 - rho2);
        dev - (SG_HALF_WIDTH - (center - 1.0).abs())
    }

    fn closed_form(&self, p: &ParamSet) -> Result<f64, Error> {
        let nn = p.n as f64;
        let a2 = (1.0 - 2.0 * p.alpha) * (E + 1.0) + 2.0 * E;
        let a1 = 2.0 * (E + 1.0) * (1.0 + nn - p.alpha);
        Ok(nth_root(positive_quad_root(a2, a1, 1.0 - E), p.n))
    }

    fn extremal_q(&self, p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        let zn = powz(z, p.n);
        let nn = p.n as f64;
        let lead = guarded_div(nn * zn, ONE + zn, "close-to-starlike extremal", z)?;
        let tail = match self.reading {
            CsReading::DenominatorZn => guarded_div(
                (nn + 2.0 - 2.0 * p.alpha) * zn,
                ONE - zn,
                "close-to-starlike extremal",
                z,
            )?,
            CsReading::DenominatorZ => guarded_div(
                ((nn + 2.0 - 2.0 * p.alpha) / nn) * z,
                ONE - z,
                "close-to-starlike extremal",
                z,
            )?,
        };
        Ok(ONE + lead + tail)
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Right
    }

    fn ambiguous(&self, p: &ParamSet) -> bool {
        p.n > 1
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[ParamKey::Alpha, ParamKey::N]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        let mut out = Vec::new();
        for alpha in [0.0, 0.25, 0.5, 0.75] {
            for n in 1..=3 {
                out.push(ParamSet::with_alpha_n(alpha, n));
            }
        }
        out
    }
}

/// `f/z` of positive real part. Extremal `q = 1 + 2n z^n/(1 - z^{2n})`.
pub struct WClass;

impl FunctionClass for WClass {
    fn id(&self) -> ClassId {
        ClassId::WClass
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        validate_n(self.id(), p.n)
    }

    fn defining_equation(&self, p: &ParamSet, r: f64) -> f64 {
        let rho = r.powi(p.n as i32);
        let nn = p.n as f64;
        (E - 1.0) * rho * rho + 2.0 * nn * (E + 1.0) * rho - (E - 1.0)
    }

    fn closed_form(&self, p: &ParamSet) -> Result<f64, Error> {
        let nn = p.n as f64;
        Ok(nth_root(
            positive_quad_root(E - 1.0, 2.0 * nn * (E + 1.0), -(E - 1.0)),
            p.n,
        ))
    }

    fn extremal_q(&self, p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        let zn = powz(z, p.n);
        let nn = p.n as f64;
        Ok(ONE + guarded_div(2.0 * nn * zn, ONE - zn * zn, "w extremal", z)?)
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Both
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[ParamKey::N]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        n_grid()
    }
}

/// Real part of `zf'/f` bounded above by `beta > 1`. The published radius
/// `((e-1)/((e-1)+(e+1)beta-1))^{1/n}` is implemented literally; its proof is
/// omitted in the source and the oracle consistently locates a different
/// radius, so every row of this class is reported as ambiguous rather than
/// gated.
pub struct MBeta;

impl FunctionClass for MBeta {
    fn id(&self) -> ClassId {
        ClassId::MBeta
    }

    fn radius_kind(&self) -> RadiusKind {
        RadiusKind::ClosedForm
    }

    fn validate(&self, p: &ParamSet) -> Result<(), Error> {
        if !p.beta.is_finite() || p.beta <= 1.0 {
            return Err(Error::InvalidParams {
                class: self.id(),
                reason: format!("need beta > 1, got {}", p.beta),
            });
        }
        validate_n(self.id(), p.n)
    }

    fn defining_equation(&self, p: &ParamSet, r: f64) -> f64 {
        let rho = r.powi(p.n as i32);
        ((E - 1.0) + (E + 1.0) * p.beta - 1.0) * rho - (E - 1.0)
    }

    fn closed_form(&self, p: &ParamSet) -> Result<f64, Error> {
        Ok(nth_root((E - 1.0) / ((E - 1.0) + (E + 1.0) * p.beta - 1.0), p.n))
    }

    fn extremal_q(&self, p: &ParamSet, z: Complex64) -> Result<Complex64, Error> {
        let zn = powz(z, p.n);
        let t = guarded_div(zn, ONE - zn, "m-beta extremal", z)?;
        Ok(ONE - 2.0 * (p.beta - 1.0) * t)
    }

    fn touch(&self, _p: &ParamSet) -> Touch {
        Touch::Left
    }

    fn ambiguous(&self, _p: &ParamSet) -> bool {
        true
    }

    fn relevant_params(&self) -> &'static [ParamKey] {
        &[ParamKey::Beta, ParamKey::N]
    }

    fn grid_params(&self) -> Vec<ParamSet> {
        let mut out = Vec::new();
        for beta in [1.25, 2.0, 5.0] {
            for n in 1..=3 {
                out.push(ParamSet::with_beta_n(beta, n));
            }
        }
        out
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
    fn g_family_frozen_values() {
        let g1 = [0.11402715529694048, 0.23994410578797753, 0.33752768846267768];
        let g23 = [0.14394115641773936, 0.27336423177697866, 0.36931050589341573];
        let g4 = [0.21988684450667876, 0.3793957780705254, 0.47667355659436727];
        let w = [0.21988684450667876, 0.3376790714523784, 0.42463495698913408];
        for n in 1..=3u32 {
            let p = ParamSet::with_n(n);
            let i = (n - 1) as usize;
            assert!((value(&G1, &p) - g1[i]).abs() < 1e-14, "g1 n={n}");
            assert!((value(&G2, &p) - g23[i]).abs() < 1e-14, "g2 n={n}");
            assert!((value(&G4, &p) - g4[i]).abs() < 1e-14, "g4 n={n}");
            assert!((value(&WClass, &p) - w[i]).abs() < 1e-14, "w n={n}");
        }
    }

    #[test]
    fn g2_and_g3_coincide_exactly() {
        for n in 1..=8u32 {
            let p = ParamSet::with_n(n);
            assert_eq!(
                value(&G2, &p).to_bits(),
                value(&G3, &p).to_bits(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn g4_and_w_coincide_at_first_order() {
        let p = ParamSet::with_n(1);
        assert!((value(&G4, &p) - value(&WClass, &p)).abs() < 1e-15);
    }

    #[test]
    fn radii_increase_with_n() {
        let fams: [&dyn FunctionClass; 5] = [&G1, &G2, &G3, &G4, &WClass];
        for class in fams {
            let mut prev = 0.0;
            for n in 1..=8u32 {
                let v = value(class, &ParamSet::with_n(n));
                assert!(v > prev, "{} not increasing at n = {n}", class.id());
                prev = v;
            }
        }
    }

    #[test]
    fn cs_frozen_values() {
        let cases = [
            ((0.0, 1), 0.10830865943523196),
            ((0.25, 1), 0.12348505648036824),
            ((0.5, 1), 0.14394115641773936),
            ((0.75, 1), 0.17329011756363546),
            ((0.0, 2), 0.27336423177697866),
            ((0.0, 3), 0.38433782185211075),
        ];
        let cs = CloseToStarlike::default();
        for ((alpha, n), want) in cases {
            let v = value(&cs, &ParamSet::with_alpha_n(alpha, n));
            assert!((v - want).abs() < 1e-14, "alpha={alpha} n={n}: {v}");
        }
        assert!(!cs.ambiguous(&ParamSet::with_alpha_n(0.0, 1)));
        assert!(cs.ambiguous(&ParamSet::with_alpha_n(0.0, 2)));
    }

    #[test]
    fn cs_readings_agree_at_first_order_only() {
        let zn = CloseToStarlike::with_reading(CsReading::DenominatorZn);
        let z1 = CloseToStarlike::with_reading(CsReading::DenominatorZ);
        let z = Complex64::new(0.21, -0.17);
        let p1 = ParamSet::with_alpha_n(0.3, 1);
        let a = zn.extremal_q(&p1, z).unwrap();
        let b = z1.extremal_q(&p1, z).unwrap();
        assert!((a - b).norm() < 1e-15);
        let p2 = ParamSet::with_alpha_n(0.3, 2);
        let a = zn.extremal_q(&p2, z).unwrap();
        let b = z1.extremal_q(&p2, z).unwrap();
        assert!((a - b).norm() > 1e-3);
    }

    #[test]
    fn mbeta_literal_values_and_flags() {
        let cases = [
            (1.25, 0.32020851360490723),
            (2.0, 0.21070685294285256),
            (5.0, 0.088985464918184863),
        ];
        for (beta, want) in cases {
            let v = value(&MBeta, &ParamSet::with_beta_n(beta, 1));
            assert!((v - want).abs() < 1e-14, "beta={beta}: {v}");
        }
        assert!(MBeta.ambiguous(&ParamSet::default()));
        assert!(MBeta.validate(&ParamSet::with_beta_n(1.0, 1)).is_err());
    }

    #[test]
    fn poles_are_reported() {
        let one = Complex64::new(1.0, 0.0);
        assert!(matches!(
            G1.extremal_q(&ParamSet::with_n(1), one),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            MBeta.extremal_q(&ParamSet::default(), one),
            Err(Error::Pole { .. })
        ));
        // n = 2 pole off the positive real axis
        let minus = Complex64::new(-1.0, 0.0);
        assert!(matches!(
            WClass.extremal_q(&ParamSet::with_n(2), minus),
            Err(Error::Pole { .. })
        ));
    }
}
