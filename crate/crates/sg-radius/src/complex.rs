//! Principal-branch helpers on top of `num_complex`.
//!
//! Branch convention: cuts lie on the negative real axis and the argument of
//! every principal value lies in (-pi, pi]. `num_complex` computes arguments
//! with `atan2`, which maps a negative-zero imaginary part to -pi; the helpers
//! below collapse -0.0 onto +0.0 first so the closed upper edge of the cut is
//! always the one returned.

use num_complex::Complex64;

use crate::Error;

/// Principal logarithm: `ln|w| + i Arg(w)` with `Arg` in (-pi, pi].
pub fn principal_log(w: Complex64) -> Result<Complex64, Error> {
    if !w.re.is_finite() || !w.im.is_finite() {
        return Err(Error::NonFinite);
    }
    if w.re == 0.0 && w.im == 0.0 {
        return Err(Error::LogOfZero);
    }
    Ok(on_upper_cut(w).ln())
}

/// Principal square root: the root with nonnegative real part; on the
/// negative real axis, the root with nonnegative imaginary part.
pub fn principal_sqrt(w: Complex64) -> Complex64 {
    on_upper_cut(w).sqrt()
}

/// `z^n` by binary exponentiation.
pub fn powz(mut z: Complex64, mut n: u32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    while n > 0 {
        if n & 1 == 1 {
            acc *= z;
        }
        z *= z;
        n >>= 1;
    }
    acc
}

pub(crate) fn on_upper_cut(w: Complex64) -> Complex64 {
    if w.im == 0.0 {
        Complex64::new(w.re, 0.0)
    } else {
        w
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, LN_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn log_examples() {
        assert_eq!(principal_log(c(1.0, 0.0)).unwrap(), c(0.0, 0.0));
        let le = principal_log(c(E, 0.0)).unwrap();
        assert!((le.re - 1.0).abs() < 1e-15 && le.im == 0.0);
        let lm = principal_log(c(-1.0, 0.0)).unwrap();
        assert_eq!(lm.re, 0.0);
        assert_eq!(lm.im, PI);
    }

    #[test]
    fn log_of_zero_is_an_error() {
        assert!(matches!(principal_log(c(0.0, 0.0)), Err(Error::LogOfZero)));
        assert!(matches!(
            principal_log(c(f64::NAN, 0.0)),
            Err(Error::NonFinite)
        ));
    }

    #[test]
    fn log_stays_on_the_closed_upper_edge() {
        // -0.0 imaginary parts must not flip the argument to -pi
        let l = principal_log(c(-2.0, -0.0)).unwrap();
        assert_eq!(l.im, PI);
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(principal_sqrt(c(4.0, 0.0)), c(2.0, 0.0));
        assert_eq!(principal_sqrt(c(0.0, 0.0)), c(0.0, 0.0));
        let r = principal_sqrt(c(0.0, 2.0));
        assert!((r.re - 1.0).abs() < 1e-15 && (r.im - 1.0).abs() < 1e-15);
        // negative real axis: nonnegative imaginary part, even from below
        let m = principal_sqrt(c(-4.0, -0.0));
        assert!(m.re.abs() < 1e-15 && (m.im - 2.0).abs() < 1e-15);
    }

    #[test]
    fn entire_function_values() {
        assert_eq!(c(0.0, 0.0).exp(), c(1.0, 0.0));
        assert_eq!(c(0.0, 0.0).sin(), c(0.0, 0.0));
        let s = c(LN_2, 0.0).sinh();
        assert!((s.re - 0.75).abs() < 1e-15 && s.im == 0.0);
    }

    #[test]
    fn powz_matches_powf_on_reals() {
        for n in 0..=8u32 {
            let v = powz(c(0.7, 0.0), n);
            assert!((v.re - 0.7f64.powi(n as i32)).abs() < 1e-14);
            assert_eq!(v.im, 0.0);
        }
        let z = c(0.3, -0.4);
        let direct = z * z * z * z * z;
        let fast = powz(z, 5);
        assert!((fast - direct).norm() < 1e-15);
    }
}
