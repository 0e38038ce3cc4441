//! The sigmoid image domain: membership, the largest-disk lemma, and
//! boundary parameterization.
//!
//! The domain is `{w : |log(w/(2-w))| < 1}`, the image of the unit disk under
//! the modified sigmoid `2/(1 + e^{-z})`. Its intersection with the real axis
//! is the open interval `(2/(1+e), 2e/(1+e))`, centered at 1 with half-width
//! `(e-1)/(e+1)`.

use num_complex::Complex64;
use std::f64::consts::{E, TAU};

use crate::complex::on_upper_cut;
use crate::format::fmt_g17;
use crate::Error;

/// Half-width of the real diameter: `(e-1)/(e+1)`.
pub const SG_HALF_WIDTH: f64 = (E - 1.0) / (E + 1.0);
/// Left real endpoint `2/(1+e)`.
pub const SG_LEFT: f64 = 2.0 / (1.0 + E);
/// Right real endpoint `2e/(1+e)`.
pub const SG_RIGHT: f64 = 2.0 * E / (1.0 + E);

/// The modified sigmoid `2/(1 + e^{-z})`.
///
/// Poles sit at `z = (2k+1) i pi`, all outside the closed unit disk.
pub fn sigmoid(z: Complex64) -> Result<Complex64, Error> {
    let denom = Complex64::new(1.0, 0.0) + (-z).exp();
    if denom.norm_sqr() < 1e-30 {
        return Err(Error::Pole { what: "sigmoid", z });
    }
    Ok(Complex64::new(2.0, 0.0) / denom)
}

/// `|log(w/(2-w))|`, the gauge that defines the domain; infinite at `w` in
/// `{0, 2}` and whenever the ratio overflows.
pub fn sg_log_modulus(w: Complex64) -> f64 {
    let denom = Complex64::new(2.0, 0.0) - w;
    if w.norm_sqr() == 0.0 || denom.norm_sqr() == 0.0 {
        return f64::INFINITY;
    }
    let ratio = w / denom;
    if !ratio.re.is_finite() || !ratio.im.is_finite() || ratio.norm_sqr() == 0.0 {
        return f64::INFINITY;
    }
    on_upper_cut(ratio).ln().norm()
}

/// Strict membership in the open domain; `w` in `{0, 2}` and boundary points
/// are non-members.
pub fn sg_contains(w: Complex64) -> bool {
    sg_log_modulus(w) < 1.0
}

/// Largest admissible radius for a disk centered at `a` on the real axis:
/// `(e-1)/(e+1) - |a-1|`.
pub fn lemma_radius(a: f64) -> Result<f64, Error> {
    if !(SG_LEFT < a && a < SG_RIGHT) {
        return Err(Error::Domain(format!(
            "disk center {a} outside ({SG_LEFT}, {SG_RIGHT})"
        )));
    }
    Ok(SG_HALF_WIDTH - (a - 1.0).abs())
}

/// An open disk with real center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: f64,
    pub radius: f64,
}

/// Whether the open disk lies inside the domain. Centers outside the
/// admissible interval and negative radii yield `false`, never an error, so
/// sweeps can probe freely.
pub fn disk_in_sg(d: Disk) -> bool {
    if d.radius < 0.0 {
        return false;
    }
    match lemma_radius(d.center) {
        Ok(r) => d.radius <= r,
        Err(_) => false,
    }
}

/// A sampled curve in the plane: parameter values plus points.
#[derive(Debug, Clone)]
pub struct BoundaryTrace {
    ts: Vec<f64>,
    points: Vec<Complex64>,
    closed: bool,
}

impl BoundaryTrace {
    /// Requires at least 3 samples, matching lengths, and consecutive points
    /// distinct (including the wrap pair when closed).
    pub fn new(ts: Vec<f64>, points: Vec<Complex64>, closed: bool) -> Result<Self, Error> {
        if points.len() < 3 || ts.len() != points.len() {
            return Err(Error::Domain(format!(
                "trace needs >= 3 samples with matching parameters, got {} / {}",
                ts.len(),
                points.len()
            )));
        }
        let n = points.len();
        let pairs = if closed { n } else { n - 1 };
        for i in 0..pairs {
            if points[i] == points[(i + 1) % n] {
                return Err(Error::Domain(format!(
                    "trace has coincident consecutive points at index {i}"
                )));
            }
        }
        Ok(Self { ts, points, closed })
    }

    pub fn ts(&self) -> &[f64] {
        &self.ts
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// CSV rows `t,re,im` at 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,re,im\n");
        for (t, p) in self.ts.iter().zip(&self.points) {
            out.push_str(&fmt_g17(*t));
            out.push(',');
            out.push_str(&fmt_g17(p.re));
            out.push(',');
            out.push_str(&fmt_g17(p.im));
            out.push('\n');
        }
        out
    }
}

/// The domain boundary, sampled as `w(t) = sigmoid(e^{it})` at `samples`
/// equispaced parameters. Every point satisfies `|log(w/(2-w))| = 1` up to
/// rounding.
pub fn sg_boundary(samples: usize) -> Result<BoundaryTrace, Error> {
    if samples < 3 {
        return Err(Error::Domain(format!("need >= 3 samples, got {samples}")));
    }
    let mut ts = Vec::with_capacity(samples);
    let mut points = Vec::with_capacity(samples);
    for k in 0..samples {
        let t = TAU * k as f64 / samples as f64;
        let z = Complex64::from_polar(1.0, t);
        points.push(sigmoid(z)?);
        ts.push(t);
    }
    BoundaryTrace::new(ts, points, true)
}
