//! The class catalog: every function class behind one trait, registered by
//! name and selected at runtime.
//!
//! Each entry pairs three things that the rest of the crate keeps in tension:
//! the published radius (closed form or root equation), the scalar containment
//! equation it came from, and the extremal `q(z) = zf'(z)/f(z)` whose image
//! curve is supposed to touch the domain boundary exactly at that radius. The
//! sharpness oracle consumes only the extremal map, so formula and oracle stay
//! independent routes to the same constant.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::Error;

mod convexity;
mod janowski;
mod maminda;
mod ratio;

pub use convexity::{convexity_functional, ConvexityOrder};
pub use janowski::{Janowski, StarlikeAlpha};
pub use maminda::{
    Bs, Cardioid, Crescent, ExpAlpha, LemniscateAlpha, Nephroid, Pe, RationalR, Rl, Sine,
    EXP_ALPHA_SUP, LEM_ALPHA_SUP,
};
pub use ratio::{CloseToStarlike, CsReading, MBeta, WClass, G1, G2, G3, G4};

/// Identifier for one registered class, in catalog order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassId {
    Janowski,
    StarlikeAlpha,
    Bs,
    LemniscateAlpha,
    ExpAlpha,
    Rl,
    Cardioid,
    Rational,
    Crescent,
    Pe,
    Nephroid,
    Sine,
    G1,
    G2,
    G3,
    G4,
    CloseToStarlike,
    WClass,
    MBeta,
    ConvexityOrder,
}

impl ClassId {
    pub const ALL: [ClassId; 20] = [
        ClassId::Janowski,
        ClassId::StarlikeAlpha,
        ClassId::Bs,
        ClassId::LemniscateAlpha,
        ClassId::ExpAlpha,
        ClassId::Rl,
        ClassId::Cardioid,
        ClassId::Rational,
        ClassId::Crescent,
        ClassId::Pe,
        ClassId::Nephroid,
        ClassId::Sine,
        ClassId::G1,
        ClassId::G2,
        ClassId::G3,
        ClassId::G4,
        ClassId::CloseToStarlike,
        ClassId::WClass,
        ClassId::MBeta,
        ClassId::ConvexityOrder,
    ];

    /// The CLI-facing name.
    pub fn name(self) -> &'static str {
        match self {
            ClassId::Janowski => "janowski",
            ClassId::StarlikeAlpha => "starlike-alpha",
            ClassId::Bs => "bs",
            ClassId::LemniscateAlpha => "lemniscate-alpha",
            ClassId::ExpAlpha => "exp-alpha",
            ClassId::Rl => "rl",
            ClassId::Cardioid => "cardioid",
            ClassId::Rational => "rational",
            ClassId::Crescent => "crescent",
            ClassId::Pe => "pe",
            ClassId::Nephroid => "nephroid",
            ClassId::Sine => "sine",
            ClassId::G1 => "g1",
            ClassId::G2 => "g2",
            ClassId::G3 => "g3",
            ClassId::G4 => "g4",
            ClassId::CloseToStarlike => "close-to-starlike",
            ClassId::WClass => "w",
            ClassId::MBeta => "m-beta",
            ClassId::ConvexityOrder => "convexity-order",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ClassId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

impl Serialize for ClassId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// How a class's radius is extracted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadiusKind {
    ClosedForm,
    RootEquation,
}

impl fmt::Display for RadiusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RadiusKind::ClosedForm => "closed-form",
            RadiusKind::RootEquation => "root-equation",
        })
    }
}

/// Parameter bundle shared by every class; each class reads only the fields
/// it declares in [`FunctionClass::relevant_params`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSet {
    /// Janowski `A`, in `[-1, 1]` with `B < A`.
    pub a: f64,
    /// Janowski `B`, in `[-1, 1)`.
    pub b: f64,
    pub alpha: f64,
    pub beta: f64,
    pub n: u32,
}

impl Default for ParamSet {
    fn default() -> Self {
        ParamSet { a: 1.0, b: -1.0, alpha: 0.0, beta: 2.0, n: 1 }
    }
}

impl ParamSet {
    pub fn with_alpha(alpha: f64) -> Self {
        ParamSet { alpha, ..Default::default() }
    }

    pub fn with_alpha_n(alpha: f64, n: u32) -> Self {
        ParamSet { alpha, n, ..Default::default() }
    }

    pub fn with_janowski(a: f64, b: f64, n: u32) -> Self {
        ParamSet { a, b, n, ..Default::default() }
    }

    pub fn with_beta_n(beta: f64, n: u32) -> Self {
        ParamSet { beta, n, ..Default::default() }
    }

    pub fn with_n(n: u32) -> Self {
        ParamSet { n, ..Default::default() }
    }
}

pub(crate) const MAX_N: u32 = 64;

pub(crate) fn validate_n(class: ClassId, n: u32) -> Result<(), Error> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidParams {
            class,
            reason: format!("n = {n} outside 1..={MAX_N}"),
        });
    }
    Ok(())
}

/// Which `ParamSet` fields a class reads, in render order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKey {
    A,
    B,
    Alpha,
    Beta,
    N,
}

impl ParamKey {
    fn label(self) -> &'static str {
        match self {
            ParamKey::A => "A",
            ParamKey::B => "B",
            ParamKey::Alpha => "alpha",
            ParamKey::Beta => "beta",
            ParamKey::N => "n",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum ParamValue {
    Real(f64),
    Int(u32),
}

/// The subset of parameters a class actually read, in declaration order;
/// serializes as a JSON map and displays as `A=1 B=-1 n=2`.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderedParams(Vec<(ParamKey, ParamValue)>);

impl RenderedParams {
    pub fn new(keys: &[ParamKey], p: &ParamSet) -> Self {
        RenderedParams(
            keys.iter()
                .map(|&k| {
                    let v = match k {
                        ParamKey::A => ParamValue::Real(p.a),
                        ParamKey::B => ParamValue::Real(p.b),
                        ParamKey::Alpha => ParamValue::Real(p.alpha),
                        ParamKey::Beta => ParamValue::Real(p.beta),
                        ParamKey::N => ParamValue::Int(p.n),
                    };
                    (k, v)
                })
                .collect(),
        )
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Serialize for RenderedParams {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            match v {
                ParamValue::Real(x) => map.serialize_entry(k.label(), x)?,
                ParamValue::Int(n) => map.serialize_entry(k.label(), n)?,
            }
        }
        map.end()
    }
}

impl fmt::Display for RenderedParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match v {
                ParamValue::Real(x) => write!(f, "{}={}", k.label(), x)?,
                ParamValue::Int(n) => write!(f, "{}={}", k.label(), n)?,
            }
        }
        Ok(())
    }
}

/// Where the extremal image meets the domain boundary at the sharp radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Touch {
    /// On the positive real axis of `z` (angle 0).
    Right,
    /// Where `z^n = -r^n` (angle `pi/n`).
    Left,
    /// Both real endpoints of the domain are reached.
    Both,
    /// No touch claimed: the radius is a containment bound only.
    Unclaimed,
}

impl Touch {
    pub fn describe(self) -> &'static str {
        match self {
            Touch::Right => "real axis, +r",
            Touch::Left => "real axis, -r",
            Touch::Both => "real axis, both endpoints",
            Touch::Unclaimed => "none claimed",
        }
    }
}

/// One radius problem: parameter domain, radius extraction, defining
/// containment equation, and the extremal map the oracle sweeps.
pub trait FunctionClass: Send + Sync {
    fn id(&self) -> ClassId;

    fn radius_kind(&self) -> RadiusKind;

    fn validate(&self, p: &ParamSet) -> Result<(), Error>;

    /// Scalar whose smallest positive root is the radius; negative strictly
    /// inside, positive once the containment argument fails. Assumes `p`
    /// valid.
    fn defining_equation(&self, p: &ParamSet, r: f64) -> f64;

    /// Closed-form radius; root-equation classes keep the default error.
    fn closed_form(&self, _p: &ParamSet) -> Result<f64, Error> {
        Err(Error::WrongMethod { class: self.id(), kind: self.radius_kind() })
    }

    /// The extremal `zf'(z)/f(z)`, normalized to 1 at the origin.
    fn extremal_q(&self, p: &ParamSet, z: Complex64) -> Result<Complex64, Error>;

    fn touch(&self, p: &ParamSet) -> Touch;

    /// False for classes whose radius is stated as a bound with no extremal
    /// function exhibited.
    fn sharpness_claimed(&self) -> bool {
        true
    }

    /// True when the published statement admits more than one reading for
    /// these parameters; such rows are reported, never gated.
    fn ambiguous(&self, _p: &ParamSet) -> bool {
        false
    }

    fn relevant_params(&self) -> &'static [ParamKey];

    fn rendered_params(&self, p: &ParamSet) -> RenderedParams {
        RenderedParams::new(self.relevant_params(), p)
    }

    /// The default verification grid for this class.
    fn grid_params(&self) -> Vec<ParamSet>;
}

/// Immutable catalog of every class, in publication order.
pub struct ClassRegistry {
    entries: Vec<Box<dyn FunctionClass>>,
}

impl ClassRegistry {
    pub fn standard() -> Self {
        ClassRegistry {
            entries: vec![
                Box::new(Janowski),
                Box::new(StarlikeAlpha),
                Box::new(Bs),
                Box::new(LemniscateAlpha),
                Box::new(ExpAlpha),
                Box::new(Rl),
                Box::new(Cardioid),
                Box::new(RationalR),
                Box::new(Crescent),
                Box::new(Pe),
                Box::new(Nephroid),
                Box::new(Sine),
                Box::new(G1),
                Box::new(G2),
                Box::new(G3),
                Box::new(G4),
                Box::new(CloseToStarlike::default()),
                Box::new(WClass),
                Box::new(MBeta),
                Box::new(ConvexityOrder),
            ],
        }
    }

    pub fn get(&self, id: ClassId) -> &dyn FunctionClass {
        self.entries
            .iter()
            .find(|c| c.id() == id)
            .map(|c| c.as_ref())
            .expect("registry covers every ClassId")
    }

    pub fn by_name(&self, name: &str) -> Result<&dyn FunctionClass, Error> {
        self.entries
            .iter()
            .find(|c| c.id().name() == name)
            .map(|c| c.as_ref())
            .ok_or_else(|| Error::UnknownClass(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn FunctionClass> {
        self.entries.iter().map(|c| c.as_ref())
    }

    pub fn closed_form_radius(
        &self,
        id: ClassId,
        p: &ParamSet,
    ) -> Result<crate::RadiusResult, Error> {
        let class = self.get(id);
        if class.radius_kind() != RadiusKind::ClosedForm {
            return Err(Error::WrongMethod { class: id, kind: class.radius_kind() });
        }
        crate::radius::compute_radius(class, p)
    }

    pub fn root_radius(&self, id: ClassId, p: &ParamSet) -> Result<crate::RadiusResult, Error> {
        let class = self.get(id);
        if class.radius_kind() != RadiusKind::RootEquation {
            return Err(Error::WrongMethod { class: id, kind: class.radius_kind() });
        }
        crate::radius::compute_radius(class, p)
    }

    /// Radius by whichever method the class declares.
    pub fn radius(&self, id: ClassId, p: &ParamSet) -> Result<crate::RadiusResult, Error> {
        crate::radius::compute_radius(self.get(id), p)
    }
}
