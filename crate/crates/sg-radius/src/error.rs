use num_complex::Complex64;

use crate::classes::{ClassId, RadiusKind};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("logarithm of zero")]
    LogOfZero,

    #[error("input is not finite")]
    NonFinite,

    #[error("{0}")]
    Domain(String),

    #[error("pole of {what} at z = {z}")]
    Pole { what: &'static str, z: Complex64 },

    #[error("invalid parameters for {class}: {reason}")]
    InvalidParams { class: ClassId, reason: String },

    #[error("{class} is a {kind} class; use the matching radius extraction")]
    WrongMethod { class: ClassId, kind: RadiusKind },

    #[error("no sign change on [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },

    #[error("closed form for {class} evaluated to {value}, outside (0, 1]")]
    FormulaOutOfRange { class: ClassId, value: f64 },

    #[error("unknown class `{0}`")]
    UnknownClass(String),
}
