//! Radius constants of sigmoid starlike function classes, with an independent
//! numerical sharpness oracle.
//!
//! A function `f` is sigmoid starlike when `zf'(z)/f(z)` is subordinate to the
//! modified sigmoid `2/(1 + e^{-z})`, i.e. when `zf'/f` maps the unit disk into
//! the domain `{w : |log(w/(2-w))| < 1}`. For each registered function class
//! this crate answers the associated radius problem twice:
//!
//! - [`radius`]: the published closed form, or a bracketed root of the class's
//!   defining containment equation;
//! - [`oracle`]: an independent bisection that maps the class's extremal
//!   `zf'/f` over circles, measures `max |log(q/(2-q))|`, and locates the
//!   radius and the boundary touch point numerically.
//!
//! Classes live behind the [`classes::FunctionClass`] trait and are looked up
//! by name in a [`classes::ClassRegistry`], so the two routes can be compared
//! uniformly across the whole catalog (`oracle::verify_row`).

pub mod classes;
pub mod complex;
pub mod domain;
pub mod format;
pub mod oracle;
pub mod radius;

mod error;

pub use classes::{ClassId, ClassRegistry, FunctionClass, ParamSet, RadiusKind};
pub use error::Error;
pub use num_complex::Complex64;
pub use oracle::{convexity_oracle, oracle_radius, verify_row, OracleReport, RowStatus};
pub use radius::{compute_radius, solve_bracketed, Method, RadiusResult};
