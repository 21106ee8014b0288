//! Sharp Fekete-Szego bounds for the class `Co(alpha)` of concave univalent
//! functions.
//!
//! The crate evaluates the piecewise closed-form bound ([`bounds`]),
//! reproduces it by brute force over Schur data ([`oracle`]), and builds the
//! extremal functions as truncated power series ([`series`], [`starlike`],
//! [`concave`]).

pub mod bounds;
pub mod concave;
pub mod error;
pub mod format;
pub mod oracle;
pub mod render;
pub mod series;
pub mod starlike;
pub mod verify;

pub use bounds::{fs_bound, quad_coeffs, thresholds, BoundResult, Extremal, QuadCoeffs, Regime, Thresholds};
pub use concave::{AlphaParam, CoeffPair};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use series::ComplexSeries;
pub use starlike::{SchurPoint, StarlikeSeries};
