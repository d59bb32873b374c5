//! Exact-symbolic and numerical toolkit for the special double confluent
//! Heun family and its four-parameter extension: determinant polynomials
//! and determinantal surfaces, vector-polynomial solutions, the
//! isomonodromic Painlevé III flow, monodromy matrices, and rotation
//! numbers of the associated torus dynamics.

pub mod error;
pub mod josephson;
pub mod monodromy;
pub mod numeric;
pub mod painleve;
pub mod polysol;
pub mod ratpoly;
pub mod spectral;

pub use error::{Error, Result};
pub use numeric::{fmt_complex, parse_complex};
pub use ratpoly::{MPoly, PolyMatrix, Rational};
pub use spectral::{IdentityReport, Sign, SurfaceSpec};

pub use num_complex::Complex64;
