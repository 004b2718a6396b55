//! Exact and approximate arithmetic for the real Clifford algebra `R_n`,
//! Clifford-Appell polynomials, the Fueter-Sce map, generalized
//! Cauchy-Kovalevskaya (GCK) series calculus, monogenic elementary functions,
//! reproducing-kernel Hilbert modules, and polyanalytic extensions.
//!
//! The exact scalar kind (arbitrary-precision rationals) is the default for
//! every identity check: all the identities implemented here are polynomial
//! with rational constants, so they verify with zero tolerance. The
//! approximate kind (f64) exists for point evaluation only.

pub mod appell;
pub mod elementary;
pub mod error;
pub mod fueter;
pub mod json;
pub mod multivector;
pub mod polyanalytic;
pub mod polynomial;
pub mod rkhs;
pub mod rng;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use multivector::{BladeIndex, Multivector, Paravector, MAX_DIMENSION};
pub use polynomial::{CliffordPolynomial, ExponentVector};
pub use scalar::{Rational, Scalar, ScalarKind};
