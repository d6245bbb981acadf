//! Tropical mirror construction for complete-intersection Calabi-Yau
//! varieties in Gorenstein toric Fano varieties, in exact arithmetic.
//!
//! The pipeline takes a monomial special-fiber ideal (or a nef partition)
//! on a toric Fano variety and produces the deformation polytope, the
//! tropical face complex of the canonical degeneration, the mirror monomial
//! ideal, and the symbolic first-order mirror family. All computations are
//! over arbitrary-precision integers and rationals; nothing is sampled
//! numerically.

pub mod deformation;
pub mod error;
pub mod json;
pub mod lattice;
pub mod mirror;
pub mod polytope;
pub mod srcomplex;
pub mod toric;
pub mod verify;

pub use error::{Error, Result};
