//! Exact-arithmetic toolkit for quiver representations: Euler/Coxeter/defect
//! calculus, 2-Kronecker canonical forms and shrinking constructions,
//! hyperfiniteness certificates with an independent verifier, and functor
//! transports between quivers.

pub mod error;
pub mod fixtures;
pub mod functors;
pub mod hyperfinite;
pub mod kronecker;
pub mod linalg;
pub mod poly;
pub mod quiver;
pub mod rep;
pub mod scalar;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use poly::Poly;
pub use quiver::{DimVector, EulerData, IntMatrix, Quiver, QuiverClass};
pub use scalar::{FieldSpec, Scalar};
