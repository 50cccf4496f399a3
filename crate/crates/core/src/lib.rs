//! Computational toolkit for the Lie algebra su(n,1), the curvature of its
//! left-invariant metrics, complex hyperbolic space, and explicit lower
//! bounds on the volume of complex hyperbolic n-orbifolds.

pub mod algebra;
pub mod context;
pub mod curvature;
pub mod error;
pub mod exact;
pub mod hyperbolic;
pub mod metric;
pub mod quadrature;
pub mod render;
pub mod report;
pub mod sampling;
pub mod verify;
pub mod volume;

pub use error::{Error, Result};
