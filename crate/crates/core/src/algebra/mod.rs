//! The Lie algebra su(n,1): standard basis, brackets, structure constants,
//! and the Cartan decomposition.

mod basis;
mod element;
mod structure;
mod table;

pub use basis::{alpha, beta, e, h, standard_basis, Basis, BasisIndex, BasisKind, CartanPart};
pub use element::{
    bracket, cartan_split, decompose, decompose_exact, AlgebraElement, RealCoordinates,
    MEMBERSHIP_TOL,
};
pub use structure::{structure_constants, StructureConstants};
pub use table::verify_bracket_table;
