//! Matrix factorizations of a superpotential and their homotopy category.
//!
//! An object is a pair `(p1, p0)` of square matrices over `k[x_1..x_r]` with
//! `p0·p1 = p1·p0 = (W − w0)·I`. Morphisms are pairs `(f1, f0)` commuting with
//! the structure maps, taken modulo null-homotopic ones. Everything here is
//! exact; searches that cannot certify a negative answer say so in their
//! return type.

mod ansatz;
pub mod complex;
pub mod factorization;
pub mod grading;
pub mod hom;
pub mod homotopy;
pub mod iso;
pub mod morphism;
mod solver;
pub mod triangle;

pub use complex::{hom_differential, HomElement, Parity};
pub use factorization::MatrixFactorization;
pub use grading::Grading;
pub use hom::{
    default_hom_bound, graded_hom, graded_stable_hom_dim, hom_estimate_bounded, hom_representatives, GradedHom,
};
pub use homotopy::{find_null_homotopy, homotopy_equal, HomotopyOutcome, SearchPolicy};
pub use iso::{is_iso_in_db, IsoOutcome, IsoWitness};
pub use morphism::{Homotopy, MfMorphism};
pub use triangle::{certify_triangle, StandardTriangle, TriangleOutcome, TriangleWitness};

use thiserror::Error;

use crate::polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MfError {
    #[error("not a factorization: ({product})[{row}][{col}] = {found}, expected {expected}")]
    NotAFactorization { product: &'static str, row: usize, col: usize, found: String, expected: String },
    #[error("not a morphism: identity {identity} fails at entry [{row}][{col}]")]
    NotAMorphism { identity: &'static str, row: usize, col: usize },
    #[error("not a homotopy for the given morphism: identity {identity} fails at entry [{row}][{col}]")]
    NotAHomotopy { identity: &'static str, row: usize, col: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("the shifted superpotential W - w0 is zero")]
    ZeroSuperpotential,
    #[error("factorizations of different superpotentials")]
    SuperpotentialMismatch,
    #[error("search policy infeasible: {0}")]
    PolicyInfeasible(String),
    #[error("data is not quasi-homogeneous: {0}")]
    NonQuasiHomogeneous(String),
    #[error("variable `{0}` already present in the ring")]
    VariableCollision(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
