//! Equivariant triangulations of real projective space.
//!
//! The crate builds the `Z_2^n`-equivariant triangulations of `RP^n` obtained
//! from a cross-polytope with antipodal boundary identification, their reduced
//! variants, and a small catalog of minimal examples, and certifies them with
//! exact homology, link recognition, and combinatorial group-action checks.

pub mod catalog;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod group;
pub mod homology;
pub mod io;
pub mod report;
pub mod search;
pub mod verify;

pub use complex::{FVector, Simplex, SimplicialComplex, VertexId, VertexLabel};
pub use error::{Error, Result};
