//! Exact torsion-class lattices for small quiver algebras over prime fields.
//!
//! The crate is `no_std` (with `alloc`). [`lattice`] is a generic finite
//! lattice engine; [`quiver`], [`catalog`] and [`tors`] layer the
//! representation theory on top of it.
#![no_std]

extern crate alloc;

pub mod bits;
pub mod catalog;
pub mod error;
pub mod field;
pub mod lattice;
pub mod matrix;
pub mod quiver;
pub mod tors;

pub use bits::Bits;
pub use error::{Budget, Error};
pub use field::Fp;
pub use lattice::{JoinRep, KappaOrbit, Lattice, LatticeError};
pub use matrix::{Matrix, Subspace};
pub use quiver::{AlgebraSpec, Arrow, Morphism, Rep};
