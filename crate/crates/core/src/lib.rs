//! Exact computations on the quantum Grassmannian.
//!
//! The crate builds the distributive lattice of shifted column sets that
//! indexes quantum Plücker coordinates, evaluates the Plücker coefficient
//! generators as exact polynomials, verifies their sagbi property by
//! subduction and synthesizes the quadratic straightening relations that form
//! the reduced Gröbner basis of their relation ideal.

pub mod cli;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod maps;
pub mod polyring;
pub mod straighten;
pub mod syzygy;

pub use error::{Error, Result};
pub use lattice::{Context, PluckerVar, Tableau, YoungSeq};
pub use polyring::{Coeff, Monomial, Polynomial, XVar};
